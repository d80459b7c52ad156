#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reesdeg/monomial_ideal.hpp"
#include "reesdeg/polynomial.hpp"

namespace reesdeg {

/// Resource cap for the Buchberger engine; exceeding it raises DeskScaleError
/// rather than truncating silently.
struct GroebnerOptions {
    size_t max_basis = 20000;
    long max_degree = 400;
};
GroebnerOptions& groebner_options();

/// Ideal given by a finite generating list (nonzero, duplicates removed).
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens);
    Ideal(const MonomialIdeal& mi) : Ideal(mi.ring(), mi.to_polynomials()) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_monomial() const;
    /// Requires is_monomial().
    MonomialIdeal to_monomial_ideal() const;
    bool is_homogeneous() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    friend std::shared_ptr<const class GroebnerBasis> buchberger(
        const Ideal& I, const TermOrder& ord);
    mutable std::shared_ptr<
        std::map<std::string, std::shared_ptr<const class GroebnerBasis>>>
        cache_;
};

/// Reduced Groebner basis: monic generators, no leading term divides another,
/// tails reduced; unique for a fixed ideal and order.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens, TermOrder order)
        : ring_(std::move(ring)), gens_(std::move(gens)), order_(std::move(order)) {}

    const RingPtr& ring() const { return ring_; }  // carries the active order
    const std::vector<Polynomial>& gens() const { return gens_; }
    const TermOrder& order() const { return order_; }
    bool reduced() const { return true; }

    std::vector<Monomial> leading_monomials() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    TermOrder order_;
};

/// Per-degree counts of standard monomials of an initial ideal; total is
/// finite exactly when the quotient is Artinian.
struct StaircaseCount {
    bool finite = false;
    Integer total = 0;                  // meaningful when finite
    std::vector<Integer> per_degree;    // index = weighted degree, when finite
};

std::shared_ptr<const GroebnerBasis> buchberger(const Ideal& I, const TermOrder& ord);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& ord);

bool ideal_contains(const Ideal& I, const Polynomial& p, const TermOrder& ord);
bool ideal_contains(const Ideal& I, const Ideal& J, const TermOrder& ord);
bool ideal_equal(const Ideal& I, const Ideal& J, const TermOrder& ord);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Polynomial& f);
Ideal colon(const Ideal& I, const Ideal& J);

struct SaturationResult {
    Ideal ideal;
    unsigned stable_exponent;  // least e with I : J^e = I : J^(e+1)
};
SaturationResult saturate(const Ideal& I, const Ideal& J);

StaircaseCount artinian_length(const Ideal& I, const TermOrder& ord);
StaircaseCount staircase_of(const MonomialIdeal& L);
/// Per-degree standard-monomial counts up to max_degree (works for
/// non-Artinian quotients too).
std::vector<Integer> staircase_counts_up_to(const MonomialIdeal& L, long max_degree);

/// Top nonzero degree of an Artinian quotient R/I.
long socle_degree(const Ideal& I);

/// Generator products of total multidegree n, deduplicated (monomial ideals
/// are fully minimalized).
Ideal ideal_power(const Ideal& I, unsigned n);

/// Minimal generators of a homogeneous ideal (greedy removal of generators
/// lying in the ideal of the others).
std::vector<Polynomial> minimal_generators(const Ideal& I);

}  // namespace reesdeg
