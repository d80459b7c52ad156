#pragma once

#include <string>
#include <vector>

#include "reesdeg/polynomial.hpp"

namespace reesdeg {

/// Monomial ideal held by its canonical minimal generating set
/// (no generator divides another; sorted descending in the ring order).
class MonomialIdeal {
public:
    explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;
    bool contains(const MonomialIdeal& other) const;
    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    MonomialIdeal operator*(const MonomialIdeal& other) const;
    MonomialIdeal operator+(const MonomialIdeal& other) const;
    MonomialIdeal intersect(const MonomialIdeal& other) const;
    MonomialIdeal pow(unsigned long n) const;
    /// Colon by a single monomial.
    MonomialIdeal colon(const Monomial& m) const;
    /// Colon by another monomial ideal (intersection over generators).
    MonomialIdeal colon(const MonomialIdeal& other) const;
    /// Saturation by the ideal of the given variables (all, when empty).
    MonomialIdeal saturate_variables(std::vector<int> vars = {}) const;

    /// Erase the exponents of the given variables (localization map used by
    /// length-multiplicity computations).
    MonomialIdeal erase_variables(const std::vector<int>& vars) const;

    /// True when the quotient is Artinian: every variable has a pure power.
    bool is_artinian() const;

    /// Variables appearing in some generator.
    std::vector<int> support() const;
    bool is_squarefree() const;

    std::vector<Polynomial> to_polynomials() const;
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// Squarefree monomial ideal of the maximal ideal of a variable subset.
MonomialIdeal variable_ideal(const RingPtr& ring, const std::vector<int>& vars);

}  // namespace reesdeg
