#pragma once

#include <optional>

#include "reesdeg/groebner.hpp"
#include "reesdeg/monomial_ideal.hpp"

namespace reesdeg {

/// Hilbert series h(t)/(1-t)^dim with h(1) != 0 (h empty for the zero module).
struct HilbertSeries {
    std::vector<Integer> h;  // numerator coefficients, ascending in t
    int dim = 0;

    bool is_zero() const { return h.empty(); }
    long h_degree() const { return static_cast<long>(h.size()) - 1; }
    Integer h_at_1() const {
        Integer s(0);
        for (const auto& c : h) s += c;
        return s;
    }
    /// h^(i)(1)/i! = sum_j C(j,i) h_j.
    Integer taylor_at_1(unsigned i) const {
        Integer s(0);
        for (size_t j = 0; j < h.size(); ++j)
            s += binomial(static_cast<long>(j), static_cast<long>(i)) * h[j];
        return s;
    }
    bool operator==(const HilbertSeries& o) const {
        return h == o.h && dim == o.dim;
    }
    std::string to_string() const;
};

struct HilbertCoefficients {
    std::vector<Integer> e;   // e0, e1, ...
    std::string source;       // "series-derivative" | "samuel-fit"
    unsigned window_b = 0;    // fits only
};

/// Irredundant decomposition into irreducible (pure variable power)
/// components, with length multiplicities of the associated primes.
struct IrreducibleDecomposition {
    struct PrimeMult {
        std::vector<int> vars;  // variable indices of the monomial prime
        Integer mult;           // lambda(H^0_p((R/I)_p))
        bool minimal;
    };
    std::vector<MonomialIdeal> components;
    std::vector<PrimeMult> ass;
};

struct DegreeReport {
    int dim = 0;
    Integer deg;
    Integer gdeg;
    Integer adeg;
    Integer h0;  // lambda((I : m^inf)/I)
    std::optional<Integer> extended_degree;  // deg + h0 when dim <= 1
};

struct TrackingReport {
    Integer tn;
    Integer torsion_mult;  // codimension-one torsion multiplicity
    Integer e1;
    int dim = 0;
};

/// Exact Hilbert series of R/I by the pivot recursion.
HilbertSeries hilbert_series_monomial(const MonomialIdeal& I);

/// Series of R/I for homogeneous I via its initial ideal (order-independent).
HilbertSeries hilbert_series(const Ideal& I, const TermOrder& ord);

HilbertCoefficients coefficients_from_series(const HilbertSeries& H, unsigned k);

long a_invariant(const HilbertSeries& H);

IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& I);

DegreeReport degree_report(const MonomialIdeal& I);

TrackingReport tracking_number(const MonomialIdeal& I);
TrackingReport tracking_number(const Ideal& I, const TermOrder& ord);

HilbertSeries veronese_series(unsigned vars, unsigned step);

/// Hilbert coefficients of an m-primary ideal by binomial interpolation on
/// the window b+1..b+d, certified against the shifted window b+1.
HilbertCoefficients samuel_fit(const Ideal& I, unsigned b, const TermOrder& ord);

/// samuel_fit with the window start raised until the certification passes.
HilbertCoefficients samuel_fit_auto(const Ideal& I, const TermOrder& ord,
                                    unsigned b_max = 8);

/// Binomial-window fit from colengths lambda(R/F_j) of a filtration,
/// certified across windows b and b+1; lengths[j] must be valid for
/// j = b+1 .. b+d+2.
HilbertCoefficients fit_from_lengths(const std::vector<Integer>& lengths,
                                     unsigned b, int d);

/// Colength lambda(R/I) of an Artinian quotient.
Integer colength(const Ideal& I, const TermOrder& ord);
Integer colength(const MonomialIdeal& I);

/// lambda((J : m^inf)/J) for a monomial ideal, via series subtraction.
Integer local_cohomology_h0(const MonomialIdeal& J);

}  // namespace reesdeg
