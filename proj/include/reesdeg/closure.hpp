#pragma once

#include "reesdeg/hilbert.hpp"

namespace reesdeg {

/// Exponent data of the Newton polyhedron of a monomial ideal.
struct NewtonPolyhedron {
    std::vector<std::vector<int>> gens;  // exponent vectors
    int nvars = 0;

    static NewtonPolyhedron of(const MonomialIdeal& I);
};

/// Membership of x^w in the integral closure of I^m: exact LP feasibility of
/// sum r_i = m, r_i >= 0, sum r_i v_i <= w componentwise.
bool newton_membership(const std::vector<int>& w, unsigned m,
                       const NewtonPolyhedron& P);

/// Minimal monomial generators of the integral closure of I^m.
MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned m);

struct NormalizationReport {
    unsigned s0 = 0;     // generation index candidate
    unsigned s = 0;      // normalization index candidate
    unsigned verified_up_to = 0;
    /// Heuristic stopping hint from the analytic spread: s <= spread - 1
    /// under Cohen-Macaulay hypotheses the report does not verify.
    unsigned spread_hint = 0;
    std::vector<MonomialIdeal> closures;  // closure(I^n) for n = 1..N
};

/// Analytic spread of a monomial ideal: the affine rank of its exponents.
unsigned analytic_spread(const MonomialIdeal& I);

/// Candidates for s(I) and s0(I), verified on the window 1..N.
NormalizationReport normalization_indices(const MonomialIdeal& I, unsigned N);

/// samuel_fit applied to the closure filtration lengths lambda(R/closure(I^n)).
HilbertCoefficients bar_coefficients(const MonomialIdeal& I, unsigned b);

/// e1(I) == (d-1)(n^d - n^{d-1})/2 for an m-primary ideal generated in
/// degree n.
bool birational_test(const MonomialIdeal& I, unsigned n);

struct VolumeReport {
    Rational estimate;   // n! * lambda(R/closure(I^m)) / m^n
    Integer e0;          // exact multiplicity from the samuel fit
    unsigned refinement = 0;
};

/// Volume approximation of the multiplicity at the given refinement,
/// paired with the exact value.
VolumeReport volume_multiplicity(const MonomialIdeal& I, unsigned refinement);

/// lambda(R/closure(I^m)) for an Artinian monomial ideal, counted by slicing
/// the staircase (membership is upward closed).
Integer closure_colength(const MonomialIdeal& I, unsigned m);

}  // namespace reesdeg
