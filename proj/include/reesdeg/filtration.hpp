#pragma once

#include <optional>

#include "reesdeg/hilbert.hpp"

namespace reesdeg {

/// Lengths f_j = lambda(I^j / J I^{j-1}) for j = 1..N, with the reduction
/// number when it lies in the window.
struct FSequence {
    std::vector<Integer> values;       // f_1 .. f_N
    std::optional<unsigned> reduction_number;
};

enum class HuckabaVerdict { AlmostCM, NotAlmostCM, Inconclusive };

struct HuckabaReport {
    Integer e1;
    Integer f_sum;
    HuckabaVerdict verdict = HuckabaVerdict::Inconclusive;
    std::optional<Integer> sally_multiplicity;  // e1 - f_1 when positive
    FSequence f;
    std::string note;
};

/// Least r <= maxr with I^{r+1} = J I^r, checked by Groebner membership.
std::optional<unsigned> reduction_number(const Ideal& J, const Ideal& I,
                                         unsigned maxr, const TermOrder& ord);

FSequence f_sequence(const Ideal& I, const Ideal& J, unsigned N,
                     const TermOrder& ord);

/// Huckaba test: e1 = sum f_j iff the Rees algebra is almost Cohen-Macaulay.
HuckabaReport huckaba_test(const Ideal& I, const Ideal& J, unsigned N,
                           const TermOrder& ord);

/// red_J(I) <= d * lambda(R/J) - 2d + 1.
struct ReductionBoundReport {
    unsigned r = 0;
    Integer bound;
    bool holds = false;
};
ReductionBoundReport reduction_bound_check(const Ideal& I, const Ideal& J,
                                           const TermOrder& ord);

/// Default search window d * lambda(R/J) - 2d + 1 for reduction detection.
unsigned default_reduction_window(const Ideal& J, const TermOrder& ord);

}  // namespace reesdeg
