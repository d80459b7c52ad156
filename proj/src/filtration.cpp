#include "reesdeg/filtration.hpp"

#include <algorithm>

namespace reesdeg {

namespace {

Ideal product(const Ideal& A, const Ideal& B) {
    if (A.is_monomial() && B.is_monomial())
        return Ideal(A.to_monomial_ideal() * B.to_monomial_ideal());
    std::vector<Polynomial> gens;
    gens.reserve(A.gens().size() * B.gens().size());
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) gens.push_back(a * b);
    return Ideal(A.ring(), std::move(gens));
}

}  // namespace

std::optional<unsigned> reduction_number(const Ideal& J, const Ideal& I,
                                         unsigned maxr, const TermOrder& ord) {
    if (!ideal_contains(I, J, ord))
        throw Error("reduction_number: J is not contained in I");
    Ideal I_power = I;  // I^{r+1} while J*I^r is tracked alongside
    Ideal JI = J;       // J * I^r
    for (unsigned r = 0; r <= maxr; ++r) {
        // J I^r = I^{r+1} iff I^{r+1} is contained in J I^r
        if (ideal_contains(JI, I_power, ord)) {
            if (!ideal_contains(I_power, JI, ord))
                throw Error("internal: J I^r not inside I^{r+1}");
            return r;
        }
        if (r == maxr) break;
        I_power = product(I_power, I);
        JI = product(JI, I);
    }
    return std::nullopt;
}

FSequence f_sequence(const Ideal& I, const Ideal& J, unsigned N,
                     const TermOrder& ord) {
    if (!ideal_contains(I, J, ord))
        throw Error("f_sequence: J is not contained in I");
    FSequence out;
    Ideal I_power = I;   // I^j
    Ideal JI = J;        // J I^{j-1}
    for (unsigned j = 1; j <= N; ++j) {
        StaircaseCount num = artinian_length(JI, ord);
        StaircaseCount den = artinian_length(I_power, ord);
        if (!num.finite || !den.finite)
            throw NonArtinianError("f_sequence requires an m-primary ideal");
        Integer fj = num.total - den.total;  // lambda(R/JI^{j-1}) - lambda(R/I^j)
        out.values.push_back(fj);
        if (fj == 0 && !out.reduction_number) out.reduction_number = j - 1;
        if (j < N) {
            I_power = product(I_power, I);
            JI = product(JI, I);
        }
    }
    // once zero, the tail stays zero for a genuine reduction
    if (out.reduction_number)
        for (size_t j = *out.reduction_number; j < out.values.size(); ++j)
            if (out.values[j] != 0)
                throw Error("internal: f-sequence rose after vanishing");
    return out;
}

HuckabaReport huckaba_test(const Ideal& I, const Ideal& J, unsigned N,
                           const TermOrder& ord) {
    HuckabaReport rep;
    // one past N so that a reduction number of exactly N is still conclusive
    rep.f = f_sequence(I, J, N + 1, ord);
    if (!rep.f.reduction_number) {
        rep.verdict = HuckabaVerdict::Inconclusive;
        rep.note = "no reduction number found up to N = " + std::to_string(N);
        return rep;
    }
    HilbertCoefficients fit = samuel_fit_auto(I, ord);
    rep.e1 = fit.e[1];
    rep.f_sum = 0;
    for (const auto& f : rep.f.values) rep.f_sum += f;
    if (rep.e1 == rep.f_sum) {
        rep.verdict = HuckabaVerdict::AlmostCM;
    } else if (rep.e1 < rep.f_sum) {
        rep.verdict = HuckabaVerdict::NotAlmostCM;
    } else {
        throw Error("internal: e1 exceeds the f-sequence sum");
    }
    Integer sally = rep.e1 - rep.f.values[0];
    if (sally > 0) rep.sally_multiplicity = sally;
    rep.note = "Cohen-Macaulay hypothesis: polynomial ring localized at the "
               "irrelevant ideal";
    return rep;
}

unsigned default_reduction_window(const Ideal& J, const TermOrder& ord) {
    const int d = J.ring()->nvars();
    StaircaseCount sc = artinian_length(J, ord);
    if (!sc.finite)
        throw NonArtinianError("reduction window needs an m-primary J");
    Integer bound = Integer(d) * sc.total - 2 * d + 1;
    if (bound < 0) bound = 0;
    return static_cast<unsigned>(bound.get_ui());
}

ReductionBoundReport reduction_bound_check(const Ideal& I, const Ideal& J,
                                           const TermOrder& ord) {
    ReductionBoundReport rep;
    const int d = I.ring()->nvars();
    StaircaseCount sc = artinian_length(J, ord);
    if (!sc.finite)
        throw NonArtinianError("reduction_bound_check needs an m-primary J");
    rep.bound = Integer(d) * sc.total - 2 * d + 1;
    unsigned window = default_reduction_window(J, ord);
    auto r = reduction_number(J, I, window, ord);
    if (!r) throw Error("reduction_bound_check: J is not a reduction within the bound");
    rep.r = *r;
    rep.holds = Integer(rep.r) <= rep.bound;
    return rep;
}

}  // namespace reesdeg
