// Acceptance suite: one criterion per case, one PASS/FAIL line each, with the
// stated runtime budgets enforced. Exit status is nonzero when any criterion
// fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "reesdeg/closure.hpp"
#include "reesdeg/filtration.hpp"
#include "reesdeg/hilbert.hpp"
#include "reesdeg/simplicial.hpp"
#include "reesdeg/sylvester.hpp"

using namespace reesdeg;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) {
            std::ostringstream os;
            os << what << " (got " << a << ", want " << b << ")";
            failures.push_back(os.str());
        }
    }
};

int failures_total = 0;

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<void(Checker&)>& body) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        std::ostringstream os;
        os << "runtime " << elapsed << "s exceeds budget " << budget_seconds
           << "s";
        c.failures.push_back(os.str());
    }
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << id
         << ": " << label << " (" << elapsed << "s)";
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures) std::cout << "       - " << f << "\n";
    if (!c.failures.empty()) ++failures_total;
}

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial(R, g));
    return Ideal(R, ps);
}

MonomialIdeal mono(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Monomial> ms;
    for (const char* g : gens)
        ms.push_back(parse_polynomial(R, g).leading_monomial());
    return MonomialIdeal(R, ms);
}

Parametrization param(std::initializer_list<const char*> forms) {
    auto R = PolyRing::make({"s", "t"});
    std::vector<Polynomial> fs;
    for (const char* f : forms) fs.push_back(parse_polynomial(R, f));
    return Parametrization::make(R, fs);
}

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) {
    return a == b || a == -b;
}

std::string ints(const std::vector<Integer>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace

int main() {
    TermOrder grevlex = TermOrder::grevlex();

    criterion(1, "Hilbert coefficient interpolation (8,4,0)", 5.0, [&](Checker& c) {
        auto R = PolyRing::make({"x", "y", "z"});
        Ideal I = ideal_of(R, {"x^2", "y^2", "z^2", "x*y-x*z", "x*z-y*z"});
        std::vector<Integer> lengths(6);
        for (unsigned j = 2; j <= 5; ++j)
            lengths[j] = artinian_length(ideal_power(I, j), grevlex).total;
        c.expect_eq(lengths[3] - lengths[2], Integer(36), "lambda(I^2/I^3)");
        c.expect_eq(lengths[4] - lengths[3], Integer(64), "lambda(I^3/I^4)");
        c.expect_eq(lengths[5] - lengths[4], Integer(100), "lambda(I^4/I^5)");
        HilbertCoefficients e = samuel_fit(I, 1, grevlex);
        c.expect(e.e == std::vector<Integer>{8, 4, 0},
                 "samuel_fit window 1 = (8,4,0), got " + ints(e.e));
    });

    criterion(2, "tracking numbers of the quartic pair", 30.0, [&](Checker& c) {
        HilbertSeries V = veronese_series(3, 2);
        c.expect(V.h == std::vector<Integer>{1, 3} && V.dim == 3,
                 "veronese(3,2) = (1+3t)/(1-t)^3");
        c.expect_eq(coefficients_from_series(V, 1).e[1], Integer(3),
                    "veronese tracking number");

        auto R = PolyRing::make({"x", "y", "z", "w"});
        Ideal I = ideal_of(R, {"x^3 - y*z*w", "x^2*y - z*w^2"});
        HilbertSeries H = hilbert_series(I, TermOrder::deglex());
        c.expect(H.h == std::vector<Integer>{1, 2, 3, 2, 1} && H.dim == 2,
                 "series = (1+t+t^2)^2/(1-t)^2");
        TrackingReport tA = tracking_number(I, TermOrder::deglex());
        c.expect_eq(tA.tn, Integer(18), "tn of the ideal");

        MonomialIdeal J = initial_ideal(I, TermOrder::deglex());
        MonomialIdeal expected = mono(
            R, {"x^2*y", "x^3", "x*z*w^2", "x*y^3*z*w", "y^5*z*w"});
        c.expect(J == expected, "deglex initial ideal as displayed");

        TrackingReport tB = tracking_number(Ideal(J), TermOrder::deglex());
        // stated values; the verified computation gives torsion 6 and tn 24
        // (the displayed torsion multiplicity misses the (x,y,z)-line worth 1;
        //  see the decisions ledger), so these two checks fail honestly
        c.expect_eq(tB.tn, Integer(23), "tn of the initial ideal as stated");
        c.expect_eq(tB.torsion_mult, Integer(5),
                    "torsion multiplicity as stated");
        c.expect(tB.tn >= tA.tn, "tn(initial ideal) >= tn(ideal)");
    });

    criterion(3, "clutter ideal normalization", 120.0, [&](Checker& c) {
        auto R = PolyRing::make({"x1", "x2", "x3", "x4", "x5", "x6"});
        MonomialIdeal I =
            mono(R, {"x1*x2*x5", "x1*x3*x4", "x2*x3*x6", "x4*x5*x6"});
        MonomialIdeal c2 = integral_closure_power(I, 2);
        std::vector<Monomial> ext = I.pow(2).gens();
        ext.push_back(
            parse_polynomial(R, "x1*x2*x3*x4*x5*x6").leading_monomial());
        c.expect(c2 == MonomialIdeal(R, ext),
                 "closure(I^2) = (I^2, x1*x2*x3*x4*x5*x6)");
        MonomialIdeal c3 = integral_closure_power(I, 3);
        c.expect(c3 == I * c2, "closure(I^3) = I * closure(I^2)");
        NormalizationReport rep = normalization_indices(I, 6);
        c.expect_eq(rep.s0, 2u, "s0");
        c.expect_eq(rep.s, 2u, "s");
        c.expect_eq(rep.verified_up_to, 6u, "verified window");
    });

    criterion(4, "pure power normalization indices", 60.0, [&](Checker& c) {
        for (int d = 2; d <= 3; ++d) {
            std::vector<std::string> vars;
            for (int i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));
            auto R = PolyRing::make(vars);
            std::vector<Monomial> gens;
            for (int i = 0; i < d; ++i) {
                Monomial m = Monomial::one(d);
                m[i] = d;
                gens.push_back(m);
            }
            NormalizationReport rep =
                normalization_indices(MonomialIdeal(R, gens), 4);
            c.expect_eq(rep.s0, 1u, "s0 for d = " + std::to_string(d));
            c.expect_eq(rep.s, static_cast<unsigned>(d - 1),
                        "s for d = " + std::to_string(d));
        }
    });

    criterion(5, "monomial multiplicity as volume", 120.0, [&](Checker& c) {
        auto R = PolyRing::make({"x", "y", "z"});
        MonomialIdeal I = mono(R, {"x^5", "y^5", "z^5", "x*y*z"});
        VolumeReport v = volume_multiplicity(I, 20);
        c.expect_eq(v.e0, Integer(75), "e0 = ab*gamma + bc*alpha + ac*beta");
        Rational err = v.estimate - Rational(v.e0);
        if (err < 0) err = -err;
        c.expect(err * 10 <= Rational(v.e0),
                 "volume estimate within 10% at refinement 20 (estimate " +
                     v.estimate.get_str() + ")");
    });

    criterion(6, "plane implicitization, chain and balanced", 20.0, [&](Checker& c) {
        auto P1 = param({"s^4", "t^4", "s^3*t"});
        auto t0 = std::chrono::steady_clock::now();
        EliminationResult r1 = elimination_chain_mu1(P1);
        double e1s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        c.expect(e1s < 10.0, "chain within 10s");
        auto T = r1.equation.ring();
        c.expect(equal_up_to_sign(r1.equation,
                                  parse_polynomial(T, "T3^4 - T1^3*T2")),
                 "F = +-(T3^4 - T1^3*T2)");
        c.expect(P1.substitute_forms(r1.equation.map_to(P1.biform_ring()))
                     .is_zero(),
                 "substitution identity is exactly zero");
        c.expect_eq(r1.edeg, 4u, "edeg");
        c.expect(r1.birational, "birational");
        HilbertCoefficients f1 = samuel_fit_auto(
            Ideal(mono(P1.ring(), {"s^4", "t^4", "s^3*t"})), grevlex);
        c.expect_eq(f1.e[1], Integer(6), "e1 = (d-1)/2 (n^d - n^{d-1}) = 6");

        auto P2 = param({"s^4", "s^2*t^2", "t^4"});
        t0 = std::chrono::steady_clock::now();
        EliminationResult r2 = balanced_scheme(P2);
        double e2s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        c.expect(e2s < 10.0, "balanced scheme within 10s");
        Polynomial F = parse_polynomial(T, "T1*T3 - T2^2");
        c.expect(equal_up_to_sign(r2.raw, F * F), "D = +-(T1*T3 - T2^2)^2");
        c.expect_eq(r2.power, 2u, "k = 2");
        c.expect_eq(r2.edeg, 2u, "edeg = 2");
        c.expect(!r2.birational, "not birational");
        HilbertCoefficients f2 = samuel_fit_auto(
            Ideal(mono(P2.ring(), {"s^4", "s^2*t^2", "t^4"})), grevlex);
        c.expect_eq(f2.e[1], Integer(4), "e1 = 4");
    });

    criterion(7, "generic degree-4 balanced identities", 30.0, [&](Checker& c) {
        auto G = PolyRing::make({"s", "t", "x", "y", "z", "u", "v", "w"});
        Polynomial f = parse_polynomial(G, "s^2*x + s*t*y + t^2*z");
        Polynomial g = parse_polynomial(G, "s^2*u + s*t*v + t^2*w");
        SylvesterForm h1 = basic_sylvester(f, g, parse_polynomial(G, "s^2"),
                                           parse_polynomial(G, "t"));
        SylvesterForm h2 = basic_sylvester(f, g, parse_polynomial(G, "s"),
                                           parse_polynomial(G, "t^2"));
        c.expect(equal_up_to_sign(h1.form,
                                  parse_polynomial(
                                      G, "0 - s*y*u - t*z*u + s*x*v + t*x*w")),
                 "h1 display");
        c.expect(equal_up_to_sign(h2.form,
                                  parse_polynomial(
                                      G, "0 - s*z*u - t*z*v + s*x*w + t*y*w")),
                 "h2 display");
        auto coeff_of = [&](const Polynomial& h, bool of_s) {
            Polynomial out = Polynomial::zero(G);
            for (const auto& term : h.terms()) {
                bool has_s = term.mono[0] > 0;
                if (has_s != of_s) continue;
                Monomial m = term.mono;
                m[of_s ? 0 : 1] -= 1;
                out = out + Polynomial::from_monomial(G, m, term.coeff);
            }
            return out;
        };
        Polynomial F = coeff_of(h1.form, true) * coeff_of(h2.form, false) -
                       coeff_of(h1.form, false) * coeff_of(h2.form, true);
        Polynomial expected = parse_polynomial(
            G,
            "0 - z^2*u^2 + y*z*u*v - x*z*v^2 - y^2*u*w + 2*x*z*u*w + x*y*v*w "
            "- x^2*w^2");
        c.expect(equal_up_to_sign(F, expected), "F display, term for term");
    });

    criterion(8, "generic mu = 1 chain and the degree-5 block", 30.0, [&](Checker& c) {
        auto G = PolyRing::make({"s", "t", "a", "b", "x", "y", "z", "u", "v", "w"});
        Polynomial S = Polynomial::variable(G, 0);
        Polynomial T = Polynomial::variable(G, 1);
        Polynomial aa = parse_polynomial(G, "a"), bb = parse_polynomial(G, "b");
        Polynomial cc = parse_polynomial(G, "x*s^2 + y*s*t + z*t^2");
        Polynomial dd = parse_polynomial(G, "u*s^2 + v*s*t + w*t^2");
        Polynomial f = aa * S + bb * T;
        Polynomial g = cc * S + dd * T;
        Polynomial h1 = aa * dd - bb * cc;  // det of the defining split
        c.expect(h1 == parse_polynomial(G, "0 - b*x*s^2 - b*y*s*t - b*z*t^2 + "
                                           "a*u*s^2 + a*v*s*t + a*w*t^2"),
                 "h1 = ad - bc");
        SylvesterForm auto_h1 = basic_sylvester(f, g, S, T);
        c.expect(static_cast<bool>((auto_h1.form - h1).try_exact_div(f)),
                 "automatic cofactors agree with ad - bc modulo f");
        SylvesterForm h2 = basic_sylvester(f, h1, S, T);
        c.expect(h2.form == parse_polynomial(
                                G, "b^2*x*s + b^2*y*t - a*b*z*t - a*b*u*s - "
                                   "a*b*v*t + a^2*w*t"),
                 "h2 display");
        SylvesterForm h3 = basic_sylvester(f, h2.form, S, T);
        c.expect(h3.form == parse_polynomial(
                                G, "0 - b^3*x + a*b^2*y - a^2*b*z + a*b^2*u - "
                                   "a^2*b*v + a^3*w"),
                 "h3 display");

        auto D5 = PolyRing::make({"s", "t", "x", "y", "z", "A", "B", "C", "D"});
        Polynomial f5 = parse_polynomial(D5, "s^2*x + s*t*y + t^2*z");
        Polynomial g5 =
            parse_polynomial(D5, "s^3*A + s^2*t*B + s*t^2*C + t^3*D");
        SylvesterForm b1 = basic_sylvester(f5, g5, parse_polynomial(D5, "s^2"),
                                           parse_polynomial(D5, "t"));
        c.expect(equal_up_to_sign(
                     b1.form, parse_polynomial(
                                  D5, "0 - s^2*y*A + s*t*(x*C - y*B - z*A) + "
                                      "t^2*(x*D - z*B)")),
                 "det(B1) display");
    });

    criterion(9, "Huckaba verdicts", 30.0, [&](Checker& c) {
        auto R3 = PolyRing::make({"x", "y", "z"});
        HuckabaReport h1 = huckaba_test(
            ideal_of(R3, {"x^2", "y^2", "z^2", "x*y-x*z", "x*z-y*z"}),
            ideal_of(R3, {"x^2", "y^2", "z^2"}), 4, grevlex);
        c.expect_eq(h1.e1, Integer(4), "e1");
        c.expect_eq(h1.f_sum, Integer(6), "sum of the f-sequence");
        c.expect(h1.verdict == HuckabaVerdict::NotAlmostCM, "not almost CM");
        c.expect(h1.sally_multiplicity && *h1.sally_multiplicity == 1,
                 "sally multiplicity 1");

        auto R2 = PolyRing::make({"x", "y"});
        HuckabaReport h2 =
            huckaba_test(ideal_of(R2, {"x^2", "x*y", "y^2"}),
                         ideal_of(R2, {"x^2", "y^2"}), 4, grevlex);
        c.expect_eq(h2.e1, Integer(1), "e1");
        c.expect_eq(h2.f_sum, Integer(1), "sum of the f-sequence");
        c.expect(h2.verdict == HuckabaVerdict::AlmostCM, "almost CM");
    });

    criterion(10, "secondary elimination degree in four variables", 60.0,
              [&](Checker& c) {
                  auto R = PolyRing::make({"x1", "x2", "x3", "x4"});
                  Ideal J = ideal_of(R, {"x1^3", "x2^3", "x3^3", "x4^3"});
                  SecElimReport rep = secondary_elim_degree(
                      J, parse_polynomial(R, "x1^2*x2 + x3^2*x4"));
                  c.expect(rep.colon_staircase.per_degree ==
                               std::vector<Integer>{1, 4, 9, 9, 4, 1},
                           "Hilbert function of R/(J:a)");
                  c.expect_eq(rep.socle, 5l, "socle degree");
                  c.expect_eq(rep.r, 6u, "r = socle + 1");
              });

    criterion(11, "property suites", 300.0, [&](Checker& c) {
        // (a) Macaulay: per-degree staircase counts agree across orders
        {
            auto R = PolyRing::make({"x", "y", "z"});
            std::mt19937_64 rng(2024);
            std::uniform_int_distribution<int> coeff(-3, 3);
            std::uniform_int_distribution<int> degree(1, 3);
            int tested = 0;
            for (int round = 0; tested < 50 && round < 100; ++round) {
                std::vector<Polynomial> gens;
                for (int k = 0; k < 2 + round % 2; ++k) {
                    Polynomial p = Polynomial::zero(R);
                    for (const auto& m : graded_component_basis(R, degree(rng)))
                        p = p + Polynomial::from_monomial(R, m,
                                                          Rational(coeff(rng)));
                    if (!p.is_zero()) gens.push_back(p);
                }
                if (gens.empty()) continue;
                Ideal I(R, gens);
                auto counts = [&](const TermOrder& ord) {
                    return staircase_counts_up_to(initial_ideal(I, ord), 8);
                };
                auto g = counts(TermOrder::grevlex());
                if (!(g == counts(TermOrder::lex()) &&
                      g == counts(TermOrder::deglex())))
                    c.expect(false, "Macaulay equality failed");
                ++tested;
            }
            c.expect(tested >= 50, "Macaulay suite sample size");
        }
        // (b) adeg >= gdeg >= deg on random monomial ideals
        {
            auto R = PolyRing::make({"x", "y", "z"});
            std::mt19937_64 rng(99);
            std::uniform_int_distribution<int> exp(0, 3);
            std::uniform_int_distribution<int> count(1, 4);
            int tested = 0;
            for (int round = 0; round < 80 && tested < 60; ++round) {
                std::vector<Monomial> gens;
                for (int i = 0; i < count(rng); ++i) {
                    Monomial m = Monomial::one(3);
                    for (int v = 0; v < 3; ++v) m[v] = exp(rng);
                    if (!m.is_one()) gens.push_back(m);
                }
                if (gens.empty()) continue;
                DegreeReport r = degree_report(MonomialIdeal(R, gens));
                if (!(r.adeg >= r.gdeg && r.gdeg >= r.deg && r.deg >= 1))
                    c.expect(false, "degree inequality failed");
                ++tested;
            }
            c.expect(tested >= 50, "degree suite sample size");
        }
        // (c) dim <= 1: deg(R/sat) + h0 = adeg, exhaustive in two variables
        {
            auto R = PolyRing::make({"x", "y"});
            std::vector<Monomial> pool;
            for (long d = 1; d <= 4; ++d)
                for (const auto& m : graded_component_basis(R, d))
                    pool.push_back(m);
            std::set<std::string> seen;
            long verified = 0;
            for (size_t mask = 1; mask < (size_t(1) << pool.size()); ++mask) {
                if (__builtin_popcountll(mask) > 5) continue;
                std::vector<Monomial> gens;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (mask & (size_t(1) << i)) gens.push_back(pool[i]);
                MonomialIdeal I(R, gens);
                if (!seen.insert(I.to_string()).second) continue;
                DegreeReport r = degree_report(I);  // asserts the identity
                if (r.dim <= 1 && *r.extended_degree != r.adeg)
                    c.expect(false, "dim<=1 identity failed on " + I.to_string());
                ++verified;
            }
            c.expect(verified >= 100, "dim<=1 exhaustive family size");
        }
        // (d) closure filtration inclusions and ebar0 = e0
        {
            auto R = PolyRing::make({"x", "y"});
            std::mt19937_64 rng(7);
            std::uniform_int_distribution<int> exp(2, 4);
            for (int round = 0; round < 8; ++round) {
                int a = exp(rng), b = exp(rng);
                Monomial pa = Monomial::one(2), pb = Monomial::one(2),
                         mix = Monomial::one(2);
                pa[0] = a;
                pb[1] = b;
                mix[0] = std::max(1, a - 1);
                mix[1] = 1;
                MonomialIdeal I(R, {pa, pb, mix});
                MonomialIdeal c1 = integral_closure_power(I, 1);
                MonomialIdeal c2 = integral_closure_power(I, 2);
                if (!(c1.contains(I) && c2.contains(I.pow(2)) &&
                      c2.contains(c1.pow(2)) &&
                      integral_closure_power(c1, 1) == c1))
                    c.expect(false, "closure inclusion failed");
                if (!(bar_coefficients(I, 1).e[0] ==
                      samuel_fit_auto(Ideal(I), grevlex).e[0]))
                    c.expect(false, "ebar0 = e0 failed");
            }
        }
        // (e) reduction bound r <= d lambda(R/J) - 2d + 1
        {
            auto R2 = PolyRing::make({"x", "y"});
            auto R3 = PolyRing::make({"x", "y", "z"});
            std::vector<std::pair<Ideal, Ideal>> cases;
            cases.emplace_back(ideal_of(R2, {"x^2", "x*y", "y^2"}),
                               ideal_of(R2, {"x^2", "y^2"}));
            cases.emplace_back(ideal_of(R2, {"x^4", "x^3*y", "y^4"}),
                               ideal_of(R2, {"x^4", "y^4"}));
            cases.emplace_back(
                ideal_of(R3, {"x^2", "y^2", "z^2", "x*y-x*z", "x*z-y*z"}),
                ideal_of(R3, {"x^2", "y^2", "z^2"}));
            for (auto& [I, J] : cases) {
                ReductionBoundReport r = reduction_bound_check(I, J, grevlex);
                c.expect(r.holds, "reduction bound failed");
            }
        }
        // (f) SR Euler identity, exhaustive on <= 5 vertices
        {
            long complexes = 0;
            for (int n = 1; n <= 5; ++n) {
                std::vector<std::set<int>> subsets;
                for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
                    std::set<int> s;
                    for (int i = 0; i < n; ++i)
                        if (mask & (size_t(1) << i)) s.insert(i);
                    subsets.push_back(std::move(s));
                }
                std::vector<std::string> verts;
                for (int i = 0; i < n; ++i)
                    verts.push_back("x" + std::to_string(i + 1));
                std::vector<std::set<int>> chosen;
                std::function<void(size_t)> rec = [&](size_t start) {
                    {
                        SimplicialComplex K(verts, chosen);
                        FHVectors fh = fh_vectors(K);
                        const int d = K.dimension() + 1;
                        if (d >= 1) {
                            Integer hd =
                                fh.h.size() == static_cast<size_t>(d) + 1
                                    ? fh.h.back()
                                    : Integer(0);
                            Integer rhs = fh.chi - 1;
                            if ((d - 1) % 2) rhs = -rhs;
                            if (hd != rhs)
                                c.expect(false, "Euler identity failed");
                        }
                        ++complexes;
                    }
                    for (size_t i = start; i < subsets.size(); ++i) {
                        bool comparable = false;
                        for (const auto& ch : chosen)
                            if (std::includes(ch.begin(), ch.end(),
                                              subsets[i].begin(),
                                              subsets[i].end()) ||
                                std::includes(subsets[i].begin(),
                                              subsets[i].end(), ch.begin(),
                                              ch.end())) {
                                comparable = true;
                                break;
                            }
                        if (comparable) continue;
                        chosen.push_back(subsets[i]);
                        rec(i + 1);
                        chosen.pop_back();
                    }
                };
                rec(0);
            }
            c.expect(complexes >= 7580, "exhaustive complex count");
        }
        // (g) every Sylvester output vanishes under substitution
        {
            std::vector<Parametrization> ps;
            ps.push_back(param({"s^2", "s*t", "t^2"}));
            ps.push_back(param({"s^4", "t^4", "s^3*t"}));
            ps.push_back(param({"s^5", "t^5", "s^4*t"}));
            ps.push_back(param({"s^4", "s^2*t^2", "t^4"}));
            ps.push_back(param({"s^5", "s^3*t^2", "t^5"}));
            ps.push_back(param({"s^6", "s^3*t^3", "t^6"}));
            for (const auto& P : ps) {
                MuBasis mb = mu_basis(P);
                EliminationResult r = mb.mu == 1 ? elimination_chain_mu1(P)
                                                 : balanced_scheme(P);
                RingPtr bi = P.biform_ring();
                for (const auto& form : r.forms)
                    if (!P.substitute_forms(form.form).is_zero())
                        c.expect(false, "a Sylvester form failed to vanish");
                if (!P.substitute_forms(r.equation.map_to(bi)).is_zero())
                    c.expect(false, "an elimination equation failed to vanish");
                if (!P.substitute_forms(resultant_oracle(P).map_to(bi))
                         .is_zero())
                    c.expect(false, "a resultant oracle output failed to vanish");
            }
        }
    });

    std::cout << (failures_total == 0
                      ? "acceptance: all criteria passed"
                      : "acceptance: " + std::to_string(failures_total) +
                            " criterion(s) failed")
              << "\n";
    return failures_total == 0 ? 0 : 1;
}
