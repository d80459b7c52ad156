#include "reesdeg/closure.hpp"

#include <algorithm>
#include <functional>

#include "reesdeg/matrix.hpp"

namespace reesdeg {

NewtonPolyhedron NewtonPolyhedron::of(const MonomialIdeal& I) {
    NewtonPolyhedron P;
    P.nvars = I.ring()->nvars();
    for (const auto& g : I.gens()) P.gens.push_back(g.e);
    return P;
}

namespace {

// One inequality c[0] + sum_i c[i] * r_i >= 0 with integer coefficients.
using Row = std::vector<Integer>;

void normalize_row(Row& r) {
    Integer g(0);
    for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : r) c /= g;
}

// Fourier-Motzkin feasibility over the rationals for rows in `vars` unknowns.
bool fm_feasible(std::vector<Row> rows, size_t vars) {
    for (size_t v = vars; v-- > 0;) {
        size_t col = v + 1;
        std::vector<Row> zero, pos, neg;
        for (auto& r : rows) {
            if (r[col] == 0) zero.push_back(std::move(r));
            else if (r[col] > 0) pos.push_back(std::move(r));
            else neg.push_back(std::move(r));
        }
        std::vector<Row> next = std::move(zero);
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Row combined(col, Integer(0));
                // alpha > 0 from p, beta < 0 from n: p*(-beta) + n*alpha
                const Integer& alpha = p[col];
                Integer mbeta = -n[col];
                for (size_t j = 0; j < col; ++j)
                    combined[j] = p[j] * mbeta + n[j] * alpha;
                normalize_row(combined);
                next.push_back(std::move(combined));
            }
        // truncate rows to the remaining columns and dedupe
        for (auto& r : next) r.resize(col);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
        for (const auto& r : rows) {
            bool constant = true;
            for (size_t j = 1; j < r.size(); ++j)
                if (r[j] != 0) constant = false;
            if (constant && r[0] < 0) return false;
        }
    }
    for (const auto& r : rows)
        if (r[0] < 0) return false;
    return true;
}

}  // namespace

bool newton_membership(const std::vector<int>& w, unsigned m,
                       const NewtonPolyhedron& P) {
    if (static_cast<int>(w.size()) != P.nvars)
        throw Error("newton_membership: exponent length mismatch");
    if (P.gens.empty()) return false;
    const size_t k = P.gens.size();
    // substitute r_1 = m - r_2 - ... - r_k; unknowns r_2..r_k
    const size_t vars = k - 1;
    std::vector<Row> rows;
    {
        Row r(vars + 1, Integer(0));  // r_1 >= 0
        r[0] = static_cast<long>(m);
        for (size_t i = 0; i < vars; ++i) r[i + 1] = -1;
        rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < vars; ++i) {  // r_{i+2} >= 0
        Row r(vars + 1, Integer(0));
        r[i + 1] = 1;
        rows.push_back(std::move(r));
    }
    for (int j = 0; j < P.nvars; ++j) {  // w_j - sum_i r_i v_i[j] >= 0
        Row r(vars + 1, Integer(0));
        r[0] = Integer(w[j]) - Integer(static_cast<long>(m)) * P.gens[0][j];
        for (size_t i = 0; i < vars; ++i)
            r[i + 1] = Integer(P.gens[0][j]) - Integer(P.gens[i + 1][j]);
        rows.push_back(std::move(r));
    }
    return fm_feasible(std::move(rows), vars);
}

MonomialIdeal integral_closure_power(const MonomialIdeal& I, unsigned m) {
    if (m < 1) throw Error("integral_closure_power needs m >= 1");
    const RingPtr& ring = I.ring();
    const int n = ring->nvars();
    if (I.is_zero()) return I;
    if (I.is_unit()) return I;

    NewtonPolyhedron P = NewtonPolyhedron::of(I);
    std::vector<long> bounds(n, 0);
    long min_total = -1;
    for (const auto& v : P.gens) {
        long total = 0;
        for (int j = 0; j < n; ++j) {
            bounds[j] = std::max(bounds[j], static_cast<long>(m) * v[j]);
            total += v[j];
        }
        if (min_total < 0 || total < min_total) min_total = total;
    }
    min_total *= static_cast<long>(m);

    MonomialIdeal power = I.pow(m);  // fast membership path

    // bucket the box by total degree so accepted points are always minimal
    long max_total = 0;
    for (long b : bounds) max_total += b;
    std::vector<std::vector<Monomial>> by_degree(static_cast<size_t>(max_total) + 1);
    {
        Monomial w = Monomial::one(n);
        std::function<void(int, long)> walk = [&](int var, long total) {
            if (var == n) {
                by_degree[static_cast<size_t>(total)].push_back(w);
                return;
            }
            for (int e = 0; e <= bounds[var]; ++e) {
                w[var] = e;
                walk(var + 1, total + e);
            }
            w[var] = 0;
        };
        walk(0, 0);
    }

    std::vector<Monomial> accepted;
    for (long deg = min_total; deg <= max_total; ++deg) {
        for (const auto& w : by_degree[static_cast<size_t>(deg)]) {
            bool dominated = false;
            for (const auto& a : accepted)
                if (a.divides(w)) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
            if (power.contains(w) || newton_membership(w.e, m, P))
                accepted.push_back(w);
        }
    }
    return MonomialIdeal(ring, std::move(accepted));
}

unsigned analytic_spread(const MonomialIdeal& I) {
    if (I.is_zero()) return 0;
    const size_t n = static_cast<size_t>(I.ring()->nvars());
    RationalMatrix M(I.gens().size(), n + 1);
    for (size_t i = 0; i < I.gens().size(); ++i) {
        for (size_t j = 0; j < n; ++j) M.at(i, j) = I.gens()[i].e[j];
        M.at(i, n) = 1;
    }
    return static_cast<unsigned>(rref(M).size());
}

NormalizationReport normalization_indices(const MonomialIdeal& I, unsigned N) {
    if (N < 2) throw Error("normalization_indices needs N >= 2");
    NormalizationReport rep;
    rep.verified_up_to = N;
    unsigned spread = analytic_spread(I);
    rep.spread_hint = spread > 0 ? spread - 1 : 0;
    for (unsigned nn = 1; nn <= N; ++nn)
        rep.closures.push_back(integral_closure_power(I, nn));

    auto closure_at = [&](unsigned nn) -> const MonomialIdeal& {
        return rep.closures[nn - 1];
    };

    // s: least index with closure(I^{n+1}) = I * closure(I^n) for n in [s, N-1]
    {
        unsigned last_bad = 0;
        bool any_bad = false;
        for (unsigned nn = 0; nn + 1 <= N; ++nn) {
            MonomialIdeal prod =
                nn == 0 ? I : I * closure_at(nn);
            if (!(prod == closure_at(nn + 1))) {
                last_bad = nn;
                any_bad = true;
            }
        }
        rep.s = any_bad ? last_bad + 1 : 0;
    }

    // s0: least s with every closure(I^n), n <= N, generated by the pieces of
    // degree <= s
    for (unsigned s0 = 1; s0 <= N; ++s0) {
        std::vector<MonomialIdeal> G;
        G.push_back(MonomialIdeal(I.ring(), {Monomial::one(I.ring()->nvars())}));
        bool ok = true;
        for (unsigned nn = 1; nn <= N && ok; ++nn) {
            if (nn <= s0) {
                G.push_back(closure_at(nn));
                continue;
            }
            MonomialIdeal acc = closure_at(1) * G[nn - 1];
            for (unsigned a = 2; a <= std::min(s0, nn - 1); ++a)
                acc = acc + closure_at(a) * G[nn - a];
            if (!(acc == closure_at(nn))) ok = false;
            G.push_back(acc);
        }
        if (ok) {
            rep.s0 = s0;
            break;
        }
    }
    return rep;
}

HilbertCoefficients bar_coefficients(const MonomialIdeal& I, unsigned b) {
    const int d = I.ring()->nvars();
    if (!I.is_artinian()) throw NonArtinianError("bar_coefficients needs dim 0");
    std::vector<Integer> lengths(b + d + 3, Integer(0));
    for (unsigned j = 1; j <= b + static_cast<unsigned>(d) + 2; ++j)
        lengths[j] = colength(integral_closure_power(I, j));
    return fit_from_lengths(lengths, b, d);
}

bool birational_test(const MonomialIdeal& I, unsigned n) {
    if (!I.is_artinian()) throw NonArtinianError("birational_test needs dim 0");
    const RingPtr& ring = I.ring();
    for (const auto& g : I.gens())
        if (ring->weighted_degree(g) != static_cast<long>(n))
            throw Error("birational_test: generators of mixed degrees");
    const int d = ring->nvars();
    HilbertCoefficients fit = samuel_fit_auto(Ideal(I), ring->order());
    Rational target = Rational(d - 1) *
                      Rational(ipow(Integer(n), static_cast<unsigned long>(d)) -
                               ipow(Integer(n), static_cast<unsigned long>(d - 1))) /
                      2;
    return Rational(fit.e[1]) == target;
}

Integer closure_colength(const MonomialIdeal& I, unsigned m) {
    if (!I.is_artinian()) throw NonArtinianError("closure_colength needs dim 0");
    const RingPtr& ring = I.ring();
    const int n = ring->nvars();
    NewtonPolyhedron P = NewtonPolyhedron::of(I);

    // per-variable bound from the pure powers: exponents over m*a_j are inside
    std::vector<long> bound(n, 0);
    for (int j = 0; j < n; ++j) {
        for (const auto& g : I.gens()) {
            bool pure = g[j] > 0;
            for (int i = 0; i < n && pure; ++i)
                if (i != j && g[i] != 0) pure = false;
            if (pure) bound[j] = static_cast<long>(m) * g[j];
        }
    }

    Integer count(0);
    std::vector<int> w(n, 0);
    // last coordinate counted by binary search on the upward-closed membership
    std::function<void(int)> walk = [&](int var) {
        if (var == n - 1) {
            long lo = 0, hi = bound[n - 1];  // member at hi, maybe not at lo
            w[n - 1] = 0;
            if (newton_membership(w, m, P)) return;  // whole column inside
            while (lo + 1 < hi) {
                long mid = (lo + hi) / 2;
                w[n - 1] = static_cast<int>(mid);
                if (newton_membership(w, m, P)) hi = mid;
                else lo = mid;
            }
            count += hi;  // w_last in [0, hi) are outside
            return;
        }
        for (int e = 0; e < bound[var]; ++e) {
            w[var] = e;
            walk(var + 1);
        }
        w[var] = 0;
    };
    walk(0);
    return count;
}

VolumeReport volume_multiplicity(const MonomialIdeal& I, unsigned refinement) {
    if (refinement < 1) throw Error("volume_multiplicity needs refinement >= 1");
    VolumeReport rep;
    rep.refinement = refinement;
    const int n = I.ring()->nvars();
    Integer lam = closure_colength(I, refinement);
    rep.estimate = Rational(factorial(n) * lam) /
                   Rational(ipow(Integer(refinement), static_cast<unsigned long>(n)));
    rep.estimate.canonicalize();
    HilbertCoefficients fit = samuel_fit_auto(Ideal(I), I.ring()->order());
    rep.e0 = fit.e[0];
    return rep;
}

}  // namespace reesdeg
