#include "reesdeg/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "reesdeg/matrix.hpp"

namespace reesdeg {

namespace zpoly {

using P = std::vector<Integer>;  // dense, ascending

void trim(P& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

P add(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

P sub(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

P shift(const P& a, long k) {  // multiply by t^k
    if (a.empty()) return {};
    P r(a.size() + static_cast<size_t>(k), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

Integer at_1(const P& a) {
    Integer s(0);
    for (const auto& c : a) s += c;
    return s;
}

// exact division by (1 - t); requires a(1) == 0
P div_one_minus_t(const P& a) {
    if (a.empty()) return {};
    P q(a.size() - 1, Integer(0));
    Integer carry(0);
    // a = q * (1-t): a_i = q_i - q_{i-1}  =>  q_i = a_i + q_{i-1}
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        carry += a[i];
        q[i] = carry;
    }
    trim(q);
    return q;
}

// exact division a / b over the integers; returns nullopt when not exact
std::optional<P> div_exact(const P& a, const P& b) {
    if (b.empty()) throw DivisionError("zpoly division by zero");
    if (a.empty()) return P{};
    if (a.size() < b.size()) return std::nullopt;
    P rem = a;
    P q(a.size() - b.size() + 1, Integer(0));
    const Integer& lead = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        size_t top = k + b.size() - 1;
        if (rem[top] == 0) continue;
        if (rem[top] % lead != 0) return std::nullopt;
        Integer c = rem[top] / lead;
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    trim(q);
    return q;
}

}  // namespace zpoly

// ------------------------------------------------------------- series basics

std::string HilbertSeries::to_string() const {
    if (h.empty()) return "0";
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < h.size(); ++i) {
        if (h[i] == 0) continue;
        Integer c = h[i];
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    os << ")/(1-t)^" << dim;
    return os.str();
}

// -------------------------------------------------------- numerator recursion

namespace {

using zpoly::P;

struct NumeratorMemo {
    std::map<std::vector<std::vector<int>>, P> table;
};

P numerator_rec(const RingPtr& ring, const MonomialIdeal& I, NumeratorMemo& memo) {
    const auto& gens = I.gens();
    if (gens.empty()) return P{Integer(1)};
    if (I.is_unit()) return P{};

    // pairwise coprime supports: Koszul product
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        P r{Integer(1)};
        for (const auto& g : gens) {
            long d = ring->weighted_degree(g);
            P f(static_cast<size_t>(d) + 1, Integer(0));
            f[0] = 1;
            f[static_cast<size_t>(d)] -= 1;
            r = zpoly::mul(r, f);
        }
        return r;
    }

    std::vector<std::vector<int>> key;
    key.reserve(gens.size());
    for (const auto& g : gens) key.push_back(g.e);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;

    // pivot: variable occurring in the most generators
    int best = -1, best_count = 0;
    for (int v = 0; v < ring->nvars(); ++v) {
        int count = 0;
        for (const auto& g : gens)
            if (g[v] > 0) ++count;
        if (count > best_count) {
            best_count = count;
            best = v;
        }
    }
    Monomial pivot = Monomial::one(ring->nvars());
    pivot[best] = 1;

    std::vector<Monomial> plus = I.gens();
    plus.push_back(pivot);
    P a = numerator_rec(ring, MonomialIdeal(ring, std::move(plus)), memo);
    P b = numerator_rec(ring, I.colon(pivot), memo);
    P r = zpoly::add(a, zpoly::shift(b, ring->weight(best)));
    memo.table.emplace(std::move(key), r);
    return r;
}

HilbertSeries normalize_series(const RingPtr& ring, P num) {
    // full denominator prod_i (1 - t^{w_i}) = (1-t)^n * E(t), E(1) != 0
    P E{Integer(1)};
    for (int i = 0; i < ring->nvars(); ++i) {
        int w = ring->weight(i);
        P cyc(static_cast<size_t>(w), Integer(1));  // 1 + t + ... + t^{w-1}
        E = zpoly::mul(E, cyc);
    }
    int a = ring->nvars();
    if (num.empty()) return HilbertSeries{{}, 0};
    int b = 0;
    while (zpoly::at_1(num) == 0) {
        num = zpoly::div_one_minus_t(num);
        ++b;
    }
    auto h = zpoly::div_exact(num, E);
    if (!h)
        throw Error("Hilbert series not expressible over (1-t)^d for these weights");
    int dim = a - b;
    if (dim < 0) throw Error("internal: negative series dimension");
    return HilbertSeries{*h, dim};
}

}  // namespace

HilbertSeries hilbert_series_monomial(const MonomialIdeal& I) {
    NumeratorMemo memo;
    P num = numerator_rec(I.ring(), I, memo);
    return normalize_series(I.ring(), std::move(num));
}

HilbertSeries hilbert_series(const Ideal& I, const TermOrder& ord) {
    if (!I.is_homogeneous())
        throw Error("hilbert_series requires a homogeneous ideal");
    if (I.is_monomial()) return hilbert_series_monomial(I.to_monomial_ideal());
    return hilbert_series_monomial(initial_ideal(I, ord));
}

HilbertCoefficients coefficients_from_series(const HilbertSeries& H, unsigned k) {
    if (static_cast<long>(k) > H.h_degree() + H.dim)
        throw Error("coefficient index beyond deg h + dim");
    HilbertCoefficients out;
    out.source = "series-derivative";
    for (unsigned i = 0; i <= k; ++i) out.e.push_back(H.taylor_at_1(i));
    return out;
}

long a_invariant(const HilbertSeries& H) {
    if (H.is_zero()) throw Error("a-invariant of the zero module");
    return H.h_degree() - H.dim;
}

// ------------------------------------------------------------- decomposition

namespace {

// I = (I + (v^a)) \cap (I + (m / v^a)) for a generator m = v^a * rest
void split_rec(const MonomialIdeal& I, std::vector<MonomialIdeal>& leaves) {
    const auto& gens = I.gens();
    int gen_idx = -1, var = -1;
    for (size_t k = 0; k < gens.size() && gen_idx < 0; ++k) {
        int support = 0;
        for (int v = 0; v < I.ring()->nvars(); ++v)
            if (gens[k][v] > 0) {
                ++support;
                var = v;
            }
        if (support >= 2) gen_idx = static_cast<int>(k);
    }
    if (gen_idx < 0) {  // all pure powers: irreducible
        leaves.push_back(I);
        return;
    }
    const Monomial& m = gens[static_cast<size_t>(gen_idx)];
    Monomial u = Monomial::one(I.ring()->nvars());
    u[var] = m[var];
    Monomial rest = m / u;

    std::vector<Monomial> g1 = gens;
    g1.push_back(u);
    std::vector<Monomial> g2 = gens;
    g2.push_back(rest);
    split_rec(MonomialIdeal(I.ring(), std::move(g1)), leaves);
    split_rec(MonomialIdeal(I.ring(), std::move(g2)), leaves);
}

Integer length_multiplicity(const MonomialIdeal& I, const std::vector<int>& prime) {
    // localize: make variables outside the prime invertible, then measure
    // the m-torsion of the quotient in the subring on the prime's variables
    const RingPtr& ring = I.ring();
    std::vector<int> outside;
    for (int v = 0; v < ring->nvars(); ++v)
        if (std::find(prime.begin(), prime.end(), v) == prime.end())
            outside.push_back(v);
    MonomialIdeal erased = I.erase_variables(outside);
    RingPtr sub = ring->subring(prime);
    std::vector<Monomial> sub_gens;
    for (const auto& g : erased.gens()) {
        Monomial m = Monomial::one(sub->nvars());
        for (size_t i = 0; i < prime.size(); ++i) m[static_cast<int>(i)] = g[prime[i]];
        sub_gens.push_back(m);
    }
    MonomialIdeal J(sub, std::move(sub_gens));
    return local_cohomology_h0(J);
}

}  // namespace

Integer local_cohomology_h0(const MonomialIdeal& J) {
    MonomialIdeal sat = J.saturate_variables();
    if (sat == J) return Integer(0);
    NumeratorMemo memo;
    P nj = numerator_rec(J.ring(), J, memo);
    P ns = numerator_rec(J.ring(), sat, memo);
    P diff = zpoly::sub(nj, ns);
    for (int i = 0; i < J.ring()->nvars(); ++i) {
        if (zpoly::at_1(diff) != 0)
            throw Error("internal: H^0 series difference not finite");
        diff = zpoly::div_one_minus_t(diff);
    }
    // general weights: divide by E(t) as well
    P E{Integer(1)};
    for (int i = 0; i < J.ring()->nvars(); ++i) {
        int w = J.ring()->weight(i);
        P cyc(static_cast<size_t>(w), Integer(1));
        E = zpoly::mul(E, cyc);
    }
    if (E.size() > 1) {
        auto q = zpoly::div_exact(diff, E);
        if (!q) throw Error("internal: weighted H^0 division failed");
        diff = *q;
    }
    return zpoly::at_1(diff);
}

IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& I) {
    IrreducibleDecomposition out;
    if (I.is_zero() || I.is_unit()) return out;

    std::vector<MonomialIdeal> leaves;
    split_rec(I, leaves);

    // drop duplicates and components containing another component
    std::vector<MonomialIdeal> kept;
    for (const auto& c : leaves) {
        bool drop = false;
        for (const auto& k : kept)
            if (c.contains(k)) {  // k subset of c, so c is redundant
                drop = true;
                break;
            }
        if (drop) continue;
        std::erase_if(kept, [&](const MonomialIdeal& k) { return k.contains(c); });
        kept.push_back(c);
    }
    out.components = std::move(kept);

    // associated primes from component supports; multiplicity by localization
    std::vector<std::vector<int>> primes;
    for (const auto& c : out.components) {
        std::vector<int> s = c.support();
        if (std::find(primes.begin(), primes.end(), s) == primes.end())
            primes.push_back(s);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<IrreducibleDecomposition::PrimeMult> ass;
    for (const auto& p : primes) {
        Integer mult = length_multiplicity(I, p);
        if (mult == 0) continue;  // spurious support from a redundant leaf
        ass.push_back({p, mult, true});
    }
    for (auto& a : ass)
        for (const auto& b : ass)
            if (&a != &b &&
                std::includes(a.vars.begin(), a.vars.end(), b.vars.begin(),
                              b.vars.end()) &&
                a.vars != b.vars)
                a.minimal = false;
    out.ass = std::move(ass);
    return out;
}

DegreeReport degree_report(const MonomialIdeal& I) {
    DegreeReport r;
    HilbertSeries H = hilbert_series_monomial(I);
    r.dim = H.dim;
    r.deg = H.h_at_1();
    IrreducibleDecomposition dec = irreducible_decomposition(I);
    r.adeg = 0;
    r.gdeg = 0;
    for (const auto& p : dec.ass) {
        r.adeg += p.mult;            // deg(R/p) = 1 for monomial primes
        if (p.minimal) r.gdeg += p.mult;
    }
    if (I.is_zero()) r.adeg = r.gdeg = r.deg;  // polynomial ring itself
    r.h0 = local_cohomology_h0(I);
    if (r.dim <= 1) {
        // deg of the torsion-free part: for dim 0 the saturation is the unit
        // ideal and the extended degree is just the finite length
        MonomialIdeal sat = I.saturate_variables();
        HilbertSeries Hs = hilbert_series_monomial(sat);
        r.extended_degree = Hs.h_at_1() + r.h0;
        if (*r.extended_degree != r.adeg)
            throw Error("internal: dim<=1 extended degree does not match adeg");
    }
    return r;
}

// ------------------------------------------------------------ tracking number

TrackingReport tracking_number(const MonomialIdeal& I) {
    HilbertSeries H = hilbert_series_monomial(I);
    if (H.dim < 1) throw Error("tracking number needs dim >= 1");
    TrackingReport r;
    r.dim = H.dim;
    r.e1 = H.taylor_at_1(1);

    IrreducibleDecomposition dec = irreducible_decomposition(I);
    std::vector<MonomialIdeal> top;
    for (const auto& c : dec.components) {
        int dim_c = I.ring()->nvars() - static_cast<int>(c.support().size());
        if (dim_c == H.dim) top.push_back(c);
    }
    MonomialIdeal I_top = I;  // zero ideal decomposes into no components
    if (!top.empty()) {
        I_top = top[0];
        for (size_t i = 1; i < top.size(); ++i) I_top = I_top.intersect(top[i]);
    }
    HilbertSeries Ht = hilbert_series_monomial(I_top);
    if (Ht.dim != H.dim) throw Error("internal: top part changed dimension");
    P diff = zpoly::sub(H.h, Ht.h);
    r.torsion_mult = 0;
    if (!diff.empty()) {
        int pow = 0;
        while (zpoly::at_1(diff) == 0) {
            diff = zpoly::div_one_minus_t(diff);
            ++pow;
        }
        if (pow == 1) r.torsion_mult = zpoly::at_1(diff);
    }
    r.tn = r.e1 + r.torsion_mult;
    if (r.tn != Ht.taylor_at_1(1))
        throw Error("internal: tracking number routes disagree");
    return r;
}

TrackingReport tracking_number(const Ideal& I, const TermOrder& ord) {
    if (I.is_monomial()) return tracking_number(I.to_monomial_ideal());
    // torsion-free top part assumed for general homogeneous input; the value
    // is e1 = h'(1), exact for unmixed (e.g. Cohen-Macaulay) quotients
    HilbertSeries H = hilbert_series(I, ord);
    if (H.dim < 1) throw Error("tracking number needs dim >= 1");
    TrackingReport r;
    r.dim = H.dim;
    r.e1 = H.taylor_at_1(1);
    r.torsion_mult = 0;
    r.tn = r.e1;
    return r;
}

// ----------------------------------------------------------- veronese series

HilbertSeries veronese_series(unsigned vars, unsigned step) {
    if (vars < 1 || step < 1) throw Error("veronese_series needs vars, step >= 1");
    auto dim_at = [&](unsigned n) {
        return binomial(static_cast<long>(step * n + vars - 1),
                        static_cast<long>(vars - 1));
    };
    P h(vars + 1, Integer(0));
    for (unsigned k = 0; k <= vars; ++k) {
        Integer s(0);
        for (unsigned i = 0; i <= k; ++i) {
            Integer term = binomial(vars, i) * dim_at(k - i);
            if (i % 2) s -= term;
            else s += term;
        }
        h[k] = s;
    }
    zpoly::trim(h);
    return HilbertSeries{h, static_cast<int>(vars)};
}

// ---------------------------------------------------------------- samuel fit

Integer colength(const MonomialIdeal& I) {
    HilbertSeries H = hilbert_series_monomial(I);
    if (H.dim != 0) throw NonArtinianError("colength of a non-Artinian quotient");
    return H.h_at_1();
}

Integer colength(const Ideal& I, const TermOrder& ord) {
    if (I.is_monomial()) return colength(I.to_monomial_ideal());
    StaircaseCount sc = artinian_length(I, ord);
    if (!sc.finite) throw NonArtinianError("colength of a non-Artinian quotient");
    return sc.total;
}

namespace {

std::vector<Integer> solve_window(const std::vector<Integer>& lengths,
                                  unsigned b, int d) {
    // lengths[j] = lambda(R/I^j); solve A x = c on the window b+1..b+d
    RationalMatrix A(static_cast<size_t>(d), static_cast<size_t>(d));
    std::vector<Rational> c(static_cast<size_t>(d));
    for (int row = 0; row < d; ++row) {
        unsigned j = b + 1 + static_cast<unsigned>(row);
        for (int i = 0; i < d; ++i)
            A.at(static_cast<size_t>(row), static_cast<size_t>(i)) =
                Rational(binomial(static_cast<long>(j) + d - i - 1, d - i - 1));
        c[static_cast<size_t>(row)] = Rational(lengths[j + 1] - lengths[j]);
    }
    std::vector<Rational> x = solve_linear(A, c);
    std::vector<Integer> e(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Rational v = (i % 2) ? -x[static_cast<size_t>(i)] : x[static_cast<size_t>(i)];
        if (v.get_den() != 1)
            throw WindowError("samuel fit produced non-integer coefficients");
        e[static_cast<size_t>(i)] = v.get_num();
    }
    return e;
}

}  // namespace

HilbertCoefficients fit_from_lengths(const std::vector<Integer>& lengths,
                                     unsigned b, int d) {
    if (lengths.size() < b + static_cast<unsigned>(d) + 3)
        throw Error("fit_from_lengths: not enough filtration lengths");
    std::vector<Integer> e0 = solve_window(lengths, b, d);
    std::vector<Integer> e1 = solve_window(lengths, b + 1, d);
    if (e0 != e1)
        throw WindowError("samuel fit windows disagree; raise the window start");
    HilbertCoefficients out;
    out.e = std::move(e0);
    out.source = "samuel-fit";
    out.window_b = b;
    return out;
}

HilbertCoefficients samuel_fit(const Ideal& I, unsigned b, const TermOrder& ord) {
    const int d = I.ring()->nvars();
    // lambda(R/I^j) for j = 1..b+d+2 (window b and the certifying window b+1)
    std::vector<Integer> lengths(b + d + 3, Integer(0));
    for (unsigned j = 1; j <= b + d + 2; ++j) {
        StaircaseCount sc = artinian_length(ideal_power(I, j), ord);
        if (!sc.finite)
            throw NonArtinianError("samuel_fit requires an m-primary ideal");
        lengths[j] = sc.total;
    }
    return fit_from_lengths(lengths, b, d);
}

HilbertCoefficients samuel_fit_auto(const Ideal& I, const TermOrder& ord,
                                    unsigned b_max) {
    for (unsigned b = 1; b <= b_max; ++b) {
        try {
            return samuel_fit(I, b, ord);
        } catch (const WindowError&) {
            continue;
        }
    }
    throw WindowError("no certified samuel window up to b_max");
}

}  // namespace reesdeg
