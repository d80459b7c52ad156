#include "reesdeg/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace reesdeg {

GroebnerOptions& groebner_options() {
    static GroebnerOptions opts;
    return opts;
}

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)) {
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        std::erase_if(kept, [&](const Monomial& k) { return m.divides(k); });
        kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) {
        return ring_->mono_cmp(a, b) > 0;
    });
    gens_ = std::move(kept);
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return gens_ == other.gens_;
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
    std::vector<Monomial> prods;
    prods.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) prods.push_back(a * b);
    return MonomialIdeal(ring_, std::move(prods));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
    std::vector<Monomial> all = gens_;
    all.insert(all.end(), other.gens_.begin(), other.gens_.end());
    return MonomialIdeal(ring_, std::move(all));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
    std::vector<Monomial> ms;
    ms.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) ms.push_back(lcm(a, b));
    return MonomialIdeal(ring_, std::move(ms));
}

MonomialIdeal MonomialIdeal::pow(unsigned long n) const {
    if (n == 0)
        return MonomialIdeal(ring_, {Monomial::one(ring_->nvars())});
    MonomialIdeal r = *this;
    for (unsigned long i = 1; i < n; ++i) r = r * *this;
    return r;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
    std::vector<Monomial> ms;
    ms.reserve(gens_.size());
    for (const auto& g : gens_) ms.push_back(g / gcd(g, m));
    return MonomialIdeal(ring_, std::move(ms));
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& other) const {
    if (other.gens_.empty()) throw DivisionError("colon by the zero ideal");
    MonomialIdeal acc = colon(other.gens_[0]);
    for (size_t i = 1; i < other.gens_.size(); ++i)
        acc = acc.intersect(colon(other.gens_[i]));
    return acc;
}

MonomialIdeal MonomialIdeal::saturate_variables(std::vector<int> vars) const {
    if (vars.empty())
        for (int i = 0; i < ring_->nvars(); ++i) vars.push_back(i);
    MonomialIdeal m = variable_ideal(ring_, vars);
    MonomialIdeal cur = *this;
    while (true) {
        MonomialIdeal next = cur.colon(m);
        if (next == cur) return cur;
        cur = next;
    }
}

MonomialIdeal MonomialIdeal::erase_variables(const std::vector<int>& vars) const {
    std::vector<Monomial> ms = gens_;
    for (auto& m : ms)
        for (int v : vars) m[v] = 0;
    return MonomialIdeal(ring_, std::move(ms));
}

bool MonomialIdeal::is_artinian() const {
    if (is_unit()) return true;
    for (int i = 0; i < ring_->nvars(); ++i) {
        bool pure = false;
        for (const auto& g : gens_) {
            if (g[i] == 0) continue;
            bool only_i = true;
            for (int j = 0; j < ring_->nvars(); ++j)
                if (j != i && g[j] != 0) only_i = false;
            if (only_i) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<int> MonomialIdeal::support() const {
    std::vector<int> s;
    for (int i = 0; i < ring_->nvars(); ++i)
        for (const auto& g : gens_)
            if (g[i] > 0) {
                s.push_back(i);
                break;
            }
    return s;
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        for (int e : g.e)
            if (e > 1) return false;
    return true;
}

std::vector<Polynomial> MonomialIdeal::to_polynomials() const {
    std::vector<Polynomial> ps;
    ps.reserve(gens_.size());
    for (const auto& g : gens_) ps.push_back(Polynomial::from_monomial(ring_, g));
    return ps;
}

std::string MonomialIdeal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << Polynomial::from_monomial(ring_, gens_[i]).to_string();
    }
    os << ")";
    return os.str();
}

MonomialIdeal variable_ideal(const RingPtr& ring, const std::vector<int>& vars) {
    std::vector<Monomial> gens;
    for (int v : vars) {
        Monomial m = Monomial::one(ring->nvars());
        m[v] = 1;
        gens.push_back(m);
    }
    return MonomialIdeal(ring, std::move(gens));
}

// ------------------------------------------------------------------------ Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->compatible(*ring_))
            throw RingMismatchError("generator from a different ring");
        Polynomial h = g.ring()->same_order(*ring_) ? g : g.map_to(ring_);
        bool dup = false;
        for (const auto& k : gens_)
            if (k == h) {
                dup = true;
                break;
            }
        if (!dup) gens_.push_back(std::move(h));
    }
}

bool Ideal::is_monomial() const {
    for (const auto& g : gens_)
        if (g.nterms() != 1) return false;
    return true;
}

MonomialIdeal Ideal::to_monomial_ideal() const {
    if (!is_monomial()) throw Error("ideal is not monomial");
    std::vector<Monomial> ms;
    for (const auto& g : gens_) ms.push_back(g.leading_monomial());
    return MonomialIdeal(ring_, std::move(ms));
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i)
        os << (i ? ", " : "") << gens_[i].primitive().to_string();
    os << ")";
    return os.str();
}

// ------------------------------------------------------------------- Buchberger

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> ms;
    ms.reserve(gens_.size());
    for (const auto& g : gens_) ms.push_back(g.leading_monomial());
    return ms;
}

namespace {

// Top-reduction only; tails are handled at the end of the run.
Polynomial top_reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
    Polynomial r = p;
    const RingPtr& ring = p.ring();
    bool reduced = true;
    while (!r.is_zero() && reduced) {
        reduced = false;
        const Monomial& lm = r.leading_monomial();
        for (const auto& g : basis) {
            if (!g.leading_monomial().divides(lm)) continue;
            Monomial q = lm / g.leading_monomial();
            Rational c = ring->normalize_coeff(
                r.leading_coeff() * ring->coeff_inverse(g.leading_coeff()));
            r = r - g.mul_monomial(q, c);
            reduced = true;
            break;
        }
    }
    return r;
}

Polynomial full_reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
    const RingPtr& ring = p.ring();
    Polynomial rem(ring);
    Polynomial cur = p;
    while (!cur.is_zero()) {
        cur = top_reduce(cur, basis);
        if (cur.is_zero()) break;
        // move the irreducible leading term to the remainder
        const Term& lt = cur.leading_term();
        rem = rem + Polynomial::from_monomial(ring, lt.mono, lt.coeff);
        cur = cur - Polynomial::from_monomial(ring, lt.mono, lt.coeff);
    }
    return rem;
}

struct SPair {
    size_t i, j;
    Monomial lcm_m;
    long deg;
};

}  // namespace

std::shared_ptr<const GroebnerBasis> buchberger(const Ideal& I, const TermOrder& ord) {
    if (I.cache_) {
        auto it = I.cache_->find(ord.name());
        if (it != I.cache_->end()) return it->second;
    }

    RingPtr ring = I.ring()->with_order(ord);
    const auto& opts = groebner_options();

    std::vector<Polynomial> basis;
    for (const auto& g : I.gens()) {
        Polynomial h = g.ring()->same_order(*ring) ? g : g.map_to(ring);
        if (!h.is_zero()) basis.push_back(h);
    }
    // interreduce the input
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->mono_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    {
        std::vector<Polynomial> kept;
        for (const auto& g : basis) {
            Polynomial r = full_reduce(g, kept);
            if (!r.is_zero()) kept.push_back(r.monic());
        }
        basis = std::move(kept);
    }
    if (basis.size() > opts.max_basis)
        throw DeskScaleError("desk-scale exceeded: basis size");

    auto lcm_deg = [&](const Monomial& m) { return ring->weighted_degree(m); };

    std::deque<SPair> pairs;
    auto push_pairs_for = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            Monomial l = lcm(basis[i].leading_monomial(), basis[t].leading_monomial());
            pairs.push_back({i, t, l, lcm_deg(l)});
        }
    };
    for (size_t t = 0; t < basis.size(); ++t) push_pairs_for(t);

    auto pick_next = [&]() {
        // normal strategy: minimal lcm degree, then the order on lcms
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].deg < pairs[best].deg ||
                (pairs[k].deg == pairs[best].deg &&
                 ring->mono_cmp(pairs[k].lcm_m, pairs[best].lcm_m) < 0))
                best = k;
        }
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        return p;
    };

    while (!pairs.empty()) {
        SPair p = pick_next();
        const Polynomial& f = basis[p.i];
        const Polynomial& g = basis[p.j];
        // first Buchberger criterion
        if (f.leading_monomial().coprime(g.leading_monomial())) continue;
        // chain criterion: some other basis element divides the lcm and both
        // companion pairs were already handled (not in the queue)
        {
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == p.i || k == p.j) continue;
                if (!basis[k].leading_monomial().divides(p.lcm_m)) continue;
                bool pending = false;
                for (const auto& q : pairs) {
                    if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k)) ||
                        (q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) {
                        pending = true;
                        break;
                    }
                }
                if (!pending) skip = true;
            }
            if (skip) continue;
        }
        Monomial mf = p.lcm_m / f.leading_monomial();
        Monomial mg = p.lcm_m / g.leading_monomial();
        Polynomial s = f.mul_monomial(mf, Rational(1)) -
                       g.mul_monomial(mg, ring->normalize_coeff(
                                              f.leading_coeff() *
                                              ring->coeff_inverse(g.leading_coeff())));
        Polynomial r = top_reduce(s, basis);
        if (r.is_zero()) continue;
        if (r.degree() > opts.max_degree)
            throw DeskScaleError("desk-scale exceeded: degree " +
                                 std::to_string(r.degree()));
        basis.push_back(r.monic());
        if (basis.size() > opts.max_basis)
            throw DeskScaleError("desk-scale exceeded: basis size");
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(basis[i]);
    }
    // reduce tails against the minimal set
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(full_reduce(minimal[i], others).monic());
    }
    // display order: ascending leading degree, descending order within a degree
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  long da = ring->weighted_degree(a.leading_monomial());
                  long db = ring->weighted_degree(b.leading_monomial());
                  if (da != db) return da < db;
                  return ring->mono_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
              });

    auto gb = std::make_shared<const GroebnerBasis>(ring, std::move(reduced), ord);
    if (!I.cache_)
        I.cache_ = std::make_shared<
            std::map<std::string, std::shared_ptr<const GroebnerBasis>>>();
    (*I.cache_)[ord.name()] = gb;
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    Polynomial q = p.ring()->same_order(*G.ring()) ? p : p.map_to(G.ring());
    return full_reduce(q, G.gens());
}

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& ord) {
    auto gb = buchberger(I, ord);
    return MonomialIdeal(gb->ring(), gb->leading_monomials());
}

bool ideal_contains(const Ideal& I, const Polynomial& p, const TermOrder& ord) {
    return normal_form(p, *buchberger(I, ord)).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J, const TermOrder& ord) {
    auto gb = buchberger(I, ord);
    for (const auto& g : J.gens())
        if (!normal_form(g, *gb).is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const TermOrder& ord) {
    auto a = buchberger(I, ord);
    auto b = buchberger(J, ord);
    if (a->gens().size() != b->gens().size()) return false;
    for (size_t i = 0; i < a->gens().size(); ++i)
        if (a->gens()[i] != b->gens()[i]) return false;
    return true;
}

namespace {

std::string fresh_var_name(const PolyRing& ring, const std::string& stem) {
    if (ring.var_index(stem) < 0) return stem;
    for (int k = 0;; ++k) {
        std::string name = stem + std::to_string(k);
        if (ring.var_index(name) < 0) return name;
    }
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    // (w I + (1-w) J) eliminated by the block order with w first
    RingPtr ring = I.ring();
    RingPtr ext = ring->extend_front({fresh_var_name(*ring, "w@")});
    // '@' is not parseable, so the helper variable can never collide
    Polynomial w = Polynomial::variable(ext, 0);
    Polynomial one_minus_w = Polynomial::constant(ext, 1) - w;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(w * g.map_to(ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_w * g.map_to(ext));
    Ideal K(ext, std::move(gens));
    auto gb = buchberger(K, ext->order());
    std::vector<Polynomial> result;
    for (const auto& g : gb->gens())
        if (g.degree_in(0) == 0) result.push_back(g.map_to(ring));
    return Ideal(ring, std::move(result));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw DivisionError("colon by zero polynomial");
    RingPtr ring = I.ring();
    Polynomial ff = f.ring()->same_order(*ring) ? f : f.map_to(ring);
    if (ff.is_constant()) return I;
    Ideal inter = intersect(I, Ideal(ring, {ff}));
    std::vector<Polynomial> gens;
    for (const auto& g : inter.gens()) gens.push_back(g.exact_div(ff));
    return Ideal(ring, std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    if (J.is_zero()) throw DivisionError("colon by the zero ideal");
    bool first = true;
    Ideal acc(I.ring());
    for (const auto& f : J.gens()) {
        Ideal c = colon(I, f);
        acc = first ? c : intersect(acc, c);
        first = false;
    }
    return acc;
}

SaturationResult saturate(const Ideal& I, const Ideal& J) {
    TermOrder ord = I.ring()->order();
    Ideal cur = I;
    unsigned e = 0;
    while (true) {
        Ideal next = colon(cur, J);
        if (ideal_equal(next, cur, ord)) return {cur, e};
        cur = next;
        ++e;
        if (e > 1000) throw DeskScaleError("saturation did not stabilize");
    }
}

std::vector<Integer> staircase_counts_up_to(const MonomialIdeal& L, long max_degree) {
    const RingPtr& ring = L.ring();
    const int n = ring->nvars();
    std::vector<Integer> counts(static_cast<size_t>(max_degree) + 1, Integer(0));
    // DFS over exponent vectors of weighted degree <= max_degree
    Monomial m = Monomial::one(n);
    std::vector<const Monomial*> gens;
    for (const auto& g : L.gens()) gens.push_back(&g);
    std::function<void(int, long)> walk = [&](int var, long deg) {
        if (var == n) {
            counts[static_cast<size_t>(deg)] += 1;
            return;
        }
        for (int e = 0;; ++e) {
            m[var] = e;
            long d = deg + static_cast<long>(e) * ring->weight(var);
            if (d > max_degree) break;
            // prune branches already inside the ideal: generators supported on
            // variables <= var and dominated by the partial exponent pattern
            bool inside = false;
            for (const auto* g : gens) {
                bool div = true;
                for (int i = 0; i <= var && div; ++i)
                    if ((*g)[i] > m[i]) div = false;
                for (int i = var + 1; i < n && div; ++i)
                    if ((*g)[i] > 0) div = false;
                if (div) {
                    inside = true;
                    break;
                }
            }
            if (!inside) walk(var + 1, d);
        }
        m[var] = 0;
    };
    walk(0, 0);
    return counts;
}

StaircaseCount staircase_of(const MonomialIdeal& L) {
    StaircaseCount sc;
    if (!L.is_artinian()) {
        sc.finite = false;
        return sc;
    }
    const RingPtr& ring = L.ring();
    long bound = 0;
    for (int i = 0; i < ring->nvars(); ++i) {
        int pure = 0;
        for (const auto& g : L.gens()) {
            bool only_i = g[i] > 0;
            for (int j = 0; j < ring->nvars() && only_i; ++j)
                if (j != i && g[j] != 0) only_i = false;
            if (only_i) pure = g[i];
        }
        bound += static_cast<long>(pure - 1) * ring->weight(i);
    }
    sc.finite = true;
    sc.per_degree = staircase_counts_up_to(L, std::max<long>(bound, 0));
    while (!sc.per_degree.empty() && sc.per_degree.back() == 0)
        sc.per_degree.pop_back();
    for (const auto& c : sc.per_degree) sc.total += c;
    return sc;
}

StaircaseCount artinian_length(const Ideal& I, const TermOrder& ord) {
    MonomialIdeal L = I.is_monomial() ? I.to_monomial_ideal() : initial_ideal(I, ord);
    return staircase_of(L);
}

long socle_degree(const Ideal& I) {
    StaircaseCount sc = artinian_length(I, I.ring()->order());
    if (!sc.finite) throw NonArtinianError("socle degree of a non-Artinian quotient");
    return static_cast<long>(sc.per_degree.size()) - 1;
}

Ideal ideal_power(const Ideal& I, unsigned n) {
    RingPtr ring = I.ring();
    if (n == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
    if (I.is_monomial()) return Ideal(I.to_monomial_ideal().pow(n));
    std::vector<Polynomial> cur = I.gens();
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Polynomial> next;
        for (const auto& a : cur)
            for (const auto& b : I.gens()) next.push_back(a * b);
        // dedupe up to scalar via primitive form
        std::set<std::string> seen;
        std::vector<Polynomial> kept;
        for (auto& p : next) {
            std::string key = p.primitive().to_string();
            if (seen.insert(key).second) kept.push_back(std::move(p));
        }
        cur = std::move(kept);
    }
    return Ideal(ring, std::move(cur));
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
    std::vector<Polynomial> sorted = I.gens();
    const RingPtr& ring = I.ring();
    std::sort(sorted.begin(), sorted.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  return ring->mono_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
              });
    std::vector<Polynomial> kept;
    for (const auto& g : sorted) {
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        Ideal K(ring, kept);
        if (!ideal_contains(K, g, ring->order())) kept.push_back(g);
    }
    return kept;
}

}  // namespace reesdeg
