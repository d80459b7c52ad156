#include "reesdeg/gcd.hpp"

#include <algorithm>

namespace reesdeg {

namespace {

// dense representation in one main variable with polynomial coefficients
using Dense = std::vector<Polynomial>;

Dense to_dense(const Polynomial& p, int var) {
    const RingPtr& ring = p.ring();
    Dense d(static_cast<size_t>(p.degree_in(var)) + 1, Polynomial::zero(ring));
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        int e = m[var];
        m[var] = 0;
        d[static_cast<size_t>(e)] =
            d[static_cast<size_t>(e)] + Polynomial::from_monomial(ring, m, t.coeff);
    }
    while (d.size() > 1 && d.back().is_zero()) d.pop_back();
    return d;
}

Polynomial from_dense(const Dense& d, int var, const RingPtr& ring) {
    Polynomial p = Polynomial::zero(ring);
    Monomial xv = Monomial::one(ring->nvars());
    for (size_t e = 0; e < d.size(); ++e) {
        xv[var] = static_cast<int>(e);
        p = p + d[e] * Polynomial::from_monomial(ring, xv);
    }
    return p;
}

int main_variable(const Polynomial& a, const Polynomial& b) {
    const RingPtr& ring = a.ring();
    for (int v = ring->nvars() - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

bool dense_zero(const Dense& d) {
    for (const auto& c : d)
        if (!c.is_zero()) return false;
    return true;
}

// pseudo-remainder of a by b in the main variable
Dense pseudo_rem(Dense a, const Dense& b) {
    const size_t db = b.size() - 1;
    const Polynomial& lb = b.back();
    while (!dense_zero(a) && a.size() - 1 >= db) {
        size_t da = a.size() - 1;
        Polynomial la = a.back();
        for (auto& c : a) c = c * lb;
        for (size_t i = 0; i <= db; ++i)
            a[da - db + i] = a[da - db + i] - la * b[i];
        while (a.size() > 1 && a.back().is_zero()) a.pop_back();
        if (a.size() == 1 && a[0].is_zero()) break;
        if (a.size() - 1 == da && !a.back().is_zero())
            throw Error("internal: pseudo-division made no progress");
    }
    return a;
}

Polynomial content_of(const Dense& d) {
    Polynomial c = Polynomial::zero(d.empty() ? RingPtr() : d[0].ring());
    for (const auto& coeff : d) c = poly_gcd(c, coeff);
    return c;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive();
    if (b.is_zero()) return a.primitive();
    const RingPtr& ring = a.ring();
    int var = main_variable(a, b);
    if (var < 0) return Polynomial::constant(ring, 1);  // nonzero constants
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // one operand is free of the main variable: gcd with the content
        const Polynomial& flat = a.degree_in(var) == 0 ? a : b;
        const Polynomial& tall = a.degree_in(var) == 0 ? b : a;
        return poly_gcd(flat, content_of(to_dense(tall, var)));
    }
    Dense da = to_dense(a, var);
    Dense db = to_dense(b, var);
    Polynomial ca = content_of(da);
    Polynomial cb = content_of(db);
    for (auto& c : da) c = c.exact_div(ca);
    for (auto& c : db) c = c.exact_div(cb);
    if (da.size() < db.size()) std::swap(da, db);
    // primitive PRS
    while (true) {
        Dense r = pseudo_rem(da, db);
        if (dense_zero(r)) break;
        Polynomial cr = content_of(r);
        for (auto& c : r) c = c.exact_div(cr);
        da = std::move(db);
        db = std::move(r);
        if (db.size() == 1) {  // constant in the main variable
            if (db[0].is_constant()) return poly_gcd(ca, cb);
            break;
        }
    }
    Polynomial g = from_dense(db, var, ring).primitive();
    return (g * poly_gcd(ca, cb)).primitive();
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero() || f.is_constant()) return f;
    Polynomial g = f.primitive();
    Polynomial acc = g;
    for (int v = 0; v < f.ring()->nvars(); ++v) {
        if (f.degree_in(v) == 0) continue;
        acc = poly_gcd(acc, f.derivative(v));
    }
    return g.exact_div(acc).primitive();
}

std::pair<unsigned, Rational> extract_power(const Polynomial& d,
                                            const Polynomial& f) {
    if (f.is_zero() || f.is_constant())
        throw Error("extract_power: trivial base polynomial");
    if (d.is_zero()) return {0, Rational(0)};
    unsigned k = 0;
    Polynomial rem = d;
    while (true) {
        auto q = rem.try_exact_div(f);
        if (!q) break;
        rem = *q;
        ++k;
    }
    if (!rem.is_constant()) return {0, Rational(0)};
    return {k, rem.is_zero() ? Rational(0) : rem.leading_coeff()};
}

}  // namespace reesdeg
