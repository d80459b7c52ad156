#include "reesdeg/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace reesdeg {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    for (auto& t : terms_) {
        if (t.mono.nvars() != ring_->nvars())
            throw RingMismatchError("monomial arity does not match ring");
        t.coeff = ring_->normalize_coeff(t.coeff);
    }
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ring_->mono_cmp(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && ring_->normalize_coeff(out.back().coeff) == 0)
            out.pop_back();
        else if (!out.empty())
            out.back().coeff = ring_->normalize_coeff(out.back().coeff);
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (ring->normalize_coeff(c) != 0)
        p.terms_.push_back({Monomial::one(ring->nvars()), ring->normalize_coeff(c)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    Monomial m = Monomial::one(ring->nvars());
    m[i] = 1;
    return from_monomial(std::move(ring), m);
}

Polynomial Polynomial::from_monomial(RingPtr ring, const Monomial& m,
                                     const Rational& c) {
    Polynomial p(ring);
    Rational cc = ring->normalize_coeff(c);
    if (cc != 0) p.terms_.push_back({m, cc});
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front();
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& t : terms_)
        d = std::max(d, ring_->weighted_degree(t.mono));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = ring_->weighted_degree(terms_[0].mono);
    for (const auto& t : terms_)
        if (ring_->weighted_degree(t.mono) != d) return false;
    return true;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

namespace {
void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_order(*b.ring()))
        throw RingMismatchError("operands live in different rings");
}
}  // namespace

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = ring_->normalize_coeff(-t.coeff);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    check_same_ring(*this, q);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        int c = ring_->mono_cmp(terms_[i].mono, q.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Rational s = ring_->normalize_coeff(terms_[i].coeff + q.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < q.terms_.size()) r.terms_.push_back(q.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    return *this + (-q);
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    Rational cc = ring_->normalize_coeff(c);
    if (cc == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational v = ring_->normalize_coeff(t.coeff * cc);
        if (v != 0) r.terms_.push_back({t.mono * m, v});
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    check_same_ring(*this, q);
    if (is_zero() || q.is_zero()) return Polynomial(ring_);
    if (q.nterms() == 1)
        return mul_monomial(q.terms_[0].mono, q.terms_[0].coeff);
    if (nterms() == 1)
        return q.mul_monomial(terms_[0].mono, terms_[0].coeff);
    // map-accumulate with container ordering, then one normalize pass
    std::map<std::vector<int>, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : q.terms_) {
            Monomial m = a.mono * b.mono;
            acc[m.e] += a.coeff * b.coeff;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [e, c] : acc) {
        Rational v = ring_->normalize_coeff(c);
        if (v != 0) ts.push_back({Monomial(e), v});
    }
    return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    Rational cc = ring_->normalize_coeff(c);
    if (cc == 0) return r;
    for (const auto& t : terms_) {
        Rational v = ring_->normalize_coeff(t.coeff * cc);
        if (v != 0) r.terms_.push_back({t.mono, v});
    }
    return r;
}

Polynomial Polynomial::pow(unsigned long n) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base(*this);
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

std::optional<Polynomial> Polynomial::try_exact_div(const Polynomial& q) const {
    check_same_ring(*this, q);
    if (q.is_zero()) throw DivisionError("division by zero polynomial");
    Polynomial rem(*this);
    Polynomial quot(ring_);
    const Monomial& lm = q.leading_monomial();
    const Rational& lc = q.leading_coeff();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!lm.divides(lt.mono)) return std::nullopt;
        Monomial m = lt.mono / lm;
        Rational c = ring_->normalize_coeff(lt.coeff * ring_->coeff_inverse(lc));
        quot.terms_.push_back({m, c});
        rem = rem - q.mul_monomial(m, c);
    }
    return Polynomial(ring_, std::move(quot.terms_));
}

Polynomial Polynomial::exact_div(const Polynomial& q) const {
    auto r = try_exact_div(q);
    if (!r) throw DivisionError("non-exact polynomial division");
    return *r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * ring_->coeff_inverse(leading_coeff());
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.get_den().get_mpz_t());
    }
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    Polynomial r = *this * scale;
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

Rational Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) continue;
        Monomial m = t.mono;
        Rational c = t.coeff * m[var];
        m[var] -= 1;
        r.terms_.push_back({m, ring_->normalize_coeff(c)});
    }
    return Polynomial(ring_, std::move(r.terms_));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw RingMismatchError("substitute: one image per variable required");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    for (const auto& im : images)
        if (!im.ring()->same_order(*target))
            throw RingMismatchError("substitute: images in different rings");
    Polynomial r = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (int i = 0; i < ring_->nvars(); ++i)
            if (t.mono[i])
                term = term * images[i].pow(static_cast<unsigned long>(t.mono[i]));
        r = r + term;
    }
    return r;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
    std::vector<int> idx(ring_->nvars(), -1);
    for (int i = 0; i < ring_->nvars(); ++i)
        idx[i] = target->var_index(ring_->var_name(i));
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = Monomial::one(target->nvars());
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (idx[i] < 0)
                throw RingMismatchError("map_to: variable " + ring_->var_name(i) +
                                        " missing in target ring");
            m[idx[i]] = t.mono[i];
        }
        ts.push_back({std::move(m), t.coeff});
    }
    return Polynomial(target, std::move(ts));
}

bool Polynomial::operator==(const Polynomial& q) const {
    if (!ring_ || !q.ring_) return is_zero() && q.is_zero();
    if (!ring_->compatible(*q.ring_)) return false;
    if (terms_.size() != q.terms_.size()) return false;
    // compare as sets (orders may differ between compatible rings)
    if (ring_->same_order(*q.ring_)) {
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != q.terms_[i].mono ||
                terms_[i].coeff != q.terms_[i].coeff)
                return false;
        return true;
    }
    for (const auto& t : terms_)
        if (q.coeff_of(t.mono) != t.coeff) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        std::string mono;
        {
            std::ostringstream ms;
            bool m_first = true;
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (t.mono[i] == 0) continue;
                if (!m_first) ms << "*";
                ms << ring_->var_name(i);
                if (t.mono[i] > 1) ms << "^" << t.mono[i];
                m_first = false;
            }
            mono = ms.str();
        }
        if (mono.empty()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

Polynomial poly_det(const RingPtr& ring,
                    const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("poly_det: matrix not square");
    if (n == 0) return Polynomial::constant(ring, 1);
    std::vector<std::vector<Polynomial>> a = m;
    Polynomial prev = Polynomial::constant(ring, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Polynomial::zero(ring);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
        prev = a[k][k];
    }
    Polynomial d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

std::vector<Monomial> graded_component_basis(const RingPtr& ring, long degree) {
    std::vector<Monomial> out;
    Monomial m = Monomial::one(ring->nvars());
    std::function<void(int, long)> rec = [&](int var, long rem) {
        if (var == ring->nvars()) {
            if (rem == 0) out.push_back(m);
            return;
        }
        for (int e = 0; static_cast<long>(e) * ring->weight(var) <= rem; ++e) {
            m[var] = e;
            rec(var + 1, rem - static_cast<long>(e) * ring->weight(var));
        }
        m[var] = 0;
    };
    if (degree >= 0) rec(0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->mono_cmp(a, b) > 0;
    });
    return out;
}

}  // namespace reesdeg
