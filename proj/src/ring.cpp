#include "reesdeg/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace reesdeg {

std::string TermOrder::name() const {
    switch (kind) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::DegLex: return "deglex";
        case OrderKind::Block: {
            std::ostringstream os;
            os << "block(";
            for (size_t i = 0; i < blocks.size(); ++i)
                os << (i ? "," : "") << blocks[i];
            os << ")";
            return os.str();
        }
    }
    return "?";
}

PolyRing::PolyRing(std::vector<std::string> vars, std::vector<int> weights,
                   TermOrder order, FieldKind field, long prime)
    : vars_(std::move(vars)),
      weights_(std::move(weights)),
      order_(std::move(order)),
      field_(field),
      prime_(prime) {}

RingPtr PolyRing::make(std::vector<std::string> vars, std::vector<int> weights,
                       TermOrder order, FieldKind field, long prime) {
    if (vars.empty()) throw Error("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second) throw Error("duplicate variable name: " + v);
    }
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw Error("weight count does not match variable count");
    for (int w : weights)
        if (w < 1) throw Error("weights must be >= 1");
    if (field == FieldKind::PrimeField && prime < 2)
        throw Error("prime field needs a prime >= 2");
    if (order.kind == OrderKind::Block) {
        int total = 0;
        for (int b : order.blocks) {
            if (b < 1) throw Error("block sizes must be >= 1");
            total += b;
        }
        if (total != static_cast<int>(vars.size()))
            throw Error("block sizes must cover all variables");
    }
    return RingPtr(new PolyRing(std::move(vars), std::move(weights),
                                std::move(order), field, prime));
}

int PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

namespace {

// grevlex on a variable range: higher weighted degree first; ties broken by
// the last differing exponent, smaller exponent winning.
int grevlex_cmp(const PolyRing& r, const Monomial& a, const Monomial& b,
                int lo, int hi) {
    long da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += static_cast<long>(r.weight(i)) * a[i];
        db += static_cast<long>(r.weight(i)) * b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

int PolyRing::mono_cmp(const Monomial& a, const Monomial& b) const {
    const int n = nvars();
    switch (order_.kind) {
        case OrderKind::Grevlex:
            return grevlex_cmp(*this, a, b, 0, n);
        case OrderKind::Lex:
            return lex_cmp(a, b, 0, n);
        case OrderKind::DegLex: {
            long da = weighted_degree(a), db = weighted_degree(b);
            if (da != db) return da < db ? -1 : 1;
            return lex_cmp(a, b, 0, n);
        }
        case OrderKind::Block: {
            int lo = 0;
            for (int size : order_.blocks) {
                int c = grevlex_cmp(*this, a, b, lo, lo + size);
                if (c) return c;
                lo += size;
            }
            return 0;
        }
    }
    return 0;
}

RingPtr PolyRing::with_order(const TermOrder& order) const {
    if (order == order_) return shared_from_this();
    return make(vars_, weights_, order, field_, prime_);
}

RingPtr PolyRing::extend_front(const std::vector<std::string>& fresh) const {
    std::vector<std::string> vars = fresh;
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    std::vector<int> weights(fresh.size(), 1);
    weights.insert(weights.end(), weights_.begin(), weights_.end());
    TermOrder ord = TermOrder::block({static_cast<int>(fresh.size()), nvars()});
    return make(std::move(vars), std::move(weights), ord, field_, prime_);
}

RingPtr PolyRing::subring(const std::vector<int>& keep) const {
    std::vector<std::string> vars;
    std::vector<int> weights;
    for (int i : keep) {
        vars.push_back(vars_[i]);
        weights.push_back(weights_[i]);
    }
    return make(std::move(vars), std::move(weights), TermOrder::grevlex(),
                field_, prime_);
}

Rational PolyRing::normalize_coeff(const Rational& c) const {
    if (field_ == FieldKind::Rationals) return c;
    Integer p(prime_);
    Integer den = c.get_den();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DivisionError("denominator not invertible mod p");
    Integer v = (c.get_num() % p) * inv % p;
    if (v < 0) v += p;
    return Rational(v);
}

Rational PolyRing::coeff_inverse(const Rational& c) const {
    if (c == 0) throw DivisionError("division by zero coefficient");
    if (field_ == FieldKind::Rationals) return Rational(1) / c;
    Rational n = normalize_coeff(c);
    Integer p(prime_), inv;
    Integer num = n.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DivisionError("coefficient not invertible mod p");
    return Rational(inv);
}

std::string PolyRing::to_string() const {
    std::ostringstream os;
    if (field_ == FieldKind::PrimeField) os << "GF(" << prime_ << ")";
    else os << "QQ";
    os << "[";
    for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
    bool weighted = false;
    for (int w : weights_)
        if (w != 1) weighted = true;
    if (weighted) {
        os << " weights(";
        for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << weights_[i];
        os << ")";
    }
    return os.str();
}

}  // namespace reesdeg
