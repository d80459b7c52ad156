#pragma once

#include <memory>
#include <string>
#include <vector>

#include "reesdeg/rational.hpp"

namespace reesdeg {

enum class OrderKind { Grevlex, Lex, DegLex, Block };

/// A term order on monomials, compatible with multiplication.
struct TermOrder {
    OrderKind kind = OrderKind::Grevlex;
    /// For Block: sizes of the variable blocks, first block eliminated first.
    std::vector<int> blocks;

    static TermOrder grevlex() { return {OrderKind::Grevlex, {}}; }
    static TermOrder lex() { return {OrderKind::Lex, {}}; }
    static TermOrder deglex() { return {OrderKind::DegLex, {}}; }
    static TermOrder block(std::vector<int> sizes) {
        return {OrderKind::Block, std::move(sizes)};
    }

    bool operator==(const TermOrder& o) const {
        return kind == o.kind && blocks == o.blocks;
    }
    std::string name() const;
};

enum class FieldKind { Rationals, PrimeField };

/// Exponent vector of a monomial; length equals the ring's variable count.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int operator[](int i) const { return e[i]; }
    int& operator[](int i) { return e[i]; }
    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    int total_degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] < r.e[i]) r.e[i] = b.e[i];
        return r;
    }
    bool coprime(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && m.e[i] > 0) return false;
        return true;
    }
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
    bool operator<(const Monomial& m) const { return e < m.e; }  // container order only
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ambient graded polynomial ring: named variables, positive integer weights,
/// coefficient field tag and an active term order.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(std::vector<std::string> vars,
                        std::vector<int> weights = {},
                        TermOrder order = TermOrder::grevlex(),
                        FieldKind field = FieldKind::Rationals,
                        long prime = 0);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var_name(int i) const { return vars_[i]; }
    const std::vector<std::string>& var_names() const { return vars_; }
    int weight(int i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    const TermOrder& order() const { return order_; }
    FieldKind field() const { return field_; }
    long prime() const { return prime_; }

    /// Index of a named variable, or -1.
    int var_index(const std::string& name) const;

    long weighted_degree(const Monomial& m) const {
        long d = 0;
        for (int i = 0; i < nvars(); ++i) d += static_cast<long>(weights_[i]) * m[i];
        return d;
    }

    /// Three-way comparison in the active order: <0, 0, >0 as a <, =, > b.
    int mono_cmp(const Monomial& a, const Monomial& b) const;
    bool mono_less(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b) < 0;
    }

    /// Same variables, weights and field (term order may differ).
    bool compatible(const PolyRing& other) const {
        return vars_ == other.vars_ && weights_ == other.weights_ &&
               field_ == other.field_ && prime_ == other.prime_;
    }
    bool same_order(const PolyRing& other) const {
        return compatible(other) && order_ == other.order_;
    }

    /// Copy of this ring with another active term order.
    RingPtr with_order(const TermOrder& order) const;
    /// This ring with extra variables prepended, in a block elimination order
    /// that eliminates the new variables first.
    RingPtr extend_front(const std::vector<std::string>& fresh) const;
    /// Subring on the given variable indices (order restricted to grevlex).
    RingPtr subring(const std::vector<int>& keep) const;

    /// Reduce a coefficient into the ring's field (mod p for prime fields).
    Rational normalize_coeff(const Rational& c) const;
    /// Multiplicative inverse in the ring's field.
    Rational coeff_inverse(const Rational& c) const;

    std::string to_string() const;

private:
    PolyRing(std::vector<std::string> vars, std::vector<int> weights,
             TermOrder order, FieldKind field, long prime);

    std::vector<std::string> vars_;
    std::vector<int> weights_;
    TermOrder order_;
    FieldKind field_;
    long prime_;
};

}  // namespace reesdeg
