#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reesdeg/ring.hpp"

namespace reesdeg {

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse exact polynomial: terms sorted descending in the ring's active
/// order, no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial from_monomial(RingPtr ring, const Monomial& m,
                                    const Rational& c = Rational(1));

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t nterms() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    /// Max weighted degree over terms (-1 for zero).
    long degree() const;
    bool is_homogeneous() const;
    /// Max exponent of variable i over terms.
    int degree_in(int var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned long n) const;
    /// Exact division; throws DivisionError when q does not divide.
    Polynomial exact_div(const Polynomial& q) const;
    std::optional<Polynomial> try_exact_div(const Polynomial& q) const;

    Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
    Polynomial monic() const;
    /// Integer-cleared primitive scalar multiple with positive leading
    /// coefficient.
    Polynomial primitive() const;

    Rational coeff_of(const Monomial& m) const;
    /// Partial derivative with respect to variable i.
    Polynomial derivative(int var) const;

    /// Substitute images[i] for variable i; images live in a common ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Transport into a compatible-by-name ring (variables matched by name;
    /// all variables in the support must exist in the target).
    Polynomial map_to(const RingPtr& target) const;

    bool operator==(const Polynomial& q) const;
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    std::string to_string() const;

private:
    void normalize();
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p * c;
}

/// Parse the CLI polynomial grammar: identifiers, integer/rational literals,
/// ^ * / + - and parentheses. Throws ParseError with a position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Determinant of a square matrix of polynomials by fraction-free
/// Bareiss elimination (all divisions exact).
Polynomial poly_det(const RingPtr& ring,
                    const std::vector<std::vector<Polynomial>>& m);

/// All monomials of the given weighted degree, descending in the ring order.
std::vector<Monomial> graded_component_basis(const RingPtr& ring, long degree);

}  // namespace reesdeg
