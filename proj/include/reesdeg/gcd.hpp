#pragma once

#include "reesdeg/polynomial.hpp"

namespace reesdeg {

/// Multivariate gcd over the rationals (primitive-PRS); result is primitive
/// with positive leading coefficient.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// f / gcd(f, all partial derivatives): the product of the distinct
/// irreducible factors of f (characteristic zero).
Polynomial squarefree_part(const Polynomial& f);

/// Largest k with d = c * f^k for a scalar c; returns k and c (k = 0 when
/// f does not divide d).
std::pair<unsigned, Rational> extract_power(const Polynomial& d,
                                            const Polynomial& f);

}  // namespace reesdeg
