#pragma once

#include <optional>

#include "firstint/polynomial.hpp"

namespace firstint {

/// Exact quotient a / b when b divides a in Q(i)[z1, z2]; nullopt otherwise.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);

/// Exact quotient; throws std::logic_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Divide by the coefficient of the lexicographically largest exponent pair (z1-major).
Polynomial normalize_lex(const Polynomial& p);

/// Content of p viewed as a polynomial in z2 over Q(i)[z1]: the monic gcd of all
/// z2-coefficients, a polynomial in z1 alone (scalar 1 for z2-free inputs of degree 0... see .cpp).
Polynomial content_z2(const Polynomial& p);

/// Greatest common divisor in Q(i)[z1, z2], normalized lex-monic. Primitive PRS in z2
/// over Q(i)[z1] with content handled by univariate gcd. Throws BothZeroError.
Polynomial gcd_bivariate(const Polynomial& a, const Polynomial& b);

// Conversions between z1-only bivariate polynomials and dense univariate form.
UnivariatePoly to_univariate_z1(const Polynomial& p);
Polynomial from_univariate_z1(const UnivariatePoly& u);
UnivariatePoly to_univariate_z2(const Polynomial& p);

}  // namespace firstint
