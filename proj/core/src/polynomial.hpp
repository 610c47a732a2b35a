#pragma once

// Dense univariate polynomials over Q, coefficients stored low degree first.
// Internal helper for the cyclotomic field arithmetic.

#include <utility>
#include <vector>

#include "gfm/rational.hpp"

namespace gfm::detail {

using Poly = std::vector<Rational>;

void trim(Poly& p);
Poly multiply(const Poly& a, const Poly& b);
Poly subtract(const Poly& a, const Poly& b);

/// Quotient and remainder of a by b (b nonzero after trimming).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b);

/// Inverse of a modulo m, assuming gcd(a, m) = 1. Throws std::domain_error
/// if a is not invertible modulo m.
Poly inverse_mod(const Poly& a, const Poly& m);

}  // namespace gfm::detail
