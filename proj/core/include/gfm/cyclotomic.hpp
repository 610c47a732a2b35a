#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gfm/rational.hpp"

namespace gfm {

/// Monic k-th cyclotomic polynomial, coefficients from the constant term up.
/// Computed by exact division of x^k - 1 by the cyclotomic polynomials of the
/// proper divisors of k. Requires k >= 1.
std::vector<Integer> cyclotomic_polynomial(int k);

/// Degree of the k-th cyclotomic polynomial (Euler's totient of k).
int cyclotomic_degree(int k);

/// Element of Q(zeta_k), stored as the canonical residue of a rational
/// polynomial in zeta modulo the k-th cyclotomic polynomial. Elements of
/// different orders never mix; arithmetic across orders throws
/// std::invalid_argument.
class CyclotomicScalar {
 public:
  /// The rational constant `value` in Q(zeta_order).
  explicit CyclotomicScalar(int order, const Rational& value = Rational(0));

  /// Reduces an arbitrary coefficient list modulo the cyclotomic polynomial.
  static CyclotomicScalar from_coefficients(int order, std::vector<Rational> coefficients);

  /// The primitive root zeta = residue of x.
  static CyclotomicScalar zeta(int order);

  int order() const noexcept { return order_; }
  /// Canonical coefficients, length = cyclotomic_degree(order).
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational to_rational() const;

  CyclotomicScalar inverse() const;

  CyclotomicScalar operator-() const;
  CyclotomicScalar& operator+=(const CyclotomicScalar& rhs);
  CyclotomicScalar& operator-=(const CyclotomicScalar& rhs);
  CyclotomicScalar& operator*=(const CyclotomicScalar& rhs);
  CyclotomicScalar& operator/=(const CyclotomicScalar& rhs);

  friend CyclotomicScalar operator+(CyclotomicScalar lhs, const CyclotomicScalar& rhs) {
    return lhs += rhs;
  }
  friend CyclotomicScalar operator-(CyclotomicScalar lhs, const CyclotomicScalar& rhs) {
    return lhs -= rhs;
  }
  friend CyclotomicScalar operator*(CyclotomicScalar lhs, const CyclotomicScalar& rhs) {
    return lhs *= rhs;
  }
  friend CyclotomicScalar operator/(CyclotomicScalar lhs, const CyclotomicScalar& rhs) {
    return lhs /= rhs;
  }
  friend bool operator==(const CyclotomicScalar& lhs, const CyclotomicScalar& rhs) {
    return lhs.order_ == rhs.order_ && lhs.coefficients_ == rhs.coefficients_;
  }

  /// e.g. "1 + 2*z - 1/3*z^2" in the variable z; "0" for zero.
  std::string to_string() const;

 private:
  CyclotomicScalar(int order, std::vector<Rational> reduced, bool);
  void require_same_order(const CyclotomicScalar& other) const;

  int order_;
  std::vector<Rational> coefficients_;
};

CyclotomicScalar pow(const CyclotomicScalar& base, long exponent);

std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& value);

inline CyclotomicScalar zero_like(const CyclotomicScalar& x) { return CyclotomicScalar(x.order()); }
inline CyclotomicScalar one_like(const CyclotomicScalar& x) {
  return CyclotomicScalar(x.order(), Rational(1));
}

}  // namespace gfm
