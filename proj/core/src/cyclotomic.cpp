#include "gfm/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "polynomial.hpp"

namespace gfm {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(std::vector<Integer> dividend, const std::vector<Integer>& divisor) {
  const std::size_t dd = divisor.size();
  std::vector<Integer> quotient(dividend.size() - dd + 1);
  for (std::size_t shift = quotient.size(); shift-- > 0;) {
    const Integer factor = dividend[shift + dd - 1];
    quotient[shift] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < dd; ++j) dividend[shift + j] -= factor * divisor[j];
  }
  for (const auto& c : dividend)
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quotient;
}

std::vector<Integer> compute_cyclotomic(int k, std::map<int, std::vector<Integer>>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  std::vector<Integer> poly(static_cast<std::size_t>(k) + 1, Integer(0));
  poly.front() = -1;
  poly.back() = 1;
  for (int e = 1; e < k; ++e)
    if (k % e == 0) poly = divide_monic(std::move(poly), compute_cyclotomic(e, memo));
  memo.emplace(k, poly);
  return poly;
}

// Rational copy of Phi_k, shared between scalars of the same order.
std::shared_ptr<const detail::Poly> modulus(int order) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const detail::Poly>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    detail::Poly p;
    for (const auto& c : cyclotomic_polynomial(order)) p.emplace_back(c);
    slot = std::make_shared<const detail::Poly>(std::move(p));
  }
  return slot;
}

std::vector<Rational> pad(detail::Poly p, int order) {
  p.resize(static_cast<std::size_t>(cyclotomic_degree(order)));
  return p;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic polynomial order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> memo;
  std::lock_guard lock(mutex);
  return compute_cyclotomic(k, memo);
}

int cyclotomic_degree(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  int result = k;
  int m = k;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CyclotomicScalar::CyclotomicScalar(int order, const Rational& value)
    : order_(order), coefficients_(static_cast<std::size_t>(cyclotomic_degree(order))) {
  coefficients_.front() = value;
}

CyclotomicScalar::CyclotomicScalar(int order, std::vector<Rational> reduced, bool)
    : order_(order), coefficients_(std::move(reduced)) {}

CyclotomicScalar CyclotomicScalar::from_coefficients(int order, std::vector<Rational> coefficients) {
  const auto m = modulus(order);
  detail::trim(coefficients);
  auto remainder = detail::divmod(std::move(coefficients), *m).second;
  return CyclotomicScalar(order, pad(std::move(remainder), order), true);
}

CyclotomicScalar CyclotomicScalar::zeta(int order) {
  return from_coefficients(order, {Rational(0), Rational(1)});
}

bool CyclotomicScalar::is_zero() const {
  for (const auto& c : coefficients_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicScalar::is_rational() const {
  for (std::size_t i = 1; i < coefficients_.size(); ++i)
    if (!coefficients_[i].is_zero()) return false;
  return true;
}

Rational CyclotomicScalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic scalar is not rational");
  return coefficients_.front();
}

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const auto m = modulus(order_);
  detail::Poly a = coefficients_;
  detail::trim(a);
  return CyclotomicScalar(order_, pad(detail::inverse_mod(a, *m), order_), true);
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

void CyclotomicScalar::require_same_order(const CyclotomicScalar& other) const {
  if (order_ != other.order_)
    throw std::invalid_argument("cyclotomic scalars of different orders (" + std::to_string(order_) +
                                " vs " + std::to_string(other.order_) + ")");
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& rhs) {
  require_same_order(rhs);
  auto product = detail::multiply(coefficients_, rhs.coefficients_);
  *this = from_coefficients(order_, std::move(product));
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator/=(const CyclotomicScalar& rhs) {
  require_same_order(rhs);
  return *this *= rhs.inverse();
}

std::string CyclotomicScalar::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CyclotomicScalar pow(const CyclotomicScalar& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  CyclotomicScalar result = one_like(base);
  CyclotomicScalar square = base;
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& value) {
  return os << value.to_string() << " (order " << value.order() << ")";
}

}  // namespace gfm
