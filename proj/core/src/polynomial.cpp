#include "polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfm::detail {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly subtract(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b_in) {
  Poly b = b_in;
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};

  Poly quotient(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const Rational factor = a[shift + b.size() - 1] * lead_inv;
    if (factor.is_zero()) continue;
    quotient[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
  }
  trim(quotient);
  trim(a);
  return {quotient, a};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = divmod(a, m).second;
  Poly s0{}, s1{Rational(1)};
  trim(r0);
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::domain_error("element is not invertible modulo the polynomial");
  const Rational scale = r0.front().inverse();
  for (auto& c : s0) c *= scale;
  return divmod(s0, m).second;
}

}  // namespace gfm::detail
