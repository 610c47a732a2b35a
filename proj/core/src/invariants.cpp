#include "gfm/invariants.hpp"

#include <stdexcept>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

// Coefficients of (1 + t + ... + t^{k-1})^count: the number of j in
// {0..k-1}^count with each coordinate sum.
std::vector<Integer> box_counts(int k, int count) {
  std::vector<Integer> poly{1};
  for (int step = 0; step < count; ++step) {
    std::vector<Integer> next(poly.size() + static_cast<std::size_t>(k) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int a = 0; a < k; ++a) next[i + static_cast<std::size_t>(a)] += poly[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

Integer binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

Integer h0_twist(const GfmType& type, long r) {
  type.validate();
  if (r < 0) return 0;
  if (r < type.k) return binomial(r + type.n, type.n);
  const auto counts = box_counts(type.k, type.n - type.d);
  Integer total = 0;
  for (std::size_t s = 0; s < counts.size() && static_cast<long>(s) <= r; ++s)
    total += counts[s] * binomial(r - static_cast<long>(s) + type.d, type.d);
  return total;
}

Integer hilbert_series_coefficient(const GfmType& type, long r) {
  type.validate();
  if (r < 0) return 0;
  Integer total = 0;
  const long forms = type.n - type.d;
  for (long s = 0; s <= forms && s * type.k <= r; ++s) {
    const Integer term = binomial(forms, s) * binomial(r - s * type.k + type.n, type.n);
    if (s % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

long canonical_degree(const GfmType& type) {
  type.validate();
  return static_cast<long>(type.n - type.d) * type.k - type.n - 1;
}

Integer plurigenus(const GfmType& type, long m) {
  if (m < 1) throw std::invalid_argument("plurigenus index m must be >= 1");
  return h0_twist(type, m * canonical_degree(type));
}

std::string KodairaDimension::to_string() const { return value ? std::to_string(*value) : "-inf"; }

KodairaDimension kodaira_dimension(const GfmType& type) {
  const long r1 = canonical_degree(type);
  if (r1 < 0) return {std::nullopt};
  if (r1 == 0) return {0};
  return {type.d};
}

Classification classify(const GfmType& type) {
  const long r1 = canonical_degree(type);
  if (type.d == 2) {
    if ((type.k == 4 && type.n == 3) || (type.k == 2 && type.n == 5)) return Classification::k3;
    if ((type.k == 2 && type.n == 3) || (type.k == 3 && type.n == 3) || (type.k == 2 && type.n == 4))
      return Classification::rational;
  }
  if (r1 == 0) return Classification::calabi_yau;
  if (r1 > 0) return Classification::general_type;
  return Classification::negative_kodaira;
}

std::string to_string(Classification label) {
  switch (label) {
    case Classification::negative_kodaira: return "negative-kodaira";
    case Classification::rational: return "rational";
    case Classification::calabi_yau: return "Calabi-Yau";
    case Classification::k3: return "K3";
    case Classification::general_type: return "general-type";
  }
  throw std::logic_error("unknown classification");
}

Rational leading_coefficient(const GfmType& type) {
  const long r1 = canonical_degree(type);
  if (r1 <= 0) throw PreconditionError("leading coefficient needs r1 > 0");
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(type.k), static_cast<unsigned long>(type.n - type.d));
  Integer r1_power;
  mpz_ui_pow_ui(r1_power.get_mpz_t(), static_cast<unsigned long>(r1), static_cast<unsigned long>(type.d));
  Integer den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(type.d));
  return Rational(mpq_class(num * r1_power, den));
}

Integer top_cohomology(const GfmType& type, long r) { return h0_twist(type, canonical_degree(type) - r); }

InvariantReport invariant_report(const GfmType& type, const std::vector<long>& plurigenera) {
  const long r1 = canonical_degree(type);
  InvariantReport report{type, r1, kodaira_dimension(type), h0_twist(type, r1), {}, classify(type), {}};
  for (long m : plurigenera) report.plurigenera[m] = plurigenus(type, m);
  report.vanishing_note = type.d == 1 ? "no intermediate cohomology for curves"
                                      : "h^i(M, O_M(r)) = 0 for 0 < i < " + std::to_string(type.d) +
                                            " and every r";
  return report;
}

}  // namespace gfm
