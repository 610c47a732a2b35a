#include "gfm/fermat_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

int mod(long value, int k) {
  const long r = value % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

void require_type_match(const GroupElement& element, const GfmType& type) {
  type.validate();
  if (element.k() != type.k || element.n() != type.n)
    throw std::invalid_argument("group element " + element.to_string() + " does not belong to type " +
                                type.to_string());
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

void GfmType::validate() const {
  if (d < 1) throw std::invalid_argument("type needs d >= 1");
  if (k < 2) throw std::invalid_argument("type needs k >= 2");
  if (n < d + 1) throw std::invalid_argument("type needs n >= d + 1");
}

std::string GfmType::to_string() const {
  return "(" + std::to_string(d) + ";" + std::to_string(k) + "," + std::to_string(n) + ")";
}

GroupElement GroupElement::from_exponents(int k, const std::vector<long>& exponents) {
  if (k < 2) throw std::invalid_argument("group modulus k must be >= 2");
  if (exponents.size() < 2) throw std::invalid_argument("group element needs n+1 >= 2 exponents");
  const long shift = exponents.back();
  std::vector<int> out;
  out.reserve(exponents.size());
  for (long e : exponents) out.push_back(mod(e - shift, k));
  return GroupElement(k, std::move(out));
}

GroupElement GroupElement::identity(int k, int n) {
  return from_exponents(k, std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
}

GroupElement GroupElement::generator(int k, int n, int j) {
  if (j < 1 || j > n + 1) throw std::invalid_argument("generator index out of range");
  std::vector<long> e(static_cast<std::size_t>(n) + 1, 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  return from_exponents(k, e);
}

bool GroupElement::is_identity() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

GroupElement GroupElement::inverse() const { return power(-1); }

GroupElement GroupElement::power(long e) const {
  std::vector<long> out;
  out.reserve(exponents_.size());
  const long reduced = mod(e, k_);
  for (int m : exponents_) out.push_back(static_cast<long>(m) * reduced);
  return from_exponents(k_, out);
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(exponents_[j]);
  }
  return out + ")";
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.k_ != b.k_ || a.exponents_.size() != b.exponents_.size())
    throw std::invalid_argument("group elements of different groups");
  std::vector<long> out;
  out.reserve(a.exponents_.size());
  for (std::size_t j = 0; j < a.exponents_.size(); ++j)
    out.push_back(static_cast<long>(a.exponents_[j]) + b.exponents_[j]);
  return GroupElement::from_exponents(a.k_, out);
}

EquationSystem::EquationSystem(int d, int k, Matrix<Rational> coefficients)
    : d_(d), k_(k), coefficients_(std::move(coefficients)) {
  if (k < 2) throw std::invalid_argument("degree k must be >= 2");
  if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
  if (coefficients_.cols() < static_cast<std::size_t>(d) + 2 ||
      coefficients_.rows() + static_cast<std::size_t>(d) + 1 != coefficients_.cols())
    throw std::invalid_argument("coefficient matrix must be (n-d) x (n+1)");
}

std::vector<SparseForm> EquationSystem::forms() const {
  std::vector<SparseForm> out;
  for (std::size_t i = 0; i < coefficients_.rows(); ++i) {
    SparseForm form;
    for (std::size_t j = 0; j < coefficients_.cols(); ++j)
      if (!coefficients_(i, j).is_zero()) form.emplace_back(static_cast<int>(j) + 1, coefficients_(i, j));
    out.push_back(std::move(form));
  }
  return out;
}

std::string EquationSystem::to_text() const {
  std::string out;
  const std::string power = "^" + std::to_string(k_);
  for (const auto& form : forms()) {
    std::string line;
    for (const auto& [var, coef] : form) {
      const bool negative = coef.sign() < 0;
      const Rational magnitude = negative ? -coef : coef;
      if (line.empty())
        line += negative ? "-" : "";
      else
        line += negative ? " - " : " + ";
      if (!magnitude.is_one()) line += magnitude.to_string() + "*";
      line += "x" + std::to_string(var) + power;
    }
    if (line.empty()) line = "0";
    out += line + " = 0\n";
  }
  return out;
}

EquationSystem build_equations(int d, int k, const std::vector<std::vector<Rational>>& table) {
  if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
  const auto ud = static_cast<std::size_t>(d);
  const std::size_t n = ud + 1 + table.size();
  Matrix<Rational> c(table.size() + 1, n + 1, Rational(0));
  for (std::size_t j = 0; j < ud + 2; ++j) c(0, j) = 1;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != ud) throw std::invalid_argument("lambda rows must have d entries");
    for (std::size_t j = 0; j < ud; ++j) c(i + 1, j) = table[i][j];
    c(i + 1, ud) = 1;
    c(i + 1, ud + 2 + i) = 1;
  }
  return EquationSystem(d, k, std::move(c));
}

EquationSystem equations(const StandardParameter& parameter, int k) {
  if (!is_standard_parameter(parameter)) throw PreconditionError("parameter is not in X_{n,d}");
  return build_equations(parameter.d(), k, parameter.rows());
}

bool smoothness_certificate(const EquationSystem& system) {
  const auto& c = system.coefficient_matrix();
  return all_minors_nonzero(c, c.rows());
}

std::vector<GroupElement> canonical_generators(int k, int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<GroupElement> out;
  for (int j = 1; j <= n + 1; ++j) out.push_back(GroupElement::generator(k, n, j));
  return out;
}

FixedLocusReport fixed_locus(const GroupElement& element, const GfmType& type) {
  require_type_match(element, type);
  std::map<int, std::vector<int>> levels;
  for (std::size_t j = 0; j < element.exponents().size(); ++j)
    levels[element.exponents()[j]].push_back(static_cast<int>(j) + 1);

  FixedLocusReport report{element, type, {}};
  for (auto& [level, indices] : levels) {
    const int count = static_cast<int>(indices.size());
    if (count < type.n + 1 - type.d) continue;
    FixedComponent component{level, indices, count + type.d - type.n - 1, count - 1, std::nullopt};
    if (component.dimension == 0) {
      Integer points;
      mpz_ui_pow_ui(points.get_mpz_t(), static_cast<unsigned long>(type.k),
                    static_cast<unsigned long>(component.n_prime));
      component.point_count = points;
    }
    report.components.push_back(std::move(component));
  }
  return report;
}

bool acts_freely(const GroupElement& element, const GfmType& type) {
  return fixed_locus(element, type).components.empty();
}

FreeActionReport subgroup_acts_freely(const std::vector<GroupElement>& generators, const GfmType& type,
                                      std::uint64_t budget) {
  type.validate();
  for (const auto& g : generators) require_type_match(g, type);

  std::set<GroupElement> seen{GroupElement::identity(type.k, type.n)};
  std::vector<GroupElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > budget)
            throw BudgetExceeded("subgroup enumeration", seen.size(), budget);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }

  for (const auto& g : seen)
    if (!g.is_identity() && !acts_freely(g, type)) return {false, g, seen.size()};
  return {true, std::nullopt, seen.size()};
}

bool bound_feasible(int p, int r, int n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  Integer pr;
  mpz_ui_pow_ui(pr.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(r));
  return Integer(n + 1) * (p - 1) <= pr - 1;
}

std::vector<GroupElement> functional_kernel_generators(int p, const std::vector<int>& c) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const auto n = c.size();
  if (n < 1) throw std::invalid_argument("functional needs n >= 1 entries");
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j)
    if (mod(c[j], p) != 0) {
      pivot = j;
      break;
    }
  if (pivot == n) throw std::invalid_argument("functional is zero mod p");
  // Inverse of c_pivot mod p by Fermat.
  long inv = 1;
  for (int e = 0; e < p - 2; ++e) inv = inv * mod(c[pivot], p) % p;

  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    std::vector<long> e(n + 1, 0);
    e[j] = 1;
    e[pivot] = -static_cast<long>(mod(c[j], p)) * inv;
    out.push_back(GroupElement::from_exponents(p, e));
  }
  return out;
}

bool is_linear_automorphism(const Matrix<CyclotomicScalar>& a, const StandardParameter& parameter, int k) {
  const auto size = static_cast<std::size_t>(parameter.n()) + 1;
  if (a.rows() != size || a.cols() != size)
    throw std::invalid_argument("matrix must be (n+1) x (n+1)");
  if (!inverse(a)) throw std::invalid_argument("matrix is singular");

  // Monomial shape: pi[r] is the column of the unique nonzero entry of row r.
  std::vector<std::size_t> pi(size);
  std::vector<bool> column_used(size, false);
  for (std::size_t r = 0; r < size; ++r) {
    std::size_t nonzero = 0;
    for (std::size_t c = 0; c < size; ++c)
      if (!a(r, c).is_zero()) {
        ++nonzero;
        pi[r] = c;
      }
    if (nonzero != 1 || column_used[pi[r]]) return false;
    column_used[pi[r]] = true;
  }

  const auto system = equations(parameter, k);
  const auto& coefficients = system.coefficient_matrix();
  const int order = a(0, pi[0]).order();
  const auto lift = [order](const Rational& x) { return CyclotomicScalar(order, x); };

  // Columns span the forms: solve span * y = transformed form.
  Matrix<CyclotomicScalar> span(size, coefficients.rows(), CyclotomicScalar(order));
  for (std::size_t i = 0; i < coefficients.rows(); ++i)
    for (std::size_t j = 0; j < size; ++j) span(j, i) = lift(coefficients(i, j));

  for (std::size_t i = 0; i < coefficients.rows(); ++i) {
    // f_i(A x) = sum_r c_{i,r} (a_{r,pi(r)} x_{pi(r)})^k.
    std::vector<CyclotomicScalar> transformed(size, CyclotomicScalar(order));
    for (std::size_t r = 0; r < size; ++r)
      transformed[pi[r]] = lift(coefficients(i, r)) * pow(a(r, pi[r]), k);
    if (solve_linear(span, transformed).status == SolveStatus::inconsistent) return false;
  }
  return true;
}

AutomorphismOrder automorphism_order(const StandardParameter& parameter, int k, std::uint64_t budget) {
  const GfmType type{parameter.d(), k, parameter.n()};
  type.validate();
  const auto report = orbit_and_stabilizer(parameter, budget);
  const std::uint64_t stabilizer = report.stabilizer.size();
  std::uint64_t kernel = 1;
  if (parameter.n() == parameter.d() + 1)
    kernel = report.group_order;
  else if (report.klein_kernel)
    kernel = 4;

  Integer k_power;
  mpz_ui_pow_ui(k_power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(parameter.n()));
  const bool linear_only =
      is_exceptional_type(type.d, type.k, type.n) || (type.d == 1 && (type.k - 1) * (type.n - 1) <= 2);
  return {Integer(static_cast<unsigned long>(stabilizer)) * k_power,
          stabilizer,
          kernel,
          stabilizer / kernel,
          k_power,
          linear_only};
}

Integer fiber_product_components(const GfmType& type) {
  type.validate();
  Integer out;
  const long exponent = static_cast<long>(type.n - type.d) * (type.d + 1) - type.n;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(type.k), static_cast<unsigned long>(exponent));
  return out;
}

LowNClassification classify_low_n(int d, int n) {
  if (n < 2) throw std::invalid_argument("classify_low_n needs n >= 2");
  if (n >= d + 1) throw PreconditionError("n >= d + 1: use the standard construction");
  if (n == d)
    return {d, n, true,
            "M is P^" + std::to_string(d) + " and H is generated by the " + std::to_string(d) +
                " coordinate multipliers t_j -> w t_j"};
  return {d, n, false, "no generalized Fermat pair of this type exists; n must equal d"};
}

}  // namespace gfm
