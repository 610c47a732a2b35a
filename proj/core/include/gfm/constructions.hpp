#pragma once

// Explicit families of generalized Fermat surfaces and curves: Kummer
// surfaces, restrictions to lines in P^2, and arrangements of lines tangent
// to a conic.

#include <array>
#include <optional>
#include <vector>

#include "gfm/arrangement.hpp"

namespace gfm {

/// c1 t1^2 + c2 t2^2 + c3 t3^2 + c4 t1 t2 + c5 t1 t3 + c6 t2 t3.
class Conic {
 public:
  /// Throws PreconditionError when the conic is singular.
  static Conic create(const std::array<Rational, 6>& coefficients);

  const std::array<Rational, 6>& coefficients() const noexcept { return coefficients_; }
  /// Symmetric 3x3 matrix of the quadratic form.
  Matrix<Rational> matrix() const;
  /// Adjugate of matrix(): the dual conic.
  Matrix<Rational> adjugate() const;
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  explicit Conic(const std::array<Rational, 6>& coefficients) : coefficients_(coefficients) {}
  std::array<Rational, 6> coefficients_;
};

bool is_smooth(const std::array<Rational, 6>& coefficients);

/// The point of X_{5,2} of the Kummer surface of y^2 = prod (x - alpha_i).
/// Throws std::invalid_argument for repeated alphas.
StandardParameter kummer_parameters(const std::array<Rational, 6>& alpha);

struct LineRestriction {
  /// Points L_j(Lambda) cap L in P^2, projectively normalized.
  std::vector<std::vector<Rational>> points;
  /// The added line breaks general position.
  bool singular;
  /// (eta_1, ..., eta_{n-2}); absent only for singular lines where the
  /// formula divides by zero.
  std::optional<std::vector<Rational>> eta;
  /// eta as a point of X_{n,1}, present when eta is and lies in X_{n,1}.
  std::optional<StandardParameter> parameter;
};

/// Curve cut out over the line rho_1 t_1 + rho_2 t_2 + rho_3 t_3 = 0 on the
/// surface of Lambda in X_{n,2}. Throws PreconditionError when the augmented
/// arrangement is not in general position, unless allow_singular is set, and
/// always when the line is one of the branch lines.
LineRestriction restrict_to_line(const StandardParameter& parameter, const std::vector<Rational>& rho,
                                 bool allow_singular = false);

/// The conic tangent to t1 = 0, t2 = 0, t3 = 0 and t1 + t2 + t3 = 0 with
/// coefficients (4, a^2, (2-a)^2, 4a, 4(2-a), -2a(2-a)). Throws
/// PreconditionError for a in {0, 2}.
Conic tangent_conic(const Rational& a);

/// rho^T adj(Q) rho = 0.
bool is_tangent(const std::vector<Rational>& rho, const Conic& conic);

/// adj(Q) rho, normalized. Throws PreconditionError if the line is not tangent.
std::vector<Rational> tangency_point(const std::vector<Rational>& rho, const Conic& conic);

/// A tangent line (s, 1, t) to tangent_conic(a), rational in t. Throws
/// PreconditionError when t hits the line t1 = 0 itself.
std::vector<Rational> tangent_line(const Rational& a, const Rational& t);

/// Cross ratio of four points on a smooth conic seen from `base` (itself on
/// the conic): the value at x of the coordinate sending p1, p2, p3 to
/// infinity, 0, 1. Points equal to `base` use the tangent line `base_tangent`.
Rational conic_cross_ratio(const std::vector<Rational>& base, const std::vector<Rational>& base_tangent,
                           const std::vector<std::vector<Rational>>& p123, const std::vector<Rational>& x);

struct ConicCurve {
  /// Tangency points of L_1(Lambda), ..., L_{n+1}(Lambda).
  std::vector<std::vector<Rational>> tangency_points;
  /// Coordinates of the tangency points 4..n+1 once points 1, 2, 3 are sent
  /// to infinity, 0, 1.
  std::vector<Rational> eta;
  StandardParameter parameter;
};

/// Requires every line of Lambda in X_{n,2} to be tangent to tangent_conic(a);
/// the PreconditionError names the first line that is not.
ConicCurve conic_curve_parameters(const Rational& a, const StandardParameter& parameter);

}  // namespace gfm
