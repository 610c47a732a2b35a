#include "gfm/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

using Vec = std::vector<Rational>;

Vec cross(const Vec& u, const Vec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rational dot(const Vec& u, const Vec& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Rational det3(const Vec& a, const Vec& b, const Vec& c) { return dot(a, cross(b, c)); }

Rational quadratic(const Matrix<Rational>& m, const Vec& v) { return dot(v, m * v); }

void require_plane_vector(const Vec& v, const char* what) {
  if (v.size() != 3) throw std::invalid_argument(std::string(what) + " must have 3 coordinates");
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    throw std::invalid_argument(std::string(what) + " is the zero vector");
}

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw PreconditionError(what);
  return num / den;
}

}  // namespace

bool is_smooth(const std::array<Rational, 6>& c) {
  const Rational h4 = c[3] / 2, h5 = c[4] / 2, h6 = c[5] / 2;
  const auto m = Matrix<Rational>::from_rows({{c[0], h4, h5}, {h4, c[1], h6}, {h5, h6, c[2]}});
  return !determinant(m).is_zero();
}

Conic Conic::create(const std::array<Rational, 6>& coefficients) {
  if (!is_smooth(coefficients)) throw PreconditionError("conic is singular");
  return Conic(coefficients);
}

Matrix<Rational> Conic::matrix() const {
  const auto& c = coefficients_;
  const Rational h4 = c[3] / 2, h5 = c[4] / 2, h6 = c[5] / 2;
  return Matrix<Rational>::from_rows({{c[0], h4, h5}, {h4, c[1], h6}, {h5, h6, c[2]}});
}

Matrix<Rational> Conic::adjugate() const {
  const auto m = matrix();
  Matrix<Rational> adj(3, 3, Rational(0));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      // adj(r, c) is the (c, r) cofactor.
      const std::size_t r0 = c == 0 ? 1 : 0, r1 = c == 2 ? 1 : 2;
      const std::size_t c0 = r == 0 ? 1 : 0, c1 = r == 2 ? 1 : 2;
      const Rational minor = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      adj(r, c) = (r + c) % 2 == 0 ? minor : -minor;
    }
  return adj;
}

Rational Conic::evaluate(const std::vector<Rational>& point) const {
  require_plane_vector(point, "point");
  return quadratic(matrix(), point);
}

StandardParameter kummer_parameters(const std::array<Rational, 6>& alpha) {
  const std::set<Rational> distinct(alpha.begin(), alpha.end());
  if (distinct.size() != alpha.size()) throw std::invalid_argument("branch values alpha must be distinct");
  const auto entry = [&](std::size_t i, std::size_t j) {
    return (alpha[i] - alpha[3]) * (alpha[2] - alpha[j]) / ((alpha[i] - alpha[j]) * (alpha[2] - alpha[3]));
  };
  return StandardParameter(2, 5, {{entry(0, 4), entry(1, 4)}, {entry(0, 5), entry(1, 5)}});
}

LineRestriction restrict_to_line(const StandardParameter& parameter, const std::vector<Rational>& rho,
                                 bool allow_singular) {
  if (parameter.d() != 2) throw std::invalid_argument("line restriction needs a parameter in X_{n,2}");
  require_plane_vector(rho, "line");
  if (!is_standard_parameter(parameter)) throw PreconditionError("parameter is not in X_{n,2}");

  auto lines = dual_points_of(parameter);
  LineRestriction out;
  for (std::size_t j = 0; j < lines.size(); ++j) {
    const auto point = cross(lines[j], rho);
    if (point[0].is_zero() && point[1].is_zero() && point[2].is_zero())
      throw PreconditionError("line coincides with branch line " + std::to_string(j + 1));
    out.points.push_back(projective_normalize(point));
  }
  lines.push_back(rho);
  out.singular = !is_general_position(lines, 2);
  if (out.singular && !allow_singular)
    throw PreconditionError("line is not in general position with the branch lines");

  const Rational &r1 = rho[0], &r2 = rho[1], &r3 = rho[2];
  try {
    std::vector<Rational> eta;
    eta.push_back(checked_div(r2 * (r3 - r1), r1 * (r3 - r2), "eta denominator vanishes"));
    for (const auto& row : parameter.rows())
      eta.push_back(checked_div(r2 * (row[0] * r3 - r1), r1 * (row[1] * r3 - r2), "eta denominator vanishes"));
    std::vector<std::vector<Rational>> table;
    for (const auto& e : eta) table.push_back({e});
    StandardParameter curve(1, parameter.n(), std::move(table));
    if (is_standard_parameter(curve)) out.parameter = curve;
    out.eta = std::move(eta);
  } catch (const PreconditionError&) {
    if (!out.singular) throw;
  }
  return out;
}

Conic tangent_conic(const Rational& a) {
  if (a.is_zero() || a == Rational(2)) throw PreconditionError("a must avoid 0 and 2");
  const Rational b = Rational(2) - a;
  return Conic::create({Rational(4), a * a, b * b, Rational(4) * a, Rational(4) * b, Rational(-2) * a * b});
}

bool is_tangent(const std::vector<Rational>& rho, const Conic& conic) {
  require_plane_vector(rho, "line");
  return quadratic(conic.adjugate(), rho).is_zero();
}

std::vector<Rational> tangency_point(const std::vector<Rational>& rho, const Conic& conic) {
  if (!is_tangent(rho, conic)) throw PreconditionError("line is not tangent to the conic");
  return projective_normalize(conic.adjugate() * rho);
}

std::vector<Rational> tangent_line(const Rational& a, const Rational& t) {
  const auto dual = tangent_conic(a).adjugate();
  // Lines s e_1 + u, u = (0, 1, t), on the dual conic; e_1 already is one.
  const Vec e1{Rational(1), Rational(0), Rational(0)};
  const Vec u{Rational(0), Rational(1), t};
  const Rational slope = dot(e1, dual * u);
  if (slope.is_zero()) throw PreconditionError("parameter t gives back the line t1 = 0");
  const Rational s = -quadratic(dual, u) / (Rational(2) * slope);
  return {s, Rational(1), t};
}

Rational conic_cross_ratio(const std::vector<Rational>& base, const std::vector<Rational>& base_tangent,
                           const std::vector<std::vector<Rational>>& p123, const std::vector<Rational>& x) {
  if (p123.size() != 3) throw std::invalid_argument("cross ratio needs three anchor points");
  const auto pencil_line = [&](const Vec& p) {
    const auto line = cross(base, p);
    const bool at_base = line[0].is_zero() && line[1].is_zero() && line[2].is_zero();
    return at_base ? base_tangent : line;
  };
  Vec w(3, Rational(0));
  for (std::size_t i = 0; i < 3; ++i)
    if (!base[i].is_zero()) {
      w[i] = 1;
      break;
    }
  const auto l1 = pencil_line(p123[0]), l2 = pencil_line(p123[1]), l3 = pencil_line(p123[2]);
  const auto lx = pencil_line(x);
  const auto bracket = [&](const Vec& a, const Vec& b) { return det3(a, b, w); };
  const Rational den = bracket(lx, l1) * bracket(l3, l2);
  if (den.is_zero()) throw PreconditionError("cross ratio of coincident points");
  return bracket(lx, l2) * bracket(l3, l1) / den;
}

ConicCurve conic_curve_parameters(const Rational& a, const StandardParameter& parameter) {
  if (parameter.d() != 2) throw std::invalid_argument("conic curves need a parameter in X_{n,2}");
  if (!is_standard_parameter(parameter)) throw PreconditionError("parameter is not in X_{n,2}");
  const auto conic = tangent_conic(a);
  const auto lines = dual_points_of(parameter);

  ConicCurve out{{}, {}, StandardParameter(1, 3, {{Rational(-1)}})};
  for (std::size_t j = 0; j < lines.size(); ++j) {
    if (!is_tangent(lines[j], conic))
      throw PreconditionError("line " + std::to_string(j + 1) + " is not tangent to the conic");
    out.tangency_points.push_back(tangency_point(lines[j], conic));
  }
  const auto& t = out.tangency_points;
  std::vector<std::vector<Rational>> table;
  for (std::size_t j = 3; j < t.size(); ++j) {
    out.eta.push_back(conic_cross_ratio(t[0], lines[0], {t[0], t[1], t[2]}, t[j]));
    table.push_back({out.eta.back()});
  }
  out.parameter = StandardParameter(1, parameter.n(), std::move(table));
  return out;
}

}  // namespace gfm
