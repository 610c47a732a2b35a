#include "commands.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "gfm/constructions.hpp"
#include "gfm/errors.hpp"
#include "gfm/fermat_group.hpp"
#include "gfm/invariants.hpp"

namespace gfm::cli {

namespace {

using Handler = std::function<json(const json&, const CommandRequest&)>;

std::optional<json> optional_field(const json& payload, const std::string& key) {
  if (!payload.is_object()) throw std::invalid_argument("payload: expected an object");
  const auto it = payload.find(key);
  if (it == payload.end() || it->is_null()) return std::nullopt;
  return *it;
}

std::vector<DualPoint> read_points(const json& value, const std::string& path) {
  if (!value.is_array()) throw std::invalid_argument(path + ": expected an array of points");
  std::vector<DualPoint> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(read_rational_vector(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json cmd_normalize(const json& payload, const CommandRequest&) {
  const int d = read_int(require(payload, "d", "payload"), "payload.d");
  const auto points = read_points(require(payload, "points", "payload"), "payload.points");
  const auto result = normalize(Arrangement::create(d, points));
  return {{"transform", to_json(result.transform)}, {"parameter", to_json(result.parameter)}};
}

json orbit_json(const OrbitReport& report) {
  json orbit = json::array();
  for (const auto& p : report.orbit) orbit.push_back(to_json(p));
  return {{"base", to_json(report.base)},
          {"orbit", orbit},
          {"orbit_size", report.orbit.size()},
          {"stabilizer_order", report.stabilizer.size()},
          {"group_order", report.group_order},
          {"klein_kernel", report.klein_kernel}};
}

json cmd_orbit(const json& payload, const CommandRequest& request) {
  return orbit_json(orbit_and_stabilizer(read_parameter(payload, "payload"), request.budget));
}

json cmd_stabilizer(const json& payload, const CommandRequest& request) {
  const auto report = orbit_and_stabilizer(read_parameter(payload, "payload"), request.budget);
  json stabilizer = json::array();
  for (const auto& eta : report.stabilizer) stabilizer.push_back(to_json(eta));
  json out = {{"base", to_json(report.base)},
              {"stabilizer", stabilizer},
              {"stabilizer_order", report.stabilizer.size()},
              {"klein_kernel", report.klein_kernel}};
  if (report.klein_kernel) out["effective_order"] = report.stabilizer.size() / 4;
  return out;
}

json cmd_iso(const json& payload, const CommandRequest& request) {
  const auto first = read_parameter(require(payload, "first", "payload"), "payload.first");
  const auto second = read_parameter(require(payload, "second", "payload"), "payload.second");
  std::optional<int> k;
  if (auto v = optional_field(payload, "k")) k = read_int(*v, "payload.k");
  const auto result = are_isomorphic(first, second, k, request.budget);
  return {{"isomorphic", result.isomorphic},
          {"witness", result.witness ? to_json(*result.witness) : json(nullptr)},
          {"linear_category", result.linear_category}};
}

json cmd_canon(const json& payload, const CommandRequest& request) {
  return {{"canonical", to_json(canonical_representative(read_parameter(payload, "payload"), request.budget))}};
}

json system_json(const EquationSystem& system) {
  json forms = json::array();
  for (const auto& form : system.forms()) {
    json terms = json::array();
    for (const auto& [var, coef] : form) terms.push_back({{"var", var}, {"coef", to_json(coef)}});
    forms.push_back(terms);
  }
  return {{"k", system.k()},
          {"d", system.d()},
          {"n", system.n()},
          {"forms", forms},
          {"coefficient_matrix", to_json(system.coefficient_matrix())},
          {"text", system.to_text()},
          {"smooth", smoothness_certificate(system)}};
}

json cmd_equations(const json& payload, const CommandRequest&) {
  const auto parameter = read_parameter(require(payload, "parameter", "payload"), "payload.parameter");
  const int k = read_int(require(payload, "k", "payload"), "payload.k");
  return system_json(equations(parameter, k));
}

GroupElement read_element(const json& value, int k, const std::string& path) {
  if (!value.is_array()) throw std::invalid_argument(path + ": expected an exponent array");
  std::vector<long> exponents;
  for (std::size_t i = 0; i < value.size(); ++i)
    exponents.push_back(read_int(value[i], path + "[" + std::to_string(i) + "]"));
  return GroupElement::from_exponents(k, exponents);
}

json cmd_fixed_locus(const json& payload, const CommandRequest&) {
  const auto type = read_type(require(payload, "type", "payload"), "payload.type");
  const auto element = read_element(require(payload, "exponents", "payload"), type.k, "payload.exponents");
  const auto report = fixed_locus(element, type);
  json components = json::array();
  for (const auto& c : report.components) {
    json entry = {{"level", c.level},
                  {"indices", c.indices},
                  {"dimension", c.dimension},
                  {"type", {{"d", c.dimension}, {"k", type.k}, {"n", c.n_prime}}}};
    entry["point_count"] = c.point_count ? to_json(*c.point_count) : json(nullptr);
    components.push_back(entry);
  }
  return {{"element", to_json(report.element)},
          {"type", to_json(type)},
          {"components", components},
          {"acts_freely", report.components.empty()}};
}

json cmd_free(const json& payload, const CommandRequest& request) {
  const auto type = read_type(require(payload, "type", "payload"), "payload.type");
  const auto& gens = require(payload, "generators", "payload");
  if (!gens.is_array()) throw std::invalid_argument("payload.generators: expected an array");
  std::vector<GroupElement> generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    generators.push_back(read_element(gens[i], type.k, "payload.generators[" + std::to_string(i) + "]"));
  const auto report = subgroup_acts_freely(generators, type, request.budget);
  json out = {{"free", report.free},
              {"offending", report.offending ? to_json(*report.offending) : json(nullptr)},
              {"order", report.order}};
  if (auto p = optional_field(payload, "p")) {
    const int prime = read_int(*p, "payload.p");
    const int r = read_int(require(payload, "r", "payload"), "payload.r");
    out["bound_feasible"] = bound_feasible(prime, r, type.n);
  }
  return out;
}

json cmd_aut_order(const json& payload, const CommandRequest& request) {
  const auto parameter = read_parameter(require(payload, "parameter", "payload"), "payload.parameter");
  const int k = read_int(require(payload, "k", "payload"), "payload.k");
  const auto result = automorphism_order(parameter, k, request.budget);
  return {{"order", to_json(result.order)},
          {"stabilizer_order", result.stabilizer_order},
          {"kernel_order", result.kernel_order},
          {"image_order", result.image_order},
          {"k_power", to_json(result.k_power)},
          {"group", result.linear_only ? "Lin(M)" : "Aut(M)"}};
}

json cmd_verify_matrix(const json& payload, const CommandRequest&) {
  const auto parameter = read_parameter(require(payload, "parameter", "payload"), "payload.parameter");
  const int k = read_int(require(payload, "k", "payload"), "payload.k");
  int order = k;
  if (auto v = optional_field(payload, "order")) order = read_int(*v, "payload.order");
  if (order < 1) throw std::invalid_argument("payload.order: must be >= 1");
  const auto& rows = require(payload, "matrix", "payload");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("payload.matrix: expected a nonempty array");
  std::vector<std::vector<CyclotomicScalar>> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string path = "payload.matrix[" + std::to_string(r) + "]";
    if (!rows[r].is_array()) throw std::invalid_argument(path + ": expected a row array");
    std::vector<CyclotomicScalar> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      row.push_back(read_cyclotomic(rows[r][c], order, path + "[" + std::to_string(c) + "]"));
    entries.push_back(std::move(row));
  }
  const auto matrix = Matrix<CyclotomicScalar>::from_rows(entries);
  return {{"automorphism", is_linear_automorphism(matrix, parameter, k)}, {"order", order}};
}

std::vector<long> read_pluri(const json& payload) {
  std::vector<long> out{1, 2, 3};
  if (auto v = optional_field(payload, "pluri")) {
    if (!v->is_array()) throw std::invalid_argument("payload.pluri: expected an array");
    out.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      const int m = read_int((*v)[i], "payload.pluri[" + std::to_string(i) + "]");
      if (m < 1) throw std::invalid_argument("payload.pluri: entries must be >= 1");
      out.push_back(m);
    }
  }
  return out;
}

json cmd_invariants(const json& payload, const CommandRequest&) {
  const auto type = read_type(payload, "payload");
  const auto report = invariant_report(type, read_pluri(payload));
  json pluri = json::object();
  for (const auto& [m, value] : report.plurigenera) pluri[std::to_string(m)] = to_json(value);
  json out = {{"type", to_json(type)},
              {"r1", report.r1},
              {"kodaira", report.kodaira.to_string()},
              {"pa_pg", to_json(report.pa_pg)},
              {"plurigenera", pluri},
              {"label", to_string(report.label)},
              {"intermediate_vanishing", report.vanishing_note},
              {"fiber_product_components", to_json(fiber_product_components(type))}};
  out["leading_coefficient"] = report.r1 > 0 ? to_json(leading_coefficient(type)) : json(nullptr);
  return out;
}

json cmd_kummer(const json& payload, const CommandRequest&) {
  const auto alpha = read_rational_vector(require(payload, "alpha", "payload"), "payload.alpha");
  if (alpha.size() != 6) throw std::invalid_argument("payload.alpha: expected six values");
  std::array<Rational, 6> values;
  std::copy(alpha.begin(), alpha.end(), values.begin());
  const auto parameter = kummer_parameters(values);
  return {{"parameter", to_json(parameter)}, {"standard", is_standard_parameter(parameter)}};
}

json cmd_restrict_line(const json& payload, const CommandRequest&) {
  const auto parameter = read_parameter(require(payload, "parameter", "payload"), "payload.parameter");
  const auto rho = read_rational_vector(require(payload, "rho", "payload"), "payload.rho");
  bool allow_singular = false;
  if (auto v = optional_field(payload, "allow_singular")) allow_singular = read_bool(*v, "payload.allow_singular");
  const auto result = restrict_to_line(parameter, rho, allow_singular);
  json points = json::array();
  for (const auto& p : result.points) points.push_back(to_json(p));
  return {{"points", points},
          {"singular", result.singular},
          {"eta", result.eta ? to_json(*result.eta) : json(nullptr)},
          {"parameter", result.parameter ? to_json(*result.parameter) : json(nullptr)}};
}

json cmd_conic(const json& payload, const CommandRequest&) {
  const auto a = read_rational(require(payload, "a", "payload"), "payload.a");
  const auto conic = tangent_conic(a);
  const std::vector<std::vector<Rational>> canonical{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  json tangent = json::array();
  for (const auto& line : canonical) tangent.push_back(is_tangent(line, conic));
  json lines = json::array();
  if (auto ts = optional_field(payload, "t")) {
    const auto values = read_rational_vector(*ts, "payload.t");
    for (const auto& t : values) lines.push_back(to_json(tangent_line(a, t)));
  }
  return {{"coefficients", to_json(std::vector<Rational>(conic.coefficients().begin(), conic.coefficients().end()))},
          {"tangent_to_canonical", tangent},
          {"tangent_lines", lines}};
}

json cmd_conic_eta(const json& payload, const CommandRequest&) {
  const auto a = read_rational(require(payload, "a", "payload"), "payload.a");
  const auto parameter = read_parameter(require(payload, "parameter", "payload"), "payload.parameter");
  const auto result = conic_curve_parameters(a, parameter);
  json points = json::array();
  for (const auto& p : result.tangency_points) points.push_back(to_json(p));
  return {{"tangency_points", points}, {"eta", to_json(result.eta)}, {"parameter", to_json(result.parameter)}};
}

json cmd_classify_low_n(const json& payload, const CommandRequest&) {
  const int d = read_int(require(payload, "d", "payload"), "payload.d");
  const int n = read_int(require(payload, "n", "payload"), "payload.n");
  const auto result = classify_low_n(d, n);
  return {{"d", result.d},
          {"n", result.n},
          {"case", result.exists ? "projective-space" : "nonexistent"},
          {"description", result.description}};
}

json cmd_kernel(const json& payload, const CommandRequest& request) {
  const int n = read_int(require(payload, "n", "payload"), "payload.n");
  const int d = read_int(require(payload, "d", "payload"), "payload.d");
  int samples = 20;
  if (auto v = optional_field(payload, "samples")) samples = read_int(*v, "payload.samples");
  json kernel = json::array();
  for (const auto& eta : kernel_of_action(n, d, samples, request.seed, request.budget))
    kernel.push_back(to_json(eta));
  return {{"kernel", kernel}, {"order", kernel.size()}, {"proven", n == 3 && d == 1}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"aut-order", cmd_aut_order},   {"canon", cmd_canon},
      {"classify-low-n", cmd_classify_low_n},
      {"conic", cmd_conic},           {"conic-eta", cmd_conic_eta},
      {"equations", cmd_equations},   {"fixed-locus", cmd_fixed_locus},
      {"free", cmd_free},             {"invariants", cmd_invariants},
      {"iso", cmd_iso},               {"kernel", cmd_kernel},
      {"kummer", cmd_kummer},         {"normalize", cmd_normalize},
      {"orbit", cmd_orbit},           {"restrict-line", cmd_restrict_line},
      {"stabilizer", cmd_stabilizer}, {"verify-matrix", cmd_verify_matrix},
  };
  return table;
}

CommandResult error_result(const std::string& verb, const char* kind, const std::string& message, int code) {
  return {{{"verb", verb}, {"error", {{"kind", kind}, {"message", message}}}}, code};
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run(const CommandRequest& request) {
  const auto it = handlers().find(request.verb);
  if (it == handlers().end())
    return error_result(request.verb, "validation", "unknown verb \"" + request.verb + "\"", kValidation);
  try {
    return {{{"verb", request.verb}, {"result", it->second(request.payload, request)}}, kOk};
  } catch (const BudgetExceeded& e) {
    return error_result(request.verb, "budget",
                        std::string(e.what()) + " needs " + std::to_string(e.required()) +
                            " steps, budget is " + std::to_string(e.budget()),
                        kBudget);
  } catch (const PreconditionError& e) {
    return error_result(request.verb, "precondition", e.what(), kPrecondition);
  } catch (const std::invalid_argument& e) {
    return error_result(request.verb, "validation", e.what(), kValidation);
  } catch (const json::exception& e) {
    return error_result(request.verb, "validation", e.what(), kValidation);
  }
}

std::string render(const json& report, bool pretty) { return pretty ? report.dump(2) : report.dump(); }

}  // namespace gfm::cli
