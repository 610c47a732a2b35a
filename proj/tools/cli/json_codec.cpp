#include "json_codec.hpp"

#include <limits>
#include <stdexcept>

namespace gfm::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw std::invalid_argument(path + ": " + message);
}

}  // namespace

const json& require(const json& object, const std::string& key, const std::string& path) {
  if (!object.is_object()) fail(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

int read_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  const auto v = value.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail(path, "integer out of range");
  return static_cast<int>(v);
}

bool read_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) fail(path, "expected a boolean");
  return value.get<bool>();
}

Rational read_rational(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  if (!value.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

std::vector<Rational> read_rational_vector(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(read_rational(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

StandardParameter read_parameter(const json& value, const std::string& path) {
  const int d = read_int(require(value, "d", path), path + ".d");
  const int n = read_int(require(value, "n", path), path + ".n");
  const auto& table = require(value, "lambda", path);
  if (!table.is_array()) fail(path + ".lambda", "expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < table.size(); ++i)
    rows.push_back(read_rational_vector(table[i], path + ".lambda[" + std::to_string(i) + "]"));
  try {
    return StandardParameter(d, n, std::move(rows));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

GfmType read_type(const json& value, const std::string& path) {
  GfmType type{read_int(require(value, "d", path), path + ".d"), read_int(require(value, "k", path), path + ".k"),
               read_int(require(value, "n", path), path + ".n")};
  try {
    type.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return type;
}

CyclotomicScalar read_cyclotomic(const json& value, int order, const std::string& path) {
  if (value.is_array()) return CyclotomicScalar::from_coefficients(order, read_rational_vector(value, path));
  return CyclotomicScalar(order, read_rational(value, path));
}

json to_json(const Rational& value) { return value.to_string(); }

json to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

json to_json(const StandardParameter& parameter) {
  json rows = json::array();
  for (const auto& row : parameter.rows()) rows.push_back(to_json(row));
  return {{"d", parameter.d()}, {"n", parameter.n()}, {"lambda", rows}};
}

json to_json(const Permutation& permutation) { return permutation.images(); }

json to_json(const GfmType& type) { return {{"d", type.d}, {"k", type.k}, {"n", type.n}}; }

json to_json(const GroupElement& element) { return element.exponents(); }

json to_json(const Matrix<Rational>& matrix) {
  json out = json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const auto row = matrix.row(r);
    out.push_back(to_json(std::vector<Rational>(row.begin(), row.end())));
  }
  return out;
}

json to_json(const CyclotomicScalar& value) {
  return {{"order", value.order()}, {"coefficients", to_json(value.coefficients())}};
}

// Integers beyond 64 bits fall back to decimal strings.
json to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

}  // namespace gfm::cli
