#pragma once

// JSON <-> library value conversions. Decoders throw std::invalid_argument
// with the offending JSON path in the message.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfm/arrangement.hpp"
#include "gfm/cyclotomic.hpp"
#include "gfm/fermat_group.hpp"
#include "gfm/invariants.hpp"
#include "gfm/permutation.hpp"

namespace gfm::cli {

using json = nlohmann::json;

const json& require(const json& object, const std::string& key, const std::string& path);
int read_int(const json& value, const std::string& path);
bool read_bool(const json& value, const std::string& path);

/// "p/q", "p", or a JSON integer.
Rational read_rational(const json& value, const std::string& path);
std::vector<Rational> read_rational_vector(const json& value, const std::string& path);

/// {"d": int, "n": int, "lambda": [[...], ...]}.
StandardParameter read_parameter(const json& value, const std::string& path);
/// {"d": int, "k": int, "n": int}.
GfmType read_type(const json& value, const std::string& path);
/// A rational (constant) or a list of rational coefficients in zeta_order.
CyclotomicScalar read_cyclotomic(const json& value, int order, const std::string& path);

json to_json(const Rational& value);
json to_json(const std::vector<Rational>& values);
json to_json(const StandardParameter& parameter);
json to_json(const Permutation& permutation);
json to_json(const GfmType& type);
json to_json(const GroupElement& element);
json to_json(const Matrix<Rational>& matrix);
json to_json(const CyclotomicScalar& value);
json to_json(const Integer& value);

}  // namespace gfm::cli
