#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "tribkit/mat3.hpp"

namespace tribkit {

/// A scalar term or a matrix term.
using Value = std::variant<BigInt, Mat3>;

std::string to_string(const Value& v);

/// Integers become decimal strings; matrices become row-major nested arrays
/// of decimal strings.
nlohmann::json to_json(const BigInt& v);
nlohmann::json to_json(const Mat3& m);
nlohmann::json to_json(const Value& v);

}  // namespace tribkit
