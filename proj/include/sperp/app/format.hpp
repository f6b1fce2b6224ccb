#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sperp/plethysm.hpp"
#include "sperp/symfunc.hpp"

namespace sperp::app {

/// Canonical text: "s[4] + s[2,2]", "3*s[2] - 1/2*s[1,1]", "-s[1]", "0".
/// Terms follow the canonical order; the text re-parses to the same value.
std::string to_text(const SymFunc& f);

/// {"input", "method", "basis", "terms": [{"partition": [...], "coeff": "p/q"}], "millis"}.
nlohmann::json to_json(const SymFunc& f, const std::string& input, const std::string& method, double millis);
/// Inverse of to_json on its "basis" and "terms" fields.
SymFunc from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string checksum(const SymFunc& f);

/// "x1^2*x2 + 2*x1*x2^2"; "0" when empty.
std::string to_text(const Monomials& m);
nlohmann::json to_json(const Monomials& m);

/// Quotes a CSV field when needed.
std::string csv_field(const std::string& s);

}  // namespace sperp::app
