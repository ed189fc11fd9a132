#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "negdep/core.hpp"
#include "negdep/error.hpp"
#include "negdep/scalar.hpp"

namespace negdep::io {

using json = nlohmann::json;

/// Parses a numeric JSON value; strings may carry exact rationals as "p/q".
Rational parse_rational(const json& v, const std::string& field);

json rational_to_json(const Rational& q);

/// Fixture schema: {"n": int, "pmf": [2^n entries]}. Entries are numbers or
/// "p/q" strings; unknown fields (e.g. "comment", "name") are ignored.
core::Distribution<Rational> distribution_from_json(const json& j);
json distribution_to_json(const core::Distribution<Rational>& d);

/// Fixture schema: {"n": int, "values": [2^n entries]}.
core::SetFunction<Rational> set_function_from_json(const json& j);
json set_function_to_json(const core::SetFunction<Rational>& f);

json parse_text(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace negdep::io
