#include "negdep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace negdep::io {

Rational parse_rational(const json& v, const std::string& field) {
  try {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(s);
      Rational num(s.substr(0, slash));
      Rational den(s.substr(slash + 1));
      require(den != 0, Errc::parse, "zero denominator in field '" + field + "'");
      return num / den;
    }
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) {
      // Doubles are dyadic rationals; the conversion is exact.
      double d = v.get<double>();
      Rational q;
      boost::multiprecision::mpq_rational tmp(d);
      q = tmp;
      return q;
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::parse, "malformed numeric value in field '" + field + "'");
  }
  throw Error(Errc::parse, "field '" + field + "' must be a number or \"p/q\" string");
}

json rational_to_json(const Rational& q) {
  if (denominator(q) == 1) {
    // Small integers serialize as plain numbers.
    if (q >= -1000000 && q <= 1000000) return json(q.convert_to<long long>());
  }
  return json(q.str());
}

namespace {

std::vector<Rational> parse_table(const json& j, const std::string& field, int n) {
  require(j.contains(field), Errc::parse, "missing field '" + field + "'");
  const json& arr = j.at(field);
  require(arr.is_array(), Errc::parse, "field '" + field + "' must be an array");
  require(arr.size() == (std::size_t(1) << n), Errc::parse,
          "field '" + field + "' must have 2^n entries");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const json& v : arr) out.push_back(parse_rational(v, field));
  return out;
}

int parse_n(const json& j) {
  require(j.is_object(), Errc::parse, "fixture must be a JSON object");
  require(j.contains("n"), Errc::parse, "missing field 'n'");
  require(j.at("n").is_number_integer(), Errc::parse, "field 'n' must be an integer");
  int n = j.at("n").get<int>();
  require(n >= 0 && n <= core::kMaxGroundSize, Errc::parse, "field 'n' out of range [0,20]");
  return n;
}

}  // namespace

core::Distribution<Rational> distribution_from_json(const json& j) {
  int n = parse_n(j);
  try {
    return core::Distribution<Rational>(n, parse_table(j, "pmf", n));
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument)
      throw Error(Errc::parse, std::string("field 'pmf' invalid: ") + e.what());
    throw;
  }
}

json distribution_to_json(const core::Distribution<Rational>& d) {
  json arr = json::array();
  for (const Rational& v : d.pmf) arr.push_back(rational_to_json(v));
  return json{{"n", d.n}, {"pmf", arr}};
}

core::SetFunction<Rational> set_function_from_json(const json& j) {
  int n = parse_n(j);
  try {
    return core::SetFunction<Rational>(n, parse_table(j, "values", n));
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument)
      throw Error(Errc::parse, std::string("field 'values' invalid: ") + e.what());
    throw;
  }
}

json set_function_to_json(const core::SetFunction<Rational>& f) {
  json arr = json::array();
  for (const Rational& v : f.values) arr.push_back(rational_to_json(v));
  return json{{"n", f.n}, {"values", arr}};
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Errc::parse, "malformed JSON input");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::parse, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace negdep::io
