#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace negdep {

/// Exact arithmetic backend. Any checker verdict produced with this type is
/// free of rounding artifacts; certificates re-verify with zero tolerance.
using Rational = boost::multiprecision::mpq_rational;

/// Per-backend comparison tolerances. The double backend uses 1e-12 for
/// equality-style predicates and 1e-9 for LP feasibility decisions; the
/// rational backend is exact everywhere.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double eq_tol() { return 1e-12; }
  static double lp_tol() { return 1e-9; }
  static double ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_rational(const Rational& q) { return q.convert_to<double>(); }
  static const char* name() { return "float"; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational eq_tol() { return Rational(0); }
  static Rational lp_tol() { return Rational(0); }
  static Rational ratio(long long num, long long den) { return Rational(num) / Rational(den); }
  static Rational from_rational(const Rational& q) { return q; }
  static const char* name() { return "exact"; }
};

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

template <class S>
bool leq_tol(const S& a, const S& b) {
  return a <= b + scalar_traits<S>::eq_tol();
}

template <class S>
bool eq_tol(const S& a, const S& b) {
  S d = a - b;
  if (d < 0) d = -d;
  return d <= scalar_traits<S>::eq_tol();
}

inline std::string scalar_repr(double v) { return std::to_string(v); }
inline std::string scalar_repr(const Rational& v) { return v.str(); }

}  // namespace negdep
