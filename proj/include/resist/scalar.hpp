#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "resist/rational.hpp"

namespace resist {

/// Per-backend scalar semantics. A computation never mixes backends; the
/// scalar type of a matrix fixes the backend for everything derived from it.
///
/// The float backend compares with relative tolerance 1e-9 and absolute
/// floor 1e-12; the exact backend requires literal equality.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* backend_name = "exact";

  static Rational ratio(long long p, long long q) { return Rational(Integer(p), Integer(q)); }
  static Rational from_integer(const Integer& v) { return Rational(v); }
  static Rational pow2(long long k) { return rational_pow2(k); }

  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }

  static double residual(const Rational& a, const Rational& b) {
    if (a == b) return 0.0;
    double da = a.to_double(), db = b.to_double();
    double diff = std::abs((a - b).to_double());
    return diff / std::max({1.0, std::abs(da), std::abs(db)});
  }

  static std::string str(const Rational& a) { return a.str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static constexpr const char* backend_name = "float";
  static constexpr double rel_tol = 1e-9;
  static constexpr double abs_floor = 1e-12;

  static double ratio(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double from_integer(const Integer& v) { return v.convert_to<double>(); }
  static double pow2(long long k) { return std::ldexp(1.0, static_cast<int>(k)); }

  static bool equal(double a, double b) {
    return std::abs(a - b) <= std::max(abs_floor, rel_tol * std::max(std::abs(a), std::abs(b)));
  }
  static bool is_zero(double a) { return a == 0.0; }

  static double residual(double a, double b) {
    double diff = std::abs(a - b);
    if (diff <= abs_floor) return 0.0;
    return diff / std::max({1.0, std::abs(a), std::abs(b)});
  }

  static std::string str(double a) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a);
    return std::string(buf, ptr);
  }
};

}  // namespace resist
