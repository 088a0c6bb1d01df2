#pragma once

// Scalar backends for hypercomplex coefficients.
//
// Two backends are supported:
//   Rational  exact arithmetic over Q (GMP mpq_class), compared with ==
//   double    IEEE binary64, compared through a Tolerance
//
// Everything that needs to know which backend it is dealing with goes
// through scalar_traits<S>.

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace hyper {

using Rational = mpq_class;

/// Raised for malformed numeric text ("1/0", "abc", ...).
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr std::string_view name = "exact";
  static constexpr bool exact = true;

  static Rational from_int(long v) { return Rational(v); }
  static Rational half() { return Rational(1, 2); }
  static Rational abs(const Rational& v) { return ::abs(v); }

  /// "p/q" when q != 1, otherwise "p".
  static std::string to_string(Rational v) {
    v.canonicalize();
    return v.get_str();
  }

  /// Accepts "p", "-p", "p/q"; the result is canonical.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view part) {
      if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
      return !part.empty() &&
             std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (slash == std::string::npos) {
      if (!digits_ok(s)) throw parse_error("malformed rational '" + s + "'");
    } else {
      std::string_view sv(s);
      auto num = sv.substr(0, slash), den = sv.substr(slash + 1);
      if (!digits_ok(num) || den.empty() || !std::all_of(den.begin(), den.end(), [](char c) {
            return c >= '0' && c <= '9';
          }))
        throw parse_error("malformed rational '" + s + "'");
    }
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw parse_error("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  }
};

template <>
struct scalar_traits<double> {
  static constexpr std::string_view name = "binary64";
  static constexpr bool exact = false;

  static double from_int(long v) { return static_cast<double>(v); }
  static double half() { return 0.5; }
  static double abs(double v) { return std::fabs(v); }

  /// Shortest representation that round-trips.
  static std::string to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
  }

  /// Accepts anything the exact parser accepts plus decimal notation.
  static double parse(std::string_view text) {
    if (text.find('/') != std::string_view::npos) {
      return scalar_traits<Rational>::parse(text).get_d();
    }
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
      throw parse_error("malformed number '" + std::string(text) + "'");
    return v;
  }
};

template <class S>
concept Scalar = requires { scalar_traits<S>::exact; };

/// Comparison policy for the binary64 backend.
struct Tolerance {
  double relative = 1e-9;
  double absolute_floor = 1e-12;

  /// Largest admissible |a - b| when the compared values have magnitude up to `scale`.
  [[nodiscard]] double bound(double scale) const {
    return std::max(absolute_floor, relative * std::max(1.0, scale));
  }
};

}  // namespace hyper
