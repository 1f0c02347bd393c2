#pragma once

// Exact rational scalar used for all coordinates and squared lengths.
// boost::multiprecision::cpp_rational keeps values in lowest terms with a
// positive denominator, so equality and ordering are exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace trigeo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p/q" in lowest terms, or a bare integer when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

// Parses "p", "-p", or "p/q" (q > 0 after normalization). Returns nullopt on
// malformed input, including a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(BigInt(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt(std::string(num)), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace trigeo
