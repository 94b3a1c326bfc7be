#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "bennequin/error.hpp"

namespace bennequin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

/// Accepts "p" or "p/q" with an optional sign on p.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorCode::kMalformedMatrix, "empty number in '" + std::string(text) + "'");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorCode::kMalformedMatrix, "bad number '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw Error(ErrorCode::kMalformedMatrix, "bad number '" + std::string(text) + "'");
    BigInt v(std::string(s.substr(i)));
    return s.front() == '-' ? BigInt(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw Error(ErrorCode::kMalformedMatrix, "signed denominator in '" + std::string(text) + "'");
  BigInt den = parse_int(den_text);
  if (den == 0) throw Error(ErrorCode::kMalformedMatrix, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace bennequin
