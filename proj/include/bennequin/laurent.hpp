#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bennequin/error.hpp"
#include "bennequin/matrix.hpp"
#include "bennequin/rational.hpp"

namespace bennequin {

/// Integer Laurent polynomial in t. No zero coefficient is ever stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& constant) {                         // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(0, constant);
  }

  static LaurentPoly monomial(const BigInt& coefficient, int exponent) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
    return p;
  }
  static LaurentPoly t() { return monomial(1, 1); }

  /// From (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<int, long long>>& terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, BigInt(c));
    return p;
  }

  const std::map<int, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  BigInt coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  BigInt leading_coefficient() const { return terms_.empty() ? BigInt(0) : terms_.rbegin()->second; }

  LaurentPoly shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
  }

  Rational eval_at(const Rational& x) const {
    auto power = [](const Rational& base, int k) {
      Rational r = 1;
      for (int i = 0; i < k; ++i) r *= base;
      return r;
    };
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      if (e < 0 && x == 0) throw Error(ErrorCode::kInvalidArgument, "negative power evaluated at zero");
      acc += e >= 0 ? Rational(c) * power(x, e) : Rational(c) / power(x, -e);
    }
    return acc;
  }

  /// p(t^{-1}).
  LaurentPoly reflected() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
  }

  bool palindromic() const { return *this == reflected(); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }

  /// Exact quotient a / b; throws if b does not divide a in Z[t, t^{-1}].
  friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
    if (a.is_zero()) return {};
    const int shift = a.min_degree() - b.min_degree();
    std::vector<BigInt> num = a.dense(), den = b.dense();
    if (num.size() < den.size()) throw Error(ErrorCode::kInvalidArgument, "polynomial division is not exact");
    std::vector<BigInt> quo(num.size() - den.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
      const BigInt& top = num[k + den.size() - 1];
      if (top == 0) continue;
      if (top % den.back() != 0) throw Error(ErrorCode::kInvalidArgument, "polynomial division is not exact");
      quo[k] = top / den.back();
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= quo[k] * den[j];
    }
    for (const auto& c : num)
      if (c != 0) throw Error(ErrorCode::kInvalidArgument, "polynomial division is not exact");
    LaurentPoly q;
    for (std::size_t k = 0; k < quo.size(); ++k) q.add_term(static_cast<int>(k) + shift, quo[k]);
    return q;
  }

  /// Unique representative of the class {+-t^k p}: centred on exponent zero
  /// when the span is even (otherwise lowest exponent zero), then signed so
  /// that p(1) > 0, or the leading coefficient is positive when p(1) = 0.
  LaurentPoly normalized() const {
    if (is_zero()) return {};
    const int span_sum = min_degree() + max_degree();
    LaurentPoly p = (span_sum % 2 == 0) ? shifted(-span_sum / 2) : shifted(-min_degree());
    BigInt at_one = 0;
    for (const auto& [e, c] : p.terms_) at_one += c;
    if (at_one < 0 || (at_one == 0 && p.leading_coefficient() < 0)) p = -p;
    return p;
  }

  /// "exponent:coefficient" pairs, ascending exponent, space separated.
  std::string to_pairs() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(e) + ":" + c.str();
    }
    return out;
  }

  /// Human form, e.g. "t - 1 + t^-1".
  std::string to_display() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
      if (mono.empty())
        out += mag.str();
      else
        out += (mag == 1 ? "" : mag.str()) + mono;
    }
    return out;
  }

 private:
  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Coefficients from min_degree upward.
  std::vector<BigInt> dense() const {
    std::vector<BigInt> v(static_cast<std::size_t>(max_degree() - min_degree() + 1));
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - min_degree())] = c;
    return v;
  }

  std::map<int, BigInt> terms_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

namespace laurent_detail {

inline LaurentPoly cofactor_det(const LaurentMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return LaurentPoly(1);
  LaurentPoly acc;
  int sign = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
      LaurentPoly minor = cofactor_det(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
      LaurentPoly term = m(row, c) * minor;
      if (sign > 0)
        acc += term;
      else
        acc -= term;
    }
    sign = -sign;
  }
  return acc;
}

inline LaurentPoly bareiss_det(LaurentMatrix m) {
  const std::size_t n = m.rows();
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace laurent_detail

/// Determinant; cofactor expansion up to 6x6, fraction-free Bareiss beyond.
inline LaurentPoly det(const LaurentMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::kMalformedMatrix, "determinant of a non-square matrix");
  if (m.rows() == 0) return LaurentPoly(1);
  if (m.rows() <= 6) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return laurent_detail::cofactor_det(m, cols, 0);
  }
  return laurent_detail::bareiss_det(m);
}

}  // namespace bennequin
