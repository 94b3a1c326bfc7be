#pragma once

#include <cstddef>
#include <istream>
#include <utility>
#include <sstream>
#include <string>
#include <vector>

#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"
#include "bennequin/matrix.hpp"
#include "bennequin/rational.hpp"
#include "bennequin/seifert.hpp"

namespace bennequin {

using RationalMatrix = Matrix<Rational>;

/// R_target <- R_target + coefficient * R_source, followed by the same
/// column operation.
struct CongruenceStep {
  std::size_t target;
  std::size_t source;
  Rational coefficient;
};

struct CongruenceDiagnosis {
  std::vector<Rational> diagonal;
  int signature = 0;
  int nullity = 0;
  Rational determinant{1};
  std::vector<CongruenceStep> transcript;
};

namespace quadform_detail {

inline void require_symmetric(const RationalMatrix& s) {
  if (!s.square() || !s.symmetric()) throw Error(ErrorCode::kNonSymmetric, "matrix is not symmetric");
}

inline void add_multiple(RationalMatrix& a, std::size_t target, std::size_t source, const Rational& c) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) a(target, j) += c * a(source, j);
  for (std::size_t i = 0; i < n; ++i) a(i, target) += c * a(i, source);
}

}  // namespace quadform_detail

/// Diagonalizes a symmetric matrix by paired row/column operations in natural
/// pivot order. A zero pivot with a nonzero entry later in its row is
/// repaired by adding that row (and column) into the pivot row; rows are never
/// swapped. Every operation has determinant one, so the determinant is the
/// product of the diagonal.
inline CongruenceDiagnosis congruence_diagonalize(RationalMatrix a, bool keep_transcript = false) {
  quadform_detail::require_symmetric(a);
  const std::size_t n = a.rows();
  CongruenceDiagnosis out;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        // new pivot is c(2 a_kj + c a_jj); one of c = +-1 makes it nonzero
        Rational c = (2 * a(k, j) + a(j, j) != 0) ? Rational(1) : Rational(-1);
        quadform_detail::add_multiple(a, k, j, c);
        if (keep_transcript) out.transcript.push_back({k, j, c});
        break;
      }
    }
    const Rational pivot = a(k, k);
    if (pivot != 0) {
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        Rational c = -a(i, k) / pivot;
        quadform_detail::add_multiple(a, i, k, c);
        if (keep_transcript) out.transcript.push_back({i, k, c});
      }
    }
    out.diagonal.push_back(pivot);
    if (pivot > 0)
      ++out.signature;
    else if (pivot < 0)
      --out.signature;
    else
      ++out.nullity;
    out.determinant *= pivot;
  }
  return out;
}

/// Pivots of fraction-exact Gaussian elimination without row swaps. For a
/// symmetric matrix these are the ratios of consecutive leading principal
/// minors.
inline std::vector<Rational> gauss_pivots(RationalMatrix a) {
  quadform_detail::require_symmetric(a);
  const std::size_t n = a.rows();
  std::vector<Rational> pivots;
  pivots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = a(k, k);
    if (pivot == 0)
      throw Error(ErrorCode::kUnresolvablePivot, "zero pivot at position " + std::to_string(k + 1));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational c = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= c * a(k, j);
    }
    pivots.push_back(pivot);
  }
  return pivots;
}

inline int signature(const RationalMatrix& s) { return congruence_diagonalize(s).signature; }
inline int nullity(const RationalMatrix& s) { return congruence_diagonalize(s).nullity; }
inline Rational det_exact(const RationalMatrix& s) { return congruence_diagonalize(s).determinant; }

/// Determinant of any square matrix, by elimination with row swaps.
inline Rational determinant(RationalMatrix a) {
  if (!a.square()) throw Error(ErrorCode::kMalformedMatrix, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational c = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= c * a(k, j);
    }
  }
  return d;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline int signature(const IntMatrix& s) { return signature(to_rational(s)); }

/// Signature of V + V^T for the canonical Seifert surface of a knot closure.
inline int knot_signature(const BraidWord& w) {
  const IntMatrix v = seifert_matrix(w).matrix;
  return signature(v + v.transpose());
}

/// Matrix text: first token the size, then size*size entries "p" or "p/q".
inline RationalMatrix read_rational_matrix(std::istream& in) {
  long long size = -1;
  if (!(in >> size) || size < 0) throw Error(ErrorCode::kMalformedMatrix, "missing or negative size");
  const auto n = static_cast<std::size_t>(size);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string token;
      if (!(in >> token))
        throw Error(ErrorCode::kMalformedMatrix,
                    "expected " + std::to_string(n * n) + " entries, got " + std::to_string(i * n + j));
      m(i, j) = parse_rational(token);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kMalformedMatrix, "trailing token '" + extra + "'");
  return m;
}

inline RationalMatrix parse_rational_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_rational_matrix(in);
}

}  // namespace bennequin
