#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"
#include "bennequin/laurent.hpp"
#include "bennequin/matrix.hpp"
#include "bennequin/rational.hpp"

namespace bennequin {

/// det(V - t V^T), normalized. The empty matrix gives 1.
inline LaurentPoly alexander_from_seifert(const IntMatrix& v) {
  if (!v.square()) throw Error(ErrorCode::kMalformedMatrix, "Seifert matrix must be square");
  const std::size_t r = v.rows();
  LaurentMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m(i, j) = LaurentPoly(BigInt(v(i, j))) - LaurentPoly::monomial(BigInt(v(j, i)), 1);
  return det(m).normalized();
}

/// Reduced Burau image of sigma_i^{+-1}, size (n-1) x (n-1).
inline LaurentMatrix burau_generator(int strands, int letter) {
  const std::size_t dim = static_cast<std::size_t>(strands - 1);
  LaurentMatrix m = LaurentMatrix::identity(dim);
  const std::size_t r = static_cast<std::size_t>(std::abs(letter) - 1);
  if (letter > 0) {
    if (r > 0) m(r, r - 1) = LaurentPoly::t();
    m(r, r) = -LaurentPoly::t();
    if (r + 1 < dim) m(r, r + 1) = LaurentPoly(1);
  } else {
    if (r > 0) m(r, r - 1) = LaurentPoly(1);
    m(r, r) = -LaurentPoly::monomial(1, -1);
    if (r + 1 < dim) m(r, r + 1) = LaurentPoly::monomial(1, -1);
  }
  return m;
}

inline LaurentMatrix burau_matrix(const BraidWord& w) {
  const std::size_t dim = static_cast<std::size_t>(w.strands() - 1);
  LaurentMatrix b = LaurentMatrix::identity(dim);
  for (int k : w.letters()) b = b * burau_generator(w.strands(), k);
  return b;
}

/// det(I - B(w)) (1 - t) / (1 - t^n), normalized.
inline LaurentPoly burau_alexander(const BraidWord& w) {
  if (!is_knot_closure(w))
    throw Error(ErrorCode::kMultiComponentClosure,
                "closure has " + std::to_string(closure_components(w)) + " components");
  const int n = w.strands();
  const LaurentMatrix b = burau_matrix(w);
  const LaurentMatrix i_minus_b = LaurentMatrix::identity(b.rows()) - b;
  const LaurentPoly numerator = det(i_minus_b) * (LaurentPoly(1) - LaurentPoly::t());
  const LaurentPoly denominator = LaurentPoly(1) - LaurentPoly::monomial(1, n);
  return divide_exact(numerator, denominator).normalized();
}

/// |Delta(-1)|.
inline BigInt knot_determinant(const BraidWord& w) {
  const Rational v = burau_alexander(w).eval_at(Rational(-1));
  const BigInt num = boost::multiprecision::numerator(v);
  return num < 0 ? BigInt(-num) : num;
}

}  // namespace bennequin
