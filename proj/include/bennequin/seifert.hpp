#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"
#include "bennequin/matrix.hpp"

namespace bennequin {

/// Basis loop L_{column, occurrence}: it runs through the occurrence-th and
/// (occurrence+1)-th band of generator `column` (both 1-based).
struct LoopLabel {
  int column;
  int occurrence;
  friend bool operator==(const LoopLabel&, const LoopLabel&) = default;
};

struct SeifertData {
  IntMatrix matrix;
  int rank = 0;
  int genus = 0;
  int euler_characteristic = 1;
  std::vector<LoopLabel> loop_labels;
};

struct BandPresentation {
  int disks = 1;
  int bands = 0;
  int euler_characteristic() const { return disks - bands; }
  /// Genus of a connected surface with one boundary circle.
  int genus() const { return (1 - euler_characteristic()) / 2; }
};

inline BandPresentation band_presentation(int disks, int bands) {
  if (disks < 1 || bands < 0)
    throw Error(ErrorCode::kInvalidArgument,
                "band presentation needs disks >= 1 and bands >= 0, got " + std::to_string(disks) + ", " +
                    std::to_string(bands));
  return BandPresentation{disks, bands};
}

/// The ribbon surface in B^4 bounding K_n: three disks, 2n negative bands,
/// one band with ribbon intersections and one positive band.
inline BandPresentation family_S(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "family index must be >= 1");
  return band_presentation(3, 2 * n + 2);
}

namespace seifert_detail {

inline void require_knot_surface(const BraidWord& w) {
  if (!is_knot_closure(w))
    throw Error(ErrorCode::kMultiComponentClosure,
                "closure has " + std::to_string(closure_components(w)) + " components");
  std::vector<bool> used(static_cast<std::size_t>(w.strands()), false);
  for (int k : w.letters()) used[static_cast<std::size_t>(std::abs(k))] = true;
  for (int i = 1; i < w.strands(); ++i)
    if (!used[static_cast<std::size_t>(i)])
      throw Error(ErrorCode::kDisconnectedSurface, "generator " + std::to_string(i) + " never occurs");
}

inline int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace seifert_detail

/// Seifert matrix of the canonical surface of a closed braid: one disk per
/// strand, one half-twisted band per letter, one loop per pair of consecutive
/// bands in the same column. Entry (i, j) is lk(loop_i, loop_j^+).
///
/// Sign convention: sigma_1^3 gives signature(V + V^T) = -2.
inline SeifertData seifert_matrix(const BraidWord& w) {
  seifert_detail::require_knot_surface(w);
  const auto letters = w.letters();
  const std::size_t len = letters.size();

  // next[i]: position of the next letter in the same column, or len
  std::vector<std::size_t> next(len, len);
  std::vector<int> occurrence(len, 0);
  {
    std::vector<std::size_t> last(static_cast<std::size_t>(w.strands()), len);
    std::vector<int> count(static_cast<std::size_t>(w.strands()), 0);
    for (std::size_t i = 0; i < len; ++i) {
      auto col = static_cast<std::size_t>(std::abs(letters[i]));
      if (last[col] != len) next[last[col]] = i;
      last[col] = i;
      occurrence[i] = ++count[col];
    }
  }

  // Loops start at every letter that has a successor; basis sorted by
  // (column, occurrence).
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < len; ++i)
    if (next[i] != len) starts.push_back(i);
  std::stable_sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(letters[a]) < std::abs(letters[b]);
  });

  const std::size_t r = starts.size();
  SeifertData out;
  out.matrix = IntMatrix(r, r);
  out.rank = static_cast<int>(r);
  out.genus = out.rank / 2;
  out.euler_characteristic = 1 - 2 * out.genus;
  for (std::size_t s : starts) out.loop_labels.push_back({std::abs(letters[s]), occurrence[s]});

  auto& V = out.matrix;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      // visit each unordered pair once, ordered by word position
      std::size_t i = starts[a], j = starts[b];
      if (i > j) continue;
      const std::size_t hi = next[i], hj = next[j];
      const int ci = std::abs(letters[i]), cj = std::abs(letters[j]);
      std::int64_t vij = 0, vji = 0;
      if (i == j) {
        vij = -seifert_detail::sign(seifert_detail::sign(letters[i]) + seifert_detail::sign(letters[hi]));
        V(a, a) = vij;
        continue;
      }
      if (hi == j) {
        // consecutive loops of one column sharing band j
        if (letters[j] > 0)
          vji = 1;
        else
          vij = -1;
      } else if (j < hi && hi < hj) {
        // interleaved loops of neighbouring columns
        if (ci - cj == 1)
          vji = -1;
        else if (cj - ci == 1)
          vij = 1;
      }
      V(a, b) = vij;
      V(b, a) = vji;
    }
  }
  return out;
}

/// Genus of the canonical surface, an upper bound for the Seifert genus.
inline int seifert_genus_upper(const BraidWord& w) {
  seifert_detail::require_knot_surface(w);
  return (static_cast<int>(w.size()) - w.strands() + 1) / 2;
}

/// The hand-built 6x6 Seifert matrix V_1 of K_1.
inline IntMatrix fixture_V1() {
  return IntMatrix{
      {-2, 0, -1, 0, 0, 0},  //
      {-1, -1, 0, 0, 0, 0},  //
      {0, 1, 0, -1, 0, 0},   //
      {0, 0, 0, 1, -1, 0},   //
      {0, 0, 0, 0, 1, -1},   //
      {0, 0, 0, 0, 0, 1},
  };
}

/// M_1 = V_1 + V_1^T; M_k appends a row and column with 2 on the diagonal and
/// -1 beside it. M_{2n-1} = V_n + V_n^T.
inline IntMatrix fixture_M(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "fixture_M index must be >= 1");
  const auto v = fixture_V1();
  const IntMatrix m1 = v + v.transpose();
  const std::size_t size = static_cast<std::size_t>(k) + 5;
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = m1(i, j);
  for (std::size_t i = 6; i < size; ++i) {
    m(i, i) = 2;
    m(i, i - 1) = -1;
    m(i - 1, i) = -1;
  }
  return m;
}

}  // namespace bennequin
