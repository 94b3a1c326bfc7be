#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"
#include "bennequin/garside.hpp"

namespace bennequin {

/// sigma_1^{b} sigma_2^{-a}.
struct Type1Block {
  int b = 1;
  int a = 0;
  friend bool operator==(const Type1Block&, const Type1Block&) = default;
  friend auto operator<=>(const Type1Block&, const Type1Block&) = default;
};

/// A 3-braid conjugate to h^d * prod sigma_1^{b_i} sigma_2^{-a_i}, where h is
/// the full twist (sigma_1 sigma_2)^3.
struct MurasugiType1 {
  int d = 1;
  std::vector<Type1Block> blocks;
  /// Conjugates the input word onto word().
  ConjugacyCertificate certificate{BraidWord(3)};

  BraidWord word() const { return type1_word(d, blocks); }

  int exponent_sum() const {
    int e = 6 * d;
    for (const auto& blk : blocks) e += blk.b - blk.a;
    return e;
  }

  static BraidWord type1_word(int d, const std::vector<Type1Block>& blocks) {
    std::vector<int> letters;
    for (int i = 0; i < 3 * d; ++i) letters.insert(letters.end(), {1, 2});
    for (const auto& blk : blocks) {
      letters.insert(letters.end(), static_cast<std::size_t>(blk.b), 1);
      letters.insert(letters.end(), static_cast<std::size_t>(blk.a), -2);
    }
    return BraidWord(3, std::move(letters));
  }
};

struct Type1Options {
  std::size_t candidate_cap = 100'000;
  GarsideOptions garside{};
};

struct Type1Search {
  std::optional<MurasugiType1> match;
  std::size_t candidates_tested = 0;
  /// Candidates whose super summit infimum and supremum agreed with the input
  /// but which were not conjugate to it.
  std::size_t near_misses = 0;
};

namespace threebraid_detail {

inline void require_three_strands(const BraidWord& w) {
  if (w.strands() != 3)
    throw Error(ErrorCode::kInvalidArgument, "Murasugi recognition needs 3 strands, got " + std::to_string(w.strands()));
}

/// Calls visit(parts) for every composition of total into k parts, each part
/// >= lower. Stops early when visit returns true.
inline bool for_each_composition(int total, int k, int lower, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<std::size_t>(k), lower);
  int rest = total - k * lower;
  if (rest < 0) return false;
  std::function<bool(std::size_t, int)> rec = [&](std::size_t idx, int remaining) -> bool {
    if (idx + 1 == parts.size()) {
      parts[idx] = lower + remaining;
      return visit(parts);
    }
    for (int extra = 0; extra <= remaining; ++extra) {
      parts[idx] = lower + extra;
      if (rec(idx + 1, remaining - extra)) return true;
    }
    return false;
  };
  return rec(0, rest);
}

/// The block sequence is read cyclically (h is central), so only the
/// lexicographically least rotation is tried.
inline bool least_rotation(const std::vector<Type1Block>& blocks) {
  for (std::size_t r = 1; r < blocks.size(); ++r) {
    std::vector<Type1Block> rotated(blocks);
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(r), rotated.end());
    if (rotated < blocks) return false;
  }
  return true;
}

}  // namespace threebraid_detail

/// Searches h^d prod sigma_1^{b_i} sigma_2^{-a_i} (d >= 1, b_i >= 1, a_i >= 0,
/// at least one block) conjugate to w. Bounds: 1 <= d <= 1 + |w|/6, and the
/// block letters total at most |w| + 6d; exponent-sum balance fixes sum(a_i).
/// Candidates are filtered by closure cycle type and super summit
/// infimum/supremum before the conjugacy lookup.
inline Type1Search type1_search(const BraidWord& w, const Type1Options& options = {}) {
  threebraid_detail::require_three_strands(w);
  Type1Search out;
  const int len = static_cast<int>(w.size());
  const int e = exponent_sum(w);
  const auto cycle_type = closure_permutation(w).cycle_type();
  const SuperSummitSet sss(w, options.garside);
  const int d_max = 1 + len / 6;

  for (int d = 1; d <= d_max && !out.match; ++d) {
    const int letter_bound = len + 6 * d;
    // sum_a = 6d + sum_b - e and sum_a + sum_b <= letter_bound
    for (int sum_b = 1; 2 * sum_b + 6 * d - e <= letter_bound && !out.match; ++sum_b) {
      const int sum_a = 6 * d + sum_b - e;
      if (sum_a < 0) continue;
      for (int k = 1; k <= sum_b && !out.match; ++k) {
        threebraid_detail::for_each_composition(sum_b, k, 1, [&](const std::vector<int>& bs) {
          return threebraid_detail::for_each_composition(sum_a, k, 0, [&](const std::vector<int>& as) {
            std::vector<Type1Block> blocks(static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = {bs[i], as[i]};
            if (!threebraid_detail::least_rotation(blocks)) return false;
            if (++out.candidates_tested > options.candidate_cap)
              throw Error(ErrorCode::kSearchBudgetExhausted,
                          "Murasugi search exceeded " + std::to_string(options.candidate_cap) + " candidates");
            const BraidWord candidate = MurasugiType1::type1_word(d, blocks);
            if (closure_permutation(candidate).cycle_type() != cycle_type) return false;
            const SummitResult summit = to_super_summit(normal_form(candidate));
            if (summit.form.infimum != sss.infimum() || summit.form.supremum() != sss.supremum()) return false;
            auto cert = sss.find_summit(summit);
            if (!cert) {
              ++out.near_misses;
              return false;
            }
            if (!verify_certificate(w, candidate, cert->conjugator))
              throw Error(ErrorCode::kInvariantViolation, "Murasugi certificate failed verification");
            out.match = MurasugiType1{d, std::move(blocks), std::move(*cert)};
            return true;
          });
        });
      }
    }
  }
  return out;
}

inline std::optional<MurasugiType1> type1_recognize(const BraidWord& w, const Type1Options& options = {}) {
  return type1_search(w, options).match;
}

/// s = writhe - 2 for closures of Type 1 braids with d > 0 and some a_i > 0.
/// The writhe of a closed braid diagram is its exponent sum.
inline std::optional<int> s_invariant_type1(const BraidWord& w, const Type1Options& options = {}) {
  threebraid_detail::require_three_strands(w);
  if (!is_knot_closure(w))
    throw Error(ErrorCode::kMultiComponentClosure,
                "closure has " + std::to_string(closure_components(w)) + " components");
  auto type1 = type1_recognize(w, options);
  if (!type1 || type1->d <= 0) return std::nullopt;
  const bool some_a = std::any_of(type1->blocks.begin(), type1->blocks.end(), [](const Type1Block& b) { return b.a > 0; });
  if (!some_a) return std::nullopt;
  return exponent_sum(w) - 2;
}

/// Sufficient condition for psi != 0: s - 1 = writhe - strands. False means
/// the criterion is inconclusive.
inline bool psi_nonzero(const BraidWord& w, int s) { return s - 1 == exponent_sum(w) - w.strands(); }

struct TransverseFlags {
  bool right_veering = false;
  bool theta_nonzero = false;
  bool contact_nonzero = false;
  friend bool operator==(const TransverseFlags&, const TransverseFlags&) = default;
};

/// All three hold when the closure realizes sl = s - 1; false is inconclusive.
inline TransverseFlags theta_and_contact_flags(const BraidWord& w, int s) {
  const bool sharp = self_linking(w) == s - 1;
  return TransverseFlags{sharp, sharp, sharp};
}

}  // namespace bennequin
