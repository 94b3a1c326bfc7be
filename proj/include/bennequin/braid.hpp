#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "bennequin/error.hpp"

namespace bennequin {

/// A word in the Artin generators of B_n. Letter +i is sigma_i, -i is its
/// inverse. Values are immutable: every move returns a new word.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
      throw Error(ErrorCode::kBadStrandCount, "strand count must be >= 1, got " + std::to_string(strands_));
    for (int k : letters_) {
      if (k == 0) throw Error(ErrorCode::kZeroToken, "letter 0 is not a generator");
      if (std::abs(k) > strands_ - 1)
        throw Error(ErrorCode::kGeneratorOutOfRange,
                    "generator " + std::to_string(k) + " out of range for " + std::to_string(strands_) +
                        " strands");
    }
  }

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

namespace detail {

inline void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw Error(ErrorCode::kStrandMismatch, "words have " + std::to_string(a.strands()) + " and " +
                                                std::to_string(b.strands()) + " strands");
}

inline bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

/// Parses whitespace/comma separated tokens "k" or "k^m" (m >= 1 copies of k).
inline BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1)
    throw Error(ErrorCode::kBadStrandCount, "strand count must be >= 1, got " + std::to_string(strands));
  std::vector<int> letters;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    if (end == pos) break;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view base = token;
    long long reps = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      base = token.substr(0, caret);
      std::string_view exponent = token.substr(caret + 1);
      long long k = 0;
      if (!detail::parse_int(base, k) || !detail::parse_int(exponent, reps) || reps < 1 ||
          exponent.front() == '-' || exponent.front() == '+')
        throw Error(ErrorCode::kMalformedCaret, "bad repetition token '" + std::string(token) + "'");
    }
    long long k = 0;
    if (!detail::parse_int(base, k))
      throw Error(ErrorCode::kMalformedToken, "not an integer: '" + std::string(token) + "'");
    if (k == 0) throw Error(ErrorCode::kZeroToken, "letter 0 is not a generator");
    if (std::llabs(k) > strands - 1)
      throw Error(ErrorCode::kGeneratorOutOfRange,
                  "generator " + std::to_string(k) + " out of range for " + std::to_string(strands) + " strands");
    letters.insert(letters.end(), static_cast<std::size_t>(reps), static_cast<int>(k));
  }
  return BraidWord(strands, std::move(letters));
}

/// Canonical text: one signed integer per token, single spaces.
inline std::string to_string(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

inline int exponent_sum(const BraidWord& w) {
  return std::accumulate(w.letters().begin(), w.letters().end(), 0,
                         [](int acc, int k) { return acc + (k > 0 ? 1 : -1); });
}

/// sl of the closed braid viewed as a transverse link: -n + a.
inline int self_linking(const BraidWord& w) { return -w.strands() + exponent_sum(w); }

/// image[p] is the bottom position (1-based) of the strand that starts at top
/// position p+1. Letters act in word order.
struct ClosurePermutation {
  std::vector<int> image;

  int cycle_count() const {
    std::vector<bool> seen(image.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < image.size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (std::size_t u = s; !seen[u]; u = static_cast<std::size_t>(image[u] - 1)) seen[u] = true;
    }
    return cycles;
  }

  /// Sorted cycle lengths; a conjugacy invariant of the braid.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(image.size(), false);
    std::vector<int> lengths;
    for (std::size_t s = 0; s < image.size(); ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (std::size_t u = s; !seen[u]; u = static_cast<std::size_t>(image[u] - 1)) {
        seen[u] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  friend bool operator==(const ClosurePermutation&, const ClosurePermutation&) = default;
};

inline ClosurePermutation closure_permutation(const BraidWord& w) {
  // at[q] = starting strand currently sitting at position q
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (int k : w.letters()) {
    auto i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[i], at[i + 1]);
  }
  ClosurePermutation perm{std::vector<int>(at.size())};
  for (std::size_t q = 0; q < at.size(); ++q) perm.image[static_cast<std::size_t>(at[q])] = static_cast<int>(q) + 1;
  return perm;
}

inline int closure_components(const BraidWord& w) { return closure_permutation(w).cycle_count(); }

inline bool is_knot_closure(const BraidWord& w) { return closure_components(w) == 1; }

/// beta_n = (sigma_1^{-1})^{2n+3} sigma_2 sigma_1^3 sigma_2 in B_3.
inline BraidWord family_beta(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "family index must be >= 1");
  std::vector<int> letters(static_cast<std::size_t>(2 * n + 3), -1);
  letters.insert(letters.end(), {2, 1, 1, 1, 2});
  return BraidWord(3, std::move(letters));
}

/// A_n = (sigma_1 sigma_2)^3 sigma_1 (sigma_2^{-1})^{2n+5} in B_3.
inline BraidWord family_A(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "family index must be >= 1");
  std::vector<int> letters{1, 2, 1, 2, 1, 2, 1};
  letters.insert(letters.end(), static_cast<std::size_t>(2 * n + 5), -2);
  return BraidWord(3, std::move(letters));
}

inline BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& k : letters) k = -k;
  return BraidWord(w.strands(), std::move(letters));
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  detail::require_same_strands(a, b);
  std::vector<int> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) { return concat(a, b); }

inline BraidWord power(const BraidWord& w, int e) {
  BraidWord base = e < 0 ? inverse(w) : w;
  BraidWord out(w.strands());
  for (int i = 0; i < std::abs(e); ++i) out = concat(out, base);
  return out;
}

/// c * w * c^{-1}.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& c) {
  detail::require_same_strands(w, c);
  return concat(concat(c, w), inverse(c));
}

/// Moves the first k letters (mod length) to the end; negative k rotates the
/// other way.
inline BraidWord cyclic_shift(const BraidWord& w, long long k) {
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  if (!letters.empty()) {
    const auto len = static_cast<long long>(letters.size());
    const long long r = ((k % len) + len) % len;
    std::rotate(letters.begin(), letters.begin() + r, letters.end());
  }
  return BraidWord(w.strands(), std::move(letters));
}

/// Cancels adjacent k, -k pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int k : w.letters()) {
    if (!stack.empty() && stack.back() == -k)
      stack.pop_back();
    else
      stack.push_back(k);
  }
  return BraidWord(w.strands(), std::move(stack));
}

inline BraidWord mirror(const BraidWord& w) {
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  for (int& k : letters) k = -k;
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace bennequin
