#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "bennequin/braid.hpp"
#include "bennequin/error.hpp"

namespace bennequin {

/// Positive braid in which every pair of strands crosses at most once; it is
/// determined by its permutation. perm()[p] is the bottom position of the
/// strand that starts at top position p (0-based).
class PermutationBraid {
 public:
  explicit PermutationBraid(std::vector<int> perm) : perm_(std::move(perm)) {}

  static PermutationBraid identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return PermutationBraid(std::move(p));
  }
  static PermutationBraid delta(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return PermutationBraid(std::move(p));
  }
  /// sigma_i, 1-based.
  static PermutationBraid generator(int n, int i) {
    auto g = identity(n);
    std::swap(g.perm_[static_cast<std::size_t>(i - 1)], g.perm_[static_cast<std::size_t>(i)]);
    return g;
  }

  int strands() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const noexcept { return perm_; }

  bool is_identity() const {
    for (std::size_t p = 0; p < perm_.size(); ++p)
      if (perm_[p] != static_cast<int>(p)) return false;
    return true;
  }
  bool is_delta() const {
    const int n = strands();
    for (int p = 0; p < n; ++p)
      if (perm_[static_cast<std::size_t>(p)] != n - 1 - p) return false;
    return true;
  }

  std::vector<int> inverse_perm() const {
    std::vector<int> inv(perm_.size());
    for (std::size_t p = 0; p < perm_.size(); ++p) inv[static_cast<std::size_t>(perm_[p])] = static_cast<int>(p);
    return inv;
  }

  /// True iff this = sigma_i * (positive).
  bool starts_with(int i) const {
    return perm_[static_cast<std::size_t>(i - 1)] > perm_[static_cast<std::size_t>(i)];
  }
  /// True iff this = (positive) * sigma_i.
  bool ends_with(int i) const {
    auto inv = inverse_perm();
    return inv[static_cast<std::size_t>(i - 1)] > inv[static_cast<std::size_t>(i)];
  }

  /// this * sigma_i; caller guarantees !ends_with(i).
  PermutationBraid append_generator(int i) const {
    auto r = *this;
    for (int& v : r.perm_) {
      if (v == i - 1)
        v = i;
      else if (v == i)
        v = i - 1;
    }
    return r;
  }
  /// sigma_i^{-1} * this; caller guarantees starts_with(i).
  PermutationBraid strip_leading(int i) const {
    auto r = *this;
    std::swap(r.perm_[static_cast<std::size_t>(i - 1)], r.perm_[static_cast<std::size_t>(i)]);
    return r;
  }

  /// Delta^{-1} x Delta, i.e. sigma_i -> sigma_{n-i}.
  PermutationBraid tau() const {
    const int n = strands();
    std::vector<int> p(perm_.size());
    for (int q = 0; q < n; ++q) p[static_cast<std::size_t>(q)] = n - 1 - perm_[static_cast<std::size_t>(n - 1 - q)];
    return PermutationBraid(std::move(p));
  }
  PermutationBraid tau_pow(int k) const { return (k % 2 == 0) ? *this : tau(); }

  /// X with X * this = Delta.
  PermutationBraid left_complement() const {
    const int n = strands();
    auto inv = inverse_perm();
    std::vector<int> p(perm_.size());
    for (int q = 0; q < n; ++q) p[static_cast<std::size_t>(q)] = inv[static_cast<std::size_t>(n - 1 - q)];
    return PermutationBraid(std::move(p));
  }

  /// A reduced positive word for this permutation braid.
  std::vector<int> letters() const {
    std::vector<int> out;
    auto cur = *this;
    const int n = strands();
    for (bool progress = true; progress;) {
      progress = false;
      for (int i = 1; i < n; ++i) {
        if (cur.starts_with(i)) {
          out.push_back(i);
          cur = cur.strip_leading(i);
          progress = true;
          break;
        }
      }
    }
    return out;
  }

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;
  friend auto operator<=>(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  std::vector<int> perm_;
};

/// Delta^infimum * factors[0] * ... * factors[k-1], left-weighted, no factor
/// equal to the identity or Delta.
struct GarsideNormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<PermutationBraid> factors;

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }

  BraidWord to_word() const {
    std::vector<int> letters;
    auto delta = PermutationBraid::delta(strands).letters();
    for (int i = 0; i < std::abs(infimum); ++i) {
      if (infimum > 0) {
        letters.insert(letters.end(), delta.begin(), delta.end());
      } else {
        for (auto it = delta.rbegin(); it != delta.rend(); ++it) letters.push_back(-*it);
      }
    }
    for (const auto& f : factors) {
      auto l = f.letters();
      letters.insert(letters.end(), l.begin(), l.end());
    }
    return BraidWord(strands, std::move(letters));
  }

  /// Flat key usable in ordered containers.
  std::vector<int> key() const {
    std::vector<int> k{infimum};
    for (const auto& f : factors) k.insert(k.end(), f.perm().begin(), f.perm().end());
    return k;
  }

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

namespace garside_detail {

/// Transfers generators from the head of b to the tail of a until S(b) is
/// contained in F(a). Returns true if anything moved.
inline bool make_left_weighted(PermutationBraid& a, PermutationBraid& b) {
  const int n = a.strands();
  bool changed = false;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (b.starts_with(i) && !a.ends_with(i)) {
        a = a.append_generator(i);
        b = b.strip_leading(i);
        changed = progress = true;
      }
    }
  }
  return changed;
}

inline GarsideNormalForm normalize(int strands, int infimum, std::vector<PermutationBraid> factors) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j)
      if (make_left_weighted(factors[j], factors[j + 1])) changed = true;
  }
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead].is_delta()) ++lead;
  infimum += static_cast<int>(lead);
  factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
  return GarsideNormalForm{strands, infimum, std::move(factors)};
}

inline std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace garside_detail

inline GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  int infimum = 0;
  std::vector<PermutationBraid> factors;
  factors.reserve(w.size());
  for (int k : w.letters()) {
    if (k > 0) {
      factors.push_back(PermutationBraid::generator(n, k));
    } else {
      // F sigma^{-1} = F Delta^{-1} X = Delta^{-1} tau(F) X with X sigma = Delta
      for (auto& f : factors) f = f.tau();
      --infimum;
      factors.push_back(PermutationBraid::generator(n, -k).left_complement());
    }
  }
  return garside_detail::normalize(n, infimum, std::move(factors));
}

inline bool words_equal(const BraidWord& a, const BraidWord& b) {
  detail::require_same_strands(a, b);
  return normal_form(a) == normal_form(b);
}

/// s^{-1} x s for a permutation braid s.
inline GarsideNormalForm conjugate_by_simple(const GarsideNormalForm& x, const PermutationBraid& s) {
  // s^{-1} = Delta^{-1} X, and Delta^{-1} X Delta^p = Delta^{p-1} tau^p(X)
  std::vector<PermutationBraid> factors;
  factors.reserve(x.factors.size() + 2);
  factors.push_back(s.left_complement().tau_pow(x.infimum));
  factors.insert(factors.end(), x.factors.begin(), x.factors.end());
  factors.push_back(s);
  return garside_detail::normalize(x.strands, x.infimum - 1, std::move(factors));
}

/// Cycling: conjugation by tau^p(first factor). Returns the conjugator too.
inline std::pair<GarsideNormalForm, PermutationBraid> cycling(const GarsideNormalForm& x) {
  auto iota = x.factors.front().tau_pow(x.infimum);
  return {conjugate_by_simple(x, iota), iota};
}

/// Decycling: f_k x f_k^{-1}, i.e. Delta^p tau^p(f_k) f_1 ... f_{k-1}.
inline std::pair<GarsideNormalForm, PermutationBraid> decycling(const GarsideNormalForm& x) {
  const auto& last = x.factors.back();
  std::vector<PermutationBraid> factors;
  factors.reserve(x.factors.size());
  factors.push_back(last.tau_pow(x.infimum));
  factors.insert(factors.end(), x.factors.begin(), x.factors.end() - 1);
  return {garside_detail::normalize(x.strands, x.infimum, std::move(factors)), last};
}

struct SummitResult {
  GarsideNormalForm form;
  /// a with form = a^{-1} x a.
  BraidWord conjugator;
};

/// Cycles until the infimum is maximal, then decycles until the supremum is
/// minimal; the result lies in the super summit set.
inline SummitResult to_super_summit(const GarsideNormalForm& start) {
  const int n = start.strands;
  const int patience = n * (n - 1) / 2 + 1;
  GarsideNormalForm x = start;
  std::vector<int> conj;

  for (int idle = 0; idle < patience && !x.factors.empty();) {
    auto [y, iota] = cycling(x);
    idle = (y.infimum > x.infimum) ? 0 : idle + 1;
    auto l = iota.letters();
    conj.insert(conj.end(), l.begin(), l.end());
    x = std::move(y);
  }
  for (int idle = 0; idle < patience && !x.factors.empty();) {
    auto [y, last] = decycling(x);
    idle = (y.supremum() < x.supremum()) ? 0 : idle + 1;
    auto l = last.letters();
    for (auto it = l.rbegin(); it != l.rend(); ++it) conj.push_back(-*it);
    x = std::move(y);
  }
  return {std::move(x), free_reduce(BraidWord(n, std::move(conj)))};
}

struct GarsideOptions {
  std::size_t node_cap = 1'000'000;
};

/// Conjugator c with w2 = c * w1 * c^{-1}, kept as a plain word.
struct ConjugacyCertificate {
  BraidWord conjugator;
};

/// The super summit set of one braid, explored by conjugation with every
/// permutation braid, with a path back to the root for each element.
class SuperSummitSet {
 public:
  explicit SuperSummitSet(const BraidWord& w, GarsideOptions options = {})
      : word_(w),
        exponent_sum_(exponent_sum(w)),
        cycle_type_(closure_permutation(w).cycle_type()),
        root_(to_super_summit(normal_form(w))) {
    const int n = w.strands();
    std::vector<PermutationBraid> simples;
    simples.reserve(garside_detail::factorial(n));
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      PermutationBraid s(p);
      if (!s.is_identity()) simples.push_back(std::move(s));
    } while (std::next_permutation(p.begin(), p.end()));

    nodes_.push_back(Node{root_.form, kNoParent, PermutationBraid::identity(n)});
    index_.emplace(root_.form.key(), 0);
    const int inf = root_.form.infimum;
    const int sup = root_.form.supremum();
    for (std::size_t head = 0; head < nodes_.size(); ++head) {
      for (const auto& s : simples) {
        GarsideNormalForm y = conjugate_by_simple(nodes_[head].form, s);
        if (y.infimum != inf || y.supremum() != sup) continue;
        auto key = y.key();
        if (index_.contains(key)) continue;
        if (nodes_.size() >= options.node_cap)
          throw Error(ErrorCode::kSearchBudgetExhausted,
                      "super summit set exceeds node cap " + std::to_string(options.node_cap));
        index_.emplace(std::move(key), nodes_.size());
        nodes_.push_back(Node{std::move(y), head, s});
      }
    }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  int infimum() const noexcept { return root_.form.infimum; }
  int supremum() const noexcept { return root_.form.supremum(); }
  bool contains(const GarsideNormalForm& x) const { return index_.contains(x.key()); }

  std::vector<GarsideNormalForm> elements() const {
    std::vector<GarsideNormalForm> out;
    out.reserve(nodes_.size());
    for (const auto& node : nodes_) out.push_back(node.form);
    return out;
  }

  /// Certificate c with other = c * word * c^{-1}, if the two are conjugate.
  std::optional<ConjugacyCertificate> find(const BraidWord& other) const {
    detail::require_same_strands(word_, other);
    if (exponent_sum(other) != exponent_sum_) return std::nullopt;
    if (closure_permutation(other).cycle_type() != cycle_type_) return std::nullopt;
    return find_summit(to_super_summit(normal_form(other)));
  }

  /// Same as find, for a caller that already has the summit of the other word.
  std::optional<ConjugacyCertificate> find_summit(const SummitResult& other) const {
    if (other.form.infimum != infimum() || other.form.supremum() != supremum()) return std::nullopt;
    auto it = index_.find(other.form.key());
    if (it == index_.end()) return std::nullopt;
    // node = b^{-1} root b, root = a1^{-1} word a1, node = a2^{-1} other a2
    // => other = (a2 b^{-1} a1^{-1}) word (a1 b a2^{-1})
    std::vector<int> b;
    for (std::size_t i = it->second; nodes_[i].parent != kNoParent; i = nodes_[i].parent) {
      auto l = nodes_[i].via.letters();
      b.insert(b.begin(), l.begin(), l.end());
    }
    BraidWord path(word_.strands(), std::move(b));
    BraidWord c = concat(concat(other.conjugator, inverse(path)), inverse(root_.conjugator));
    return ConjugacyCertificate{free_reduce(c)};
  }

 private:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
  struct Node {
    GarsideNormalForm form;
    std::size_t parent;
    PermutationBraid via;
  };

  BraidWord word_;
  int exponent_sum_;
  std::vector<int> cycle_type_;
  SummitResult root_;
  std::vector<Node> nodes_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline bool verify_certificate(const BraidWord& w1, const BraidWord& w2, const BraidWord& c) {
  detail::require_same_strands(w1, w2);
  detail::require_same_strands(w1, c);
  return words_equal(w2, conjugate(w1, c));
}

/// Decides conjugacy in B_n; on success the certificate is verified before it
/// is returned.
inline std::optional<ConjugacyCertificate> conjugacy_decide(const BraidWord& w1, const BraidWord& w2,
                                                            GarsideOptions options = {}) {
  detail::require_same_strands(w1, w2);
  if (exponent_sum(w1) != exponent_sum(w2)) return std::nullopt;
  if (closure_permutation(w1).cycle_type() != closure_permutation(w2).cycle_type()) return std::nullopt;
  SuperSummitSet sss(w1, options);
  auto cert = sss.find(w2);
  if (cert && !verify_certificate(w1, w2, cert->conjugator))
    throw Error(ErrorCode::kInvariantViolation, "conjugacy certificate failed verification");
  return cert;
}

}  // namespace bennequin
