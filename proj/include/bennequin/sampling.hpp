#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bennequin/braid.hpp"

namespace bennequin {

/// Uniform random word: each letter a random generator with a random sign.
template <typename Rng>
BraidWord random_word(Rng& rng, int strands, int length) {
  std::vector<int> letters;
  if (strands >= 2) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::bernoulli_distribution negative(0.5);
    letters.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) letters.push_back(negative(rng) ? -gen(rng) : gen(rng));
  }
  return BraidWord(strands, std::move(letters));
}

/// Rejection-samples a word with 2..max_strands strands and 1..max_length
/// letters whose closure is a knot and whose canonical surface is connected.
template <typename Rng>
BraidWord random_knot_word(Rng& rng, int max_strands, int max_length) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  std::uniform_int_distribution<int> length_dist(1, max_length);
  for (;;) {
    BraidWord w = random_word(rng, strands_dist(rng), length_dist(rng));
    if (!is_knot_closure(w)) continue;
    std::vector<bool> used(static_cast<std::size_t>(w.strands()), false);
    for (int k : w.letters()) used[static_cast<std::size_t>(k < 0 ? -k : k)] = true;
    bool connected = true;
    for (int i = 1; i < w.strands(); ++i) connected = connected && used[static_cast<std::size_t>(i)];
    if (connected) return w;
  }
}

}  // namespace bennequin
