// Balls in the Cayley graph of F_k and random reduced words.

#ifndef LORDER_BALL_HPP
#define LORDER_BALL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lorder/words.hpp"

namespace lorder {

struct Ball {
  Rank k;
  int radius;
  std::vector<ReducedWord> words;
};

/// 1 + 2k((2k-1)^r - 1)/(2k-2): the number of reduced words of length <= r.
std::uint64_t ball_size(Rank k, int radius);

/// Letter order used for enumeration: s_1 < ... < s_k < S_1 < ... < S_k.
std::vector<Letter> enumeration_alphabet(Rank k);

/// Every reduced word of length <= radius exactly once, shorter words first
/// and lexicographic (in enumeration_alphabet order) within a length.
/// Throws std::invalid_argument for a negative radius.
Ball enumerate_ball(Rank k, int radius);

/// Positive words only, same order.
std::vector<ReducedWord> enumerate_monoid(Rank k, int max_length);

/// Ball words sorted ascending by the weight order.
std::vector<ReducedWord> sort_ball(const Ball& ball);

/// Uniform random reduced word of exactly `length` letters.
std::vector<Letter> random_reduced_letters(Rank k, std::size_t length,
                                           std::mt19937_64& rng);

}  // namespace lorder

#endif  // LORDER_BALL_HPP
