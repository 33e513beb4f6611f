#ifndef LORDER_TESTS_HELPERS_HPP
#define LORDER_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "lorder/words.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::Word to_ints(std::span<const lorder::Letter> w) {
  oracle::Word out;
  for (lorder::Letter x : w) out.push_back(x.signed_value());
  return out;
}

inline oracle::Word to_ints(const lorder::ReducedWord& w) { return to_ints(w.letters()); }

inline std::vector<lorder::Letter> to_letters(const oracle::Word& w) {
  std::vector<lorder::Letter> out;
  for (int v : w) out.push_back(lorder::Letter::from_signed(v));
  return out;
}

inline lorder::ReducedWord word(const oracle::Word& w) {
  const auto letters = to_letters(w);
  return lorder::ReducedWord(letters);
}

/// Unreduced random letter sequence.
inline std::vector<lorder::Letter> random_letters(int k, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, 2 * k);
  std::vector<lorder::Letter> out;
  for (std::size_t n = 0; n < len; ++n) {
    int v = pick(rng);
    out.push_back(v <= k ? lorder::Letter::positive(v) : lorder::Letter::negative(v - k));
  }
  return out;
}

}  // namespace testing

#endif  // LORDER_TESTS_HELPERS_HPP
