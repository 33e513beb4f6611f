#include "lorder/ball.hpp"

#include <algorithm>
#include <stdexcept>

#include "lorder/order.hpp"

namespace lorder {

std::uint64_t ball_size(Rank k, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const std::uint64_t branch = 2 * static_cast<std::uint64_t>(k.value()) - 1;
  std::uint64_t total = 1;
  std::uint64_t layer = branch + 1;
  for (int r = 1; r <= radius; ++r) {
    total += layer;
    layer *= branch;
  }
  return total;
}

std::vector<Letter> enumeration_alphabet(Rank k) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= k.value(); ++i) alphabet.push_back(Letter::positive(i));
  for (int i = 1; i <= k.value(); ++i) alphabet.push_back(Letter::negative(i));
  return alphabet;
}

namespace {

std::vector<ReducedWord> extend_layers(const std::vector<Letter>& alphabet,
                                       int max_length) {
  std::vector<ReducedWord> out{ReducedWord{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (Letter x : alphabet) {
        if (!w.empty() && w.back().cancels(x)) continue;
        auto extended = w;
        extended.push_back(x);
        next.push_back(std::move(extended));
      }
    }
    for (const auto& w : next) out.emplace_back(std::span<const Letter>(w));
    layer = std::move(next);
  }
  return out;
}

}  // namespace

Ball enumerate_ball(Rank k, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  return Ball{k, radius, extend_layers(enumeration_alphabet(k), radius)};
}

std::vector<ReducedWord> enumerate_monoid(Rank k, int max_length) {
  if (max_length < 0) throw std::invalid_argument("length must be nonnegative");
  std::vector<Letter> positives;
  for (int i = 1; i <= k.value(); ++i) positives.push_back(Letter::positive(i));
  return extend_layers(positives, max_length);
}

std::vector<ReducedWord> sort_ball(const Ball& ball) {
  std::vector<ReducedWord> sorted = ball.words;
  std::ranges::sort(sorted, [](const ReducedWord& u, const ReducedWord& v) {
    return compare(u, v) < 0;
  });
  return sorted;
}

std::vector<Letter> random_reduced_letters(Rank k, std::size_t length,
                                           std::mt19937_64& rng) {
  const int m = k.alphabet_size();
  std::vector<Letter> out;
  out.reserve(length);
  auto letter_at = [&](int slot) {
    return slot < k.value() ? Letter::positive(slot + 1)
                            : Letter::negative(slot - k.value() + 1);
  };
  std::uniform_int_distribution<int> first(0, m - 1);
  std::uniform_int_distribution<int> rest(0, m - 2);
  for (std::size_t n = 0; n < length; ++n) {
    if (out.empty()) {
      out.push_back(letter_at(first(rng)));
      continue;
    }
    // Skip the slot of the inverse of the previous letter.
    const Letter forbidden = out.back().inverse();
    Letter x = letter_at(rest(rng));
    out.push_back(x == forbidden ? letter_at(m - 1) : x);
  }
  return out;
}

}  // namespace lorder
