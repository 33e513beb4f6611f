// Free group words over s_1..s_k and their inverses S_1..S_k.
//
// Every public entry point accepts arbitrary letter sequences and reduces
// them; only freely reduced words are ever stored in a ReducedWord.

#ifndef LORDER_WORDS_HPP
#define LORDER_WORDS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lorder {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of free generators, k >= 2.
class Rank {
 public:
  explicit Rank(int k);

  int value() const noexcept { return k_; }
  int alphabet_size() const noexcept { return 2 * k_; }

  friend bool operator==(Rank, Rank) = default;

 private:
  int k_;
};

/// A generator s_i (positive) or its inverse S_i (negative), i >= 1.
class Letter {
 public:
  static Letter positive(int index) { return Letter(checked(index)); }
  static Letter negative(int index) { return Letter(-checked(index)); }
  /// +i for s_i, -i for S_i.
  static Letter from_signed(int value);

  int index() const noexcept { return value_ < 0 ? -value_ : value_; }
  bool is_positive() const noexcept { return value_ > 0; }
  bool is_negative() const noexcept { return value_ < 0; }
  int signed_value() const noexcept { return value_; }
  Letter inverse() const noexcept { return Letter(-value_); }

  bool cancels(Letter other) const noexcept { return value_ == -other.value_; }

  friend bool operator==(Letter, Letter) = default;

 private:
  explicit Letter(std::int32_t v) noexcept : value_(v) {}
  static int checked(int index);

  std::int32_t value_;
};

class ReducedWord {
 public:
  ReducedWord() = default;
  /// Freely reduces `letters`.
  explicit ReducedWord(std::span<const Letter> letters);
  ReducedWord(std::initializer_list<Letter> letters)
      : ReducedWord(std::span<const Letter>(letters.begin(), letters.size())) {}

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest generator index occurring in the word, 0 for the empty word.
  int max_index() const noexcept;
  bool is_positive_monoid_word() const noexcept;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  struct AlreadyReduced {};
  ReducedWord(AlreadyReduced, std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  friend ReducedWord invert(const ReducedWord&);
  friend ReducedWord reverse(const ReducedWord&);

  std::vector<Letter> letters_;
};

ReducedWord free_reduce(std::span<const Letter> letters);
ReducedWord invert(const ReducedWord& u);
/// Letters in reverse order, signs unchanged.
ReducedWord reverse(const ReducedWord& u);
ReducedWord concat(const ReducedWord& u, const ReducedWord& v);

/// Letter syntax (`a`..`z` = s_1..s_26, uppercase for inverses) or numeric
/// syntax (`1,-2,3`); detected by the presence of a digit. Whitespace is
/// ignored and the result is freely reduced.
ReducedWord parse_word(std::string_view text, Rank k);

/// Letter syntax when k <= 26, numeric otherwise. Empty word -> "".
std::string format_word(const ReducedWord& u, Rank k);

inline constexpr int kMaxLetterRank = 26;

}  // namespace lorder

#endif  // LORDER_WORDS_HPP
