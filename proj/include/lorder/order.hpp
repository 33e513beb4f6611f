// The weight order on F_k.
//
// For a reduced word u the weight is
//
//   #{adjacent s_j S_i, j > i} - #{adjacent S_j s_i, j > i} +/- 1/2,
//
// the last term carrying the sign of the final letter (0 for the empty word).
// u is positive iff its weight is positive, and u > v iff v^-1 u is positive.
// The order is left invariant and restricts to the lexicographic order on
// the monoid of positive words.

#ifndef LORDER_ORDER_HPP
#define LORDER_ORDER_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lorder/words.hpp"

namespace lorder {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

/// "+", "0" or "-".
std::string_view sign_symbol(Sign s) noexcept;
/// "<", "=" or ">".
std::string_view ordering_symbol(std::strong_ordering o) noexcept;

/// An element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_doubled(std::int64_t doubled) noexcept {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }

  constexpr std::int64_t doubled() const noexcept { return doubled_; }
  constexpr Sign sign() const noexcept {
    return doubled_ > 0 ? Sign::positive
                        : (doubled_ < 0 ? Sign::negative : Sign::zero);
  }
  constexpr HalfInt operator-() const noexcept { return from_doubled(-doubled_); }

  /// Decimal form: "0", "2", "0.5", "-1.5".
  std::string to_string() const;
  /// Fraction form: "0", "2", "1/2", "-3/2".
  std::string to_fraction_string() const;
  /// Accepts both forms (and n/2 with even n).
  static HalfInt parse(std::string_view text);

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t doubled_ = 0;
};

class NotReducedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One-counter recognizer for the positive cone.
///
/// Reads a reduced word letter by letter; the only state is the running
/// pair count and the previous letter, so memory is constant in the input
/// length. An adjacent inverse pair is rejected with NotReducedError.
class SignRecognizer {
 public:
  void push(Letter x) {
    const std::int32_t cur = x.signed_value();
    if (previous_ != 0) {
      if (previous_ == -cur) {
        throw NotReducedError("stream is not freely reduced");
      }
      // s_j S_i with j > i jumps up, S_j s_i with j > i jumps down.
      if (previous_ > 0 && cur < 0 && previous_ > -cur) {
        ++counter_;
      } else if (previous_ < 0 && cur > 0 && -previous_ > cur) {
        --counter_;
      }
    }
    previous_ = cur;
  }

  HalfInt weight() const noexcept {
    const std::int64_t tail = previous_ > 0 ? 1 : (previous_ < 0 ? -1 : 0);
    return HalfInt::from_doubled(2 * counter_ + tail);
  }
  Sign sign() const noexcept { return weight().sign(); }

 private:
  std::int64_t counter_ = 0;
  std::int32_t previous_ = 0;
};

HalfInt weight(const ReducedWord& u);
Sign sign_of(const ReducedWord& u);
bool is_positive(const ReducedWord& u);

/// Order comparison u <=> v, decided by the weight of v^-1 u. Equality is
/// decided by the reduced difference being empty, not by the weight.
std::strong_ordering compare(const ReducedWord& u, const ReducedWord& v);

/// Sign of a reduced word supplied as a single pass over its letters.
template <std::ranges::input_range R>
  requires std::convertible_to<std::ranges::range_reference_t<R>, Letter>
Sign sign_stream(R&& letters) {
  SignRecognizer recognizer;
  for (Letter x : letters) recognizer.push(x);
  return recognizer.sign();
}

/// Lexicographic order on positive words with s_1 < ... < s_k; a proper
/// prefix is smaller. Throws std::invalid_argument on a negative letter.
std::strong_ordering lex_compare(std::span<const Letter> u,
                                 std::span<const Letter> v);

/// Alternative order on F_2: +1 per ab or aB, -1 per BA or Ba, +/- 1/2 by
/// the last letter. Throws std::invalid_argument unless k = 2.
HalfInt weight_f2_variant(const ReducedWord& u, Rank k);

}  // namespace lorder

#endif  // LORDER_ORDER_HPP
