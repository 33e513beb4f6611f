#include "lorder/order.hpp"

#include <algorithm>
#include <charconv>

namespace lorder {

std::string_view sign_symbol(Sign s) noexcept {
  switch (s) {
    case Sign::positive: return "+";
    case Sign::negative: return "-";
    case Sign::zero: break;
  }
  return "0";
}

std::string_view ordering_symbol(std::strong_ordering o) noexcept {
  if (o < 0) return "<";
  if (o > 0) return ">";
  return "=";
}

std::string HalfInt::to_string() const {
  if (doubled_ % 2 == 0) return std::to_string(doubled_ / 2);
  const std::int64_t whole = (doubled_ < 0 ? -doubled_ : doubled_) / 2;
  return (doubled_ < 0 ? "-" : "") + std::to_string(whole) + ".5";
}

std::string HalfInt::to_fraction_string() const {
  if (doubled_ % 2 == 0) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("malformed half-integer '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (parse_int(text.substr(slash + 1), text) != 2) {
      throw ParseError("half-integer denominator must be 2 in '" +
                       std::string(text) + "'");
    }
    return from_doubled(parse_int(text.substr(0, slash), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string_view head = text.substr(0, dot);
    bool negative = !head.empty() && head.front() == '-';
    std::int64_t whole = parse_int(negative ? head.substr(1) : head, text);
    if (whole < 0) throw ParseError("malformed half-integer '" + std::string(text) + "'");
    std::int64_t d = 2 * whole;
    if (frac == "5") {
      d += 1;
    } else if (frac != "0") {
      throw ParseError("not a half-integer '" + std::string(text) + "'");
    }
    return from_doubled(negative ? -d : d);
  }
  return from_doubled(2 * parse_int(text, text));
}

HalfInt weight(const ReducedWord& u) {
  SignRecognizer r;
  for (Letter x : u) r.push(x);
  return r.weight();
}

Sign sign_of(const ReducedWord& u) { return weight(u).sign(); }

bool is_positive(const ReducedWord& u) { return sign_of(u) == Sign::positive; }

std::strong_ordering compare(const ReducedWord& u, const ReducedWord& v) {
  // v^-1 u reduces to invert(v[p:]) u[p:], p the common prefix length, and
  // the junction cannot cancel; so the weight is read without materializing.
  const auto [iu, iv] = std::ranges::mismatch(u, v);
  const auto p = static_cast<std::size_t>(iu - u.begin());
  if (p == u.size() && p == v.size()) return std::strong_ordering::equal;

  SignRecognizer r;
  for (std::size_t i = v.size(); i > p; --i) r.push(v[i - 1].inverse());
  for (std::size_t i = p; i < u.size(); ++i) r.push(u[i]);
  // Trichotomy holds because the weight of a nonempty word is odd.
  return r.weight().doubled() <=> 0;
}

std::strong_ordering lex_compare(std::span<const Letter> u,
                                 std::span<const Letter> v) {
  auto positive = [](Letter x) { return x.is_positive(); };
  if (!std::ranges::all_of(u, positive) || !std::ranges::all_of(v, positive)) {
    throw std::invalid_argument("lex_compare is defined on positive words only");
  }
  return std::lexicographical_compare_three_way(
      u.begin(), u.end(), v.begin(), v.end(),
      [](Letter x, Letter y) { return x.index() <=> y.index(); });
}

HalfInt weight_f2_variant(const ReducedWord& u, Rank k) {
  if (k.value() != 2) {
    throw std::invalid_argument("the F_2 variant weight requires rank 2");
  }
  if (u.max_index() > 2) {
    throw std::invalid_argument("word uses a generator outside F_2");
  }
  std::int64_t d = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const int prev = u[i - 1].signed_value();
    const int cur = u[i].signed_value();
    if (prev == 1 && (cur == 2 || cur == -2)) d += 2;       // ab, aB
    if (prev == -2 && (cur == -1 || cur == 1)) d -= 2;      // BA, Ba
  }
  if (!u.empty()) d += u.back().is_positive() ? 1 : -1;
  return HalfInt::from_doubled(d);
}

}  // namespace lorder
