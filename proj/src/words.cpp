#include "lorder/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lorder {

Rank::Rank(int k) : k_(k) {
  if (k < 2) {
    throw std::invalid_argument("rank must be at least 2, got " +
                                std::to_string(k));
  }
}

int Letter::checked(int index) {
  if (index < 1) {
    throw std::invalid_argument("generator index must be positive, got " +
                                std::to_string(index));
  }
  return index;
}

Letter Letter::from_signed(int value) {
  if (value == 0) {
    throw std::invalid_argument("letter value must be nonzero");
  }
  return Letter(value);
}

ReducedWord::ReducedWord(std::span<const Letter> letters) {
  // Single pass; letters_ doubles as the pushdown of retained letters.
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (!letters_.empty() && letters_.back().cancels(x)) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

int ReducedWord::max_index() const noexcept {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, x.index());
  return m;
}

bool ReducedWord::is_positive_monoid_word() const noexcept {
  return std::ranges::all_of(letters_,
                             [](Letter x) { return x.is_positive(); });
}

ReducedWord free_reduce(std::span<const Letter> letters) {
  return ReducedWord(letters);
}

ReducedWord invert(const ReducedWord& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return ReducedWord(ReducedWord::AlreadyReduced{}, std::move(out));
}

ReducedWord reverse(const ReducedWord& u) {
  return ReducedWord(ReducedWord::AlreadyReduced{},
                     std::vector<Letter>(u.letters_.rbegin(),
                                         u.letters_.rend()));
}

ReducedWord concat(const ReducedWord& u, const ReducedWord& v) {
  std::vector<Letter> joined;
  joined.reserve(u.size() + v.size());
  joined.insert(joined.end(), u.begin(), u.end());
  joined.insert(joined.end(), v.begin(), v.end());
  return ReducedWord(joined);
}

namespace {

std::vector<Letter> parse_letters(std::string_view text, Rank k) {
  std::vector<Letter> out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (k.value() > kMaxLetterRank) {
      throw ParseError("letter syntax supports at most 26 generators; use "
                       "numeric syntax");
    }
    if (c >= 'a' && c <= 'z') {
      int i = c - 'a' + 1;
      if (i > k.value()) {
        throw ParseError(std::string("letter '") + c +
                         "' is outside the alphabet of rank " +
                         std::to_string(k.value()));
      }
      out.push_back(Letter::positive(i));
    } else if (c >= 'A' && c <= 'Z') {
      int i = c - 'A' + 1;
      if (i > k.value()) {
        throw ParseError(std::string("letter '") + c +
                         "' is outside the alphabet of rank " +
                         std::to_string(k.value()));
      }
      out.push_back(Letter::negative(i));
    } else {
      throw ParseError(std::string("invalid character '") + c + "' in word");
    }
  }
  return out;
}

std::vector<Letter> parse_numeric(std::string_view text, Rank k) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<Letter> out;
  std::string_view rest = compact;
  while (true) {
    auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    bool negative = !token.empty() && token.front() == '-';
    std::string_view digits = negative ? token.substr(1) : token;
    if (digits.empty() ||
        !std::ranges::all_of(digits, [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed numeric letter '" + std::string(token) + "'");
    }
    if (digits.front() == '0') {
      throw ParseError("numeric letter must be a nonzero integer without "
                       "leading zeros, got '" + std::string(token) + "'");
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("numeric letter out of range '" + std::string(token) + "'");
    }
    if (index > k.value()) {
      throw ParseError("generator index " + std::to_string(index) +
                       " exceeds rank " + std::to_string(k.value()));
    }
    out.push_back(negative ? Letter::negative(index) : Letter::positive(index));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

}  // namespace

ReducedWord parse_word(std::string_view text, Rank k) {
  bool numeric = std::ranges::any_of(
      text, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (numeric) return ReducedWord(parse_numeric(text, k));
  return ReducedWord(parse_letters(text, k));
}

std::string format_word(const ReducedWord& u, Rank k) {
  std::string out;
  if (k.value() <= kMaxLetterRank) {
    out.reserve(u.size());
    for (Letter x : u) {
      char base = x.is_positive() ? 'a' : 'A';
      out.push_back(static_cast<char>(base + x.index() - 1));
    }
    return out;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(u[i].signed_value());
  }
  return out;
}

}  // namespace lorder
