#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lorder/ball.hpp"
#include "lorder/words.hpp"
#include "support/helpers.hpp"

using namespace lorder;
using testing::to_ints;

namespace {
const Rank k3(3);
Letter s(int i) { return Letter::positive(i); }
Letter S(int i) { return Letter::negative(i); }
}  // namespace

TEST_CASE("rank must be at least two") {
  CHECK_THROWS_AS(Rank(1), std::invalid_argument);
  CHECK_THROWS_AS(Rank(0), std::invalid_argument);
  CHECK(Rank(2).value() == 2);
  CHECK_THROWS_AS(Letter::positive(0), std::invalid_argument);
  CHECK_THROWS_AS(Letter::from_signed(0), std::invalid_argument);
}

TEST_CASE("parse_word") {
  CHECK(parse_word("", k3).empty());
  CHECK(parse_word("cB", k3) == ReducedWord{s(3), S(2)});
  CHECK(parse_word("aA b", k3) == ReducedWord{s(2)});
  CHECK(parse_word("3,-2", k3) == ReducedWord{s(3), S(2)});
  CHECK(parse_word(" 1, -1 ,2", k3) == ReducedWord{s(2)});

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_word("ad", k3), ParseError);
    CHECK_THROWS_AS(parse_word("D", k3), ParseError);
    CHECK_THROWS_AS(parse_word("a1", k3), ParseError);
    CHECK_THROWS_AS(parse_word("a-b", k3), ParseError);
    CHECK_THROWS_AS(parse_word("0", k3), ParseError);
    CHECK_THROWS_AS(parse_word("1,0", k3), ParseError);
    CHECK_THROWS_AS(parse_word("1,,2", k3), ParseError);
    CHECK_THROWS_AS(parse_word("4", k3), ParseError);
    CHECK_THROWS_AS(parse_word("01", k3), ParseError);
    CHECK_THROWS_AS(parse_word("abc", Rank(27)), ParseError);
  }

  SUBCASE("numeric syntax lifts the 26 generator cap") {
    const Rank big(40);
    CHECK(parse_word("40,-27", big) == ReducedWord{s(40), S(27)});
    CHECK(parse_word("", big).empty());
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(std::vector{s(1), S(1)}).empty());
  CHECK(free_reduce(std::vector{s(1), s(2), S(2), S(1), s(3)}) == ReducedWord{s(3)});
  const ReducedWord r{s(1), s(2), S(1)};
  CHECK(free_reduce(r.letters()) == r);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = testing::random_letters(3, trial % 23, rng);
    const ReducedWord once = free_reduce(raw);
    CHECK(to_ints(once) == oracle::naive_reduce(to_ints(raw)));
    CHECK(free_reduce(once.letters()) == once);
    CHECK(once.size() <= raw.size());
  }
}

TEST_CASE("invert and reverse") {
  CHECK(invert(ReducedWord{}).empty());
  CHECK(invert(ReducedWord{s(3), S(2)}) == ReducedWord{s(2), S(3)});
  const ReducedWord u{s(1), s(2), S(1)};
  CHECK(invert(invert(u)) == u);

  CHECK(reverse(ReducedWord{}).empty());
  CHECK(reverse(ReducedWord{s(3), S(2)}) == ReducedWord{S(2), s(3)});
  CHECK(reverse(reverse(u)) == u);
}

TEST_CASE("concat") {
  const ReducedWord u{s(1), s(2), S(3)};
  CHECK(concat(u, invert(u)).empty());
  CHECK(concat(ReducedWord{}, u) == u);
  CHECK(concat(ReducedWord{s(1), s(2)}, ReducedWord{S(2), s(3)}) == ReducedWord{s(1), s(3)});
}

TEST_CASE("group laws on small balls") {
  const Ball ball = enumerate_ball(Rank(2), 3);
  REQUIRE(ball.words.size() == 53);
  for (const auto& u : ball.words) {
    CHECK(reverse(invert(u)) == invert(reverse(u)));
    for (const auto& v : ball.words) {
      CHECK(invert(concat(u, v)) == concat(invert(v), invert(u)));
    }
  }
  // Associativity over every triple.
  std::size_t failures = 0;
  for (const auto& u : ball.words)
    for (const auto& v : ball.words)
      for (const auto& w : ball.words)
        failures += concat(concat(u, v), w) == concat(u, concat(v, w)) ? 0 : 1;
  CHECK(failures == 0);
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(5);
  for (int k : {2, 3, 26, 27, 60}) {
    const Rank rank(k);
    for (int trial = 0; trial < 500; ++trial) {
      const ReducedWord u(random_reduced_letters(rank, trial % 15, rng));
      const std::string text = format_word(u, rank);
      CHECK(parse_word(text, rank) == u);
    }
  }
  CHECK(format_word(ReducedWord{s(3), S(2)}, k3) == "cB");
  CHECK(format_word(ReducedWord{s(30), S(2)}, Rank(30)) == "30,-2");
  CHECK(format_word(ReducedWord{}, Rank(30)) == "");
}
