#include "lorder/verify.hpp"

#include <cstdio>
#include <stdexcept>

#include "lorder/ball.hpp"

namespace lorder {

bool weight_agrees(const ReducedWord& word, HalfInt weight, const Rational& orbit) {
  const int orbit_sign = sgn(orbit);
  if (static_cast<int>(weight.sign()) != orbit_sign) return false;
  if (word.empty()) return weight.doubled() == 0 && orbit_sign == 0;
  if (is_integer(orbit)) return false;
  // Midpoint of the unit interval containing the orbit point.
  return Integer(weight.doubled()) == 2 * floor_of(orbit) + 1;
}

std::optional<Mismatch> check_word(const FreeAction& action, const ReducedWord& word) {
  const HalfInt w = weight(word);
  Rational orbit = action.orbit_zero(word);
  if (weight_agrees(word, w, orbit)) return std::nullopt;
  return Mismatch{word, w, std::move(orbit)};
}

std::vector<Mismatch> find_mismatches_serial(std::span<const ReducedWord> words,
                                             const WordCheck& check) {
  std::vector<Mismatch> out;
  for (const ReducedWord& u : words) {
    if (auto m = check(u)) out.push_back(std::move(*m));
  }
  return out;
}

std::vector<Mismatch> find_mismatches_parallel(std::span<const ReducedWord> words,
                                               const WordCheck& check) {
  const auto n = static_cast<std::int64_t>(words.size());
  std::vector<std::optional<Mismatch>> slots(words.size());

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) {
    slots[static_cast<std::size_t>(i)] =
        check(words[static_cast<std::size_t>(i)]);
  }

  // Merge in input order so the report does not depend on scheduling.
  std::vector<Mismatch> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<Mismatch> find_mismatches_serial(const FreeAction& action,
                                             std::span<const ReducedWord> words) {
  return find_mismatches_serial(
      words, [&action](const ReducedWord& u) { return check_word(action, u); });
}

std::vector<Mismatch> find_mismatches_parallel(const FreeAction& action,
                                               std::span<const ReducedWord> words) {
  return find_mismatches_parallel(
      words, [&action](const ReducedWord& u) { return check_word(action, u); });
}

VerifyReport verify(Rank k, int radius, Execution mode) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  const FreeAction action(k);
  const Ball ball = enumerate_ball(k, radius);

  VerifyReport report;
  report.k = k.value();
  report.radius = radius;
  report.words_checked = ball.words.size();
  report.mismatches = mode == Execution::parallel
                          ? find_mismatches_parallel(action, ball.words)
                          : find_mismatches_serial(action, ball.words);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string format_report(const VerifyReport& report) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3fs", report.elapsed.count());
  std::string out = "k=" + std::to_string(report.k) +
                    " r=" + std::to_string(report.radius) +
                    " words=" + std::to_string(report.words_checked) +
                    " mismatches=" + std::to_string(report.mismatches.size()) +
                    " elapsed=" + elapsed + "\n";
  const Rank k(report.k);
  for (const Mismatch& m : report.mismatches) {
    out += format_word(m.word, k) + " w=" + m.weight.to_string() +
           " orbit=" + format_rational(m.orbit) + "\n";
  }
  return out;
}

}  // namespace lorder
