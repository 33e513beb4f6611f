// Exhaustive agreement check between the weight and the exact action.
//
// For each word u of a ball: sign(weight(u)) == sign(u(0)), and for
// nonempty u, u(0) is not an integer and weight(u) == floor(u(0)) + 1/2.
// The OpenMP kernel and the serial reference must produce identical
// reports apart from the timing.

#ifndef LORDER_VERIFY_HPP
#define LORDER_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorder/order.hpp"
#include "lorder/pl_action.hpp"
#include "lorder/words.hpp"

namespace lorder {

struct Mismatch {
  ReducedWord word;
  HalfInt weight;
  Rational orbit;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
  int k = 0;
  int radius = 0;
  std::uint64_t words_checked = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> elapsed{};

  bool ok() const noexcept { return mismatches.empty(); }
};

enum class Execution { serial, parallel };

/// True when `weight` is consistent with the orbit point of `word`.
bool weight_agrees(const ReducedWord& word, HalfInt weight, const Rational& orbit);

std::optional<Mismatch> check_word(const FreeAction& action, const ReducedWord& word);

using WordCheck = std::function<std::optional<Mismatch>(const ReducedWord&)>;

/// Runs `check` on every word; mismatches come back in input order. The
/// check must be safe to call concurrently.
std::vector<Mismatch> find_mismatches_serial(std::span<const ReducedWord> words,
                                             const WordCheck& check);
std::vector<Mismatch> find_mismatches_parallel(std::span<const ReducedWord> words,
                                               const WordCheck& check);

std::vector<Mismatch> find_mismatches_serial(const FreeAction& action,
                                             std::span<const ReducedWord> words);
std::vector<Mismatch> find_mismatches_parallel(const FreeAction& action,
                                               std::span<const ReducedWord> words);

VerifyReport verify(Rank k, int radius, Execution mode = Execution::parallel);

/// Summary line `k=K r=R words=N mismatches=M elapsed=Ts`, then one line
/// `WORD w=<weight> orbit=<rational>` per mismatch.
std::string format_report(const VerifyReport& report);

}  // namespace lorder

#endif  // LORDER_VERIFY_HPP
