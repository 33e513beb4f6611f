// Test-only reference implementations, written directly from the
// definitions and sharing no code path with the library.

#ifndef LORDER_TESTS_ORACLES_HPP
#define LORDER_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Word = std::vector<int>;  // +i for s_i, -i for S_i

/// Repeatedly deletes the first adjacent inverse pair until none is left.
inline Word naive_reduce(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Twice the weight, counting every length-2 subword against the formula.
inline std::int64_t doubled_weight(const Word& w) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int x = w[i], y = w[i + 1];
    for (int j = 1; j <= 64; ++j) {
      for (int i2 = 1; i2 < j; ++i2) {
        if (x == j && y == -i2) d += 2;
        if (x == -j && y == i2) d -= 2;
      }
    }
  }
  if (!w.empty()) d += w.back() > 0 ? 1 : -1;
  return d;
}

inline mpz_class floor_q(const mpq_class& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

/// Lift of s_0 with s_0(0) = 0, from the two-branch closed form.
inline mpq_class s0(int k, const mpq_class& x) {
  const mpz_class n = floor_q(x);
  const mpq_class y = x - n;
  const mpq_class cut(2 * k, 2 * k + 1);
  mpq_class v = y < cut ? mpq_class(y / (2 * k)) : mpq_class(2 * k * y - (2 * k - 1));
  return v + n;
}

/// Inverse of s0, solving each branch for x.
inline mpq_class s0_inverse(int k, const mpq_class& x) {
  const mpz_class n = floor_q(x);
  const mpq_class y = x - n;
  const mpq_class cut(1, 2 * k + 1);
  mpq_class v = y < cut ? mpq_class(y * (2 * k)) : mpq_class((y + (2 * k - 1)) / (2 * k));
  return v + n;
}

inline mpq_class generator(int k, int i, const mpq_class& x) {
  mpq_class shift_in(i - 1, 2 * k + 1), shift_out(i, 2 * k + 1);
  shift_in.canonicalize();
  shift_out.canonicalize();
  return s0(k, x + shift_in) + shift_out;
}

inline mpq_class generator_inverse(int k, int i, const mpq_class& x) {
  mpq_class shift_in(i - 1, 2 * k + 1), shift_out(i, 2 * k + 1);
  shift_in.canonicalize();
  shift_out.canonicalize();
  return s0_inverse(k, x - shift_out) - shift_in;
}

/// u(0), last letter first.
inline mpq_class orbit(int k, const Word& w) {
  mpq_class x = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    x = *it > 0 ? generator(k, *it, x) : generator_inverse(k, -*it, x);
  }
  return x;
}

/// Every reduced word of length <= r, by brute-force filtering of all words.
inline std::vector<Word> brute_ball(int k, int r) {
  std::vector<Word> all{{}}, layer{{}};
  for (int len = 1; len <= r; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int v = -k; v <= k; ++v) {
        if (v == 0) continue;
        Word x = w;
        x.push_back(v);
        next.push_back(x);
      }
    }
    for (const Word& w : next) {
      if (naive_reduce(w) == w) all.push_back(w);
    }
    layer = std::move(next);
  }
  return all;
}

}  // namespace oracle

#endif  // LORDER_TESTS_ORACLES_HPP
