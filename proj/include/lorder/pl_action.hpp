// Piecewise-linear action of F_k on the line, in exact rational arithmetic.
//
// The circle R/Z is cut into 2k+1 arcs of length 1/(2k+1), in order
//   1', a'_1, ..., a'_k, A'_k, ..., A'_1.
// s_0 contracts [0, 2k/(2k+1)) into 1' with slope 1/(2k) and expands the
// last arc with slope 2k; s_i is s_0 conjugated by rotations so that it
// maps the complement of A'_i into a'_i. Maps are stored as their lifts to
// the line, normalized so that s_i(0) lies in (0, 1).

#ifndef LORDER_PL_ACTION_HPP
#define LORDER_PL_ACTION_HPP

#include <span>
#include <string>
#include <vector>

#include "lorder/rational.hpp"
#include "lorder/words.hpp"

namespace lorder {

/// Half-open [lo, hi) on the line; an arc of the circle when hi - lo <= 1.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// "[lo,hi)"
std::string format_interval(const Interval& arc);

/// Orientation-preserving PL homeomorphism of the line commuting with x+1.
///
/// Stored on the fundamental domain [0, 1): breakpoints start at 0, one
/// slope per piece, and the value at 0. The representation is canonical
/// (adjacent pieces inside (0, 1) never share a slope), so == is equality
/// of maps.
class PLMap {
 public:
  /// Throws std::invalid_argument unless breakpoints start at 0 and
  /// increase strictly inside [0, 1), slopes are positive and one per
  /// piece, and the total increase over [0, 1) is exactly 1.
  PLMap(std::vector<Rational> breakpoints, std::vector<Rational> slopes,
        Rational anchor);

  static PLMap identity();

  std::span<const Rational> breakpoints() const noexcept { return breaks_; }
  std::span<const Rational> slopes() const noexcept { return slopes_; }
  const Rational& anchor() const noexcept { return values_.front(); }
  std::size_t pieces() const noexcept { return slopes_.size(); }

  Rational operator()(const Rational& x) const;
  /// The unique x with f(x) = y.
  Rational preimage(const Rational& y) const;
  /// Slope of the piece starting at or containing x (right derivative).
  const Rational& slope_at(const Rational& x) const;

  friend bool operator==(const PLMap& f, const PLMap& g) {
    return f.breaks_ == g.breaks_ && f.slopes_ == g.slopes_ &&
           f.values_.front() == g.values_.front();
  }

 private:
  std::size_t piece_of(const Rational& y) const;

  std::vector<Rational> breaks_;
  std::vector<Rational> slopes_;
  std::vector<Rational> values_;  // values_[j] = f(breaks_[j])
};

PLMap build_s0(Rank k);
/// Lift of s_i(x) = s_0(x + (i-1)/(2k+1)) + i/(2k+1), 1 <= i <= k.
PLMap build_generator(Rank k, int i);
/// x -> f(x + shift_in) + shift_out.
PLMap translate_map(const PLMap& f, const Rational& shift_in,
                    const Rational& shift_out);
PLMap invert_map(const PLMap& f);
Rational apply_map(const PLMap& f, const Rational& x);

/// The generators s_1..s_k and their inverses, built once.
class FreeAction {
 public:
  explicit FreeAction(Rank k);

  Rank rank() const noexcept { return k_; }
  /// Throws std::out_of_range for a generator index above k.
  const PLMap& map(Letter x) const;

  /// u(x) under the left action: the last letter of u is applied first.
  Rational act(const ReducedWord& u, Rational x) const;
  Rational orbit_zero(const ReducedWord& u) const { return act(u, Rational(0)); }

 private:
  Rank k_;
  std::vector<PLMap> positive_;
  std::vector<PLMap> negative_;
};

Rational orbit_zero(const ReducedWord& u, Rank k);

enum class ArcKind { identity, attracting, repelling };

/// One of the 2k+1 arcs: 1', a'_i (attracting for s_i) or A'_i
/// (attracting for S_i, repelling for s_i).
struct Arc {
  ArcKind kind;
  int index;  // 0 for 1'
  Interval span;

  std::string label(Rank k) const;
};

/// All arcs in circle order starting at 0.
std::vector<Arc> circle_arcs(Rank k);
Arc identity_arc(Rank k);
Arc attracting_arc(Rank k, int i);
Arc repelling_arc(Rank k, int i);

/// The circle complement of an arc, starting in [0, 1).
Interval complement(const Interval& arc);

/// Image [f(lo), f(hi)) of a half-open arc, shifted so that lo is in [0, 1).
Interval arc_image(const PLMap& f, const Interval& arc);
Interval arc_image(const PLMap& f, const Arc& arc);

/// Containment of half-open arcs on the circle.
bool arc_contains(const Interval& outer, const Interval& inner);

struct PingPongCheck {
  Letter generator;
  Interval domain;  // complement of the generator's repelling arc
  Interval image;
  Arc target;
  bool holds;
};

struct PingPongReport {
  int k;
  std::vector<PingPongCheck> checks;

  bool all_pass() const;
};

/// Checks s_i(S^1 \ A'_i) within a'_i and S_i(S^1 \ a'_i) within A'_i for
/// every i, with exact endpoints.
PingPongReport verify_pingpong(Rank k);

}  // namespace lorder

#endif  // LORDER_PL_ACTION_HPP
