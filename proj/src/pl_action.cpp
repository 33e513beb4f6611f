#include "lorder/pl_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace lorder {

std::string format_interval(const Interval& arc) {
  return "[" + format_rational(arc.lo) + "," + format_rational(arc.hi) + ")";
}

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<Rational> slopes,
             Rational anchor) {
  if (breakpoints.empty() || breakpoints.front() != 0) {
    throw std::invalid_argument("PL map breakpoints must start at 0");
  }
  if (slopes.size() != breakpoints.size()) {
    throw std::invalid_argument("PL map needs exactly one slope per piece");
  }
  for (std::size_t j = 0; j < breakpoints.size(); ++j) {
    if (slopes[j] <= 0) throw std::invalid_argument("PL map slopes must be positive");
    if (j + 1 < breakpoints.size() && breakpoints[j] >= breakpoints[j + 1]) {
      throw std::invalid_argument("PL map breakpoints must increase strictly");
    }
  }
  if (breakpoints.back() >= 1) {
    throw std::invalid_argument("PL map breakpoints must lie in [0, 1)");
  }

  // Merge equal-slope neighbours; 0 always stays a piece start.
  for (std::size_t j = 0; j < breakpoints.size(); ++j) {
    if (j > 0 && slopes[j] == slopes_.back()) continue;
    breaks_.push_back(std::move(breakpoints[j]));
    slopes_.push_back(std::move(slopes[j]));
  }

  values_.reserve(breaks_.size());
  values_.push_back(std::move(anchor));
  Rational increase = 0;
  for (std::size_t j = 0; j < breaks_.size(); ++j) {
    const Rational end = j + 1 < breaks_.size() ? breaks_[j + 1] : Rational(1);
    increase += slopes_[j] * (end - breaks_[j]);
    if (j + 1 < breaks_.size()) values_.push_back(values_.front() + increase);
  }
  if (increase != 1) {
    throw std::invalid_argument("PL map does not commute with x + 1");
  }
}

PLMap PLMap::identity() { return PLMap({Rational(0)}, {Rational(1)}, Rational(0)); }

std::size_t PLMap::piece_of(const Rational& y) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), y);
  return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Rational PLMap::operator()(const Rational& x) const {
  const Integer n = floor_of(x);
  const Rational y = x - n;
  const std::size_t j = piece_of(y);
  return values_[j] + slopes_[j] * (y - breaks_[j]) + n;
}

Rational PLMap::preimage(const Rational& y) const {
  const Integer n = floor_of(y - values_.front());
  const Rational z = y - n;  // in [f(0), f(0) + 1)
  auto it = std::upper_bound(values_.begin(), values_.end(), z);
  const auto j = static_cast<std::size_t>(it - values_.begin()) - 1;
  return breaks_[j] + (z - values_[j]) / slopes_[j] + n;
}

const Rational& PLMap::slope_at(const Rational& x) const {
  return slopes_[piece_of(fractional_part(x))];
}

PLMap build_s0(Rank k) {
  const long m = 2L * k.value();
  return PLMap({Rational(0), make_rational(m, m + 1)},
               {make_rational(1, m), Rational(m)}, Rational(0));
}

PLMap translate_map(const PLMap& f, const Rational& shift_in,
                    const Rational& shift_out) {
  std::vector<Rational> starts{Rational(0)};
  for (const Rational& b : f.breakpoints()) starts.push_back(fractional_part(b - shift_in));
  std::ranges::sort(starts);
  const auto dup = std::ranges::unique(starts);
  starts.erase(dup.begin(), dup.end());

  std::vector<Rational> slopes;
  slopes.reserve(starts.size());
  for (const Rational& p : starts) slopes.push_back(f.slope_at(p + shift_in));
  return PLMap(std::move(starts), std::move(slopes), f(shift_in) + shift_out);
}

PLMap build_generator(Rank k, int i) {
  if (i < 1 || i > k.value()) {
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " outside 1.." + std::to_string(k.value()));
  }
  const long n = 2L * k.value() + 1;
  return translate_map(build_s0(k), make_rational(i - 1, n), make_rational(i, n));
}

PLMap invert_map(const PLMap& f) {
  // Breaks of the inverse are the images of the breaks of f.
  std::vector<Rational> starts{Rational(0)};
  for (const Rational& b : f.breakpoints()) starts.push_back(fractional_part(f(b)));
  std::ranges::sort(starts);
  const auto dup = std::ranges::unique(starts);
  starts.erase(dup.begin(), dup.end());

  std::vector<Rational> slopes;
  slopes.reserve(starts.size());
  for (const Rational& q : starts) {
    slopes.push_back(1 / Rational(f.slope_at(f.preimage(q))));
  }
  return PLMap(std::move(starts), std::move(slopes), f.preimage(Rational(0)));
}

Rational apply_map(const PLMap& f, const Rational& x) { return f(x); }

FreeAction::FreeAction(Rank k) : k_(k) {
  positive_.reserve(static_cast<std::size_t>(k.value()));
  negative_.reserve(static_cast<std::size_t>(k.value()));
  for (int i = 1; i <= k.value(); ++i) {
    positive_.push_back(build_generator(k, i));
    negative_.push_back(invert_map(positive_.back()));
  }
}

const PLMap& FreeAction::map(Letter x) const {
  if (x.index() > k_.value()) {
    throw std::out_of_range("generator index " + std::to_string(x.index()) +
                            " exceeds rank " + std::to_string(k_.value()));
  }
  const auto j = static_cast<std::size_t>(x.index() - 1);
  return x.is_positive() ? positive_[j] : negative_[j];
}

Rational FreeAction::act(const ReducedWord& u, Rational x) const {
  for (std::size_t i = u.size(); i > 0; --i) x = map(u[i - 1])(x);
  return x;
}

Rational orbit_zero(const ReducedWord& u, Rank k) {
  return FreeAction(k).orbit_zero(u);
}

std::string Arc::label(Rank k) const {
  if (kind == ArcKind::identity) return "1'";
  const bool upper = kind == ArcKind::repelling;
  if (k.value() <= kMaxLetterRank) {
    return std::string(1, static_cast<char>((upper ? 'A' : 'a') + index - 1)) + "'";
  }
  return (upper ? "S" : "s") + std::to_string(index) + "'";
}

namespace {

Interval arc_at(Rank k, long position) {
  const long n = 2L * k.value() + 1;
  return {make_rational(position, n), make_rational(position + 1, n)};
}

}  // namespace

Arc identity_arc(Rank k) { return {ArcKind::identity, 0, arc_at(k, 0)}; }

Arc attracting_arc(Rank k, int i) {
  if (i < 1 || i > k.value()) throw std::out_of_range("arc index out of range");
  return {ArcKind::attracting, i, arc_at(k, i)};
}

Arc repelling_arc(Rank k, int i) {
  if (i < 1 || i > k.value()) throw std::out_of_range("arc index out of range");
  return {ArcKind::repelling, i, arc_at(k, 2L * k.value() + 1 - i)};
}

std::vector<Arc> circle_arcs(Rank k) {
  std::vector<Arc> arcs{identity_arc(k)};
  for (int i = 1; i <= k.value(); ++i) arcs.push_back(attracting_arc(k, i));
  for (int i = k.value(); i >= 1; --i) arcs.push_back(repelling_arc(k, i));
  return arcs;
}

Interval complement(const Interval& arc) {
  Rational lo = fractional_part(arc.hi);
  Rational hi = lo + 1 - arc.length();
  return {std::move(lo), std::move(hi)};
}

Interval arc_image(const PLMap& f, const Interval& arc) {
  Rational lo = f(arc.lo);
  Rational hi = f(arc.hi);
  const Rational shift(floor_of(lo));
  return {lo - shift, hi - shift};
}

Interval arc_image(const PLMap& f, const Arc& arc) { return arc_image(f, arc.span); }

bool arc_contains(const Interval& outer, const Interval& inner) {
  if (inner.hi == inner.lo) return true;
  if (inner.length() > outer.length()) return false;
  // Put inner.lo in [outer.lo, outer.lo + 1).
  const Rational shift(floor_of(inner.lo - outer.lo));
  return inner.hi - shift <= outer.hi;
}

bool PingPongReport::all_pass() const {
  return std::ranges::all_of(checks, &PingPongCheck::holds);
}

PingPongReport verify_pingpong(Rank k) {
  const FreeAction action(k);
  PingPongReport report{k.value(), {}};
  for (int i = 1; i <= k.value(); ++i) {
    const Arc attract = attracting_arc(k, i);
    const Arc repel = repelling_arc(k, i);
    for (Letter x : {Letter::positive(i), Letter::negative(i)}) {
      const Interval domain = complement(x.is_positive() ? repel.span : attract.span);
      const Arc& target = x.is_positive() ? attract : repel;
      Interval image = arc_image(action.map(x), domain);
      const bool holds = arc_contains(target.span, image);
      report.checks.push_back({x, domain, std::move(image), target, holds});
    }
  }
  return report;
}

}  // namespace lorder
