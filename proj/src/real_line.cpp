// SPDX-License-Identifier: Apache-2.0

#include "real_line.hpp"

#include <algorithm>
#include <set>

#include "polar.hpp"

namespace qcg {

namespace {

// bounds on the amount of interval work a single call may do
constexpr long kMaxIntervals = 1L << 22;
constexpr long kMaxSweep = 1L << 22;

}  // namespace

RealFiniteSet::RealFiniteSet(std::span<const Rational> points) {
  if (points.empty()) throw InvalidInput("empty set");
  std::set<Rational> uniq;
  for (const auto& p : points) {
    Rational c = p;
    c.canonicalize();
    uniq.insert(c);
  }
  points_.assign(uniq.begin(), uniq.end());
  den_ = 1;
  for (const auto& p : points_) mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), p.get_den_mpz_t());
}

Rational RealFiniteSet::max_abs() const {
  Rational m = 0;
  for (const auto& p : points_) m = std::max<Rational>(m, abs(p));
  return m;
}

bool RealFiniteSet::contains(const Rational& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

bool PeriodicPolar::contains(const Rational& y) const {
  Rational r = y - Rational(floor(y / period)) * period;
  return one_period.contains(r);
}

PeriodicPolar polar_R(const RealFiniteSet& s) {
  const Rational d(s.denominator());
  const Interval window{Rational(0), d, true, false};
  IntervalUnion acc({window});
  std::set<Rational> seen;
  for (const auto& x : s.points()) {
    Rational ax = abs(x);
    if (ax == 0 || !seen.insert(ax).second) continue;
    // y in [0, D) with y|x| within 1/4 of some integer j in [0, D|x|]
    Integer top = ceil(d * ax);
    if (top > kMaxIntervals) throw InvalidInput("polar too large to enumerate");
    std::vector<Interval> parts;
    for (Integer j = 0; j <= top; ++j) {
      Rational c(j);
      parts.push_back(Interval{(c - Rational(1, 4)) / ax, (c + Rational(1, 4)) / ax});
    }
    acc = acc.intersect(IntervalUnion(std::move(parts)));
  }
  return PeriodicPolar{d, acc};
}

Rational scale_into_half(const RealFiniteSet& s) {
  Rational alpha = 1;
  const Rational m = s.max_abs();
  while (alpha * m >= Rational(1, 2)) alpha /= 2;
  return alpha;
}

RealMembership member_hull_R(const RealFiniteSet& s, const Rational& z) { return member_hull_R(s, polar_R(s), z); }

RealMembership member_hull_R(const RealFiniteSet&, const PeriodicPolar& polar, const Rational& z) {
  if (z == 0) return {};
  const Interval window{Rational(-1, 2), Rational(1, 2), false, true};
  const IntervalUnion outside = arc_Tm(1).complement_within(window);
  Rational step = z * polar.period;
  step.canonicalize();
  const Integer v(step.get_den());
  if (v > kMaxSweep) throw InvalidInput("target denominator too large for the periodic sweep");
  for (Integer t = 0; t < v; ++t) {
    const Rational shift = Rational(t) * polar.period;
    for (const auto& piece : polar.one_period.intervals()) {
      IntervalUnion image = IntervalUnion({piece}).translated(shift).scaled(z);
      IntervalUnion bad = image.reduced_mod1().intersect(outside);
      if (bad.empty()) continue;
      const Interval& b = bad.intervals().front();
      Rational r = b.hi_closed ? b.hi : (b.lo_closed ? b.lo : (b.lo + b.hi) / 2);
      // lift r back into the image interval, then into the polar
      const Interval& w = image.intervals().front();
      for (Integer n = floor(w.lo - r) - 1; n <= ceil(w.hi - r) + 1; ++n) {
        Rational cand = r + Rational(n);
        if (w.contains(cand)) {
          Rational y = cand / z;
          y.canonicalize();
          return RealMembership{false, y};
        }
      }
      throw std::logic_error("lost the witness while lifting");
    }
  }
  return {};
}

std::vector<Rational> hull_R(const RealFiniteSet& s) {
  const Rational m = s.max_abs();
  if (m == 0) return {Rational(0)};
  const Rational alpha = scale_into_half(s);
  std::vector<Rational> scaled;
  for (const auto& p : s.points()) scaled.push_back(p * alpha);
  GridSet grid = GridSet::from_points(scaled);
  auto report = hull_grid(grid);
  const PeriodicPolar polar = polar_R(s);
  std::vector<Rational> out;
  for (const auto& u : report.hull.points()) {
    if (abs(u.value()) > alpha * m) continue;
    Rational cand = u.value() / alpha;
    cand.canonicalize();
    if (s.contains(cand) || member_hull_R(s, polar, cand).in) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcg
