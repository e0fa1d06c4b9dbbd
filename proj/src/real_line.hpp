// SPDX-License-Identifier: Apache-2.0
//
// Polars and quasi-convex hulls of finite sets of rationals in R. The dual of
// R is R, y acting by x -> yx mod 1. If D is a common denominator of S then
// y and y + D act identically on S, so S^> is periodic and is stored as one
// period.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "circle.hpp"

namespace qcg {

class RealFiniteSet {
 public:
  explicit RealFiniteSet(std::span<const Rational> points);

  const std::vector<Rational>& points() const { return points_; }
  /// Least common denominator.
  const Integer& denominator() const { return den_; }
  Rational max_abs() const;
  bool contains(const Rational& x) const;

 private:
  std::vector<Rational> points_;
  Integer den_;
};

struct PeriodicPolar {
  Rational period;
  IntervalUnion one_period;  // inside [0, period)

  bool contains(const Rational& y) const;
};

PeriodicPolar polar_R(const RealFiniteSet& s);

struct RealMembership {
  bool in = true;
  std::optional<Rational> witness;  // y in the polar with yz outside T_+
};

/// Exact decision of z in Q_R(S). The polar is P + DZ for one period P, and
/// z(P + tD) mod 1 depends only on t modulo the denominator of zD, so finitely
/// many interval images settle the question.
RealMembership member_hull_R(const RealFiniteSet& s, const Rational& z);
RealMembership member_hull_R(const RealFiniteSet& s, const PeriodicPolar& polar, const Rational& z);

/// 2^-t for the least t >= 0 with 2^-t max|S| < 1/2.
Rational scale_into_half(const RealFiniteSet& s);

/// Q_R(S), which is finite: with alpha = scale_into_half(S) and M = max|S|,
/// Q_R(S) lies in (1/alpha) pi^-1(Q_T(pi(alpha S))) n [-M, M].
std::vector<Rational> hull_R(const RealFiniteSet& s);

}  // namespace qcg
