// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the circle group T = R/Z and exact interval-set
// arithmetic on R. Every other module sits on top of these types; nothing
// here touches floating point.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qcg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for every precondition violation on public operations.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Integer& p, const Integer& q);
/// Accepts "p", "p/q" and "-p/q"; the result is reduced.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Integer pow_int(std::int64_t base, std::int64_t exp);

/// Representative of r modulo 1 in the window (-1/2, 1/2].
Rational canonical_mod1(const Rational& r);

/// An element of T, stored as its representative in (-1/2, 1/2].
class UnitRational {
 public:
  UnitRational() = default;
  UnitRational(const Integer& p, const Integer& q);
  explicit UnitRational(const Rational& r) : value_(canonical_mod1(r)) {}

  const Rational& value() const { return value_; }
  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  /// Distance to 0 in T; lies in [0, 1/2].
  Rational norm() const { return abs(value_); }
  /// Membership in the closed arc T_m = pi([-1/(4m), 1/(4m)]).
  bool in_T(std::int64_t m) const;
  bool in_Tplus() const { return in_T(1); }

  UnitRational operator-() const { return UnitRational(-value_); }
  UnitRational operator+(const UnitRational& o) const { return UnitRational(value_ + o.value_); }
  UnitRational operator-(const UnitRational& o) const { return UnitRational(value_ - o.value_); }
  UnitRational times(const Integer& k) const { return UnitRational(value_ * Rational(k)); }

  friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.value_ == b.value_; }
  friend bool operator<(const UnitRational& a, const UnitRational& b) { return a.value_ < b.value_; }

  std::string str() const { return to_string(value_); }

 private:
  Rational value_;
};

UnitRational make_unit_rational(const Integer& p, const Integer& q);
Rational norm(const UnitRational& x);
bool in_Tm(const UnitRational& x, std::int64_t m);

/// An interval of R with exact endpoints. Closed unless a flag says otherwise;
/// open ends are needed for complements and for the half-open window of T.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const;
  bool contains(const Rational& x) const;
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of intervals, kept sorted, disjoint and merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> parts);

  static IntervalUnion closed(const Rational& lo, const Rational& hi);
  /// The window (-1/2, 1/2] used to identify T with a subset of R.
  static IntervalUnion circle_window();

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;

  IntervalUnion unite(const IntervalUnion& other) const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  IntervalUnion complement_within(const Interval& window) const;
  IntervalUnion scaled(const Rational& factor) const;
  IntervalUnion translated(const Rational& offset) const;
  /// Image under R -> T, expressed inside (-1/2, 1/2].
  IntervalUnion reduced_mod1() const;

  std::string str() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

/// T_m as an interval union in the circle window.
IntervalUnion arc_Tm(std::int64_t m);

/// {t in (-1/2, 1/2] : k t in T_+ for every k}, the polar in T of a finite
/// set of characters of T.
IntervalUnion circle_polar(std::span<const Integer> characters);

}  // namespace qcg
