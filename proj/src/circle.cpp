// SPDX-License-Identifier: Apache-2.0

#include "circle.hpp"

#include <algorithm>
#include <sstream>

namespace qcg {

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw InvalidInput("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
  };
  trim(s);
  if (s.empty()) throw InvalidInput("empty rational");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  auto valid = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!valid(num) || !valid(den)) throw InvalidInput("malformed rational: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer pow_int(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw InvalidInput("negative exponent");
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(exp));
  if (base < 0 && exp % 2 == 1) out = -out;
  return out;
}

Rational canonical_mod1(const Rational& r) {
  // shift = ceil(r - 1/2) puts r - shift into (-1/2, 1/2]
  Rational shifted = r - Rational(1, 2);
  Rational out = r - Rational(ceil(shifted));
  out.canonicalize();
  return out;
}

UnitRational::UnitRational(const Integer& p, const Integer& q) : value_(canonical_mod1(make_rational(p, q))) {}

bool UnitRational::in_T(std::int64_t m) const {
  if (m < 1) throw InvalidInput("T_m requires m >= 1");
  // |num|/den <= 1/(4m)  <=>  4m|num| <= den
  Integer lhs = abs(value_.get_num()) * 4 * Integer(static_cast<long>(m));
  return lhs <= value_.get_den();
}

UnitRational make_unit_rational(const Integer& p, const Integer& q) { return UnitRational(p, q); }
Rational norm(const UnitRational& x) { return x.norm(); }
bool in_Tm(const UnitRational& x, std::int64_t m) { return x.in_T(m); }

bool Interval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

bool Interval::contains(const Rational& x) const {
  bool above = lo_closed ? x >= lo : x > lo;
  bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string Interval::str() const {
  std::ostringstream out;
  out << (lo_closed ? '[' : '(') << to_string(lo) << ',' << to_string(hi) << (hi_closed ? ']' : ')');
  return out.str();
}

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.empty(); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (auto& next : parts) {
    if (!parts_.empty()) {
      Interval& cur = parts_.back();
      bool touches = next.lo < cur.hi || (next.lo == cur.hi && (cur.hi_closed || next.lo_closed));
      if (touches) {
        if (next.hi > cur.hi) {
          cur.hi = next.hi;
          cur.hi_closed = next.hi_closed;
        } else if (next.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || next.hi_closed;
        }
        continue;
      }
    }
    parts_.push_back(std::move(next));
  }
}

IntervalUnion IntervalUnion::closed(const Rational& lo, const Rational& hi) {
  return IntervalUnion({Interval{lo, hi, true, true}});
}

IntervalUnion IntervalUnion::circle_window() {
  return IntervalUnion({Interval{Rational(-1, 2), Rational(1, 2), false, true}});
}

bool IntervalUnion::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion(std::move(all));
}

namespace {

Interval intersect_one(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

}  // namespace

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  // both sides are sorted and disjoint: advance whichever interval ends first
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    Interval piece = intersect_one(a, b);
    if (!piece.empty()) out.push_back(piece);
    if (a.hi < b.hi || (a.hi == b.hi && !a.hi_closed)) ++i;
    else ++j;
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::complement_within(const Interval& window) const {
  IntervalUnion clipped = intersect(IntervalUnion({window}));
  std::vector<Interval> gaps;
  Rational cursor = window.lo;
  bool cursor_closed = window.lo_closed;
  for (const auto& i : clipped.parts_) {
    gaps.push_back(Interval{cursor, i.lo, cursor_closed, !i.lo_closed});
    cursor = i.hi;
    cursor_closed = !i.hi_closed;
  }
  gaps.push_back(Interval{cursor, window.hi, cursor_closed, window.hi_closed});
  return IntervalUnion(std::move(gaps));
}

IntervalUnion IntervalUnion::scaled(const Rational& factor) const {
  std::vector<Interval> out;
  for (const auto& i : parts_) {
    if (factor > 0) {
      out.push_back(Interval{i.lo * factor, i.hi * factor, i.lo_closed, i.hi_closed});
    } else if (factor < 0) {
      out.push_back(Interval{i.hi * factor, i.lo * factor, i.hi_closed, i.lo_closed});
    } else {
      out.push_back(Interval{Rational(0), Rational(0), true, true});
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::translated(const Rational& offset) const {
  std::vector<Interval> out;
  for (const auto& i : parts_) out.push_back(Interval{i.lo + offset, i.hi + offset, i.lo_closed, i.hi_closed});
  return IntervalUnion(std::move(out));
}

IntervalUnion IntervalUnion::reduced_mod1() const {
  const Interval window{Rational(-1, 2), Rational(1, 2), false, true};
  std::vector<Interval> out;
  for (const auto& i : parts_) {
    if (i.hi - i.lo >= 1) return circle_window();
    // the windows (j - 1/2, j + 1/2] partition R
    for (Integer j = floor(i.lo) - 1; j <= ceil(i.hi) + 1; ++j) {
      Rational shift(j);
      Interval piece = intersect_one(i, Interval{window.lo + shift, window.hi + shift, false, true});
      if (piece.empty()) continue;
      out.push_back(Interval{piece.lo - shift, piece.hi - shift, piece.lo_closed, piece.hi_closed});
    }
  }
  return IntervalUnion(std::move(out));
}

std::string IntervalUnion::str() const {
  if (parts_.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += "∪";
    out += parts_[i].str();
  }
  return out;
}

IntervalUnion arc_Tm(std::int64_t m) {
  if (m < 1) throw InvalidInput("T_m requires m >= 1");
  Rational r(1, 4 * m);
  r.canonicalize();
  return IntervalUnion::closed(-r, r);
}

IntervalUnion circle_polar(std::span<const Integer> characters) {
  IntervalUnion result = IntervalUnion::circle_window();
  for (const auto& k : characters) {
    if (k == 0) continue;
    Integer ak = abs(k);
    // k t in [j - 1/4, j + 1/4] for some integer j, restricted to |t| <= 1/2
    std::vector<Interval> pre;
    Integer jmax = ak / 2 + 1;
    for (Integer j = -jmax; j <= jmax; ++j) {
      Rational lo = (Rational(j) - Rational(1, 4)) / Rational(ak);
      Rational hi = (Rational(j) + Rational(1, 4)) / Rational(ak);
      pre.push_back(Interval{lo, hi, true, true});
    }
    result = result.intersect(IntervalUnion(std::move(pre)));
  }
  return result;
}

}  // namespace qcg
