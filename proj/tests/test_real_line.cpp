// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "families.hpp"
#include "real_line.hpp"

using namespace qcg;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

RealFiniteSet real(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Rational> v;
  for (auto [p, d] : pts) v.push_back(q(p, d));
  return RealFiniteSet(v);
}

bool witness_sound(const RealFiniteSet& s, const Rational& y, const Rational& z) {
  for (const auto& x : s.points())
    if (!UnitRational(x * y).in_Tplus()) return false;
  return !UnitRational(y * z).in_Tplus();
}

}  // namespace

TEST(PolarR, Examples) {
  auto p = polar_R(real({{1, 4}}));
  EXPECT_EQ(p.period, 4);
  EXPECT_EQ(p.one_period, IntervalUnion({Interval{0, 1, true, true}, Interval{3, 4, true, false}}));
  auto z = polar_R(real({{0, 1}}));
  EXPECT_EQ(z.period, 1);
  for (long j = -8; j <= 8; ++j) EXPECT_TRUE(z.contains(q(j, 3)));
  auto s = polar_R(real({{1, 6}, {1, 2}, {1, 1}}));
  // 1 * 1/2 = 1/2 is outside T_+, so y = 1 is excluded too
  EXPECT_TRUE(s.contains(q(1, 4)));
  EXPECT_FALSE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
}

TEST(PolarR, MatchesPointwise) {
  auto s = real({{1, 6}, {1, 2}, {1, 1}, {-3, 4}});
  auto p = polar_R(s);
  for (long j = -400; j <= 400; ++j) {
    Rational y = q(j, 37);
    bool inside = true;
    for (const auto& x : s.points()) inside = inside && UnitRational(x * y).in_Tplus();
    EXPECT_EQ(p.contains(y), inside) << j;
  }
}

TEST(MemberR, Examples) {
  auto s = real({{1, 6}, {1, 2}, {1, 1}});
  EXPECT_TRUE(member_hull_R(s, q(2, 3)).in);
  auto out = member_hull_R(real({{1, 4}}), q(1, 2));
  EXPECT_FALSE(out.in);
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_EQ(*out.witness, 1);
  for (const auto& x : s.points()) EXPECT_TRUE(member_hull_R(s, x).in);
}

TEST(HullR, Examples) {
  auto a = real({{0, 1}, {1, 2}, {-1, 2}, {1, 8}, {-1, 8}, {1, 32}, {-1, 32}});
  EXPECT_EQ(hull_R(a), a.points());
  auto b = real({{0, 1}, {1, 2}, {-1, 2}, {1, 4}, {-1, 4}, {1, 16}, {-1, 16}});
  auto hb = hull_R(b);
  EXPECT_NE(std::find(hb.begin(), hb.end(), q(5, 16)), hb.end());
  EXPECT_TRUE(member_hull_R(b, q(5, 16)).in);
  auto c = real({{0, 1}, {1, 4}, {-1, 4}});
  EXPECT_EQ(hull_R(c), c.points());
}

TEST(HullR, MembershipAgreesOnProbes) {
  for (auto s : {real({{0, 1}, {1, 2}, {-1, 2}, {1, 4}, {-1, 4}, {1, 16}, {-1, 16}}),
                 real({{0, 1}, {1, 3}, {-1, 3}, {1, 1}, {-1, 1}}), real({{0, 1}, {3, 8}, {-3, 8}})}) {
    auto h = hull_R(s);
    Rational m = s.max_abs();
    long den = 8 * s.denominator().get_si();
    for (long j = -2 * den; j <= 2 * den; ++j) {
      Rational z = q(j, den) * m;
      bool listed = std::find(h.begin(), h.end(), z) != h.end();
      auto r = member_hull_R(s, z);
      ASSERT_EQ(r.in, listed) << to_string(z);
      if (!r.in) ASSERT_TRUE(witness_sound(s, *r.witness, z)) << to_string(z);
    }
  }
}

TEST(HullR, ProjectionAgreement) {
  for (auto s : {real({{0, 1}, {1, 8}, {-1, 8}, {1, 32}, {-1, 32}}), real({{0, 1}, {1, 9}, {-1, 9}})}) {
    auto g = GridSet::from_points(s.points());
    ASSERT_TRUE(is_quasi_convex(g));
    EXPECT_EQ(hull_R(s), s.points());
  }
}

TEST(HullR, FamiliesFollowVerdict) {
  for (auto text : {"0,2,4", "0,1,4", "0,1,3", "-1,1,3", "0,1,2", "1,2,5"}) {
    auto a = GapSequence::parse(text);
    auto pts = points_R2(a);
    RealFiniteSet s(pts);
    bool qc = hull_R(s) == s.points();
    EXPECT_EQ(qc, verdict_R2(a).outcome == Outcome::QuasiConvex) << text;
  }
}

TEST(ScaleIntoHalf, Examples) {
  EXPECT_EQ(scale_into_half(real({{1, 4}})), 1);
  EXPECT_EQ(scale_into_half(real({{1, 2}})), q(1, 2));
  EXPECT_EQ(scale_into_half(real({{-3, 1}})), q(1, 8));
}
