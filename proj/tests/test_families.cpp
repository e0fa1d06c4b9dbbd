// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "families.hpp"
#include "oracle.hpp"
#include "padic.hpp"
#include "real_line.hpp"

using namespace qcg;

namespace {

GapSequence seq(std::vector<std::int64_t> v) { return GapSequence(std::move(v)); }

std::vector<GapSequence> all_sequences(std::int64_t max_entry, std::size_t max_len) {
  std::vector<GapSequence> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (!cur.empty()) out.push_back(seq(cur));
    if (cur.size() == max_len) return;
    for (std::int64_t x = from; x <= max_entry; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool in_truncation_hull(const WitnessRecipe& r, std::int64_t p) {
  GridSet pts = p == 2 ? points_K2(r.truncation) : points_K3(r.truncation);
  Rational scaled = canonical_mod1(r.point) * Rational(static_cast<long>(pts.modulus()));
  if (scaled.get_den() != 1) return false;
  return hull_grid(pts).hull.contains(scaled.get_num().get_si());
}

}  // namespace

TEST(GapSequence, ParseAndGaps) {
  auto a = GapSequence::parse("1, 2,5,8");
  EXPECT_EQ(a.gaps(), (std::vector<std::int64_t>{1, 3, 3}));
  EXPECT_EQ(a.str(), "1,2,5,8");
  EXPECT_EQ(a.extended(6), seq({1, 2, 5, 8, 11, 14}));
  EXPECT_THROW(GapSequence::parse("1,1"), InvalidInput);
  EXPECT_THROW(GapSequence::parse(""), InvalidInput);
  EXPECT_THROW(GapSequence::parse("1,a"), InvalidInput);
}

TEST(Points, Examples) {
  auto k3 = points_K3(seq({1, 3}), 2);
  EXPECT_EQ(k3, GridSet(81, std::vector<Residue>{0, 9, 72, 1, 80}));
  EXPECT_EQ(points_L3(seq({0, 2}), 4), CyclicSet(81, std::vector<Residue>{0, 1, 80, 9, 72}));
  std::vector<Rational> r2{make_rational(-1, 2), make_rational(-1, 8), make_rational(-1, 32), 0,
                           make_rational(1, 32), make_rational(1, 8),  make_rational(1, 2)};
  EXPECT_EQ(points_R2(seq({0, 2, 4})), r2);
}

TEST(Verdict, T2) {
  EXPECT_EQ(verdict_T2(seq({1, 2, 5, 8})).outcome, Outcome::QuasiConvex);
  auto v = verdict_T2(seq({1, 2, 4, 7}));
  EXPECT_EQ(v.outcome, Outcome::NotQuasiConvex);
  EXPECT_EQ(v.violated, "A.iii");
  EXPECT_EQ(verdict_T2(seq({1, 2, 5, 6})).violated, "A.ii");
  EXPECT_EQ(verdict_T2(seq({0, 2, 4})).violated, "A.i");
}

TEST(Verdict, R2) {
  EXPECT_EQ(verdict_R2(seq({0, 2, 4})).outcome, Outcome::QuasiConvex);
  EXPECT_EQ(verdict_R2(seq({0, 1, 4})).outcome, Outcome::QuasiConvex);
  auto v = verdict_R2(seq({0, 1, 3}));
  EXPECT_EQ(v.outcome, Outcome::NotQuasiConvex);
  EXPECT_EQ(v.violated, "B.ii");
  EXPECT_EQ(verdict_R2(seq({-3, -1, 2})).outcome, Outcome::QuasiConvex);
}

TEST(Verdict, T3) {
  EXPECT_EQ(verdict_T3(seq({1, 3, 5})).outcome, Outcome::QuasiConvex);
  EXPECT_EQ(verdict_T3(seq({0, 2, 4})).violated, "C.i");
  EXPECT_EQ(verdict_T3(seq({1, 2, 4})).violated, "C.ii");
}

TEST(Verdict, J3) {
  EXPECT_EQ(verdict_J3(seq({0, 2, 4})).outcome, Outcome::QuasiConvex);
  EXPECT_EQ(verdict_J3(seq({0, 1, 3})).violated, "D");
  EXPECT_EQ(verdict_J3(seq({2, 4, 6})).outcome, Outcome::QuasiConvex);
}

TEST(Sufficiency, Examples) {
  EXPECT_TRUE(sufficient_gap_condition(seq({1, 3, 5}), Sufficiency::T2));
  EXPECT_TRUE(sufficient_gap_condition(seq({0, 2, 4}), Sufficiency::J2));
  EXPECT_FALSE(sufficient_gap_condition(seq({1, 2, 5}), Sufficiency::T2));
  EXPECT_EQ(verdict_T2(seq({1, 2, 5})).outcome, Outcome::QuasiConvex);
}

TEST(Sufficiency, ImpliesVerdict) {
  for (const auto& a : all_sequences(12, 4)) {
    if (sufficient_gap_condition(a, Sufficiency::T2)) ASSERT_EQ(verdict_T2(a).outcome, Outcome::QuasiConvex);
    if (sufficient_gap_condition(a, Sufficiency::R2)) ASSERT_EQ(verdict_R2(a).outcome, Outcome::QuasiConvex);
    if (sufficient_gap_condition(a, Sufficiency::J2)) ASSERT_EQ(verdict_J3(a).outcome, Outcome::QuasiConvex);
  }
}

TEST(Chains, FromFamily) {
  auto b = chain_from_family(seq({1, 2, 5}), 2);
  EXPECT_EQ(b.entries(), (std::vector<Integer>{4, 8, 64}));
  EXPECT_EQ(b.ratios(), (std::vector<Integer>{2, 8}));
  EXPECT_EQ(chain_from_family(seq({1, 3}), 3).ratios(), (std::vector<Integer>{9}));
  EXPECT_EQ(chain_from_family(seq({0, 1}), 2).entries(), (std::vector<Integer>{2, 4}));
  EXPECT_THROW(DivisibleChain::parse("4,6"), InvalidInput);
}

TEST(Chains, NecessaryReports) {
  auto flag = [](const NecessaryReport& r, const std::string& id) {
    for (const auto& f : r.flags)
      if (f.id == id) return f.holds;
    ADD_FAILURE() << "missing flag " << id;
    return false;
  };
  EXPECT_FALSE(flag(necessary_report_T(DivisibleChain::parse("2,8")), "T.a"));
  EXPECT_FALSE(flag(necessary_report_T(DivisibleChain::parse("9,27,81")), "T.div3"));
  EXPECT_TRUE(necessary_report_T(DivisibleChain::parse("4,8,64")).all_pass());
  EXPECT_FALSE(flag(necessary_report_R(DivisibleChain::parse("2,4,8")), "R.a"));
  EXPECT_FALSE(flag(necessary_report_R(DivisibleChain::parse("2,4,16")), "R.b"));
  EXPECT_TRUE(necessary_report_R(DivisibleChain::parse("2,4,128")).all_pass());
}

TEST(Chains, VerdictImpliesNecessary) {
  for (const auto& a : all_sequences(9, 4)) {
    if (verdict_T3(a).outcome == Outcome::QuasiConvex)
      ASSERT_TRUE(necessary_report_T(chain_from_family(a, 3)).all_pass()) << a.str();
    if (verdict_T2(a).outcome == Outcome::QuasiConvex)
      ASSERT_TRUE(necessary_report_T(chain_from_family(a, 2)).all_pass()) << a.str();
  }
}

TEST(Bridge, T3AgainstBruteForce) {
  for (const auto& a : all_sequences(6, 3)) {
    Verdict v = verdict_T3(a);
    if (v.outcome == Outcome::QuasiConvex) {
      for (std::size_t c = 1; c <= a.size(); ++c) ASSERT_TRUE(is_quasi_convex(points_K3(a, c))) << a.str();
    } else {
      ASSERT_TRUE(v.witness_recipe.has_value());
      ASSERT_TRUE(in_truncation_hull(*v.witness_recipe, 3)) << a.str();
    }
  }
}

TEST(Bridge, T2AgainstBruteForceSmall) {
  for (const auto& a : all_sequences(7, 3)) {
    Verdict v = verdict_T2(a);
    if (v.outcome == Outcome::QuasiConvex) {
      ASSERT_TRUE(is_quasi_convex(points_K2(a))) << a.str();
    } else {
      ASSERT_TRUE(in_truncation_hull(*v.witness_recipe, 2)) << a.str() << " " << *v.violated;
    }
  }
}

TEST(Bridge, J3AgainstBruteForce) {
  for (const auto& a : all_sequences(5, 3)) {
    Verdict v = verdict_J3(a);
    auto lvl = level_for(a.entries());
    if (v.outcome == Outcome::QuasiConvex) {
      ASSERT_TRUE(is_quasi_convex(points_L3(a, lvl))) << a.str();
    } else {
      const auto& r = *v.witness_recipe;
      auto h = hull_cyclic(points_L3(r.truncation, r.level)).hull;
      Integer n = pow_int(3, r.level);
      Integer x = Integer(r.point.get_num()) % n;
      if (x < 0) x += n;
      ASSERT_TRUE(h.contains(x.get_si())) << a.str();
    }
  }
}
