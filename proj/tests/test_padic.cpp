// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "padic.hpp"

using namespace qcg;

namespace {

using Seq = std::vector<std::int64_t>;

std::set<Residue> as_set(const std::vector<Residue>& v) { return {v.begin(), v.end()}; }

std::set<Residue> signed_set(std::initializer_list<long> xs, long n) {
  std::set<Residue> out;
  for (long x : xs) {
    out.insert(((x % n) + n) % n);
    out.insert(((-x % n) + n) % n);
  }
  return out;
}

}  // namespace

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta_eval(1, 0, 1, 1), make_unit_rational(1, 3));
  EXPECT_EQ(zeta_eval(11, 3, 10, 4), make_unit_rational(29, 81));
  EXPECT_EQ(zeta_eval(11, 3, 10, 9), make_unit_rational(29, 81));
  for (std::int64_t an = 0; an < 6; ++an) EXPECT_EQ(zeta_eval(2, an, pow_int(3, an), an + 1), make_unit_rational(2, 3));
  EXPECT_THROW(zeta_eval(1, 4, 1, 4), InvalidInput);
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta_eval(1, 2, make_unit_rational(1, 9)), UnitRational(Rational(0)));
  EXPECT_EQ(eta_eval(11, 0, make_unit_rational(10, 81)), make_unit_rational(29, 81));
  EXPECT_EQ(eta_eval(1, 1, make_unit_rational(1, 27)), make_unit_rational(1, 9));
}

TEST(Jm, Examples) {
  Seq a13{1, 3}, a024{0, 2, 4};
  EXPECT_EQ(compute_Jm(a13, 1, 4, {Side::Circle, 5}), (Seq{0, 2, 4}));
  EXPECT_EQ(compute_Jm(a13, 2, 4, {Side::Circle, 5}), (Seq{0, 2, 4}));
  EXPECT_EQ(compute_Jm(a024, 2, 5, {Side::Padic, 6}), (Seq{1, 3, 5}));
  EXPECT_EQ(compute_Jm(a024, 1, 5, {Side::Padic, 6}), (Seq{1, 3, 5}));
  EXPECT_THROW(compute_Jm(a024, 1, 6, {Side::Padic, 6}), InvalidInput);
}

TEST(BalancedDigits, Examples) {
  EXPECT_EQ(balanced_digits(Integer(4), 3).digits, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(balanced_digits(Integer(2), 3).digits, (std::vector<int>{-1, 1, 0}));
  EXPECT_EQ(balanced_digits(make_unit_rational(2, 9)).digits, (std::vector<int>{1, -1}));
  EXPECT_THROW(balanced_digits(make_unit_rational(1, 6)), InvalidInput);
}

TEST(BalancedDigits, RoundTripAll) {
  const std::int64_t level = 6;
  const long n = 729;
  for (long x = 0; x < n; ++x) {
    auto d = balanced_digits(Integer(x), level);
    Integer back = evaluate_padic(d) % n;
    if (back < 0) back += n;
    ASSERT_EQ(back, x);
    auto y = make_unit_rational(x, n);
    ASSERT_EQ(UnitRational(evaluate_circle(balanced_digits(y, level))), y);
  }
}

TEST(LeadingDigit, Examples) {
  EXPECT_TRUE(leading_digit_lemma_check(make_unit_rational(1, 9)));
  EXPECT_TRUE(leading_digit_lemma_check(make_unit_rational(1, 3)));
}

TEST(LeadingDigit, ExhaustiveDenominator3To8) {
  const long n = 6561;
  for (long x = 0; x < n; ++x) ASSERT_TRUE(leading_digit_lemma_check(make_unit_rational(x, n))) << x;
}

TEST(EpsilonForms, Examples) {
  EXPECT_EQ(as_set(epsilon_forms(Seq{0, 2}, {Side::Padic, 3})), signed_set({0, 1, 9, 10, 8}, 27));
  EXPECT_EQ(as_set(epsilon_forms(Seq{1}, {Side::Circle, 2})), signed_set({0, 1}, 9));
  auto t = as_set(epsilon_forms(Seq{1, 3}, {Side::Circle, 4}));
  EXPECT_EQ(t, signed_set({0, 9, 1, 10, 8}, 81));
  EXPECT_EQ(t.size(), 9u);
}

TEST(EpsilonForms, MatchOracle) {
  for (Seq a : {Seq{0, 2}, Seq{0, 2, 4}, Seq{1, 3, 6}}) {
    auto lvl = level_for(a);
    auto o = oracle::eps_sums(a, lvl);
    EXPECT_EQ(as_set(epsilon_forms(a, {Side::Padic, lvl})), std::set<Residue>(o.begin(), o.end()));
  }
}

TEST(Q12, EqualsEpsilonForms) {
  for (Seq a : {Seq{0, 2}, Seq{1, 3}, Seq{1, 3, 5}, Seq{0, 2, 4}})
    for (Side side : {Side::Circle, Side::Padic}) {
      Carrier c{side, level_for(a)};
      EXPECT_EQ(as_set(q12_set(a, c)), as_set(epsilon_forms(a, c)));
    }
}

TEST(Q12, NoForbiddenIndexGivesEverything) {
  Seq a{0, 1, 2};
  Carrier c{Side::Padic, 3};
  EXPECT_EQ(q12_set(a, c).size(), 27u);
}

TEST(L3, Truncation) {
  EXPECT_EQ(L3_truncate(Seq{0, 2}, 4), CyclicSet(81, std::vector<Residue>{0, 1, 80, 9, 72}));
  EXPECT_EQ(L3_truncate(Seq{0, 2, 4}, 7), CyclicSet(2187, std::vector<Residue>{0, 1, 2186, 9, 2178, 81, 2106}));
  EXPECT_THROW(L3_truncate(Seq{0, 5}, 4), InvalidInput);
}

TEST(L3, HullQuotientCompatibility) {
  Seq a{0, 2};
  for (std::int64_t hi = 4; hi <= 6; ++hi) {
    auto big = hull_cyclic(L3_truncate(a, hi)).hull;
    auto small = hull_cyclic(L3_truncate(a, 4)).hull;
    for (Residue x : big.residues()) EXPECT_TRUE(small.contains(x % 81));
  }
}
