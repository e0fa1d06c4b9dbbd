// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "padic.hpp"
#include "serialize.hpp"
#include "witnesses.hpp"

using namespace qcg;

namespace {

GapSequence seq(std::vector<std::int64_t> v) { return GapSequence(std::move(v)); }

// all sequences with a_0 >= lo, gaps >= 2, entries <= hi, length 2..len
std::vector<GapSequence> gapped(std::int64_t lo, std::int64_t hi, std::size_t len) {
  std::vector<GapSequence> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (cur.size() >= 2) out.push_back(seq(cur));
    if (cur.size() == len) return;
    for (std::int64_t x = from; x <= hi; ++x) {
      cur.push_back(x);
      self(self, x + 2);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

// every epsilon vector with at least two nonzero entries
std::vector<std::vector<int>> epsilons(std::size_t len) {
  std::vector<std::vector<int>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> e(len);
    std::size_t c = code, nz = 0;
    for (auto& x : e) {
      x = static_cast<int>(c % 3) - 1;
      c /= 3;
      nz += x != 0;
    }
    if (nz >= 2) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST(ShiftChar, T3Examples) {
  EXPECT_EQ(shift_char_T3(seq({1, 3}), 0, 1, +1), 11);
  EXPECT_EQ(shift_char_T3(seq({1, 3}), 0, 1, -1), 7);
  EXPECT_EQ(shift_char_T3(seq({2, 4, 6}), 1, 2, +1), 297);
  EXPECT_THROW(shift_char_T3(seq({0, 2}), 0, 1, +1), InvalidInput);
  EXPECT_THROW(shift_char_T3(seq({1, 2}), 0, 1, +1), InvalidInput);
  EXPECT_THROW(shift_char_T3(seq({1, 3}), 1, 1, +1), InvalidInput);
}

TEST(ShiftChar, J3Examples) {
  auto p = shift_char_J3(seq({0, 2}), 0, 1, +1);
  EXPECT_EQ(p.multiplier, 11);
  EXPECT_EQ(p.index, 3);
  EXPECT_EQ(shift_char_J3(seq({0, 2}), 0, 1, -1).multiplier, 7);
  auto q = shift_char_J3(seq({1, 4}), 0, 1, +1);
  EXPECT_EQ(q.multiplier, 29);
  EXPECT_EQ(q.index, 5);
  EXPECT_THROW(shift_char_J3(seq({0, 2}), 1, 0, +1), InvalidInput);
}

TEST(ShiftChar, InPolarOfTruncation) {
  for (const auto& a : gapped(0, 10, 4))
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t l = k + 1; l < a.size(); ++l)
        for (int sign : {1, -1}) {
          auto chi = shift_char_J3(a, k, l, sign);
          auto lvl = chi.index + 1;
          for (std::int64_t an : a.entries())
            ASSERT_TRUE(zeta_eval(chi, pow_int(3, an), lvl).in_Tplus()) << a.str();
          if (a[0] == 0) continue;
          Integer t = shift_char_T3(a, k, l, sign);
          for (std::int64_t an : a.entries())
            ASSERT_TRUE(UnitRational(t, pow_int(3, an + 1)).in_Tplus()) << a.str();
          Integer m = pow_int(3, a[l] - a[k]) + 2 * sign;
          ASSERT_LT(tail_bound_T3(a, m, k, a.size()).bound, Rational(1, 4));
        }
}

TEST(TailBound, Examples) {
  EXPECT_EQ(tail_bound_T3(seq({1, 3, 5}), 11, 0, 2).bound, make_rational(11, 648));
  EXPECT_EQ(tail_bound_T3(seq({1, 3}), 11, 0, 2).bound, make_rational(11, 648));
  EXPECT_EQ(tail_bound_T3(seq({1, 3}), 1, 0, 0).bound, make_rational(1, 8));
}

TEST(Exclusion, T3Examples) {
  std::vector<int> pp{1, 1}, pm{1, -1};
  auto c = exclusion_T3(seq({1, 3}), pp);
  EXPECT_EQ(c.character, 11);
  EXPECT_EQ(c.target, make_rational(10, 81));
  EXPECT_EQ(c.evaluation, make_unit_rational(29, 81));
  EXPECT_TRUE(verify_certificate(c));
  auto d = exclusion_T3(seq({1, 3}), pm);
  EXPECT_EQ(d.rho, -1);
  EXPECT_EQ(d.character, 7);
  EXPECT_EQ(d.target, make_rational(8, 81));
  EXPECT_EQ(d.evaluation, make_unit_rational(-25, 81));
  EXPECT_TRUE(verify_certificate(d));
  std::vector<int> e{1, 1, 0};
  auto f = exclusion_T3(seq({2, 4, 7}), e);
  EXPECT_EQ(f.character, 33);
  EXPECT_EQ(f.evaluation, make_unit_rational(29, 81));
  std::vector<int> single{0, 1};
  EXPECT_THROW(exclusion_T3(seq({1, 3}), single), InvalidInput);
}

TEST(Exclusion, J3Examples) {
  std::vector<int> pp{1, 1}, pm{1, -1};
  auto c = exclusion_J3(seq({0, 2}), pp);
  EXPECT_EQ(c.character, 11);
  EXPECT_EQ(c.index, 3);
  EXPECT_EQ(c.target, 10);
  EXPECT_EQ(c.evaluation, make_unit_rational(29, 81));
  EXPECT_TRUE(verify_certificate(c, 4));
  auto d = exclusion_J3(seq({0, 2}), pm);
  EXPECT_EQ(d.target, -8);
  EXPECT_EQ(d.character, -7);
  EXPECT_EQ(norm(d.evaluation), make_rational(25, 81));
  EXPECT_TRUE(verify_certificate(d));
  auto e = exclusion_J3(seq({1, 4}), pp);
  EXPECT_EQ(e.character, 29);
  EXPECT_EQ(e.index, 5);
  EXPECT_EQ(e.target, 84);
  EXPECT_EQ(e.evaluation, make_unit_rational(83, 243));
}

TEST(Exclusion, TamperedCertificateRejected) {
  std::vector<int> pp{1, 1};
  auto c = exclusion_T3(seq({1, 3}), pp);
  c.character = 5;
  EXPECT_FALSE(verify_certificate(c));
  auto j = exclusion_J3(seq({0, 2}), pp);
  j.character = 5;
  EXPECT_FALSE(verify_certificate(j));
  auto t = exclusion_T3(seq({1, 3}), pp);
  t.tail_bound.bound = 0;
  EXPECT_FALSE(verify_certificate(t));
  auto short_level = exclusion_J3(seq({0, 2}), pp);
  EXPECT_THROW(verify_certificate(short_level, 3), InvalidInput);
}

TEST(Exclusion, EveryEpsilonCertifiedAndOutsideHull) {
  for (const auto& a : gapped(1, 6, 3)) {
    auto pts = points_K3(a);
    auto hull = hull_grid(pts).hull;
    for (const auto& eps : epsilons(a.size())) {
      auto c = exclusion_T3(a, eps);
      ASSERT_TRUE(verify_certificate(c)) << a.str();
      // closed form plus the exact remainder past l
      Rational rest = 0;
      for (std::size_t n = c.l + 1; n < a.size(); ++n)
        rest += Rational(eps[n]) * Rational(c.character) / Rational(pow_int(3, a[n] + 1));
      ASSERT_EQ(c.evaluation, UnitRational(Rational(c.normalization) * main_part(c) + rest)) << a.str();
      Rational scaled = canonical_mod1(c.target) * Rational(static_cast<long>(pts.modulus()));
      ASSERT_FALSE(hull.contains(scaled.get_num().get_si())) << a.str();
    }
  }
}

TEST(Exclusion, J3EveryEpsilonOutsideHull) {
  for (const auto& a : gapped(0, 5, 3)) {
    auto lvl = level_for(a.entries());
    auto hull = hull_cyclic(points_L3(a, lvl)).hull;
    oracle::i64 n = oracle::pow(3, lvl);
    for (const auto& eps : epsilons(a.size())) {
      auto c = exclusion_J3(a, eps);
      ASSERT_TRUE(verify_certificate(c)) << a.str();
      ASSERT_EQ(norm(c.evaluation), norm(UnitRational(main_part(c))));
      Integer x = Integer(c.target.get_num()) % n;
      if (x < 0) x += n;
      ASSERT_FALSE(hull.contains(x.get_si())) << a.str();
    }
  }
}

TEST(Certificate, JsonRoundTrip) {
  std::vector<int> e{1, 0, -1};
  for (const auto& c : {exclusion_T3(seq({1, 3, 6}), e), exclusion_J3(seq({0, 2, 5}), e)}) {
    Json j = certificate_json(c);
    Json again = certificate_json(certificate_from_json(Json::parse(j.dump())));
    EXPECT_EQ(j.dump(), again.dump());
    EXPECT_TRUE(verify_certificate(certificate_from_json(j)));
  }
}

TEST(Demo, Examples) {
  std::vector<Residue> h{1};
  auto b = membership_demo(DemoCase::H12B, 24, h);
  EXPECT_EQ(b.generators, CyclicSet(24, std::vector<Residue>{1, 3, 6}));
  EXPECT_EQ(b.target, 4);
  auto c = membership_demo(DemoCase::H12C, 64, h);
  EXPECT_EQ(c.generators, CyclicSet(64, std::vector<Residue>{1, 4, 8}));
  EXPECT_EQ(c.target, 5);
  auto j = membership_demo(parse_demo_case("J-two-x"), 243, h);
  EXPECT_EQ(j.generators, CyclicSet(243, std::vector<Residue>{1, 3}));
  EXPECT_EQ(j.target, 2);
  EXPECT_THROW(membership_demo(DemoCase::JTwoX, 24, h), InvalidInput);
  EXPECT_THROW(membership_demo(DemoCase::TwoX, 8, h), InvalidInput);
}

TEST(Demo, TargetsInHull) {
  for (Residue n = 1; n <= 40; ++n)
    for (Residue h1 = 0; h1 < n; ++h1) {
      std::vector<Residue> one{h1};
      for (auto which : {DemoCase::H12B, DemoCase::H12C}) {
        auto d = membership_demo(which, n, one);
        ASSERT_TRUE(oracle::hull(n, d.generators.residues()).count(d.target)) << n << " " << h1;
      }
      if ((n / std::gcd(h1, n)) % 4 != 0) {
        auto d = membership_demo(DemoCase::TwoX, n, one);
        ASSERT_TRUE(oracle::hull(n, d.generators.residues()).count(d.target));
      }
      for (Residue h2 = 0; h2 < n; ++h2)
        for (Residue s : {1, -1}) {
          std::vector<Residue> p{h1, h2, s};
          auto d = membership_demo(DemoCase::H12A, n, p);
          ASSERT_TRUE(oracle::hull(n, d.generators.residues()).count(d.target)) << n << " " << h1 << " " << h2;
        }
    }
}
