// SPDX-License-Identifier: Apache-2.0

#include "acceptance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "circle.hpp"
#include "families.hpp"
#include "padic.hpp"
#include "polar.hpp"
#include "real_line.hpp"
#include "witnesses.hpp"

namespace qcg {

namespace {

using Fail = std::optional<std::string>;

struct Check {
  bool pass;
  std::string detail;
};

Check ok(std::string detail) { return {true, std::move(detail)}; }
Check bad(std::string detail) { return {false, std::move(detail)}; }

// Runs body(0..count-1) on `jobs` threads and reports the failure with the
// smallest index, so the outcome does not depend on scheduling.
Fail parallel_for(std::size_t count, int jobs, const std::function<Fail(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop{count};
  std::mutex mu;
  std::size_t best = count;
  std::string message;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i >= stop.load()) return;
      Fail f;
      try {
        f = body(i);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      if (f) {
        std::lock_guard lock(mu);
        if (i < best) {
          best = i;
          message = *f;
          stop.store(i);
        }
      }
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best < count) return message;
  return std::nullopt;
}

std::string seq_str(const GapSequence& a) { return "(" + a.str() + ")"; }

Residue grid_residue(const Rational& point, Residue grid) {
  Rational r = canonical_mod1(point) * Rational(static_cast<long>(grid));
  if (r.get_den() != 1) throw std::logic_error("point off the grid");
  Integer v = r.get_num() % grid;
  if (v < 0) v += grid;
  return v.get_si();
}

std::vector<std::vector<int>> epsilon_vectors(std::size_t len) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int e : {-1, 0, 1}) {
        auto w = v;
        w.push_back(e);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::size_t nonzero(const std::vector<int>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](int e) { return e != 0; }));
}

// -- 1 -------------------------------------------------------------------

Check c1_membership_lemmas(int jobs) {
  auto f = parallel_for(100, jobs, [](std::size_t i) -> Fail {
    const Residue n = static_cast<Residue>(i) + 1;
    std::vector<char> good(static_cast<std::size_t>(n * n));
    for (Residue k = 0; k < n; ++k)
      for (Residue x = 0; x < n; ++x) good[static_cast<std::size_t>(k * n + x)] = residue_in_Tplus(k * x % n, n);
    auto member = [&](const MembershipDemo& d) {
      for (Residue k = 0; k < n; ++k) {
        if (good[static_cast<std::size_t>(k * n + d.target)]) continue;
        const auto& g = d.generators.residues();
        if (std::all_of(g.begin(), g.end(), [&](Residue e) { return good[static_cast<std::size_t>(k * n + e)]; }))
          return false;
      }
      return true;
    };
    for (Residue h = 0; h < n; ++h) {
      std::array<Residue, 1> p{h};
      if (!member(membership_demo(DemoCase::H12B, n, p))) return "4h not in hull({h,3h,6h}) for n=" + std::to_string(n) + ", h=" + std::to_string(h);
      if (!member(membership_demo(DemoCase::H12C, n, p))) return "5h not in hull({h,4h,8h}) for n=" + std::to_string(n) + ", h=" + std::to_string(h);
    }
    for (Residue h1 = 0; h1 < n; ++h1)
      for (Residue h2 = 0; h2 < n; ++h2)
        for (Residue s : {Residue{1}, Residue{-1}}) {
          std::array<Residue, 3> p{h1, h2, s};
          if (!member(membership_demo(DemoCase::H12A, n, p)))
            return "h1" + std::string(s > 0 ? "+" : "-") + "h2 not in hull for n=" + std::to_string(n) + ", h1=" + std::to_string(h1) + ", h2=" + std::to_string(h2);
        }
    return std::nullopt;
  });
  return f ? bad(*f) : ok("all h, h1, h2 in Z(n), n <= 100");
}

// -- 2 -------------------------------------------------------------------

Check c2_two_x_equivalence(int jobs) {
  auto f = parallel_for(200, jobs, [](std::size_t i) -> Fail {
    const Residue n = static_cast<Residue>(i) + 1;
    for (Residue x = 0; x < n; ++x)
      if (!check_two_x_equivalence(x, n).consistent())
        return "the four conditions disagree at x=" + std::to_string(x) + " in Z(" + std::to_string(n) + ")";
    return std::nullopt;
  });
  return f ? bad(*f) : ok("all x in Z(n), n <= 200");
}

// -- 3 -------------------------------------------------------------------

Check c3_proof_constant() {
  const std::vector<Integer> chars{1, 4, 8};
  IntervalUnion got = circle_polar(chars);
  const Rational c(15, 64);
  IntervalUnion expected = arc_Tm(8).unite(arc_Tm(16).translated(c)).unite(arc_Tm(16).translated(-c));
  if (got != expected) return bad("polar is " + got.str() + ", expected " + expected.str());
  return ok(got.str());
}

// -- 4 -------------------------------------------------------------------

Check c4_theorem_c_positive() {
  const GapSequence a({1, 3, 5, 7});
  const Residue grid = pow_int(3, 9).get_si();
  auto report = hull_grid(points_K3(a, 0, grid));
  if (!report.quasi_convex()) return bad("K_a,3 truncation on grid 3^9 is not quasi-convex");
  std::size_t certs = 0;
  for (const auto& eps : epsilon_vectors(a.size())) {
    if (nonzero(eps) < 2) continue;
    ExclusionCertificate cert = exclusion_T3(a, eps);
    std::string where = "epsilon form " + cert.target.get_str();
    if (!verify_certificate(cert)) return bad(where + ": certificate rejected");
    Rational rest = 0;
    for (std::size_t n = cert.l + 1; n < eps.size(); ++n)
      rest += Rational(Integer(cert.normalization * eps[n]) * cert.character, pow_int(3, a[n] + 1));
    UnitRational expected(Rational(cert.normalization) * (main_part(cert) + rest));
    if (expected != cert.evaluation) return bad(where + ": evaluation " + cert.evaluation.str() + " != closed form " + expected.str());
    if (report.hull.contains(grid_residue(cert.target, grid))) return bad(where + ": target lies in the hull");
    ++certs;
  }
  return ok("hull = set on grid 3^9; " + std::to_string(certs) + " certificates verified");
}

// -- 5 -------------------------------------------------------------------

Check c5_theorem_c_negative() {
  struct Case {
    FamilyKind kind;
    std::vector<std::int64_t> seq;
  };
  const std::vector<Case> cases{{FamilyKind::T3, {0, 2}}, {FamilyKind::T3, {0, 3, 5}}, {FamilyKind::T2, {0, 2}}, {FamilyKind::T2, {0, 1, 3}}};
  for (const auto& c : cases) {
    GapSequence a(c.seq);
    Verdict v = verdict(c.kind, a);
    const std::string where = std::string(to_string(c.kind)) + seq_str(a);
    if (v.outcome != Outcome::NotQuasiConvex || !v.violated || (*v.violated != "A.i" && *v.violated != "C.i"))
      return bad(where + ": expected the a_0 > 0 clause to fail");
    const auto& w = *v.witness_recipe;
    GridSet set = c.kind == FamilyKind::T3 ? points_K3(w.truncation) : points_K2(w.truncation);
    auto report = hull_grid(set);
    Residue r = grid_residue(w.point, set.modulus());
    if (report.quasi_convex() || set.contains(r) || !report.hull.contains(r))
      return bad(where + ": translate " + to_string(w.point) + " does not contaminate the hull");
  }
  GridSet unit = points_K3(GapSequence({1, 2}));
  if (unit.modulus() != 27) return bad("unexpected grid for (1,2)");
  if (unit.contains(2) || !in_hull(27, unit.residues(), 2)) return bad("2/27 not in hull({0, +-1/9, +-1/27})");
  return ok("translates contaminate every a_0 = 0 case; 2/27 in hull on grid 27");
}

// -- 6 -------------------------------------------------------------------

Check c6_theorem_d() {
  const GapSequence a({0, 2, 4});
  const std::int64_t level = 7;
  const Residue n = pow_int(3, level).get_si();
  auto report = hull_cyclic(points_L3(a, level));
  if (!report.quasi_convex()) return bad("L_a,3 truncation in Z(3^7) is not quasi-convex");
  std::size_t certs = 0;
  for (const auto& eps : epsilon_vectors(a.size())) {
    if (nonzero(eps) != 2) continue;
    ExclusionCertificate cert = exclusion_J3(a, eps);
    std::string where = "epsilon sum " + cert.target.get_str();
    if (!verify_certificate(cert, level)) return bad(where + ": certificate rejected");
    if (cert.evaluation != UnitRational(Rational(cert.normalization) * main_part(cert)))
      return bad(where + ": evaluation differs from rho/3 + 2/3^(a_l-a_k+2)");
    Integer r = cert.target.get_num() % n;
    if (r < 0) r += n;
    if (report.hull.contains(r.get_si())) return bad(where + ": target lies in the hull");
    ++certs;
  }
  for (std::int64_t m = 2; m <= 6; ++m) {
    const Residue order = pow_int(3, m).get_si();
    std::vector<Residue> e{0, 1, order - 1, 3, order - 3};
    CyclicSet set(order, e);
    if (set.contains(2) || !in_hull(order, set.residues(), 2))
      return bad("2 not in hull({0, +-1, +-3}) in Z(3^" + std::to_string(m) + ")");
  }
  return ok("hull = set in Z(3^7); " + std::to_string(certs) + " certificates verified; 2 in hull for m = 2..6");
}

const std::vector<std::vector<std::int64_t>> kBridgeSequences{{1, 3}, {1, 3, 5}, {0, 2}, {0, 2, 4}};

// -- 7 -------------------------------------------------------------------

Check c7_q12(int jobs) {
  auto f = parallel_for(kBridgeSequences.size() * 4, jobs, [](std::size_t i) -> Fail {
    const auto& a = kBridgeSequences[i / 4];
    const Side side = (i % 4) < 2 ? Side::Circle : Side::Padic;
    const std::int64_t level = a.back() + 2 + static_cast<std::int64_t>(i % 2);
    Carrier c{side, level};
    if (q12_set(a, c) != epsilon_forms(a, c))
      return "q12 != epsilon forms for (" + GapSequence(a).str() + ") at level " + std::to_string(level) +
             (side == Side::Circle ? " on the circle side" : " on the 3-adic side");
    return std::nullopt;
  });
  return f ? bad(*f) : ok("4 sequences, both carriers, levels a_max+2 and a_max+3");
}

// -- 8 -------------------------------------------------------------------

Check c8_jm() {
  for (const auto& a : kBridgeSequences) {
    const std::int64_t level = a.back() + 3;
    const std::int64_t k_max = level - 1;
    std::vector<std::int64_t> expected;
    for (std::int64_t k = 0; k <= k_max; ++k)
      if (std::find(a.begin(), a.end(), k) == a.end()) expected.push_back(k);
    for (Side side : {Side::Circle, Side::Padic}) {
      Carrier c{side, level};
      if (compute_Jm(a, 1, k_max, c) != expected || compute_Jm(a, 2, k_max, c) != expected)
        return bad("J_1 or J_2 differs from N \\ a for (" + GapSequence(a).str() + ")");
    }
  }
  return ok("J_1 = J_2 = N \\ a up to k = a_max + 2, both sides");
}

// -- 9 -------------------------------------------------------------------

std::vector<GapSequence> small_sequences(std::int64_t max_entry, std::size_t max_len) {
  std::vector<GapSequence> out;
  const std::int64_t span = max_entry + 1;
  for (std::uint32_t mask = 1; mask < (1u << span); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_len) continue;
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < span; ++i)
      if (mask & (1u << i)) v.push_back(i);
    out.emplace_back(v);
  }
  std::sort(out.begin(), out.end(), [](const GapSequence& x, const GapSequence& y) {
    return std::lexicographical_compare(x.entries().begin(), x.entries().end(), y.entries().begin(), y.entries().end());
  });
  return out;
}

Fail bridge_T2(const GapSequence& a) {
  Verdict v = verdict_T2(a);
  if (v.outcome == Outcome::QuasiConvex) {
    for (std::size_t t = 1; t <= a.size(); ++t)
      if (!is_quasi_convex(points_K2(a, t))) return "T2" + seq_str(a) + ": verdict QuasiConvex but prefix " + std::to_string(t) + " is not";
    return std::nullopt;
  }
  const auto& w = *v.witness_recipe;
  GridSet set = points_K2(w.truncation);
  Residue r = grid_residue(w.point, set.modulus());
  if (set.contains(r) || !in_hull(set.modulus(), set.residues(), r))
    return "T2" + seq_str(a) + ": witness " + to_string(w.point) + " not an extra hull point of " + seq_str(w.truncation);
  return std::nullopt;
}

Fail bridge_R2(const GapSequence& a) {
  Verdict v = verdict_R2(a);
  if (v.outcome == Outcome::QuasiConvex) {
    for (std::size_t t = 1; t <= a.size(); ++t) {
      RealFiniteSet s(points_R2(a, t));
      if (hull_R(s) != s.points()) return "R2" + seq_str(a) + ": verdict QuasiConvex but prefix " + std::to_string(t) + " is not";
    }
    return std::nullopt;
  }
  const auto& w = *v.witness_recipe;
  RealFiniteSet s(points_R2(w.truncation));
  if (s.contains(w.point) || !member_hull_R(s, w.point).in)
    return "R2" + seq_str(a) + ": witness " + to_string(w.point) + " not an extra hull point of " + seq_str(w.truncation);
  return std::nullopt;
}

Check c9_theorems_ab(int jobs) {
  const auto seqs = small_sequences(9, 4);
  auto f = parallel_for(seqs.size() * 2, jobs, [&](std::size_t i) -> Fail {
    return i % 2 == 0 ? bridge_T2(seqs[i / 2]) : bridge_R2(seqs[i / 2]);
  });
  return f ? bad(*f) : ok(std::to_string(seqs.size()) + " sequences, T2 and R2");
}

// -- 10 ------------------------------------------------------------------

bool flag(const NecessaryReport& r, const std::string& id) {
  for (const auto& f : r.flags)
    if (f.id == id) return f.holds;
  throw std::logic_error("no flag " + id);
}

GridSet chain_grid_set(const DivisibleChain& b) {
  std::vector<Rational> pts{Rational(0)};
  for (const auto& x : b.entries()) {
    pts.emplace_back(Integer(1), x);
    pts.emplace_back(Integer(-1), x);
  }
  return GridSet::from_points(pts);
}

RealFiniteSet chain_real_set(const DivisibleChain& b) {
  std::vector<Rational> pts{Rational(0)};
  for (const auto& x : b.entries()) {
    pts.emplace_back(Integer(1), x);
    pts.emplace_back(Integer(-1), x);
  }
  return RealFiniteSet(pts);
}

Check c10_necessity(int jobs) {
  DivisibleChain b1({2, 8});
  if (flag(necessary_report_T(b1), "T.a") || is_quasi_convex(chain_grid_set(b1))) return bad("b=(2,8): b_0 >= 4 should fail");
  DivisibleChain b2({9, 27, 81});
  GridSet x2 = chain_grid_set(b2);
  if (flag(necessary_report_T(b2), "T.div3") || x2.contains(6) || !in_hull(81, x2.residues(), 6))
    return bad("b=(9,27,81): q_n != 3 rule should fail with 2/27 in the hull");

  std::vector<DivisibleChain> chains;
  for (long b0 : {2, 3, 4, 5, 6, 8})
    for (std::size_t len = 2; len <= 3; ++len) {
      std::vector<int> q(len, 2);
      for (;;) {
        std::vector<Integer> b{Integer(b0)};
        for (int r : q) b.push_back(b.back() * r);
        if (b.back() <= 1024) chains.emplace_back(b);
        std::size_t i = 0;
        while (i < len && q[i] == 5) q[i++] = 2;
        if (i == len) break;
        ++q[i];
      }
    }
  std::atomic<int> checked{0};
  auto f = parallel_for(chains.size(), jobs, [&](std::size_t i) -> Fail {
    const auto& b = chains[i];
    std::string where = "b=(";
    for (std::size_t j = 0; j < b.entries().size(); ++j) where += (j ? "," : "") + b.entries()[j].get_str();
    where += ")";
    auto rt = necessary_report_T(b);
    if (!flag(rt, "T.b") || !flag(rt, "T.c")) {
      ++checked;
      if (is_quasi_convex(chain_grid_set(b))) return where + ": q=2 pattern but X is quasi-convex in T";
    }
    auto rr = necessary_report_R(b);
    if (!flag(rr, "R.a") || !flag(rr, "R.b")) {
      ++checked;
      RealFiniteSet s = chain_real_set(b);
      if (hull_R(s) == s.points()) return where + ": q=2 pattern but S is quasi-convex in R";
    }
    return std::nullopt;
  });
  if (f) return bad(*f);
  return ok("(2,8) and (9,27,81) fail as stated; " + std::to_string(checked.load()) + " q=2 violations confirmed by brute force");
}

// -- 11 ------------------------------------------------------------------

constexpr Residue kBig = 2187;   // 3^7
constexpr Residue kSmall = 81;   // 3^4
constexpr std::size_t kWords = (kBig + 63) / 64;
using Bits = std::array<std::uint64_t, kWords>;
using SmallBits = std::array<std::uint64_t, 2>;

Fail multiply_maps(int jobs) {
  return parallel_for(64, jobs, [](std::size_t i) -> Fail {
    const Residue n = static_cast<Residue>(i) + 1;
    SmallCyclicEngine eng(n);
    std::vector<std::uint64_t> subsets;
    for (Residue x = 0; x < n; ++x) {
      subsets.push_back(std::uint64_t{1} << x);
      for (Residue y = x + 1; y < n; ++y) {
        subsets.push_back((std::uint64_t{1} << x) | (std::uint64_t{1} << y));
        for (Residue z = y + 1; z < n; ++z)
          subsets.push_back((std::uint64_t{1} << x) | (std::uint64_t{1} << y) | (std::uint64_t{1} << z));
      }
    }
    std::unordered_map<std::uint64_t, std::uint64_t> hulls;
    hulls.reserve(subsets.size());
    for (auto s : subsets) hulls.emplace(s, eng.hull(s));
    for (auto s : subsets) {
      const std::uint64_t h = hulls.at(s);
      for (Residue k = 0; k < n; ++k) {
        if (eng.multiply(h, k) & ~hulls.at(eng.multiply(s, k)))
          return "multiply by " + std::to_string(k) + " on grid " + std::to_string(n) + " breaks f(Q(E)) in Q(f(E))";
      }
    }
    return std::nullopt;
  });
}

Fail quotient_map(int jobs) {
  std::vector<Bits> good(kBig, Bits{});
  for (Residue x = 0; x < kBig; ++x)
    for (Residue k = 0; k < kBig; ++k)
      if (residue_in_Tplus(k * x % kBig, kBig)) good[x][k / 64] |= std::uint64_t{1} << (k % 64);
  std::array<SmallBits, kSmall> good_small{};
  for (Residue x = 0; x < kSmall; ++x)
    for (Residue k = 0; k < kSmall; ++k)
      if (residue_in_Tplus(k * x % kSmall, kSmall)) good_small[x][k / 64] |= std::uint64_t{1} << (k % 64);
  Bits all{};
  for (Residue x = 0; x < kBig; ++x) all[x / 64] |= std::uint64_t{1} << (x % 64);

  auto valuation = [](Residue x) {
    int v = 0;
    if (x == 0) return 7;
    while (x % 3 == 0) x /= 3, ++v;
    return v;
  };
  std::mutex cache_mu;
  std::map<SmallBits, Bits> preimages;
  auto preimage = [&](const SmallBits& h) {
    std::lock_guard lock(cache_mu);
    auto it = preimages.find(h);
    if (it != preimages.end()) return it->second;
    Bits b{};
    for (Residue x = 0; x < kBig; ++x) {
      Residue r = x % kSmall;
      if (h[r / 64] >> (r % 64) & 1) b[x / 64] |= std::uint64_t{1} << (x % 64);
    }
    preimages.emplace(h, b);
    return b;
  };
  // f(Q(E)) in Q(f(E)) iff Q(E) misses the preimage of the complement of Q(f(E))
  auto check = [&](std::span<const Residue> e) -> bool {
    Bits polar = all;
    SmallBits polar_small{~std::uint64_t{0}, (std::uint64_t{1} << (kSmall - 64)) - 1};
    for (Residue x : e) {
      for (std::size_t w = 0; w < kWords; ++w) polar[w] &= good[x][w];
      const auto& g = good_small[x % kSmall];
      polar_small[0] &= g[0];
      polar_small[1] &= g[1];
    }
    SmallBits hull_small{~std::uint64_t{0}, (std::uint64_t{1} << (kSmall - 64)) - 1};
    for (std::size_t w = 0; w < 2; ++w)
      for (std::uint64_t p = polar_small[w]; p; p &= p - 1) {
        const auto& g = good_small[w * 64 + std::countr_zero(p)];
        hull_small[0] &= g[0];
        hull_small[1] &= g[1];
      }
    Bits rest = preimage(hull_small);
    std::uint64_t any = 0;
    for (std::size_t w = 0; w < kWords; ++w) any |= (rest[w] = all[w] & ~rest[w]);
    for (std::size_t w = 0; w < kWords && any; ++w)
      for (std::uint64_t p = polar[w]; p && any; p &= p - 1) {
        const Bits& g = good[w * 64 + std::countr_zero(p)];
        any = 0;
        for (std::size_t u = 0; u < kWords; ++u) any |= (rest[u] &= g[u]);
      }
    return any == 0;
  };

  // Units of Z(3^7) act on both sides compatibly, so each E may be scaled to
  // contain 3^v with v its least valuation.
  struct Item {
    int v;
    Residue first;
    std::vector<Residue> rest;
  };
  std::vector<Item> items;
  for (int v = 0; v <= 7; ++v) {
    Residue lead = v == 7 ? 0 : pow_int(3, v).get_si();
    std::vector<Residue> rest;
    for (Residue x = 0; x < kBig; ++x)
      if (x != lead && valuation(x) >= v) rest.push_back(x);
    items.push_back({v, lead, rest});
  }
  std::vector<std::pair<std::size_t, std::size_t>> work;  // (item, index of second element or npos)
  for (std::size_t it = 0; it < items.size(); ++it) {
    work.emplace_back(it, std::size_t(-1));
    for (std::size_t j = 0; j < items[it].rest.size(); ++j) work.emplace_back(it, j);
  }
  return parallel_for(work.size(), jobs, [&](std::size_t w) -> Fail {
    const auto& item = items[work[w].first];
    const std::size_t j = work[w].second;
    auto describe = [](std::span<const Residue> e) {
      std::string s = "{";
      for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
      return s + "}";
    };
    if (j == std::size_t(-1)) {
      std::array<Residue, 1> e{item.first};
      if (!check(e)) return "quotient Z(3^7) -> Z(3^4) fails for E=" + describe(e);
      return std::nullopt;
    }
    std::array<Residue, 2> e2{item.first, item.rest[j]};
    if (!check(e2)) return "quotient Z(3^7) -> Z(3^4) fails for E=" + describe(e2);
    for (std::size_t m = j + 1; m < item.rest.size(); ++m) {
      std::array<Residue, 3> e3{item.first, item.rest[j], item.rest[m]};
      if (!check(e3)) return "quotient Z(3^7) -> Z(3^4) fails for E=" + describe(e3);
    }
    return std::nullopt;
  });
}

Check c11_functoriality(int jobs) {
  if (auto f = multiply_maps(jobs)) return bad(*f);
  if (auto f = quotient_map(jobs)) return bad(*f);
  return ok("multiply-by-k on grids N <= 64 and Z(3^7) -> Z(3^4), all |E| <= 3 (quotient up to units)");
}

// -- 12 ------------------------------------------------------------------

Check c12_division_lemma(int jobs) {
  std::atomic<long> cases{0};
  auto f = parallel_for(64, jobs, [&](std::size_t i) -> Fail {
    const Residue n = static_cast<Residue>(i) + 1;
    SmallCyclicEngine eng(n);
    auto in_Tm = [n](Residue j, Residue m) { return 4 * m * std::min(j, n - j) <= n; };
    auto orbit = [n](Residue j) { return (std::uint64_t{1} << j) | (std::uint64_t{1} << ((n - j) % n)); };
    long local = 0;
    for (Residue m = 1; m <= n; ++m) {
      std::vector<std::uint64_t> orbits_m, orbits_4m;
      for (Residue j = 0; 2 * j <= n; ++j) {
        if (in_Tm(j, m)) orbits_m.push_back(orbit(j));
        if (in_Tm(j, 4 * m)) orbits_4m.push_back(orbit(j));
      }
      // (a) Y in T_m symmetric, 0 < k <= 2m: kY quasi-convex => Y quasi-convex
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << orbits_m.size()); ++pick) {
        std::uint64_t y = 0;
        for (std::size_t b = 0; b < orbits_m.size(); ++b)
          if (pick >> b & 1) y |= orbits_m[b];
        const bool y_qc = eng.quasi_convex(y);
        for (Residue k = 1; k <= 2 * m; ++k) {
          ++local;
          if (!y_qc && eng.quasi_convex(eng.multiply(y, k)))
            return "clause (a) fails on grid " + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ", Y mask " + std::to_string(y);
        }
      }
      // (b) Y in T_4m symmetric with +-1/(4m) on the grid: 4mY quasi-convex => Y u {+-1/(4m)} quasi-convex
      if (n % (4 * m) != 0) continue;
      const std::uint64_t ends = orbit(n / (4 * m));
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << orbits_4m.size()); ++pick) {
        std::uint64_t y = 0;
        for (std::size_t b = 0; b < orbits_4m.size(); ++b)
          if (pick >> b & 1) y |= orbits_4m[b];
        ++local;
        if (eng.quasi_convex(eng.multiply(y, 4 * m)) && !eng.quasi_convex(y | ends))
          return "clause (b) fails on grid " + std::to_string(n) + ", m=" + std::to_string(m) + ", Y mask " + std::to_string(y);
      }
    }
    cases += local;
    return std::nullopt;
  });
  if (f) return bad(*f);
  return ok(std::to_string(cases.load()) + " (Y, k, m) cases on grids N <= 64");
}

Check run_one(int id, int jobs) {
  switch (id) {
    case 1: return c1_membership_lemmas(jobs);
    case 2: return c2_two_x_equivalence(jobs);
    case 3: return c3_proof_constant();
    case 4: return c4_theorem_c_positive();
    case 5: return c5_theorem_c_negative();
    case 6: return c6_theorem_d();
    case 7: return c7_q12(jobs);
    case 8: return c8_jm();
    case 9: return c9_theorems_ab(jobs);
    case 10: return c10_necessity(jobs);
    case 11: return c11_functoriality(jobs);
    case 12: return c12_division_lemma(jobs);
  }
  throw InvalidInput("no criterion " + std::to_string(id));
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> table{
      {1, "membership lemmas in Z(n), n <= 100", 60},
      {2, "2x in Q({x,3x}) four-way equivalence, n <= 200", 60},
      {3, "polar of {1,4,8} in T", 1},
      {4, "K_a,3 positive case a=(1,3,5,7) with certificates", 30},
      {5, "K_a,3 negative cases", 5},
      {6, "L_a,3 in J_3: a=(0,2,4) at level 7 and a=(0,1)", 30},
      {7, "Q_1 n Q_2 equals the epsilon forms", 30},
      {8, "J_1 = J_2 = N \\ a", 5},
      {9, "K_a,2 and R_a,2 verdicts against brute force", 300},
      {10, "necessary conditions on divisible chains", 60},
      {11, "hull pushforward under homomorphisms", 60},
      {12, "division lemma on grids N <= 64", 300},
  };
  return table;
}

std::vector<CriterionResult> run_acceptance(int jobs, const std::vector<int>& only, const CriterionCallback& on_done) {
  for (int id : only)
    if (id < 1 || id > static_cast<int>(acceptance_criteria().size())) throw InvalidInput("no criterion " + std::to_string(id));
  std::vector<CriterionResult> out;
  for (const auto& info : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), info.id) == only.end()) continue;
    CriterionResult r;
    r.id = info.id;
    r.name = info.name;
    auto start = std::chrono::steady_clock::now();
    try {
      Check c = run_one(info.id, jobs);
      r.pass = c.pass;
      r.detail = c.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qcg
