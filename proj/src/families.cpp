// SPDX-License-Identifier: Apache-2.0

#include "families.hpp"

#include <algorithm>
#include <charconv>

#include "padic.hpp"

namespace qcg {

namespace {

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput("malformed integer: '" + s + "'");
  return v;
}

}  // namespace

GapSequence::GapSequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("empty sequence");
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] <= entries_[i - 1]) throw InvalidInput("sequence must be strictly increasing");
}

GapSequence GapSequence::parse(std::string_view text) {
  std::vector<std::int64_t> v;
  for (const auto& s : split_commas(text)) v.push_back(parse_int(s));
  return GapSequence(std::move(v));
}

std::vector<std::int64_t> GapSequence::gaps() const {
  std::vector<std::int64_t> g;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) g.push_back(entries_[i + 1] - entries_[i]);
  return g;
}

GapSequence GapSequence::prefix(std::size_t count) const {
  if (count == 0 || count > entries_.size()) throw InvalidInput("prefix length out of range");
  return GapSequence(std::vector<std::int64_t>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(count)));
}

GapSequence GapSequence::extended(std::size_t count) const {
  auto v = entries_;
  while (v.size() < count) v.push_back(v.back() + 3);
  return GapSequence(std::move(v));
}

std::string GapSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

DivisibleChain::DivisibleChain(std::vector<Integer> b) : b_(std::move(b)) {
  if (b_.empty()) throw InvalidInput("empty chain");
  if (b_[0] <= 1) throw InvalidInput("chain requires b_0 > 1");
  for (std::size_t i = 0; i + 1 < b_.size(); ++i)
    if (b_[i + 1] <= b_[i] || b_[i + 1] % b_[i] != 0)
      throw InvalidInput("chain must be strictly increasing with b_n | b_{n+1}");
}

DivisibleChain DivisibleChain::parse(std::string_view text) {
  std::vector<Integer> v;
  for (const auto& s : split_commas(text)) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("malformed chain entry: '" + s + "'");
    v.emplace_back(s);
  }
  return DivisibleChain(std::move(v));
}

std::vector<Integer> DivisibleChain::ratios() const {
  std::vector<Integer> q;
  for (std::size_t i = 0; i + 1 < b_.size(); ++i) q.push_back(b_[i + 1] / b_[i]);
  return q;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::T2: return "T2";
    case FamilyKind::R2: return "R2";
    case FamilyKind::T3: return "T3";
    case FamilyKind::J3: return "J3";
  }
  return "?";
}

FamilyKind parse_family(std::string_view text) {
  if (text == "T2") return FamilyKind::T2;
  if (text == "R2") return FamilyKind::R2;
  if (text == "T3") return FamilyKind::T3;
  if (text == "J3") return FamilyKind::J3;
  throw InvalidInput("unknown family '" + std::string(text) + "'");
}

std::string_view to_string(Outcome outcome) {
  return outcome == Outcome::QuasiConvex ? "QuasiConvex" : "NotQuasiConvex";
}

namespace {

GridSet circle_points(const GapSequence& a, std::int64_t p, std::size_t count, Residue modulus) {
  if (!a.nonnegative()) throw InvalidInput("circle families need non-negative entries");
  if (count == 0) count = a.size();
  if (count > a.size()) throw InvalidInput("truncation longer than the sequence");
  std::vector<Rational> pts{Rational(0)};
  for (std::size_t i = 0; i < count; ++i) {
    Rational x(Integer(1), pow_int(p, a[i] + 1));
    pts.push_back(x);
    pts.push_back(-x);
  }
  Integer grid = pow_int(p, a[count - 1] + 1);
  if (!grid.fits_slong_p() || grid > (Integer(1) << 62)) throw InvalidInput("grid too large for this truncation");
  return GridSet::from_points(pts, modulus);
}

Rational two_adic(std::int64_t a_n) {
  // 2^-(a_n+1), for any integer a_n
  return a_n + 1 >= 0 ? Rational(Integer(1), pow_int(2, a_n + 1)) : Rational(pow_int(2, -(a_n + 1)));
}

Rational circle_point(std::int64_t p, std::int64_t a_n) { return Rational(Integer(1), pow_int(p, a_n + 1)); }

struct UnitGapFacts {
  std::vector<std::size_t> unit;  // indices n with g_n = 1
};

UnitGapFacts unit_gaps(const GapSequence& a) {
  UnitGapFacts f;
  auto g = a.gaps();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == 1) f.unit.push_back(i);
  return f;
}

// Conditions shared by Theorems A and B: at most one unit gap, and a unit gap
// must be followed by a gap > 2. Returns the violated clause (0-based: 0 for
// "two unit gaps", 1 for "unit gap then gap <= 2") with its witness.
std::optional<std::pair<int, WitnessRecipe>> dyadic_gap_violation(const GapSequence& a, bool real_line) {
  auto g = a.gaps();
  auto unit = unit_gaps(a).unit;
  auto point = [&](std::size_t n) { return real_line ? two_adic(a[n]) : circle_point(2, a[n]); };
  if (unit.size() >= 2) {
    std::size_t n1 = unit[0], n2 = unit[1];
    WitnessRecipe w;
    w.kind = "h1+h2";
    w.indices = {n1 + 1, n2 + 1};
    w.truncation = a.prefix(n2 + 2);
    w.point = point(n1 + 1) + point(n2 + 1);
    if (!real_line) w.point = canonical_mod1(w.point);
    return std::make_pair(0, w);
  }
  for (std::size_t n : unit) {
    if (n + 1 < g.size() && g[n + 1] <= 2) {
      // q_{n+1} = 4: h = x_{n+2}, 4h = x_{n+1}, 8h = x_n, and 5h joins the hull
      WitnessRecipe w;
      w.kind = "5h";
      w.indices = {n, n + 1, n + 2};
      w.truncation = a.prefix(n + 3);
      w.point = point(n + 2) * 5;
      if (!real_line) w.point = canonical_mod1(w.point);
      return std::make_pair(1, w);
    }
  }
  return std::nullopt;
}

WitnessRecipe translate_recipe(const GapSequence& a, std::int64_t p) {
  // b_0 = p in {2, 3}: the polar sits inside b_0 Z, so 1/b_0 + X joins the hull.
  // For p = 2 and a_1 = 1 the translate of x_1 is -x_1, so use x_2.
  GapSequence full = a.extended(3);
  std::size_t j = (p == 2 && full[1] == 1) ? 2 : 1;
  GapSequence t = full.prefix(j + 1);
  WitnessRecipe w;
  w.kind = "translate";
  w.indices = {0, j};
  w.truncation = t;
  w.point = canonical_mod1(circle_point(p, t[0]) + circle_point(p, t[j]));
  return w;
}

Verdict not_qc(std::string clause, WitnessRecipe w) {
  return Verdict{Outcome::NotQuasiConvex, std::move(clause), std::move(w)};
}

}  // namespace

GridSet points_K2(const GapSequence& a, std::size_t count, Residue modulus) { return circle_points(a, 2, count, modulus); }
GridSet points_K3(const GapSequence& a, std::size_t count, Residue modulus) { return circle_points(a, 3, count, modulus); }

std::vector<Rational> points_R2(const GapSequence& a, std::size_t count) {
  if (count == 0) count = a.size();
  if (count > a.size()) throw InvalidInput("truncation longer than the sequence");
  std::vector<Rational> pts{Rational(0)};
  for (std::size_t i = 0; i < count; ++i) {
    pts.push_back(two_adic(a[i]));
    pts.push_back(-two_adic(a[i]));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

CyclicSet points_L3(const GapSequence& a, std::int64_t level) { return L3_truncate(a.entries(), level); }

Verdict verdict_T2(const GapSequence& a) {
  if (!a.nonnegative()) throw InvalidInput("T2 family needs non-negative entries");
  if (a[0] == 0) return not_qc("A.i", translate_recipe(a, 2));
  if (auto v = dyadic_gap_violation(a, false)) return not_qc(v->first == 0 ? "A.ii" : "A.iii", v->second);
  return {};
}

Verdict verdict_R2(const GapSequence& a) {
  if (auto v = dyadic_gap_violation(a, true)) return not_qc(v->first == 0 ? "B.i" : "B.ii", v->second);
  return {};
}

Verdict verdict_T3(const GapSequence& a) {
  if (!a.nonnegative()) throw InvalidInput("T3 family needs non-negative entries");
  if (a[0] == 0) return not_qc("C.i", translate_recipe(a, 3));
  auto unit = unit_gaps(a).unit;
  if (!unit.empty()) {
    // x = x_{n+1}, 3x = x_n and 2x has odd order
    std::size_t n = unit.front();
    WitnessRecipe w;
    w.kind = "2x";
    w.indices = {n, n + 1};
    w.truncation = a.prefix(n + 2);
    w.point = canonical_mod1(circle_point(3, a[n + 1]) * 2);
    return not_qc("C.ii", w);
  }
  return {};
}

Verdict verdict_J3(const GapSequence& a) {
  if (!a.nonnegative()) throw InvalidInput("J3 family needs non-negative entries");
  auto unit = unit_gaps(a).unit;
  if (!unit.empty()) {
    // y_{n+1} = 3 y_n, and 2 y_n lies in Q({y_n, 3 y_n})
    std::size_t n = unit.front();
    WitnessRecipe w;
    w.kind = "2y";
    w.indices = {n, n + 1};
    w.truncation = a.prefix(n + 2);
    w.point = Rational(pow_int(3, a[n]) * 2);
    w.level = a[n + 1] + 2;
    return not_qc("D", w);
  }
  return {};
}

Verdict verdict(FamilyKind kind, const GapSequence& a) {
  switch (kind) {
    case FamilyKind::T2: return verdict_T2(a);
    case FamilyKind::R2: return verdict_R2(a);
    case FamilyKind::T3: return verdict_T3(a);
    case FamilyKind::J3: return verdict_J3(a);
  }
  throw InvalidInput("unknown family");
}

bool sufficient_gap_condition(const GapSequence& a, Sufficiency which) {
  auto g = a.gaps();
  bool gaps_ok = std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x > 1; });
  switch (which) {
    case Sufficiency::T2: return a[0] > 0 && gaps_ok;
    case Sufficiency::R2: return gaps_ok;
    case Sufficiency::J2: return a[0] >= 0 && gaps_ok;
  }
  return false;
}

DivisibleChain chain_from_family(const GapSequence& a, std::int64_t p) {
  if (p != 2 && p != 3) throw InvalidInput("chains are built for p = 2 or p = 3");
  if (!a.nonnegative()) throw InvalidInput("chain needs non-negative entries");
  std::vector<Integer> b;
  for (auto an : a.entries()) b.push_back(pow_int(p, an + 1));
  return DivisibleChain(std::move(b));
}

bool NecessaryReport::all_pass() const {
  return std::all_of(flags.begin(), flags.end(), [](const NecessaryFlag& f) { return f.holds; });
}

namespace {

void dyadic_ratio_flags(const std::vector<Integer>& q, NecessaryReport& r, const std::string& prefix,
                        char first_clause) {
  auto twos = std::count_if(q.begin(), q.end(), [](const Integer& x) { return x == 2; });
  r.flags.push_back({prefix + first_clause, twos <= 1});
  bool follow = true;
  for (std::size_t n = 0; n + 1 < q.size(); ++n)
    if (q[n] == 2 && q[n + 1] <= 4) follow = false;
  r.flags.push_back({prefix + static_cast<char>(first_clause + 1), follow});
}

}  // namespace

NecessaryReport necessary_report_T(const DivisibleChain& b) {
  NecessaryReport r;
  const auto& e = b.entries();
  auto q = b.ratios();
  r.flags.push_back({"T.a", e[0] >= 4});
  dyadic_ratio_flags(q, r, "T.", 'b');
  bool div3 = true;
  for (std::size_t n = 0; n < q.size(); ++n)
    if (e[n + 1] % 4 != 0 && q[n] == 3) div3 = false;
  r.flags.push_back({"T.div3", div3});
  return r;
}

NecessaryReport necessary_report_R(const DivisibleChain& b) {
  NecessaryReport r;
  dyadic_ratio_flags(b.ratios(), r, "R.", 'a');
  return r;
}

}  // namespace qcg
