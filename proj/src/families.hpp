// SPDX-License-Identifier: Apache-2.0
//
// Gap sequences, the four point families they generate, divisible chains,
// and the verdict functions deciding quasi-convexity of each family.
//
//   K_{a,2} = {0} u {+-2^-(a_n+1)} in T      verdict_T2
//   R_{a,2} = {0} u {+-2^-(a_n+1)} in R      verdict_R2
//   K_{a,3} = {0} u {+-3^-(a_n+1)} in T      verdict_T3
//   L_{a,3} = {0} u {+-3^(a_n)}    in J_3    verdict_J3
//
// Verdicts read the conditions off the finite data given. A finite sequence
// stands for any infinite continuation whose further gaps are all 3; such a
// continuation never adds a violation, so the verdict is also the verdict of
// that infinite family.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circle.hpp"
#include "polar.hpp"

namespace qcg {

class GapSequence {
 public:
  GapSequence() = default;
  explicit GapSequence(std::vector<std::int64_t> entries);
  /// Comma-separated integers, e.g. "1,3,5".
  static GapSequence parse(std::string_view text);

  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  std::vector<std::int64_t> gaps() const;
  bool nonnegative() const { return entries_.empty() || entries_.front() >= 0; }

  GapSequence prefix(std::size_t count) const;
  /// Pads with gaps of 3 up to `count` entries.
  GapSequence extended(std::size_t count) const;
  std::string str() const;

  friend bool operator==(const GapSequence&, const GapSequence&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

class DivisibleChain {
 public:
  explicit DivisibleChain(std::vector<Integer> b);
  static DivisibleChain parse(std::string_view text);

  const std::vector<Integer>& entries() const { return b_; }
  /// q_n = b_{n+1} / b_n.
  std::vector<Integer> ratios() const;

 private:
  std::vector<Integer> b_;
};

enum class FamilyKind { T2, R2, T3, J3 };
std::string_view to_string(FamilyKind kind);
FamilyKind parse_family(std::string_view text);

enum class Outcome { QuasiConvex, NotQuasiConvex };
std::string_view to_string(Outcome outcome);

/// How to exhibit an extra hull point for a family that is not quasi-convex:
/// the point lies in the hull of the family built from `truncation`.
struct WitnessRecipe {
  std::string kind;                   // "translate", "h1+h2", "5h", "2x", "2y"
  std::vector<std::size_t> indices;   // family indices the construction uses
  GapSequence truncation;
  Rational point;                     // in (-1/2,1/2] for T, exact real for R, integer for J_3
  std::int64_t level = 0;             // Z(3^level) for J_3 recipes
};

struct Verdict {
  Outcome outcome = Outcome::QuasiConvex;
  std::optional<std::string> violated;  // "A.i", "A.ii", "A.iii", "B.i", "B.ii", "C.i", "C.ii", "D"
  std::optional<WitnessRecipe> witness_recipe;
};

GridSet points_K2(const GapSequence& a, std::size_t count = 0, Residue modulus = 0);
GridSet points_K3(const GapSequence& a, std::size_t count = 0, Residue modulus = 0);
std::vector<Rational> points_R2(const GapSequence& a, std::size_t count = 0);
CyclicSet points_L3(const GapSequence& a, std::int64_t level);

Verdict verdict_T2(const GapSequence& a);
Verdict verdict_R2(const GapSequence& a);
Verdict verdict_T3(const GapSequence& a);
Verdict verdict_J3(const GapSequence& a);
Verdict verdict(FamilyKind kind, const GapSequence& a);

enum class Sufficiency { T2, R2, J2 };
/// Earlier sufficient conditions (all gaps > 1, plus a_0 > 0 for T2 and
/// a_0 >= 0 for J2).
bool sufficient_gap_condition(const GapSequence& a, Sufficiency which);

DivisibleChain chain_from_family(const GapSequence& a, std::int64_t p);

struct NecessaryFlag {
  std::string id;
  bool holds;
};

struct NecessaryReport {
  std::vector<NecessaryFlag> flags;
  bool all_pass() const;
};

/// Necessary conditions for {0} u {+-1/b_n} to be quasi-convex in T.
NecessaryReport necessary_report_T(const DivisibleChain& b);
/// Necessary conditions for the same set to be quasi-convex in R.
NecessaryReport necessary_report_R(const DivisibleChain& b);

}  // namespace qcg
