// SPDX-License-Identifier: Apache-2.0
//
// Polars and quasi-convex hulls of finite subsets of the grids (1/N)Z/Z of T
// and of the cyclic groups Z(n).
//
// Both carriers reduce to the same computation: a residue j mod N stands for
// the point j/N (grid) or the element j (cyclic), and the characters are the
// residues k mod N acting by j -> kj/N in T. For a grid set E the polar
// E^> in Z = dual(T) contains NZ, so it is a union of classes mod N. A point
// x of T lies in the hull only if every multiple of Nx is in T_+; the only
// subgroup of T inside T_+ is {0}, so Nx = 0 and the hull stays on the grid.
// That confinement is what makes hulls of grid sets finite and decidable.

#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "circle.hpp"

namespace qcg {

using Residue = std::int64_t;

/// kx mod n, reduced into [0, n).
Residue mulmod(Residue k, Residue x, Residue n);
/// Whether r/n mod 1 lies in T_+.
bool residue_in_Tplus(Residue r, Residue n);

/// Sorted, duplicate-free residues modulo a fixed positive modulus.
class ResidueSet {
 public:
  ResidueSet() = default;
  ResidueSet(Residue modulus, std::span<const Residue> residues);

  Residue modulus() const { return modulus_; }
  const std::vector<Residue>& residues() const { return residues_; }
  std::size_t size() const { return residues_.size(); }
  bool contains(Residue r) const;
  bool includes(const ResidueSet& other) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Residue modulus_ = 1;
  std::vector<Residue> residues_;
};

/// Finite subset of the grid (1/N)Z/Z of T; residue j stands for j/N.
class GridSet : public ResidueSet {
 public:
  using ResidueSet::ResidueSet;
  /// Builds the set on the smallest grid holding all points, or on `modulus`
  /// when given (it must be a multiple of every denominator).
  static GridSet from_points(std::span<const Rational> points, Residue modulus = 0);
  UnitRational point(Residue j) const { return UnitRational(Integer(static_cast<long>(j)), Integer(static_cast<long>(modulus()))); }
  std::vector<UnitRational> points() const;
};

/// Finite subset of Z(n).
class CyclicSet : public ResidueSet {
 public:
  using ResidueSet::ResidueSet;
};

/// Character residues mod N of a polar; symmetric and containing 0.
class PolarSet : public ResidueSet {
 public:
  using ResidueSet::ResidueSet;
};

struct HullWitness {
  Residue point;      // excluded residue
  Residue character;  // smallest polar residue k with k*point outside T_+
};

template <class Set>
struct HullReport {
  Set input;
  PolarSet polar;
  Set hull;
  std::vector<HullWitness> witnesses;  // one per residue outside the hull, ascending

  bool quasi_convex() const { return hull.size() == input.size(); }
};

// Raw engine shared by every carrier.
std::vector<Residue> polar_residues(Residue modulus, std::span<const Residue> elements);
std::vector<Residue> hull_residues(Residue modulus, std::span<const Residue> polar,
                                   std::vector<HullWitness>* witnesses = nullptr);
bool in_hull(Residue modulus, std::span<const Residue> elements, Residue target);

PolarSet polar_grid(const GridSet& e);
HullReport<GridSet> hull_grid(const GridSet& e);
CyclicSet polar_cyclic(const CyclicSet& e);
HullReport<CyclicSet> hull_cyclic(const CyclicSet& e);
bool is_quasi_convex(const GridSet& e);
bool is_quasi_convex(const CyclicSet& e);

/// x -> kx on a grid or on Z(n).
struct MultiplyBy {
  Integer factor;
};
/// Z(n) -> Z(n') reduction, n' | n.
struct QuotientTo {
  Residue order;
};
using Homomorphism = std::variant<MultiplyBy, QuotientTo>;

/// f(Q(E)) subset of Q(f(E)); false means an implementation bug.
bool pushforward_check(const Homomorphism& f, const GridSet& e);
bool pushforward_check(const Homomorphism& f, const CyclicSet& e);

/// {chi(x) : chi in dual Z(n)} = the subgroup of T generated by x/n.
std::vector<UnitRational> trace_subgroup(Residue x, Residue n);

struct TwoXEquivalence {
  bool in_hull;             // 2x in Q({x, 3x})
  bool quarter_not_traced;  // +-1/4 not in Tr_x
  bool half_not_traced;     // 1/2 not in Tr_{2x}
  bool no_two_torsion;      // Tr_{2x} meets Z(2^inf) only in 0

  bool consistent() const {
    return in_hull == quarter_not_traced && in_hull == half_not_traced && in_hull == no_two_torsion;
  }
};

TwoXEquivalence check_two_x_equivalence(Residue x, Residue n);

/// For a divisible chain b_0 | b_1 | ...: 1/b_i + 1/b_j in {1/b_n} forces i = j.
bool unit_fraction_chain_check(std::span<const Integer> chain);

/// Bitmask hulls for n <= 64, used by exhaustive sweeps. Agrees with the
/// generic engine; each set is a 64-bit mask over residues.
class SmallCyclicEngine {
 public:
  explicit SmallCyclicEngine(Residue n);

  Residue order() const { return n_; }
  std::uint64_t polar(std::uint64_t set) const;
  std::uint64_t hull(std::uint64_t set) const;
  bool quasi_convex(std::uint64_t set) const { return hull(set) == set; }
  std::uint64_t multiply(std::uint64_t set, Residue k) const;

 private:
  Residue n_;
  std::vector<std::uint64_t> good_;  // good_[k] = {x : kx/n in T_+}
};

}  // namespace qcg
