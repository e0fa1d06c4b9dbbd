// SPDX-License-Identifier: Apache-2.0

#include "polar.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace qcg {

Residue mulmod(Residue k, Residue x, Residue n) {
  __int128 p = static_cast<__int128>(k) * static_cast<__int128>(x) % n;
  if (p < 0) p += n;
  return static_cast<Residue>(p);
}

bool residue_in_Tplus(Residue r, Residue n) {
  r %= n;
  if (r < 0) r += n;
  Residue d = std::min(r, n - r);
  return static_cast<__int128>(4) * d <= n;
}

ResidueSet::ResidueSet(Residue modulus, std::span<const Residue> residues) : modulus_(modulus) {
  if (modulus < 1) throw InvalidInput("modulus must be positive");
  residues_.reserve(residues.size());
  for (Residue r : residues) {
    r %= modulus;
    if (r < 0) r += modulus;
    residues_.push_back(r);
  }
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

bool ResidueSet::contains(Residue r) const {
  r %= modulus_;
  if (r < 0) r += modulus_;
  return std::binary_search(residues_.begin(), residues_.end(), r);
}

bool ResidueSet::includes(const ResidueSet& other) const {
  return std::includes(residues_.begin(), residues_.end(), other.residues_.begin(), other.residues_.end());
}

GridSet GridSet::from_points(std::span<const Rational> points, Residue modulus) {
  Integer lcm = 1;
  for (const auto& p : points) {
    Rational c = canonical_mod1(p);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (modulus == 0) {
    if (!lcm.fits_slong_p()) throw InvalidInput("grid modulus too large");
    modulus = lcm.get_si();
  } else if (modulus < 1 || Integer(static_cast<long>(modulus)) % lcm != 0) {
    throw InvalidInput("grid modulus must be a positive multiple of every denominator");
  }
  std::vector<Residue> residues;
  for (const auto& p : points) {
    Rational scaled = canonical_mod1(p) * Rational(static_cast<long>(modulus));
    residues.push_back(scaled.get_num().get_si());
  }
  return GridSet(modulus, residues);
}

std::vector<UnitRational> GridSet::points() const {
  std::vector<UnitRational> out;
  for (Residue j : residues()) out.push_back(point(j));
  return out;
}

std::vector<Residue> polar_residues(Residue modulus, std::span<const Residue> elements) {
  if (elements.empty()) throw InvalidInput("polar of the empty set is not defined");
  std::vector<Residue> out;
  for (Residue k = 0; k < modulus; ++k) {
    bool ok = std::all_of(elements.begin(), elements.end(),
                          [&](Residue x) { return residue_in_Tplus(mulmod(k, x, modulus), modulus); });
    if (ok) out.push_back(k);
  }
  return out;
}

std::vector<Residue> hull_residues(Residue modulus, std::span<const Residue> polar,
                                   std::vector<HullWitness>* witnesses) {
  std::vector<Residue> out;
  for (Residue x = 0; x < modulus; ++x) {
    // polar is ascending, so the first failure is the smallest witness
    auto bad = std::find_if(polar.begin(), polar.end(),
                            [&](Residue k) { return !residue_in_Tplus(mulmod(k, x, modulus), modulus); });
    if (bad == polar.end()) {
      out.push_back(x);
    } else if (witnesses) {
      witnesses->push_back({x, *bad});
    }
  }
  return out;
}

bool in_hull(Residue modulus, std::span<const Residue> elements, Residue target) {
  if (elements.empty()) throw InvalidInput("hull of the empty set is not defined");
  for (Residue k = 0; k < modulus; ++k) {
    if (residue_in_Tplus(mulmod(k, target, modulus), modulus)) continue;
    bool in_polar = std::all_of(elements.begin(), elements.end(),
                                [&](Residue x) { return residue_in_Tplus(mulmod(k, x, modulus), modulus); });
    if (in_polar) return false;
  }
  return true;
}

namespace {

template <class Set>
HullReport<Set> hull_of(const Set& e) {
  HullReport<Set> report;
  report.input = e;
  auto polar = polar_residues(e.modulus(), e.residues());
  report.polar = PolarSet(e.modulus(), polar);
  auto hull = hull_residues(e.modulus(), polar, &report.witnesses);
  report.hull = Set(e.modulus(), hull);
  return report;
}

}  // namespace

PolarSet polar_grid(const GridSet& e) { return PolarSet(e.modulus(), polar_residues(e.modulus(), e.residues())); }
HullReport<GridSet> hull_grid(const GridSet& e) { return hull_of(e); }
CyclicSet polar_cyclic(const CyclicSet& e) { return CyclicSet(e.modulus(), polar_residues(e.modulus(), e.residues())); }
HullReport<CyclicSet> hull_cyclic(const CyclicSet& e) { return hull_of(e); }
bool is_quasi_convex(const GridSet& e) { return hull_grid(e).quasi_convex(); }
bool is_quasi_convex(const CyclicSet& e) { return hull_cyclic(e).quasi_convex(); }

namespace {

Residue reduce(const Integer& k, Residue n) {
  Integer r = k % Integer(static_cast<long>(n));
  if (r < 0) r += n;
  return r.get_si();
}

template <class Set>
bool pushforward_impl(const Homomorphism& f, const Set& e, bool allow_quotient) {
  const Residue n = e.modulus();
  Residue target_modulus = n;
  std::function<Residue(Residue)> map;
  if (const auto* mul = std::get_if<MultiplyBy>(&f)) {
    Residue k = reduce(mul->factor, n);
    map = [k, n](Residue x) { return mulmod(k, x, n); };
  } else {
    const auto& q = std::get<QuotientTo>(f);
    if (!allow_quotient) throw InvalidInput("quotient maps are defined on Z(n) only");
    if (q.order < 1 || n % q.order != 0) throw InvalidInput("quotient order must divide n");
    target_modulus = q.order;
    map = [m = q.order](Residue x) { return x % m; };
  }
  std::vector<Residue> image;
  for (Residue x : e.residues()) image.push_back(map(x));
  Set image_set(target_modulus, image);
  auto hull_image = hull_residues(target_modulus, polar_residues(target_modulus, image_set.residues()));
  Set hull_of_image(target_modulus, hull_image);
  for (Residue x : hull_residues(n, polar_residues(n, e.residues()))) {
    if (!hull_of_image.contains(map(x))) return false;
  }
  return true;
}

}  // namespace

bool pushforward_check(const Homomorphism& f, const GridSet& e) { return pushforward_impl(f, e, false); }
bool pushforward_check(const Homomorphism& f, const CyclicSet& e) { return pushforward_impl(f, e, true); }

namespace {

// Tr_x = <x/n> = (1/d)Z/Z with d the order of x in Z(n)
Residue order_of(Residue x, Residue n) {
  x %= n;
  if (x < 0) x += n;
  return n / std::gcd(x, n);
}

}  // namespace

std::vector<UnitRational> trace_subgroup(Residue x, Residue n) {
  if (n < 1) throw InvalidInput("order must be positive");
  const Residue d = order_of(x, n);
  std::vector<UnitRational> out;
  out.reserve(static_cast<std::size_t>(d));
  for (Residue j = 0; j < d; ++j) out.emplace_back(Integer(static_cast<long>(j)), Integer(static_cast<long>(d)));
  std::sort(out.begin(), out.end());
  return out;
}

TwoXEquivalence check_two_x_equivalence(Residue x, Residue n) {
  if (n < 1) throw InvalidInput("order must be positive");
  x %= n;
  if (x < 0) x += n;
  TwoXEquivalence out{};
  const std::vector<Residue> gens{x, mulmod(3, x, n)};
  out.in_hull = in_hull(n, gens, mulmod(2, x, n));

  // walk the members j/d of each trace subgroup with integer arithmetic
  const Residue d1 = order_of(x, n);
  out.quarter_not_traced = true;
  for (Residue j = 0; j < d1; ++j)
    if (4 * j == d1 || 4 * j == 3 * d1) out.quarter_not_traced = false;
  const Residue d2 = order_of(mulmod(2, x, n), n);
  out.half_not_traced = true;
  out.no_two_torsion = true;
  for (Residue j = 0; j < d2; ++j) {
    if (2 * j == d2) out.half_not_traced = false;
    // j/d2 has 2-power order iff its reduced denominator is a power of 2 above 1
    Residue den = d2 / std::gcd(j, d2);
    if (den > 1 && std::has_single_bit(static_cast<std::uint64_t>(den))) out.no_two_torsion = false;
  }
  return out;
}

bool unit_fraction_chain_check(std::span<const Integer> chain) {
  if (chain.empty()) throw InvalidInput("empty chain");
  if (chain[0] <= 1) throw InvalidInput("chain requires b_0 > 1");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i + 1] <= chain[i] || chain[i + 1] % chain[i] != 0)
      throw InvalidInput("chain must be strictly increasing with b_n | b_{n+1}");
  }
  std::set<Rational> reciprocals;
  for (const auto& b : chain) reciprocals.insert(Rational(Integer(1), b));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      Rational sum = Rational(Integer(1), chain[i]) + Rational(Integer(1), chain[j]);
      sum.canonicalize();
      if (reciprocals.contains(sum)) return false;
    }
  }
  return true;
}

SmallCyclicEngine::SmallCyclicEngine(Residue n) : n_(n), good_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > 64) throw InvalidInput("SmallCyclicEngine supports 1 <= n <= 64");
  for (Residue k = 0; k < n; ++k)
    for (Residue x = 0; x < n; ++x)
      if (residue_in_Tplus(k * x % n, n)) good_[k] |= std::uint64_t{1} << x;
}

std::uint64_t SmallCyclicEngine::polar(std::uint64_t set) const {
  std::uint64_t out = 0;
  for (Residue k = 0; k < n_; ++k)
    if ((set & ~good_[k]) == 0) out |= std::uint64_t{1} << k;
  return out;
}

std::uint64_t SmallCyclicEngine::hull(std::uint64_t set) const {
  // the pairing is symmetric, so good_[k] also lists the characters that keep k in T_+
  std::uint64_t out = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  std::uint64_t p = polar(set);
  while (p) {
    int k = std::countr_zero(p);
    out &= good_[static_cast<std::size_t>(k)];
    p &= p - 1;
  }
  return out;
}

std::uint64_t SmallCyclicEngine::multiply(std::uint64_t set, Residue k) const {
  std::uint64_t out = 0;
  k %= n_;
  if (k < 0) k += n_;
  while (set) {
    int x = std::countr_zero(set);
    out |= std::uint64_t{1} << (k * x % n_);
    set &= set - 1;
  }
  return out;
}

}  // namespace qcg
