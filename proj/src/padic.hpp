// SPDX-License-Identifier: Apache-2.0
//
// Truncated 3-adic integers Z(3^M), the Pruefer characters m*zeta_k on them,
// the characters m*eta_k of T, balanced-ternary digits, and the finite
// versions of the index sets J_m and of Q_1 n Q_2.
//
// A family is given by its exponents a_0 < a_1 < ...; on the circle side the
// points are x_n = 3^-(a_n+1), on the 3-adic side y_n = 3^(a_n). A Carrier
// fixes where the computation happens: the grid 3^-L Z/Z of T, or Z(3^M).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circle.hpp"
#include "polar.hpp"

namespace qcg {

enum class Side { Circle, Padic };

struct Carrier {
  Side side;
  std::int64_t level;  // grid 3^level on the circle side, Z(3^level) on the 3-adic side

  Residue order() const;
};

/// The character m * zeta_k of J_3, zeta_k(1) = 3^-(k+1). It factors through
/// Z(3^M) iff k + 1 <= M.
struct PruferChar {
  Integer multiplier;
  std::int64_t index;

  bool factors_through(std::int64_t level) const { return index + 1 <= level; }
};

UnitRational zeta_eval(const Integer& m, std::int64_t k, const Integer& x, std::int64_t level);
UnitRational zeta_eval(const PruferChar& chi, const Integer& x, std::int64_t level);
/// m * 3^k * x in T.
UnitRational eta_eval(const Integer& m, std::int64_t k, const UnitRational& x);

/// {k <= k_max : m * (k-th character) maps every family point into T_+}.
/// On the 3-adic side the characters must factor through Z(3^level).
std::vector<std::int64_t> compute_Jm(std::span<const std::int64_t> a, std::int64_t m, std::int64_t k_max,
                                     const Carrier& carrier);

struct BalancedDigits {
  std::vector<int> digits;  // each in {-1, 0, 1}

  /// Rendered over {-,0,+}, first digit first.
  std::string str() const;
  friend bool operator==(const BalancedDigits&, const BalancedDigits&) = default;
};

/// c_0 .. c_{M-1} with x = sum c_i 3^i mod 3^M.
BalancedDigits balanced_digits(const Integer& x, std::int64_t level);
/// c_1 .. c_L with y = sum c_i / 3^i exactly, y taken in (-1/2, 1/2]. The
/// length defaults to the exponent of the denominator.
BalancedDigits balanced_digits(const UnitRational& y, std::int64_t length = -1);
Integer evaluate_padic(const BalancedDigits& d);
Rational evaluate_circle(const BalancedDigits& d);

/// (y in T_+ and 2y in T_+) implies the leading balanced digit of y is 0.
bool leading_digit_lemma_check(const UnitRational& y);

/// All sums sum eps_n * (n-th family point), eps in {-1,0,1}, as carrier
/// residues. Distinct coefficient vectors never collide.
std::vector<Residue> epsilon_forms(std::span<const std::int64_t> a, const Carrier& carrier);

/// Finite analogue of Q_1 n Q_2 over the characters that live on the carrier.
std::vector<Residue> q12_set(std::span<const std::int64_t> a, const Carrier& carrier);

/// Smallest level through which the shift characters zeta_{a_l+1} factor.
std::int64_t level_for(std::span<const std::int64_t> a);

/// {0, +-3^(a_n)} in Z(3^M); requires a_n <= M - 2.
CyclicSet L3_truncate(std::span<const std::int64_t> a, std::int64_t level);

/// Renders x in Z(3^M) as its signed residue in (-3^M/2, 3^M/2].
Integer signed_residue(const Integer& x, std::int64_t level);

}  // namespace qcg
