// SPDX-License-Identifier: Apache-2.0
//
// Explicit characters separating points from the hulls of K_{a,3} (in T) and
// L_{a,3} (in J_3), with exact evaluations and tail bounds so that a
// certificate speaks for the whole infinite family, plus the small generating
// sets whose hulls pick up an extra point.
//
// For 0 <= k < l the shift characters are
//   T:   m * 3^(a_k - 1)            acting on x_n = 3^-(a_n+1)
//   J_3: m * zeta_{a_l + 1}          acting on y_n = 3^(a_n)
// with m = 3^(a_l - a_k) +- 2.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circle.hpp"
#include "families.hpp"
#include "padic.hpp"
#include "polar.hpp"

namespace qcg {

enum class CertSpace { Grid, PadicTrunc };
std::string_view to_string(CertSpace space);

/// sum_{n >= start} |chi(x_n)| <= bound.
struct TailBound {
  std::size_t start = 0;
  Rational bound;
};

struct ExclusionCertificate {
  CertSpace space = CertSpace::Grid;
  FamilyKind family_kind = FamilyKind::T3;
  GapSequence family;
  std::vector<int> epsilon;      // as given, before normalization
  int normalization = 1;         // -1 when epsilon was negated to lead with +1
  std::size_t k = 0, l = 0;      // first two nonzero positions
  int rho = 1;                   // normalized epsilon_l
  Integer character;             // T: integer character; J_3: multiplier of zeta_index
  std::int64_t index = 0;        // J_3 only
  std::int64_t level = 0;        // J_3 only: Z(3^level)
  Rational target;               // T: point in (-1/2, 1/2]; J_3: integer
  UnitRational evaluation;
  TailBound tail_bound;          // bound on chi over the epsilon terms past l
};

/// (3^(a_l-a_k) + sign*2) * 3^(a_k-1); verified to lie in the polar of K_{a,3}.
Integer shift_char_T3(const GapSequence& a, std::size_t k, std::size_t l, int sign);
/// (3^(a_l-a_k) + sign*2) * zeta_{a_l+1}; verified on the truncation at level a_l + 2.
PruferChar shift_char_J3(const GapSequence& a, std::size_t k, std::size_t l, int sign);

/// m / (8 * 3^(a_start - a_k)), using a_start >= a_last + 2 (start - last)
/// when start runs past the given entries.
TailBound tail_bound_T3(const GapSequence& a, const Integer& m, std::size_t k, std::size_t start);

/// rho/3 + 2/3^(a_l-a_k+2), the value of the certificate character on the
/// normalized k and l terms.
Rational main_part(const ExclusionCertificate& cert);

ExclusionCertificate exclusion_T3(const GapSequence& a, std::span<const int> epsilon);
ExclusionCertificate exclusion_J3(const GapSequence& a, std::span<const int> epsilon);

/// `truncation` is the number of family entries checked exactly on the T side
/// (tail bounded from there), the level of Z(3^M) on the J_3 side; 0 picks the
/// certificate's own.
bool verify_certificate(const ExclusionCertificate& cert, std::int64_t truncation = 0);

enum class DemoCase { H12A, H12B, H12C, TwoX, JTwoX };
/// "h12-a", "h12-b", "h12-c", "two-x", "J-two-x".
DemoCase parse_demo_case(std::string_view text);

struct MembershipDemo {
  CyclicSet generators;
  Residue target = 0;
};

/// H12A: (h1, h2[, s]) -> ({h1, 2h1, h2, 2h2}, h1 + s h2), s = +-1.
/// H12B: (h) -> ({h, 3h, 6h}, 4h).  H12C: (h) -> ({h, 4h, 8h}, 5h).
/// TwoX: (x) -> ({x, 3x}, 2x), needs 4 not dividing the order of x.
/// JTwoX: the same in Z(3^M), where that always holds.
MembershipDemo membership_demo(DemoCase which, Residue n, std::span<const Residue> params);

}  // namespace qcg
