// SPDX-License-Identifier: Apache-2.0

#include "padic.hpp"

#include <algorithm>
#include <set>

namespace qcg {

namespace {

constexpr std::int64_t kMaxLevel = 39;  // 3^39 < 2^63

void require_nonnegative_increasing(std::span<const std::int64_t> a) {
  if (a.empty()) throw InvalidInput("empty sequence");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw InvalidInput("sequence entries must be non-negative");
    if (i && a[i] <= a[i - 1]) throw InvalidInput("sequence must be strictly increasing");
  }
}

Residue pow3(std::int64_t e) { return pow_int(3, e).get_si(); }

// residue on the carrier of the n-th family point
Residue family_point(std::int64_t a_n, const Carrier& c) {
  return c.side == Side::Padic ? pow3(a_n) % c.order() : pow3(c.level - a_n - 1);
}

// residue of the character m * (k-th character) in the dual of the carrier
Residue character_residue(std::int64_t m, std::int64_t k, const Carrier& c) {
  const Residue n = c.order();
  Residue base = c.side == Side::Padic ? pow3(c.level - k - 1) : (k >= c.level ? 0 : pow3(k));
  Residue mm = m % n;
  if (mm < 0) mm += n;
  return mulmod(mm, base, n);
}

void require_carrier_fits(std::span<const std::int64_t> a, const Carrier& c) {
  require_nonnegative_increasing(a);
  if (c.level < 1 || c.level > kMaxLevel) throw InvalidInput("carrier level out of range");
  if (a.back() + 1 > c.level)
    throw InvalidInput("carrier too small: level must be at least " + std::to_string(a.back() + 1));
}

}  // namespace

Residue Carrier::order() const {
  if (level < 0 || level > kMaxLevel) throw InvalidInput("carrier level out of range");
  return pow3(level);
}

UnitRational zeta_eval(const Integer& m, std::int64_t k, const Integer& x, std::int64_t level) {
  if (k < 0) throw InvalidInput("character index must be non-negative");
  if (k + 1 > level)
    throw InvalidInput("zeta_" + std::to_string(k) + " does not factor through Z(3^" + std::to_string(level) + ")");
  return UnitRational(m * x, pow_int(3, k + 1));
}

UnitRational zeta_eval(const PruferChar& chi, const Integer& x, std::int64_t level) {
  return zeta_eval(chi.multiplier, chi.index, x, level);
}

UnitRational eta_eval(const Integer& m, std::int64_t k, const UnitRational& x) {
  if (k < 0) throw InvalidInput("character index must be non-negative");
  return x.times(m * pow_int(3, k));
}

std::vector<std::int64_t> compute_Jm(std::span<const std::int64_t> a, std::int64_t m, std::int64_t k_max,
                                     const Carrier& carrier) {
  require_carrier_fits(a, carrier);
  if (k_max < 0) throw InvalidInput("k_max must be non-negative");
  if (carrier.side == Side::Padic && k_max + 1 > carrier.level)
    throw InvalidInput("level too small to decide k <= " + std::to_string(k_max) + ": need level " +
                       std::to_string(k_max + 1));
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    bool ok = std::all_of(a.begin(), a.end(), [&](std::int64_t an) {
      UnitRational v = carrier.side == Side::Padic
                           ? zeta_eval(Integer(static_cast<long>(m)), k, pow_int(3, an), carrier.level)
                           : eta_eval(Integer(static_cast<long>(m)), k, UnitRational(Integer(1), pow_int(3, an + 1)));
      return v.in_Tplus();
    });
    if (ok) out.push_back(k);
  }
  return out;
}

std::string BalancedDigits::str() const {
  std::string out;
  for (int d : digits) out += d < 0 ? '-' : (d > 0 ? '+' : '0');
  return out;
}

BalancedDigits balanced_digits(const Integer& x, std::int64_t level) {
  if (level < 1) throw InvalidInput("level must be positive");
  Integer n = pow_int(3, level);
  Integer r = x % n;
  if (r < 0) r += n;
  BalancedDigits out;
  for (std::int64_t i = 0; i < level; ++i) {
    Integer d = r % 3;
    if (d == 2) {
      out.digits.push_back(-1);
      r = (r + 1) / 3;
    } else {
      out.digits.push_back(static_cast<int>(d.get_si()));
      r = (r - d) / 3;
    }
  }
  return out;
}

BalancedDigits balanced_digits(const UnitRational& y, std::int64_t length) {
  Integer den = y.den();
  std::int64_t e = 0;
  Integer d = den;
  while (d % 3 == 0) {
    d /= 3;
    ++e;
  }
  if (d != 1) throw InvalidInput("denominator " + to_string(den) + " is not a power of 3");
  if (length < 0) length = e;
  if (length < e) throw InvalidInput("digit length shorter than the denominator exponent");
  // y = s / 3^L with |s| < 3^L / 2, so s has an exact L-digit balanced expansion
  Integer s = y.num() * pow_int(3, length - e);
  BalancedDigits out;
  out.digits.assign(static_cast<std::size_t>(length), 0);
  for (std::int64_t j = 0; j < length; ++j) {
    Integer r = s % 3;
    if (r < 0) r += 3;
    int c = r == 2 ? -1 : static_cast<int>(r.get_si());
    out.digits[static_cast<std::size_t>(length - 1 - j)] = c;  // 3^j in s is 3^-(L-j) in y
    s = (s - c) / 3;
  }
  return out;
}

Integer evaluate_padic(const BalancedDigits& d) {
  Integer out = 0;
  for (std::size_t i = d.digits.size(); i-- > 0;) out = out * 3 + d.digits[i];
  return out;
}

Rational evaluate_circle(const BalancedDigits& d) {
  Rational out = 0;
  Rational scale(1, 3);
  for (int c : d.digits) {
    out += scale * c;
    scale /= 3;
  }
  out.canonicalize();
  return out;
}

bool leading_digit_lemma_check(const UnitRational& y) {
  bool hypothesis = y.in_Tplus() && y.times(2).in_Tplus();
  if (!hypothesis) return true;
  auto digits = balanced_digits(y);
  if (digits.digits.empty()) return true;  // y = 0
  return digits.digits.front() == 0;
}

std::vector<Residue> epsilon_forms(std::span<const std::int64_t> a, const Carrier& carrier) {
  require_carrier_fits(a, carrier);
  const Residue n = carrier.order();
  std::vector<Residue> points;
  for (auto an : a) points.push_back(family_point(an, carrier));
  std::vector<Residue> sums{0};
  for (Residue p : points) {
    std::vector<Residue> next;
    next.reserve(sums.size() * 3);
    for (Residue s : sums) {
      next.push_back(s);
      next.push_back((s + p) % n);
      next.push_back(((s - p) % n + n) % n);
    }
    sums = std::move(next);
  }
  std::vector<Residue> out = sums;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != sums.size()) throw std::logic_error("epsilon forms collided; balanced digits are not unique");
  return out;
}

std::vector<Residue> q12_set(std::span<const std::int64_t> a, const Carrier& carrier) {
  require_carrier_fits(a, carrier);
  const Residue n = carrier.order();
  const std::int64_t k_max = carrier.level - 1;
  auto j1 = compute_Jm(a, 1, k_max, carrier);
  auto j2 = compute_Jm(a, 2, k_max, carrier);
  std::vector<Residue> chars;
  for (auto k : j1) chars.push_back(character_residue(1, k, carrier));
  for (auto k : j2) chars.push_back(character_residue(2, k, carrier));
  std::vector<Residue> out;
  for (Residue x = 0; x < n; ++x) {
    bool ok = std::all_of(chars.begin(), chars.end(), [&](Residue c) { return residue_in_Tplus(mulmod(c, x, n), n); });
    if (ok) out.push_back(x);
  }
  return out;
}

std::int64_t level_for(std::span<const std::int64_t> a) {
  require_nonnegative_increasing(a);
  return a.back() + 2;
}

CyclicSet L3_truncate(std::span<const std::int64_t> a, std::int64_t level) {
  require_nonnegative_increasing(a);
  if (a.back() > level - 2)
    throw InvalidInput("level too small: smallest admissible level is " + std::to_string(a.back() + 2));
  if (level > kMaxLevel) throw InvalidInput("level out of range");
  const Residue n = pow3(level);
  std::vector<Residue> elems{0};
  for (auto an : a) {
    Residue y = pow3(an);
    elems.push_back(y);
    elems.push_back(n - y);
  }
  return CyclicSet(n, elems);
}

Integer signed_residue(const Integer& x, std::int64_t level) {
  Integer n = pow_int(3, level);
  Integer r = x % n;
  if (r < 0) r += n;
  if (2 * r > n) r -= n;
  return r;
}

}  // namespace qcg
