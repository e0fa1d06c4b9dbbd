// SPDX-License-Identifier: Apache-2.0

#include "witnesses.hpp"

#include <algorithm>
#include <numeric>

namespace qcg {

std::string_view to_string(CertSpace space) { return space == CertSpace::Grid ? "grid" : "padic-trunc"; }

namespace {

void require_gaps_above_one(const GapSequence& a, std::size_t from) {
  auto g = a.gaps();
  for (std::size_t i = from; i < g.size(); ++i)
    if (g[i] <= 1) throw InvalidInput("shift characters need every gap > 1 (g_" + std::to_string(i) + " = 1)");
}

void require_indices(const GapSequence& a, std::size_t k, std::size_t l) {
  if (!(k < l && l < a.size())) throw InvalidInput("need 0 <= k < l < length of the sequence");
}

Integer multiplier(const GapSequence& a, std::size_t k, std::size_t l, int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  return pow_int(3, a[l] - a[k]) + 2 * sign;
}

// chi(x_n) = chi / 3^(a_n+1) in T
UnitRational eval_T(const Integer& chi, std::int64_t a_n) { return UnitRational(chi, pow_int(3, a_n + 1)); }

bool polar_T3(const GapSequence& a, const Integer& chi, const Integer& m, std::size_t k, std::size_t upto) {
  for (std::size_t n = 0; n < upto; ++n)
    if (!eval_T(chi, a[n]).in_Tplus()) return false;
  return tail_bound_T3(a, m, k, upto).bound <= Rational(1, 4);
}

struct Normalized {
  std::vector<int> eps;
  int normalization = 1;
  std::size_t k = 0, l = 0;
  int rho = 1;
};

Normalized normalize(const GapSequence& a, std::span<const int> epsilon) {
  if (epsilon.size() > a.size()) throw InvalidInput("more coefficients than family entries");
  Normalized out;
  out.eps.assign(epsilon.begin(), epsilon.end());
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < out.eps.size(); ++i) {
    if (out.eps[i] < -1 || out.eps[i] > 1) throw InvalidInput("coefficients must lie in {-1, 0, 1}");
    if (out.eps[i] != 0) nz.push_back(i);
  }
  if (nz.size() < 2) throw InvalidInput("need at least two nonzero coefficients; +-x_n are family members");
  out.k = nz[0];
  out.l = nz[1];
  if (out.eps[out.k] < 0) {
    out.normalization = -1;
    for (int& e : out.eps) e = -e;
  }
  out.rho = out.eps[out.l];
  return out;
}

Rational circle_target(const GapSequence& a, std::span<const int> eps) {
  Rational x = 0;
  for (std::size_t n = 0; n < eps.size(); ++n) x += Rational(Integer(eps[n]), pow_int(3, a[n] + 1));
  return canonical_mod1(x);
}

Integer padic_target(const GapSequence& a, std::span<const int> eps) {
  Integer x = 0;
  for (std::size_t n = 0; n < eps.size(); ++n) x += eps[n] * pow_int(3, a[n]);
  return x;
}

}  // namespace

Integer shift_char_T3(const GapSequence& a, std::size_t k, std::size_t l, int sign) {
  if (!a.nonnegative() || a[0] <= 0) throw InvalidInput("the circle shift character needs a_0 > 0");
  require_gaps_above_one(a, 0);
  require_indices(a, k, l);
  Integer m = multiplier(a, k, l, sign);
  Integer chi = m * pow_int(3, a[k] - 1);
  if (!polar_T3(a, chi, m, k, a.size())) throw std::logic_error("shift character left the polar");
  return chi;
}

PruferChar shift_char_J3(const GapSequence& a, std::size_t k, std::size_t l, int sign) {
  if (!a.nonnegative()) throw InvalidInput("J3 family needs non-negative entries");
  require_gaps_above_one(a, 0);
  require_indices(a, k, l);
  PruferChar chi{multiplier(a, k, l, sign), a[l] + 1};
  const std::int64_t level = a[l] + 2;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] >= level) break;  // 3^(a_n) lies in the kernel
    if (!zeta_eval(chi, pow_int(3, a[n]), level).in_Tplus()) throw std::logic_error("shift character left the polar");
  }
  return chi;
}

TailBound tail_bound_T3(const GapSequence& a, const Integer& m, std::size_t k, std::size_t start) {
  if (k >= a.size()) throw InvalidInput("character index k out of range");
  if (start < k) throw InvalidInput("tail must start at or after k");
  require_gaps_above_one(a, start);
  // gaps >= 2 from `start` on: a_{start+j} - a_start >= 2j, so the tail is
  // dominated by a geometric series of ratio 1/9
  const std::size_t last = a.size() - 1;
  std::int64_t a_start = start <= last ? a[start] : a[last] + 2 * static_cast<std::int64_t>(start - last);
  Rational bound(abs(m), 8 * pow_int(3, a_start - a[k]));
  bound.canonicalize();
  return TailBound{start, bound};
}

Rational main_part(const ExclusionCertificate& cert) {
  const std::int64_t d = cert.family[cert.l] - cert.family[cert.k];
  Rational out = Rational(cert.rho, 3) + Rational(Integer(2), pow_int(3, d + 2));
  out.canonicalize();
  return out;
}

ExclusionCertificate exclusion_T3(const GapSequence& a, std::span<const int> epsilon) {
  if (verdict_T3(a).outcome != Outcome::QuasiConvex) throw InvalidInput("sequence violates a_0 > 0 or gaps > 1");
  Normalized nz = normalize(a, epsilon);
  ExclusionCertificate c;
  c.space = CertSpace::Grid;
  c.family_kind = FamilyKind::T3;
  c.family = a;
  c.epsilon.assign(epsilon.begin(), epsilon.end());
  c.normalization = nz.normalization;
  c.k = nz.k;
  c.l = nz.l;
  c.rho = nz.rho;
  Integer m = multiplier(a, c.k, c.l, c.rho);
  c.character = m * pow_int(3, a[c.k] - 1);
  c.target = circle_target(a, c.epsilon);
  c.evaluation = UnitRational(c.target * Rational(c.character));
  c.tail_bound = tail_bound_T3(a, m, c.k, c.l + 1);
  return c;
}

ExclusionCertificate exclusion_J3(const GapSequence& a, std::span<const int> epsilon) {
  if (verdict_J3(a).outcome != Outcome::QuasiConvex) throw InvalidInput("sequence violates gaps > 1");
  Normalized nz = normalize(a, epsilon);
  ExclusionCertificate c;
  c.space = CertSpace::PadicTrunc;
  c.family_kind = FamilyKind::J3;
  c.family = a;
  c.epsilon.assign(epsilon.begin(), epsilon.end());
  c.normalization = nz.normalization;
  c.k = nz.k;
  c.l = nz.l;
  c.rho = nz.rho;
  // rho * 3^(a_l-a_k) + 2: for rho = -1 this is the negative of the shift character
  c.character = c.rho * pow_int(3, a[c.l] - a[c.k]) + 2;
  c.index = a[c.l] + 1;
  c.level = level_for(a.entries());
  c.target = Rational(padic_target(a, c.epsilon));
  c.evaluation = zeta_eval(c.character, c.index, c.target.get_num(), c.level);
  c.tail_bound = TailBound{c.l + 1, Rational(0)};  // 3^(a_n) is in the kernel for n > l
  return c;
}

bool verify_certificate(const ExclusionCertificate& cert, std::int64_t truncation) {
  const GapSequence& a = cert.family;
  if (cert.epsilon.size() > a.size() || cert.k >= cert.l || cert.l >= cert.epsilon.size()) return false;
  Normalized nz;
  try {
    nz = normalize(a, cert.epsilon);
  } catch (const InvalidInput&) {
    return false;
  }
  if (nz.k != cert.k || nz.l != cert.l || nz.rho != cert.rho || nz.normalization != cert.normalization) return false;
  const Rational quarter(1, 4);
  const UnitRational expected_main(Rational(cert.normalization) * main_part(cert));

  if (cert.space == CertSpace::Grid) {
    std::size_t upto = truncation == 0 ? a.size() : static_cast<std::size_t>(truncation);
    if (truncation < 0 || upto < cert.l + 1 || upto > a.size())
      throw InvalidInput("truncation must cover entries 0.." + std::to_string(cert.l) + " of the family");
    if (!a.nonnegative() || a[0] <= 0) return false;
    Integer scale = pow_int(3, a[cert.k] - 1);
    if (cert.character % scale != 0) return false;
    Integer m = cert.character / scale;
    try {
      if (!polar_T3(a, cert.character, m, cert.k, upto)) return false;
      if (circle_target(a, cert.epsilon) != cert.target) return false;
      if (UnitRational(cert.target * Rational(cert.character)) != cert.evaluation) return false;
      if (cert.evaluation.norm() <= quarter) return false;
      TailBound rest = tail_bound_T3(a, m, cert.k, cert.l + 1);
      if (rest.start != cert.tail_bound.start || rest.bound != cert.tail_bound.bound) return false;
      // the remainder past l stays within the bound, and the bound cannot pull the main part into T_+
      if ((cert.evaluation - expected_main).norm() > rest.bound) return false;
      return norm(expected_main) - rest.bound > quarter;
    } catch (const InvalidInput&) {
      return false;  // gap hypothesis fails somewhere
    }
  }

  const std::int64_t level = truncation == 0 ? cert.level : truncation;
  if (level < cert.index + 1) throw InvalidInput("level must be at least " + std::to_string(cert.index + 1));
  if (level > 39) throw InvalidInput("level out of range");
  if (!a.nonnegative() || cert.index != a[cert.l] + 1) return false;
  for (auto g : a.gaps())
    if (g <= 1) return false;
  PruferChar chi{cert.character, cert.index};
  for (auto an : a.entries()) {
    if (an >= level) break;
    if (!zeta_eval(chi, pow_int(3, an), level).in_Tplus()) return false;
  }
  if (cert.target != Rational(padic_target(a, cert.epsilon))) return false;
  if (zeta_eval(chi, cert.target.get_num(), level) != cert.evaluation) return false;
  if (cert.tail_bound.bound != 0) return false;
  return cert.evaluation == expected_main && cert.evaluation.norm() > quarter;
}

DemoCase parse_demo_case(std::string_view text) {
  if (text == "h12-a") return DemoCase::H12A;
  if (text == "h12-b") return DemoCase::H12B;
  if (text == "h12-c") return DemoCase::H12C;
  if (text == "two-x") return DemoCase::TwoX;
  if (text == "J-two-x") return DemoCase::JTwoX;
  throw InvalidInput("unknown demo case '" + std::string(text) + "'");
}

MembershipDemo membership_demo(DemoCase which, Residue n, std::span<const Residue> params) {
  if (n < 1) throw InvalidInput("order must be positive");
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) throw InvalidInput("wrong number of demo parameters");
  };
  auto mul = [n](Residue k, Residue x) { return mulmod(k, ((x % n) + n) % n, n); };
  MembershipDemo out;
  switch (which) {
    case DemoCase::H12A: {
      need(2, 3);
      Residue s = params.size() == 3 ? params[2] : 1;
      if (s != 1 && s != -1) throw InvalidInput("h12-a sign must be +1 or -1");
      Residue h1 = params[0], h2 = params[1];
      std::vector<Residue> g{mul(1, h1), mul(2, h1), mul(1, h2), mul(2, h2)};
      out.generators = CyclicSet(n, g);
      out.target = (mul(1, h1) + mul(s, h2)) % n;
      return out;
    }
    case DemoCase::H12B: {
      need(1, 1);
      std::vector<Residue> g{mul(1, params[0]), mul(3, params[0]), mul(6, params[0])};
      out.generators = CyclicSet(n, g);
      out.target = mul(4, params[0]);
      return out;
    }
    case DemoCase::H12C: {
      need(1, 1);
      std::vector<Residue> g{mul(1, params[0]), mul(4, params[0]), mul(8, params[0])};
      out.generators = CyclicSet(n, g);
      out.target = mul(5, params[0]);
      return out;
    }
    case DemoCase::TwoX:
    case DemoCase::JTwoX: {
      need(1, 1);
      if (which == DemoCase::JTwoX) {
        Residue m = n;
        while (m % 3 == 0) m /= 3;
        if (m != 1) throw InvalidInput("J-two-x runs in Z(3^M)");
      }
      Residue x = mul(1, params[0]);
      Residue order = n / std::gcd(x, n);
      if (order % 4 == 0) throw InvalidInput("two-x needs 4 not dividing the order of x");
      std::vector<Residue> g{x, mul(3, x)};
      out.generators = CyclicSet(n, g);
      out.target = mul(2, x);
      return out;
    }
  }
  throw InvalidInput("unknown demo case");
}

}  // namespace qcg
