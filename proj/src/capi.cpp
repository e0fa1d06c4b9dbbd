// SPDX-License-Identifier: Apache-2.0

#include "qcg/qcg.h"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>

#include "acceptance.hpp"
#include "families.hpp"
#include "padic.hpp"
#include "polar.hpp"
#include "real_line.hpp"
#include "serialize.hpp"
#include "witnesses.hpp"

struct qcg_result {
  std::string json;
  int flag = 0;
};

namespace {

using namespace qcg;

thread_local std::string last_error;

constexpr long long kDefaultMaxGrid = 1LL << 20;
constexpr long long kDefaultMaxCyclic = 1594323;  // 3^13
std::atomic<long long> max_override{-1};
std::once_flag env_once;

long long override_value() {
  std::call_once(env_once, [] {
    if (const char* env = std::getenv("QCG_MAX_GRID")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0) {
        long long expected = -1;
        max_override.compare_exchange_strong(expected, v);
      }
    }
  });
  return max_override.load();
}

void require_grid(long long n) {
  long long o = override_value();
  long long limit = o > 0 ? o : kDefaultMaxGrid;
  if (n > limit)
    throw InvalidInput("grid " + std::to_string(n) + " exceeds the limit " + std::to_string(limit) + " (set QCG_MAX_GRID)");
}

void require_cyclic(long long n) {
  long long o = override_value();
  long long limit = o > 0 ? o : kDefaultMaxCyclic;
  if (n > limit)
    throw InvalidInput("order " + std::to_string(n) + " exceeds the limit " + std::to_string(limit) + " (set QCG_MAX_GRID)");
}

std::string need(const char* s, const char* what) {
  if (!s) throw InvalidInput(std::string(what) + " is required");
  return s;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  if (out.size() == 1 && out[0].empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(parse_rational(s));
  return out;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& s : split(text)) {
    Rational r = parse_rational(s);
    if (r.get_den() != 1) throw InvalidInput("expected an integer, got '" + s + "'");
    out.push_back(r.get_num());
  }
  return out;
}

Residue reduce(const Integer& x, Residue n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r.get_si();
}

Side parse_side(const char* side) {
  std::string s = side ? side : "padic";
  if (s == "circle") return Side::Circle;
  if (s == "padic") return Side::Padic;
  throw InvalidInput("side must be 'circle' or 'padic'");
}

std::int64_t pick_level(const GapSequence& a, int level) {
  if (level < 0) throw InvalidInput("level must be non-negative");
  return level == 0 ? level_for(a.entries()) : level;
}

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

qcg_result* make(Json body, int flag) {
  auto* r = new qcg_result;
  r->json = body.dump(2);
  r->flag = flag;
  return r;
}

template <class F>
qcg_status guarded(qcg_result** out, F&& body) {
  if (!out) {
    last_error = "null output pointer";
    return QCG_ERR_NULL;
  }
  *out = nullptr;
  try {
    return body();
  } catch (const InvalidInput& e) {
    last_error = e.what();
    return QCG_ERR_INVALID_INPUT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return QCG_ERR_INVALID_INPUT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return QCG_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return QCG_ERR_INTERNAL;
  }
}

GridSet grid_input(const char* points, long long grid) {
  if (grid < 0) throw InvalidInput("grid must be non-negative");
  if (grid > 0) require_grid(grid);
  GridSet s = GridSet::from_points(parse_rationals(need(points, "point list")), grid);
  require_grid(s.modulus());
  return s;
}

Json signed_list(const CyclicSet& s, std::int64_t level) {
  Json out = Json::array();
  std::vector<Integer> v;
  for (Residue r : s.residues()) v.push_back(signed_residue(Integer(static_cast<long>(r)), level));
  std::sort(v.begin(), v.end());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

extern "C" {

const char* qcg_version(void) { return "1.0.0"; }
const char* qcg_last_error(void) { return last_error.c_str(); }

const char* qcg_result_json(const qcg_result* r) { return r ? r->json.c_str() : nullptr; }
int qcg_result_flag(const qcg_result* r) { return r ? r->flag : 0; }
void qcg_result_free(qcg_result* r) { delete r; }

void qcg_set_max_grid(long long n) {
  override_value();
  max_override.store(n > 0 ? n : -1);
}

qcg_status qcg_polar_grid(const char* points, long long grid, qcg_result** out) {
  return guarded(out, [&] {
    GridSet s = grid_input(points, grid);
    PolarSet p = polar_grid(s);
    Json j = header("polar-t");
    j.update(grid_polar_json(s, p));
    *out = make(j, p.size() > 0);
    return QCG_OK;
  });
}

qcg_status qcg_hull_grid(const char* points, long long grid, qcg_result** out) {
  return guarded(out, [&] {
    auto report = hull_grid(grid_input(points, grid));
    Json j = header("hull-t");
    j.update(grid_hull_json(report));
    *out = make(j, report.quasi_convex());
    return QCG_OK;
  });
}

qcg_status qcg_hull_cyclic(long long n, const char* residues, qcg_result** out) {
  return guarded(out, [&] {
    if (n < 1) throw InvalidInput("n must be positive");
    require_cyclic(n);
    std::vector<Residue> e;
    for (const auto& x : parse_integers(need(residues, "element list"))) e.push_back(reduce(x, n));
    auto report = hull_cyclic(CyclicSet(n, e));
    Json j = header("hull-zn");
    j.update(cyclic_hull_json(report));
    *out = make(j, report.quasi_convex());
    return QCG_OK;
  });
}

qcg_status qcg_hull_j3(const char* seq, const char* elements, int level, qcg_result** out) {
  return guarded(out, [&] {
    if ((seq == nullptr) == (elements == nullptr)) throw InvalidInput("give exactly one of a sequence and an element list");
    std::int64_t m = level;
    CyclicSet set;
    Json j = header("hull-j3");
    if (seq) {
      GapSequence a = GapSequence::parse(seq);
      m = pick_level(a, level);
      if (m > 39) throw InvalidInput("level out of range");
      require_cyclic(pow_int(3, m).get_si());
      set = points_L3(a, m);
      j["seq"] = std::vector<std::int64_t>(a.entries().begin(), a.entries().end());
    } else {
      if (m < 1 || m > 39) throw InvalidInput("a level between 1 and 39 is required");
      Residue n = pow_int(3, m).get_si();
      require_cyclic(n);
      std::vector<Residue> e;
      for (const auto& x : parse_integers(elements)) e.push_back(reduce(x, n));
      set = CyclicSet(n, e);
    }
    auto report = hull_cyclic(set);
    j["level"] = m;
    j.update(cyclic_hull_json(report));
    j["input_signed"] = signed_list(report.input, m);
    j["hull_signed"] = signed_list(report.hull, m);
    *out = make(j, report.quasi_convex());
    return QCG_OK;
  });
}

qcg_status qcg_polar_real(const char* points, qcg_result** out) {
  return guarded(out, [&] {
    RealFiniteSet s(parse_rationals(need(points, "point list")));
    Json j = header("polar-r");
    j["input"] = rationals_json(s.points());
    j.update(periodic_polar_json(polar_R(s)));
    *out = make(j, 1);
    return QCG_OK;
  });
}

qcg_status qcg_hull_real(const char* points, qcg_result** out) {
  return guarded(out, [&] {
    RealFiniteSet s(parse_rationals(need(points, "point list")));
    Rational alpha = scale_into_half(s);
    Integer grid = s.denominator() * Integer(alpha.get_den());
    if (!grid.fits_slong_p()) throw InvalidInput("grid too large");
    require_grid(grid.get_si());
    auto hull = hull_R(s);
    Json j = header("hull-r");
    j["input"] = rationals_json(s.points());
    j["alpha"] = to_string(alpha);
    j["hull"] = rationals_json(hull);
    j["quasi_convex"] = hull == s.points();
    *out = make(j, hull == s.points());
    return QCG_OK;
  });
}

qcg_status qcg_member_real(const char* points, const char* target, qcg_result** out) {
  return guarded(out, [&] {
    RealFiniteSet s(parse_rationals(need(points, "point list")));
    Rational z = parse_rational(need(target, "target"));
    auto m = member_hull_R(s, z);
    Json j = header("member-r");
    j["input"] = rationals_json(s.points());
    j["target"] = to_string(z);
    j["member"] = m.in;
    j["witness"] = m.witness ? Json(to_string(*m.witness)) : Json(nullptr);
    *out = make(j, m.in);
    return QCG_OK;
  });
}

qcg_status qcg_family_verdict(const char* family, const char* seq, qcg_result** out) {
  return guarded(out, [&] {
    const std::string fam = need(family, "family");
    Json j = header("family-verdict");
    if (fam == "chain") {
      DivisibleChain b = DivisibleChain::parse(need(seq, "chain"));
      auto t = necessary_report_T(b);
      auto r = necessary_report_R(b);
      Json bs = Json::array(), qs = Json::array();
      for (const auto& x : b.entries()) bs.push_back(to_string(x));
      for (const auto& x : b.ratios()) qs.push_back(to_string(x));
      j["family"] = "chain";
      j["b"] = bs;
      j["q"] = qs;
      j["necessary_T"] = necessary_json(t);
      j["necessary_R"] = necessary_json(r);
      *out = make(j, t.all_pass() && r.all_pass());
      return QCG_OK;
    }
    FamilyKind kind = parse_family(fam);
    GapSequence a = GapSequence::parse(need(seq, "sequence"));
    Verdict v = verdict(kind, a);
    j.update(verdict_json(kind, a, v));
    if (kind == FamilyKind::T2) j["earlier_sufficient_condition"] = sufficient_gap_condition(a, Sufficiency::T2);
    if (kind == FamilyKind::R2) j["earlier_sufficient_condition"] = sufficient_gap_condition(a, Sufficiency::R2);
    *out = make(j, v.outcome == Outcome::QuasiConvex);
    return QCG_OK;
  });
}

qcg_status qcg_compute_jm(const char* seq, int m, const char* side, int level, int k_max, qcg_result** out) {
  return guarded(out, [&] {
    GapSequence a = GapSequence::parse(need(seq, "sequence"));
    Carrier c{parse_side(side), pick_level(a, level)};
    std::int64_t k = k_max < 0 ? c.level - 1 : k_max;
    auto js = compute_Jm(a.entries(), m, k, c);
    Json j = header("jm");
    j["seq"] = std::vector<std::int64_t>(a.entries().begin(), a.entries().end());
    j["m"] = m;
    j["side"] = c.side == Side::Circle ? "circle" : "padic";
    j["level"] = c.level;
    j["k_max"] = k;
    j["J"] = js;
    *out = make(j, 1);
    return QCG_OK;
  });
}

qcg_status qcg_q12(const char* seq, const char* side, int level, qcg_result** out) {
  return guarded(out, [&] {
    GapSequence a = GapSequence::parse(need(seq, "sequence"));
    Carrier c{parse_side(side), pick_level(a, level)};
    if (c.level > 39) throw InvalidInput("level out of range");
    require_cyclic(c.order());
    auto q = q12_set(a.entries(), c);
    auto e = epsilon_forms(a.entries(), c);
    Json j = header("q12");
    j["seq"] = std::vector<std::int64_t>(a.entries().begin(), a.entries().end());
    j["side"] = c.side == Side::Circle ? "circle" : "padic";
    j["level"] = c.level;
    j["q12"] = q;
    j["epsilon_forms"] = e;
    j["equal"] = q == e;
    *out = make(j, q == e);
    return QCG_OK;
  });
}

qcg_status qcg_certify(const char* family, const char* seq, const char* target, const char* epsilon, qcg_result** out) {
  return guarded(out, [&] {
    FamilyKind kind = parse_family(need(family, "family"));
    if (kind != FamilyKind::T3 && kind != FamilyKind::J3) throw InvalidInput("certificates exist for T3 and J3");
    GapSequence a = GapSequence::parse(need(seq, "sequence"));
    if ((target == nullptr) == (epsilon == nullptr)) throw InvalidInput("give exactly one of a target and epsilon");
    std::vector<int> eps;
    if (epsilon) {
      for (const auto& x : parse_integers(epsilon)) eps.push_back(static_cast<int>(x.get_si()));
    } else if (kind == FamilyKind::T3) {
      // read the coefficients off the balanced ternary digits of the point
      UnitRational y(parse_rational(target));
      auto d = balanced_digits(y, a[a.size() - 1] + 1).digits;
      eps.assign(a.size(), 0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        auto it = std::find(a.entries().begin(), a.entries().end(), static_cast<std::int64_t>(i));
        if (it == a.entries().end()) throw InvalidInput("target is not a sum of +-x_n over the family");
        eps[static_cast<std::size_t>(it - a.entries().begin())] = d[i];
      }
    } else {
      Rational x = parse_rational(target);
      if (x.get_den() != 1) throw InvalidInput("J3 targets are integers");
      std::int64_t level = level_for(a.entries());
      auto d = balanced_digits(x.get_num(), level).digits;
      eps.assign(a.size(), 0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        auto it = std::find(a.entries().begin(), a.entries().end(), static_cast<std::int64_t>(i));
        if (it == a.entries().end()) throw InvalidInput("target is not a sum of +-y_n over the family");
        eps[static_cast<std::size_t>(it - a.entries().begin())] = d[i];
      }
      if (evaluate_padic(BalancedDigits{d}) != x.get_num()) throw InvalidInput("target is not a sum of +-y_n over the family");
    }
    auto cert = kind == FamilyKind::T3 ? exclusion_T3(a, eps) : exclusion_J3(a, eps);
    bool ok = verify_certificate(cert);
    Json j = certificate_json(cert);
    *out = make(j, ok);
    return ok ? QCG_OK : QCG_ERR_PROPERTY_FAILED;
  });
}

qcg_status qcg_verify_certificate(const char* certificate_json, long long truncation, qcg_result** out) {
  return guarded(out, [&] {
    Json in;
    try {
      in = Json::parse(need(certificate_json, "certificate"));
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("certificate is not JSON: ") + e.what());
    }
    ExclusionCertificate cert = certificate_from_json(in);
    bool ok = verify_certificate(cert, truncation);
    Json j = header("verify-cert");
    j["valid"] = ok;
    j["space"] = std::string(to_string(cert.space));
    j["target"] = to_string(cert.target);
    j["evaluation"] = cert.evaluation.str();
    *out = make(j, ok);
    return ok ? QCG_OK : QCG_ERR_PROPERTY_FAILED;
  });
}

qcg_status qcg_run_acceptance(int jobs, const char* criteria, qcg_progress_fn progress, void* user, qcg_result** out) {
  return guarded(out, [&] {
    std::vector<int> only;
    if (criteria)
      for (const auto& x : parse_integers(criteria)) only.push_back(static_cast<int>(x.get_si()));
    auto results = run_acceptance(std::max(1, jobs), only, [&](const CriterionResult& r) {
      if (progress) progress(r.id, r.name.c_str(), r.pass, r.seconds, user);
    });
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
      list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all = all && r.pass;
    }
    Json j = header("verify-paper");
    j["criteria"] = list;
    j["all_pass"] = all;
    *out = make(j, all);
    return all ? QCG_OK : QCG_ERR_PROPERTY_FAILED;
  });
}

}  // extern "C"
