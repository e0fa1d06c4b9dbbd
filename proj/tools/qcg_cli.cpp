// SPDX-License-Identifier: Apache-2.0
//
// qcg: command-line front end over the qcg shared library.
// Exit status: 0 success, 1 a checked property failed, 2 invalid input,
// 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcg/qcg.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool text = false;
  std::string set, seq, family, target, eps, side = "padic", cert, out, only;
  long long n = 0, grid = 0, truncation = 0;
  int level = 0, m = 1, kmax = -1, jobs = 1;
};

void render_text(const Json& j, const std::string& indent, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "schema") continue;
    const Json& v = it.value();
    if (v.is_object()) {
      os << indent << it.key() << ":\n";
      render_text(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& item : v) {
        std::string line;
        for (auto f = item.begin(); f != item.end(); ++f)
          line += (line.empty() ? "" : "  ") + f.key() + "=" + (f->is_string() ? f->get<std::string>() : f->dump());
        os << indent << "  " << line << "\n";
      }
    } else if (v.is_array()) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
      os << indent << it.key() << ": {" << line << "}\n";
    } else {
      os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

int finish(qcg_status status, qcg_result** out, const Options& o) {
  qcg_result* r = *out;
  if (status == QCG_ERR_INVALID_INPUT || status == QCG_ERR_INTERNAL || status == QCG_ERR_NULL) {
    std::cerr << "qcg: " << qcg_last_error() << "\n";
    return status == QCG_ERR_INVALID_INPUT ? 2 : 3;
  }
  std::string json = qcg_result_json(r);
  qcg_result_free(r);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "qcg: cannot write " << o.out << "\n";
      return 2;
    }
    f << json << "\n";
  }
  if (o.text)
    render_text(Json::parse(json), "", std::cout);
  else
    std::cout << json << "\n";
  return status == QCG_ERR_PROPERTY_FAILED ? 1 : 0;
}

int usage_error(const std::string& msg) {
  std::cerr << "qcg: " << msg << "\n";
  return 2;
}

// {0, +-1/p^(a_n+1)} for the circle and line families
std::optional<std::string> family_points(const std::string& family, const std::string& seq) {
  long long p = family == "T3" ? 3 : 2;
  std::string out = "0";
  std::stringstream ss(seq);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long a = 0;
    try {
      std::size_t used = 0;
      a = std::stoll(item, &used);
      if (used != item.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    std::string num = "1", den;
    if (a + 1 >= 0) {
      unsigned long long d = 1;
      for (long long i = 0; i < a + 1; ++i) {
        if (d > (1ULL << 62) / static_cast<unsigned long long>(p)) return std::nullopt;
        d *= static_cast<unsigned long long>(p);
      }
      den = std::to_string(d);
    } else {
      if (family != "R2" || -(a + 1) > 62) return std::nullopt;
      num = std::to_string(1ULL << -(a + 1));
      den = "1";
    }
    out += "," + num + "/" + den + ",-" + num + "/" + den;
  }
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void progress(int id, const char* name, int pass, double seconds, void*) {
  std::fprintf(stderr, "[%2d] %s %7.2fs  %s\n", id, pass ? "PASS" : "FAIL", seconds, name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polars and quasi-convex hulls in T, Z(n), Z(3^M) and R"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  auto format = app.add_option_group("format");
  format->add_flag("--json", [&o](std::int64_t) { o.text = false; }, "JSON output (default)");
  format->add_flag("--text", o.text, "human-readable output");
  format->require_option(0, 1);
  app.add_option("--out", o.out, "also write the JSON result to this file");

  auto* polar_t = app.add_subcommand("polar-t", "polar of a finite subset of a grid of T");
  polar_t->add_option("--set", o.set, "points p/q")->required();
  polar_t->add_option("--grid", o.grid, "grid N (default: least common denominator)");

  auto* hull_t = app.add_subcommand("hull-t", "quasi-convex hull in T of a grid set or a K_a family");
  hull_t->add_option("--set", o.set, "points p/q");
  hull_t->add_option("--family", o.family, "T2 or T3, with --seq");
  hull_t->add_option("--seq", o.seq, "exponents a_0,a_1,...");
  hull_t->add_option("--grid", o.grid, "grid N");

  auto* hull_zn = app.add_subcommand("hull-zn", "quasi-convex hull in Z(n)");
  hull_zn->add_option("--n", o.n, "order")->required();
  hull_zn->add_option("--set", o.set, "residues")->required();

  auto* hull_j3 = app.add_subcommand("hull-j3", "quasi-convex hull in Z(3^M)");
  hull_j3->add_option("--seq", o.seq, "L_a,3 exponents");
  hull_j3->add_option("--set", o.set, "integers");
  hull_j3->add_option("--level", o.level, "M (default a_max + 2)");

  auto* polar_r = app.add_subcommand("polar-r", "periodic polar of a finite subset of R");
  polar_r->add_option("--set", o.set, "points p/q")->required();

  auto* hull_r = app.add_subcommand("hull-r", "quasi-convex hull in R of a finite set or an R_a,2 family");
  hull_r->add_option("--set", o.set, "points p/q");
  hull_r->add_option("--seq", o.seq, "R_a,2 exponents");

  auto* member_r = app.add_subcommand("member-r", "decide membership in the quasi-convex hull in R");
  member_r->add_option("--set", o.set, "points p/q");
  member_r->add_option("--seq", o.seq, "R_a,2 exponents");
  member_r->add_option("--target", o.target, "point p/q")->required();

  auto* verdict = app.add_subcommand("family-verdict", "quasi-convexity verdict for a family or divisible chain");
  verdict->add_option("--family", o.family, "T2, R2, T3, J3 or chain")->required();
  verdict->add_option("--seq", o.seq, "exponents, or b_0,b_1,... for chain")->required();

  auto* jm = app.add_subcommand("jm", "the index set J_m");
  jm->add_option("--seq", o.seq, "exponents")->required();
  jm->add_option("--m", o.m, "multiplier");
  jm->add_option("--side", o.side, "circle or padic");
  jm->add_option("--level", o.level, "carrier level (default a_max + 2)");
  jm->add_option("--kmax", o.kmax, "largest k (default level - 1)");

  auto* q12 = app.add_subcommand("q12", "finite Q_1 n Q_2 against the epsilon forms");
  q12->add_option("--seq", o.seq, "exponents")->required();
  q12->add_option("--side", o.side, "circle or padic");
  q12->add_option("--level", o.level, "carrier level (default a_max + 2)");

  auto* certify = app.add_subcommand("certify", "exclusion certificate for an epsilon form");
  certify->add_option("--family", o.family, "T3 or J3")->required();
  certify->add_option("--seq", o.seq, "exponents")->required();
  certify->add_option("--target", o.target, "point p/q (T3) or integer (J3)");
  certify->add_option("--eps", o.eps, "coefficients in {-1,0,1}");

  auto* verify_cert = app.add_subcommand("verify-cert", "re-check a certificate file");
  verify_cert->add_option("--cert", o.cert, "certificate JSON file, - for stdin")->required();
  verify_cert->add_option("--truncation", o.truncation, "entries checked exactly (T3) or level (J3)");

  auto* verify_paper = app.add_subcommand("verify-paper", "run the full acceptance suite");
  verify_paper->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_paper->add_option("--only", o.only, "comma-separated criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  qcg_result* r = nullptr;
  auto opt = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };

  if (polar_t->parsed()) return finish(qcg_polar_grid(o.set.c_str(), o.grid, &r), &r, o);
  if (hull_t->parsed()) {
    std::string set = o.set;
    if (!o.seq.empty()) {
      if (!set.empty()) return usage_error("give --set or --seq, not both");
      if (o.family != "T2" && o.family != "T3") return usage_error("--seq needs --family T2 or T3");
      auto pts = family_points(o.family, o.seq);
      if (!pts) return usage_error("malformed or oversized sequence");
      set = *pts;
    }
    if (set.empty()) return usage_error("--set or --seq is required");
    return finish(qcg_hull_grid(set.c_str(), o.grid, &r), &r, o);
  }
  if (hull_zn->parsed()) return finish(qcg_hull_cyclic(o.n, o.set.c_str(), &r), &r, o);
  if (hull_j3->parsed()) return finish(qcg_hull_j3(opt(o.seq), opt(o.set), o.level, &r), &r, o);
  if (polar_r->parsed()) return finish(qcg_polar_real(o.set.c_str(), &r), &r, o);
  if (hull_r->parsed() || member_r->parsed()) {
    std::string set = o.set;
    if (!o.seq.empty()) {
      if (!set.empty()) return usage_error("give --set or --seq, not both");
      auto pts = family_points("R2", o.seq);
      if (!pts) return usage_error("malformed or oversized sequence");
      set = *pts;
    }
    if (set.empty()) return usage_error("--set or --seq is required");
    if (hull_r->parsed()) return finish(qcg_hull_real(set.c_str(), &r), &r, o);
    return finish(qcg_member_real(set.c_str(), o.target.c_str(), &r), &r, o);
  }
  if (verdict->parsed()) return finish(qcg_family_verdict(o.family.c_str(), o.seq.c_str(), &r), &r, o);
  if (jm->parsed()) return finish(qcg_compute_jm(o.seq.c_str(), o.m, o.side.c_str(), o.level, o.kmax, &r), &r, o);
  if (q12->parsed()) return finish(qcg_q12(o.seq.c_str(), o.side.c_str(), o.level, &r), &r, o);
  if (certify->parsed())
    return finish(qcg_certify(o.family.c_str(), o.seq.c_str(), opt(o.target), opt(o.eps), &r), &r, o);
  if (verify_cert->parsed()) {
    std::string text;
    try {
      text = read_file(o.cert);
    } catch (const std::exception& e) {
      return usage_error(e.what());
    }
    return finish(qcg_verify_certificate(text.c_str(), o.truncation, &r), &r, o);
  }
  if (verify_paper->parsed()) return finish(qcg_run_acceptance(o.jobs, opt(o.only), progress, nullptr, &r), &r, o);
  return usage_error("unknown subcommand");
}
