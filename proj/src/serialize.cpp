// SPDX-License-Identifier: Apache-2.0

#include "serialize.hpp"

namespace qcg {

Json rationals_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json interval_union_json(const IntervalUnion& u) {
  Json out = Json::array();
  for (const auto& i : u.intervals())
    out.push_back({{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"lo_closed", i.lo_closed}, {"hi_closed", i.hi_closed}});
  return out;
}

namespace {

Json grid_points_json(const GridSet& s) {
  Json out = Json::array();
  for (const auto& p : s.points()) out.push_back(p.str());
  return out;
}

}  // namespace

Json grid_polar_json(const GridSet& input, const PolarSet& polar) {
  return Json{{"grid", input.modulus()},
              {"input", grid_points_json(input)},
              {"polar", polar.residues()},
              {"polar_size", polar.size()}};
}

Json grid_hull_json(const HullReport<GridSet>& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"point", r.input.point(w.point).str()}, {"residue", w.point}, {"character", w.character}});
  return Json{{"grid", r.input.modulus()},
              {"input", grid_points_json(r.input)},
              {"polar_size", r.polar.size()},
              {"hull", grid_points_json(r.hull)},
              {"hull_residues", r.hull.residues()},
              {"quasi_convex", r.quasi_convex()},
              {"witnesses", witnesses}};
}

Json cyclic_hull_json(const HullReport<CyclicSet>& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"element", w.point}, {"character", w.character}});
  return Json{{"n", r.input.modulus()},
              {"input", r.input.residues()},
              {"polar", r.polar.residues()},
              {"hull", r.hull.residues()},
              {"quasi_convex", r.quasi_convex()},
              {"witnesses", witnesses}};
}

Json periodic_polar_json(const PeriodicPolar& p) {
  return Json{{"period", to_string(p.period)}, {"intervals", interval_union_json(p.one_period)}, {"text", p.one_period.str()}};
}

Json verdict_json(FamilyKind kind, const GapSequence& a, const Verdict& v) {
  Json out{{"family", std::string(to_string(kind))},
           {"seq", std::vector<std::int64_t>(a.entries().begin(), a.entries().end())},
           {"outcome", std::string(to_string(v.outcome))},
           {"violated", v.violated ? Json(*v.violated) : Json(nullptr)}};
  if (v.witness_recipe) {
    const auto& w = *v.witness_recipe;
    Json recipe{{"kind", w.kind},
                {"indices", w.indices},
                {"truncation", std::vector<std::int64_t>(w.truncation.entries().begin(), w.truncation.entries().end())},
                {"point", to_string(w.point)}};
    if (kind == FamilyKind::J3) recipe["level"] = w.level;
    out["witness_recipe"] = recipe;
  } else {
    out["witness_recipe"] = nullptr;
  }
  return out;
}

Json necessary_json(const NecessaryReport& r) {
  Json flags = Json::object();
  for (const auto& f : r.flags) flags[f.id] = f.holds;
  return Json{{"flags", flags}, {"all_pass", r.all_pass()}};
}

Json certificate_json(const ExclusionCertificate& c) {
  Json out{{"schema", kSchema},
           {"space", std::string(to_string(c.space))},
           {"family",
            {{"kind", std::string(to_string(c.family_kind))},
             {"seq", std::vector<std::int64_t>(c.family.entries().begin(), c.family.entries().end())}}},
           {"epsilon", c.epsilon},
           {"normalization", c.normalization},
           {"k", c.k},
           {"l", c.l},
           {"rho", c.rho},
           {"character", to_string(c.character)}};
  if (c.space == CertSpace::PadicTrunc) {
    out["index"] = c.index;
    out["level"] = c.level;
  }
  out["target"] = to_string(c.target);
  out["evaluation"] = c.evaluation.str();
  out["tail_bound"] = {{"start", c.tail_bound.start}, {"bound", to_string(c.tail_bound.bound)}};
  return out;
}

ExclusionCertificate certificate_from_json(const Json& j) {
  try {
    ExclusionCertificate c;
    if (j.contains("schema") && j.at("schema") != kSchema) throw InvalidInput("unsupported certificate schema");
    const std::string space = j.at("space").get<std::string>();
    if (space == "grid") c.space = CertSpace::Grid;
    else if (space == "padic-trunc") c.space = CertSpace::PadicTrunc;
    else throw InvalidInput("unknown certificate space '" + space + "'");
    c.family_kind = parse_family(j.at("family").at("kind").get<std::string>());
    if ((c.space == CertSpace::Grid) != (c.family_kind == FamilyKind::T3))
      throw InvalidInput("certificate space does not match its family");
    c.family = GapSequence(j.at("family").at("seq").get<std::vector<std::int64_t>>());
    c.epsilon = j.at("epsilon").get<std::vector<int>>();
    c.normalization = j.at("normalization").get<int>();
    c.k = j.at("k").get<std::size_t>();
    c.l = j.at("l").get<std::size_t>();
    c.rho = j.at("rho").get<int>();
    c.character = Integer(j.at("character").get<std::string>());
    if (c.space == CertSpace::PadicTrunc) {
      c.index = j.at("index").get<std::int64_t>();
      c.level = j.at("level").get<std::int64_t>();
    }
    c.target = parse_rational(j.at("target").get<std::string>());
    c.evaluation = UnitRational(parse_rational(j.at("evaluation").get<std::string>()));
    c.tail_bound.start = j.at("tail_bound").at("start").get<std::size_t>();
    c.tail_bound.bound = parse_rational(j.at("tail_bound").at("bound").get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    // mpz_class throws std::invalid_argument on bad digits
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace qcg
