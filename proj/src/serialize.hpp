// SPDX-License-Identifier: Apache-2.0
//
// JSON renderings of the core types. Every number that is not a small index
// is written as an exact decimal or "p/q" string; key order is fixed.

#pragma once

#include <nlohmann/json.hpp>

#include "families.hpp"
#include "polar.hpp"
#include "real_line.hpp"
#include "witnesses.hpp"

namespace qcg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qcgroups/1";

Json rationals_json(std::span<const Rational> values);
Json interval_union_json(const IntervalUnion& u);

Json grid_polar_json(const GridSet& input, const PolarSet& polar);
Json grid_hull_json(const HullReport<GridSet>& report);
Json cyclic_hull_json(const HullReport<CyclicSet>& report);

Json periodic_polar_json(const PeriodicPolar& polar);

Json verdict_json(FamilyKind kind, const GapSequence& a, const Verdict& v);
Json necessary_json(const NecessaryReport& r);

Json certificate_json(const ExclusionCertificate& cert);
/// Inverse of certificate_json; malformed input raises InvalidInput.
ExclusionCertificate certificate_from_json(const Json& j);

}  // namespace qcg
