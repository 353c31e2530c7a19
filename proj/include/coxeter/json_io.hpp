#pragma once

// JSON serialization (schema_version 1): rationals as "p/q" strings,
// diagrams as node/edge lists, chambers as halfspace lists, records with
// traces. Lossless round-trip with the in-memory types.

#include <string>

#include <json.hpp>

#include "coxeter/affine.hpp"
#include "coxeter/diagram.hpp"
#include "coxeter/subgroups.hpp"
#include "coxeter/subsystems.hpp"

namespace coxeter {

inline constexpr int kSchemaVersion = 1;

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json chamber_to_json(const FundamentalChamber& c);
FundamentalChamber chamber_from_json(const nlohmann::json& j);

nlohmann::json subgroup_record_to_json(const SubgroupRecord& r);
SubgroupRecord subgroup_record_from_json(const nlohmann::json& j);

nlohmann::json subsystem_record_to_json(const SubsystemRecord& r);

// Wraps a payload with {"schema_version": 1, "kind": kind, "payload": ...}.
nlohmann::json wrap_record(const std::string& kind, nlohmann::json payload);

} // namespace coxeter
