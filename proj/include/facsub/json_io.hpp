#pragma once

// JSON forms of instances, witnesses and verdicts.
//
// Instance: {"ambient": {"dim", "signs", "grading"}, "gens", "unit_gens"}.
// Witness: an array of points (integer arrays), then integer parameters,
// then optionally {"digits": [[0|1 ...] ...]}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "facsub/jacobian.hpp"
#include "facsub/lattice.hpp"
#include "facsub/verdict.hpp"

namespace facsub {

using Json = nlohmann::ordered_json;

Json point_to_json(const Point& p);
Json witness_to_json(const Witness& w);
Json verdict_to_json(const Verdict& v);
Json instance_to_json(const Instance& inst);

/// Schema errors throw DomainError naming the offending JSON path.
Point point_from_json(const Json& j, std::size_t dim, const std::string& path = "point");
Witness witness_from_json(const Json& j, std::size_t dim);
Verdict verdict_from_json(const Json& j, std::size_t dim);
Instance instance_from_json(const Json& j);

/// Syntax errors throw ParseError carrying the byte offset.
Json parse_json_text(std::string_view text);
Instance parse_instance(std::string_view text);

/// {"vars": ["x", ...], "polys": ["x^2+y^2", ...]}
PolyMap poly_map_from_json(const Json& j);
Json minor_report_to_json(const MinorReport& rep, const PolyMap& m);
Json bridge_report_to_json(const BridgeReport& rep, const PolyMap& m);

}  // namespace facsub
