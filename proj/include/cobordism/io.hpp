#pragma once

#include <string>

#include <json.hpp>

#include "cobordism/fixedpoint.hpp"
#include "cobordism/series.hpp"

namespace cobordism::io {

using nlohmann::json;

/// Monomial lists: {"domain": "Z[b]", "terms": [{"b": [..], "t": k, "eps": 0|1, "coeff": "decimal"}, ...]}.
json to_json(const RingElement& r);
RingElement ring_from_json(const json& j);

/// {"domain", "vars", "order", "terms": [{"exp": [..], "coeff": ring}]}.
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

/// {"type":"multiproj","dims":[..]} | {"type":"projbundle","base":..,"lines":[[..]..],"minus_trivial":k}
/// | {"type":"product","factors":[..]} | {"type":"disjoint","components":[..]}
json to_json(const VarietySpec& s);
VarietySpec spec_from_json(const json& j);

/// {"name", "ambient", "components": [{"spec", "codim", "normal_lines", "normal_trivial_rank",
/// "normal_minus_trivial"}]}, or a builtin {"builtin": "linear_pn", "n": 3, "a": 1}.
json to_json(const MuTwoActionModel& a);
MuTwoActionModel action_from_json(const json& j);
MuTwoActionModel builtin_action(const std::string& name, const json& params);

json to_json(const CheckRecord& r);
CheckRecord record_from_json(const json& j);
json to_json(const Report& r);
Report report_from_json(const json& j);
Status status_from_name(const std::string& s);

/// Human-readable rendering for --pretty.
std::string render(const Report& r);

}  // namespace cobordism::io
