#pragma once

#include "swarmcheck/model.hpp"
#include "swarmcheck/trace.hpp"

#include <json.hpp>

#include <string>

namespace swarmcheck {

// One m-by-m grid per step, north at the top. Robots print as letters with a
// heading glyph (A = robot 0, the reference in relative traces); robots
// outside the main connected component print in lowercase. Loop steps are
// bracketed.
std::string render_trace_ascii(const GlobalLasso &trace, const ModelParams &params);
std::string render_trace_ascii(const RelativeLasso &trace, const ModelParams &params);

// Schema: {"prefix": [step...], "loop": [step...]}, each step
// {"robots": [{"id", "x", "y", "dir", "vars"}...], "mover": int}.
nlohmann::json trace_to_json(const GlobalLasso &trace, const ModelParams &params);
nlohmann::json trace_to_json(const RelativeLasso &trace, const ModelParams &params);

GlobalLasso global_lasso_from_json(const nlohmann::json &doc, const ModelParams &params);
RelativeLasso relative_lasso_from_json(const nlohmann::json &doc, const ModelParams &params);

// Explicit-initial-state file: {"states": [{"robots": [{"x", "y", "dir",
// "motion"?}...]}, ...]}. Omitted robot fields are unconstrained and expand
// over their whole domain.
std::vector<SwarmState> initial_states_from_json(const nlohmann::json &doc,
                                                 const ModelParams &params);

} // namespace swarmcheck
