#pragma once

// Model files: JSON, schema_version "1". See docs/schema.md.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "stratos/model.hpp"

namespace stratos {

inline constexpr const char* kSchemaVersion = "1";

// Throws SchemaError (with a JSON pointer) for malformed input and the
// library's model errors for structural problems.
Model load_model_text(std::string_view text, std::size_t strategy_cap = strategy_cap_from_env());
Model load_model(const std::filesystem::path& path, std::size_t strategy_cap = strategy_cap_from_env());

// A plan state from its file form: "all", or one partial strategy or a
// list of them. A partial strategy maps cell names or vertex paths to a
// selection ({choice: action}, a bare action, or a list of either).
PlanState plan_from_json(const Model& model, const std::string& agent, const nlohmann::json& j,
                         const std::string& ptr = "");

// Resolves a history by full name ("s0/s1/s2") or numeric id.
HistoryId resolve_history(const Universe& u, const std::string& ref);
// Resolves a vertex by prefix path ("s0/s1").
VertexId resolve_vertex(const Universe& u, const std::string& ref);

}  // namespace stratos
