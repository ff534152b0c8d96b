#pragma once

#include <string>
#include <vector>

#include "stratos/formula.hpp"
#include "stratos/model.hpp"

namespace stratos::testing {

// Loads models/<name>.json; cached per process.
const Model& fixture(const std::string& name);
std::vector<std::string> fixture_names();

HistoryId hist(const Model& m, const std::string& name);
VertexId vert(const Model& m, const std::string& path);
FormulaPtr f(const std::string& text);

// Index of the strategy whose description matches exactly.
StrategyIndex strategy_named(const Model& m, const std::string& agent, const std::string& description);

}  // namespace stratos::testing
