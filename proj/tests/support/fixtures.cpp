#include "fixtures.hpp"

#include <filesystem>
#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "stratos/model_io.hpp"

namespace stratos::testing {

const Model& fixture(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Model>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto m = std::make_unique<Model>(load_model(std::filesystem::path(STRATOS_MODELS_DIR) / (name + ".json")));
    it = cache.emplace(name, std::move(m)).first;
  }
  return *it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(STRATOS_MODELS_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

HistoryId hist(const Model& m, const std::string& name) { return m.universe->history_id(name); }
VertexId vert(const Model& m, const std::string& path) { return m.universe->vertex_by_name(path); }
FormulaPtr f(const std::string& text) { return parse_formula(text); }

StrategyIndex strategy_named(const Model& m, const std::string& agent, const std::string& description) {
  const StrategySpace& sp = m.space(agent);
  for (StrategyIndex i = 0; i < sp.size(); ++i)
    if (sp.describe(i) == description) return i;
  throw std::invalid_argument("no strategy '" + description + "' for " + agent);
}

}  // namespace stratos::testing
