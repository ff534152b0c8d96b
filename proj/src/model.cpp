#include "stratos/model.hpp"

#include <cstdlib>
#include <string>

#include "stratos/errors.hpp"

namespace stratos {

std::size_t strategy_cap_from_env() {
  const char* raw = std::getenv("STRATOS_STRATEGY_CAP");
  if (!raw || !*raw) return kDefaultStrategyCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultStrategyCap;
  return static_cast<std::size_t>(v);
}

void Model::build_spaces() {
  spaces.clear();
  for (const auto& agent : universe->agents()) {
    auto it = ensembles.find(agent);
    if (it == ensembles.end()) throw ModelReferenceError("no information ensemble for agent '" + agent + "'");
    auto space = std::make_shared<const StrategySpace>(universe, dynamics, it->second, agent, strategy_cap);
    if (!space->enumerable())
      warnings.push_back("strategy space of " + agent + " has more than " + std::to_string(strategy_cap) +
                         " strategies; searches over it will fail");
    spaces[agent] = std::move(space);
  }
}

const InfoEnsemble& Model::ensemble(const std::string& agent) const {
  auto it = ensembles.find(agent);
  if (it == ensembles.end()) throw ResolutionError("no information ensemble for agent '" + agent + "'");
  return *it->second;
}

const StrategySpace& Model::space(const std::string& agent) const {
  auto it = spaces.find(agent);
  if (it == spaces.end()) throw ResolutionError("no strategy space for agent '" + agent + "'");
  return *it->second;
}

const PlanState& Model::repertoire(const std::string& agent) const {
  auto it = repertoires.find(agent);
  if (it == repertoires.end()) throw MissingIntention("no repertoire declared for " + agent);
  return it->second;
}

const PlanStateTable& Model::plan_table(const std::string& agent) const {
  auto it = plan_states.find(agent);
  if (it == plan_states.end()) throw MissingIntention("no plan state declared for " + agent);
  return it->second;
}

const PlanStateTable& Model::nested_table(const std::string& holder, const std::string& subject) const {
  auto h = nested_plan_states.find(holder);
  if (h != nested_plan_states.end()) {
    auto s = h->second.find(subject);
    if (s != h->second.end()) return s->second;
  }
  throw MissingIntention("no nested plan state of " + holder + " about " + subject);
}

}  // namespace stratos
