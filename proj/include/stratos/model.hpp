#pragma once

// A loaded model: universe, dynamics, ensembles, strategy spaces, and the
// declared intentional and evaluative data.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stratos/action.hpp"
#include "stratos/eval.hpp"
#include "stratos/message.hpp"
#include "stratos/strategy.hpp"
#include "stratos/tables.hpp"

namespace stratos {

// STRATOS_STRATEGY_CAP if set to a positive integer, else the default.
std::size_t strategy_cap_from_env();

struct Model {
  std::string name;
  std::shared_ptr<const Universe> universe;
  std::shared_ptr<const Dynamics> dynamics;
  EnsembleMap ensembles;
  std::map<std::string, std::shared_ptr<const StrategySpace>> spaces;
  std::map<std::string, PlanState> repertoires;
  std::map<std::string, PlanStateTable> plan_states;
  // holder -> subject -> table
  std::map<std::string, std::map<std::string, PlanStateTable>> nested_plan_states;
  Prior prior;
  UtilityTable utilities;
  std::map<std::string, PragmaticsProfile> profiles;
  std::vector<Scenario> scenarios;
  std::size_t strategy_cap = kDefaultStrategyCap;
  std::vector<std::string> warnings;

  // Builds a strategy space for every declared agent from its ensemble.
  // Spaces over the cap are kept but flagged in `warnings`.
  void build_spaces();

  const InfoEnsemble& ensemble(const std::string& agent) const;
  const StrategySpace& space(const std::string& agent) const;
  // Throws MissingIntention when no repertoire is declared.
  const PlanState& repertoire(const std::string& agent) const;
  const PlanStateTable& plan_table(const std::string& agent) const;
  const PlanStateTable& nested_table(const std::string& holder, const std::string& subject) const;
  Evaluator evaluator() const { return Evaluator(universe, ensembles); }
};

}  // namespace stratos
