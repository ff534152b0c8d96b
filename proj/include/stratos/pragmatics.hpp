#pragma once

// Representational states R = (I, S, V) and the pragmatic operators of the
// three message forces.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratos/eval.hpp"
#include "stratos/message.hpp"
#include "stratos/model.hpp"

namespace stratos {

enum class Component { kInfo, kPlan, kValues };
std::string to_string(Component c);

struct RepresentationalState {
  std::string agent;
  InfoSet info;
  PlanState plan;
  std::map<HistoryId, double> values;
  // The agent's own ensemble; assertions split its current cell.
  std::shared_ptr<const InfoEnsemble> ensemble;

  friend bool operator==(const RepresentationalState& a, const RepresentationalState& b) {
    return a.agent == b.agent && a.info == b.info && a.plan == b.plan && a.values == b.values;
  }
};

// R of `agent` at vertex v: its cell there, its declared plan state on that
// cell (the full space when none is declared) and its utilities.
RepresentationalState initial_state(const Model& m, const std::string& agent, VertexId v);

struct ChangeReport {
  Force force = Force::kAssertive;
  std::set<Component> changed;
  Component primary = Component::kInfo;
  std::optional<Component> secondary;
};

struct ApplyResult {
  RepresentationalState state;
  ChangeReport report;
};

// Throws RejectedMessage (index 0) when an assertion leaves no possibility
// and RejectedDirective when no strategy in the plan conforms.
ApplyResult prag_apply(const Model& m, const RepresentationalState& r, const Message& msg);

// Declared force and its focus. Directives carry a nominal secondary info
// focus: receiving the command is itself information.
ChangeReport force_of(const Message& msg);

// Applies the list right to left (the head is applied last). A failing
// message aborts with its list index.
RepresentationalState apply_sequence(const Model& m, const RepresentationalState& r,
                                     const std::vector<Message>& msgs);

// Whether the two profiles interpret `msg` differently on `r`.
bool prag_divergence(const Model& m, const PragmaticsProfile& a, const PragmaticsProfile& b,
                     const RepresentationalState& r, const Message& msg);

struct SimulationStep {
  std::size_t index = 0;
  Message message;  // as interpreted by the addressee
  std::optional<ChangeReport> report;
  std::optional<std::string> rejected;  // lenient mode only
  std::size_t info_size = 0;
  std::size_t plan_size = 0;
  std::vector<std::string> info;  // vertex names
};

struct SimulationResult {
  std::map<std::string, RepresentationalState> initial;
  std::vector<SimulationStep> steps;
  std::map<std::string, RepresentationalState> final;
  std::vector<std::string> warnings;
};

// Replays the scenario's messages in chronological order, each interpreted
// through the addressee's profile. Rejections abort unless `lenient`.
SimulationResult simulate(const Model& m, const Scenario& s, bool lenient);

}  // namespace stratos
