#pragma once

// Micro-time trees: the internal choice structure of one macro step. Each
// internal node is a choice point owned by an agent (or by "world"); each
// complete multi-agent path ends in the next world state.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratos/information.hpp"
#include "stratos/world.hpp"

namespace stratos {

// Choice point id -> chosen micro-action.
using Selection = std::map<std::string, std::string>;

struct CompleteChoice {
  std::string agent;
  Selection selection;

  friend auto operator<=>(const CompleteChoice&, const CompleteChoice&) = default;
};

struct JointChoice {
  std::map<std::string, CompleteChoice> choices;  // keyed by agent
};

struct MicroMove {
  std::string action;
  std::optional<std::size_t> child;  // next node, or none for a leaf
  StateId leaf = 0;
};

struct MicroNode {
  std::string owner;
  std::string choice_point;
  std::vector<MicroMove> moves;
};

class MicroTimeTree {
 public:
  // Node 0 is the root. An empty node list is a deterministic step to
  // `direct`.
  MicroTimeTree(StateId state, std::vector<MicroNode> nodes, StateId direct = 0);

  StateId state() const { return state_; }
  const std::vector<MicroNode>& nodes() const { return nodes_; }
  std::vector<std::string> owners() const;
  // Choice points of `agent` with their sorted action menus.
  std::map<std::string, std::vector<std::string>> choice_points(const std::string& agent) const;
  std::vector<CompleteChoice> complete_choices(const std::string& agent) const;
  std::vector<JointChoice> joint_choices() const;
  StateId next_state(const JointChoice& joint) const;
  const std::vector<StateId>& successors() const { return successors_; }
  // States reachable by some joint choice extending `selection` for `agent`.
  const std::vector<StateId>& outcomes(const std::string& agent, const Selection& selection) const;

 private:
  void validate() const;

  StateId state_;
  std::vector<MicroNode> nodes_;
  StateId direct_;
  std::vector<StateId> successors_;
  std::map<std::string, std::map<Selection, std::vector<StateId>>> outcome_index_;
};

// Uniform complete choice of an agent across the frontier of an
// information set.
struct Alternative {
  std::string agent;
  Selection selection;
  std::map<StateId, CompleteChoice> per_state;

  bool is_null() const { return selection.empty(); }
};

// Trees attached per state. A state without a tree is absorbing.
class Dynamics {
 public:
  Dynamics() = default;
  explicit Dynamics(std::size_t state_count) : state_count_(state_count) {}

  void attach(MicroTimeTree tree);
  const MicroTimeTree* tree(StateId s) const;
  std::vector<StateId> successors(StateId s) const;
  StateId next_state(StateId s, const JointChoice& joint) const;
  std::vector<StateId> outcomes(StateId s, const std::string& agent, const Selection& selection) const;
  std::map<std::string, std::vector<std::string>> choice_points(StateId s, const std::string& agent) const;

 private:
  std::size_t state_count_ = 0;
  std::map<StateId, MicroTimeTree> trees_;
};

StateId next_state(const Dynamics& dynamics, StateId s, const JointChoice& joint);

// All uniform complete choices for `agent` at `info`. Frontier states are
// those of members with cut < t_max. Throws IllFormedEnsemble when the
// agent's choice points differ across the frontier.
std::vector<Alternative> alternatives(const Universe& u, const Dynamics& dynamics,
                                      const std::string& agent, const InfoSet& info);

std::vector<StateId> outcomes(const Dynamics& dynamics, const std::string& agent,
                              const Alternative& alt, StateId s);

// Unrolls the trees from the initial states into every trajectory of length
// t_max + 1.
Universe build_universe(std::vector<WorldState> states, std::vector<std::string> propositions,
                        std::vector<std::string> agents, const std::vector<StateId>& initial,
                        Time t_max, const Dynamics& dynamics,
                        std::size_t history_limit = 1'000'000);

}  // namespace stratos
