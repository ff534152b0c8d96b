#include "stratos/action.hpp"

#include <algorithm>
#include <functional>

#include "stratos/errors.hpp"

namespace stratos {
namespace {

const std::vector<StateId> kNoStates;

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Cartesian product over the menus, in key then action order.
std::vector<Selection> product(const std::map<std::string, std::vector<std::string>>& menus) {
  std::vector<Selection> out{Selection{}};
  for (const auto& [cp, actions] : menus) {
    std::vector<Selection> next;
    for (const auto& partial : out) {
      for (const auto& a : actions) {
        Selection s = partial;
        s[cp] = a;
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

MicroTimeTree::MicroTimeTree(StateId state, std::vector<MicroNode> nodes, StateId direct)
    : state_(state), nodes_(std::move(nodes)), direct_(direct) {
  validate();
  for (const auto& joint : joint_choices()) {
    StateId next = next_state(joint);
    successors_.push_back(next);
    for (const auto& owner : owners()) {
      outcome_index_[owner][joint.choices.at(owner).selection].push_back(next);
    }
  }
  sort_unique(successors_);
  for (auto& [owner, table] : outcome_index_)
    for (auto& [sel, states] : table) sort_unique(states);
}

void MicroTimeTree::validate() const {
  if (nodes_.empty()) return;
  std::map<std::string, std::pair<std::string, std::vector<std::string>>> cps;
  std::vector<int> visits(nodes_.size(), 0);
  std::function<void(std::size_t, std::set<std::string>)> walk = [&](std::size_t n,
                                                                      std::set<std::string> seen) {
    if (n >= nodes_.size()) throw ModelError("micro-time tree references a missing node");
    if (++visits[n] > 1) throw ModelError("micro-time tree node reached twice (not a tree)");
    const MicroNode& node = nodes_[n];
    if (node.owner.empty() || node.choice_point.empty())
      throw ModelError("micro-time tree node needs an owner and a choice point");
    if (node.moves.empty())
      throw ModelError("choice point '" + node.choice_point + "' has no micro-actions");
    std::vector<std::string> menu;
    for (const auto& m : node.moves) menu.push_back(m.action);
    std::vector<std::string> sorted = menu;
    sort_unique(sorted);
    if (sorted.size() != menu.size())
      throw ModelError("choice point '" + node.choice_point + "' repeats a micro-action");
    auto [it, inserted] = cps.emplace(node.choice_point, std::make_pair(node.owner, sorted));
    if (!inserted && (it->second.first != node.owner || it->second.second != sorted))
      throw ModelError("choice point '" + node.choice_point +
                       "' appears with different owners or menus");
    if (!seen.insert(node.choice_point).second)
      throw ModelError("choice point '" + node.choice_point + "' visited twice on one path");
    for (const auto& m : node.moves)
      if (m.child) walk(*m.child, seen);
  };
  walk(0, {});
  for (std::size_t n = 0; n < nodes_.size(); ++n)
    if (visits[n] == 0) throw ModelError("micro-time tree has an unreachable node");
}

std::vector<std::string> MicroTimeTree::owners() const {
  std::vector<std::string> out;
  for (const auto& node : nodes_) out.push_back(node.owner);
  sort_unique(out);
  return out;
}

std::map<std::string, std::vector<std::string>> MicroTimeTree::choice_points(
    const std::string& agent) const {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& node : nodes_) {
    if (node.owner != agent) continue;
    auto& menu = out[node.choice_point];
    for (const auto& m : node.moves) menu.push_back(m.action);
    sort_unique(menu);
  }
  return out;
}

std::vector<CompleteChoice> MicroTimeTree::complete_choices(const std::string& agent) const {
  std::vector<CompleteChoice> out;
  for (auto& sel : product(choice_points(agent))) out.push_back(CompleteChoice{agent, std::move(sel)});
  return out;
}

std::vector<JointChoice> MicroTimeTree::joint_choices() const {
  std::vector<JointChoice> out{JointChoice{}};
  for (const auto& owner : owners()) {
    std::vector<JointChoice> next;
    for (const auto& partial : out) {
      for (const auto& choice : complete_choices(owner)) {
        JointChoice j = partial;
        j.choices[owner] = choice;
        next.push_back(std::move(j));
      }
    }
    out = std::move(next);
  }
  return out;
}

StateId MicroTimeTree::next_state(const JointChoice& joint) const {
  if (nodes_.empty()) return direct_;
  std::size_t n = 0;
  while (true) {
    const MicroNode& node = nodes_[n];
    auto owner = joint.choices.find(node.owner);
    if (owner == joint.choices.end())
      throw IncompleteChoice("no complete choice for agent '" + node.owner + "'");
    auto pick = owner->second.selection.find(node.choice_point);
    if (pick == owner->second.selection.end())
      throw IncompleteChoice("agent '" + node.owner + "' makes no choice at '" + node.choice_point + "'");
    auto move = std::find_if(node.moves.begin(), node.moves.end(),
                             [&](const MicroMove& m) { return m.action == pick->second; });
    if (move == node.moves.end())
      throw IncompleteChoice("micro-action '" + pick->second + "' is not available at '" +
                             node.choice_point + "'");
    if (!move->child) return move->leaf;
    n = *move->child;
  }
}

const std::vector<StateId>& MicroTimeTree::outcomes(const std::string& agent,
                                                    const Selection& selection) const {
  auto table = outcome_index_.find(agent);
  if (table == outcome_index_.end()) return selection.empty() ? successors_ : kNoStates;
  auto it = table->second.find(selection);
  return it == table->second.end() ? kNoStates : it->second;
}

void Dynamics::attach(MicroTimeTree tree) {
  StateId s = tree.state();
  if (state_count_ && s >= state_count_) throw ModelReferenceError("tree attached to unknown state");
  if (state_count_) {
    for (StateId leaf : tree.successors())
      if (leaf >= state_count_) throw ModelReferenceError("tree leaf names an unknown state");
  }
  if (!trees_.emplace(s, std::move(tree)).second)
    throw ModelError("state has more than one micro-time tree");
}

const MicroTimeTree* Dynamics::tree(StateId s) const {
  auto it = trees_.find(s);
  return it == trees_.end() ? nullptr : &it->second;
}

std::vector<StateId> Dynamics::successors(StateId s) const {
  const MicroTimeTree* t = tree(s);
  return t ? t->successors() : std::vector<StateId>{s};
}

StateId Dynamics::next_state(StateId s, const JointChoice& joint) const {
  const MicroTimeTree* t = tree(s);
  return t ? t->next_state(joint) : s;
}

std::vector<StateId> Dynamics::outcomes(StateId s, const std::string& agent,
                                        const Selection& selection) const {
  const MicroTimeTree* t = tree(s);
  if (!t) return selection.empty() ? std::vector<StateId>{s} : std::vector<StateId>{};
  return t->outcomes(agent, selection);
}

std::map<std::string, std::vector<std::string>> Dynamics::choice_points(StateId s,
                                                                       const std::string& agent) const {
  const MicroTimeTree* t = tree(s);
  return t ? t->choice_points(agent) : std::map<std::string, std::vector<std::string>>{};
}

StateId next_state(const Dynamics& dynamics, StateId s, const JointChoice& joint) {
  return dynamics.next_state(s, joint);
}

std::vector<Alternative> alternatives(const Universe& u, const Dynamics& dynamics,
                                      const std::string& agent, const InfoSet& info) {
  std::vector<StateId> frontier;
  for (VertexId v : info.members())
    if (u.cut(v) < u.t_max()) frontier.push_back(u.vertex_state(v));
  sort_unique(frontier);

  std::map<std::string, std::vector<std::string>> menus;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto here = dynamics.choice_points(frontier[i], agent);
    if (i == 0) {
      menus = std::move(here);
    } else if (here != menus) {
      throw IllFormedEnsemble("agent " + agent + " has different choice points at states '" +
                              u.state(frontier[0]).id + "' and '" + u.state(frontier[i]).id +
                              "' of one information set");
    }
  }

  std::vector<Alternative> out;
  for (auto& sel : product(menus)) {
    Alternative alt{agent, sel, {}};
    for (StateId s : frontier) alt.per_state[s] = CompleteChoice{agent, sel};
    out.push_back(std::move(alt));
  }
  return out;
}

std::vector<StateId> outcomes(const Dynamics& dynamics, const std::string& agent,
                              const Alternative& alt, StateId s) {
  auto it = alt.per_state.find(s);
  const Selection& sel = it == alt.per_state.end() ? alt.selection : it->second.selection;
  return dynamics.outcomes(s, agent, sel);
}

Universe build_universe(std::vector<WorldState> states, std::vector<std::string> propositions,
                        std::vector<std::string> agents, const std::vector<StateId>& initial,
                        Time t_max, const Dynamics& dynamics, std::size_t history_limit) {
  if (initial.empty()) throw ModelError("no initial states");
  if (t_max < 0) throw ModelError("t_max must be >= 0");
  std::vector<std::vector<StateId>> trajectories;
  std::vector<StateId> prefix;
  std::function<void(StateId)> unroll = [&](StateId s) {
    if (s >= states.size()) throw ModelReferenceError("trajectory reaches an unknown state");
    prefix.push_back(s);
    if (static_cast<Time>(prefix.size()) == t_max + 1) {
      if (trajectories.size() >= history_limit)
        throw ModelError("universe exceeds " + std::to_string(history_limit) + " histories");
      trajectories.push_back(prefix);
    } else {
      for (StateId next : dynamics.successors(s)) unroll(next);
    }
    prefix.pop_back();
  };
  std::vector<StateId> roots = initial;
  sort_unique(roots);
  for (StateId s : roots) unroll(s);
  return Universe(std::move(states), std::move(propositions), std::move(agents), t_max,
                  std::move(trajectories));
}

}  // namespace stratos
