#include "stratos/world.hpp"

#include <algorithm>

#include "stratos/errors.hpp"

namespace stratos {

TimeAxis::TimeAxis(Time max) : max_(max) {
  if (max < 0) throw ModelError("time axis must be nonempty (t_max >= 0)");
}

Universe::Universe(std::vector<WorldState> states, std::vector<std::string> propositions,
                   std::vector<std::string> agents, Time t_max,
                   std::vector<std::vector<StateId>> trajectories)
    : axis_(t_max),
      states_(std::move(states)),
      propositions_(std::move(propositions)),
      agents_(std::move(agents)) {
  if (states_.empty()) throw ModelError("state catalogue is empty");
  for (StateId s = 0; s < states_.size(); ++s) {
    if (!state_index_.emplace(states_[s].id, s).second)
      throw ModelError("duplicate state id '" + states_[s].id + "'");
    for (const auto& label : states_[s].labels) {
      if (!has_proposition(label))
        throw ModelError("state '" + states_[s].id + "' uses undeclared proposition '" + label + "'");
    }
  }
  std::sort(trajectories.begin(), trajectories.end());
  trajectories.erase(std::unique(trajectories.begin(), trajectories.end()), trajectories.end());
  if (trajectories.empty()) throw ModelError("universe has no histories");

  const std::size_t width = axis_.size();
  for (auto& trajectory : trajectories) {
    if (trajectory.size() != width)
      throw ModelError("history is not total over the time axis");
    History h;
    h.id = histories_.size();
    for (std::size_t t = 0; t < width; ++t) {
      if (trajectory[t] >= states_.size()) throw ModelReferenceError("history references unknown state");
      if (t) h.name += '/';
      h.name += states_[trajectory[t]].id;
    }
    h.trajectory = std::move(trajectory);
    history_index_.emplace(h.name, h.id);
    histories_.push_back(std::move(h));
  }

  // Histories are sorted, so equal prefixes at a cut are contiguous.
  vertex_index_.assign(histories_.size() * width, 0);
  for (std::size_t t = 0; t < width; ++t) {
    for (HistoryId h = 0; h < histories_.size(); ++h) {
      bool fresh = h == 0 || !std::equal(histories_[h].trajectory.begin(),
                                         histories_[h].trajectory.begin() + t + 1,
                                         histories_[h - 1].trajectory.begin());
      if (fresh) {
        vertex_cut_.push_back(static_cast<Time>(t));
        vertex_extensions_.emplace_back();
      }
      VertexId v = vertex_cut_.size() - 1;
      vertex_index_[h * width + t] = v;
      vertex_extensions_[v].push_back_sorted(h);
    }
  }
  for (VertexId v = 0; v < vertex_cut_.size(); ++v) vertex_names_.emplace(vertex_name(v), v);
}

const WorldState& Universe::state(StateId s) const {
  if (s >= states_.size()) throw ModelReferenceError("unknown state index " + std::to_string(s));
  return states_[s];
}

StateId Universe::state_id(std::string_view id) const {
  auto it = state_index_.find(id);
  if (it == state_index_.end()) throw ModelReferenceError("unknown state '" + std::string(id) + "'");
  return it->second;
}

bool Universe::has_proposition(std::string_view p) const {
  return std::find(propositions_.begin(), propositions_.end(), p) != propositions_.end();
}

bool Universe::has_agent(std::string_view a) const {
  return std::find(agents_.begin(), agents_.end(), a) != agents_.end();
}

const History& Universe::history(HistoryId h) const {
  if (h >= histories_.size()) throw ModelReferenceError("unknown history index " + std::to_string(h));
  return histories_[h];
}

HistoryId Universe::history_id(std::string_view name) const {
  auto it = history_index_.find(name);
  if (it == history_index_.end()) throw ModelReferenceError("unknown history '" + std::string(name) + "'");
  return it->second;
}

void Universe::check_time(Time t) const {
  if (!axis_.contains(t))
    throw RangeError("time " + std::to_string(t) + " outside 0.." + std::to_string(axis_.max()));
}

StateId Universe::state_at(HistoryId h, Time t) const {
  check_time(t);
  return history(h).trajectory[static_cast<std::size_t>(t)];
}

VertexId Universe::vertex_of(HistoryId h, Time t) const {
  check_time(t);
  history(h);
  return vertex_index_[h * axis_.size() + static_cast<std::size_t>(t)];
}

Vertex Universe::vertex(VertexId v) const {
  return Vertex{extensions(v).ids().front(), cut(v)};
}

Time Universe::cut(VertexId v) const {
  if (v >= vertex_cut_.size()) throw ModelReferenceError("unknown vertex index " + std::to_string(v));
  return vertex_cut_[v];
}

StateId Universe::vertex_state(VertexId v) const {
  Vertex rep = vertex(v);
  return state_at(rep.history, rep.cut);
}

const HistorySet& Universe::extensions(VertexId v) const {
  if (v >= vertex_extensions_.size()) throw ModelReferenceError("unknown vertex index " + std::to_string(v));
  return vertex_extensions_[v];
}

std::string Universe::vertex_name(VertexId v) const {
  Vertex rep = vertex(v);
  const auto& traj = histories_[rep.history].trajectory;
  std::string name;
  for (Time t = 0; t <= rep.cut; ++t) {
    if (t) name += '/';
    name += states_[traj[static_cast<std::size_t>(t)]].id;
  }
  return name;
}

VertexId Universe::vertex_by_name(std::string_view prefix_path) const {
  auto it = vertex_names_.find(prefix_path);
  if (it == vertex_names_.end())
    throw ModelReferenceError("no vertex with prefix '" + std::string(prefix_path) + "'");
  return it->second;
}

bool Universe::vertex_precedes(VertexId a, VertexId b) const {
  Time ca = cut(a), cb = cut(b);
  if (ca > cb) return false;
  return vertex_of(vertex(b).history, ca) == a;
}

bool backwards_identical(const Universe& u, HistoryId h, HistoryId k, Time t) {
  for (Time t0 = 0; t0 <= t; ++t0) {
    if (u.state_at(h, t0) != u.state_at(k, t0)) return false;
  }
  return true;
}

bool vertex_equal(const Universe& u, const Vertex& a, const Vertex& b) {
  u.history(a.history);
  u.history(b.history);
  return a.cut == b.cut && backwards_identical(u, a.history, b.history, a.cut);
}

bool realizes(const Universe& u, const Event& e, HistoryId h) {
  for (const auto& [t, situation] : e.content) {
    if (!u.time_axis().contains(t))
      throw RangeError("event time " + std::to_string(t) + " outside the time axis");
    for (const auto& [prop, value] : situation.assignment) {
      if (!u.has_proposition(prop))
        throw SchemaError("/content/" + std::to_string(t) + "/" + prop,
                          "proposition is not in the model alphabet");
    }
  }
  for (const auto& [t, situation] : e.content) {
    const WorldState& s = u.world_state_at(h, t);
    for (const auto& [prop, value] : situation.assignment) {
      if (s.has(prop) != value) return false;
    }
  }
  return true;
}

}  // namespace stratos
