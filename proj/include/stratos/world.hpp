#pragma once

// Times, world states, histories and vertices (partial histories) of a
// finite universe, plus situations and events realized in histories.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stratos/history_set.hpp"

namespace stratos {

using StateId = std::size_t;
using VertexId = std::size_t;
using Time = int;

// Reserved agent id for nature's moves in micro-time trees.
inline constexpr std::string_view kWorldAgent = "world";

// Discrete time points 0..max.
class TimeAxis {
 public:
  explicit TimeAxis(Time max);
  Time max() const { return max_; }
  std::size_t size() const { return static_cast<std::size_t>(max_) + 1; }
  bool contains(Time t) const { return t >= 0 && t <= max_; }

 private:
  Time max_;
};

struct WorldState {
  std::string id;
  std::set<std::string> labels;

  bool has(const std::string& proposition) const { return labels.count(proposition) > 0; }
};

struct History {
  HistoryId id = 0;
  std::vector<StateId> trajectory;  // one state per time point
  std::string name;                 // state ids joined by '/'
};

// A history cut at a time. Two vertices are the same vertex when their
// cuts agree and their histories agree up to and including the cut.
struct Vertex {
  HistoryId history = 0;
  Time cut = 0;
};

// Partial two-valued assignment; absent propositions are unconstrained.
struct Situation {
  std::map<std::string, bool> assignment;
};

struct Event {
  std::map<Time, Situation> content;  // domain of the map is the span
};

class Universe {
 public:
  // Trajectories are deduplicated and sorted lexicographically by state
  // index; history ids follow that order.
  Universe(std::vector<WorldState> states, std::vector<std::string> propositions,
           std::vector<std::string> agents, Time t_max,
           std::vector<std::vector<StateId>> trajectories);

  const TimeAxis& time_axis() const { return axis_; }
  Time t_max() const { return axis_.max(); }

  std::span<const WorldState> states() const { return states_; }
  const WorldState& state(StateId s) const;
  StateId state_id(std::string_view id) const;

  const std::vector<std::string>& propositions() const { return propositions_; }
  bool has_proposition(std::string_view p) const;
  const std::vector<std::string>& agents() const { return agents_; }
  bool has_agent(std::string_view a) const;

  std::span<const History> histories() const { return histories_; }
  std::size_t history_count() const { return histories_.size(); }
  const History& history(HistoryId h) const;
  HistoryId history_id(std::string_view name) const;
  StateId state_at(HistoryId h, Time t) const;
  const WorldState& world_state_at(HistoryId h, Time t) const { return state(state_at(h, t)); }
  HistorySet all_histories() const { return HistorySet::range(histories_.size()); }

  // Vertex table under prefix equality. Ids are ordered by cut, then by
  // prefix.
  std::size_t vertex_count() const { return vertex_cut_.size(); }
  VertexId vertex_of(HistoryId h, Time t) const;
  VertexId vertex_of(const Vertex& v) const { return vertex_of(v.history, v.cut); }
  Vertex vertex(VertexId v) const;  // representative: smallest extending history
  Time cut(VertexId v) const;
  StateId vertex_state(VertexId v) const;
  const HistorySet& extensions(VertexId v) const;
  std::string vertex_name(VertexId v) const;
  VertexId vertex_by_name(std::string_view prefix_path) const;
  // True when the prefix of `a` is a prefix of (or equal to) the prefix of `b`.
  bool vertex_precedes(VertexId a, VertexId b) const;

 private:
  void check_time(Time t) const;

  TimeAxis axis_;
  std::vector<WorldState> states_;
  std::map<std::string, StateId, std::less<>> state_index_;
  std::vector<std::string> propositions_;
  std::vector<std::string> agents_;
  std::vector<History> histories_;
  std::map<std::string, HistoryId, std::less<>> history_index_;
  std::vector<VertexId> vertex_index_;  // [h * (t_max + 1) + t]
  std::vector<Time> vertex_cut_;
  std::vector<HistorySet> vertex_extensions_;
  std::map<std::string, VertexId, std::less<>> vertex_names_;
};

bool vertex_equal(const Universe& u, const Vertex& a, const Vertex& b);
bool backwards_identical(const Universe& u, HistoryId h, HistoryId k, Time t);
// Every proposition assigned by the event must be in the model alphabet.
bool realizes(const Universe& u, const Event& e, HistoryId h);

}  // namespace stratos
