#pragma once

// Pure strategies over an agent's information ensemble, their potentials,
// and plan states (sets of strategies).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratos/action.hpp"
#include "stratos/history_set.hpp"
#include "stratos/information.hpp"
#include "stratos/world.hpp"

namespace stratos {

inline constexpr std::size_t kDefaultStrategyCap = 1'000'000;

// Index into a StrategySpace (mixed-radix over acting cells).
using StrategyIndex = std::size_t;

struct PureStrategy {
  std::string agent;
  StrategyIndex index = 0;
  std::vector<std::size_t> picks;  // alternative index per acting cell
};

// Allowed alternatives per acting cell; cells not listed are free.
using PartialStrategy = std::map<std::size_t, std::set<std::size_t>>;

class StrategySpace {
 public:
  StrategySpace(std::shared_ptr<const Universe> universe, std::shared_ptr<const Dynamics> dynamics,
                std::shared_ptr<const InfoEnsemble> ensemble, std::string agent,
                std::size_t cap = kDefaultStrategyCap);

  const std::string& agent() const { return agent_; }
  const Universe& universe() const { return *universe_; }
  const InfoEnsemble& ensemble() const { return *ensemble_; }
  std::size_t cap() const { return cap_; }

  // Cells of the ensemble where the agent has choice points.
  const std::vector<std::size_t>& acting_cells() const { return acting_cells_; }
  std::optional<std::size_t> acting_index(std::size_t cell) const;
  const std::vector<Alternative>& alternatives_at(std::size_t acting) const { return alts_.at(acting); }

  // |Pi|, saturating at UINT64_MAX.
  std::uint64_t count() const { return count_; }
  bool enumerable() const { return count_ <= cap_; }
  // |Pi|; throws EnumerationLimit beyond the cap.
  std::size_t size() const;

  PureStrategy strategy(StrategyIndex i) const;
  StrategyIndex index_of(const std::vector<std::size_t>& picks) const;
  std::vector<StrategyIndex> all() const;
  std::vector<StrategyIndex> matching(const PartialStrategy& partial) const;

  // Alternative chosen by strategy i at ensemble cell c, or nullptr when the
  // agent does not act there.
  const Alternative* choice(StrategyIndex i, std::size_t cell) const;
  // Whether the step h: t -> t+1 complies with strategy i.
  bool permits(StrategyIndex i, HistoryId h, Time t) const;
  // For each history, the earliest time from which every later step
  // complies (t_max + 1 would never occur; a non-complying last step gives
  // t_max).
  std::vector<Time> compliance(StrategyIndex i) const;
  // pi*: histories all of whose steps comply.
  HistorySet potential(StrategyIndex i) const;
  // Histories extending one of `vertices` that comply from that vertex's
  // cut onward.
  HistorySet potential_from(StrategyIndex i, const std::vector<VertexId>& vertices) const;

  // "cell:cp=action,..;cell:..." with cell names from the ensemble.
  std::string describe(StrategyIndex i) const;

 private:
  std::vector<std::size_t> decode(StrategyIndex i) const;

  std::shared_ptr<const Universe> universe_;
  std::shared_ptr<const Dynamics> dynamics_;
  std::shared_ptr<const InfoEnsemble> ensemble_;
  std::string agent_;
  std::size_t cap_;
  std::vector<std::size_t> acting_cells_;
  std::vector<std::optional<std::size_t>> acting_of_cell_;
  std::vector<std::vector<Alternative>> alts_;
  // allowed_[acting][alt] : state -> permitted successors (sorted)
  std::vector<std::vector<std::map<StateId, std::vector<StateId>>>> allowed_;
  // step_acting_[h * t_max + t] : acting index of the cell at (h, t), or npos
  std::vector<std::size_t> step_acting_;
  std::uint64_t count_ = 1;
};

// A nonempty set of strategies of one agent.
class PlanState {
 public:
  PlanState(std::string agent, std::vector<StrategyIndex> members);
  static PlanState full(const StrategySpace& space);

  const std::string& agent() const { return agent_; }
  const std::vector<StrategyIndex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(StrategyIndex i) const;
  bool is_subset_of(const PlanState& other) const;

  friend bool operator==(const PlanState&, const PlanState&) = default;

 private:
  std::string agent_;
  std::vector<StrategyIndex> members_;  // sorted, unique
};

// Plan state per vertex with an optional default.
class PlanStateTable {
 public:
  PlanStateTable() = default;
  explicit PlanStateTable(std::optional<PlanState> fallback) : default_(std::move(fallback)) {}

  void set(VertexId v, PlanState s);
  bool declared(VertexId v) const { return at_.count(v) || default_.has_value(); }
  // Throws MissingIntention when neither an entry nor a default exists.
  const PlanState& at(VertexId v) const;

 private:
  std::optional<PlanState> default_;
  std::map<VertexId, PlanState> at_;
};

HistorySet plan_state_potential(const StrategySpace& space, const PlanState& s);
// Union over members of potential_from.
HistorySet plan_state_potential_from(const StrategySpace& space, const PlanState& s,
                                     const std::vector<VertexId>& vertices);

}  // namespace stratos
