#include "stratos/strategy.hpp"

#include <algorithm>
#include <limits>

#include "stratos/errors.hpp"

namespace stratos {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

StrategySpace::StrategySpace(std::shared_ptr<const Universe> universe, std::shared_ptr<const Dynamics> dynamics,
                             std::shared_ptr<const InfoEnsemble> ensemble, std::string agent, std::size_t cap)
    : universe_(std::move(universe)),
      dynamics_(std::move(dynamics)),
      ensemble_(std::move(ensemble)),
      agent_(std::move(agent)),
      cap_(cap) {
  if (!universe_ || !dynamics_ || !ensemble_) throw ModelError("strategy space needs a universe, dynamics and ensemble");
  if (agent_ == kWorldAgent) throw ModelError("nature has no strategy space");
  const Universe& u = *universe_;
  acting_of_cell_.assign(ensemble_->cell_count(), std::nullopt);
  for (std::size_t c = 0; c < ensemble_->cell_count(); ++c) {
    auto alts = alternatives(u, *dynamics_, agent_, ensemble_->cell(c));
    if (alts.empty() || alts.front().is_null()) continue;
    acting_of_cell_[c] = acting_cells_.size();
    acting_cells_.push_back(c);
    std::vector<std::map<StateId, std::vector<StateId>>> allowed;
    for (const auto& alt : alts) {
      std::map<StateId, std::vector<StateId>> per_state;
      for (const auto& [s, choice] : alt.per_state) per_state[s] = outcomes(*dynamics_, agent_, alt, s);
      allowed.push_back(std::move(per_state));
    }
    count_ = saturating_mul(count_, alts.size());
    alts_.push_back(std::move(alts));
    allowed_.push_back(std::move(allowed));
  }

  const auto steps = static_cast<std::size_t>(u.t_max());
  step_acting_.assign(u.history_count() * steps, kNone);
  for (HistoryId h = 0; h < u.history_count(); ++h)
    for (Time t = 0; t < u.t_max(); ++t) {
      auto a = acting_of_cell_[ensemble_->cell_index(u.vertex_of(h, t))];
      if (a) step_acting_[h * steps + static_cast<std::size_t>(t)] = *a;
    }
}

std::optional<std::size_t> StrategySpace::acting_index(std::size_t cell) const {
  if (cell >= acting_of_cell_.size()) throw ModelReferenceError("no cell " + std::to_string(cell));
  return acting_of_cell_[cell];
}

std::size_t StrategySpace::size() const {
  if (!enumerable())
    throw EnumerationLimit("strategy space of " + agent_ + " exceeds the cap of " + std::to_string(cap_));
  return static_cast<std::size_t>(count_);
}

std::vector<std::size_t> StrategySpace::decode(StrategyIndex i) const {
  if (i >= size()) throw ModelReferenceError("no strategy " + std::to_string(i) + " for " + agent_);
  std::vector<std::size_t> picks(alts_.size());
  for (std::size_t k = alts_.size(); k-- > 0;) {
    picks[k] = i % alts_[k].size();
    i /= alts_[k].size();
  }
  return picks;
}

PureStrategy StrategySpace::strategy(StrategyIndex i) const { return PureStrategy{agent_, i, decode(i)}; }

StrategyIndex StrategySpace::index_of(const std::vector<std::size_t>& picks) const {
  if (picks.size() != alts_.size())
    throw IncompleteStrategy("strategy for " + agent_ + " must assign all " + std::to_string(alts_.size()) +
                             " acting cells");
  StrategyIndex i = 0;
  for (std::size_t k = 0; k < picks.size(); ++k) {
    if (picks[k] >= alts_[k].size()) throw ModelReferenceError("no alternative " + std::to_string(picks[k]));
    i = i * alts_[k].size() + picks[k];
  }
  return i;
}

std::vector<StrategyIndex> StrategySpace::all() const {
  std::vector<StrategyIndex> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<StrategyIndex> StrategySpace::matching(const PartialStrategy& partial) const {
  std::vector<std::vector<std::size_t>> options(alts_.size());
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < alts_.size(); ++k) {
    auto it = partial.find(k);
    if (it == partial.end()) {
      for (std::size_t a = 0; a < alts_[k].size(); ++a) options[k].push_back(a);
    } else {
      for (std::size_t a : it->second) {
        if (a >= alts_[k].size()) throw ModelReferenceError("no alternative " + std::to_string(a));
        options[k].push_back(a);
      }
    }
    n = saturating_mul(n, options[k].size());
  }
  for (const auto& [k, set] : partial)
    if (k >= alts_.size()) throw ModelReferenceError("no acting cell " + std::to_string(k));
  if (n > cap_) throw EnumerationLimit("partial strategy of " + agent_ + " matches more than " + std::to_string(cap_));
  std::vector<StrategyIndex> out;
  if (n == 0) return out;
  std::vector<std::size_t> pos(alts_.size(), 0), picks(alts_.size());
  while (true) {
    for (std::size_t k = 0; k < pos.size(); ++k) picks[k] = options[k][pos[k]];
    out.push_back(index_of(picks));
    std::size_t k = pos.size();
    while (k > 0) {
      --k;
      if (++pos[k] < options[k].size()) break;
      pos[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (pos.empty()) return out;
  }
}

const Alternative* StrategySpace::choice(StrategyIndex i, std::size_t cell) const {
  auto a = acting_index(cell);
  if (!a) return nullptr;
  return &alts_[*a][decode(i)[*a]];
}

bool StrategySpace::permits(StrategyIndex i, HistoryId h, Time t) const {
  const Universe& u = *universe_;
  if (t < 0 || t >= u.t_max()) throw RangeError("no step at time " + std::to_string(t));
  std::size_t a = step_acting_[h * static_cast<std::size_t>(u.t_max()) + static_cast<std::size_t>(t)];
  if (a == kNone) return true;
  const auto& succ = allowed_[a][decode(i)[a]].at(u.state_at(h, t));
  return std::binary_search(succ.begin(), succ.end(), u.state_at(h, t + 1));
}

std::vector<Time> StrategySpace::compliance(StrategyIndex i) const {
  const Universe& u = *universe_;
  const auto picks = decode(i);
  const auto steps = static_cast<std::size_t>(u.t_max());
  std::vector<Time> from(u.history_count(), 0);
  for (HistoryId h = 0; h < u.history_count(); ++h) {
    for (Time t = u.t_max() - 1; t >= 0; --t) {
      std::size_t a = step_acting_[h * steps + static_cast<std::size_t>(t)];
      if (a == kNone) continue;
      const auto& succ = allowed_[a][picks[a]].at(u.state_at(h, t));
      if (!std::binary_search(succ.begin(), succ.end(), u.state_at(h, t + 1))) {
        from[h] = t + 1;
        break;
      }
    }
  }
  return from;
}

HistorySet StrategySpace::potential(StrategyIndex i) const {
  auto from = compliance(i);
  HistorySet out;
  for (HistoryId h = 0; h < from.size(); ++h)
    if (from[h] == 0) out.push_back_sorted(h);
  return out;
}

HistorySet StrategySpace::potential_from(StrategyIndex i, const std::vector<VertexId>& vertices) const {
  const Universe& u = *universe_;
  auto from = compliance(i);
  std::vector<HistoryId> ids;
  for (VertexId v : vertices) {
    Time cut = u.cut(v);
    for (HistoryId h : u.extensions(v))
      if (from[h] <= cut) ids.push_back(h);
  }
  return HistorySet(std::move(ids));
}

std::string StrategySpace::describe(StrategyIndex i) const {
  auto picks = decode(i);
  std::string out;
  for (std::size_t k = 0; k < picks.size(); ++k) {
    if (k) out += ";";
    out += ensemble_->cell_name(acting_cells_[k]) + ":";
    const auto& sel = alts_[k][picks[k]].selection;
    bool first = true;
    for (const auto& [cp, action] : sel) {
      if (!first) out += ",";
      first = false;
      out += sel.size() == 1 ? action : cp + "=" + action;
    }
  }
  return out;
}

PlanState::PlanState(std::string agent, std::vector<StrategyIndex> members)
    : agent_(std::move(agent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw ModelError("plan state of " + agent_ + " is empty");
}

PlanState PlanState::full(const StrategySpace& space) { return PlanState(space.agent(), space.all()); }

bool PlanState::contains(StrategyIndex i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool PlanState::is_subset_of(const PlanState& other) const {
  return agent_ == other.agent_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

void PlanStateTable::set(VertexId v, PlanState s) { at_.insert_or_assign(v, std::move(s)); }

const PlanState& PlanStateTable::at(VertexId v) const {
  auto it = at_.find(v);
  if (it != at_.end()) return it->second;
  if (default_) return *default_;
  throw MissingIntention("no plan state declared at vertex " + std::to_string(v));
}

namespace {

template <typename Fn>
HistorySet union_over(const StrategySpace& space, const PlanState& s, Fn&& one) {
  std::vector<char> hit(space.universe().history_count(), 0);
  for (StrategyIndex i : s.members())
    for (HistoryId h : one(i)) hit[h] = 1;
  HistorySet out;
  for (HistoryId h = 0; h < hit.size(); ++h)
    if (hit[h]) out.push_back_sorted(h);
  return out;
}

}  // namespace

HistorySet plan_state_potential(const StrategySpace& space, const PlanState& s) {
  return union_over(space, s, [&](StrategyIndex i) { return space.potential(i); });
}

HistorySet plan_state_potential_from(const StrategySpace& space, const PlanState& s,
                                     const std::vector<VertexId>& vertices) {
  return union_over(space, s, [&](StrategyIndex i) { return space.potential_from(i, vertices); });
}

}  // namespace stratos
