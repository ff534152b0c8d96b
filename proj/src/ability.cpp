#include "stratos/ability.hpp"

#include <algorithm>
#include <limits>

#include "stratos/errors.hpp"
#include "stratos/intention.hpp"

namespace stratos {
namespace {

void check_point(const Universe& u, HistoryId h, Time t) {
  if (h >= u.history_count()) throw ModelReferenceError("unknown history id " + std::to_string(h));
  if (!u.time_axis().contains(t)) throw RangeError("time " + std::to_string(t) + " is outside 0.." + std::to_string(u.t_max()));
}

HistorySet futures(const Model& m, const std::string& agent, StrategyIndex pi, VertexId v) {
  return m.space(agent).potential_from(pi, {v});
}

struct Candidate {
  StrategyIndex pi;
  HistorySet potential;
};

std::vector<Candidate> candidates(const Model& m, const std::string& agent, VertexId v, SpaceKind kind) {
  std::vector<Candidate> out;
  for (StrategyIndex pi : strategy_domain(m, agent, kind)) out.push_back({pi, futures(m, agent, pi, v)});
  return out;
}

// Enumerates strategy tuples for the group and calls `fn(tuple, intersection)`
// until it returns true.
template <typename Fn>
std::size_t for_each_tuple(const Model& m, const std::vector<std::string>& group, VertexId v, SpaceKind kind,
                           Fn&& fn) {
  if (group.empty()) throw DomainError("empty group");
  std::vector<std::vector<Candidate>> per;
  std::size_t total = 1;
  for (const auto& a : group) {
    per.push_back(candidates(m, a, v, kind));
    if (per.back().empty()) return 0;
    if (total > m.strategy_cap / per.back().size())
      throw EnumerationLimit("strategy tuples of the group exceed the cap of " + std::to_string(m.strategy_cap));
    total *= per.back().size();
  }
  std::vector<std::size_t> pos(group.size(), 0);
  std::size_t searched = 0;
  while (true) {
    HistorySet inter = per[0][pos[0]].potential;
    for (std::size_t k = 1; k < per.size(); ++k) inter = inter.intersect(per[k][pos[k]].potential);
    ++searched;
    std::vector<StrategyIndex> tuple;
    for (std::size_t k = 0; k < per.size(); ++k) tuple.push_back(per[k][pos[k]].pi);
    if (fn(tuple, inter)) return searched;
    std::size_t k = pos.size();
    while (true) {
      if (k == 0) return searched;
      --k;
      if (++pos[k] < per[k].size()) break;
      pos[k] = 0;
    }
  }
}

std::vector<std::string> describe(const Model& m, const std::vector<std::string>& group,
                                  const std::vector<StrategyIndex>& tuple) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < group.size(); ++k) out.push_back(group[k] + ": " + m.space(group[k]).describe(tuple[k]));
  return out;
}

AbilityResult group_search(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                           const FormulaPtr& alpha, HistoryId h, Time t, SpaceKind kind,
                           const std::optional<HistorySet>& restriction) {
  check_point(*m.universe, h, t);
  VertexId v = m.universe->vertex_of(h, t);
  AbilityResult out;
  bool warned = false;
  out.searched = for_each_tuple(m, group, v, kind, [&](const auto& tuple, const HistorySet& inter) {
    HistorySet domain = restriction ? inter.intersect(*restriction) : inter;
    if (domain.empty() && !warned) {
      out.warnings.push_back("empty forcing domain at " + m.universe->vertex_name(v) +
                             "; the verdict holds vacuously");
      warned = true;
    }
    if (forces(ev, domain, alpha, t)) {
      out.verdict = true;
      out.witness = describe(m, group, tuple);
      return true;
    }
    return false;
  });
  return out;
}

}  // namespace

std::vector<StrategyIndex> strategy_domain(const Model& m, const std::string& agent, SpaceKind kind) {
  if (kind == SpaceKind::kSubjective) return m.repertoire(agent).members();
  return m.space(agent).all();
}

bool forces(Evaluator& ev, const HistorySet& potential, const FormulaPtr& alpha, Time t) {
  const TruthTable& table = ev.table(alpha);
  for (HistoryId k : potential)
    if (!table.at(k, t)) return false;
  return true;
}

bool forces(const Model& m, Evaluator& ev, const std::string& agent, StrategyIndex pi, const FormulaPtr& alpha,
            Time t) {
  check_point(*m.universe, 0, t);
  return forces(ev, m.space(agent).potential(pi), alpha, t);
}

AbilityResult can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                  Time t, SpaceKind kind) {
  return group_search(m, ev, {agent}, alpha, h, t, kind, std::nullopt);
}

AbilityResult o_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                    Time t) {
  return can(m, ev, agent, alpha, h, t, SpaceKind::kObjective);
}

AbilityResult s_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                    Time t) {
  return can(m, ev, agent, alpha, h, t, SpaceKind::kSubjective);
}

AbilityResult co_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                     Time t, SpaceKind kind) {
  auto subjects = nested_subjects(m, agent);
  if (subjects.empty()) throw MissingIntention("no nested plan states declared for " + agent);
  auto nested = nested_potential_at(m, agent, subjects, h, t);
  return group_search(m, ev, {agent}, alpha, h, t, kind, nested);
}

AbilityResult coop_can(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                       const FormulaPtr& alpha, HistoryId h, Time t, SpaceKind kind) {
  return group_search(m, ev, group, alpha, h, t, kind, std::nullopt);
}

AbilityResult co_coop_can(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                          const FormulaPtr& alpha, HistoryId h, Time t, const std::vector<std::string>& others,
                          SpaceKind kind) {
  if (others.empty()) throw DomainError("empty second group");
  HistorySet nested = m.universe->all_histories();
  for (const auto& a : group) nested = nested.intersect(nested_potential_at(m, a, others, h, t));
  return group_search(m, ev, group, alpha, h, t, kind, nested);
}

UtilityResult u_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                    Time t, UtilityMode mode, SpaceKind kind) {
  check_point(*m.universe, h, t);
  VertexId v = m.universe->vertex_of(h, t);
  UtilityResult out;
  for (const auto& c : candidates(m, agent, v, kind)) {
    if (c.potential.empty() || !forces(ev, c.potential, alpha, t)) continue;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (HistoryId k : c.potential) {
      lo = std::min(lo, m.utilities.at(agent, k));
      hi = std::max(hi, m.utilities.at(agent, k));
    }
    double value = mode == UtilityMode::kPessimistic ? lo : hi;
    if (!out.value || value > *out.value) {
      out.value = value;
      out.witness = {agent + ": " + m.space(agent).describe(c.pi)};
    }
  }
  return out;
}

ProbabilityResult p_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha,
                        HistoryId h, Time t, SpaceKind kind) {
  check_point(*m.universe, h, t);
  VertexId v = m.universe->vertex_of(h, t);
  const TruthTable& table = ev.table(alpha);
  ProbabilityResult out;
  bool any = false;
  for (const auto& c : candidates(m, agent, v, kind)) {
    double total = m.prior.mass(c.potential);
    if (total <= 0) {
      ++out.skipped;
      continue;
    }
    double hit = 0;
    for (HistoryId k : c.potential)
      if (table.at(k, t)) hit += m.prior.at(k);
    double p = hit / total;
    if (!any || p > out.probability) {
      out.probability = p;
      out.witness = {agent + ": " + m.space(agent).describe(c.pi)};
    }
    any = true;
  }
  if (!any) throw UndefinedConditional("every strategy potential of " + agent + " has zero prior mass");
  return out;
}

ExpectedUtilityResult xu_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha,
                             HistoryId h, Time t, SpaceKind kind) {
  check_point(*m.universe, h, t);
  VertexId v = m.universe->vertex_of(h, t);
  ExpectedUtilityResult out;
  bool any_mass = false;
  for (const auto& c : candidates(m, agent, v, kind)) {
    double total = m.prior.mass(c.potential);
    if (total <= 0) continue;
    any_mass = true;
    if (!forces(ev, c.potential, alpha, t)) continue;
    double xu = 0;
    for (HistoryId k : c.potential) xu += m.prior.at(k) / total * m.utilities.at(agent, k);
    if (!out.expected_utility || xu > *out.expected_utility) {
      out.expected_utility = xu;
      out.probability = 1.0;
      out.witness = {agent + ": " + m.space(agent).describe(c.pi)};
    }
  }
  if (!any_mass) throw UndefinedConditional("every strategy potential of " + agent + " has zero prior mass");
  return out;
}

}  // namespace stratos
