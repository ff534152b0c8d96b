#include "stratos/intention.hpp"

#include <cmath>

#include "stratos/errors.hpp"

namespace stratos {
namespace {

void check_point(const Universe& u, HistoryId h, Time t) {
  if (h >= u.history_count()) throw ModelReferenceError("unknown history id " + std::to_string(h));
  if (!u.time_axis().contains(t)) throw RangeError("time " + std::to_string(t) + " is outside 0.." + std::to_string(u.t_max()));
}

// Cut at which `k` passes through `info`, or `fallback`.
Time cut_in(const Universe& u, const InfoSet& info, HistoryId k, Time fallback) {
  for (Time t = 0; t <= u.t_max(); ++t)
    if (info.contains(u.vertex_of(k, t))) return t;
  return fallback;
}

PlanVerdict check_over(const Universe& u, Evaluator& ev, const FormulaPtr& alpha, HistorySet potential,
                       const InfoSet* info, Time t) {
  const TruthTable& table = ev.table(alpha);
  PlanVerdict out;
  for (HistoryId k : potential) {
    Time tk = info ? cut_in(u, *info, k, t) : t;
    if (!table.at(k, tk)) {
      out.verdict = false;
      out.counterexample = k;
      break;
    }
  }
  out.potential = std::move(potential);
  return out;
}

}  // namespace

std::vector<VertexId> info_vertices(const Model& m, const std::string& agent, HistoryId h, Time t) {
  check_point(*m.universe, h, t);
  return m.ensemble(agent).cell_of(m.universe->vertex_of(h, t)).members();
}

HistorySet strategy_potential(const Model& m, const std::string& agent, StrategyIndex pi) {
  return m.space(agent).potential(pi);
}

HistorySet potential_given_info(const Model& m, const std::string& agent, StrategyIndex pi, const InfoSet& info) {
  return strategy_potential(m, agent, pi).intersect(i_star(*m.universe, info));
}

PlanState plan_state_at_info(const Model& m, const std::string& holder, const std::string& subject,
                             const InfoSet& info) {
  const PlanStateTable& table = holder == subject ? m.plan_table(holder) : m.nested_table(holder, subject);
  if (holder == subject) {
    const PlanState& first = table.at(info.members().front());
    for (VertexId v : info.members())
      if (!(table.at(v) == first))
        throw ConsistencyError("plan state of " + holder + " differs within one information cell (at " +
                               m.universe->vertex_name(info.members().front()) + " and " +
                               m.universe->vertex_name(v) + ")");
    return first;
  }
  std::vector<StrategyIndex> all;
  for (VertexId v : info.members()) {
    const auto& s = table.at(v).members();
    all.insert(all.end(), s.begin(), s.end());
  }
  return PlanState(subject, std::move(all));
}

HistorySet group_potential(const Model& m, const std::vector<PlanState>& members) {
  HistorySet out = m.universe->all_histories();
  for (const auto& s : members) out = out.intersect(plan_state_potential(m.space(s.agent()), s));
  return out;
}

HistorySet own_potential_at(const Model& m, const std::string& agent, HistoryId h, Time t) {
  check_point(*m.universe, h, t);
  const InfoSet& cell = m.ensemble(agent).cell_of(m.universe->vertex_of(h, t));
  PlanState s = plan_state_at_info(m, agent, agent, cell);
  return plan_state_potential_from(m.space(agent), s, cell.members());
}

HistorySet nested_potential_at(const Model& m, const std::string& holder, const std::vector<std::string>& subjects,
                               HistoryId h, Time t) {
  check_point(*m.universe, h, t);
  const InfoSet& cell = m.ensemble(holder).cell_of(m.universe->vertex_of(h, t));
  HistorySet out = m.universe->all_histories();
  for (const auto& b : subjects) {
    PlanState s = plan_state_at_info(m, holder, b, cell);
    out = out.intersect(plan_state_potential_from(m.space(b), s, cell.members()));
  }
  return out;
}

HistorySet group_potential_at(const Model& m, const std::vector<std::string>& group, HistoryId h, Time t) {
  HistorySet out = m.universe->all_histories();
  for (const auto& a : group) out = out.intersect(own_potential_at(m, a, h, t));
  return out;
}

std::vector<std::string> nested_subjects(const Model& m, const std::string& holder) {
  std::vector<std::string> out;
  auto it = m.nested_plan_states.find(holder);
  if (it != m.nested_plan_states.end())
    for (const auto& [subject, table] : it->second)
      if (subject != holder) out.push_back(subject);
  return out;
}

HistorySet what_if(const Model& m, const std::string& agent, const PlanState& candidate, HistoryId h, Time t) {
  if (candidate.agent() != agent) throw DomainError("candidate plan belongs to " + candidate.agent() + ", not " + agent);
  auto cell = info_vertices(m, agent, h, t);
  HistorySet out = plan_state_potential_from(m.space(agent), candidate, cell);
  out = out.intersect(own_potential_at(m, agent, h, t));
  return out.intersect(nested_potential_at(m, agent, nested_subjects(m, agent), h, t));
}

bool expectations_correct(const HistorySet& c_star, const HistorySet& potential) {
  return potential.is_subset_of(c_star);
}

PlanVerdict plans(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                  Time t) {
  auto pot = own_potential_at(m, agent, h, t);
  const InfoSet& cell = m.ensemble(agent).cell_of(m.universe->vertex_of(h, t));
  return check_over(*m.universe, ev, alpha, std::move(pot), &cell, t);
}

PlanVerdict co_plans(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                     Time t) {
  auto pot = own_potential_at(m, agent, h, t).intersect(nested_potential_at(m, agent, nested_subjects(m, agent), h, t));
  const InfoSet& cell = m.ensemble(agent).cell_of(m.universe->vertex_of(h, t));
  return check_over(*m.universe, ev, alpha, std::move(pot), &cell, t);
}

PlanVerdict group_plans(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                        const FormulaPtr& alpha, HistoryId h, Time t) {
  if (group.empty()) throw DomainError("empty group");
  return check_over(*m.universe, ev, alpha, group_potential_at(m, group, h, t), nullptr, t);
}

PlanVerdict will(const Model& m, Evaluator& ev, const std::string& holder, const std::string& subject,
                 const FormulaPtr& alpha, HistoryId h, Time t) {
  auto pot = nested_potential_at(m, holder, {subject}, h, t);
  const InfoSet& cell = m.ensemble(holder).cell_of(m.universe->vertex_of(h, t));
  return check_over(*m.universe, ev, alpha, std::move(pot), &cell, t);
}

double plan_probability(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha,
                        HistoryId h, Time t) {
  auto pot = own_potential_at(m, agent, h, t);
  double total = m.prior.mass(pot);
  if (total <= 0) throw UndefinedConditional("plan potential of " + agent + " has zero prior mass");
  const InfoSet& cell = m.ensemble(agent).cell_of(m.universe->vertex_of(h, t));
  const TruthTable& table = ev.table(alpha);
  double hit = 0;
  for (HistoryId k : pot)
    if (table.at(k, cut_in(*m.universe, cell, k, t))) hit += m.prior.at(k);
  return hit / total;
}

bool plans_p(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, double p,
             HistoryId h, Time t) {
  if (!(p >= 0 && p <= 1)) throw DomainError("probability must lie in [0, 1]");
  return std::fabs(plan_probability(m, ev, agent, alpha, h, t) - p) <= kProbabilityTolerance;
}

PlanVerdict plans_u(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, double u,
                    HistoryId h, Time t) {
  auto pot = own_potential_at(m, agent, h, t);
  const InfoSet& cell = m.ensemble(agent).cell_of(m.universe->vertex_of(h, t));
  const TruthTable& table = ev.table(alpha);
  PlanVerdict out;
  for (HistoryId k : pot) {
    if (m.utilities.at(agent, k) >= u && !table.at(k, cut_in(*m.universe, cell, k, t))) {
      out.verdict = false;
      out.counterexample = k;
      break;
    }
  }
  out.potential = std::move(pot);
  return out;
}

}  // namespace stratos
