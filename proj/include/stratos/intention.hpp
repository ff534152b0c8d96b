#pragma once

// Potentials of plan states and the intention operators (plans, co-plans,
// group plans, will, probabilistic and utilitarian plans).
//
// Potentials at a query point (H, t) are taken relative to the querying
// agent's cell I = I_A(H^t): a strategy contributes the histories through
// some vertex of I that comply with it from that vertex on. A formula is
// then evaluated at (K, t_K), t_K being the cut where K passes through I.

#include <optional>
#include <string>
#include <vector>

#include "stratos/eval.hpp"
#include "stratos/model.hpp"

namespace stratos {

std::vector<VertexId> info_vertices(const Model& m, const std::string& agent, HistoryId h, Time t);

HistorySet strategy_potential(const Model& m, const std::string& agent, StrategyIndex pi);
// pi* intersected with I*.
HistorySet potential_given_info(const Model& m, const std::string& agent, StrategyIndex pi, const InfoSet& info);

// Union of the vertex plan states over `info`. For holder == subject every
// vertex must carry the same plan state (ConsistencyError otherwise).
PlanState plan_state_at_info(const Model& m, const std::string& holder, const std::string& subject,
                             const InfoSet& info);

// Intersection of member potentials (whole pi*, no information context).
// Empty results are allowed.
HistorySet group_potential(const Model& m, const std::vector<PlanState>& members);

// S_A(I_A(H^t))* relative to A's cell.
HistorySet own_potential_at(const Model& m, const std::string& agent, HistoryId h, Time t);
// Intersection over `subjects` of the holder's nested plan-state potentials,
// relative to the holder's cell.
HistorySet nested_potential_at(const Model& m, const std::string& holder,
                               const std::vector<std::string>& subjects, HistoryId h, Time t);
// Intersection over members of their own potentials at (H, t).
HistorySet group_potential_at(const Model& m, const std::vector<std::string>& group, HistoryId h, Time t);
// Subjects the holder has nested plan states about.
std::vector<std::string> nested_subjects(const Model& m, const std::string& holder);

// Candidate potential intersected with the agent's own potential and the
// nested potential about every subject the agent holds beliefs on.
// Throws DomainError for a candidate of another agent.
HistorySet what_if(const Model& m, const std::string& agent, const PlanState& candidate, HistoryId h, Time t);

bool expectations_correct(const HistorySet& c_star, const HistorySet& potential);

struct PlanVerdict {
  bool verdict = true;
  HistorySet potential;
  std::optional<HistoryId> counterexample;
};

PlanVerdict plans(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                  Time t);
PlanVerdict co_plans(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                     Time t);
// Evaluated at the query time t.
PlanVerdict group_plans(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                        const FormulaPtr& alpha, HistoryId h, Time t);
// The holder's nested expectation about the subject results in alpha.
PlanVerdict will(const Model& m, Evaluator& ev, const std::string& holder, const std::string& subject,
                 const FormulaPtr& alpha, HistoryId h, Time t);

// Conditional prior mass of alpha within the agent's potential. Throws
// UndefinedConditional for a zero-mass potential.
double plan_probability(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha,
                        HistoryId h, Time t);
bool plans_p(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, double p,
             HistoryId h, Time t);
// Every history in the potential with U_A >= u satisfies alpha.
PlanVerdict plans_u(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, double u,
                    HistoryId h, Time t);

}  // namespace stratos
