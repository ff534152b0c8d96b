#pragma once

// Ability operators. Every search ranges over a strategy domain chosen by a
// space selector: the full space Pi (objective) or the declared repertoire
// Delta (subjective). Potentials are the futures of the query vertex H^t
// that comply with the strategy; alpha is evaluated at (K, t).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stratos/eval.hpp"
#include "stratos/model.hpp"

namespace stratos {

enum class SpaceKind { kObjective, kSubjective };
enum class UtilityMode { kPessimistic, kOptimistic };

struct AbilityResult {
  bool verdict = false;
  // One strategy description per group member, for the first witness found.
  std::vector<std::string> witness;
  std::vector<std::string> warnings;
  std::size_t searched = 0;
};

struct UtilityResult {
  std::optional<double> value;  // absent when no strategy forces alpha
  std::vector<std::string> witness;
};

struct ProbabilityResult {
  double probability = 0;
  std::vector<std::string> witness;
  std::size_t skipped = 0;  // strategies with zero-mass potential
};

struct ExpectedUtilityResult {
  std::optional<double> probability;
  std::optional<double> expected_utility;
  std::vector<std::string> witness;
};

std::vector<StrategyIndex> strategy_domain(const Model& m, const std::string& agent, SpaceKind kind);

// alpha holds at (K, t) for every K in `potential`.
bool forces(Evaluator& ev, const HistorySet& potential, const FormulaPtr& alpha, Time t);
// Over the whole pi*.
bool forces(const Model& m, Evaluator& ev, const std::string& agent, StrategyIndex pi, const FormulaPtr& alpha,
            Time t);

AbilityResult can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                  Time t, SpaceKind kind);
AbilityResult o_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                    Time t);
AbilityResult s_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                    Time t);
// Forcing over pi's futures intersected with the agent's nested potential
// about every subject it holds plan states on.
AbilityResult co_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                     Time t, SpaceKind kind = SpaceKind::kSubjective);
AbilityResult coop_can(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                       const FormulaPtr& alpha, HistoryId h, Time t, SpaceKind kind = SpaceKind::kSubjective);
AbilityResult co_coop_can(const Model& m, Evaluator& ev, const std::vector<std::string>& group,
                          const FormulaPtr& alpha, HistoryId h, Time t, const std::vector<std::string>& others,
                          SpaceKind kind = SpaceKind::kSubjective);

UtilityResult u_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha, HistoryId h,
                    Time t, UtilityMode mode, SpaceKind kind = SpaceKind::kObjective);
// Max over strategies of the conditional prior mass of alpha within the
// potential. Zero-mass potentials are skipped; UndefinedConditional when
// every one is zero-mass.
ProbabilityResult p_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha,
                        HistoryId h, Time t, SpaceKind kind = SpaceKind::kObjective);
// Max expected utility (prior renormalized within the potential) over
// forcing strategies with positive mass.
ExpectedUtilityResult xu_can(const Model& m, Evaluator& ev, const std::string& agent, const FormulaPtr& alpha,
                             HistoryId h, Time t, SpaceKind kind = SpaceKind::kObjective);

}  // namespace stratos
