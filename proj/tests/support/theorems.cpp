#include "theorems.hpp"

#include <algorithm>
#include <cmath>

#include "stratos/ability.hpp"
#include "stratos/axioms.hpp"
#include "stratos/errors.hpp"
#include "stratos/intention.hpp"

namespace stratos::testing {
namespace {

constexpr double kTol = 1e-9;

std::string where(const Model& m, const std::string& agent, const Formula& a, HistoryId h, Time t) {
  return m.name + " " + agent + " '" + to_string(a) + "' at " + m.universe->history(h).name + "@" + std::to_string(t);
}

bool full_support(const Model& m) {
  for (double w : m.prior.weights())
    if (w <= 0) return false;
  return true;
}

}  // namespace

std::vector<std::string> axiom_theorem_violations(const Model& m) {
  std::vector<std::string> out;
  Evaluator ev = m.evaluator();
  for (const auto& agent : m.universe->agents()) {
    const InfoEnsemble& xi = m.ensemble(agent);
    auto scan = [&](const AxiomReport& r, const char* why) {
      for (const auto& v : r.verdicts)
        if (!v.passed) out.push_back(m.name + " " + agent + " " + why + ": " + v.schema + " fails on " + v.counterexample.value_or("?"));
    };
    if (has_perfect_info(xi)) scan(check_pi_axioms(ev, agent), "perfect");
    if (has_ndi(xi)) scan(check_ndi_axioms(ev, agent), "ndi");
  }
  return out;
}

std::vector<std::string> relation_theorem_violations(const Model& m) {
  std::vector<std::string> out;
  for (const auto& agent : m.universe->agents()) {
    const InfoEnsemble& xi = m.ensemble(agent);
    bool identical = relation_backwards_identical(xi);
    bool consistent = relation_backwards_consistent(xi);
    if (has_perfect_info(xi) && !identical) out.push_back(m.name + " " + agent + ": perfect but not backwards identical");
    if (has_ndi(xi) && !consistent) out.push_back(m.name + " " + agent + ": ndi but not backwards consistent");
    if (identical && !consistent) out.push_back(m.name + " " + agent + ": identical but not consistent");
    if (has_perfect_info(xi) && !has_ndi(xi)) out.push_back(m.name + " " + agent + ": perfect without ndi");
  }
  return out;
}

std::vector<FormulaPtr> lattice_formulas(const Universe& u) {
  std::vector<FormulaPtr> out{fml::truth(true)};
  const auto& props = u.propositions();
  for (const auto& p : props) {
    out.push_back(fml::future(fml::atom(p)));
    out.push_back(fml::negate(fml::atom(p)));
    out.push_back(fml::future(fml::negate(fml::atom(p))));
  }
  if (props.size() >= 2) out.push_back(fml::future(fml::conj(fml::atom(props[0]), fml::atom(props[1]))));
  return out;
}

void check_lattice(const Model& m, LatticeStats& stats) {
  const Universe& u = *m.universe;
  Evaluator ev = m.evaluator();
  const auto& agents = u.agents();
  const bool full = full_support(m);
  // Group tuples are products of member spaces; allow more than one space's cap.
  Model wide = m;
  wide.strategy_cap = std::max<std::size_t>(m.strategy_cap, 1u << 20);
  auto fail = [&](const std::string& what, const std::string& agent, const FormulaPtr& a, HistoryId h, Time t) {
    stats.violations.push_back(what + ": " + where(m, agent, *a, h, t));
  };

  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    HistoryId h = *u.extensions(v).begin();
    Time t = u.cut(v);
    for (const auto& alpha : lattice_formulas(u)) {
      bool coop_needed = false;
      for (const auto& agent : agents) {
        ++stats.checks;
        bool o = o_can(m, ev, agent, alpha, h, t).verdict;

        bool s = false;
        try {
          s = s_can(m, ev, agent, alpha, h, t).verdict;
          if (s && !o) fail("s_can without o_can", agent, alpha, h, t);
          coop_needed = coop_needed || s;
        } catch (const MissingIntention&) {
          ++stats.skipped;
        }
        if (s && m.nested_plan_states.count(agent) && !co_can(m, ev, agent, alpha, h, t).verdict)
          fail("s_can without co_can", agent, alpha, h, t);

        if (m.plan_states.count(agent) && m.repertoires.count(agent)) {
          const PlanState& plan = m.plan_table(agent).at(v);
          if (plan.is_subset_of(m.repertoire(agent)) && plans(m, ev, agent, alpha, h, t).verdict && !s)
            fail("plans without s_can", agent, alpha, h, t);
        }

        UtilityResult pess = u_can(m, ev, agent, alpha, h, t, UtilityMode::kPessimistic);
        UtilityResult opt = u_can(m, ev, agent, alpha, h, t, UtilityMode::kOptimistic);
        if (pess.value.has_value() != o || opt.value.has_value() != o) fail("u_can defined iff o_can", agent, alpha, h, t);
        if (pess.value && opt.value && *pess.value > *opt.value + kTol) fail("pess > opt", agent, alpha, h, t);
        try {
          ExpectedUtilityResult xu = xu_can(m, ev, agent, alpha, h, t);
          if (xu.expected_utility && pess.value && opt.value &&
              (*pess.value > *xu.expected_utility + kTol || *xu.expected_utility > *opt.value + kTol))
            fail("xu outside [pess, opt]", agent, alpha, h, t);
        } catch (const UndefinedConditional&) {
        }

        try {
          double p = p_can(m, ev, agent, alpha, h, t).probability;
          if (p < -kTol || p > 1 + kTol) fail("p_can outside [0,1]", agent, alpha, h, t);
          if (full && ((std::abs(p - 1) <= kTol) != o)) fail("p_can == 1 differs from o_can", agent, alpha, h, t);
        } catch (const UndefinedConditional&) {
          if (full) fail("p_can undefined under a full-support prior", agent, alpha, h, t);
        }
      }
      if (!coop_needed) continue;
      try {
        if (!coop_can(wide, ev, agents, alpha, h, t).verdict) fail("s_can without coop_can", agents.front(), alpha, h, t);
      } catch (const EnumerationLimit&) {
        ++stats.skipped;
      } catch (const MissingIntention&) {
        ++stats.skipped;
      }
    }
  }
}

}  // namespace stratos::testing
