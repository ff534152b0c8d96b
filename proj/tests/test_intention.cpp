#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_model.hpp"
#include "stratos/errors.hpp"
#include "stratos/intention.hpp"
#include "stratos/model_io.hpp"

using namespace stratos;
using namespace stratos::testing;

namespace {

// Plan verdict recomputed from trajectories: every K through a vertex of
// the cell that complies with some member from that vertex on satisfies
// alpha where it crosses the cell.
bool oracle_plans(const Model& m, const std::string& agent, const PlanState& s, const Formula& alpha, HistoryId h,
                  Time t) {
  const Universe& u = *m.universe;
  const InfoSet& cell = m.ensemble(agent).cell_of(u.vertex_of(h, t));
  for (StrategyIndex pi : s.members())
    for (VertexId v : cell.members()) {
      Vertex rep = u.vertex(v);
      for (HistoryId k = 0; k < u.history_count(); ++k)
        if (same_prefix(u, rep.history, k, rep.cut) && oracle_complies(m, agent, pi, k, rep.cut) &&
            !oracle_eval(m, alpha, k, rep.cut))
          return false;
    }
  return true;
}

}  // namespace

TEST(PlanStateAtInfo, UnitCellIsVertexState) {
  const Model& m = fixture("pennies");
  const InfoSet& cell = m.ensemble("A").cell_of(vert(m, "s0"));
  EXPECT_EQ(plan_state_at_info(m, "A", "A", cell), m.plan_table("A").at(vert(m, "s0")));
  EXPECT_EQ(plan_state_at_info(m, "A", "A", cell).members(),
            (std::vector<StrategyIndex>{strategy_named(m, "A", "s0:h")}));
}

TEST(PlanStateAtInfo, NestedGuessesUnite) {
  Model m = fixture("card");
  PlanStateTable guess;
  guess.set(vert(m, "s1"), PlanState("Mary", {0}));
  guess.set(vert(m, "s2"), PlanState("Mary", {1}));
  m.nested_plan_states["Joe"].insert_or_assign("Mary", guess);
  InfoSet i1 = m.ensemble("Mary").cell_of(vert(m, "s1"));
  EXPECT_EQ(plan_state_at_info(m, "Joe", "Mary", i1).members(), (std::vector<StrategyIndex>{0, 1}));
}

TEST(PlanStateAtInfo, SelfQueryOnCardCell) {
  const Model& m = fixture("card");
  const InfoSet& i1 = m.ensemble("Mary").cell_of(vert(m, "s1"));
  EXPECT_EQ(plan_state_at_info(m, "Mary", "Mary", i1), PlanState::full(m.space("Mary")));
}

TEST(PlanStateAtInfo, SelfVaryingWithinCellIsInconsistent) {
  Model m = fixture("card");
  PlanStateTable t(PlanState("Mary", {0}));
  t.set(vert(m, "s2"), PlanState("Mary", {1}));
  m.plan_states.insert_or_assign("Mary", t);
  const InfoSet& i1 = m.ensemble("Mary").cell_of(vert(m, "s1"));
  EXPECT_THROW(plan_state_at_info(m, "Mary", "Mary", i1), ConsistencyError);
}

TEST(GroupPotential, Examples) {
  const Model& m = fixture("pennies");
  PlanState ah("A", {strategy_named(m, "A", "s0:h")}), at("A", {strategy_named(m, "A", "s0:t")});
  PlanState bh("B", {strategy_named(m, "B", "s0:h")});
  EXPECT_EQ(group_potential(m, {ah}), m.space("A").potential(ah.members()[0]));
  EXPECT_EQ(group_potential(m, {ah, bh}), (HistorySet{hist(m, "s0/s_hh")}));
  EXPECT_TRUE(group_potential(m, {ah, at}).empty());
}

TEST(WhatIf, CurrentPlanLeavesPotential) {
  const Model& m = fixture("pennies");
  PlanState current = m.plan_table("A").at(vert(m, "s0"));
  EXPECT_EQ(what_if(m, "A", current, 0, 0), own_potential_at(m, "A", 0, 0));
}

TEST(WhatIf, HenryGoesGivenSueExpectation) {
  const Model& m = fixture("henry_sue");
  PlanState go("Henry", {strategy_named(m, "Henry", "s0:go")});
  EXPECT_EQ(what_if(m, "Henry", go, 0, 0), (HistorySet{hist(m, "s0/s_both")}));
}

TEST(WhatIf, RejectsEmptyOrForeignCandidate) {
  const Model& m = fixture("henry_sue");
  EXPECT_THROW(PlanState("Henry", {}), ModelError);
  EXPECT_THROW(what_if(m, "Henry", PlanState("Sue", {0}), 0, 0), DomainError);
}

TEST(ExpectationsCorrect, Examples) {
  const Model& m = fixture("pennies");
  HistorySet pi = m.space("A").potential(0);
  EXPECT_TRUE(expectations_correct(m.universe->all_histories(), pi));
  EXPECT_TRUE(expectations_correct(pi, pi));
  HistorySet missing(std::vector<HistoryId>(pi.begin() + 1, pi.end()));
  EXPECT_FALSE(expectations_correct(missing, pi));
}

TEST(Plans, SequentialMatcherPlansMatch) {
  const Model& m = fixture("pennies_sequential");
  Evaluator ev = m.evaluator();
  PlanVerdict v = plans(m, ev, "A", f("F match"), 0, 0);
  EXPECT_TRUE(v.verdict);
  EXPECT_EQ(v.potential, (HistorySet{hist(m, "s0/s_h/s_hh"), hist(m, "s0/s_t/s_tt")}));
}

TEST(Plans, FullPlanOnlyInevitable) {
  const Model& m = fixture("pennies_sequential");
  Evaluator ev = m.evaluator();
  PlanVerdict v = plans(m, ev, "B", f("F match"), 0, 0);
  EXPECT_FALSE(v.verdict);
  ASSERT_TRUE(v.counterexample.has_value());
  EXPECT_FALSE(m.universe->world_state_at(*v.counterexample, 2).has("match"));
  EXPECT_TRUE(plans(m, ev, "B", f("F true"), 0, 0).verdict);
}

TEST(Plans, UndeclaredIsMissingIntention) {
  const Model& m = fixture("pennies_blind");
  Evaluator ev = m.evaluator();
  EXPECT_THROW(plans(m, ev, "A", f("F match"), 0, 0), MissingIntention);
}

TEST(Plans, BadPointIsRejected) {
  const Model& m = fixture("pennies");
  Evaluator ev = m.evaluator();
  EXPECT_THROW(plans(m, ev, "A", f("F match"), 99, 0), ModelReferenceError);
  EXPECT_THROW(plans(m, ev, "A", f("F match"), 0, 7), RangeError);
}

TEST(CoPlans, HenryAndJoan) {
  Evaluator ev1 = fixture("henry_sue").evaluator();
  EXPECT_FALSE(co_plans(fixture("henry_sue"), ev1, "Henry", f("F meet"), 0, 0).verdict);
  EXPECT_TRUE(will(fixture("henry_sue"), ev1, "Henry", "Sue", f("F sue_there"), 0, 0).verdict);
  EXPECT_FALSE(plans(fixture("henry_sue"), ev1, "Sue", f("F meet"), 0, 0).verdict);

  const Model& jf = fixture("joan_fred");
  Evaluator ev2 = jf.evaluator();
  EXPECT_FALSE(plans(jf, ev2, "Joan", f("F meet"), 0, 0).verdict);
  EXPECT_TRUE(co_plans(jf, ev2, "Joan", f("F meet"), 0, 0).verdict);
  EXPECT_TRUE(group_plans(jf, ev2, {"Joan", "Fred"}, f("F meet"), 0, 0).verdict);
  EXPECT_THROW(group_plans(jf, ev2, {}, f("F meet"), 0, 0), DomainError);
}

TEST(PlansP, ForcedIsOne) {
  const Model& m = fixture("pennies_sequential");
  Evaluator ev = m.evaluator();
  EXPECT_TRUE(plans_p(m, ev, "A", f("F match"), 1.0, 0, 0));
}

TEST(PlansP, PenniesHeadsHalf) {
  const Model& m = fixture("pennies");
  Evaluator ev = m.evaluator();
  EXPECT_NEAR(plan_probability(m, ev, "A", f("F match"), 0, 0), 0.5, 1e-12);
  EXPECT_TRUE(plans_p(m, ev, "A", f("F match"), 0.5, 0, 0));
  EXPECT_FALSE(plans_p(m, ev, "A", f("F match"), 0.6, 0, 0));
  EXPECT_THROW(plans_p(m, ev, "A", f("F match"), 1.5, 0, 0), DomainError);
}

TEST(PlansP, ZeroMassIsUndefined) {
  Model m = load_model_text(R"({"schema_version": "1", "times": {"max": 1}, "propositions": ["match"],
    "agents": ["A", "B"],
    "states": [{"id": "s0"}, {"id": "s_hh", "labels": ["match"]}, {"id": "s_ht"}, {"id": "s_th"},
               {"id": "s_tt", "labels": ["match"]}],
    "initial": "s0",
    "trees": [{"state": "s0", "root": {"owner": "A", "choice": "a", "moves": {
      "h": {"owner": "B", "choice": "b", "moves": {"h": "s_hh", "t": "s_ht"}},
      "t": {"owner": "B", "choice": "b", "moves": {"h": "s_th", "t": "s_tt"}}}}}],
    "ensembles": {"A": "perfect", "B": "perfect"},
    "plan_states": {"A": {"default": [{"s0": "h"}]}},
    "prior": {"weights": {"s0/s_th": 0.5, "s0/s_tt": 0.5}}})");
  Evaluator ev = m.evaluator();
  EXPECT_THROW(plan_probability(m, ev, "A", f("F match"), 0, 0), UndefinedConditional);
}

TEST(PlansU, TemptationBelowThreshold) {
  // A's plan {h} reaches s_hh (U=3) and s_ht (U=0); match fails at s_ht.
  const Model& m = fixture("pennies");
  Evaluator ev = m.evaluator();
  EXPECT_TRUE(plans_u(m, ev, "A", f("F match"), 1, 0, 0).verdict);
  PlanVerdict low = plans_u(m, ev, "A", f("F match"), 0, 0, 0);
  EXPECT_FALSE(low.verdict);
  EXPECT_EQ(low.counterexample, hist(m, "s0/s_ht"));
}

class RandomIntention : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomIntention, PlansMatchOracle) {
  RandomModel r = random_model(GetParam());
  const Model& m = r.model;
  Evaluator ev = m.evaluator();
  const Universe& u = *m.universe;
  for (const auto& a : u.agents()) {
    for (const char* text : {"F p", "F (p & q)", "p | F q", "[](" "A" ") F p"}) {
      FormulaPtr alpha = f(text);
      for (HistoryId h = 0; h < u.history_count(); ++h)
        for (Time t = 0; t <= u.t_max(); ++t) {
          const InfoSet& cell = m.ensemble(a).cell_of(u.vertex_of(h, t));
          PlanState s = plan_state_at_info(m, a, a, cell);
          ASSERT_EQ(plans(m, ev, a, alpha, h, t).verdict, oracle_plans(m, a, s, *alpha, h, t)) << r.describe();
        }
    }
  }
}

TEST_P(RandomIntention, ProbabilityInUnitIntervalAndConsistentWithPlans) {
  RandomModel r = random_model(GetParam());
  const Model& m = r.model;
  Evaluator ev = m.evaluator();
  const Universe& u = *m.universe;
  for (const auto& a : u.agents())
    for (HistoryId h = 0; h < u.history_count(); ++h)
      for (Time t = 0; t <= u.t_max(); ++t) {
        double p = plan_probability(m, ev, a, f("F p"), h, t);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0 + 1e-12);
        // Full-support prior: probability 1 exactly when the plan forces.
        EXPECT_EQ(std::fabs(p - 1.0) <= 1e-9, plans(m, ev, a, f("F p"), h, t).verdict) << r.describe();
        // The lowest possible threshold makes plans_u as strict as plans.
        EXPECT_EQ(plans_u(m, ev, a, f("F p"), -100, h, t).verdict, plans(m, ev, a, f("F p"), h, t).verdict);
      }
}

TEST_P(RandomIntention, WhatIfShrinksOwnPotential) {
  RandomModel r = random_model(GetParam());
  const Model& m = r.model;
  const Universe& u = *m.universe;
  for (const auto& a : u.agents())
    for (HistoryId h = 0; h < u.history_count(); ++h) {
      HistorySet own = own_potential_at(m, a, h, 0);
      for (StrategyIndex pi = 0; pi < m.space(a).size(); ++pi)
        EXPECT_TRUE(what_if(m, a, PlanState(a, {pi}), h, 0).is_subset_of(own));
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomIntention, ::testing::Range<std::uint64_t>(1, 61));
