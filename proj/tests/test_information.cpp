#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_model.hpp"
#include "stratos/errors.hpp"
#include "stratos/information.hpp"

using namespace stratos;
using namespace stratos::testing;

namespace {

std::vector<VertexId> cell_members(const Model& m, const std::string& agent, const std::string& cell) {
  const InfoEnsemble& e = m.ensemble(agent);
  return e.cell(e.find_cell(cell).value()).members();
}

}  // namespace

TEST(InfoSet, RejectsEmpty) {
  const Model& m = fixture("pennies");
  EXPECT_THROW(InfoSet(*m.universe, {}), IllFormedEnsemble);
}

TEST(InfoSet, RejectsTwoCutsOfOneHistory) {
  const Model& m = fixture("pennies_sequential");
  EXPECT_THROW(InfoSet(*m.universe, {vert(m, "s0"), vert(m, "s0/s_h")}), IllFormedEnsemble);
}

TEST(InfoStar, UnitSetOfFullHistory) {
  const Model& m = fixture("pennies");
  InfoSet unit(*m.universe, {m.universe->vertex_of(2, 1)});
  EXPECT_EQ(i_star(*m.universe, unit), (HistorySet{2}));
}

TEST(InfoStar, CardCellCoversBothDeals) {
  const Model& m = fixture("card");
  InfoSet i1(*m.universe, cell_members(m, "Mary", "I1"));
  EXPECT_EQ(i1.size(), 2u);
  EXPECT_EQ(i_star(*m.universe, i1), m.universe->all_histories());
}

TEST(InfoStar, ThreeOfFourPenniesVertices) {
  const Model& m = fixture("pennies");
  const Universe& u = *m.universe;
  InfoSet three(u, {u.vertex_of(0, 1), u.vertex_of(1, 1), u.vertex_of(3, 1)});
  EXPECT_EQ(i_star(u, three), (HistorySet{0, 1, 3}));
}

TEST(CellOf, PerfectIsUnit) {
  const Model& m = fixture("pennies");
  for (VertexId v = 0; v < m.universe->vertex_count(); ++v) {
    const InfoSet& c = m.ensemble("A").cell_of(v);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.members().front(), v);
  }
}

TEST(CellOf, BlindPenniesLumpsBMoves) {
  const Model& m = fixture("pennies_blind");
  const InfoSet& c = m.ensemble("A").cell_of(vert(m, "s0/s_h"));
  EXPECT_EQ(c.members(), (std::vector<VertexId>{vert(m, "s0/s_h"), vert(m, "s0/s_t")}));
}

TEST(CellOf, CardDealVertexIsI1) {
  const Model& m = fixture("card");
  const InfoEnsemble& e = m.ensemble("Mary");
  EXPECT_EQ(e.cell_name(e.cell_index(vert(m, "s1"))), "I1");
}

TEST(InfoEnsemble, MissingVertexIsPartitionViolation) {
  const Model& m = fixture("pennies");
  std::vector<InfoSet> cells{InfoSet(*m.universe, {0})};
  EXPECT_THROW(InfoEnsemble(m.universe, "A", cells), PartitionViolation);
}

TEST(InfoEnsemble, OverlapIsPartitionViolation) {
  const Model& m = fixture("pennies");
  const Universe& u = *m.universe;
  std::vector<InfoSet> cells;
  for (VertexId v = 0; v < u.vertex_count(); ++v) cells.emplace_back(u, std::vector<VertexId>{v});
  cells.emplace_back(u, std::vector<VertexId>{1});
  try {
    InfoEnsemble(m.universe, "A", cells);
    FAIL() << "expected a partition violation";
  } catch (const PartitionViolation& e) {
    EXPECT_NE(std::string(e.what()).find(u.vertex_name(1)), std::string::npos);
  }
}

TEST(Shape, StraightAndSlanted) {
  const Model& m = fixture("pennies_sequential");
  const Universe& u = *m.universe;
  InfoSet straight(u, {vert(m, "s0/s_h/s_hh"), vert(m, "s0/s_t/s_tt")});
  InfoSet slanted(u, {vert(m, "s0/s_h"), vert(m, "s0/s_t/s_tt")});
  EXPECT_TRUE(is_straight(u, straight));
  EXPECT_FALSE(is_straight(u, slanted));
  EXPECT_TRUE(is_thin(u, straight));
  EXPECT_TRUE(is_thin(u, slanted));
}

TEST(Ndi, PerfectHasNdi) {
  for (const char* name : {"pennies", "pennies_sequential", "boris"}) {
    const Model& m = fixture(name);
    for (const auto& [a, e] : m.ensembles) {
      EXPECT_TRUE(has_perfect_info(*e)) << name << " " << a;
      EXPECT_TRUE(has_ndi(*e)) << name << " " << a;
    }
  }
}

TEST(Ndi, ForgettingFailsWithWitness) {
  const Model& m = fixture("forgetting");
  const InfoEnsemble& e = m.ensemble("A");
  EXPECT_FALSE(has_ndi(e));
  auto w = find_ndi_violation(e);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->earlier, 1);
  EXPECT_EQ(w->later, 2);
  EXPECT_TRUE(e.possible(w->history, w->later).contains(w->extra));
  EXPECT_FALSE(e.possible(w->history, w->earlier).contains(w->extra));
}

TEST(Ndi, SingleHistoryUniverse) {
  std::vector<WorldState> states{{"s", {}}};
  auto u = std::make_shared<const Universe>(states, std::vector<std::string>{}, std::vector<std::string>{"A"}, 2,
                                            std::vector<std::vector<StateId>>{{0, 0, 0}});
  InfoEnsemble e = InfoEnsemble::perfect(u, "A");
  EXPECT_TRUE(has_ndi(e));
  EXPECT_TRUE(has_perfect_info(e));
}

TEST(PerfectInfo, CardIsImperfect) {
  EXPECT_FALSE(has_perfect_info(fixture("card").ensemble("Mary")));
  EXPECT_TRUE(has_ndi(fixture("card").ensemble("Mary")));
}

TEST(PerfectInfo, OneVertexUniverse) {
  std::vector<WorldState> states{{"s", {}}};
  auto u = std::make_shared<const Universe>(states, std::vector<std::string>{}, std::vector<std::string>{"A"}, 0,
                                            std::vector<std::vector<StateId>>{{0}});
  EXPECT_TRUE(has_perfect_info(InfoEnsemble::perfect(u, "A")));
}

TEST(InfoRelation, CardDealRelatesBothHistories) {
  const Model& m = fixture("card");
  InfoRelationSlice s = info_relation(m.ensemble("Mary"), 0);
  HistoryId h = hist(m, "s1/s1_call");
  for (HistoryId k = 0; k < m.universe->history_count(); ++k) EXPECT_TRUE(s.related(h, k));
}

TEST(InfoRelation, PerfectIsBackwardsIdentity) {
  const Model& m = fixture("pennies_sequential");
  const Universe& u = *m.universe;
  for (Time t = 0; t <= u.t_max(); ++t) {
    InfoRelationSlice s = info_relation(m.ensemble("A"), t);
    for (HistoryId h = 0; h < u.history_count(); ++h)
      for (HistoryId k = 0; k < u.history_count(); ++k)
        EXPECT_EQ(s.related(h, k), backwards_identical(u, h, k, t));
  }
}

TEST(RelationConditions, Fixtures) {
  EXPECT_TRUE(relation_backwards_identical(fixture("pennies").ensemble("A")));
  EXPECT_TRUE(relation_backwards_consistent(fixture("pennies").ensemble("A")));
  EXPECT_TRUE(relation_backwards_consistent(fixture("card").ensemble("Mary")));
  EXPECT_FALSE(relation_backwards_identical(fixture("card").ensemble("Mary")));
  EXPECT_FALSE(relation_backwards_consistent(fixture("forgetting").ensemble("A")));
}

TEST(Split, KeepsPartition) {
  const Model& m = fixture("card");
  const InfoEnsemble& e = m.ensemble("Mary");
  std::size_t c = e.find_cell("I1").value();
  InfoEnsemble s = e.split(c, {vert(m, "s2")});
  EXPECT_EQ(s.cell_count(), e.cell_count() + 1);
  EXPECT_EQ(s.cell_of(vert(m, "s2")).size(), 1u);
  EXPECT_EQ(s.cell_of(vert(m, "s1")).size(), 1u);
  // Nothing to split: unchanged.
  EXPECT_EQ(e.split(c, {}).cell_count(), e.cell_count());
}

class RandomEnsemble : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomEnsemble, RelationMatchesOracleAndIsReflexive) {
  RandomModel r = random_model(GetParam());
  const Model& m = r.model;
  const Universe& u = *m.universe;
  for (const auto& [a, e] : m.ensembles) {
    for (Time t = 0; t <= u.t_max(); ++t) {
      InfoRelationSlice s = info_relation(*e, t);
      for (HistoryId h = 0; h < u.history_count(); ++h) {
        EXPECT_TRUE(s.related(h, h));
        for (HistoryId k = 0; k < u.history_count(); ++k)
          ASSERT_EQ(s.related(h, k), oracle_related(m, a, h, k, t)) << r.describe();
      }
    }
  }
}

TEST_P(RandomEnsemble, ConditionImplications) {
  RandomModel r = random_model(GetParam());
  for (const auto& [a, e] : r.model.ensembles) {
    bool pi = has_perfect_info(*e), ndi = has_ndi(*e);
    bool identical = relation_backwards_identical(*e), consistent = relation_backwards_consistent(*e);
    if (pi) EXPECT_TRUE(ndi) << r.describe();
    if (ndi) EXPECT_TRUE(consistent) << r.describe();
    if (pi) EXPECT_TRUE(identical) << r.describe();
    if (identical) EXPECT_TRUE(consistent) << r.describe();
  }
}

TEST_P(RandomEnsemble, CellsAreThin) {
  RandomModel r = random_model(GetParam());
  for (const auto& [a, e] : r.model.ensembles)
    for (std::size_t c = 0; c < e->cell_count(); ++c) EXPECT_TRUE(is_thin(*r.model.universe, e->cell(c)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomEnsemble, ::testing::Range<std::uint64_t>(1, 81));
