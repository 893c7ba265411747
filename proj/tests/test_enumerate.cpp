#include <gtest/gtest.h>

#include <set>

#include "graver/enumerate.hpp"
#include "graver/error.hpp"
#include "graver/oracle.hpp"
#include "graver/verify.hpp"
#include "helpers.hpp"

using namespace graver;
using namespace graver::testing;

namespace {

std::vector<int> mask_edges(const EdgeMask& m) {
  std::vector<int> out;
  for (std::size_t e = 0; e < m.size(); ++e)
    if (m[e]) out.push_back(static_cast<int>(e));
  return out;
}

std::set<std::string> table_strings(const GraverTable& t) {
  std::set<std::string> out;
  for (const GraverRow& r : t.rows) out.insert(to_string(r.binomial));
  return out;
}

}  // namespace

TEST(Supports, FourCycle) {
  const auto s = primitive_supports(builtin_fixture("c4"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(mask_edges(s[0].edges), edges_of({1, 2, 3, 4}));
  EXPECT_TRUE(s[0].doubled.empty());
}

TEST(Supports, Dumbbell) {
  const auto s = primitive_supports(builtin_fixture("dumbbell"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(mask_edges(s[0].edges), edges_of({1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(s[0].doubled, edges_of({4}));
}

TEST(Supports, CapsAreReported) {
  EnumerationLimits lim;
  lim.max_supports = 5;
  EXPECT_THROW(primitive_supports(builtin_fixture("ex416"), lim), CapExceeded);
  lim = {};
  lim.time_budget = std::chrono::milliseconds(0);
  EXPECT_THROW(graver_basis(builtin_fixture("ex416"), lim), CapExceeded);
}

TEST(Realize, Examples) {
  const Graph c4 = builtin_fixture("c4");
  EXPECT_EQ(realize_walk(c4, primitive_supports(c4)[0]).canonical(), walk(c4, "e1,e2,e3,e4").canonical());

  const Graph d = builtin_fixture("dumbbell");
  EXPECT_EQ(realize_walk(d, primitive_supports(d)[0]).canonical(),
            walk(d, "e1,e2,e4,e5,e6,e7,e4,e3").canonical());

  const Graph b = builtin_fixture("bowtie");
  const ClosedWalk bw = realize_walk(b, primitive_supports(b)[0]);
  EXPECT_EQ(bw.length(), 6u);
  EXPECT_TRUE(check_primitive_walk(b, bw));
}

TEST(Realize, EveryRootGivesAPrimitiveWalkOnTheSupport) {
  for (const std::string& name : fixture_names()) {
    const Graph g = builtin_fixture(name);
    for (const PrimitiveSupport& s : primitive_supports(g))
      for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        if (!s.blocks.is_cycle(b)) continue;
        const ClosedWalk w = realize_walk(g, s, b);
        EXPECT_TRUE(check_primitive_walk(g, w)) << name;
        EXPECT_EQ(support_mask(g, w), s.edges);
        const auto mult = edge_multiplicities(g, w);
        for (int e : s.doubled) EXPECT_EQ(mult[static_cast<std::size_t>(e)], 2);
      }
  }
}

TEST(GraverBasis, SmallFixtures) {
  const GraverTable c4 = graver_basis(builtin_fixture("c4"));
  ASSERT_EQ(c4.rows.size(), 1u);
  EXPECT_EQ(to_string(c4.rows[0].binomial), "e1*e3 - e2*e4");

  const GraverTable k4 = graver_basis(builtin_fixture("k4"));
  EXPECT_EQ(table_strings(k4),
            (std::set<std::string>{"e1*e6 - e2*e5", "e1*e6 - e3*e4", "e2*e5 - e3*e4"}));
  EXPECT_EQ(k4.find(parse_binomial("e2*e5 - e1*e6", 6)), 0);
  EXPECT_EQ(k4.find(parse_binomial("e1*e2 - e5*e6", 6)), -1);
}

TEST(GraverBasis, RowsAreSortedByDegreeThenString) {
  const GraverTable t = graver_basis(builtin_fixture("ex416"));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    const auto key = [&](std::size_t k) {
      return std::make_pair(t.rows[k].binomial.total_degree(), to_string(t.rows[k].binomial));
    };
    EXPECT_LT(key(i - 1), key(i));
  }
}

TEST(GraverBasis, WorkedExampleMatchesTheOracle) {
  const Graph g = builtin_fixture("ex416");
  const GraverTable t = graver_basis(g);
  EXPECT_EQ(table_strings(t), strings(graver_oracle_checked(g)));
  EXPECT_EQ(t.rows.size(), 28u);
  for (const std::string& s : ex416_listed()) EXPECT_GE(t.find(bin(g, s)), 0) << s;
  EXPECT_TRUE(t.findings.empty());
}

TEST(ClassifyAll, Summaries) {
  const TableSummary c4 = classify_all(builtin_fixture("c4")).summary;
  EXPECT_EQ(c4.graver, 1u);
  EXPECT_EQ(c4.circuits, 1u);
  EXPECT_EQ(c4.minimal, 1u);
  EXPECT_EQ(c4.indispensable, 1u);
  EXPECT_EQ(c4.fundamental, 1u);

  const TableSummary k4 = classify_all(builtin_fixture("k4")).summary;
  EXPECT_EQ(k4.graver, 3u);
  EXPECT_EQ(k4.minimal, 3u);
  EXPECT_EQ(k4.indispensable, 0u);
  EXPECT_EQ(k4.fundamental, 0u);
  EXPECT_EQ(k4.circuits, 3u);

  const TableSummary ex = classify_all(builtin_fixture("ex416")).summary;
  EXPECT_EQ(ex.fundamental, 8u);
  EXPECT_EQ(ex.indispensable, 10u);
  EXPECT_EQ(ex.minimal, 16u);
}

TEST(Circuits, Examples) {
  EXPECT_EQ(circuits(builtin_fixture("c4")).size(), 1u);
  const Graph b = builtin_fixture("bowtie");
  const auto bc = circuits(b);
  ASSERT_EQ(bc.size(), 1u);
  EXPECT_EQ(to_string(bc[0]), "e1*e4*e6 - e2*e3*e5");
  const auto walks = circuit_walks(b);
  ASSERT_EQ(walks.size(), 1u);
  EXPECT_EQ(binomial_of(b, walks[0]).canonical(), bc[0]);
}

TEST(Circuits, WorkedExampleCircuitsAreTheFlaggedRows) {
  const Graph g = builtin_fixture("ex416");
  const GraverTable t = graver_basis(g);
  const auto cs = circuits(g);
  std::set<std::string> flagged;
  for (const GraverRow& r : t.rows)
    if (r.report.is_circuit) flagged.insert(to_string(r.binomial));
  EXPECT_EQ(strings(cs), flagged);
  for (const Binomial& c : cs) EXPECT_TRUE(circuit_oracle(g, c)) << to_string(c);
  // the listed non-circuits stay out
  for (std::size_t i : {9, 10, 13, 16, 19, 22}) EXPECT_EQ(flagged.count(ex416_listed()[i - 1]), 0u);
}

TEST(Enumeration, MatchesOracleOnAllGraphsUpToSevenEdges) {
  for (int m = 1; m <= 7; ++m)
    for (const Graph& g : connected_graphs(m)) {
      const GraverTable t = graver_basis(g);
      EXPECT_EQ(table_strings(t), strings(graver_oracle(g, 3)));
      const auto cs = strings(circuits(g));
      for (const std::string& c : cs) EXPECT_TRUE(table_strings(t).count(c)) << c;
      for (const GraverRow& r : t.rows) {
        EXPECT_TRUE(check_primitive_walk(g, r.walk));
        EXPECT_EQ(binomial_of(g, r.walk).canonical(), r.binomial);
        // every member of the F4 class realizes a binomial already in the table
        for (const ClosedWalk& member : f4_class(g, r.walk)) EXPECT_GE(t.find(binomial_of(g, member)), 0);
      }
    }
}
