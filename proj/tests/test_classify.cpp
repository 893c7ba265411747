#include <gtest/gtest.h>

#include <algorithm>

#include "graver/classify.hpp"
#include "graver/enumerate.hpp"
#include "graver/error.hpp"
#include "graver/verify.hpp"
#include "helpers.hpp"

using namespace graver;
using namespace graver::testing;

namespace {

const char* kDumbbellWalk = "e1,e2,e4,e5,e6,e7,e4,e3";
const char* kB9Walk = "e14,e1,e2,e3,e4,e5,e6,e7,e8,e9,e10,e3";
const char* kB11Walk = "e2,e3,e4,e5,e6,e7,e8,e5,e4,e11,e12,e1";
const char* kSinksWalk = "e3,e1,e2,e4,e8,e9,e10,e5,e6,e7";

const Chord& chord_on(const std::vector<Chord>& cs, int edge) {
  auto it = std::find_if(cs.begin(), cs.end(), [&](const Chord& c) { return c.edge == edge; });
  if (it == cs.end()) throw std::runtime_error("no such chord");
  return *it;
}

std::vector<int> sorted_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Triangles {1,2,3} and {5,6,7} joined by the path 3-4-5.
Graph triangles_with_long_path() {
  return Graph(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
}

struct Ex416 : ::testing::Test {
  static const GraverTable& table() {
    static const GraverTable t = graver_basis(builtin_fixture("ex416"));
    return t;
  }
  static const GraverRow& row(std::size_t listed_index) {
    const Graph& g = graph();
    const int i = table().find(bin(g, ex416_listed().at(listed_index - 1)));
    if (i < 0) throw std::runtime_error("listed binomial missing from the table");
    return table().rows[static_cast<std::size_t>(i)];
  }
  static const Graph& graph() {
    static const Graph g = builtin_fixture("ex416");
    return g;
  }
};

}  // namespace

TEST(PrimitiveWalk, DoubledFourCycleFails) {
  const Graph c4 = builtin_fixture("c4");
  const Verdict v = check_primitive_walk(c4, walk(c4, "e1,e2,e3,e4,e1,e2,e3,e4"));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::RepeatedEdgeNotDoubleCutEdge);
  EXPECT_FALSE(v.witness.edges.empty());
}

TEST(PrimitiveWalk, DumbbellPasses) {
  const Graph d = builtin_fixture("dumbbell");
  EXPECT_TRUE(check_primitive_walk(d, walk(d, kDumbbellWalk)));
}

TEST(PrimitiveWalk, WorkedExampleB9) {
  const Graph& g = Ex416::graph();
  const ClosedWalk w = walk(g, kB9Walk);
  EXPECT_EQ(canonical_string(binomial_of(g, w)), ex416_listed()[8]);
  EXPECT_TRUE(check_primitive_walk(g, w));
  EXPECT_EQ(shape_of_primitive(g, w), Shape::TwoOddCyclesTwoWalks);
  EXPECT_FALSE(is_circuit_walk(g, w));
  EXPECT_FALSE(is_fundamental_walk(g, w));
}

TEST(PrimitiveWalk, OddAndReducibleWalks) {
  const Graph k4 = builtin_fixture("k4");
  EXPECT_THROW(check_primitive_walk(k4, walk(k4, "e1,e4,e2")), WalkError);
  const Graph c4 = builtin_fixture("c4");
  const Verdict v = check_primitive_walk(c4, walk(c4, "e1,e1,e1,e2,e3,e4"));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::NotIrreducible);
}

TEST(SupportCheck, Examples) {
  const Graph d = builtin_fixture("dumbbell");
  const std::vector<int> bridge = edges_of({4});
  EXPECT_TRUE(primitive_support_check(d, bridge));

  const Graph squares(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {5, 8}});
  const Verdict v = primitive_support_check(squares, edges_of({5}));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::PartParity);

  EXPECT_TRUE(primitive_support_check(builtin_fixture("c4"), std::vector<int>{}));
  EXPECT_FALSE(primitive_support_check(d, std::vector<int>{}));
  EXPECT_FALSE(primitive_support_check(builtin_fixture("k4"), std::vector<int>{}));

  const Graph split(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  EXPECT_THROW(primitive_support_check(split, std::vector<int>{}), GraphError);
}

TEST(Shape, Examples) {
  const Graph c4 = builtin_fixture("c4");
  EXPECT_EQ(shape_of_primitive(c4, walk(c4, "e1,e2,e3,e4")), Shape::EvenCycle);
  const Graph b = builtin_fixture("bowtie");
  EXPECT_EQ(shape_of_primitive(b, walk(b, "e1,e2,e4,e5,e6,e3")), Shape::TwoOddCyclesSharedVertex);
  try {
    shape_of_primitive(c4, walk(c4, "e1,e2,e3,e4,e1,e2,e3,e4"));
    FAIL();
  } catch (const WalkError& e) {
    EXPECT_EQ(e.kind(), WalkError::Kind::NotPrimitive);
  }
}

TEST(StronglyPrimitive, Examples) {
  const Graph d = builtin_fixture("dumbbell");
  EXPECT_TRUE(is_strongly_primitive(d, walk(d, kDumbbellWalk)));

  // adjacent sinks 3 and 4 sit in cut-edge blocks only
  const Graph t = triangles_with_long_path();
  const ClosedWalk tw = walk(t, "e1,e2,e4,e5,e6,e7,e8,e5,e4,e3");
  EXPECT_TRUE(check_primitive_walk(t, tw));
  EXPECT_TRUE(is_strongly_primitive(t, tw));

  // the 4-cycle between the triangles holds sinks 3 and 4, joined by e4
  const Graph s = builtin_fixture("sinks");
  const ClosedWalk sw = walk(s, kSinksWalk);
  EXPECT_TRUE(check_primitive_walk(s, sw));
  const Verdict v = is_strongly_primitive(s, sw);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::AdjacentSinks);
  EXPECT_EQ(v.witness.vertices, (std::vector<int>{3, 4}));
  EXPECT_EQ(v.witness.edges, edges_of({4}));
}

TEST(Chords, Examples) {
  const Graph c6 = builtin_fixture("c6chord");
  const auto odd = classify_chords(c6, walk(c6, cycle_labels(6)));
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].edge, 6);
  EXPECT_EQ(odd[0].kind, ChordKind::Odd);

  const Graph c6e = cycle_graph(6, {{1, 4}});
  const auto even = classify_chords(c6e, walk(c6e, cycle_labels(6)));
  ASSERT_EQ(even.size(), 1u);
  EXPECT_EQ(even[0].kind, ChordKind::Even);

  const Graph dc = builtin_fixture("dumbbell-chord");
  const auto bridge = classify_chords(dc, walk(dc, kDumbbellWalk));
  ASSERT_EQ(bridge.size(), 1u);
  EXPECT_EQ(bridge[0].edge, 7);
  EXPECT_EQ(bridge[0].kind, ChordKind::Bridge);
  EXPECT_EQ(bridge[0].block, -1);
}

TEST(Chords, CrossEffectively) {
  const Graph c8 = builtin_fixture("c8-f4");
  const auto cs = classify_chords(c8, walk(c8, cycle_labels(8)));
  EXPECT_TRUE(cross_effectively(chord_on(cs, 8), chord_on(cs, 9)));

  const Graph c8b = cycle_graph(8, {{1, 5}, {3, 7}});
  const auto cs2 = classify_chords(c8b, walk(c8b, cycle_labels(8)));
  EXPECT_FALSE(cross_effectively(chord_on(cs2, 8), chord_on(cs2, 9)));

  const Graph c10 = builtin_fixture("c10-strong");
  const auto cs3 = classify_chords(c10, walk(c10, cycle_labels(10)));
  EXPECT_TRUE(cross_effectively(chord_on(cs3, 10), chord_on(cs3, 11)));

  const Graph c6e = cycle_graph(6, {{1, 4}, {2, 6}});
  const auto cs4 = classify_chords(c6e, walk(c6e, cycle_labels(6)));
  EXPECT_THROW(cross_effectively(chord_on(cs4, 6), chord_on(cs4, 7)), WalkError);
}

TEST(F4, EightCycle) {
  const Graph c8 = builtin_fixture("c8-f4");
  const ClosedWalk w = walk(c8, cycle_labels(8));
  const auto qs = f4s(c8, w);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(sorted_pair(qs[0].walk_edge, qs[0].other_walk_edge), edges_of({1, 5}));
  EXPECT_TRUE(qs[0].uses_chords(8, 9));
  const auto cs = classify_chords(c8, w);
  EXPECT_FALSE(cross_strongly_effectively(c8, w, chord_on(cs, 8), chord_on(cs, 9)));
  EXPECT_TRUE(f4_index_criterion(chord_on(cs, 8), chord_on(cs, 9), w.length()));
}

TEST(F4, TenCycleHasNone) {
  const Graph c10 = builtin_fixture("c10-strong");
  const ClosedWalk w = walk(c10, cycle_labels(10));
  EXPECT_TRUE(f4s(c10, w).empty());
  const auto cs = classify_chords(c10, w);
  EXPECT_TRUE(cross_strongly_effectively(c10, w, chord_on(cs, 10), chord_on(cs, 11)));
  EXPECT_FALSE(f4_index_criterion(chord_on(cs, 10), chord_on(cs, 11), w.length()));

  const Graph c8b = cycle_graph(8, {{1, 5}, {3, 7}});
  const ClosedWalk w8 = walk(c8b, cycle_labels(8));
  const auto cs2 = classify_chords(c8b, w8);
  EXPECT_FALSE(cross_strongly_effectively(c8b, w8, chord_on(cs2, 8), chord_on(cs2, 9)));
}

TEST_F(Ex416, B11HasTheFourCycleF4) {
  const Graph& g = graph();
  const ClosedWalk w = walk(g, kB11Walk);
  EXPECT_EQ(canonical_string(binomial_of(g, w)), ex416_listed()[10]);
  const auto qs = f4s(g, w);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(sorted_pair(qs[0].walk_edge, qs[0].other_walk_edge), edges_of({2, 12}));
  EXPECT_TRUE(qs[0].uses_chords(12, 13));

  const ClosedWalk flipped = f4_flip(g, w, qs[0]);
  EXPECT_TRUE(check_primitive_walk(g, flipped));
  EXPECT_EQ(canonical_string(binomial_of(g, flipped)), ex416_listed()[13]);
}

TEST(F4, ChordCrossesF4) {
  const Graph g = cycle_graph(8, {{1, 5}, {2, 6}, {3, 8}, {2, 4}});
  const ClosedWalk w = walk(g, cycle_labels(8));
  const auto qs = f4s(g, w);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(qs[0].side_b, (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(qs[0].side_a, (std::vector<int>{1, 6, 7, 8}));
  const auto cs = classify_chords(g, w);
  EXPECT_EQ(chord_on(cs, 10).kind, ChordKind::Even);
  EXPECT_TRUE(chord_crosses_f4(chord_on(cs, 10), qs[0]));
  EXPECT_FALSE(chord_crosses_f4(chord_on(cs, 8), qs[0]));
  EXPECT_FALSE(chord_crosses_f4(chord_on(cs, 11), qs[0]));
}

TEST(F4, FlipEightCycle) {
  const Graph c8 = builtin_fixture("c8-f4");
  const ClosedWalk w = walk(c8, cycle_labels(8));
  const F4 q = f4s(c8, w).at(0);
  const ClosedWalk flipped = f4_flip(c8, w, q);
  EXPECT_EQ(flipped.canonical(), walk(c8, "e6,e7,e8,e9,e4,e3,e2,e10").canonical());

  const auto back = f4s(c8, flipped);
  auto it = std::find_if(back.begin(), back.end(), [](const F4& b) { return b.uses_chords(0, 4); });
  ASSERT_NE(it, back.end());
  EXPECT_EQ(f4_flip(c8, flipped, *it).canonical(), w.canonical());

  F4 bogus = q;
  bogus.chord = 2;
  EXPECT_THROW(f4_flip(c8, w, bogus), std::invalid_argument);
}

TEST(F4, Classes) {
  const Graph c4 = builtin_fixture("c4");
  const ClosedWalk w4 = walk(c4, "e1,e2,e3,e4");
  EXPECT_EQ(f4_class(c4, w4), std::vector<ClosedWalk>{w4.canonical()});

  const Graph c8 = builtin_fixture("c8-f4");
  const ClosedWalk w = walk(c8, cycle_labels(8));
  const auto cls = f4_class(c8, w);
  EXPECT_EQ(cls.size(), 2u);
  for (const ClosedWalk& m : cls) EXPECT_EQ(walk_vertices(m), walk_vertices(w));
  EXPECT_THROW(f4_class(c8, w, 1), CapExceeded);
}

TEST(Circuit, Examples) {
  const Graph c4 = builtin_fixture("c4");
  EXPECT_TRUE(is_circuit_walk(c4, walk(c4, "e1,e2,e3,e4")));
  EXPECT_EQ(circuit_kind(c4, walk(c4, "e1,e2,e3,e4")), CircuitKind::EvenCycle);
  const Graph d = builtin_fixture("dumbbell");
  EXPECT_EQ(circuit_kind(d, walk(d, kDumbbellWalk)), CircuitKind::OddCyclesJoinedByPath);
  const Graph b = builtin_fixture("bowtie");
  EXPECT_EQ(circuit_kind(b, walk(b, "e1,e2,e4,e5,e6,e3")), CircuitKind::OddCyclesSharedVertex);
  const Graph s = builtin_fixture("sinks");
  EXPECT_FALSE(is_circuit_walk(s, walk(s, kSinksWalk)));
}

TEST(Minimal, Examples) {
  const Graph c6 = builtin_fixture("c6chord");
  EXPECT_TRUE(is_minimal_walk(c6, walk(c6, cycle_labels(6))));

  const Graph c6e = cycle_graph(6, {{1, 4}});
  const Verdict v = is_minimal_walk(c6e, walk(c6e, cycle_labels(6)));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::EvenChord);
  EXPECT_EQ(v.witness.edges, edges_of({7}));

  const Graph c10 = builtin_fixture("c10-strong");
  const Verdict sv = is_minimal_walk(c10, walk(c10, cycle_labels(10)));
  EXPECT_FALSE(sv);
  EXPECT_EQ(sv.witness.violation, Violation::StronglyEffectiveCrossing);

  const Graph c4 = builtin_fixture("c4");
  EXPECT_FALSE(is_minimal_walk(c4, walk(c4, "e1,e2,e3,e4,e1,e2,e3,e4")));
}

TEST(Indispensable, Examples) {
  const Graph c8 = builtin_fixture("c8-f4");
  const ClosedWalk w = walk(c8, cycle_labels(8));
  EXPECT_TRUE(is_minimal_walk(c8, w));
  const Verdict v = is_indispensable_walk(c8, w);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::EffectiveCrossing);
  const Graph c4 = builtin_fixture("c4");
  EXPECT_TRUE(is_indispensable_walk(c4, walk(c4, "e1,e2,e3,e4")));
}

TEST(Fundamental, Examples) {
  const Graph c6 = builtin_fixture("c6chord");
  EXPECT_TRUE(is_fundamental_walk(c6, walk(c6, cycle_labels(6))));
  const Graph dc = builtin_fixture("dumbbell-chord");
  const Verdict v = is_fundamental_walk(dc, walk(dc, kDumbbellWalk));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness.violation, Violation::ChordOnNonCycle);
  const Graph c8 = builtin_fixture("c8-f4");
  EXPECT_EQ(is_fundamental_walk(c8, walk(c8, cycle_labels(8))).witness.violation, Violation::SeveralOddChords);
}

TEST_F(Ex416, PublishedFlagsOfTheListedBinomials) {
  for (std::size_t i = 1; i <= 22; ++i) {
    const ClassificationReport& r = row(i).report;
    SCOPED_TRACE("B" + std::to_string(i));
    EXPECT_TRUE(r.is_primitive);
    EXPECT_EQ(r.is_fundamental, i <= 8);
    EXPECT_EQ(r.is_indispensable, i <= 10);
    EXPECT_EQ(r.is_minimal, i <= 16);
    const bool non_circuit = i == 9 || i == 10 || i == 13 || i == 16 || i == 19 || i == 22;
    EXPECT_EQ(r.is_circuit, !non_circuit);
  }
}

TEST_F(Ex416, BridgesBlockMinimality) {
  for (std::size_t i = 17; i <= 22; ++i) {
    const ClassificationReport& r = row(i).report;
    auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(),
                           [](const FlagWitness& w) { return w.flag == "minimal"; });
    ASSERT_NE(it, r.witnesses.end());
    EXPECT_EQ(it->witness.violation, Violation::BridgeChord);
    EXPECT_EQ(it->witness.edges, edges_of({i <= 19 ? 3 : 11})) << "B" << i;
  }
}

TEST(Classify, OddWalkGetsNoFlags) {
  const Graph k4 = builtin_fixture("k4");
  const ClassificationReport r = classify_walk(k4, walk(k4, "e1,e4,e2"));
  EXPECT_FALSE(r.is_primitive || r.is_circuit || r.is_minimal || r.is_fundamental);
  EXPECT_EQ(r.shape, Shape::NotPrimitive);
  EXPECT_EQ(r.witnesses.size(), 6u);
  EXPECT_EQ(r.witnesses[0].witness.violation, Violation::OddWalk);
}

TEST(Classify, ImplicationViolationText) {
  ClassificationReport r;
  r.is_primitive = r.is_strongly_primitive = r.is_indispensable = true;
  r.shape = Shape::EvenCycle;
  EXPECT_EQ(implication_violation(r), "indispensable but not minimal");
  r.is_minimal = true;
  EXPECT_EQ(implication_violation(r), "");
}

// The criteria behind each flag hold, recomputed through the standalone
// helpers, on every primitive binomial of every graph with up to 8 edges.
TEST(Classify, FlagConditionsOnSmallGraphs) {
  for (int m = 4; m <= 8; ++m)
    for (const Graph& g : connected_graphs(m))
      for (const GraverRow& row : graver_basis(g).rows) {
        const ClosedWalk& w = row.walk;
        const ClassificationReport& r = row.report;
        SCOPED_TRACE(to_string(row.binomial));
        EXPECT_TRUE(check_primitive_walk(g, w));
        EXPECT_NE(shape_of_primitive(g, w), Shape::NotPrimitive);
        EXPECT_TRUE(implication_violation(r).empty());

        std::vector<int> doubled;
        const auto mult = edge_multiplicities(g, w);
        for (std::size_t e = 0; e < mult.size(); ++e)
          if (mult[e] == 2) doubled.push_back(static_cast<int>(e));
        EXPECT_TRUE(primitive_support_check(g, support_mask(g, w), doubled));

        const auto chords = classify_chords(g, w);
        const auto quads = f4s(g, w);
        if (r.is_minimal) {
          EXPECT_TRUE(is_strongly_primitive(g, w));
          for (const Chord& c : chords) {
            EXPECT_EQ(c.kind, ChordKind::Odd);
            for (const F4& q : quads) EXPECT_FALSE(chord_crosses_f4(c, q));
          }
          for (const Chord& a : chords)
            for (const Chord& b : chords)
              if (a.edge < b.edge) EXPECT_FALSE(cross_strongly_effectively(g, w, a, b));
        }
        if (r.is_indispensable)
          for (const Chord& a : chords)
            for (const Chord& b : chords)
              if (a.edge < b.edge) EXPECT_FALSE(cross_effectively(a, b));
        for (const F4& q : quads) {
          const ClosedWalk flipped = f4_flip(g, w, q);
          EXPECT_EQ(is_minimal_walk(g, flipped).holds, r.is_minimal);
          EXPECT_EQ(induced_region(g, flipped).graph, induced_region(g, w).graph);
        }
      }
}
