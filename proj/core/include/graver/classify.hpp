#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graver/graph.hpp"
#include "graver/walk.hpp"

namespace graver {

/// Shape of a primitive walk: an even cycle, two odd cycles sharing one
/// vertex, or two vertex-disjoint odd cycles linked by two walks.
enum class Shape { EvenCycle, TwoOddCyclesSharedVertex, TwoOddCyclesTwoWalks, NotPrimitive };

/// Circuit shapes: even cycle, two odd cycles meeting in one vertex, two
/// vertex-disjoint odd cycles joined by a path.
enum class CircuitKind { None, EvenCycle, OddCyclesSharedVertex, OddCyclesJoinedByPath };

enum class Violation {
  None,
  OddWalk,
  NotIrreducible,
  BlockNotCycleOrCutEdge,
  RepeatedEdgeNotDoubleCutEdge,
  CutVertexBlockCount,
  CutVertexNotSink,
  DoubledNotCutEdges,
  PartParity,
  NoEvenClosedWalk,
  AdjacentSinks,
  BridgeChord,
  EvenChord,
  StronglyEffectiveCrossing,
  ChordCrossesF4,
  EffectiveCrossing,
  NotCircuit,
  ChordOnNonCycle,
  SeveralOddChords,
};

/// The first violated condition of a failed check, with the offending items.
struct Witness {
  Violation violation = Violation::None;
  std::vector<int> edges;
  std::vector<int> vertices;
  std::vector<int> blocks;
};

struct Verdict {
  bool holds = true;
  Witness witness;

  explicit operator bool() const noexcept { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, std::move(w)}; }
};

std::string_view to_string(Shape s);
std::string_view to_string(CircuitKind k);
std::string_view to_string(Violation v);
/// One-sentence statement of the condition a violation breaks.
std::string_view describe(Violation v);

/// Primitive-walk criterion: every block of **w** is a cycle or a cut edge;
/// every repeated edge is walked exactly twice and is a cut edge; every cut
/// vertex lies in exactly two blocks and is a sink of both. A reducible
/// sign partition fails with NotIrreducible. Throws WalkError::OddWalk.
Verdict check_primitive_walk(const Graph& g, const ClosedWalk& w);

/// Whether a subgraph, with the given doubled edges, is the graph of a
/// primitive walk: blocks are cycles or cut edges, doubled edges are exactly
/// the cut edges, each cut vertex lies in exactly two blocks and both sides
/// of it carry an odd number of cycle edges. Without cut vertices the graph
/// must be a single even cycle. Throws GraphError when the subgraph is empty
/// or disconnected.
Verdict primitive_support_check(const Graph& w_graph, std::span<const int> doubled);
Verdict primitive_support_check(const Graph& g, const EdgeMask& support, std::span<const int> doubled);

/// Throws WalkError::NotPrimitive.
Shape shape_of_primitive(const Graph& g, const ClosedWalk& w);

/// Primitive, and no cyclic block holds two sinks joined by a block edge.
/// Throws WalkError::NotPrimitive.
Verdict is_strongly_primitive(const Graph& g, const ClosedWalk& w);

enum class ChordKind { Bridge, Even, Odd };
std::string_view to_string(ChordKind k);

/// Edge of G_w that is not an edge of **w**.
struct Chord {
  int edge = -1;
  int u = 0;
  int v = 0;
  std::vector<int> u_positions;  // indices into w.vertices()
  std::vector<int> v_positions;
  ChordKind kind = ChordKind::Bridge;
  int block = -1;   // block of **w** holding both endpoints; -1 for bridges
  int first = -1;   // break positions along the walk, first < second; -1 for bridges
  int second = -1;
};

/// All chords of a primitive walk, by edge index. A chord is a bridge when
/// its endpoints lie in two different blocks; otherwise it breaks the walk
/// into two walks that are both odd (Odd) or both even (Even).
/// Throws WalkError::NotPrimitive.
std::vector<Chord> classify_chords(const Graph& g, const ClosedWalk& w);

/// Odd chords at positions (s, j) and (s', j') cross effectively when they
/// interleave along the walk and s' - s is odd. Throws
/// WalkError::NotOddChord for bridges or even chords.
bool cross_effectively(const Chord& f, const Chord& f2);

/// Position test for two effectively crossing chords to close a 4-cycle
/// with walk edges: the endpoints pair up at cyclically adjacent positions.
bool f4_index_criterion(const Chord& f, const Chord& f2, std::size_t walk_length);

/// 4-cycle (e, f, e', f') of two same-class walk edges and two effectively
/// crossing odd chords. Removing e and e' splits the walk into two odd
/// walks; side_a and side_b are their vertex sets.
struct F4 {
  int walk_edge = -1;
  int chord = -1;
  int other_walk_edge = -1;
  int other_chord = -1;
  std::vector<int> side_a;
  std::vector<int> side_b;

  bool uses_chords(int f, int f2) const {
    return (chord == f && other_chord == f2) || (chord == f2 && other_chord == f);
  }
};

/// Throws WalkError::NotPrimitive.
std::vector<F4> f4s(const Graph& g, const ClosedWalk& w);

/// Cross effectively and are not the two chords of an F4 of w.
bool cross_strongly_effectively(const Graph& g, const ClosedWalk& w, const Chord& f, const Chord& f2);

/// f has one endpoint on each side of q and is neither of q's chords.
bool chord_crosses_f4(const Chord& f, const F4& q);

/// Swaps the F4's walk edges for its chords: (w1, e, w2, e') becomes
/// (w1, f, -w2, f'). Throws std::invalid_argument when q is not an F4 of w.
ClosedWalk f4_flip(const Graph& g, const ClosedWalk& w, const F4& q);

inline constexpr std::size_t kDefaultF4ClassCap = 100'000;

/// Canonical forms of every walk reachable from w by F4 flips, sorted.
/// Throws CapExceeded past `cap` walks.
std::vector<ClosedWalk> f4_class(const Graph& g, const ClosedWalk& w, std::size_t cap = kDefaultF4ClassCap);

CircuitKind circuit_kind(const Graph& g, const ClosedWalk& w);
bool is_circuit_walk(const Graph& g, const ClosedWalk& w);

/// Strongly primitive, every chord odd, no two chords crossing strongly
/// effectively, and no odd chord crossing an F4.
Verdict is_minimal_walk(const Graph& g, const ClosedWalk& w);
/// Strongly primitive, every chord odd, no two chords crossing effectively.
Verdict is_indispensable_walk(const Graph& g, const ClosedWalk& w);
/// A circuit without chords, or an even cycle whose only chord is odd.
Verdict is_fundamental_walk(const Graph& g, const ClosedWalk& w);

struct FlagWitness {
  std::string flag;
  Witness witness;
};

struct ClassificationReport {
  bool is_primitive = false;
  bool is_strongly_primitive = false;
  bool is_circuit = false;
  bool is_minimal = false;
  bool is_indispensable = false;
  bool is_fundamental = false;
  Shape shape = Shape::NotPrimitive;
  CircuitKind circuit = CircuitKind::None;
  std::vector<FlagWitness> witnesses;  // one per false flag
  std::vector<Sink> sinks;
  std::vector<Chord> chords;
  std::vector<F4> f4s;
};

/// Every flag for one walk; odd or reducible walks get all flags false.
ClassificationReport classify_walk(const Graph& g, const ClosedWalk& w);

/// Implication chain between the flags; returns the first broken link or
/// an empty string.
std::string implication_violation(const ClassificationReport& r);

}  // namespace graver
