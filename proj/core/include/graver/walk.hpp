#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graver/binomial.hpp"
#include "graver/graph.hpp"

namespace graver {

/// One traversal of an edge. `reversed == false` walks from edge.u to edge.v.
struct Step {
  int edge = 0;
  bool reversed = false;

  friend auto operator<=>(const Step&, const Step&) = default;
  friend bool operator==(const Step&, const Step&) = default;
};

inline constexpr std::size_t kUnboundedWalk = std::numeric_limits<std::size_t>::max();

/// Closed walk in a graph. Holds its steps and the vertex each step starts
/// from; the graph is passed to every operation that needs it.
class ClosedWalk {
 public:
  /// Validates incidence and closure. `max_length` defaults to 2|E|, the
  /// longest a primitive walk can be; pass kUnboundedWalk to lift it.
  /// Throws WalkError (Empty, UnknownEdge, NotIncident, NotClosed, TooShort,
  /// TooLong).
  static ClosedWalk make(const Graph& g, std::vector<Step> steps,
                         std::optional<std::size_t> max_length = std::nullopt);

  /// Infers orientations from incidence. Only the first edge is ambiguous;
  /// both orientations are tried and the one that closes up wins.
  static ClosedWalk from_edges(const Graph& g, std::span<const int> edges,
                               std::optional<std::size_t> max_length = std::nullopt);

  /// Parses "e1,e2,e7,e8" (edge labels of g, comma separated).
  static ClosedWalk parse(const Graph& g, std::string_view text,
                          std::optional<std::size_t> max_length = std::nullopt);

  std::span<const Step> steps() const noexcept { return steps_; }
  /// vertices()[i] is where step i starts; step i ends at vertices()[i+1 mod L].
  std::span<const int> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool is_even() const noexcept { return steps_.size() % 2 == 0; }
  std::vector<int> edge_sequence() const;

  /// -w: the same walk traversed backwards.
  ClosedWalk reversed() const;
  /// Starts the walk at step k.
  ClosedWalk rotated(std::size_t k) const;
  /// Least step sequence over all rotations and reflections.
  ClosedWalk canonical() const;

  /// Comma separated edge labels.
  std::string to_string(const Graph& g) const;

  friend bool operator==(const ClosedWalk& a, const ClosedWalk& b) { return a.steps_ == b.steps_; }
  friend auto operator<=>(const ClosedWalk& a, const ClosedWalk& b) { return a.steps_ <=> b.steps_; }

 private:
  ClosedWalk(std::vector<Step> steps, std::vector<int> vertices)
      : steps_(std::move(steps)), vertices_(std::move(vertices)) {}

  std::vector<Step> steps_;
  std::vector<int> vertices_;
};

/// w+ (odd positions, counting from 1) and w- (even positions) as sorted
/// edge multisets. Throws WalkError::OddWalk.
struct SignPartition {
  std::vector<int> plus;
  std::vector<int> minus;
};
SignPartition sign_partition(const ClosedWalk& w);

/// True when no edge occurs in both classes of the sign partition.
bool is_irreducible(const ClosedWalk& w);

/// B_w = E+(w) - E-(w), oriented as the walk gives it (not canonicalized).
/// Throws WalkError (OddWalk, NotIrreducible).
Binomial binomial_of(const Graph& g, const ClosedWalk& w);

/// Number of times each edge of g is traversed.
std::vector<int> edge_multiplicities(const Graph& g, const ClosedWalk& w);
EdgeMask support_mask(const Graph& g, const ClosedWalk& w);

/// The subgraph **w**: vertices and edges the walk visits (each edge once).
Subgraph support_graph(const Graph& g, const ClosedWalk& w);
/// G_w: the induced subgraph of g on the walk's vertices.
Subgraph induced_region(const Graph& g, const ClosedWalk& w);
/// Sorted distinct vertices of the walk.
std::vector<int> walk_vertices(const ClosedWalk& w);

/// Blocks of **w**, with indices into g.
BlockDecomposition walk_blocks(const Graph& g, const ClosedWalk& w);

/// A vertex where two same-parity traversals of edges of one block meet.
struct Sink {
  int vertex;
  int block;  // index into walk_blocks(g, w)

  friend auto operator<=>(const Sink&, const Sink&) = default;
  friend bool operator==(const Sink&, const Sink&) = default;
};

/// All (vertex, block) sink pairs of an even walk, sorted. Every traversal
/// counts, so an edge walked twice contributes two occurrences.
/// Throws WalkError::OddWalk.
std::vector<Sink> sinks(const Graph& g, const ClosedWalk& w);
std::vector<Sink> sinks(const Graph& g, const ClosedWalk& w, const BlockDecomposition& wb);

}  // namespace graver
