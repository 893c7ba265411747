#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graver {

/// Undirected edge between two 1-based vertex ids.
struct Edge {
  int u = 0;
  int v = 0;

  int other(int x) const noexcept { return x == u ? v : u; }
  bool touches(int x) const noexcept { return x == u || x == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int edge;
  int neighbor;
};

/// Edge subset of a graph, indexed by edge position.
using EdgeMask = std::vector<bool>;

/// Finite simple undirected graph. Vertices are 1..vertex_count(); edges are
/// identified by position (index 0 is labelled "e1").
class Graph {
 public:
  /// Throws GraphError on loops, repeated edges, endpoints out of range,
  /// non-positive vertex count, or duplicate labels.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  std::optional<int> find_edge(int u, int v) const;

  /// Display label; defaults to "e<k>" for position k-1.
  const std::string& label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
  std::optional<int> edge_by_label(std::string_view label) const;
  bool has_default_labels() const;

  /// True when every vertex is reachable from vertex 1 (isolated vertices
  /// make a graph disconnected).
  bool is_connected() const;

  EdgeMask full_mask() const { return EdgeMask(edges_.size(), true); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Incidence>> adj_;  // index 0 unused
};

std::string default_edge_label(int e);

/// A graph carved out of a parent graph, with the maps back to the parent.
/// New vertex k+1 is parent vertex vertices[k]; new edge i is parent edge
/// edges[i]. Both maps are increasing.
struct Subgraph {
  Graph graph;
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// Induced subgraph on a vertex set (duplicates ignored).
/// Throws GraphError for vertex ids out of range or an empty set.
Subgraph induced_subgraph(const Graph& g, std::span<const int> vertex_set);

/// Subgraph formed by the masked edges and their endpoints.
Subgraph edge_subgraph(const Graph& g, const EdgeMask& mask);

/// Maximal biconnected pieces of a graph. Isolated vertices belong to no
/// block. Blocks are ordered by their smallest edge index.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;          // sorted edge indices
  std::vector<std::vector<int>> block_vertices;  // sorted vertex ids
  std::vector<int> cut_vertices;                 // sorted
  std::vector<int> cut_edges;                    // sorted
  std::vector<std::vector<int>> vertex_blocks;   // by vertex id; index 0 unused
  std::vector<int> edge_block;                   // by edge index; -1 when unmasked

  std::size_t size() const noexcept { return blocks.size(); }
  bool is_cut_vertex(int v) const { return vertex_blocks.at(static_cast<std::size_t>(v)).size() >= 2; }
  bool is_single_edge(std::size_t b) const { return blocks.at(b).size() == 1; }
  /// A biconnected block with as many edges as vertices is a cycle.
  bool is_cycle(std::size_t b) const {
    return blocks.at(b).size() >= 3 && blocks[b].size() == block_vertices[b].size();
  }
  /// Cut vertices lying on block b (the block's neighbours in the block tree).
  std::vector<int> block_cut_vertices(std::size_t b) const;
};

/// Throws GraphError when the graph has no edges.
BlockDecomposition blocks(const Graph& g);
/// Decomposition of the subgraph formed by the masked edges; indices refer to g.
BlockDecomposition blocks(const Graph& g, const EdgeMask& mask);

enum class Parity { Even, Odd, All };

/// Simple cycle as an edge sequence; vertices[i] is where edges[i] starts.
struct Cycle {
  std::vector<int> edges;
  std::vector<int> vertices;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// All simple cycles of the requested parity in canonical form (smallest
/// edge first, then the lexicographically smaller direction), ordered by
/// length and then edge sequence. Throws CapExceeded past `cap` cycles.
std::vector<Cycle> cycles(const Graph& g, Parity parity, std::size_t cap = kDefaultCycleCap);

/// Rotation/reflection normal form of a cyclic edge sequence.
std::vector<int> canonical_cycle_edges(std::vector<int> edges);

}  // namespace graver
