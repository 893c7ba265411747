#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "graver/enumerate.hpp"
#include "graver/graph.hpp"

namespace graver {

struct VerifyOptions {
  /// Compare against the definitional engines (kernel search, fibers).
  bool oracles = true;
  /// Enumerate even closed walks and check the walk-level criterion.
  bool walk_sweep = true;
  std::size_t max_walk_length = 10;
  EnumerationLimits limits{};
};

struct Discrepancy {
  std::string check;
  std::string detail;
};

struct GraphCheck {
  std::string name;
  Graph graph;
  std::size_t graver = 0;
  std::size_t flips = 0;
  std::size_t walks = 0;
  std::vector<Discrepancy> mismatches;
  std::vector<std::string> findings;
};

/// Runs every cross-check on one graph. Check names: graver, minimal,
/// indispensable, circuit, circuit-set, fundamental, implication,
/// f4-invariance, f4-region, f4-class, chord-occurrence, walk-primitive,
/// walk-flags. Throws CapExceeded.
GraphCheck verify_graph(const Graph& g, std::string name, const VerifyOptions& options = {});

/// Connected simple graphs with exactly `edges` edges and no isolated
/// vertices, one per isomorphism class, in a fixed order.
std::vector<Graph> connected_graphs(int edges);

bool isomorphic(const Graph& a, const Graph& b);

/// Spanning tree plus random extra edges; at most `max_edges` edges and at
/// least three vertices.
Graph random_connected_graph(std::mt19937_64& rng, int max_edges);

struct SweepReport {
  std::size_t graphs = 0;
  std::size_t elements = 0;
  std::size_t flips = 0;
  std::size_t walks = 0;
  std::map<std::string, std::size_t> mismatch_counts;
  std::vector<GraphCheck> failures;  // in sweep order, smallest first
  std::vector<std::string> findings;

  std::size_t mismatch_count() const;
  void add(GraphCheck check);
};

/// Every connected graph with 1..max_edges edges, then the built-in
/// fixtures when asked.
SweepReport verify_sweep(int max_edges, bool include_fixtures, const VerifyOptions& options = {});

/// `count` random graphs drawn from a generator seeded with `seed`.
SweepReport verify_random(std::uint64_t seed, int count, int max_edges, const VerifyOptions& options = {});

}  // namespace graver
