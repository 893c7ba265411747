#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "graver/binomial.hpp"
#include "graver/classify.hpp"
#include "graver/graph.hpp"
#include "graver/walk.hpp"

namespace graver {

/// Edge set W of g that is the graph of a primitive walk, with the edges
/// such a walk traverses twice (the cut edges of W).
struct PrimitiveSupport {
  EdgeMask edges;
  std::vector<int> doubled;
  BlockDecomposition blocks;
};

struct EnumerationLimits {
  std::size_t max_supports = 100'000;
  std::chrono::milliseconds time_budget{60'000};
};

/// Every connected edge subset of g passing primitive_support_check, in
/// order of smallest edge then search order. Throws CapExceeded.
std::vector<PrimitiveSupport> primitive_supports(const Graph& g, const EnumerationLimits& limits = {});

/// Primitive walk on the support: each cyclic block is walked around its
/// cycle, detouring into the rest of the block tree at every cut vertex,
/// and each cut edge is crossed there and back. `root_block` must be a
/// cyclic block. Throws RealizationFailed if the result is not primitive.
ClosedWalk realize_walk(const Graph& g, const PrimitiveSupport& s, std::size_t root_block);
/// Rooted at the first cyclic block.
ClosedWalk realize_walk(const Graph& g, const PrimitiveSupport& s);

struct GraverRow {
  Binomial binomial;  // canonical
  ClosedWalk walk;
  ClassificationReport report;
  std::size_t f4_class_size = 1;
};

struct TableSummary {
  std::size_t graver = 0;
  std::size_t circuits = 0;
  std::size_t strongly_primitive = 0;
  std::size_t minimal = 0;
  std::size_t indispensable = 0;
  std::size_t fundamental = 0;
};

struct GraverTable {
  std::vector<GraverRow> rows;  // by total degree, then canonical string
  TableSummary summary;
  /// Anomalies worth a look: supports realizing several binomials, broken
  /// implication chains, F4 classes that leave the table.
  std::vector<std::string> findings;

  /// Row index of a binomial (either sign), or -1.
  int find(const Binomial& b) const;
};

/// All primitive binomials of g, each realized by a walk and classified.
/// Throws CapExceeded.
GraverTable graver_basis(const Graph& g, const EnumerationLimits& limits = {});
/// Same table; kept as the entry point for summary-oriented callers.
GraverTable classify_all(const Graph& g, const EnumerationLimits& limits = {});

/// Binomials of every even cycle, every pair of odd cycles meeting in one
/// vertex, and every pair of vertex-disjoint odd cycles together with each
/// path joining them. Sorted canonically. Throws CapExceeded.
std::vector<Binomial> circuits(const Graph& g, const EnumerationLimits& limits = {});

/// Walks realizing circuits(g), one per binomial, in the same order.
std::vector<ClosedWalk> circuit_walks(const Graph& g, const EnumerationLimits& limits = {});

}  // namespace graver
