#include "graver/fixtures.hpp"

#include <stdexcept>

namespace graver {

namespace {

struct FixtureDef {
  const char* name;
  const char* summary;
  int vertices;
  std::vector<Edge> edges;
};

std::vector<Edge> cycle_edges(int n) {
  std::vector<Edge> out;
  for (int v = 1; v < n; ++v) out.push_back({v, v + 1});
  out.push_back({n, 1});
  return out;
}

std::vector<Edge> with(std::vector<Edge> base, std::initializer_list<Edge> extra) {
  base.insert(base.end(), extra);
  return base;
}

const std::vector<FixtureDef>& table() {
  static const std::vector<FixtureDef> defs = {
      {"c4", "4-cycle", 4, cycle_edges(4)},
      {"k4", "complete graph on 4 vertices", 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {"bowtie", "two triangles sharing vertex 3", 5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}},
      {"dumbbell", "two triangles joined by the edge 3-4", 6,
       {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}}},
      {"dumbbell-chord", "dumbbell plus the edge 1-5", 6,
       {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}, {1, 5}}},
      {"c6chord", "6-cycle plus the edge 1-3", 6, with(cycle_edges(6), {{1, 3}})},
      {"c8-f4", "8-cycle plus the edges 1-5 and 2-6", 8, with(cycle_edges(8), {{1, 5}, {2, 6}})},
      {"c10-strong", "10-cycle plus the edges 1-5 and 2-8", 10, with(cycle_edges(10), {{1, 5}, {2, 8}})},
      {"sinks", "triangle, 4-cycle and triangle chained at vertices 3 and 4", 8,
       {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}, {4, 7}, {7, 8}, {4, 8}}},
      {"ex416", "reconstructed worked example with three blocks", 10,
       {{1, 4}, {1, 2}, {2, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {7, 9}, {7, 10}, {5, 10}, {3, 5}, {3, 4}, {1, 3},
        {2, 4}}},
  };
  return defs;
}

const FixtureDef& lookup(std::string_view name) {
  for (const FixtureDef& d : table())
    if (d.name == name) return d;
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const FixtureDef& d : table()) out.emplace_back(d.name);
  return out;
}

Graph builtin_fixture(std::string_view name) {
  const FixtureDef& d = lookup(name);
  return Graph(d.vertices, d.edges);
}

std::string fixture_summary(std::string_view name) { return lookup(name).summary; }

}  // namespace graver
