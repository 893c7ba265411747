#include "graver/graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "graver/error.hpp"

namespace graver {

std::string default_edge_label(int e) { return "e" + std::to_string(e + 1); }

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ <= 0) throw GraphError("vertex count must be positive");
  adj_.resize(static_cast<std::size_t>(n_) + 1);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string where = "edge " + default_edge_label(static_cast<int>(i));
    if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
      throw GraphError(where + " has an endpoint outside 1.." + std::to_string(n_));
    if (e.u == e.v) throw GraphError(where + " is a loop at vertex " + std::to_string(e.u));
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw GraphError(where + " repeats {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    adj_[static_cast<std::size_t>(e.u)].push_back({static_cast<int>(i), e.v});
    adj_[static_cast<std::size_t>(e.v)].push_back({static_cast<int>(i), e.u});
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) labels_.push_back(default_edge_label(static_cast<int>(i)));
  } else {
    if (labels_.size() != edges_.size()) throw GraphError("label count does not match edge count");
    std::unordered_set<std::string> unique(labels_.begin(), labels_.end());
    if (unique.size() != labels_.size()) throw GraphError("edge labels must be unique");
  }
}

std::optional<int> Graph::find_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return std::nullopt;
  for (const Incidence& inc : adj_[static_cast<std::size_t>(u)])
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

std::optional<int> Graph::edge_by_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

bool Graph::has_default_labels() const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] != default_edge_label(static_cast<int>(i))) return false;
  return true;
}

bool Graph::is_connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n_;
}

namespace {

Subgraph build_subgraph(const Graph& g, std::vector<int> vertices, std::vector<int> edge_ids) {
  std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t k = 0; k < vertices.size(); ++k) relabel[static_cast<std::size_t>(vertices[k])] = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int e : edge_ids) {
    const Edge& old = g.edge(e);
    edges.push_back({relabel[static_cast<std::size_t>(old.u)], relabel[static_cast<std::size_t>(old.v)]});
    labels.push_back(g.label(e));
  }
  Graph sub(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
  return Subgraph{std::move(sub), std::move(vertices), std::move(edge_ids)};
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertex_set) {
  std::vector<int> vertices(vertex_set.begin(), vertex_set.end());
  for (int v : vertices)
    if (v < 1 || v > g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw GraphError("induced subgraph needs at least one vertex");
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (int v : vertices) in[static_cast<std::size_t>(v)] = true;
  std::vector<int> edge_ids;
  for (int e = 0; e < g.edge_count(); ++e)
    if (in[static_cast<std::size_t>(g.edge(e).u)] && in[static_cast<std::size_t>(g.edge(e).v)]) edge_ids.push_back(e);
  return build_subgraph(g, std::move(vertices), std::move(edge_ids));
}

Subgraph edge_subgraph(const Graph& g, const EdgeMask& mask) {
  std::vector<int> vertices, edge_ids;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!mask[static_cast<std::size_t>(e)]) continue;
    edge_ids.push_back(e);
    vertices.push_back(g.edge(e).u);
    vertices.push_back(g.edge(e).v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw GraphError("edge subgraph needs at least one edge");
  return build_subgraph(g, std::move(vertices), std::move(edge_ids));
}

std::vector<int> BlockDecomposition::block_cut_vertices(std::size_t b) const {
  std::vector<int> out;
  for (int v : block_vertices.at(b))
    if (is_cut_vertex(v)) out.push_back(v);
  return out;
}

BlockDecomposition blocks(const Graph& g) {
  if (g.edge_count() == 0) throw GraphError("block decomposition of a graph without edges");
  return blocks(g, g.full_mask());
}

BlockDecomposition blocks(const Graph& g, const EdgeMask& mask) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<int> edge_stack;
  BlockDecomposition out;
  int timer = 0;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;

  for (int root = 1; root <= g.vertex_count(); ++root) {
    if (disc[static_cast<std::size_t>(root)] != 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++timer;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      const std::size_t top = frames.size() - 1;
      const int v = frames[top].v;
      auto inc = g.incident(v);
      if (frames[top].next < inc.size()) {
        const Incidence step = inc[frames[top].next++];
        if (!mask[static_cast<std::size_t>(step.edge)] || step.edge == frames[top].parent_edge) continue;
        const auto w = static_cast<std::size_t>(step.neighbor);
        if (disc[w] == 0) {
          edge_stack.push_back(step.edge);
          disc[w] = low[w] = ++timer;
          frames.push_back({step.neighbor, step.edge, 0});
        } else if (disc[w] < disc[static_cast<std::size_t>(v)]) {
          edge_stack.push_back(step.edge);
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[w]);
        }
        continue;
      }
      const int parent_edge = frames[top].parent_edge;
      frames.pop_back();
      if (frames.empty()) break;
      const auto u = static_cast<std::size_t>(frames.back().v);
      low[u] = std::min(low[u], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[u]) {
        std::vector<int> block;
        while (true) {
          int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.vertex_blocks.assign(n + 1, {});
  out.edge_block.assign(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    std::vector<int> vs;
    for (int e : out.blocks[b]) {
      out.edge_block[static_cast<std::size_t>(e)] = static_cast<int>(b);
      vs.push_back(g.edge(e).u);
      vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) out.vertex_blocks[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
    out.block_vertices.push_back(std::move(vs));
    if (out.blocks[b].size() == 1) out.cut_edges.push_back(out.blocks[b].front());
  }
  for (std::size_t v = 1; v <= n; ++v)
    if (out.vertex_blocks[v].size() >= 2) out.cut_vertices.push_back(static_cast<int>(v));
  std::sort(out.cut_edges.begin(), out.cut_edges.end());
  return out;
}

std::vector<int> canonical_cycle_edges(std::vector<int> edges) {
  if (edges.empty()) return edges;
  std::vector<int> best;
  const std::size_t len = edges.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < len; ++r) {
      std::vector<int> cand(len);
      for (std::size_t i = 0; i < len; ++i) cand[i] = edges[(r + i) % len];
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(edges.begin(), edges.end());
  }
  return best;
}

namespace {

Cycle cycle_from_edges(const Graph& g, std::vector<int> edges) {
  Cycle c;
  c.edges = std::move(edges);
  const Edge& first = g.edge(c.edges.front());
  const Edge& second = g.edge(c.edges[1 % c.edges.size()]);
  int start = second.touches(first.u) ? first.v : first.u;
  for (int e : c.edges) {
    c.vertices.push_back(start);
    start = g.edge(e).other(start);
  }
  return c;
}

}  // namespace

std::vector<Cycle> cycles(const Graph& g, Parity parity, std::size_t cap) {
  std::set<std::vector<int>> found;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> on_path(n + 1, false);
  std::vector<int> path_edges;

  for (int s = 1; s <= g.vertex_count(); ++s) {
    // Depth-first search over vertices larger than s, closing back at s.
    struct Frame {
      int v;
      std::size_t next;
    };
    std::vector<Frame> frames{{s, 0}};
    on_path[static_cast<std::size_t>(s)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto inc = g.incident(f.v);
      if (f.next >= inc.size()) {
        on_path[static_cast<std::size_t>(f.v)] = false;
        frames.pop_back();
        if (!path_edges.empty() && !frames.empty()) path_edges.pop_back();
        continue;
      }
      const Incidence step = inc[f.next++];
      if (step.neighbor == s) {
        if (path_edges.size() >= 2 && step.edge != path_edges.back()) {
          std::vector<int> cyc = path_edges;
          cyc.push_back(step.edge);
          const bool even = cyc.size() % 2 == 0;
          if (parity == Parity::All || (parity == Parity::Even) == even) {
            found.insert(canonical_cycle_edges(std::move(cyc)));
            if (found.size() > cap) throw CapExceeded("cycle enumeration exceeded cap of " + std::to_string(cap));
          }
        }
        continue;
      }
      if (step.neighbor < s || on_path[static_cast<std::size_t>(step.neighbor)]) continue;
      on_path[static_cast<std::size_t>(step.neighbor)] = true;
      path_edges.push_back(step.edge);
      frames.push_back({step.neighbor, 0});
    }
  }

  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Cycle> out;
  out.reserve(sorted.size());
  for (auto& edges : sorted) out.push_back(cycle_from_edges(g, std::move(edges)));
  return out;
}

}  // namespace graver
