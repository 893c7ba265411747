#include "graver/walk.hpp"

#include <algorithm>
#include <map>

#include "graver/error.hpp"

namespace graver {

namespace {

int step_start(const Graph& g, const Step& s) { return s.reversed ? g.edge(s.edge).v : g.edge(s.edge).u; }
int step_end(const Graph& g, const Step& s) { return s.reversed ? g.edge(s.edge).u : g.edge(s.edge).v; }

std::size_t resolve_cap(const Graph& g, std::optional<std::size_t> max_length) {
  return max_length.value_or(2 * static_cast<std::size_t>(g.edge_count()));
}

}  // namespace

ClosedWalk ClosedWalk::make(const Graph& g, std::vector<Step> steps, std::optional<std::size_t> max_length) {
  if (steps.empty()) throw WalkError(WalkError::Kind::Empty, "walk has no steps");
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i].edge < 0 || steps[i].edge >= g.edge_count())
      throw WalkError(WalkError::Kind::UnknownEdge, "step " + std::to_string(i) + " uses an unknown edge",
                      static_cast<std::ptrdiff_t>(i));
  std::vector<int> vertices;
  vertices.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && step_start(g, steps[i]) != step_end(g, steps[i - 1]))
      throw WalkError(WalkError::Kind::NotIncident,
                      g.label(steps[i - 1].edge) + " and " + g.label(steps[i].edge) + " do not meet",
                      static_cast<std::ptrdiff_t>(i));
    vertices.push_back(step_start(g, steps[i]));
  }
  if (step_end(g, steps.back()) != vertices.front())
    throw WalkError(WalkError::Kind::NotClosed, "walk does not return to its first vertex");
  if (steps.size() < 3)
    throw WalkError(WalkError::Kind::TooShort, "a closed walk in a simple graph has at least 3 steps");
  const std::size_t cap = resolve_cap(g, max_length);
  if (steps.size() > cap)
    throw WalkError(WalkError::Kind::TooLong,
                    "walk length " + std::to_string(steps.size()) + " exceeds cap " + std::to_string(cap));
  return ClosedWalk(std::move(steps), std::move(vertices));
}

ClosedWalk ClosedWalk::from_edges(const Graph& g, std::span<const int> edges, std::optional<std::size_t> max_length) {
  if (edges.empty()) throw WalkError(WalkError::Kind::Empty, "walk has no steps");
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i] < 0 || edges[i] >= g.edge_count())
      throw WalkError(WalkError::Kind::UnknownEdge, "step " + std::to_string(i) + " uses an unknown edge",
                      static_cast<std::ptrdiff_t>(i));

  std::optional<WalkError> best_error;
  for (bool first_reversed : {false, true}) {
    std::vector<Step> steps{{edges[0], first_reversed}};
    int current = step_end(g, steps[0]);
    bool ok = true;
    for (std::size_t i = 1; i < edges.size(); ++i) {
      const Edge& e = g.edge(edges[i]);
      if (!e.touches(current)) {
        WalkError err(WalkError::Kind::NotIncident,
                      g.label(edges[i - 1]) + " and " + g.label(edges[i]) + " do not meet",
                      static_cast<std::ptrdiff_t>(i));
        if (!best_error || best_error->position() < err.position()) best_error = err;
        ok = false;
        break;
      }
      steps.push_back({edges[i], e.u != current});
      current = e.other(current);
    }
    if (!ok) continue;
    if (current != step_start(g, steps[0])) {
      if (!best_error || best_error->position() < static_cast<std::ptrdiff_t>(edges.size()))
        best_error = WalkError(WalkError::Kind::NotClosed, "walk does not return to its first vertex",
                               static_cast<std::ptrdiff_t>(edges.size()));
      continue;
    }
    return make(g, std::move(steps), max_length);
  }
  throw *best_error;
}

ClosedWalk ClosedWalk::parse(const Graph& g, std::string_view text, std::optional<std::size_t> max_length) {
  std::vector<int> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty edge label in walk '" + std::string(text) + "'");
    auto e = g.edge_by_label(token);
    if (!e)
      throw WalkError(WalkError::Kind::UnknownEdge, "unknown edge label '" + std::string(token) + "'",
                      static_cast<std::ptrdiff_t>(edges.size()));
    edges.push_back(*e);
    pos = comma + 1;
  }
  return from_edges(g, edges, max_length);
}

std::vector<int> ClosedWalk::edge_sequence() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (const Step& s : steps_) out.push_back(s.edge);
  return out;
}

ClosedWalk ClosedWalk::reversed() const {
  const std::size_t len = steps_.size();
  std::vector<Step> steps;
  std::vector<int> vertices;
  steps.reserve(len);
  vertices.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    const Step& s = steps_[len - 1 - j];
    steps.push_back({s.edge, !s.reversed});
    vertices.push_back(vertices_[(len - j) % len]);
  }
  return ClosedWalk(std::move(steps), std::move(vertices));
}

ClosedWalk ClosedWalk::rotated(std::size_t k) const {
  const std::size_t len = steps_.size();
  std::vector<Step> steps(len);
  std::vector<int> vertices(len);
  for (std::size_t i = 0; i < len; ++i) {
    steps[i] = steps_[(i + k) % len];
    vertices[i] = vertices_[(i + k) % len];
  }
  return ClosedWalk(std::move(steps), std::move(vertices));
}

ClosedWalk ClosedWalk::canonical() const {
  ClosedWalk best = *this;
  const ClosedWalk back = reversed();
  for (const ClosedWalk* base : {this, &back})
    for (std::size_t k = 0; k < length(); ++k) {
      ClosedWalk cand = base->rotated(k);
      if (cand.steps_ < best.steps_) best = std::move(cand);
    }
  return best;
}

std::string ClosedWalk::to_string(const Graph& g) const {
  std::string out;
  for (const Step& s : steps_) {
    if (!out.empty()) out += ',';
    out += g.label(s.edge);
  }
  return out;
}

SignPartition sign_partition(const ClosedWalk& w) {
  if (!w.is_even()) throw WalkError(WalkError::Kind::OddWalk, "walk has odd length");
  SignPartition p;
  for (std::size_t i = 0; i < w.length(); ++i) (i % 2 == 0 ? p.plus : p.minus).push_back(w.steps()[i].edge);
  std::sort(p.plus.begin(), p.plus.end());
  std::sort(p.minus.begin(), p.minus.end());
  return p;
}

bool is_irreducible(const ClosedWalk& w) {
  SignPartition p = sign_partition(w);
  std::vector<int> common;
  std::set_intersection(p.plus.begin(), p.plus.end(), p.minus.begin(), p.minus.end(), std::back_inserter(common));
  return common.empty();
}

Binomial binomial_of(const Graph& g, const ClosedWalk& w) {
  SignPartition p = sign_partition(w);
  const auto m = static_cast<std::size_t>(g.edge_count());
  Monomial plus = Monomial::from_edges(m, p.plus);
  Monomial minus = Monomial::from_edges(m, p.minus);
  for (std::size_t e = 0; e < m; ++e)
    if (plus[e] > 0 && minus[e] > 0)
      throw WalkError(WalkError::Kind::NotIrreducible,
                      g.label(static_cast<int>(e)) + " occurs at both odd and even positions");
  return Binomial(std::move(plus), std::move(minus));
}

std::vector<int> edge_multiplicities(const Graph& g, const ClosedWalk& w) {
  std::vector<int> mult(static_cast<std::size_t>(g.edge_count()), 0);
  for (const Step& s : w.steps()) ++mult[static_cast<std::size_t>(s.edge)];
  return mult;
}

EdgeMask support_mask(const Graph& g, const ClosedWalk& w) {
  EdgeMask mask(static_cast<std::size_t>(g.edge_count()), false);
  for (const Step& s : w.steps()) mask[static_cast<std::size_t>(s.edge)] = true;
  return mask;
}

Subgraph support_graph(const Graph& g, const ClosedWalk& w) { return edge_subgraph(g, support_mask(g, w)); }

std::vector<int> walk_vertices(const ClosedWalk& w) {
  std::vector<int> vs(w.vertices().begin(), w.vertices().end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Subgraph induced_region(const Graph& g, const ClosedWalk& w) { return induced_subgraph(g, walk_vertices(w)); }

BlockDecomposition walk_blocks(const Graph& g, const ClosedWalk& w) { return blocks(g, support_mask(g, w)); }

std::vector<Sink> sinks(const Graph& g, const ClosedWalk& w) { return sinks(g, w, walk_blocks(g, w)); }

std::vector<Sink> sinks(const Graph& g, const ClosedWalk& w, const BlockDecomposition& wb) {
  if (!w.is_even()) throw WalkError(WalkError::Kind::OddWalk, "sinks are defined for even walks");
  // (vertex, block, parity) -> number of traversals touching the vertex
  std::map<std::tuple<int, int, int>, int> count;
  for (std::size_t i = 0; i < w.length(); ++i) {
    const int e = w.steps()[i].edge;
    const int b = wb.edge_block[static_cast<std::size_t>(e)];
    const int parity = static_cast<int>(i % 2);
    ++count[{g.edge(e).u, b, parity}];
    ++count[{g.edge(e).v, b, parity}];
  }
  std::vector<Sink> out;
  for (const auto& [key, n] : count) {
    if (n < 2) continue;
    Sink s{std::get<0>(key), std::get<1>(key)};
    if (out.empty() || out.back() != s) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graver
