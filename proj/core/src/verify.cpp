#include "graver/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graver/fixtures.hpp"
#include "graver/oracle.hpp"

namespace graver {

namespace {

std::set<std::string> canonical_strings(const std::vector<Binomial>& bs) {
  std::set<std::string> out;
  for (const Binomial& b : bs) out.insert(canonical_string(b));
  return out;
}

std::string set_diff_text(const std::set<std::string>& expected, const std::set<std::string>& got) {
  std::string out;
  for (const std::string& s : expected)
    if (!got.count(s)) out += " missing " + s + ";";
  for (const std::string& s : got)
    if (!expected.count(s)) out += " extra " + s + ";";
  return out;
}

class Checker {
 public:
  Checker(const Graph& g, std::string name, const VerifyOptions& opt) : g_(g), opt_(opt) {
    out_.name = std::move(name);
    out_.graph = g;
  }

  GraphCheck run() {
    table_ = graver_basis(g_, opt_.limits);
    out_.graver = table_.rows.size();
    for (const std::string& f : table_.findings) out_.findings.push_back(f);
    std::set<std::string> table_set;
    for (const GraverRow& row : table_.rows) table_set.insert(to_string(row.binomial));

    if (opt_.oracles) {
      const std::set<std::string> oracle = canonical_strings(graver_oracle_checked(g_));
      if (oracle != table_set) fail("graver", set_diff_text(oracle, table_set));
      check_generation();
      check_circuits(table_set);
    }
    for (const GraverRow& row : table_.rows) check_row(row);
    if (opt_.walk_sweep) sweep_walks(table_set);
    return std::move(out_);
  }

 private:
  void fail(std::string check, std::string detail) { out_.mismatches.push_back({std::move(check), std::move(detail)}); }

  std::set<std::string> flagged(bool ClassificationReport::*flag) const {
    std::set<std::string> out;
    for (const GraverRow& row : table_.rows)
      if (row.report.*flag) out.insert(to_string(row.binomial));
    return out;
  }

  void check_generation() {
    const MinimalGeneration mg = minimal_generation(g_);
    const auto minimal = canonical_strings(mg.minimal_set);
    const auto indispensable = canonical_strings(mg.indispensable_set);
    const auto t_min = flagged(&ClassificationReport::is_minimal);
    const auto t_ind = flagged(&ClassificationReport::is_indispensable);
    if (minimal != t_min) fail("minimal", set_diff_text(minimal, t_min));
    if (indispensable != t_ind) fail("indispensable", set_diff_text(indispensable, t_ind));
  }

  void check_circuits(const std::set<std::string>& table_set) {
    for (const GraverRow& row : table_.rows) {
      const bool oracle = circuit_oracle(g_, row.binomial);
      if (oracle != row.report.is_circuit)
        fail("circuit", to_string(row.binomial) + ": oracle " + (oracle ? "true" : "false"));
      const bool fund = fundamental_oracle(g_, row.walk);
      if (fund != row.report.is_fundamental)
        fail("fundamental", to_string(row.binomial) + ": oracle " + (fund ? "true" : "false"));
    }
    const auto listed = canonical_strings(circuits(g_, opt_.limits));
    const auto t_circ = flagged(&ClassificationReport::is_circuit);
    if (listed != t_circ) fail("circuit-set", set_diff_text(t_circ, listed));
    for (const std::string& c : listed)
      if (!table_set.count(c)) fail("circuit-set", c + " is not in the table");
  }

  void check_row(const GraverRow& row) {
    const ClassificationReport& r = row.report;
    const std::string b = to_string(row.binomial);
    if (std::string broken = implication_violation(r); !broken.empty()) fail("implication", b + ": " + broken);
    if (!r.is_primitive) fail("implication", b + ": table row is not a primitive walk");

    for (const Chord& c : r.chords)
      if (c.kind != ChordKind::Bridge && (c.u_positions.size() != 1 || c.v_positions.size() != 1))
        fail("chord-occurrence", b + ": " + g_.label(c.edge) + " has an endpoint visited twice");

    const auto vertices = walk_vertices(row.walk);
    for (const F4& q : r.f4s) {
      ++out_.flips;
      const ClosedWalk flipped = f4_flip(g_, row.walk, q);
      const bool minimal = is_minimal_walk(g_, flipped).holds;
      if (minimal != r.is_minimal)
        fail("f4-invariance", b + ": flip over " + g_.label(q.chord) + "," + g_.label(q.other_chord) +
                                  " changes minimality");
      if (walk_vertices(flipped) != vertices) fail("f4-region", b + ": flip changes the vertex set");
      if (table_.find(binomial_of(g_, flipped)) < 0)
        fail("f4-class", b + ": flipped walk " + flipped.to_string(g_) + " gives a binomial outside the table");
    }

    for (std::size_t i = 0; i < r.chords.size(); ++i)
      for (std::size_t j = i + 1; j < r.chords.size(); ++j) {
        const Chord& f = r.chords[i];
        const Chord& f2 = r.chords[j];
        if (f.kind != ChordKind::Odd || f2.kind != ChordKind::Odd || !cross_effectively(f, f2)) continue;
        const bool four_cycle = std::any_of(r.f4s.begin(), r.f4s.end(),
                                            [&](const F4& q) { return q.uses_chords(f.edge, f2.edge); });
        if (four_cycle != f4_index_criterion(f, f2, row.walk.length()))
          out_.findings.push_back(b + ": position test and 4-cycle test disagree on " + g_.label(f.edge) + "," +
                                  g_.label(f2.edge));
      }
  }

  // Even closed walks that use each edge at most twice, always at the same
  // parity (anything else is reducible), starting with their smallest edge.
  void sweep_walks(const std::set<std::string>& table_set) {
    const std::size_t m = static_cast<std::size_t>(g_.edge_count());
    const std::size_t max_len = std::min(2 * m, opt_.max_walk_length);
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(g_.vertex_count()) + 1);
    for (int s = 1; s <= g_.vertex_count(); ++s) dist[static_cast<std::size_t>(s)] = bfs(s);

    std::set<ClosedWalk> seen;
    std::vector<int> uses(m, 0), parity(m, -1);
    std::vector<Step> steps;
    for (int first = 0; first < g_.edge_count(); ++first)
      for (bool rev : {false, true}) {
        const Edge& e = g_.edge(first);
        const int start = rev ? e.v : e.u;
        const int next = rev ? e.u : e.v;
        steps.assign(1, Step{first, rev});
        uses[static_cast<std::size_t>(first)] = 1;
        parity[static_cast<std::size_t>(first)] = 0;
        extend(first, start, next, max_len, dist[static_cast<std::size_t>(start)], uses, parity, steps, seen, table_set);
        uses[static_cast<std::size_t>(first)] = 0;
        parity[static_cast<std::size_t>(first)] = -1;
      }
  }

  std::vector<int> bfs(int s) const {
    std::vector<int> d(static_cast<std::size_t>(g_.vertex_count()) + 1, -1);
    std::vector<int> queue{s};
    d[static_cast<std::size_t>(s)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Incidence& inc : g_.incident(queue[i]))
        if (d[static_cast<std::size_t>(inc.neighbor)] < 0) {
          d[static_cast<std::size_t>(inc.neighbor)] = d[static_cast<std::size_t>(queue[i])] + 1;
          queue.push_back(inc.neighbor);
        }
    return d;
  }

  void extend(int first, int start, int at, std::size_t max_len, const std::vector<int>& dist,
              std::vector<int>& uses, std::vector<int>& parity, std::vector<Step>& steps, std::set<ClosedWalk>& seen,
              const std::set<std::string>& table_set) {
    if (at == start && steps.size() % 2 == 0 && steps.size() >= 4) visit(steps, seen, table_set);
    if (steps.size() >= max_len) return;
    const int pos = static_cast<int>(steps.size() % 2);
    for (const Incidence& inc : g_.incident(at)) {
      const auto e = static_cast<std::size_t>(inc.edge);
      if (inc.edge < first || uses[e] == 2 || (uses[e] == 1 && parity[e] != pos)) continue;
      if (static_cast<std::size_t>(dist[static_cast<std::size_t>(inc.neighbor)]) > max_len - steps.size() - 1)
        continue;
      steps.push_back({inc.edge, g_.edge(inc.edge).u != at});
      const int saved = parity[e];
      ++uses[e];
      parity[e] = pos;
      extend(first, start, inc.neighbor, max_len, dist, uses, parity, steps, seen, table_set);
      --uses[e];
      parity[e] = saved;
      steps.pop_back();
    }
  }

  void visit(const std::vector<Step>& steps, std::set<ClosedWalk>& seen, const std::set<std::string>& table_set) {
    const ClosedWalk w = ClosedWalk::make(g_, steps).canonical();
    if (!seen.insert(w).second) return;
    ++out_.walks;
    const Binomial b = binomial_of(g_, w).canonical();
    const bool in_table = table_set.count(to_string(b)) > 0;
    const bool primitive = check_primitive_walk(g_, w).holds;
    if (primitive != in_table)
      fail("walk-primitive", w.to_string(g_) + ": criterion says " + (primitive ? "primitive" : "not primitive") +
                                 ", binomial " + (in_table ? "is" : "is not") + " in the table");
    if (!primitive || !in_table) return;
    const ClassificationReport r = classify_walk(g_, w);
    const ClassificationReport& t = table_.rows[static_cast<std::size_t>(table_.find(b))].report;
    if (r.is_strongly_primitive != t.is_strongly_primitive || r.is_circuit != t.is_circuit ||
        r.is_minimal != t.is_minimal || r.is_indispensable != t.is_indispensable ||
        r.is_fundamental != t.is_fundamental)
      fail("walk-flags", w.to_string(g_) + ": flags differ from the table row for " + to_string(b));
  }

  const Graph& g_;
  const VerifyOptions& opt_;
  GraverTable table_;
  GraphCheck out_{{}, Graph(1, {}), 0, 0, 0, {}, {}};
};

// Colour refinement; the result is an isomorphism invariant.
std::vector<int> refine(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> colour(n + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = colour[static_cast<std::size_t>(v)];
      for (const Incidence& inc : g.incident(v)) s.second.push_back(colour[static_cast<std::size_t>(inc.neighbor)]);
      std::sort(s.second.begin(), s.second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> sorted(sig.begin() + 1, sig.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n + 1, 0);
    for (std::size_t v = 1; v <= n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const bool stable = std::set<int>(next.begin() + 1, next.end()).size() ==
                        std::set<int>(colour.begin() + 1, colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

std::vector<int> invariant(const Graph& g, const std::vector<int>& colour) {
  std::vector<int> inv(colour.begin() + 1, colour.end());
  std::sort(inv.begin(), inv.end());
  std::vector<int> pairs;
  for (const Edge& e : g.edges()) {
    int a = colour[static_cast<std::size_t>(e.u)], b = colour[static_cast<std::size_t>(e.v)];
    pairs.push_back(std::min(a, b) * 1000 + std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  inv.push_back(-1);
  inv.insert(inv.end(), pairs.begin(), pairs.end());
  return inv;
}

bool match(const Graph& a, const Graph& b, const std::vector<int>& ca, const std::vector<int>& cb,
           std::vector<int>& map, std::vector<bool>& used, int v) {
  if (v > a.vertex_count()) return true;
  for (int w = 1; w <= b.vertex_count(); ++w) {
    if (used[static_cast<std::size_t>(w)] || ca[static_cast<std::size_t>(v)] != cb[static_cast<std::size_t>(w)])
      continue;
    bool ok = true;
    for (const Incidence& inc : a.incident(v))
      if (inc.neighbor < v && !b.find_edge(w, map[static_cast<std::size_t>(inc.neighbor)])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = true;
    if (match(a, b, ca, cb, map, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = false;
  }
  return false;
}

}  // namespace

GraphCheck verify_graph(const Graph& g, std::string name, const VerifyOptions& options) {
  return Checker(g, std::move(name), options).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto ca = refine(a), cb = refine(b);
  if (invariant(a, ca) != invariant(b, cb)) return false;
  std::vector<int> map(static_cast<std::size_t>(a.vertex_count()) + 1, 0);
  std::vector<bool> used(map.size(), false);
  return match(a, b, ca, cb, map, used, 1);
}

std::vector<Graph> connected_graphs(int edges) {
  if (edges < 1) return {};
  std::vector<Graph> level{Graph(2, {{1, 2}})};
  for (int m = 1; m < edges; ++m) {
    std::vector<Graph> next;
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    auto offer = [&](Graph cand) {
      auto& bucket = buckets[invariant(cand, refine(cand))];
      for (std::size_t i : bucket)
        if (isomorphic(next[i], cand)) return;
      bucket.push_back(next.size());
      next.push_back(std::move(cand));
    };
    for (const Graph& g : level) {
      std::vector<Edge> base(g.edges().begin(), g.edges().end());
      for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
          if (!g.find_edge(u, v)) {
            auto es = base;
            es.push_back({u, v});
            offer(Graph(g.vertex_count(), std::move(es)));
          }
      for (int u = 1; u <= g.vertex_count(); ++u) {
        auto es = base;
        es.push_back({u, g.vertex_count() + 1});
        offer(Graph(g.vertex_count() + 1, std::move(es)));
      }
    }
    level = std::move(next);
  }
  return level;
}

Graph random_connected_graph(std::mt19937_64& rng, int max_edges) {
  if (max_edges < 3) throw std::invalid_argument("random graphs need room for at least three edges");
  const int max_n = std::min(max_edges + 1, 8);
  const int n = std::uniform_int_distribution<int>(3, max_n)(rng);
  std::vector<Edge> es;
  for (int v = 2; v <= n; ++v) es.push_back({std::uniform_int_distribution<int>(1, v - 1)(rng), v});
  std::vector<Edge> missing;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (std::find(es.begin(), es.end(), Edge{u, v}) == es.end()) missing.push_back({u, v});
  std::shuffle(missing.begin(), missing.end(), rng);
  const int room = std::min<int>(max_edges - (n - 1), static_cast<int>(missing.size()));
  const int extra = std::uniform_int_distribution<int>(std::min(1, room), room)(rng);
  es.insert(es.end(), missing.begin(), missing.begin() + extra);
  return Graph(n, std::move(es));
}

std::size_t SweepReport::mismatch_count() const {
  return std::accumulate(mismatch_counts.begin(), mismatch_counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

void SweepReport::add(GraphCheck check) {
  ++graphs;
  elements += check.graver;
  flips += check.flips;
  walks += check.walks;
  for (const Discrepancy& d : check.mismatches) ++mismatch_counts[d.check];
  for (const std::string& f : check.findings) findings.push_back(check.name + ": " + f);
  if (!check.mismatches.empty()) failures.push_back(std::move(check));
}

SweepReport verify_sweep(int max_edges, bool include_fixtures, const VerifyOptions& options) {
  SweepReport report;
  for (int m = 1; m <= max_edges; ++m) {
    const auto graphs = connected_graphs(m);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      report.add(verify_graph(graphs[i], "m" + std::to_string(m) + "-" + std::to_string(i + 1), options));
  }
  if (include_fixtures)
    for (const std::string& name : fixture_names()) {
      VerifyOptions opt = options;
      opt.max_walk_length = std::min<std::size_t>(opt.max_walk_length, 8);
      report.add(verify_graph(builtin_fixture(name), "fixture:" + name, opt));
    }
  return report;
}

SweepReport verify_random(std::uint64_t seed, int count, int max_edges, const VerifyOptions& options) {
  std::mt19937_64 rng(seed);
  SweepReport report;
  for (int i = 0; i < count; ++i)
    report.add(verify_graph(random_connected_graph(rng, max_edges), "random-" + std::to_string(i + 1), options));
  return report;
}

}  // namespace graver
