#include "graver/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graver/error.hpp"

namespace graver {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget), budget_(budget) {}
  void check() const {
    if (Clock::now() > end_)
      throw CapExceeded("time budget of " + std::to_string(budget_.count() / 1000.0) + " s exceeded");
  }

 private:
  Clock::time_point end_;
  std::chrono::milliseconds budget_;
};

Step step_from(const Graph& g, int e, int from) { return {e, g.edge(e).u != from}; }

bool blocks_are_cycles_or_edges(const BlockDecomposition& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b.is_single_edge(i) && !b.is_cycle(i)) return false;
  return true;
}

class SupportSearch {
 public:
  SupportSearch(const Graph& g, const EnumerationLimits& limits)
      : g_(g), limits_(limits), deadline_(limits.time_budget),
        in_set_(static_cast<std::size_t>(g.edge_count()), false),
        banned_(static_cast<std::size_t>(g.edge_count()), false),
        degree_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {}

  std::vector<PrimitiveSupport> run() {
    for (root_ = 0; root_ < g_.edge_count(); ++root_) {
      add(root_);
      rec(neighbours(root_, {}));
      remove(root_);
    }
    return std::move(out_);
  }

 private:
  void add(int e) {
    in_set_[static_cast<std::size_t>(e)] = true;
    ++degree_[static_cast<std::size_t>(g_.edge(e).u)];
    ++degree_[static_cast<std::size_t>(g_.edge(e).v)];
  }
  void remove(int e) {
    in_set_[static_cast<std::size_t>(e)] = false;
    --degree_[static_cast<std::size_t>(g_.edge(e).u)];
    --degree_[static_cast<std::size_t>(g_.edge(e).v)];
  }
  bool degree_ok(int e) const {
    return degree_[static_cast<std::size_t>(g_.edge(e).u)] <= 4 && degree_[static_cast<std::size_t>(g_.edge(e).v)] <= 4;
  }

  /// Candidates plus the unseen edges touching e.
  std::vector<int> neighbours(int e, std::vector<int> cand) const {
    for (int x : {g_.edge(e).u, g_.edge(e).v})
      for (const Incidence& inc : g_.incident(x)) {
        const int f = inc.edge;
        if (f <= root_ || in_set_[static_cast<std::size_t>(f)] || banned_[static_cast<std::size_t>(f)]) continue;
        if (std::find(cand.begin(), cand.end(), f) == cand.end()) cand.push_back(f);
      }
    return cand;
  }

  void rec(std::vector<int> cand) {
    deadline_.check();
    BlockDecomposition b = blocks(g_, in_set_);
    // A block that is neither a cycle nor an edge survives every extension.
    if (!blocks_are_cycles_or_edges(b)) return;
    if (primitive_support_check(g_, in_set_, b.cut_edges)) {
      out_.push_back({in_set_, b.cut_edges, std::move(b)});
      if (out_.size() > limits_.max_supports)
        throw CapExceeded("more than " + std::to_string(limits_.max_supports) + " primitive supports");
    }
    std::vector<int> popped;
    while (!cand.empty()) {
      const int e = cand.back();
      cand.pop_back();
      banned_[static_cast<std::size_t>(e)] = true;
      popped.push_back(e);
      add(e);
      if (degree_ok(e)) rec(neighbours(e, cand));
      remove(e);
    }
    for (int e : popped) banned_[static_cast<std::size_t>(e)] = false;
  }

  const Graph& g_;
  const EnumerationLimits& limits_;
  Deadline deadline_;
  EdgeMask in_set_;
  std::vector<bool> banned_;
  std::vector<int> degree_;
  int root_ = 0;
  std::vector<PrimitiveSupport> out_;
};

class Realizer {
 public:
  Realizer(const Graph& g, const BlockDecomposition& wb) : g_(g), wb_(wb), visited_(wb.size(), false) {}

  std::vector<Step> run(std::size_t root) {
    const int entry = wb_.block_vertices[root].front();
    visit(root, entry);
    detour(entry, static_cast<int>(root));
    return std::move(steps_);
  }

 private:
  void detour(int v, int from_block) {
    for (int b : wb_.vertex_blocks[static_cast<std::size_t>(v)])
      if (b != from_block && !visited_[static_cast<std::size_t>(b)]) visit(static_cast<std::size_t>(b), v);
  }

  int next_block_edge(std::size_t b, int v, int except) const {
    int best = -1;
    for (const Incidence& inc : g_.incident(v))
      if (inc.edge != except && wb_.edge_block[static_cast<std::size_t>(inc.edge)] == static_cast<int>(b) &&
          (best < 0 || inc.edge < best))
        best = inc.edge;
    if (best < 0) throw RealizationFailed("block " + std::to_string(b) + " is not a cycle at vertex " + std::to_string(v));
    return best;
  }

  void visit(std::size_t b, int entry) {
    visited_[b] = true;
    if (wb_.is_single_edge(b)) {
      const int e = wb_.blocks[b].front();
      const int far = g_.edge(e).other(entry);
      steps_.push_back(step_from(g_, e, entry));
      detour(far, static_cast<int>(b));
      steps_.push_back(step_from(g_, e, far));
      return;
    }
    int cur = entry;
    int e = next_block_edge(b, entry, -1);
    for (std::size_t guard = 0; guard <= wb_.blocks[b].size(); ++guard) {
      steps_.push_back(step_from(g_, e, cur));
      cur = g_.edge(e).other(cur);
      if (cur == entry) return;
      detour(cur, static_cast<int>(b));
      e = next_block_edge(b, cur, e);
    }
    throw RealizationFailed("block " + std::to_string(b) + " does not close up as a cycle");
  }

  const Graph& g_;
  const BlockDecomposition& wb_;
  std::vector<bool> visited_;
  std::vector<Step> steps_;
};

std::vector<Step> cycle_steps_from(const Graph& g, const Cycle& c, int start) {
  std::vector<Step> steps;
  const std::size_t len = c.length();
  const auto k = static_cast<std::size_t>(std::find(c.vertices.begin(), c.vertices.end(), start) - c.vertices.begin());
  for (std::size_t i = 0; i < len; ++i) steps.push_back(step_from(g, c.edges[(k + i) % len], c.vertices[(k + i) % len]));
  return steps;
}

using KeyedWalks = std::map<std::pair<unsigned, std::string>, std::pair<Binomial, ClosedWalk>>;

void keep(KeyedWalks& out, const Graph& g, std::vector<Step> steps) {
  ClosedWalk w = ClosedWalk::make(g, std::move(steps), kUnboundedWalk);
  Binomial b = binomial_of(g, w).canonical();
  out.try_emplace({b.total_degree(), to_string(b)}, b, std::move(w));
}

KeyedWalks circuit_table(const Graph& g, const EnumerationLimits& limits) {
  Deadline deadline(limits.time_budget);
  KeyedWalks out;
  for (const Cycle& c : cycles(g, Parity::Even)) keep(out, g, cycle_steps_from(g, c, c.vertices.front()));

  const std::vector<Cycle> odd = cycles(g, Parity::Odd);
  std::vector<std::vector<int>> vsets;
  for (const Cycle& c : odd) {
    std::vector<int> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    vsets.push_back(std::move(vs));
  }
  std::vector<bool> on_cycles(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      deadline.check();
      std::vector<int> common;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(common));
      if (common.size() == 1) {
        std::vector<Step> steps = cycle_steps_from(g, odd[i], common.front());
        std::vector<Step> second = cycle_steps_from(g, odd[j], common.front());
        steps.insert(steps.end(), second.begin(), second.end());
        keep(out, g, std::move(steps));
        continue;
      }
      if (!common.empty()) continue;
      for (int v : vsets[i]) on_cycles[static_cast<std::size_t>(v)] = true;
      for (int v : vsets[j]) on_cycles[static_cast<std::size_t>(v)] = true;
      // Simple paths from a vertex of cycle i to a vertex of cycle j whose
      // interior avoids both cycles.
      std::vector<bool> used(on_cycles.size(), false);
      std::vector<Step> path;
      auto extend = [&](auto& self, int at, int origin) -> void {
        for (const Incidence& inc : g.incident(at)) {
          const int next = inc.neighbor;
          if (used[static_cast<std::size_t>(next)]) continue;
          path.push_back(step_from(g, inc.edge, at));
          if (std::binary_search(vsets[j].begin(), vsets[j].end(), next)) {
            std::vector<Step> steps = cycle_steps_from(g, odd[i], origin);
            steps.insert(steps.end(), path.begin(), path.end());
            std::vector<Step> second = cycle_steps_from(g, odd[j], next);
            steps.insert(steps.end(), second.begin(), second.end());
            for (auto it = path.rbegin(); it != path.rend(); ++it) steps.push_back({it->edge, !it->reversed});
            keep(out, g, std::move(steps));
          } else if (!on_cycles[static_cast<std::size_t>(next)]) {
            used[static_cast<std::size_t>(next)] = true;
            self(self, next, origin);
            used[static_cast<std::size_t>(next)] = false;
          }
          path.pop_back();
        }
      };
      for (int a : vsets[i]) {
        used[static_cast<std::size_t>(a)] = true;
        extend(extend, a, a);
        used[static_cast<std::size_t>(a)] = false;
      }
      for (int v : vsets[i]) on_cycles[static_cast<std::size_t>(v)] = false;
      for (int v : vsets[j]) on_cycles[static_cast<std::size_t>(v)] = false;
    }
  return out;
}

}  // namespace

std::vector<PrimitiveSupport> primitive_supports(const Graph& g, const EnumerationLimits& limits) {
  return SupportSearch(g, limits).run();
}

ClosedWalk realize_walk(const Graph& g, const PrimitiveSupport& s, std::size_t root_block) {
  if (root_block >= s.blocks.size() || !s.blocks.is_cycle(root_block))
    throw std::invalid_argument("walk realization must start from a cyclic block");
  ClosedWalk w = ClosedWalk::make(g, Realizer(g, s.blocks).run(root_block));
  if (support_mask(g, w) != s.edges) throw RealizationFailed("realized walk does not cover its support");
  const std::vector<int> mult = edge_multiplicities(g, w);
  for (int e : s.doubled)
    if (mult[static_cast<std::size_t>(e)] != 2) throw RealizationFailed(g.label(e) + " is not traversed twice");
  if (Verdict v = check_primitive_walk(g, w); !v)
    throw RealizationFailed("realized walk is not primitive: " + std::string(describe(v.witness.violation)));
  return w;
}

ClosedWalk realize_walk(const Graph& g, const PrimitiveSupport& s) {
  for (std::size_t b = 0; b < s.blocks.size(); ++b)
    if (s.blocks.is_cycle(b)) return realize_walk(g, s, b);
  throw RealizationFailed("support has no cyclic block");
}

int GraverTable::find(const Binomial& b) const {
  const Binomial c = b.canonical();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].binomial == c) return static_cast<int>(i);
  return -1;
}

GraverTable graver_basis(const Graph& g, const EnumerationLimits& limits) {
  GraverTable table;
  KeyedWalks found;
  for (const PrimitiveSupport& s : primitive_supports(g, limits)) {
    std::set<std::string> here;
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      if (!s.blocks.is_cycle(b)) continue;
      ClosedWalk w = realize_walk(g, s, b);
      Binomial bin = binomial_of(g, w).canonical();
      here.insert(to_string(bin));
      found.try_emplace({bin.total_degree(), to_string(bin)}, bin, std::move(w));
    }
    if (here.size() > 1) {
      std::string msg = "support realizes " + std::to_string(here.size()) + " distinct binomials:";
      for (const std::string& s2 : here) msg += " [" + s2 + "]";
      table.findings.push_back(msg);
    }
  }
  for (auto& [key, entry] : found) {
    auto& [bin, w] = entry;
    ClassificationReport report = classify_walk(g, w);
    table.rows.push_back({bin, w.canonical(), std::move(report), 1});
  }
  for (GraverRow& row : table.rows) {
    const std::vector<ClosedWalk> cls = f4_class(g, row.walk);
    row.f4_class_size = cls.size();
    for (const ClosedWalk& other : cls)
      if (table.find(binomial_of(g, other)) < 0)
        table.findings.push_back("F4 class of " + to_string(row.binomial) + " leaves the table at walk " +
                                 other.to_string(g));
    if (std::string broken = implication_violation(row.report); !broken.empty())
      table.findings.push_back(to_string(row.binomial) + ": " + broken);
  }
  TableSummary& s = table.summary;
  s.graver = table.rows.size();
  for (const GraverRow& row : table.rows) {
    s.circuits += row.report.is_circuit;
    s.strongly_primitive += row.report.is_strongly_primitive;
    s.minimal += row.report.is_minimal;
    s.indispensable += row.report.is_indispensable;
    s.fundamental += row.report.is_fundamental;
  }
  return table;
}

GraverTable classify_all(const Graph& g, const EnumerationLimits& limits) { return graver_basis(g, limits); }

std::vector<Binomial> circuits(const Graph& g, const EnumerationLimits& limits) {
  std::vector<Binomial> out;
  for (auto& [key, entry] : circuit_table(g, limits)) out.push_back(entry.first);
  return out;
}

std::vector<ClosedWalk> circuit_walks(const Graph& g, const EnumerationLimits& limits) {
  std::vector<ClosedWalk> out;
  for (auto& [key, entry] : circuit_table(g, limits)) out.push_back(entry.second);
  return out;
}

}  // namespace graver
