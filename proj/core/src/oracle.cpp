#include "graver/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "graver/error.hpp"

namespace graver {

Monomial KernelVector::positive_part() const {
  Monomial m(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e)
    if (entries[e] > 0) m[e] = static_cast<Exponent>(entries[e]);
  return m;
}

Monomial KernelVector::negative_part() const {
  Monomial m(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e)
    if (entries[e] < 0) m[e] = static_cast<Exponent>(-entries[e]);
  return m;
}

Binomial KernelVector::binomial() const { return Binomial(positive_part(), negative_part()); }

std::vector<int> KernelVector::support() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < entries.size(); ++e)
    if (entries[e] != 0) out.push_back(static_cast<int>(e));
  return out;
}

int KernelVector::l1_norm() const {
  int s = 0;
  for (int x : entries) s += std::abs(x);
  return s;
}

namespace {

__extension__ typedef __int128 Wide;

/// Edge order in which vertices get completed early: BFS rank of the later
/// endpoint, then of the earlier one.
std::vector<int> completion_order(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> rank(n + 1, -1);
  int next = 0;
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (rank[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    rank[static_cast<std::size_t>(s)] = next++;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v))
        if (rank[static_cast<std::size_t>(inc.neighbor)] < 0) {
          rank[static_cast<std::size_t>(inc.neighbor)] = next++;
          q.push(inc.neighbor);
        }
    }
  }
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int e) {
    int a = rank[static_cast<std::size_t>(g.edge(e).u)], b = rank[static_cast<std::size_t>(g.edge(e).v)];
    return std::pair{std::max(a, b), std::min(a, b)};
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
  return order;
}

class KernelSearch {
 public:
  KernelSearch(const Graph& g, int bound, std::size_t cap)
      : g_(g), bound_(bound), cap_(cap), order_(completion_order(g)),
        value_(static_cast<std::size_t>(g.edge_count()), 0),
        residual_(static_cast<std::size_t>(g.vertex_count()) + 1, 0),
        remaining_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {
    for (int v = 1; v <= g.vertex_count(); ++v) remaining_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  std::vector<KernelVector> run() {
    recurse(0, true);
    for (KernelVector& kv : out_) {
      auto first = std::find_if(kv.entries.begin(), kv.entries.end(), [](int x) { return x != 0; });
      if (*first < 0)
        for (int& x : kv.entries) x = -x;
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool feasible(int v) const {
    const auto i = static_cast<std::size_t>(v);
    return std::abs(residual_[i]) <= bound_ * remaining_[i];
  }

  void recurse(std::size_t idx, bool all_zero) {
    if (idx == order_.size()) {
      if (all_zero) return;
      out_.push_back(KernelVector{value_});
      if (out_.size() > cap_) throw CapExceeded("kernel enumeration exceeded cap of " + std::to_string(cap_));
      return;
    }
    const int e = order_[idx];
    const auto u = static_cast<std::size_t>(g_.edge(e).u), v = static_cast<std::size_t>(g_.edge(e).v);
    --remaining_[u];
    --remaining_[v];
    for (int x = all_zero ? 0 : -bound_; x <= bound_; ++x) {
      residual_[u] += x;
      residual_[v] += x;
      if (feasible(static_cast<int>(u)) && feasible(static_cast<int>(v))) {
        value_[static_cast<std::size_t>(e)] = x;
        recurse(idx + 1, all_zero && x == 0);
        value_[static_cast<std::size_t>(e)] = 0;
      }
      residual_[u] -= x;
      residual_[v] -= x;
    }
    ++remaining_[u];
    ++remaining_[v];
  }

  const Graph& g_;
  int bound_;
  std::size_t cap_;
  std::vector<int> order_;
  std::vector<int> value_;
  std::vector<int> residual_;
  std::vector<int> remaining_;
  std::vector<KernelVector> out_;
};

bool conformal_below(const KernelVector& a, const KernelVector& b) {
  for (std::size_t e = 0; e < a.entries.size(); ++e) {
    const int x = a.entries[e], y = b.entries[e];
    if (x == 0) continue;
    if ((x > 0) != (y > 0) || y == 0 || std::abs(x) > std::abs(y)) return false;
  }
  return true;
}

KernelVector negate(KernelVector v) {
  for (int& x : v.entries) x = -x;
  return v;
}

Monomial apply_move(const Monomial& m, const Monomial& from, const Monomial& to) {
  Monomial out = m;
  for (std::size_t e = 0; e < m.size(); ++e) out[e] = static_cast<Exponent>(out[e] - from[e] + to[e]);
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("systems count exceeds 64 bits");
  return r;
}

}  // namespace

std::vector<KernelVector> bounded_kernel_vectors(const Graph& g, int bound, std::size_t cap) {
  if (bound < 1) throw std::invalid_argument("kernel bound must be at least 1");
  return KernelSearch(g, bound, cap).run();
}

std::vector<Binomial> graver_oracle(const Graph& g, int bound) {
  if (bound < 1) throw std::invalid_argument("kernel bound must be at least 1");
  std::vector<KernelVector> vs = bounded_kernel_vectors(g, bound);
  std::stable_sort(vs.begin(), vs.end(), [](const KernelVector& a, const KernelVector& b) {
    return a.l1_norm() < b.l1_norm();
  });
  std::vector<KernelVector> accepted;
  for (const KernelVector& u : vs) {
    bool primitive = true;
    for (const KernelVector& a : accepted)
      if (conformal_below(a, u) || conformal_below(negate(a), u)) {
        primitive = false;
        break;
      }
    if (primitive) accepted.push_back(u);
  }
  std::vector<Binomial> out;
  out.reserve(accepted.size());
  for (const KernelVector& a : accepted) out.push_back(a.binomial());
  sort_canonical(out);
  return out;
}

std::vector<Binomial> graver_oracle_checked(const Graph& g) {
  std::vector<Binomial> two = graver_oracle(g, 2);
  if (graver_oracle(g, 3) != two)
    throw OracleBoundError("bound-3 kernel pass changes the Graver set; exponent bound 2 is not sufficient");
  return two;
}

std::vector<Monomial> fiber(const Graph& g, const ADegree& d, std::size_t cap) {
  if (d.counts.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("degree vector length does not match the vertex count");
  const std::vector<int> order = completion_order(g);
  std::vector<int> residual(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<int> remaining(residual.size(), 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    residual[static_cast<std::size_t>(v)] = d.at_vertex(v);
    remaining[static_cast<std::size_t>(v)] = g.degree(v);
    if (d.at_vertex(v) < 0 || (g.degree(v) == 0 && d.at_vertex(v) != 0)) return {};
  }
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(g.edge_count()));
  auto recurse = [&](auto& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      out.push_back(cur);
      if (out.size() > cap) throw CapExceeded("fiber exceeded cap of " + std::to_string(cap));
      return;
    }
    const int e = order[idx];
    const auto u = static_cast<std::size_t>(g.edge(e).u), v = static_cast<std::size_t>(g.edge(e).v);
    --remaining[u];
    --remaining[v];
    const int top = std::min(residual[u], residual[v]);
    for (int x = 0; x <= top; ++x) {
      if ((remaining[u] == 0 && residual[u] != x) || (remaining[v] == 0 && residual[v] != x)) continue;
      residual[u] -= x;
      residual[v] -= x;
      cur[static_cast<std::size_t>(e)] = static_cast<Exponent>(x);
      self(self, idx + 1);
      cur[static_cast<std::size_t>(e)] = 0;
      residual[u] += x;
      residual[v] += x;
    }
    ++remaining[u];
    ++remaining[v];
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t weighted_spanning_trees(std::span<const std::size_t> part_sizes) {
  const std::size_t k = part_sizes.size();
  if (k <= 1) return 1;
  const auto total = static_cast<Wide>(std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0}));
  // Reduced Laplacian: drop the last part.
  const std::size_t n = k - 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto si = static_cast<Wide>(part_sizes[i]), sj = static_cast<Wide>(part_sizes[j]);
      a[i][j] = i == j ? si * (total - si) : -si * sj;
    }
  auto mul = [](Wide x, Wide y) {
    Wide r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("spanning tree determinant overflow");
    return r;
  };
  // Bareiss fraction-free elimination; the matrix is positive definite, so
  // pivots never vanish.
  Wide prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) a[i][j] = (mul(a[i][j], a[p][p]) - mul(a[i][p], a[p][j])) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  Wide det = a[n - 1][n - 1];
  if (det < 0 || det > static_cast<Wide>(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("spanning tree count exceeds 64 bits");
  return static_cast<std::uint64_t>(det);
}

MinimalGeneration minimal_generation(const Graph& g, std::size_t fiber_cap) {
  const std::vector<Binomial> graver = graver_oracle_checked(g);
  std::vector<ADegree> degrees;
  for (const Binomial& b : graver) degrees.push_back(b.degree(g));
  std::sort(degrees.begin(), degrees.end(), [](const ADegree& x, const ADegree& y) {
    return std::pair{x.total(), x.counts} < std::pair{y.total(), y.counts};
  });
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  MinimalGeneration out;
  for (const ADegree& d : degrees) {
    FiberRecord rec{d, fiber(g, d, fiber_cap), {}, 0};
    const std::size_t size = rec.monomials.size();
    DisjointSets sets(size);
    for (std::size_t i = 0; i < size; ++i) {
      const Monomial& m = rec.monomials[i];
      for (const Binomial& gen : out.generators)
        for (auto [from, to] : {std::pair{&gen.plus(), &gen.minus()}, std::pair{&gen.minus(), &gen.plus()}}) {
          if (!divides(*from, m)) continue;
          const Monomial moved = apply_move(m, *from, *to);
          auto it = std::lower_bound(rec.monomials.begin(), rec.monomials.end(), moved);
          if (it == rec.monomials.end() || *it != moved) throw std::logic_error("move left its fiber");
          sets.unite(i, static_cast<std::size_t>(it - rec.monomials.begin()));
        }
    }
    std::map<std::size_t, int> ids;
    rec.component.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      auto [it, fresh] = ids.try_emplace(sets.find(i), static_cast<int>(ids.size()));
      rec.component[i] = it->second;
    }
    rec.component_count = static_cast<int>(ids.size());
    const int k = rec.component_count;
    if (k >= 2) {
      out.mu += k - 1;
      std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < size; ++i) members[static_cast<std::size_t>(rec.component[i])].push_back(i);
      for (int c = 1; c < k; ++c)
        out.generators.push_back(
            Binomial(rec.monomials[members[0].front()], rec.monomials[members[static_cast<std::size_t>(c)].front()]));
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
          if (rec.component[i] != rec.component[j])
            out.minimal_set.push_back(Binomial(rec.monomials[i], rec.monomials[j]).canonical());
      if (k == 2 && size == 2) out.indispensable_set.push_back(Binomial(rec.monomials[0], rec.monomials[1]).canonical());
      std::vector<std::size_t> sizes;
      for (const auto& mem : members) sizes.push_back(mem.size());
      out.systems_count = checked_mul(out.systems_count, weighted_spanning_trees(sizes));
    }
    out.fibers.push_back(std::move(rec));
  }
  sort_canonical(out.minimal_set);
  sort_canonical(out.indispensable_set);
  for (const Binomial& b : out.minimal_set)
    if (!std::binary_search(graver.begin(), graver.end(), b, [](const Binomial& x, const Binomial& y) {
          return std::pair{x.total_degree(), to_string(x)} < std::pair{y.total_degree(), to_string(y)};
        }))
      throw std::logic_error("minimal binomial " + to_string(b) + " is not in the Graver oracle set");
  return out;
}

bool circuit_oracle(const Graph& g, const Binomial& b) {
  if (b.edge_count() != static_cast<std::size_t>(g.edge_count()) || !b.is_homogeneous(g))
    throw std::invalid_argument("binomial is not in the toric ideal of the graph");
  EdgeMask mask(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : support(b)) mask[static_cast<std::size_t>(e)] = true;
  const Subgraph sub = edge_subgraph(g, mask);
  for (const KernelVector& v : bounded_kernel_vectors(sub.graph, 3))
    if (v.support().size() < static_cast<std::size_t>(sub.graph.edge_count())) return false;
  return true;
}

bool fundamental_oracle(const Graph& g, const ClosedWalk& w) {
  const Binomial b = binomial_of(g, w);
  const Subgraph region = induced_region(g, w);
  const std::size_t m = region.edges.size();
  Monomial plus(m), minus(m);
  for (std::size_t i = 0; i < m; ++i) {
    plus[i] = b.plus()[static_cast<std::size_t>(region.edges[i])];
    minus[i] = b.minus()[static_cast<std::size_t>(region.edges[i])];
  }
  const Binomial local = Binomial(std::move(plus), std::move(minus)).canonical();
  const MinimalGeneration mg = minimal_generation(region.graph);
  return mg.mu == 1 && mg.minimal_set.size() == 1 && mg.minimal_set.front() == local;
}

}  // namespace graver
