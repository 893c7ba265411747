#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "graver/error.hpp"
#include "graver/verify.hpp"
#include "helpers.hpp"

using namespace graver;

namespace {

// Minimum adjacency signature over all vertex permutations.
std::vector<int> brute_canonical(int n, const std::vector<Edge>& es) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> best;
  do {
    std::vector<int> sig;
    for (const Edge& e : es) {
      int a = perm[static_cast<std::size_t>(e.u - 1)], b = perm[static_cast<std::size_t>(e.v - 1)];
      sig.push_back(std::min(a, b) * 16 + std::max(a, b));
    }
    std::sort(sig.begin(), sig.end());
    if (best.empty() || sig < best) best = sig;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t brute_count(int m) {
  std::set<std::pair<int, std::vector<int>>> classes;
  for (int n = 2; n <= m + 1; ++n) {
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    if (static_cast<int>(all.size()) < m) continue;
    std::vector<bool> pick(all.size(), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (pick[i]) es.push_back(all[i]);
      const Graph g(n, es);
      bool isolated = false;
      for (int v = 1; v <= n; ++v) isolated |= g.degree(v) == 0;
      if (isolated || !g.is_connected()) continue;
      classes.insert({n, brute_canonical(n, es)});
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return classes.size();
}

}  // namespace

TEST(Census, MatchesPermutationBruteForce) {
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(connected_graphs(m).size(), brute_count(m)) << m;
}

TEST(Census, KnownCounts) {
  const std::vector<std::size_t> counts{1, 1, 3, 5, 12, 30, 79};
  for (int m = 1; m <= 7; ++m) EXPECT_EQ(connected_graphs(m).size(), counts[static_cast<std::size_t>(m - 1)]);
}

TEST(Census, Isomorphism) {
  const Graph path_a(4, {{1, 2}, {2, 3}, {3, 4}});
  const Graph path_b(4, {{2, 4}, {4, 1}, {1, 3}});
  const Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_TRUE(isomorphic(path_a, path_b));
  EXPECT_FALSE(isomorphic(path_a, star));
}

TEST(RandomGraphs, ConnectedAndBounded) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_connected_graph(rng, 9);
    EXPECT_TRUE(g.is_connected());
    EXPECT_LE(g.edge_count(), 9);
    EXPECT_GE(g.vertex_count(), 3);
  }
  std::mt19937_64 a(11), b(11);
  EXPECT_EQ(random_connected_graph(a, 9), random_connected_graph(b, 9));
}

TEST(Sweep, NoMismatchUpToSevenEdges) {
  const SweepReport r = verify_sweep(7, true);
  EXPECT_EQ(r.mismatch_count(), 0u);
  for (const GraphCheck& c : r.failures)
    for (const Discrepancy& d : c.mismatches) ADD_FAILURE() << c.name << " " << d.check << ": " << d.detail;
  EXPECT_GT(r.walks, 0u);
  EXPECT_GT(r.flips, 0u);
}

TEST(Sweep, RunsWithoutOracles) {
  VerifyOptions opt;
  opt.oracles = false;
  const GraphCheck c = verify_graph(graver::builtin_fixture("k4"), "k4", opt);
  EXPECT_TRUE(c.mismatches.empty());
  EXPECT_GT(c.walks, 0u);
  EXPECT_EQ(c.graver, 3u);
}
