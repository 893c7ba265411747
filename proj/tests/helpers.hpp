#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "graver/binomial.hpp"
#include "graver/fixtures.hpp"
#include "graver/graph.hpp"
#include "graver/walk.hpp"

namespace graver::testing {

inline ClosedWalk walk(const Graph& g, std::string_view labels) { return ClosedWalk::parse(g, labels); }

inline Binomial bin(const Graph& g, std::string_view text) {
  return parse_binomial(text, static_cast<std::size_t>(g.edge_count()));
}

inline Graph cycle_graph(int n, std::vector<Edge> chords = {}) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
  es.push_back({n, 1});
  es.insert(es.end(), chords.begin(), chords.end());
  return Graph(n, es);
}

inline std::string cycle_labels(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += (i > 1 ? ",e" : "e") + std::to_string(i);
  return s;
}

inline std::vector<int> edges_of(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int e : one_based) out.push_back(e - 1);
  return out;
}

inline std::set<std::string> strings(const std::vector<Binomial>& bs) {
  std::set<std::string> out;
  for (const Binomial& b : bs) out.insert(canonical_string(b));
  return out;
}

// Listed primitive binomials of the reconstructed worked example, in the
// table order.
inline const std::vector<std::string>& ex416_listed() {
  static const std::vector<std::string> list = {
      "e2*e12 - e13*e14",
      "e2*e11 - e3*e13",
      "e3*e12 - e11*e14",
      "e4*e9 - e5*e10",
      "e1*e3^2*e5^2*e7 - e2*e4^2*e6*e8*e14",
      "e1*e3^2*e7*e9^2 - e2*e6*e8*e10^2*e14",
      "e1*e5^2*e7*e11^2 - e4^2*e6*e8*e12*e13",
      "e1*e7*e9^2*e11^2 - e6*e8*e10^2*e12*e13",
      "e1*e3^2*e5*e7*e9 - e2*e4*e6*e8*e10*e14",
      "e1*e5*e7*e9*e11^2 - e4*e6*e8*e10*e12*e13",
      "e1*e3*e5^2*e7*e11 - e2*e4^2*e6*e8*e12",
      "e1*e3*e7*e9^2*e11 - e2*e6*e8*e10^2*e12",
      "e1*e3*e5*e7*e9*e11 - e2*e4*e6*e8*e10*e12",
      "e1*e3*e5^2*e7*e11 - e4^2*e6*e8*e13*e14",
      "e1*e3*e7*e9^2*e11 - e6*e8*e10^2*e13*e14",
      "e1*e3*e5*e7*e9*e11 - e4*e6*e8*e10*e13*e14",
      "e1*e7*e9^2*e11^2*e14 - e2*e6*e8*e10^2*e12^2",
      "e1*e5^2*e7*e11^2*e14 - e2*e4^2*e6*e8*e12^2",
      "e1*e5*e7*e9*e11^2*e14 - e2*e4*e6*e8*e10*e12^2",
      "e1*e3^2*e7*e9^2*e13 - e2^2*e6*e8*e10^2*e12",
      "e1*e3^2*e5^2*e7*e13 - e2^2*e4^2*e6*e8*e12",
      "e1*e3^2*e5*e7*e9*e13 - e2^2*e4*e6*e8*e10*e12",
  };
  return list;
}

}  // namespace graver::testing
