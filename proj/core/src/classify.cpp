#include "graver/classify.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "graver/error.hpp"

namespace graver {

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::EvenCycle: return "even-cycle";
    case Shape::TwoOddCyclesSharedVertex: return "odd-cycles-shared-vertex";
    case Shape::TwoOddCyclesTwoWalks: return "odd-cycles-two-walks";
    case Shape::NotPrimitive: return "not-primitive";
  }
  return "?";
}

std::string_view to_string(CircuitKind k) {
  switch (k) {
    case CircuitKind::None: return "none";
    case CircuitKind::EvenCycle: return "even-cycle";
    case CircuitKind::OddCyclesSharedVertex: return "odd-cycles-shared-vertex";
    case CircuitKind::OddCyclesJoinedByPath: return "odd-cycles-path";
  }
  return "?";
}

std::string_view to_string(ChordKind k) {
  switch (k) {
    case ChordKind::Bridge: return "bridge";
    case ChordKind::Even: return "even";
    case ChordKind::Odd: return "odd";
  }
  return "?";
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::OddWalk: return "odd-walk";
    case Violation::NotIrreducible: return "not-irreducible";
    case Violation::BlockNotCycleOrCutEdge: return "block-not-cycle-or-cut-edge";
    case Violation::RepeatedEdgeNotDoubleCutEdge: return "repeated-edge-not-double-cut-edge";
    case Violation::CutVertexBlockCount: return "cut-vertex-block-count";
    case Violation::CutVertexNotSink: return "cut-vertex-not-sink";
    case Violation::DoubledNotCutEdges: return "doubled-not-cut-edges";
    case Violation::PartParity: return "part-parity";
    case Violation::NoEvenClosedWalk: return "no-even-closed-walk";
    case Violation::AdjacentSinks: return "adjacent-sinks";
    case Violation::BridgeChord: return "bridge-chord";
    case Violation::EvenChord: return "even-chord";
    case Violation::StronglyEffectiveCrossing: return "strongly-effective-crossing";
    case Violation::ChordCrossesF4: return "chord-crosses-f4";
    case Violation::EffectiveCrossing: return "effective-crossing";
    case Violation::NotCircuit: return "not-circuit";
    case Violation::ChordOnNonCycle: return "chord-on-non-cycle";
    case Violation::SeveralOddChords: return "several-odd-chords";
  }
  return "?";
}

std::string_view describe(Violation v) {
  switch (v) {
    case Violation::None: return "all conditions hold";
    case Violation::OddWalk: return "the walk has odd length, so it defines no binomial";
    case Violation::NotIrreducible: return "an edge occurs at both odd and even positions, so the binomial is reducible";
    case Violation::BlockNotCycleOrCutEdge: return "every block of the walk's graph must be a cycle or a cut edge";
    case Violation::RepeatedEdgeNotDoubleCutEdge:
      return "every repeated edge must be walked exactly twice and be a cut edge of the walk's graph";
    case Violation::CutVertexBlockCount: return "every cut vertex must lie in exactly two blocks";
    case Violation::CutVertexNotSink: return "every cut vertex must be a sink of both of its blocks";
    case Violation::DoubledNotCutEdges: return "the doubled edges must be exactly the cut edges";
    case Violation::PartParity:
      return "each side of a cut vertex must carry an odd number of cycle edges";
    case Violation::NoEvenClosedWalk: return "a graph without cut vertices must be a single even cycle";
    case Violation::AdjacentSinks: return "no cyclic block may contain two sinks joined by an edge";
    case Violation::BridgeChord: return "the walk has a bridge (a chord joining two different blocks)";
    case Violation::EvenChord: return "the walk has an even chord (it breaks the walk into two even walks)";
    case Violation::StronglyEffectiveCrossing:
      return "two odd chords cross effectively without forming an F4";
    case Violation::ChordCrossesF4: return "an odd chord crosses an F4 of the walk";
    case Violation::EffectiveCrossing: return "two odd chords cross effectively";
    case Violation::NotCircuit:
      return "the walk is not an even cycle, two odd cycles sharing a vertex, or two disjoint odd cycles joined by a path";
    case Violation::ChordOnNonCycle: return "a circuit that is not a cycle must have no chords";
    case Violation::SeveralOddChords: return "a cycle may have at most one odd chord";
  }
  return "?";
}

namespace {

Witness make_witness(Violation v, std::vector<int> edges = {}, std::vector<int> vertices = {},
                     std::vector<int> blocks = {}) {
  return Witness{v, std::move(edges), std::move(vertices), std::move(blocks)};
}

/// Structural data of one walk, computed once and shared by the checks.
class WalkAnalysis {
 public:
  WalkAnalysis(const Graph& g, const ClosedWalk& w)
      : g_(g), w_(w), mask_(support_mask(g, w)), mult_(edge_multiplicities(g, w)), wb_(blocks(g, mask_)) {
    if (!w.is_even()) throw WalkError(WalkError::Kind::OddWalk, "walk has odd length");
    sinks_ = sinks(g, w, wb_);
    first_step_.assign(static_cast<std::size_t>(g.edge_count()), -1);
    for (std::size_t i = 0; i < w.length(); ++i) {
      auto& slot = first_step_[static_cast<std::size_t>(w.steps()[i].edge)];
      if (slot < 0) slot = static_cast<int>(i);
    }
    primitive_ = compute_primitive();
  }

  const Verdict& primitive() const { return primitive_; }
  const BlockDecomposition& wb() const { return wb_; }
  const std::vector<Sink>& sink_list() const { return sinks_; }
  const EdgeMask& mask() const { return mask_; }

  void require_primitive() const {
    if (!primitive_)
      throw WalkError(WalkError::Kind::NotPrimitive,
                      "walk is not primitive: " + std::string(describe(primitive_.witness.violation)));
  }

  std::size_t cyclic_block_count() const {
    std::size_t n = 0;
    for (std::size_t b = 0; b < wb_.size(); ++b) n += wb_.is_cycle(b) ? 1 : 0;
    return n;
  }

  CircuitKind circuit() const {
    if (!primitive_) return CircuitKind::None;
    switch (cyclic_block_count()) {
      case 1: return CircuitKind::EvenCycle;
      case 2: return wb_.size() == 2 ? CircuitKind::OddCyclesSharedVertex : CircuitKind::OddCyclesJoinedByPath;
      default: return CircuitKind::None;
    }
  }

  Shape shape() const {
    require_primitive();
    if (cyclic_block_count() == 1) return Shape::EvenCycle;
    if (wb_.size() == 2 && wb_.is_cycle(0) && wb_.is_cycle(1)) return Shape::TwoOddCyclesSharedVertex;
    return Shape::TwoOddCyclesTwoWalks;
  }

  Verdict strongly_primitive() const {
    require_primitive();
    for (std::size_t b = 0; b < wb_.size(); ++b) {
      if (!wb_.is_cycle(b)) continue;
      auto is_sink = [&](int v) {
        return std::binary_search(sinks_.begin(), sinks_.end(), Sink{v, static_cast<int>(b)});
      };
      for (int e : wb_.blocks[b]) {
        const Edge& edge = g_.edge(e);
        if (is_sink(edge.u) && is_sink(edge.v))
          return Verdict::no(make_witness(Violation::AdjacentSinks, {e}, {edge.u, edge.v}, {static_cast<int>(b)}));
      }
    }
    return Verdict::yes();
  }

  const std::vector<Chord>& chords() {
    require_primitive();
    if (!chords_) chords_ = compute_chords();
    return *chords_;
  }

  const std::vector<F4>& f4_list() {
    if (!f4s_) f4s_ = compute_f4s();
    return *f4s_;
  }

  /// Parity class (0 or 1) of a walk edge.
  int edge_class(int e) const { return first_step_[static_cast<std::size_t>(e)] % 2; }
  int first_step(int e) const { return first_step_[static_cast<std::size_t>(e)]; }

  /// Shared prefix of the minimal and indispensable criteria.
  Verdict chords_all_odd() {
    if (!primitive_) return primitive_;
    if (Verdict sp = strongly_primitive(); !sp) return sp;
    for (const Chord& c : chords())
      if (c.kind == ChordKind::Bridge) return Verdict::no(make_witness(Violation::BridgeChord, {c.edge}, {c.u, c.v}));
    for (const Chord& c : chords())
      if (c.kind == ChordKind::Even)
        return Verdict::no(make_witness(Violation::EvenChord, {c.edge}, {c.u, c.v}, {c.block}));
    return Verdict::yes();
  }

  Verdict minimal() {
    if (Verdict v = chords_all_odd(); !v) return v;
    const auto& cs = chords();
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t k = i + 1; k < cs.size(); ++k)
        if (cross_effectively(cs[i], cs[k]) && !forms_f4(cs[i].edge, cs[k].edge))
          return Verdict::no(make_witness(Violation::StronglyEffectiveCrossing, {cs[i].edge, cs[k].edge}));
    for (const F4& q : f4_list())
      for (const Chord& c : cs)
        if (chord_crosses_f4(c, q))
          return Verdict::no(make_witness(Violation::ChordCrossesF4,
                                          {c.edge, q.walk_edge, q.chord, q.other_walk_edge, q.other_chord}));
    return Verdict::yes();
  }

  Verdict indispensable() {
    if (Verdict v = chords_all_odd(); !v) return v;
    const auto& cs = chords();
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t k = i + 1; k < cs.size(); ++k)
        if (cross_effectively(cs[i], cs[k]))
          return Verdict::no(make_witness(Violation::EffectiveCrossing, {cs[i].edge, cs[k].edge}));
    return Verdict::yes();
  }

  Verdict fundamental() {
    const CircuitKind kind = circuit();
    if (kind == CircuitKind::None) {
      if (!primitive_) return primitive_;
      return Verdict::no(make_witness(Violation::NotCircuit));
    }
    const auto& cs = chords();
    if (cs.empty()) return Verdict::yes();
    if (kind != CircuitKind::EvenCycle) {
      return Verdict::no(make_witness(Violation::ChordOnNonCycle, {cs.front().edge}));
    }
    std::vector<int> odd;
    for (const Chord& c : cs) {
      if (c.kind == ChordKind::Even) return Verdict::no(make_witness(Violation::EvenChord, {c.edge}, {c.u, c.v}));
      if (c.kind == ChordKind::Bridge) return Verdict::no(make_witness(Violation::BridgeChord, {c.edge}, {c.u, c.v}));
      odd.push_back(c.edge);
    }
    if (odd.size() > 1) return Verdict::no(make_witness(Violation::SeveralOddChords, odd));
    return Verdict::yes();
  }

  bool forms_f4(int f, int f2) {
    return std::any_of(f4_list().begin(), f4_list().end(), [&](const F4& q) { return q.uses_chords(f, f2); });
  }

 private:
  Verdict compute_primitive() const {
    std::vector<int> first_parity(static_cast<std::size_t>(g_.edge_count()), -1);
    for (std::size_t i = 0; i < w_.length(); ++i) {
      const int e = w_.steps()[i].edge;
      int& p = first_parity[static_cast<std::size_t>(e)];
      if (p < 0) p = static_cast<int>(i % 2);
      else if (p != static_cast<int>(i % 2)) return Verdict::no(make_witness(Violation::NotIrreducible, {e}));
    }
    for (std::size_t b = 0; b < wb_.size(); ++b)
      if (!wb_.is_single_edge(b) && !wb_.is_cycle(b))
        return Verdict::no(make_witness(Violation::BlockNotCycleOrCutEdge, wb_.blocks[b], {}, {static_cast<int>(b)}));
    for (int e = 0; e < g_.edge_count(); ++e) {
      const int m = mult_[static_cast<std::size_t>(e)];
      if (m <= 1) continue;
      if (m != 2 || !wb_.is_single_edge(static_cast<std::size_t>(wb_.edge_block[static_cast<std::size_t>(e)])))
        return Verdict::no(make_witness(Violation::RepeatedEdgeNotDoubleCutEdge, {e}));
    }
    for (int v : wb_.cut_vertices) {
      const auto& vb = wb_.vertex_blocks[static_cast<std::size_t>(v)];
      if (vb.size() != 2) return Verdict::no(make_witness(Violation::CutVertexBlockCount, {}, {v}, vb));
      for (int b : vb)
        if (!std::binary_search(sinks_.begin(), sinks_.end(), Sink{v, b}))
          return Verdict::no(make_witness(Violation::CutVertexNotSink, {}, {v}, {b}));
    }
    return Verdict::yes();
  }

  std::vector<Chord> compute_chords() const {
    const auto n = static_cast<std::size_t>(g_.vertex_count());
    std::vector<std::vector<int>> positions(n + 1);
    for (std::size_t i = 0; i < w_.length(); ++i)
      positions[static_cast<std::size_t>(w_.vertices()[i])].push_back(static_cast<int>(i));
    std::vector<Chord> out;
    for (int f = 0; f < g_.edge_count(); ++f) {
      if (mask_[static_cast<std::size_t>(f)]) continue;
      const Edge& e = g_.edge(f);
      const auto& pu = positions[static_cast<std::size_t>(e.u)];
      const auto& pv = positions[static_cast<std::size_t>(e.v)];
      if (pu.empty() || pv.empty()) continue;
      Chord c;
      c.edge = f;
      c.u = e.u;
      c.v = e.v;
      c.u_positions = pu;
      c.v_positions = pv;
      const auto& bu = wb_.vertex_blocks[static_cast<std::size_t>(e.u)];
      const auto& bv = wb_.vertex_blocks[static_cast<std::size_t>(e.v)];
      if (!(bu.size() == 1 && bv.size() == 1 && bu[0] == bv[0])) {
        c.kind = ChordKind::Bridge;
        out.push_back(std::move(c));
        continue;
      }
      c.block = bu[0];
      c.kind = ChordKind::Even;
      c.first = std::min(pu.front(), pv.front());
      c.second = std::max(pu.front(), pv.front());
      for (int i : pu)
        for (int j : pv)
          if (c.kind == ChordKind::Even && (i - j) % 2 == 0) {
            c.kind = ChordKind::Odd;
            c.first = std::min(i, j);
            c.second = std::max(i, j);
          }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<F4> compute_f4s() {
    std::vector<const Chord*> odd;
    for (const Chord& c : chords())
      if (c.kind == ChordKind::Odd) odd.push_back(&c);
    std::vector<F4> out;
    const std::size_t len = w_.length();
    auto try_pairing = [&](const Chord& f, const Chord& f2, int a, int c, int b, int d) {
      auto e1 = g_.find_edge(a, c);
      auto e2 = g_.find_edge(b, d);
      if (!e1 || !e2 || *e1 == *e2) return;
      if (!mask_[static_cast<std::size_t>(*e1)] || !mask_[static_cast<std::size_t>(*e2)]) return;
      if (edge_class(*e1) != edge_class(*e2)) return;
      F4 q;
      q.walk_edge = std::min(*e1, *e2);
      q.other_walk_edge = std::max(*e1, *e2);
      q.chord = std::min(f.edge, f2.edge);
      q.other_chord = std::max(f.edge, f2.edge);
      int p = first_step(*e1), r = first_step(*e2);
      if (p > r) std::swap(p, r);
      for (auto k = static_cast<std::size_t>(p) + 1; k <= static_cast<std::size_t>(r); ++k)
        q.side_b.push_back(w_.vertices()[k]);
      for (auto k = static_cast<std::size_t>(r) + 1; k <= static_cast<std::size_t>(p) + len; ++k)
        q.side_a.push_back(w_.vertices()[k % len]);
      for (auto* side : {&q.side_a, &q.side_b}) {
        std::sort(side->begin(), side->end());
        side->erase(std::unique(side->begin(), side->end()), side->end());
      }
      out.push_back(std::move(q));
    };
    for (std::size_t i = 0; i < odd.size(); ++i)
      for (std::size_t k = i + 1; k < odd.size(); ++k) {
        const Chord& f = *odd[i];
        const Chord& f2 = *odd[k];
        if (!cross_effectively(f, f2)) continue;
        try_pairing(f, f2, f.u, f2.u, f.v, f2.v);
        try_pairing(f, f2, f.u, f2.v, f.v, f2.u);
      }
    std::sort(out.begin(), out.end(), [](const F4& x, const F4& y) {
      return std::tie(x.walk_edge, x.other_walk_edge, x.chord, x.other_chord) <
             std::tie(y.walk_edge, y.other_walk_edge, y.chord, y.other_chord);
    });
    return out;
  }

  const Graph& g_;
  const ClosedWalk& w_;
  EdgeMask mask_;
  std::vector<int> mult_;
  BlockDecomposition wb_;
  std::vector<Sink> sinks_;
  std::vector<int> first_step_;
  Verdict primitive_;
  std::optional<std::vector<Chord>> chords_;
  std::optional<std::vector<F4>> f4s_;
};

int part_cycle_edges(const BlockDecomposition& wb, int start_block, int cut_vertex) {
  std::vector<bool> seen(wb.size(), false);
  std::vector<int> stack{start_block};
  seen[static_cast<std::size_t>(start_block)] = true;
  int total = 0;
  while (!stack.empty()) {
    const auto b = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    if (wb.is_cycle(b)) total += static_cast<int>(wb.blocks[b].size());
    for (int c : wb.block_vertices[b]) {
      if (c == cut_vertex) continue;
      for (int b2 : wb.vertex_blocks[static_cast<std::size_t>(c)])
        if (!seen[static_cast<std::size_t>(b2)]) {
          seen[static_cast<std::size_t>(b2)] = true;
          stack.push_back(b2);
        }
    }
  }
  return total;
}

}  // namespace

Verdict check_primitive_walk(const Graph& g, const ClosedWalk& w) { return WalkAnalysis(g, w).primitive(); }

Verdict primitive_support_check(const Graph& w_graph, std::span<const int> doubled) {
  return primitive_support_check(w_graph, w_graph.full_mask(), doubled);
}

Verdict primitive_support_check(const Graph& g, const EdgeMask& support, std::span<const int> doubled) {
  std::vector<int> edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (support[static_cast<std::size_t>(e)]) edges.push_back(e);
  if (edges.empty()) throw GraphError("support has no edges");
  {
    Subgraph sub = edge_subgraph(g, support);
    if (!sub.graph.is_connected()) throw GraphError("support is disconnected");
  }
  const BlockDecomposition wb = blocks(g, support);
  for (std::size_t b = 0; b < wb.size(); ++b)
    if (!wb.is_single_edge(b) && !wb.is_cycle(b))
      return Verdict::no(make_witness(Violation::BlockNotCycleOrCutEdge, wb.blocks[b], {}, {static_cast<int>(b)}));
  std::vector<int> want(doubled.begin(), doubled.end());
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  if (want != wb.cut_edges) {
    std::vector<int> diff;
    std::set_symmetric_difference(want.begin(), want.end(), wb.cut_edges.begin(), wb.cut_edges.end(),
                                  std::back_inserter(diff));
    return Verdict::no(make_witness(Violation::DoubledNotCutEdges, diff));
  }
  for (int v : wb.cut_vertices) {
    const auto& vb = wb.vertex_blocks[static_cast<std::size_t>(v)];
    if (vb.size() != 2) return Verdict::no(make_witness(Violation::CutVertexBlockCount, {}, {v}, vb));
    for (int b : vb)
      if (part_cycle_edges(wb, b, v) % 2 == 0)
        return Verdict::no(make_witness(Violation::PartParity, {}, {v}, {b}));
  }
  if (wb.cut_vertices.empty() && !(wb.size() == 1 && wb.is_cycle(0) && wb.blocks[0].size() % 2 == 0))
    return Verdict::no(make_witness(Violation::NoEvenClosedWalk, edges));
  return Verdict::yes();
}

Shape shape_of_primitive(const Graph& g, const ClosedWalk& w) { return WalkAnalysis(g, w).shape(); }

Verdict is_strongly_primitive(const Graph& g, const ClosedWalk& w) { return WalkAnalysis(g, w).strongly_primitive(); }

std::vector<Chord> classify_chords(const Graph& g, const ClosedWalk& w) { return WalkAnalysis(g, w).chords(); }

bool cross_effectively(const Chord& f, const Chord& f2) {
  if (f.kind != ChordKind::Odd || f2.kind != ChordKind::Odd)
    throw WalkError(WalkError::Kind::NotOddChord, "effective crossing is defined for odd chords only");
  const int s = f.first, j = f.second, s2 = f2.first, j2 = f2.second;
  if ((s2 - s) % 2 == 0) return false;
  return (s < s2 && s2 < j && j < j2) || (s2 < s && s < j2 && j2 < j);
}

bool f4_index_criterion(const Chord& f, const Chord& f2, std::size_t walk_length) {
  const auto len = static_cast<int>(walk_length);
  auto adjacent = [len](int a, int b) { return ((a - b) % len + len) % len == 1 || ((b - a) % len + len) % len == 1; };
  return (adjacent(f2.first, f.second) && adjacent(f2.second, f.first)) ||
         (adjacent(f2.first, f.first) && adjacent(f2.second, f.second));
}

std::vector<F4> f4s(const Graph& g, const ClosedWalk& w) {
  WalkAnalysis a(g, w);
  a.require_primitive();
  return a.f4_list();
}

bool cross_strongly_effectively(const Graph& g, const ClosedWalk& w, const Chord& f, const Chord& f2) {
  if (!cross_effectively(f, f2)) return false;
  WalkAnalysis a(g, w);
  a.require_primitive();
  return !a.forms_f4(f.edge, f2.edge);
}

bool chord_crosses_f4(const Chord& f, const F4& q) {
  if (f.edge == q.chord || f.edge == q.other_chord) return false;
  auto in = [](const std::vector<int>& side, int v) { return std::binary_search(side.begin(), side.end(), v); };
  return (in(q.side_a, f.u) && in(q.side_b, f.v)) || (in(q.side_a, f.v) && in(q.side_b, f.u));
}

ClosedWalk f4_flip(const Graph& g, const ClosedWalk& w, const F4& q) {
  const std::size_t len = w.length();
  auto find_step = [&](int e) -> std::size_t {
    for (std::size_t i = 0; i < len; ++i)
      if (w.steps()[i].edge == e) return i;
    throw std::invalid_argument(g.label(e) + " is not an edge of the walk");
  };
  std::size_t p = find_step(q.walk_edge), r = find_step(q.other_walk_edge);
  if (p > r) std::swap(p, r);
  const int vp = w.vertices()[p], vp1 = w.vertices()[(p + 1) % len];
  const int vr = w.vertices()[r], vr1 = w.vertices()[(r + 1) % len];
  auto joins = [&](int c, int a, int b) { return g.edge(c).touches(a) && g.edge(c).touches(b); };
  int first_chord = -1, second_chord = -1;
  for (int c : {q.chord, q.other_chord}) {
    if (joins(c, vp, vr)) first_chord = c;
    else if (joins(c, vp1, vr1)) second_chord = c;
  }
  if (first_chord < 0 || second_chord < 0) throw std::invalid_argument("the 4-cycle is not an F4 of this walk");
  auto oriented = [&](int c, int from) { return Step{c, g.edge(c).u != from}; };

  std::vector<Step> steps;
  steps.reserve(len);
  for (std::size_t k = r + 1; k < p + len; ++k) steps.push_back(w.steps()[k % len]);
  steps.push_back(oriented(first_chord, vp));
  for (std::size_t k = r; k-- > p + 1;) steps.push_back({w.steps()[k].edge, !w.steps()[k].reversed});
  steps.push_back(oriented(second_chord, vp1));
  return ClosedWalk::make(g, std::move(steps), kUnboundedWalk);
}

std::vector<ClosedWalk> f4_class(const Graph& g, const ClosedWalk& w, std::size_t cap) {
  std::set<ClosedWalk> seen{w.canonical()};
  std::deque<ClosedWalk> queue{w.canonical()};
  while (!queue.empty()) {
    ClosedWalk cur = std::move(queue.front());
    queue.pop_front();
    for (const F4& q : f4s(g, cur)) {
      ClosedWalk next = f4_flip(g, cur, q).canonical();
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("F4 class exceeded cap of " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

CircuitKind circuit_kind(const Graph& g, const ClosedWalk& w) {
  if (!w.is_even()) return CircuitKind::None;
  return WalkAnalysis(g, w).circuit();
}

bool is_circuit_walk(const Graph& g, const ClosedWalk& w) { return circuit_kind(g, w) != CircuitKind::None; }

Verdict is_minimal_walk(const Graph& g, const ClosedWalk& w) {
  if (!w.is_even()) return Verdict::no(make_witness(Violation::OddWalk));
  return WalkAnalysis(g, w).minimal();
}

Verdict is_indispensable_walk(const Graph& g, const ClosedWalk& w) {
  if (!w.is_even()) return Verdict::no(make_witness(Violation::OddWalk));
  return WalkAnalysis(g, w).indispensable();
}

Verdict is_fundamental_walk(const Graph& g, const ClosedWalk& w) {
  if (!w.is_even()) return Verdict::no(make_witness(Violation::OddWalk));
  return WalkAnalysis(g, w).fundamental();
}

ClassificationReport classify_walk(const Graph& g, const ClosedWalk& w) {
  ClassificationReport r;
  auto fail_all = [&r](const Witness& why) {
    for (const char* flag : {"primitive", "strongly_primitive", "circuit", "minimal", "indispensable", "fundamental"})
      r.witnesses.push_back({flag, why});
  };
  if (!w.is_even()) {
    fail_all(make_witness(Violation::OddWalk));
    return r;
  }
  WalkAnalysis a(g, w);
  r.sinks = a.sink_list();
  if (!a.primitive()) {
    fail_all(a.primitive().witness);
    return r;
  }
  r.is_primitive = true;
  r.shape = a.shape();
  r.circuit = a.circuit();
  r.chords = a.chords();
  r.f4s = a.f4_list();

  auto record = [&r](const char* flag, const Verdict& v, bool& slot) {
    slot = v.holds;
    if (!v.holds) r.witnesses.push_back({flag, v.witness});
  };
  record("strongly_primitive", a.strongly_primitive(), r.is_strongly_primitive);
  r.is_circuit = r.circuit != CircuitKind::None;
  if (!r.is_circuit) r.witnesses.push_back({"circuit", make_witness(Violation::NotCircuit)});
  record("minimal", a.minimal(), r.is_minimal);
  record("indispensable", a.indispensable(), r.is_indispensable);
  record("fundamental", a.fundamental(), r.is_fundamental);
  return r;
}

std::string implication_violation(const ClassificationReport& r) {
  if (r.is_fundamental && !(r.is_indispensable && r.is_circuit)) return "fundamental but not indispensable and circuit";
  if (r.is_indispensable && !r.is_minimal) return "indispensable but not minimal";
  if (r.is_minimal && !r.is_strongly_primitive) return "minimal but not strongly primitive";
  if (r.is_strongly_primitive && !r.is_primitive) return "strongly primitive but not primitive";
  if (r.is_circuit && !r.is_primitive) return "circuit but not primitive";
  if (r.is_primitive && r.shape == Shape::NotPrimitive) return "primitive walk without a recognised shape";
  return {};
}

}  // namespace graver
