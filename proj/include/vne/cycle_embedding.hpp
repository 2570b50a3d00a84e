#pragma once

// Simplex embedding of cycle VNRs onto a substrate cycle.
//
// For a fixed start SN (hosting VN 0) and direction, the layered auxiliary
// graph has one layer per VN. Layer 0 holds only the start; layer j holds
// every SN that can host VN j. An arc joins consecutive layers when the head
// lies strictly further along the direction than the tail and every SL in
// between can carry the VL; its weight is hops * VL bandwidth. Closing arcs
// run from the last layer back to the start. Directed cycles correspond one
// to one with feasible simplex embeddings, and a cycle's weight is the
// embedding's total BW consumption.

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "vne/network.hpp"

namespace vne {

enum class Direction { Clockwise, Anticlockwise };

inline constexpr int step(Direction d) { return d == Direction::Clockwise ? 1 : -1; }
inline constexpr char symbol(Direction d) { return d == Direction::Clockwise ? '+' : '-'; }

// Ring order of a substrate that is a single cycle. Position 0 is node 0 and
// position 1 its lower-indexed neighbor; clockwise follows increasing
// position.
class SubstrateCycle {
 public:
  explicit SubstrateCycle(const SubstrateNetwork& net) {
    const int m = net.node_count();
    if (m < 3 || net.edge_count() != m) throw StructureError("substrate is not a cycle");
    for (NodeIndex v = 0; v < m; ++v) {
      if (net.degree(v) != 2) throw StructureError("substrate is not a cycle");
    }
    pos_.assign(m, kNone);
    NodeIndex prev = kNone, cur = 0;
    for (int p = 0; p < m; ++p) {
      if (pos_[cur] != kNone) throw StructureError("substrate is not a single cycle");
      pos_[cur] = p;
      ring_.push_back(cur);
      const auto inc = net.incident(cur);
      const Incidence next = (p == 0 || inc[0].neighbor != prev) ? inc[0] : inc[1];
      edges_.push_back(next.edge);
      prev = cur;
      cur = next.neighbor;
    }
    if (cur != 0) throw StructureError("substrate is not a single cycle");
  }

  int size() const { return static_cast<int>(ring_.size()); }
  NodeIndex node_at(int pos) const { return ring_[wrap(pos)]; }
  int position_of(NodeIndex v) const { return pos_.at(v); }
  // SL between ring positions pos and pos+1.
  EdgeIndex edge_after(int pos) const { return edges_[wrap(pos)]; }

 private:
  int wrap(int p) const {
    const int m = size();
    return ((p % m) + m) % m;
  }

  std::vector<NodeIndex> ring_;
  std::vector<EdgeIndex> edges_;
  std::vector<int> pos_;
};

// Seq(start, dir): every SN ordered by distance from start along dir.
class CyclicSequence {
 public:
  CyclicSequence(const SubstrateCycle& cycle, NodeIndex start, Direction dir)
      : cycle_(&cycle), start_pos_(cycle.position_of(start)), dir_(dir) {}

  int size() const { return cycle_->size(); }
  Direction direction() const { return dir_; }
  NodeIndex start() const { return cycle_->node_at(start_pos_); }
  NodeIndex at(int k) const { return cycle_->node_at(start_pos_ + step(dir_) * k); }
  int index_of(NodeIndex v) const {
    const int m = size();
    return (((cycle_->position_of(v) - start_pos_) * step(dir_)) % m + m) % m;
  }
  // SLs walked from sequence index a to b (a < b <= m).
  std::vector<EdgeIndex> segment(int a, int b) const {
    std::vector<EdgeIndex> out;
    for (int k = a; k < b; ++k) out.push_back(edge_step(k));
    return out;
  }
  // SL between sequence indices k and k+1.
  EdgeIndex edge_step(int k) const {
    return dir_ == Direction::Clockwise ? cycle_->edge_after(start_pos_ + k)
                                        : cycle_->edge_after(start_pos_ - k - 1);
  }

 private:
  const SubstrateCycle* cycle_;
  int start_pos_;
  Direction dir_;
};

// Residual-based feasible SNs per VN and feasible SLs per VL.
struct FeasibleSets {
  std::vector<std::vector<char>> node_ok;  // [vn][sn]
  std::vector<std::vector<char>> link_ok;  // [vl][sl]

  std::vector<NodeIndex> nodes_for(int vn) const {
    std::vector<NodeIndex> out;
    for (NodeIndex s = 0; s < static_cast<int>(node_ok[vn].size()); ++s) {
      if (node_ok[vn][s]) out.push_back(s);
    }
    return out;
  }
};

inline FeasibleSets feasible_sets(const SubstrateNetwork& net, const VirtualRequest& req) {
  FeasibleSets f;
  for (int k = 0; k < req.vn_count(); ++k) {
    auto& row = f.node_ok.emplace_back(net.node_count(), 0);
    for (NodeIndex s = 0; s < net.node_count(); ++s) row[s] = net.residual_cpu(s) >= req.cpu_demand(k);
  }
  for (int k = 0; k < req.vl_count(); ++k) {
    auto& row = f.link_ok.emplace_back(net.edge_count(), 0);
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) row[e] = net.residual_bw(e) >= req.vl(k).bw;
  }
  return f;
}

struct WdagArc {
  int tail;  // vertex index in layer `layer`
  int head;  // vertex index in layer `layer + 1`, or 0 in layer 0 for closing arcs
  int hops;
  Units weight;
};

struct Wdag {
  NodeIndex start = kNone;
  Direction dir = Direction::Clockwise;
  int ring_size = 0;
  std::vector<std::vector<NodeIndex>> layers;     // SN per vertex (the MP map), ascending
  std::vector<std::vector<int>> seq_index;        // Seq position per vertex
  std::vector<std::vector<WdagArc>> arcs;         // arcs[j] leave layer j; arcs.back() are closing arcs
  int dead_layer = kNone;                         // first layer left without indegree, if any

  int layer_count() const { return static_cast<int>(layers.size()); }
  std::size_t arc_count() const {
    std::size_t c = 0;
    for (const auto& a : arcs) c += a.size();
    return c;
  }
  std::size_t vertex_count() const {
    std::size_t c = 0;
    for (const auto& l : layers) c += l.size();
    return c;
  }
};

inline void require_cycle_request(const VirtualRequest& req) {
  if (req.shape() != Shape::Cycle) throw StructureError("expected a cycle request");
}

namespace detail {

inline bool segment_feasible(const CyclicSequence& seq, int a, int b, const std::vector<char>& link_ok) {
  for (int k = a; k < b; ++k) {
    if (!link_ok[seq.edge_step(k)]) return false;
  }
  return true;
}

inline Wdag build_wdag(const SubstrateCycle& cycle, const VirtualRequest& req, const FeasibleSets& f,
                       NodeIndex start, Direction dir) {
  if (!f.node_ok.at(0).at(start)) throw std::invalid_argument("start SN cannot host the first VN");
  const int n = req.vn_count();
  const int m = cycle.size();
  const CyclicSequence seq(cycle, start, dir);

  Wdag w;
  w.start = start;
  w.dir = dir;
  w.ring_size = m;
  w.layers.resize(n);
  w.seq_index.resize(n);
  w.arcs.resize(n);
  w.layers[0] = {start};
  w.seq_index[0] = {0};
  for (int j = 1; j < n; ++j) {
    w.layers[j] = f.nodes_for(j);
    for (NodeIndex s : w.layers[j]) w.seq_index[j].push_back(seq.index_of(s));
  }

  std::vector<int> indeg(1, 1);  // layer 0 counts as reached
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<int> next_indeg(w.layers[j + 1].size(), 0);
    const Units bw = req.vl(j).bw;
    for (int t = 0; t < static_cast<int>(w.layers[j].size()); ++t) {
      if (indeg[t] == 0) continue;
      const int from = w.seq_index[j][t];
      for (int h = 0; h < static_cast<int>(w.layers[j + 1].size()); ++h) {
        const int to = w.seq_index[j + 1][h];
        if (from >= to) continue;  // head must be strictly ahead
        if (!segment_feasible(seq, from, to, f.link_ok[j])) continue;
        w.arcs[j].push_back({t, h, to - from, (to - from) * bw});
        ++next_indeg[h];
      }
    }
    indeg = std::move(next_indeg);
    if (std::none_of(indeg.begin(), indeg.end(), [](int d) { return d > 0; })) {
      w.dead_layer = j + 1;
      return w;
    }
  }

  const Units bw = req.vl(n - 1).bw;
  for (int t = 0; t < static_cast<int>(w.layers[n - 1].size()); ++t) {
    if (indeg[t] == 0) continue;
    const int from = w.seq_index[n - 1][t];
    if (!segment_feasible(seq, from, m, f.link_ok[n - 1])) continue;
    w.arcs[n - 1].push_back({t, 0, m - from, (m - from) * bw});
  }
  return w;
}

}  // namespace detail

inline Wdag build_wdag(const SubstrateNetwork& net, const VirtualRequest& req, NodeIndex start, Direction dir) {
  require_cycle_request(req);
  const SubstrateCycle cycle(net);
  return detail::build_wdag(cycle, req, feasible_sets(net, req), start, dir);
}

struct WdagCycle {
  std::vector<int> vertices;  // one vertex index per layer
  Units weight = 0;
};

// Minimum-weight directed cycle through the start vertex. Cost-to-close is
// computed backwards layer by layer; the forward walk then takes the
// lowest-indexed SN among optimal successors.
inline std::optional<WdagCycle> min_weight_cycle(const Wdag& w) {
  const int n = w.layer_count();
  if (n == 0 || w.dead_layer != kNone || w.arcs.back().empty()) return std::nullopt;
  constexpr Units kInf = std::numeric_limits<Units>::max();
  std::vector<std::vector<Units>> togo(n);
  for (int j = 0; j < n; ++j) togo[j].assign(w.layers[j].size(), kInf);
  for (const auto& a : w.arcs[n - 1]) togo[n - 1][a.tail] = std::min(togo[n - 1][a.tail], a.weight);
  for (int j = n - 2; j >= 0; --j) {
    for (const auto& a : w.arcs[j]) {
      if (togo[j + 1][a.head] == kInf) continue;
      togo[j][a.tail] = std::min(togo[j][a.tail], a.weight + togo[j + 1][a.head]);
    }
  }
  if (togo[0][0] == kInf) return std::nullopt;

  WdagCycle c;
  c.weight = togo[0][0];
  c.vertices.push_back(0);
  for (int j = 0; j + 1 < n; ++j) {
    const int tail = c.vertices.back();
    int pick = kNone;
    for (const auto& a : w.arcs[j]) {
      if (a.tail != tail || togo[j + 1][a.head] == kInf) continue;
      if (a.weight + togo[j + 1][a.head] != togo[j][tail]) continue;
      if (pick == kNone || w.layers[j + 1][a.head] < w.layers[j + 1][pick]) pick = a.head;
    }
    c.vertices.push_back(pick);
  }
  return c;
}

// An embedding of a cycle VNR in one direction around the substrate cycle.
struct SimplexEmbedding {
  NodeIndex start = kNone;
  Direction dir = Direction::Clockwise;
  std::vector<NodeIndex> nodes;                 // host of VN j
  std::vector<std::vector<EdgeIndex>> segments;  // SLs of VL (j, j+1), walked along dir
  std::vector<int> hops;
  Units cost = 0;  // total BW consumption

  Embedding to_embedding() const {
    Embedding e;
    e.node_map = nodes;
    e.link_map = segments;
    return e;
  }
};

inline SimplexEmbedding map_cycle(const SubstrateNetwork& net, const VirtualRequest& req, const Wdag& w,
                                  const WdagCycle& c) {
  const SubstrateCycle cycle(net);
  const CyclicSequence seq(cycle, w.start, w.dir);
  const int n = w.layer_count();
  SimplexEmbedding s;
  s.start = w.start;
  s.dir = w.dir;
  for (int j = 0; j < n; ++j) s.nodes.push_back(w.layers[j][c.vertices[j]]);
  for (int j = 0; j < n; ++j) {
    const int from = w.seq_index[j][c.vertices[j]];
    const int to = j + 1 < n ? w.seq_index[j + 1][c.vertices[j + 1]] : w.ring_size;
    s.segments.push_back(seq.segment(from, to));
    s.hops.push_back(to - from);
    s.cost += (to - from) * req.vl(j).bw;
  }
  return s;
}

// Least-BW simplex embedding over every feasible start and both directions,
// or nothing when no simplex embedding exists. Equal costs keep the first
// found (lowest start SN, clockwise first).
inline std::optional<SimplexEmbedding> c2ce(const SubstrateNetwork& net, const VirtualRequest& req,
                                            const std::function<void(const Wdag&)>& on_wdag = {}) {
  require_cycle_request(req);
  const SubstrateCycle cycle(net);
  const auto f = feasible_sets(net, req);
  std::optional<SimplexEmbedding> best;
  for (NodeIndex start : f.nodes_for(0)) {
    for (Direction dir : {Direction::Clockwise, Direction::Anticlockwise}) {
      const Wdag w = detail::build_wdag(cycle, req, f, start, dir);
      if (on_wdag) on_wdag(w);
      const auto c = min_weight_cycle(w);
      if (c && (!best || c->weight < best->cost)) best = map_cycle(net, req, w, *c);
    }
  }
  return best;
}

using FallbackEmbedder = std::function<std::optional<Embedding>(const SubstrateNetwork&, const VirtualRequest&)>;

struct GreedyRevenueResult {
  EmbeddingBatch batch;
  std::vector<int> simplex;   // request indices accepted via C2CE, in commit order
  std::vector<int> fallback;  // accepted via the fallback embedder
};

// Revenue per unit of demanded CPU+BW, descending; ties by input order.
inline std::vector<int> revenue_ratio_order(std::span<const VirtualRequest> requests) {
  std::vector<int> order(requests.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = requests[a];
    const auto& y = requests[b];
    return static_cast<__int128>(x.revenue()) * (y.total_cpu() + y.total_bw()) >
           static_cast<__int128>(y.revenue()) * (x.total_cpu() + x.total_bw());
  });
  return order;
}

// Greedy Revenue: one C2CE pass in ratio order (residuals only shrink, so a
// request refused once stays refused), then the leftovers are offered once,
// in the same order, to the fallback embedder.
inline GreedyRevenueResult greedy_revenue(SubstrateNetwork& net, std::span<const VirtualRequest> requests,
                                          const FallbackEmbedder& fallback = {}) {
  for (const auto& r : requests) require_cycle_request(r);
  GreedyRevenueResult res{EmbeddingBatch(net), {}, {}};
  std::vector<int> refused;
  for (int j : revenue_ratio_order(requests)) {
    auto s = c2ce(net, requests[j]);
    if (!s) {
      refused.push_back(j);
      continue;
    }
    res.batch.commit_into(net, j, requests[j], s->to_embedding());
    res.simplex.push_back(j);
  }
  if (!fallback) return res;
  for (int j : refused) {
    auto e = fallback(net, requests[j]);
    if (!e) continue;
    res.batch.commit_into(net, j, requests[j], std::move(*e));
    res.fallback.push_back(j);
  }
  return res;
}

}  // namespace vne
