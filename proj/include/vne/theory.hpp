#pragma once

// Exhaustive deciders for small graphs and brute-force embedding oracles.
// Everything here is exponential; each entry point enforces a hard size cap
// and throws SizeLimitError beyond it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "vne/cycle_embedding.hpp"
#include "vne/network.hpp"

namespace vne {

inline constexpr int kMaxTrailNodes = 12;
inline constexpr int kMaxBruteForceSubstrate = 8;
inline constexpr int kMaxSimplexRing = 8;
inline constexpr int kMaxSimplexVns = 5;
inline constexpr int kMaxCycleRank = 24;
inline constexpr int kMaxBruteForceRequests = 10;

namespace detail {

struct TrailSearch {
  int n;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge)
  std::vector<char> used;
  std::vector<int> visits;
  int distinct = 0;

  explicit TrailSearch(const Graph& g) : n(g.node_count), adj(g.node_count), used(g.edges.size(), 0), visits(n, 0) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
      adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
    }
  }

  // Every unvisited node must still be reachable over unused edges.
  bool can_finish(int from) const {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    int missing = n - distinct;
    while (!stack.empty() && missing > 0) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[u]) {
        if (used[e] || seen[w]) continue;
        seen[w] = 1;
        if (visits[w] == 0) --missing;
        stack.push_back(w);
      }
    }
    return missing == 0;
  }

  bool extend(int cur) {
    if (distinct == n) return true;
    if (!can_finish(cur)) return false;
    for (auto [w, e] : adj[cur]) {
      if (used[e]) continue;
      used[e] = 1;
      if (visits[w]++ == 0) ++distinct;
      const bool ok = extend(w);
      if (--visits[w] == 0) --distinct;
      used[e] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool run() {
    for (int s = 0; s < n; ++s) {
      visits[s] = 1;
      distinct = 1;
      const bool ok = extend(s);
      visits[s] = 0;
      distinct = 0;
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace detail

// One representative per isomorphism class of connected graphs on n nodes
// (canonical form = smallest edge bitmask over all relabelings).
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1) return {};
  if (n > 7) throw SizeLimitError("graph enumeration limited to 7 nodes");
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      slot_of[u][v] = slot_of[v][u] = static_cast<int>(slots.size());
      slots.emplace_back(u, v);
    }
  const int k = static_cast<int>(slots.size());
  std::vector<std::vector<int>> remap;  // per relabeling, slot -> slot
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> r(k);
    for (int s = 0; s < k; ++s) r[s] = slot_of[perm[slots[s].first]][perm[slots[s].second]];
    remap.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto to_graph = [&](std::uint32_t mask) {
    Graph g;
    g.node_count = n;
    for (int s = 0; s < k; ++s)
      if (mask >> s & 1) g.edges.push_back(slots[s]);
    return g;
  };
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    bool canonical = true;
    for (const auto& r : remap) {
      std::uint32_t img = 0;
      for (int s = 0; s < k; ++s)
        if (mask >> s & 1) img |= std::uint32_t{1} << r[s];
      if (img < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    Graph g = to_graph(mask);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

// True iff g has a trail (edge-simple walk) visiting every node, i.e. a
// spanning subgraph with an Eulerian trail.
inline bool has_spanning_trail(const Graph& g) {
  if (g.node_count > kMaxTrailNodes) {
    throw SizeLimitError("spanning trail search limited to " + std::to_string(kMaxTrailNodes) + " nodes");
  }
  if (!g.is_simple()) throw StructureError("graph is not simple");
  if (g.node_count <= 1) return true;
  if (!g.is_connected()) return false;
  return detail::TrailSearch(g).run();
}

// True iff g has a connected spanning subgraph whose degrees are all even.
// Enumerates the cycle space from a BFS spanning tree.
inline bool is_supereulerian(const Graph& g) {
  if (!g.is_simple()) throw StructureError("graph is not simple");
  const int n = g.node_count;
  const int m = static_cast<int>(g.edges.size());
  if (n <= 1) return true;
  if (!g.is_connected()) return false;
  if (m > 64 || m - n + 1 > kMaxCycleRank) throw SizeLimitError("supereulerian search: cycle space too large");

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < m; ++e) {
    adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
    adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
  }
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  std::vector<char> tree_edge(m, 0);
  std::vector<int> queue{0};
  depth[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int u = queue[h];
    for (auto [w, e] : adj[u]) {
      if (depth[w] >= 0) continue;
      depth[w] = depth[u] + 1;
      parent[w] = u;
      parent_edge[w] = e;
      tree_edge[e] = 1;
      queue.push_back(w);
    }
  }
  std::vector<std::uint64_t> basis;
  for (int e = 0; e < m; ++e) {
    if (tree_edge[e]) continue;
    std::uint64_t mask = std::uint64_t{1} << e;
    int a = g.edges[e].first, b = g.edges[e].second;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      mask ^= std::uint64_t{1} << parent_edge[a];
      a = parent[a];
    }
    basis.push_back(mask);
  }
  std::vector<std::uint64_t> incident(n, 0);
  for (int e = 0; e < m; ++e) {
    incident[g.edges[e].first] |= std::uint64_t{1} << e;
    incident[g.edges[e].second] |= std::uint64_t{1} << e;
  }

  auto spanning_connected = [&](std::uint64_t mask) {
    for (int v = 0; v < n; ++v) {
      if (!(mask & incident[v])) return false;
    }
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    int parts = n;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(g.edges[e].first), b = find(g.edges[e].second);
      if (a != b) {
        root[a] = b;
        --parts;
      }
    }
    return parts == 1;
  };

  // Gray-code walk over all 2^r even subgraphs.
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  std::uint64_t mask = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    mask ^= basis[std::countr_zero(i)];
    if (spanning_connected(mask)) return true;
  }
  return false;
}

// For every unordered node pair (v, u): g plus a fresh node joined to v and u.
inline std::vector<Graph> sset_to_sg_instances(const Graph& g) {
  std::vector<Graph> out;
  for (int v = 0; v < g.node_count; ++v) {
    for (int u = v + 1; u < g.node_count; ++u) {
      Graph h = g;
      const int star = h.node_count++;
      h.edges.emplace_back(v, star);
      h.edges.emplace_back(u, star);
      out.push_back(std::move(h));
    }
  }
  return out;
}

// g plus two fresh pendant nodes attached to v.
inline Graph sg_to_sset_instance(const Graph& g, int v) {
  if (v < 0 || v >= g.node_count) throw StructureError("attachment node out of range");
  Graph h = g;
  const int u1 = h.node_count++;
  const int u2 = h.node_count++;
  h.edges.emplace_back(v, u1);
  h.edges.emplace_back(v, u2);
  return h;
}

namespace detail {

// Depth-first search over node maps and link routings of a set of requests.
// Node maps for every request are fixed first (CPU checked cumulatively),
// then every VL is routed over simple paths (BW checked cumulatively).
class BruteForceEmbedder {
 public:
  BruteForceEmbedder(const SubstrateNetwork& net, std::span<const VirtualRequest> reqs)
      : net_(net), reqs_(reqs), cpu_(net.node_count()), bw_(net.edge_count()) {
    for (NodeIndex v = 0; v < net.node_count(); ++v) cpu_[v] = net.residual_cpu(v);
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) bw_[e] = net.residual_bw(e);
    for (const auto& r : reqs) {
      Embedding e;
      e.node_map.assign(r.vn_count(), kNone);
      e.link_map.assign(r.vl_count(), {});
      embs_.push_back(std::move(e));
    }
  }

  bool run() { return map_node(0, 0); }
  const std::vector<Embedding>& embeddings() const { return embs_; }

 private:
  bool map_node(std::size_t r, int vn) {
    if (r == reqs_.size()) return route(0, 0);
    if (vn == reqs_[r].vn_count()) return map_node(r + 1, 0);
    const Units d = reqs_[r].cpu_demand(vn);
    auto& map = embs_[r].node_map;
    for (NodeIndex s = 0; s < net_.node_count(); ++s) {
      if (cpu_[s] < d || std::find(map.begin(), map.begin() + vn, s) != map.begin() + vn) continue;
      cpu_[s] -= d;
      map[vn] = s;
      if (map_node(r, vn + 1)) return true;
      map[vn] = kNone;
      cpu_[s] += d;
    }
    return false;
  }

  bool route(std::size_t r, int vl) {
    if (r == reqs_.size()) return true;
    if (vl == reqs_[r].vl_count()) return route(r + 1, 0);
    const auto& link = reqs_[r].vl(vl);
    const NodeIndex src = embs_[r].node_map[link.u];
    const NodeIndex dst = embs_[r].node_map[link.v];
    std::vector<char> on_path(net_.node_count(), 0);
    on_path[src] = 1;
    auto& path = embs_[r].link_map[vl];
    std::function<bool(NodeIndex)> walk = [&](NodeIndex cur) -> bool {
      if (cur == dst) return route(r, vl + 1);
      for (const auto& inc : net_.incident(cur)) {
        if (on_path[inc.neighbor] || bw_[inc.edge] < link.bw) continue;
        on_path[inc.neighbor] = 1;
        bw_[inc.edge] -= link.bw;
        path.push_back(inc.edge);
        if (walk(inc.neighbor)) return true;
        path.pop_back();
        bw_[inc.edge] += link.bw;
        on_path[inc.neighbor] = 0;
      }
      return false;
    };
    return walk(src);
  }

  const SubstrateNetwork& net_;
  std::span<const VirtualRequest> reqs_;
  std::vector<Units> cpu_, bw_;
  std::vector<Embedding> embs_;
};

inline void check_brute_force_size(const SubstrateNetwork& net, std::size_t requests) {
  if (net.node_count() > kMaxBruteForceSubstrate) {
    throw SizeLimitError("brute-force embedding limited to " + std::to_string(kMaxBruteForceSubstrate) + " SNs");
  }
  if (requests > static_cast<std::size_t>(kMaxBruteForceRequests)) {
    throw SizeLimitError("brute-force embedding limited to " + std::to_string(kMaxBruteForceRequests) +
                         " requests");
  }
}

}  // namespace detail

// Some embedding of one request against the residuals, if any exists.
inline std::optional<Embedding> brute_force_embedding(const SubstrateNetwork& net, const VirtualRequest& req) {
  detail::check_brute_force_size(net, 1);
  detail::BruteForceEmbedder search(net, std::span<const VirtualRequest>(&req, 1));
  if (!search.run()) return std::nullopt;
  return search.embeddings().front();
}

// Whether all requests fit simultaneously.
inline bool brute_force_embeds_all(const SubstrateNetwork& net, std::span<const VirtualRequest> reqs) {
  detail::check_brute_force_size(net, reqs.size());
  return detail::BruteForceEmbedder(net, reqs).run();
}

// Largest number of requests that fit simultaneously.
inline int brute_force_max_accepted(const SubstrateNetwork& net, std::span<const VirtualRequest> reqs) {
  detail::check_brute_force_size(net, reqs.size());
  const std::size_t k = reqs.size();
  std::vector<std::uint32_t> subsets(std::size_t{1} << k);
  std::iota(subsets.begin(), subsets.end(), 0u);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  for (std::uint32_t s : subsets) {
    std::vector<VirtualRequest> pick;
    for (std::size_t j = 0; j < k; ++j) {
      if (s >> j & 1) pick.push_back(reqs[j]);
    }
    if (detail::BruteForceEmbedder(net, pick).run()) return std::popcount(s);
  }
  return 0;
}

// The uniform setting: every SN has CPU 2, every SL BW 1, and the path VNR
// has one unit-demand VN per SN.
struct UniformInstance {
  Graph graph;

  SubstrateNetwork network() const { return SubstrateNetwork::from_graph(graph, 2, 1); }
  VirtualRequest request() const {
    const int n = std::max(graph.node_count, 1);
    return VirtualRequest::path(std::vector<Units>(n, 1), std::vector<Units>(n - 1, 1), 1);
  }
};

inline bool brute_force_path_embed(const UniformInstance& inst) {
  if (inst.graph.node_count > kMaxBruteForceSubstrate) {
    throw SizeLimitError("uniform path embedding limited to " + std::to_string(kMaxBruteForceSubstrate) + " SNs");
  }
  return brute_force_embedding(inst.network(), inst.request()).has_value();
}

struct SimplexSearch {
  std::optional<SimplexEmbedding> best;
  std::size_t tableaus = 0;  // (start, dir, positions) combinations examined
};

namespace detail {

// Every (positions) choice for fixed start and direction, independent of the
// auxiliary-graph code.
inline void for_each_simplex(const SubstrateNetwork& net, const VirtualRequest& req, const SubstrateCycle& ring,
                             NodeIndex start, Direction dir, std::size_t& tableaus,
                             const std::function<void(SimplexEmbedding&&)>& on_feasible) {
  const int m = ring.size();
  const int n = req.vn_count();
  const int base = ring.position_of(start);
  auto node_at = [&](int k) { return ring.node_at(base + step(dir) * k); };
  auto edge_at = [&](int k) {
    return dir == Direction::Clockwise ? ring.edge_after(base + k) : ring.edge_after(base - k - 1);
  };
  if (n > m) return;
  std::vector<int> pos(n);
  pos[0] = 0;
  std::function<void(int)> choose = [&](int j) {
    if (j == n) {
      ++tableaus;
      SimplexEmbedding s;
      s.start = start;
      s.dir = dir;
      for (int k = 0; k < n; ++k) {
        const NodeIndex host = node_at(pos[k]);
        if (net.residual_cpu(host) < req.cpu_demand(k)) return;
        s.nodes.push_back(host);
      }
      for (int k = 0; k < n; ++k) {
        const int to = k + 1 < n ? pos[k + 1] : m;
        std::vector<EdgeIndex> seg;
        for (int h = pos[k]; h < to; ++h) {
          const EdgeIndex e = edge_at(h);
          if (net.residual_bw(e) < req.vl(k).bw) return;
          seg.push_back(e);
        }
        s.hops.push_back(to - pos[k]);
        s.cost += (to - pos[k]) * req.vl(k).bw;
        s.segments.push_back(std::move(seg));
      }
      on_feasible(std::move(s));
      return;
    }
    for (int p = pos[j - 1] + 1; p <= m - (n - j); ++p) {
      pos[j] = p;
      choose(j + 1);
    }
  };
  choose(1);
}

inline void check_simplex_size(const SubstrateNetwork& net, const VirtualRequest& req) {
  require_cycle_request(req);
  if (net.node_count() > kMaxSimplexRing || req.vn_count() > kMaxSimplexVns) {
    throw SizeLimitError("brute-force simplex search limited to m <= " + std::to_string(kMaxSimplexRing) +
                         ", n <= " + std::to_string(kMaxSimplexVns));
  }
}

}  // namespace detail

// All feasible simplex embeddings with VN 0 on `start`, following `dir`.
inline std::vector<SimplexEmbedding> enumerate_simplex_embeddings(const SubstrateNetwork& net,
                                                                  const VirtualRequest& req, NodeIndex start,
                                                                  Direction dir) {
  detail::check_simplex_size(net, req);
  const SubstrateCycle ring(net);
  std::vector<SimplexEmbedding> out;
  std::size_t count = 0;
  detail::for_each_simplex(net, req, ring, start, dir, count,
                           [&](SimplexEmbedding&& s) { out.push_back(std::move(s)); });
  return out;
}

// Cheapest simplex embedding by full enumeration over start SNs able to host
// VN 0, both directions, and all ordered position choices. Equal costs keep
// the first found (lowest start, clockwise first, then positions).
inline SimplexSearch brute_force_simplex_cycle(const SubstrateNetwork& net, const VirtualRequest& req) {
  detail::check_simplex_size(net, req);
  const SubstrateCycle ring(net);
  SimplexSearch res;
  for (NodeIndex start = 0; start < net.node_count(); ++start) {
    if (net.residual_cpu(start) < req.cpu_demand(0)) continue;
    for (Direction dir : {Direction::Clockwise, Direction::Anticlockwise}) {
      detail::for_each_simplex(net, req, ring, start, dir, res.tableaus, [&](SimplexEmbedding&& s) {
        if (!res.best || s.cost < res.best->cost) res.best = std::move(s);
      });
    }
  }
  return res;
}

}  // namespace vne
