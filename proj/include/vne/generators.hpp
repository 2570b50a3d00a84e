#pragma once

// Seeded instance generation: random connected substrates, request sets in
// the evaluation regime, and the two hardness-reduction constructions
// (edge-disjoint paths -> path VNRs, cardinality d-DKP -> cycle VNRs).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vne/io.hpp"
#include "vne/knapsack.hpp"
#include "vne/network.hpp"

namespace vne {

using Rng = std::mt19937_64;

// splitmix64 finalizer; derives independent sub-seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Units uniform_units(Rng& rng, Units lo, Units hi) {
  return std::uniform_int_distribution<Units>(lo, hi)(rng);
}

enum class TopologyKind { Random, Complete, Cycle, Path };

inline const char* to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::Random: return "random";
    case TopologyKind::Complete: return "complete";
    case TopologyKind::Cycle: return "cycle";
    case TopologyKind::Path: return "path";
  }
  return "?";
}

inline TopologyKind parse_topology(const std::string& s) {
  if (s == "random") return TopologyKind::Random;
  if (s == "complete") return TopologyKind::Complete;
  if (s == "cycle") return TopologyKind::Cycle;
  if (s == "path") return TopologyKind::Path;
  throw std::invalid_argument("unknown topology '" + s + "'");
}

struct SubstrateSpec {
  TopologyKind kind = TopologyKind::Random;
  int nodes = 30;
  int edges = 150;  // random topology only
  Units cpu_min = 100, cpu_max = 100;
  Units bw_min = 100, bw_max = 100;
};

inline void check_spec(const SubstrateSpec& s) {
  if (s.nodes < 1) throw StructureError("substrate needs at least one node");
  if (s.cpu_min < 0 || s.cpu_min > s.cpu_max) throw StructureError("bad substrate CPU range");
  if (s.bw_min < 0 || s.bw_min > s.bw_max) throw StructureError("bad substrate BW range");
  const long long max_edges = static_cast<long long>(s.nodes) * (s.nodes - 1) / 2;
  switch (s.kind) {
    case TopologyKind::Random:
      if (s.edges < s.nodes - 1) throw StructureError("too few edges for a connected graph");
      if (s.edges > max_edges) throw StructureError("too many edges for a simple graph");
      break;
    case TopologyKind::Cycle:
      if (s.nodes < 3) throw StructureError("a cycle needs at least 3 nodes");
      break;
    default:
      break;
  }
}

// Connected graph: a random spanning tree (each node, in shuffled order,
// hangs off a uniformly chosen earlier one) plus uniformly sampled extra
// edges. Fixed topologies ignore the seed for structure.
inline Graph gen_topology(const SubstrateSpec& spec, Rng& rng) {
  check_spec(spec);
  const int n = spec.nodes;
  Graph g;
  g.node_count = n;
  switch (spec.kind) {
    case TopologyKind::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
      return g;
    case TopologyKind::Cycle:
      for (int u = 0; u < n; ++u) g.edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
      return g;
    case TopologyKind::Path:
      for (int u = 0; u + 1 < n; ++u) g.edges.emplace_back(u, u + 1);
      return g;
    case TopologyKind::Random:
      break;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int k = 1; k < n; ++k) {
    const int parent = order[std::uniform_int_distribution<int>(0, k - 1)(rng)];
    const int child = order[k];
    adj[parent][child] = adj[child][parent] = 1;
    g.edges.emplace_back(std::min(parent, child), std::max(parent, child));
  }
  std::vector<std::pair<int, int>> spare;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[u][v]) spare.emplace_back(u, v);
  std::shuffle(spare.begin(), spare.end(), rng);
  spare.resize(spec.edges - (n - 1));
  g.edges.insert(g.edges.end(), spare.begin(), spare.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline SubstrateNetwork gen_substrate(const SubstrateSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  const Graph g = gen_topology(spec, rng);
  SubstrateNetwork net;
  for (int v = 0; v < g.node_count; ++v) net.add_node(uniform_units(rng, spec.cpu_min, spec.cpu_max));
  for (auto [u, v] : g.edges) net.add_edge(u, v, uniform_units(rng, spec.bw_min, spec.bw_max));
  return net;
}

enum class RevenueRule { Unit, VnCount };

inline const char* to_string(RevenueRule r) { return r == RevenueRule::Unit ? "unit" : "vn-count"; }

inline RevenueRule parse_revenue_rule(const std::string& s) {
  if (s == "unit") return RevenueRule::Unit;
  if (s == "vn-count") return RevenueRule::VnCount;
  throw std::invalid_argument("unknown revenue rule '" + s + "'");
}

struct RequestSpec {
  Shape shape = Shape::Path;
  int count = 100;
  int min_vns = 5, max_vns = 10;
  Units cpu_min = 1, cpu_max = 5;
  Units bw_min = 1, bw_max = 5;
  RevenueRule revenue = RevenueRule::Unit;
};

inline void check_spec(const RequestSpec& s) {
  if (s.shape == Shape::General) throw StructureError("request generation supports path and cycle shapes");
  if (s.count < 0) throw StructureError("negative request count");
  if (s.min_vns > s.max_vns) throw StructureError("empty VN-count range");
  if (s.min_vns < (s.shape == Shape::Cycle ? 3 : 1)) throw StructureError("VN-count range too small for shape");
  if (s.cpu_min < 1 || s.cpu_min > s.cpu_max) throw StructureError("bad CPU demand range");
  if (s.bw_min < 1 || s.bw_min > s.bw_max) throw StructureError("bad BW demand range");
}

inline std::vector<VirtualRequest> gen_requests(const RequestSpec& spec, std::uint64_t seed) {
  check_spec(spec);
  Rng rng(seed);
  std::vector<VirtualRequest> out;
  out.reserve(spec.count);
  for (int j = 0; j < spec.count; ++j) {
    const int n = std::uniform_int_distribution<int>(spec.min_vns, spec.max_vns)(rng);
    const int links = spec.shape == Shape::Cycle ? n : n - 1;
    std::vector<Units> cpu(n), bw(links);
    for (auto& c : cpu) c = uniform_units(rng, spec.cpu_min, spec.cpu_max);
    for (auto& b : bw) b = uniform_units(rng, spec.bw_min, spec.bw_max);
    const Units rev = spec.revenue == RevenueRule::Unit ? 1 : n;
    out.push_back(spec.shape == Shape::Cycle ? VirtualRequest::cycle(std::move(cpu), bw, rev)
                                             : VirtualRequest::path(std::move(cpu), bw, rev));
  }
  return out;
}

namespace detail {

inline Units checked_mul(Units a, Units b) {
  Units r;
  if (__builtin_mul_overflow(a, b, &r)) throw SizeLimitError("reduction capacities overflow 64-bit units");
  return r;
}

inline Units checked_add(Units a, Units b) {
  Units r;
  if (__builtin_add_overflow(a, b, &r)) throw SizeLimitError("reduction capacities overflow 64-bit units");
  return r;
}

}  // namespace detail

// Edge-disjoint paths input: a connected graph and terminal pairs.
struct EdpInstance {
  Graph graph;
  std::vector<std::pair<int, int>> pairs;
};

// Original node i keeps index i and gets a copy n+i joined by a stem SL;
// original edges come first, stems after, so |E^s| = |E| + |V|.
//
// N_i counts how often node i is a terminal (at least 1). Original SLs have
// BW 1, so VLs routed over them are edge-disjoint; original SNs have CPU N_i.
// End-VN demands grow along node index (CPU) and shrink along it (BW) so that
// the end VN of a pair touching node i can only sit on the copy of i:
//   C_0 = max N + 1,  C_i = CPU(copy i-1) + 1,  CPU(copy i) = C_i * N_i
//   B_{n-1} = 2,      B_i = BW(stem i+1) + 1,   BW(stem i)  = B_i * N_i
// Each pair (s, t) becomes a 4-VN path VNR with CPU [C_s, 1, 1, C_t] and
// BW [B_s, 1, B_t].
inline Instance gen_edp_reduction(const EdpInstance& edp) {
  const Graph& g = edp.graph;
  const int n = g.node_count;
  if (n < 1 || !g.is_simple() || !g.is_connected()) throw StructureError("EDP graph must be simple and connected");
  std::vector<Units> count(n, 0);
  for (auto [s, t] : edp.pairs) {
    if (s < 0 || s >= n || t < 0 || t >= n) throw StructureError("terminal out of range");
    if (s == t) throw StructureError("terminal pair with equal endpoints");
    ++count[s];
    ++count[t];
  }
  for (auto& c : count) c = std::max<Units>(c, 1);
  const Units nmax = *std::max_element(count.begin(), count.end());

  std::vector<Units> c(n), b(n), copy_cpu(n), stem_bw(n);
  for (int i = 0; i < n; ++i) {
    c[i] = i == 0 ? nmax + 1 : detail::checked_add(copy_cpu[i - 1], 1);
    copy_cpu[i] = detail::checked_mul(c[i], count[i]);
  }
  for (int i = n - 1; i >= 0; --i) {
    b[i] = i == n - 1 ? 2 : detail::checked_add(stem_bw[i + 1], 1);
    stem_bw[i] = detail::checked_mul(b[i], count[i]);
  }

  Instance out;
  for (int i = 0; i < n; ++i) out.network.add_node(count[i]);
  for (int i = 0; i < n; ++i) out.network.add_node(copy_cpu[i]);
  for (auto [u, v] : g.edges) out.network.add_edge(u, v, 1);
  for (int i = 0; i < n; ++i) out.network.add_edge(i, n + i, stem_bw[i]);
  for (auto [s, t] : edp.pairs) {
    out.requests.push_back(VirtualRequest::path({c[s], 1, 1, c[t]}, {b[s], 1, b[t]}, 1));
  }
  return out;
}

// SNs able to host end VN `vn` (0 or the last) of a path VNR: enough CPU for
// it, and some other SN with enough CPU for its neighbor VN is reachable
// over SLs that can carry the connecting VL.
inline std::vector<NodeIndex> end_vn_hosts(const SubstrateNetwork& net, const VirtualRequest& req, int vn) {
  const int last = req.vn_count() - 1;
  if (req.shape() != Shape::Path || last < 1 || (vn != 0 && vn != last)) {
    throw StructureError("end_vn_hosts expects an end VN of a path request with a VL");
  }
  const int nb = vn == 0 ? 1 : last - 1;
  const Units bw = req.vl(vn == 0 ? 0 : last - 1).bw;
  std::vector<NodeIndex> out;
  for (NodeIndex x = 0; x < net.node_count(); ++x) {
    if (net.residual_cpu(x) < req.cpu_demand(vn)) continue;
    std::vector<char> seen(net.node_count(), 0);
    std::vector<NodeIndex> stack{x};
    seen[x] = 1;
    bool ok = false;
    while (!stack.empty() && !ok) {
      const NodeIndex u = stack.back();
      stack.pop_back();
      for (const auto& inc : net.incident(u)) {
        if (seen[inc.neighbor] || net.residual_bw(inc.edge) < bw) continue;
        seen[inc.neighbor] = 1;
        if (net.residual_cpu(inc.neighbor) >= req.cpu_demand(nb)) ok = true;
        stack.push_back(inc.neighbor);
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// Cardinality d-DKP -> cycle VNRs on a d-SN substrate cycle.
//   CPU(SN 0) = b_0, CPU(SN i) = B_i * b_i, with B_0 = 1 and
//   B_i = max_{k<i} CPU(SN k) + 1; VN i of item j demands B_i * s_ji.
// SL BW is the item count and every VL demands 1. Two dimensions are padded
// with a third that every item fits (capacity = item count, size 1), since a
// 2-node cycle is not a simple graph.
inline Instance gen_ddkp_reduction(const MdkpInstance& ddkp) {
  detail::check_mdkp(ddkp);
  const int d0 = static_cast<int>(ddkp.dimensions());
  if (d0 < 2) throw StructureError("d-DKP reduction needs d >= 2");
  const Units items = static_cast<Units>(ddkp.items.size());
  std::vector<Units> cap = ddkp.capacities;
  std::vector<std::vector<Units>> sizes;
  for (const auto& it : ddkp.items) {
    for (Units s : it.sizes) {
      if (s < 1) throw StructureError("d-DKP reduction needs positive item sizes");
    }
    sizes.push_back(it.sizes);
  }
  if (d0 == 2) {
    cap.push_back(std::max<Units>(items, 1));
    for (auto& s : sizes) s.push_back(1);
  }
  const int d = static_cast<int>(cap.size());

  std::vector<Units> scale(d), cpu(d);
  for (int i = 0; i < d; ++i) {
    scale[i] = i == 0 ? 1 : detail::checked_add(*std::max_element(cpu.begin(), cpu.begin() + i), 1);
    cpu[i] = detail::checked_mul(scale[i], cap[i]);
  }

  Instance out;
  for (int i = 0; i < d; ++i) out.network.add_node(cpu[i]);
  for (int i = 0; i < d; ++i) out.network.add_edge(i, (i + 1) % d, std::max<Units>(items, 1));
  for (const auto& s : sizes) {
    std::vector<Units> demand(d);
    for (int i = 0; i < d; ++i) demand[i] = detail::checked_mul(scale[i], s[i]);
    out.requests.push_back(VirtualRequest::cycle(std::move(demand), std::vector<Units>(d, 1), 1));
  }
  return out;
}

// Per VN, the SNs it occupies in at least one injective node mapping of the
// whole request that respects residual CPU (links ignored).
inline std::vector<std::vector<NodeIndex>> whole_map_hosts(const SubstrateNetwork& net, const VirtualRequest& req) {
  if (net.node_count() > 10) throw SizeLimitError("whole-request host scan limited to 10 SNs");
  const int n = req.vn_count();
  std::vector<std::vector<char>> hit(n, std::vector<char>(net.node_count(), 0));
  std::vector<NodeIndex> map(n, kNone);
  std::vector<char> used(net.node_count(), 0);
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      for (int j = 0; j < n; ++j) hit[j][map[j]] = 1;
      return;
    }
    for (NodeIndex s = 0; s < net.node_count(); ++s) {
      if (used[s] || net.residual_cpu(s) < req.cpu_demand(k)) continue;
      used[s] = 1;
      map[k] = s;
      go(k + 1);
      used[s] = 0;
    }
  };
  go(0);
  std::vector<std::vector<NodeIndex>> out(n);
  for (int j = 0; j < n; ++j)
    for (NodeIndex s = 0; s < net.node_count(); ++s)
      if (hit[j][s]) out[j].push_back(s);
  return out;
}

// Exhaustive cardinality optimum: most items fitting every dimension.
inline int ddkp_cardinality_optimum(const MdkpInstance& inst) {
  detail::check_mdkp(inst);
  const std::size_t k = inst.items.size();
  if (k > 20) throw SizeLimitError("exhaustive d-DKP limited to 20 items");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    const int c = std::popcount(mask);
    if (c <= best) continue;
    bool ok = true;
    for (std::size_t dim = 0; dim < inst.dimensions() && ok; ++dim) {
      Units sum = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (mask >> j & 1) sum += inst.items[j].sizes[dim];
      ok = sum <= inst.capacities[dim];
    }
    if (ok) best = c;
  }
  return best;
}

}  // namespace vne
