#pragma once

// Exhaustive and sampled agreement sweeps between the fast algorithms and
// the brute-force deciders. Shared by the verify-theory subcommand and the
// acceptance suite.

#include <functional>
#include <string>
#include <vector>

#include "vne/cycle_embedding.hpp"
#include "vne/generators.hpp"
#include "vne/theory.hpp"

namespace vne {

struct SweepOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline std::string edge_list(const Graph& g) {
  std::string s = std::to_string(g.node_count) + " nodes:";
  for (auto [u, v] : g.edges) s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

// Connected graph on n nodes with each extra edge kept with probability p.
inline Graph random_connected_graph(int n, double p, Rng& rng) {
  SubstrateSpec spec;
  spec.kind = TopologyKind::Random;
  spec.nodes = n;
  const int max_edges = n * (n - 1) / 2;
  std::binomial_distribution<int> extra(max_edges - (n - 1), p);
  spec.edges = n - 1 + extra(rng);
  return gen_topology(spec, rng);
}

// Spanning trail <=> uniform path embedding, on every connected graph up to
// `max_nodes` plus `samples` random graphs at 7-8 nodes.
inline SweepOutcome sweep_trail_embedding(int max_nodes, int samples, std::uint64_t seed) {
  SweepOutcome out{"spanning trail <=> uniform path embedding", 0, 0, {}};
  auto check = [&](const Graph& g) {
    ++out.cases;
    if (has_spanning_trail(g) != brute_force_path_embed(UniformInstance{g})) out.fail(edge_list(g));
  };
  for (int n = 1; n <= max_nodes; ++n)
    for (const auto& g : connected_graphs(n)) check(g);
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) check(random_connected_graph(7 + k % 2, 0.3, rng));
  return out;
}

// SSET(g) <=> some G_vu is supereulerian.
inline SweepOutcome sweep_sset_to_sg(int max_nodes) {
  SweepOutcome out{"SSET(g) <=> exists supereulerian G_vu", 0, 0, {}};
  for (int n = 2; n <= max_nodes; ++n) {
    for (const auto& g : connected_graphs(n)) {
      ++out.cases;
      bool any = false;
      for (const auto& h : sset_to_sg_instances(g)) any = any || is_supereulerian(h);
      if (has_spanning_trail(g) != any) out.fail(edge_list(g));
    }
  }
  return out;
}

// SG(g) <=> SSET(G*) for every attachment node.
inline SweepOutcome sweep_sg_to_sset(int max_nodes) {
  SweepOutcome out{"SG(g) <=> SSET(G*), every v", 0, 0, {}};
  for (int n = 2; n <= max_nodes; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const bool sg = is_supereulerian(g);
      for (int v = 0; v < n; ++v) {
        ++out.cases;
        if (sg != has_spanning_trail(sg_to_sset_instance(g, v))) out.fail(edge_list(g) + " v=" + std::to_string(v));
      }
    }
  }
  return out;
}

struct CycleCase {
  SubstrateNetwork net;
  VirtualRequest req;
};

// Substrate cycle with m in [3, max_m], cycle VNR with n in [3, min(m, max_n)],
// demands in [1,5] and capacities in [1, cap_max] so that some instances are
// infeasible.
inline CycleCase random_cycle_case(Rng& rng, int max_m = 8, int max_n = 5, Units cap_max = 7) {
  const int m = std::uniform_int_distribution<int>(3, max_m)(rng);
  const int n = std::uniform_int_distribution<int>(3, std::min(m, max_n))(rng);
  SubstrateSpec spec;
  spec.kind = TopologyKind::Cycle;
  spec.nodes = m;
  spec.cpu_min = spec.bw_min = 1;
  spec.cpu_max = spec.bw_max = cap_max;
  auto net = gen_substrate(spec, rng());
  std::vector<Units> cpu(n), bw(n);
  for (auto& c : cpu) c = uniform_units(rng, 1, 5);
  for (auto& b : bw) b = uniform_units(rng, 1, 5);
  return {std::move(net), VirtualRequest::cycle(std::move(cpu), bw, 1)};
}

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Structural simplex checks: nodes follow dir, segments are disjoint, hops
// sum to m, cost matches the demands.
inline bool simplex_well_formed(const SubstrateNetwork& net, const VirtualRequest& req, const SimplexEmbedding& s,
                                std::string* why = nullptr) {
  auto bad = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  const SubstrateCycle ring(net);
  const CyclicSequence seq(ring, s.start, s.dir);
  const int n = req.vn_count();
  if (static_cast<int>(s.nodes.size()) != n || s.nodes[0] != s.start) return bad("bad node list");
  int hops = 0;
  Units cost = 0;
  std::vector<char> used(net.edge_count(), 0);
  for (int j = 0; j < n; ++j) {
    if (j + 1 < n && seq.index_of(s.nodes[j]) >= seq.index_of(s.nodes[j + 1])) return bad("not strictly ahead");
    if (static_cast<int>(s.segments[j].size()) != s.hops[j] || s.hops[j] < 1) return bad("bad segment");
    for (EdgeIndex e : s.segments[j]) {
      if (used[e]++) return bad("SL used twice");
    }
    hops += s.hops[j];
    cost += s.hops[j] * req.vl(j).bw;
  }
  if (hops != ring.size()) return bad("hops do not sum to m");
  if (cost != s.cost) return bad("cost mismatch");
  auto r = validate_embedding(net, req, s.to_embedding(), CapacityBasis::Residual);
  if (!r) return bad(r.describe());
  return true;
}

// c2ce against the exhaustive simplex search.
inline SweepOutcome sweep_c2ce_oracle(int count, std::uint64_t seed) {
  SweepOutcome out{"c2ce == exhaustive simplex optimum", 0, 0, {}};
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto c = random_cycle_case(rng);
    ++out.cases;
    const auto fast = c2ce(c.net, c.req);
    const auto slow = brute_force_simplex_cycle(c.net, c.req);
    const std::string tag = "case " + std::to_string(k);
    if (fast.has_value() != slow.best.has_value()) {
      out.fail(tag + ": feasibility differs");
      continue;
    }
    const int m = c.net.node_count(), n = c.req.vn_count();
    const auto f0 = feasible_sets(c.net, c.req).nodes_for(0).size();
    if (slow.tableaus != 2 * f0 * binomial(m - 1, n - 1)) out.fail(tag + ": tableau count off");
    if (!fast) continue;
    std::string why;
    if (fast->cost != slow.best->cost) out.fail(tag + ": cost " + std::to_string(fast->cost) + " vs " +
                                                std::to_string(slow.best->cost));
    else if (!simplex_well_formed(c.net, c.req, *fast, &why)) out.fail(tag + ": " + why);
  }
  return out;
}

// Every directed cycle through the start vertex, as one vertex per layer.
inline std::vector<WdagCycle> enumerate_wdag_cycles(const Wdag& w) {
  std::vector<WdagCycle> out;
  const int n = w.layer_count();
  if (n == 0 || w.dead_layer != kNone) return out;
  WdagCycle cur;
  cur.vertices.push_back(0);
  std::function<void(int)> walk = [&](int j) {
    const int tail = cur.vertices.back();
    for (const auto& a : w.arcs[j]) {
      if (a.tail != tail) continue;
      cur.weight += a.weight;
      if (j == n - 1) {
        out.push_back(cur);
      } else {
        cur.vertices.push_back(a.head);
        walk(j + 1);
        cur.vertices.pop_back();
      }
      cur.weight -= a.weight;
    }
  };
  walk(0);
  return out;
}

// Directed cycles <-> feasible simplex embeddings for every (start, dir).
inline SweepOutcome sweep_cycle_correspondence(int count, std::uint64_t seed) {
  SweepOutcome out{"WDAG cycles <=> feasible simplex embeddings", 0, 0, {}};
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    const auto c = random_cycle_case(rng, 7, 5, 9);
    ++out.cases;
    const std::string tag = "case " + std::to_string(k);
    for (NodeIndex start : feasible_sets(c.net, c.req).nodes_for(0)) {
      for (Direction dir : {Direction::Clockwise, Direction::Anticlockwise}) {
        const Wdag w = build_wdag(c.net, c.req, start, dir);
        std::vector<std::vector<NodeIndex>> from_wdag;
        for (const auto& cyc : enumerate_wdag_cycles(w)) {
          const auto s = map_cycle(c.net, c.req, w, cyc);
          std::string why;
          if (!simplex_well_formed(c.net, c.req, s, &why)) out.fail(tag + ": cycle maps badly: " + why);
          if (s.cost != cyc.weight) out.fail(tag + ": cycle weight differs from BW cost");
          from_wdag.push_back(s.nodes);
        }
        std::vector<std::vector<NodeIndex>> from_oracle;
        for (const auto& s : enumerate_simplex_embeddings(c.net, c.req, start, dir)) from_oracle.push_back(s.nodes);
        std::sort(from_wdag.begin(), from_wdag.end());
        std::sort(from_oracle.begin(), from_oracle.end());
        if (from_wdag != from_oracle) out.fail(tag + ": embedding sets differ");
      }
    }
  }
  return out;
}

}  // namespace vne
