#pragma once

// Path VNRs onto a general substrate: split the substrate into SL-disjoint
// paths, pack requests onto those paths as a multiple knapsack over
// lengths, fund the packed requests as a multi-dimensional knapsack over
// residual CPU/BW, commit, and repeat until a round accepts nothing.

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "vne/knapsack.hpp"
#include "vne/network.hpp"

namespace vne {

struct SubstratePath {
  std::vector<NodeIndex> nodes;
  std::vector<EdgeIndex> edges;  // edges[k] joins nodes[k] and nodes[k+1]

  int length() const { return static_cast<int>(edges.size()); }
};

namespace detail {

// Farthest tree node from `from`; ties go to the lowest index.
inline NodeIndex farthest_in_tree(const std::vector<std::vector<std::pair<NodeIndex, EdgeIndex>>>& tree,
                                  NodeIndex from, std::vector<NodeIndex>& parent,
                                  std::vector<EdgeIndex>& parent_edge) {
  std::vector<int> dist(tree.size(), -1);
  std::vector<NodeIndex> queue{from};
  dist[from] = 0;
  parent[from] = kNone;
  parent_edge[from] = kNone;
  NodeIndex best = from;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const NodeIndex u = queue[h];
    if (dist[u] > dist[best] || (dist[u] == dist[best] && u < best)) best = u;
    for (auto [w, e] : tree[u]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      parent[w] = u;
      parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  return best;
}

}  // namespace detail

// Repeatedly extracts the longest path of a DFS tree of the usable residual
// graph. An SL is usable when it has residual BW and both endpoints have
// residual CPU. The DFS root is the node of largest usable degree (lowest
// index on ties); neighbors are explored in index order.
inline std::vector<SubstratePath> decompose_paths(const SubstrateNetwork& net) {
  const int n = net.node_count();
  std::vector<char> alive(net.edge_count(), 0);
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    const auto& l = net.link(e);
    alive[e] = net.residual_bw(e) > 0 && net.residual_cpu(l.u) > 0 && net.residual_cpu(l.v) > 0;
  }

  std::vector<SubstratePath> paths;
  std::vector<int> degree(n);
  std::vector<NodeIndex> parent(n), parent_edge(n);
  while (true) {
    NodeIndex root = kNone;
    for (NodeIndex v = 0; v < n; ++v) {
      degree[v] = 0;
      for (const auto& inc : net.incident(v)) degree[v] += alive[inc.edge];
      if (degree[v] > 0 && (root == kNone || degree[v] > degree[root])) root = v;
    }
    if (root == kNone) break;

    // DFS tree over alive edges.
    std::vector<std::vector<std::pair<NodeIndex, EdgeIndex>>> tree(n);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<NodeIndex, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto inc = net.incident(u);
      while (next < inc.size() && (!alive[inc[next].edge] || seen[inc[next].neighbor])) ++next;
      if (next == inc.size()) {
        stack.pop_back();
        continue;
      }
      const auto [w, e] = inc[next++];
      seen[w] = 1;
      tree[u].emplace_back(w, e);
      tree[w].emplace_back(u, e);
      stack.emplace_back(w, 0);
    }

    // Tree diameter by two sweeps.
    const NodeIndex a = detail::farthest_in_tree(tree, root, parent, parent_edge);
    const NodeIndex b = detail::farthest_in_tree(tree, a, parent, parent_edge);
    SubstratePath path;
    for (NodeIndex cur = b; cur != kNone; cur = parent[cur]) {
      path.nodes.push_back(cur);
      if (parent_edge[cur] != kNone) {
        path.edges.push_back(parent_edge[cur]);
        alive[parent_edge[cur]] = 0;
      }
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    std::reverse(path.edges.begin(), path.edges.end());
    paths.push_back(std::move(path));
  }
  return paths;
}

// One packed request: VN k sits on path.nodes[offset + k] and VL k uses
// path.edges[offset + k]. Requests keep their own orientation.
struct PathPlacement {
  int request;  // position in the request span handed to pack_mkp
  int path;
  int offset;
  Embedding embedding;
};

inline Embedding place_on_path(const SubstratePath& path, const VirtualRequest& req, int offset) {
  Embedding emb;
  for (int k = 0; k < req.vn_count(); ++k) emb.node_map.push_back(path.nodes.at(offset + k));
  for (int k = 0; k < req.vl_count(); ++k) emb.link_map.push_back({path.edges.at(offset + k)});
  return emb;
}

// Items are requests (size = VL count, profit = revenue), knapsacks are
// substrate path lengths. Per path, packed requests are laid out left to
// right in efficiency order, consecutive ones sharing a boundary SN.
inline std::vector<PathPlacement> pack_mkp(std::span<const SubstratePath> paths,
                                           std::span<const VirtualRequest> requests, SolveMode mode) {
  MkpInstance inst;
  for (const auto& p : paths) inst.capacities.push_back(p.length());
  for (std::size_t j = 0; j < requests.size(); ++j) {
    if (requests[j].shape() != Shape::Path) throw StructureError("pack_mkp expects path requests");
    inst.items.push_back({requests[j].vl_count(), requests[j].revenue(), static_cast<int>(j)});
  }
  const auto sol = solve_mkp(inst, mode);

  std::vector<int> cursor(paths.size(), 0);
  std::vector<PathPlacement> out;
  for (int j : efficiency_order(inst.items)) {
    const int k = sol.assignment[j];
    if (k == kNone) continue;
    const auto& req = requests[j];
    out.push_back({j, k, cursor[k], place_on_path(paths[k], req, cursor[k])});
    cursor[k] += req.vl_count();
  }
  return out;
}

// MDKP over |V|+|E| dimensions with the current residuals as capacity.
// Selected placements are committed into `batch`; batch_ids maps request
// positions to the ids recorded there (identity when empty). Returns the
// positions of the funded placements.
inline std::vector<int> assign_mdkp(SubstrateNetwork& net, std::span<const PathPlacement> placements,
                                    std::span<const VirtualRequest> requests, SolveMode mode,
                                    EmbeddingBatch& batch, std::span<const int> batch_ids = {}) {
  MdkpInstance inst;
  for (NodeIndex v = 0; v < net.node_count(); ++v) inst.capacities.push_back(net.residual_cpu(v));
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) inst.capacities.push_back(net.residual_bw(e));
  for (std::size_t p = 0; p < placements.size(); ++p) {
    const auto& pl = placements[p];
    const auto& req = requests[pl.request];
    check_embedding_structure(net, req, pl.embedding);
    auto u = usage_of(net, req, pl.embedding);
    MdkpItem item{req.revenue(), std::move(u.cpu), static_cast<int>(p)};
    item.sizes.insert(item.sizes.end(), u.bw.begin(), u.bw.end());
    inst.items.push_back(std::move(item));
  }
  const auto sol = solve_mdkp(inst, mode);
  for (int p : sol.selected) {
    const auto& pl = placements[p];
    const int id = batch_ids.empty() ? pl.request : batch_ids[pl.request];
    batch.commit_into(net, id, requests[pl.request], pl.embedding);
  }
  return sol.selected;
}

struct PeOptions {
  SolveMode mkp = SolveMode::Greedy;
  SolveMode mdkp = SolveMode::Greedy;
};

struct PeIteration {
  std::vector<int> path_lengths;
  std::vector<int> packed;  // request indices
  std::vector<int> funded;
};

struct PeResult {
  EmbeddingBatch batch;
  std::vector<PeIteration> iterations;

  Units revenue() const { return batch.revenue(); }
};

// Rounds of decompose -> pack -> fund on the residual network until a round
// funds nothing; every round accepts at least one request, so there are at
// most |requests| productive rounds.
inline PeResult procedure_pe(SubstrateNetwork& net, std::span<const VirtualRequest> requests,
                             const PeOptions& opts = {},
                             const std::function<void(const PeIteration&)>& on_iteration = {}) {
  for (const auto& r : requests) {
    if (r.shape() != Shape::Path) throw StructureError("path embedding accepts only path requests");
  }
  PeResult result{EmbeddingBatch(net), {}};
  std::vector<int> remaining(requests.size());
  for (std::size_t j = 0; j < requests.size(); ++j) remaining[j] = static_cast<int>(j);

  while (!remaining.empty()) {
    PeIteration it;
    const auto paths = decompose_paths(net);
    for (const auto& p : paths) it.path_lengths.push_back(p.length());

    std::vector<VirtualRequest> open;
    open.reserve(remaining.size());
    for (int j : remaining) open.push_back(requests[j]);

    const auto placements = pack_mkp(paths, open, opts.mkp);
    for (const auto& pl : placements) it.packed.push_back(remaining[pl.request]);

    const auto funded = assign_mdkp(net, placements, open, opts.mdkp, result.batch, remaining);
    std::vector<char> gone(open.size(), 0);
    for (int p : funded) {
      it.funded.push_back(remaining[placements[p].request]);
      gone[placements[p].request] = 1;
    }
    std::sort(it.funded.begin(), it.funded.end());
    if (on_iteration) on_iteration(it);
    result.iterations.push_back(std::move(it));
    if (funded.empty()) break;

    std::vector<int> next;
    for (std::size_t q = 0; q < remaining.size(); ++q) {
      if (!gone[q]) next.push_back(remaining[q]);
    }
    remaining = std::move(next);
  }
  return result;
}

}  // namespace vne
