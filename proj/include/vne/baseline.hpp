#pragma once

// Topology-agnostic two-stage embedder used as the comparison arm and as the
// fallback for Greedy Revenue. Nodes first (largest VN demand onto the best
// ranked SN), then each VL on a hop-shortest path with enough residual BW.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "vne/network.hpp"

namespace vne {

struct GenericOptions {
  bool smooth_rank = false;  // one neighbor-averaging round over the raw scores
};

// residual CPU * sum of incident residual BW.
inline std::vector<double> node_rank(const SubstrateNetwork& net, bool smooth = false) {
  std::vector<double> score(net.node_count());
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    Units bw = 0;
    for (const auto& inc : net.incident(v)) bw += net.residual_bw(inc.edge);
    score[v] = static_cast<double>(net.residual_cpu(v)) * static_cast<double>(bw);
  }
  if (!smooth) return score;
  std::vector<double> out(score.size());
  for (NodeIndex v = 0; v < net.node_count(); ++v) {
    double nb = 0.0;
    for (const auto& inc : net.incident(v)) nb += score[inc.neighbor];
    const auto deg = net.incident(v).size();
    out[v] = deg ? 0.5 * score[v] + 0.5 * nb / static_cast<double>(deg) : score[v];
  }
  return out;
}

// Hop-shortest path from src to dst over SLs whose available BW covers
// `demand`; among shortest paths the lexicographically smallest node
// sequence wins.
inline std::optional<std::vector<EdgeIndex>> shortest_feasible_path(const SubstrateNetwork& net,
                                                                    std::span<const Units> available,
                                                                    NodeIndex src, NodeIndex dst, Units demand) {
  std::vector<int> dist(net.node_count(), -1);
  std::vector<NodeIndex> queue{dst};
  dist[dst] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const NodeIndex u = queue[h];
    for (const auto& inc : net.incident(u)) {
      if (available[inc.edge] < demand || dist[inc.neighbor] >= 0) continue;
      dist[inc.neighbor] = dist[u] + 1;
      queue.push_back(inc.neighbor);
    }
  }
  if (dist[src] < 0) return std::nullopt;
  std::vector<EdgeIndex> path;
  for (NodeIndex cur = src; cur != dst;) {
    for (const auto& inc : net.incident(cur)) {
      if (available[inc.edge] >= demand && dist[inc.neighbor] == dist[cur] - 1) {
        path.push_back(inc.edge);
        cur = inc.neighbor;
        break;
      }
    }
  }
  return path;
}

inline std::optional<Embedding> generic_embed(const SubstrateNetwork& net, const VirtualRequest& req,
                                              const GenericOptions& opts = {}) {
  const auto score = node_rank(net, opts.smooth_rank);
  std::vector<NodeIndex> ranked(net.node_count());
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(), [&](NodeIndex a, NodeIndex b) { return score[a] > score[b]; });

  std::vector<int> vns(req.vn_count());
  std::iota(vns.begin(), vns.end(), 0);
  std::stable_sort(vns.begin(), vns.end(), [&](int a, int b) { return req.cpu_demand(a) > req.cpu_demand(b); });

  Embedding emb;
  emb.node_map.assign(req.vn_count(), kNone);
  std::vector<char> taken(net.node_count(), 0);
  for (int vn : vns) {
    auto it = std::find_if(ranked.begin(), ranked.end(), [&](NodeIndex s) {
      return !taken[s] && net.residual_cpu(s) >= req.cpu_demand(vn);
    });
    if (it == ranked.end()) return std::nullopt;
    emb.node_map[vn] = *it;
    taken[*it] = 1;
  }

  std::vector<Units> bw(net.edge_count());
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) bw[e] = net.residual_bw(e);
  for (const auto& vl : req.links()) {
    auto path = shortest_feasible_path(net, bw, emb.node_map[vl.u], emb.node_map[vl.v], vl.bw);
    if (!path) return std::nullopt;
    for (EdgeIndex e : *path) bw[e] -= vl.bw;
    emb.link_map.push_back(std::move(*path));
  }
  return emb;
}

// generic_embed in input order, committing each success.
inline EmbeddingBatch generic_batch(SubstrateNetwork& net, std::span<const VirtualRequest> requests,
                                    const GenericOptions& opts = {}) {
  EmbeddingBatch batch(net);
  for (std::size_t j = 0; j < requests.size(); ++j) {
    if (auto emb = generic_embed(net, requests[j], opts)) {
      batch.commit_into(net, static_cast<int>(j), requests[j], std::move(*emb));
    }
  }
  return batch;
}

}  // namespace vne
