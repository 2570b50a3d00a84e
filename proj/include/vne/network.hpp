#pragma once

// Substrate/virtual network model, embeddings, and the feasibility validator.
//
// All resource quantities are integer units. Capacities and demands in the
// experiments are small integers, so every comparison below is exact.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vne {

using Units = std::int64_t;
using NodeIndex = int;
using EdgeIndex = int;

inline constexpr int kNone = -1;

// Malformed graphs, requests or embeddings (as opposed to capacity breaches).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run beyond its documented size bound.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class CommitRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain undirected graph used by the combinatorial routines and generators.
struct Graph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }

  bool is_simple() const {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u == v || u < 0 || v < 0 || u >= node_count || v >= node_count) return false;
      seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }

  bool is_connected() const {
    if (node_count <= 1) return true;
    const auto adj = adjacency();
    std::vector<char> seen(node_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == node_count;
  }
};

struct Incidence {
  NodeIndex neighbor;
  EdgeIndex edge;
};

// Undirected simple graph with CPU per node and BW per edge. Capacities are
// fixed after construction; residuals move through commit/release.
class SubstrateNetwork {
 public:
  struct Link {
    NodeIndex u;
    NodeIndex v;
  };

  SubstrateNetwork() = default;

  static SubstrateNetwork from_graph(const Graph& g, Units cpu, Units bw) {
    SubstrateNetwork net;
    for (int i = 0; i < g.node_count; ++i) net.add_node(cpu);
    for (auto [u, v] : g.edges) net.add_edge(u, v, bw);
    return net;
  }

  NodeIndex add_node(Units cpu, std::int64_t external_id) {
    if (cpu < 0) throw StructureError("negative CPU capacity");
    for (auto id : ids_) {
      if (id == external_id) throw StructureError("duplicate node id " + std::to_string(external_id));
    }
    ids_.push_back(external_id);
    cpu_cap_.push_back(cpu);
    cpu_res_.push_back(cpu);
    adj_.emplace_back();
    return static_cast<NodeIndex>(ids_.size() - 1);
  }
  NodeIndex add_node(Units cpu) { return add_node(cpu, static_cast<std::int64_t>(ids_.size())); }

  EdgeIndex add_edge(NodeIndex u, NodeIndex v, Units bw) {
    if (!valid_node(u) || !valid_node(v)) throw StructureError("edge endpoint out of range");
    if (u == v) throw StructureError("self-loop on node " + std::to_string(ids_[u]));
    if (bw < 0) throw StructureError("negative BW capacity");
    if (find_edge(u, v)) {
      throw StructureError("parallel edge " + std::to_string(ids_[u]) + "-" + std::to_string(ids_[v]));
    }
    const auto e = static_cast<EdgeIndex>(links_.size());
    links_.push_back({std::min(u, v), std::max(u, v)});
    bw_cap_.push_back(bw);
    bw_res_.push_back(bw);
    insert_sorted(adj_[u], {v, e});
    insert_sorted(adj_[v], {u, e});
    return e;
  }

  int node_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(links_.size()); }
  bool valid_node(NodeIndex v) const { return v >= 0 && v < node_count(); }
  bool valid_edge(EdgeIndex e) const { return e >= 0 && e < edge_count(); }

  std::int64_t node_id(NodeIndex v) const { return ids_.at(v); }
  std::optional<NodeIndex> index_of(std::int64_t id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return static_cast<NodeIndex>(it - ids_.begin());
  }

  const Link& link(EdgeIndex e) const { return links_.at(e); }
  NodeIndex other_end(EdgeIndex e, NodeIndex v) const {
    const auto& l = links_.at(e);
    if (l.u == v) return l.v;
    if (l.v == v) return l.u;
    throw StructureError("edge not incident to node");
  }
  // Neighbors sorted by node index.
  std::span<const Incidence> incident(NodeIndex v) const { return adj_.at(v); }
  int degree(NodeIndex v) const { return static_cast<int>(adj_.at(v).size()); }

  std::optional<EdgeIndex> find_edge(NodeIndex u, NodeIndex v) const {
    if (!valid_node(u) || !valid_node(v)) return std::nullopt;
    const auto& row = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const NodeIndex target = adj_[u].size() <= adj_[v].size() ? v : u;
    for (const auto& inc : row) {
      if (inc.neighbor == target) return inc.edge;
    }
    return std::nullopt;
  }

  Units cpu_capacity(NodeIndex v) const { return cpu_cap_.at(v); }
  Units residual_cpu(NodeIndex v) const { return cpu_res_.at(v); }
  Units bw_capacity(EdgeIndex e) const { return bw_cap_.at(e); }
  Units residual_bw(EdgeIndex e) const { return bw_res_.at(e); }

  // Residual mutation is bounds-checked; higher-level atomicity lives in
  // commit()/release().
  void adjust_residual_cpu(NodeIndex v, Units delta) {
    const Units next = cpu_res_.at(v) + delta;
    if (next < 0 || next > cpu_cap_[v]) throw std::out_of_range("residual CPU out of bounds");
    cpu_res_[v] = next;
  }
  void adjust_residual_bw(EdgeIndex e, Units delta) {
    const Units next = bw_res_.at(e) + delta;
    if (next < 0 || next > bw_cap_[e]) throw std::out_of_range("residual BW out of bounds");
    bw_res_[e] = next;
  }
  void reset_residuals() {
    cpu_res_ = cpu_cap_;
    bw_res_ = bw_cap_;
  }
  bool residuals_equal(const SubstrateNetwork& other) const {
    return cpu_res_ == other.cpu_res_ && bw_res_ == other.bw_res_;
  }

  Graph topology() const {
    Graph g;
    g.node_count = node_count();
    for (const auto& l : links_) g.edges.emplace_back(l.u, l.v);
    return g;
  }

  bool is_connected() const { return topology().is_connected(); }

  // Connected, simple, and residuals within [0, capacity].
  void check_invariants() const {
    if (!is_connected()) throw StructureError("substrate network is not connected");
    for (int v = 0; v < node_count(); ++v) {
      if (cpu_res_[v] < 0 || cpu_res_[v] > cpu_cap_[v]) throw StructureError("residual CPU out of bounds");
    }
    for (int e = 0; e < edge_count(); ++e) {
      if (bw_res_[e] < 0 || bw_res_[e] > bw_cap_[e]) throw StructureError("residual BW out of bounds");
    }
  }

 private:
  static void insert_sorted(std::vector<Incidence>& row, Incidence inc) {
    auto it = std::lower_bound(row.begin(), row.end(), inc,
                               [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    row.insert(it, inc);
  }

  std::vector<std::int64_t> ids_;
  std::vector<Units> cpu_cap_, cpu_res_;
  std::vector<Link> links_;
  std::vector<Units> bw_cap_, bw_res_;
  std::vector<std::vector<Incidence>> adj_;
};

enum class Shape { Path, Cycle, General };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::Path: return "path";
    case Shape::Cycle: return "cycle";
    case Shape::General: return "general";
  }
  return "?";
}

inline Shape parse_shape(const std::string& s) {
  if (s == "path") return Shape::Path;
  if (s == "cycle") return Shape::Cycle;
  if (s == "general") return Shape::General;
  throw StructureError("unknown request shape '" + s + "'");
}

struct VirtualLink {
  int u;
  int v;
  Units bw;
};

// A VNR. VNs are addressed by position 0..n-1; for Path and Cycle the VLs
// are (k, k+1), plus (n-1, 0) for Cycle.
class VirtualRequest {
 public:
  VirtualRequest() = default;

  static VirtualRequest path(std::vector<Units> cpu, const std::vector<Units>& bw, Units revenue) {
    if (cpu.empty()) throw StructureError("path request needs at least one VN");
    if (bw.size() + 1 != cpu.size()) throw StructureError("path request with n VNs needs n-1 VLs");
    std::vector<VirtualLink> links;
    for (std::size_t k = 0; k < bw.size(); ++k) {
      links.push_back({static_cast<int>(k), static_cast<int>(k + 1), bw[k]});
    }
    return VirtualRequest(Shape::Path, std::move(cpu), std::move(links), revenue);
  }

  static VirtualRequest cycle(std::vector<Units> cpu, const std::vector<Units>& bw, Units revenue) {
    if (cpu.size() < 3) throw StructureError("cycle request needs at least three VNs");
    if (bw.size() != cpu.size()) throw StructureError("cycle request with n VNs needs n VLs");
    std::vector<VirtualLink> links;
    const int n = static_cast<int>(cpu.size());
    for (int k = 0; k < n; ++k) links.push_back({k, (k + 1) % n, bw[k]});
    return VirtualRequest(Shape::Cycle, std::move(cpu), std::move(links), revenue);
  }

  static VirtualRequest general(std::vector<Units> cpu, std::vector<VirtualLink> links, Units revenue) {
    return VirtualRequest(Shape::General, std::move(cpu), std::move(links), revenue);
  }

  // Re-derives the shape from an explicit link list (used by the JSON loader).
  static VirtualRequest from_parts(Shape shape, std::vector<Units> cpu, std::vector<VirtualLink> links,
                                   Units revenue) {
    if (shape == Shape::General) return general(std::move(cpu), std::move(links), revenue);
    const int n = static_cast<int>(cpu.size());
    const std::size_t expected = shape == Shape::Path ? static_cast<std::size_t>(std::max(n - 1, 0))
                                                      : static_cast<std::size_t>(n);
    if (links.size() != expected) throw StructureError("link count does not match request shape");
    std::vector<Units> bw;
    for (int k = 0; k < static_cast<int>(links.size()); ++k) {
      const auto& l = links[k];
      const int a = k, b = (k + 1) % n;
      if (!((l.u == a && l.v == b) || (l.u == b && l.v == a))) {
        throw StructureError("VL " + std::to_string(k) + " does not join consecutive VNs");
      }
      bw.push_back(l.bw);
    }
    return shape == Shape::Path ? path(std::move(cpu), bw, revenue) : cycle(std::move(cpu), bw, revenue);
  }

  Shape shape() const { return shape_; }
  int vn_count() const { return static_cast<int>(cpu_.size()); }
  int vl_count() const { return static_cast<int>(links_.size()); }
  Units cpu_demand(int vn) const { return cpu_.at(vn); }
  const std::vector<Units>& cpu_demands() const { return cpu_; }
  const VirtualLink& vl(int k) const { return links_.at(k); }
  const std::vector<VirtualLink>& links() const { return links_; }
  Units revenue() const { return revenue_; }

  Units total_cpu() const { return std::accumulate(cpu_.begin(), cpu_.end(), Units{0}); }
  Units total_bw() const {
    Units s = 0;
    for (const auto& l : links_) s += l.bw;
    return s;
  }

  std::vector<std::int64_t> vn_ids;  // external ids; empty means 0..n-1

  std::int64_t vn_id(int vn) const { return vn_ids.empty() ? vn : vn_ids.at(vn); }

 private:
  VirtualRequest(Shape shape, std::vector<Units> cpu, std::vector<VirtualLink> links, Units revenue)
      : shape_(shape), cpu_(std::move(cpu)), links_(std::move(links)), revenue_(revenue) {
    if (revenue_ < 0) throw StructureError("negative revenue");
    for (Units c : cpu_) {
      if (c <= 0) throw StructureError("VN CPU demand must be positive");
    }
    const int n = vn_count();
    for (const auto& l : links_) {
      if (l.bw <= 0) throw StructureError("VL BW demand must be positive");
      if (l.u < 0 || l.v < 0 || l.u >= n || l.v >= n || l.u == l.v) throw StructureError("malformed VL");
    }
  }

  Shape shape_ = Shape::General;
  std::vector<Units> cpu_;
  std::vector<VirtualLink> links_;
  Units revenue_ = 0;
};

// node_map[vn] is the hosting SN; link_map[vl] lists the SLs walked from
// node_map[vl.u] to node_map[vl.v].
struct Embedding {
  int request = kNone;
  std::vector<NodeIndex> node_map;
  std::vector<std::vector<EdgeIndex>> link_map;

  bool operator==(const Embedding&) const = default;
};

// Per-SN CPU and per-SL BW consumed by one or more embeddings.
struct ResourceUsage {
  std::vector<Units> cpu;
  std::vector<Units> bw;

  ResourceUsage() = default;
  explicit ResourceUsage(const SubstrateNetwork& net) : cpu(net.node_count(), 0), bw(net.edge_count(), 0) {}

  void add(const ResourceUsage& other, Units sign = 1) {
    for (std::size_t i = 0; i < cpu.size(); ++i) cpu[i] += sign * other.cpu[i];
    for (std::size_t i = 0; i < bw.size(); ++i) bw[i] += sign * other.bw[i];
  }
};

// Throws StructureError for dangling ids, size mismatches, and link paths
// that are not simple substrate paths between the mapped endpoints.
inline void check_embedding_structure(const SubstrateNetwork& net, const VirtualRequest& req,
                                      const Embedding& emb) {
  if (static_cast<int>(emb.node_map.size()) != req.vn_count()) {
    throw StructureError("node map size does not match VN count");
  }
  if (static_cast<int>(emb.link_map.size()) != req.vl_count()) {
    throw StructureError("link map size does not match VL count");
  }
  for (NodeIndex s : emb.node_map) {
    if (!net.valid_node(s)) throw StructureError("node map references unknown SN");
  }
  std::vector<char> on_path(net.node_count(), 0);
  for (int k = 0; k < req.vl_count(); ++k) {
    const auto& vl = req.vl(k);
    const auto& path = emb.link_map[k];
    NodeIndex cur = emb.node_map[vl.u];
    const NodeIndex dst = emb.node_map[vl.v];
    if (cur == dst) {
      if (!path.empty()) throw StructureError("VL " + std::to_string(k) + " has a path between identical SNs");
      continue;
    }
    if (path.empty()) throw StructureError("VL " + std::to_string(k) + " has an empty substrate path");
    std::vector<NodeIndex> visited{cur};
    on_path[cur] = 1;
    for (EdgeIndex e : path) {
      if (!net.valid_edge(e)) {
        for (auto x : visited) on_path[x] = 0;
        throw StructureError("link map references unknown SL");
      }
      const auto& l = net.link(e);
      if (l.u != cur && l.v != cur) {
        for (auto x : visited) on_path[x] = 0;
        throw StructureError("VL " + std::to_string(k) + " path is not contiguous");
      }
      cur = l.u == cur ? l.v : l.u;
      if (on_path[cur]) {
        for (auto x : visited) on_path[x] = 0;
        throw StructureError("VL " + std::to_string(k) + " path is not simple");
      }
      on_path[cur] = 1;
      visited.push_back(cur);
    }
    for (auto x : visited) on_path[x] = 0;
    if (cur != dst) throw StructureError("VL " + std::to_string(k) + " path ends at the wrong SN");
  }
}

inline ResourceUsage usage_of(const SubstrateNetwork& net, const VirtualRequest& req, const Embedding& emb) {
  ResourceUsage u(net);
  for (int vn = 0; vn < req.vn_count(); ++vn) u.cpu[emb.node_map[vn]] += req.cpu_demand(vn);
  for (int k = 0; k < req.vl_count(); ++k) {
    for (EdgeIndex e : emb.link_map[k]) u.bw[e] += req.vl(k).bw;
  }
  return u;
}

enum class ViolationKind { NodeReuse, Cpu, Bw };

struct Violation {
  ViolationKind kind;
  int element;  // SN index for NodeReuse/Cpu, SL index for Bw
  Units demand;
  Units available;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }

  std::string describe() const {
    std::ostringstream os;
    for (const auto& v : violations) {
      switch (v.kind) {
        case ViolationKind::NodeReuse: os << "SN " << v.element << " hosts two VNs of one request; "; break;
        case ViolationKind::Cpu: os << "SN " << v.element << " CPU " << v.demand << " > " << v.available << "; "; break;
        case ViolationKind::Bw: os << "SL " << v.element << " BW " << v.demand << " > " << v.available << "; "; break;
      }
    }
    return os.str();
  }
};

enum class CapacityBasis { Capacity, Residual };

inline ValidationReport check_usage(const SubstrateNetwork& net, const ResourceUsage& u, CapacityBasis basis) {
  ValidationReport r;
  for (int v = 0; v < net.node_count(); ++v) {
    const Units avail = basis == CapacityBasis::Capacity ? net.cpu_capacity(v) : net.residual_cpu(v);
    if (u.cpu[v] > avail) r.violations.push_back({ViolationKind::Cpu, v, u.cpu[v], avail});
  }
  for (int e = 0; e < net.edge_count(); ++e) {
    const Units avail = basis == CapacityBasis::Capacity ? net.bw_capacity(e) : net.residual_bw(e);
    if (u.bw[e] > avail) r.violations.push_back({ViolationKind::Bw, e, u.bw[e], avail});
  }
  return r;
}

inline ValidationReport validate_embedding(const SubstrateNetwork& net, const VirtualRequest& req,
                                           const Embedding& emb,
                                           CapacityBasis basis = CapacityBasis::Capacity) {
  check_embedding_structure(net, req, emb);
  ValidationReport report;
  std::vector<NodeIndex> hosts = emb.node_map;
  std::sort(hosts.begin(), hosts.end());
  for (std::size_t i = 1; i < hosts.size(); ++i) {
    if (hosts[i] == hosts[i - 1] && (i == 1 || hosts[i - 2] != hosts[i])) {
      report.violations.push_back({ViolationKind::NodeReuse, hosts[i], 0, 0});
    }
  }
  auto cap = check_usage(net, usage_of(net, req, emb), basis);
  report.violations.insert(report.violations.end(), cap.violations.begin(), cap.violations.end());
  return report;
}

// Validates against residuals, then subtracts. Nothing changes on rejection.
inline ResourceUsage commit(SubstrateNetwork& net, const VirtualRequest& req, const Embedding& emb) {
  auto report = validate_embedding(net, req, emb, CapacityBasis::Residual);
  if (!report) throw CommitRejected("infeasible embedding: " + report.describe());
  auto u = usage_of(net, req, emb);
  for (int v = 0; v < net.node_count(); ++v) {
    if (u.cpu[v]) net.adjust_residual_cpu(v, -u.cpu[v]);
  }
  for (int e = 0; e < net.edge_count(); ++e) {
    if (u.bw[e]) net.adjust_residual_bw(e, -u.bw[e]);
  }
  return u;
}

inline void release(SubstrateNetwork& net, const VirtualRequest& req, const Embedding& emb) {
  check_embedding_structure(net, req, emb);
  auto u = usage_of(net, req, emb);
  for (int v = 0; v < net.node_count(); ++v) {
    if (net.residual_cpu(v) + u.cpu[v] > net.cpu_capacity(v)) throw CommitRejected("release exceeds CPU capacity");
  }
  for (int e = 0; e < net.edge_count(); ++e) {
    if (net.residual_bw(e) + u.bw[e] > net.bw_capacity(e)) throw CommitRejected("release exceeds BW capacity");
  }
  for (int v = 0; v < net.node_count(); ++v) {
    if (u.cpu[v]) net.adjust_residual_cpu(v, u.cpu[v]);
  }
  for (int e = 0; e < net.edge_count(); ++e) {
    if (u.bw[e]) net.adjust_residual_bw(e, u.bw[e]);
  }
}

struct AcceptedRequest {
  int request_index;
  VirtualRequest request;
  Embedding embedding;
};

// Requests accepted from one request set, in commit order, plus their
// aggregate usage.
class EmbeddingBatch {
 public:
  EmbeddingBatch() = default;
  explicit EmbeddingBatch(const SubstrateNetwork& net) : usage_(net) {}

  // Commits against net's residuals and records the entry.
  void commit_into(SubstrateNetwork& net, int request_index, const VirtualRequest& req, Embedding emb) {
    if (usage_.cpu.empty() && usage_.bw.empty()) usage_ = ResourceUsage(net);
    emb.request = request_index;
    auto u = commit(net, req, emb);
    usage_.add(u);
    entries_.push_back({request_index, req, std::move(emb)});
  }

  const std::vector<AcceptedRequest>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const ResourceUsage& usage() const { return usage_; }

  Units revenue() const {
    Units r = 0;
    for (const auto& a : entries_) r += a.request.revenue();
    return r;
  }

  bool contains(int request_index) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const AcceptedRequest& a) { return a.request_index == request_index; });
  }

 private:
  std::vector<AcceptedRequest> entries_;
  ResourceUsage usage_;
};

// Whole-batch check against capacities: every entry is structurally sound
// and injective, and aggregate usage fits every SN and SL.
inline ValidationReport validate_batch(const SubstrateNetwork& net, const EmbeddingBatch& batch) {
  ValidationReport report;
  ResourceUsage total(net);
  for (const auto& a : batch.entries()) {
    auto r = validate_embedding(net, a.request, a.embedding, CapacityBasis::Capacity);
    for (const auto& v : r.violations) {
      if (v.kind == ViolationKind::NodeReuse) report.violations.push_back(v);
    }
    total.add(usage_of(net, a.request, a.embedding));
  }
  auto cap = check_usage(net, total, CapacityBasis::Capacity);
  report.violations.insert(report.violations.end(), cap.violations.begin(), cap.violations.end());
  return report;
}

// Replays a batch on a copy of the network it started from: every entry must
// validate against the residuals at its commit point, and the replayed
// residuals must equal `after` (capacity minus committed demand).
inline bool audit_batch(const SubstrateNetwork& before, const EmbeddingBatch& batch,
                        const SubstrateNetwork& after, std::string* why = nullptr) {
  SubstrateNetwork replay = before;
  for (const auto& a : batch.entries()) {
    auto r = validate_embedding(replay, a.request, a.embedding, CapacityBasis::Residual);
    if (!r) {
      if (why) *why = "request " + std::to_string(a.request_index) + ": " + r.describe();
      return false;
    }
    commit(replay, a.request, a.embedding);
  }
  if (!replay.residuals_equal(after)) {
    if (why) *why = "residuals differ from replayed commits";
    return false;
  }
  const auto& used = batch.usage();
  for (int v = 0; v < before.node_count(); ++v) {
    const Units u = used.cpu.empty() ? 0 : used.cpu.at(v);
    if (after.residual_cpu(v) != before.residual_cpu(v) - u) {
      if (why) *why = "CPU residual mismatch at SN " + std::to_string(v);
      return false;
    }
  }
  for (int e = 0; e < before.edge_count(); ++e) {
    const Units u = used.bw.empty() ? 0 : used.bw.at(e);
    if (after.residual_bw(e) != before.residual_bw(e) - u) {
      if (why) *why = "BW residual mismatch at SL " + std::to_string(e);
      return false;
    }
  }
  return true;
}

struct BatchMetrics {
  double acceptance_ratio = 0.0;
  Units revenue = 0;
};

inline BatchMetrics batch_metrics(const EmbeddingBatch& batch, std::size_t total_requests) {
  BatchMetrics m;
  m.revenue = batch.revenue();
  if (total_requests > 0) m.acceptance_ratio = static_cast<double>(batch.size()) / total_requests;
  return m;
}

}  // namespace vne
