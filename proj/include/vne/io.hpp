#pragma once

// Instance JSON:
//   {"nodes":    [{"id": 1, "cpu": 100}, ...],
//    "edges":    [{"u": 1, "v": 2, "bw": 100}, ...],
//    "requests": [{"shape": "path"|"cycle"|"general",
//                  "vns": [{"id": 0, "cpu": 3}, ...],
//                  "vls": [{"u": 0, "v": 1, "bw": 2}, ...],
//                  "revenue": 1}, ...]}
// Ids are arbitrary integers; SL and VL endpoints refer to them. Requests
// are numbered by their position in the array.

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "vne/network.hpp"

namespace vne {

struct Instance {
  SubstrateNetwork network;
  std::vector<VirtualRequest> requests;
};

inline nlohmann::json network_to_json(const SubstrateNetwork& net) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int v = 0; v < net.node_count(); ++v) {
    nodes.push_back({{"id", net.node_id(v)}, {"cpu", net.cpu_capacity(v)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (int e = 0; e < net.edge_count(); ++e) {
    const auto& l = net.link(e);
    edges.push_back({{"u", net.node_id(l.u)}, {"v", net.node_id(l.v)}, {"bw", net.bw_capacity(e)}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

inline nlohmann::json request_to_json(const VirtualRequest& req) {
  nlohmann::json vns = nlohmann::json::array();
  for (int k = 0; k < req.vn_count(); ++k) vns.push_back({{"id", req.vn_id(k)}, {"cpu", req.cpu_demand(k)}});
  nlohmann::json vls = nlohmann::json::array();
  for (const auto& l : req.links()) {
    vls.push_back({{"u", req.vn_id(l.u)}, {"v", req.vn_id(l.v)}, {"bw", l.bw}});
  }
  return {{"shape", to_string(req.shape())}, {"vns", vns}, {"vls", vls}, {"revenue", req.revenue()}};
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  auto j = network_to_json(inst.network);
  j["requests"] = nlohmann::json::array();
  for (const auto& r : inst.requests) j["requests"].push_back(request_to_json(r));
  return j;
}

inline SubstrateNetwork network_from_json(const nlohmann::json& j) {
  SubstrateNetwork net;
  for (const auto& n : j.at("nodes")) net.add_node(n.at("cpu").get<Units>(), n.at("id").get<std::int64_t>());
  for (const auto& e : j.at("edges")) {
    auto u = net.index_of(e.at("u").get<std::int64_t>());
    auto v = net.index_of(e.at("v").get<std::int64_t>());
    if (!u || !v) throw StructureError("edge references unknown node id");
    net.add_edge(*u, *v, e.at("bw").get<Units>());
  }
  return net;
}

inline VirtualRequest request_from_json(const nlohmann::json& j) {
  std::vector<std::int64_t> ids;
  std::vector<Units> cpu;
  for (const auto& vn : j.at("vns")) {
    ids.push_back(vn.at("id").get<std::int64_t>());
    cpu.push_back(vn.at("cpu").get<Units>());
  }
  auto position = [&](std::int64_t id) {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] == id) return static_cast<int>(k);
    }
    throw StructureError("VL references unknown VN id " + std::to_string(id));
  };
  std::vector<VirtualLink> links;
  for (const auto& vl : j.at("vls")) {
    links.push_back({position(vl.at("u").get<std::int64_t>()), position(vl.at("v").get<std::int64_t>()),
                     vl.at("bw").get<Units>()});
  }
  auto req = VirtualRequest::from_parts(parse_shape(j.at("shape").get<std::string>()), std::move(cpu),
                                        std::move(links), j.value("revenue", Units{1}));
  req.vn_ids = std::move(ids);
  return req;
}

inline Instance instance_from_json(const nlohmann::json& j) {
  Instance inst{network_from_json(j), {}};
  if (j.contains("requests")) {
    for (const auto& r : j.at("requests")) inst.requests.push_back(request_from_json(r));
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return instance_from_json(nlohmann::json::parse(in));
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst).dump(2) << '\n';
}

inline nlohmann::json embedding_to_json(const SubstrateNetwork& net, const VirtualRequest& req,
                                        const Embedding& emb) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int k = 0; k < req.vn_count(); ++k) {
    nodes.push_back({{"vn", req.vn_id(k)}, {"sn", net.node_id(emb.node_map[k])}});
  }
  nlohmann::json links = nlohmann::json::array();
  for (int k = 0; k < req.vl_count(); ++k) {
    nlohmann::json path = nlohmann::json::array();
    for (EdgeIndex e : emb.link_map[k]) {
      const auto& l = net.link(e);
      path.push_back({net.node_id(l.u), net.node_id(l.v)});
    }
    links.push_back({{"u", req.vn_id(req.vl(k).u)}, {"v", req.vn_id(req.vl(k).v)}, {"path", path}});
  }
  return {{"request", emb.request}, {"nodes", nodes}, {"links", links}};
}

inline nlohmann::json batch_to_json(const SubstrateNetwork& net, const EmbeddingBatch& batch,
                                    std::size_t total_requests) {
  const auto m = batch_metrics(batch, total_requests);
  nlohmann::json embeddings = nlohmann::json::array();
  for (const auto& a : batch.entries()) embeddings.push_back(embedding_to_json(net, a.request, a.embedding));
  return {{"accepted", batch.size()},
          {"total", total_requests},
          {"acceptance_ratio", m.acceptance_ratio},
          {"revenue", m.revenue},
          {"embeddings", embeddings}};
}

}  // namespace vne
