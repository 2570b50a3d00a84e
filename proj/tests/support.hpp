#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "vne/network.hpp"

namespace vne::test {

// Network from per-node CPU and (u, v, bw) triples.
inline SubstrateNetwork make_net(const std::vector<Units>& cpu,
                                 const std::vector<std::tuple<int, int, Units>>& edges) {
  SubstrateNetwork net;
  for (Units c : cpu) net.add_node(c);
  for (auto [u, v, bw] : edges) net.add_edge(u, v, bw);
  return net;
}

inline SubstrateNetwork path_net(int nodes, Units cpu, Units bw) {
  SubstrateNetwork net;
  for (int i = 0; i < nodes; ++i) net.add_node(cpu);
  for (int i = 0; i + 1 < nodes; ++i) net.add_edge(i, i + 1, bw);
  return net;
}

inline SubstrateNetwork cycle_net(const std::vector<Units>& cpu, const std::vector<Units>& bw) {
  SubstrateNetwork net;
  for (Units c : cpu) net.add_node(c);
  const int m = static_cast<int>(cpu.size());
  for (int i = 0; i < m; ++i) net.add_edge(i, (i + 1) % m, bw[i]);
  return net;
}

inline std::string fixture(const std::string& name) { return std::string(VNE_FIXTURES) + "/" + name; }

}  // namespace vne::test
