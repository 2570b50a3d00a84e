#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "vne/baseline.hpp"
#include "vne/generators.hpp"
#include "vne/path_embedding.hpp"

using namespace vne;
using vne::test::make_net;
using vne::test::path_net;

TEST(Generic, SingleVnGoesToBestRankedNode) {
  auto net = make_net({3, 9, 5}, {{0, 1, 4}, {1, 2, 4}});
  auto emb = generic_embed(net, VirtualRequest::general({2}, {}, 1));
  ASSERT_TRUE(emb);
  EXPECT_EQ(emb->node_map, std::vector<NodeIndex>{1});
  EXPECT_TRUE(emb->link_map.empty());
}

TEST(Generic, TooBigRequestIsNotEmbedded) {
  auto net = path_net(3, 4, 4);
  EXPECT_FALSE(generic_embed(net, VirtualRequest::path({1, 1, 1, 1}, {1, 1, 1}, 1)));  // more VNs than SNs
  EXPECT_FALSE(generic_embed(net, VirtualRequest::path({5, 1}, {1}, 1)));
  EXPECT_FALSE(generic_embed(net, VirtualRequest::path({1, 1}, {5}, 1)));
}

TEST(Generic, DetoursAroundThinSls) {
  auto net = make_net({5, 5, 1}, {{0, 1, 1}, {1, 2, 5}, {0, 2, 5}});
  auto req = VirtualRequest::path({1, 1}, {3}, 1);
  auto emb = generic_embed(net, req);
  ASSERT_TRUE(emb);
  EXPECT_EQ(emb->node_map, (std::vector<NodeIndex>{0, 1}));
  EXPECT_EQ(emb->link_map[0].size(), 2u);
  EXPECT_TRUE(validate_embedding(net, req, *emb).ok());
}

TEST(Generic, RandomPathRequestsValidate) {
  auto net = gen_substrate(SubstrateSpec{TopologyKind::Random, 15, 35, 10, 40, 5, 30}, 3);
  RequestSpec rs;
  rs.count = 50;
  auto reqs = gen_requests(rs, 4);
  int found = 0;
  for (const auto& r : reqs) {
    if (auto emb = generic_embed(net, r)) {
      ++found;
      EXPECT_TRUE(validate_embedding(net, r, *emb).ok());
    }
  }
  EXPECT_GT(found, 25);
}

TEST(Generic, BatchAuditsAndSumsRevenue) {
  auto net = gen_substrate(SubstrateSpec{TopologyKind::Random, 12, 30, 20, 20, 20, 20}, 5);
  const auto before = net;
  RequestSpec rs;
  rs.count = 40;
  rs.revenue = RevenueRule::VnCount;
  auto reqs = gen_requests(rs, 6);
  auto batch = generic_batch(net, reqs);
  EXPECT_TRUE(audit_batch(before, batch, net));
  Units sum = 0;
  for (const auto& a : batch.entries()) sum += reqs[a.request_index].vn_count();
  EXPECT_EQ(batch.revenue(), sum);
}

TEST(Generic, EmptyBatch) {
  auto net = path_net(3, 4, 4);
  EXPECT_TRUE(generic_batch(net, std::vector<VirtualRequest>{}).empty());
}

TEST(Generic, NeverBeatsTheUniformPathOptimum) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const int len = 3 + static_cast<int>(rng() % 10);
    std::vector<VirtualRequest> reqs;
    for (int j = 0; j < 6; ++j) {
      const int vns = 2 + static_cast<int>(rng() % 4);
      reqs.push_back(VirtualRequest::path(std::vector<Units>(vns, 1), std::vector<Units>(vns - 1, 1),
                                          1 + static_cast<Units>(rng() % 5)));
    }
    auto a = path_net(len + 1, 2, 1), b = a;
    const Units pe = procedure_pe(a, reqs, PeOptions{SolveMode::Exact, SolveMode::Exact}).revenue();
    EXPECT_LE(generic_batch(b, reqs).revenue(), pe) << "trial " << t;
  }
}

TEST(Generic, Deterministic) {
  auto net = gen_substrate(SubstrateSpec{TopologyKind::Random, 12, 30, 20, 40, 20, 40}, 8);
  RequestSpec rs;
  rs.count = 30;
  auto reqs = gen_requests(rs, 9);
  for (bool smooth : {false, true}) {
    auto a = net, b = net;
    auto x = generic_batch(a, reqs, {smooth}), y = generic_batch(b, reqs, {smooth});
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      EXPECT_EQ(x.entries()[k].request_index, y.entries()[k].request_index);
      EXPECT_EQ(x.entries()[k].embedding.node_map, y.entries()[k].embedding.node_map);
    }
  }
}

TEST(Generic, SmoothedRankAveragesNeighbors) {
  auto net = make_net({2, 4, 6}, {{0, 1, 1}, {1, 2, 1}});
  const auto raw = node_rank(net), smooth = node_rank(net, true);
  EXPECT_DOUBLE_EQ(raw[1], 8.0);
  EXPECT_DOUBLE_EQ(smooth[0], 0.5 * raw[0] + 0.5 * raw[1]);
  EXPECT_DOUBLE_EQ(smooth[1], 0.5 * raw[1] + 0.25 * (raw[0] + raw[2]));
}
