#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "vne/knapsack.hpp"

using namespace vne;

namespace {

std::vector<KpItem> random_items(std::mt19937_64& rng, int n, Units max_size, Units max_profit) {
  std::vector<KpItem> items;
  for (int i = 0; i < n; ++i) {
    items.push_back({static_cast<Units>(rng() % (max_size + 1)), static_cast<Units>(rng() % (max_profit + 1)), i});
  }
  return items;
}

Units kp_exhaustive(Units cap, const std::vector<KpItem>& items) {
  Units best = 0;
  for (std::uint32_t mask = 0; mask < (1u << items.size()); ++mask) {
    Units s = 0, p = 0;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask >> i & 1) s += items[i].size, p += items[i].profit;
    if (s <= cap) best = std::max(best, p);
  }
  return best;
}

// Every assignment of items to knapsacks or to nothing.
Units mkp_exhaustive(const MkpInstance& inst) {
  const int m = static_cast<int>(inst.capacities.size());
  std::vector<Units> load(m, 0);
  Units best = 0;
  std::function<void(std::size_t, Units)> go = [&](std::size_t i, Units profit) {
    if (i == inst.items.size()) {
      best = std::max(best, profit);
      return;
    }
    go(i + 1, profit);
    for (int k = 0; k < m; ++k) {
      if (load[k] + inst.items[i].size > inst.capacities[k]) continue;
      load[k] += inst.items[i].size;
      go(i + 1, profit + inst.items[i].profit);
      load[k] -= inst.items[i].size;
    }
  };
  go(0, 0);
  return best;
}

Units mdkp_exhaustive(const MdkpInstance& inst) {
  Units best = 0;
  for (std::uint32_t mask = 0; mask < (1u << inst.items.size()); ++mask) {
    bool ok = true;
    Units p = 0;
    for (std::size_t d = 0; d < inst.dimensions() && ok; ++d) {
      Units s = 0;
      for (std::size_t i = 0; i < inst.items.size(); ++i)
        if (mask >> i & 1) s += inst.items[i].sizes[d];
      ok = s <= inst.capacities[d];
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < inst.items.size(); ++i)
      if (mask >> i & 1) p += inst.items[i].profit;
    best = std::max(best, p);
  }
  return best;
}

void expect_mkp_feasible(const MkpInstance& inst, const MkpSolution& sol) {
  ASSERT_EQ(sol.assignment.size(), inst.items.size());
  std::vector<Units> load(inst.capacities.size(), 0);
  Units p = 0;
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    if (sol.assignment[i] == kNone) continue;
    load.at(sol.assignment[i]) += inst.items[i].size;
    p += inst.items[i].profit;
  }
  for (std::size_t k = 0; k < load.size(); ++k) EXPECT_LE(load[k], inst.capacities[k]);
  EXPECT_EQ(p, sol.profit);
}

void expect_mdkp_feasible(const MdkpInstance& inst, const MdkpSolution& sol) {
  std::vector<Units> load(inst.dimensions(), 0);
  Units p = 0;
  for (int i : sol.selected) {
    for (std::size_t d = 0; d < inst.dimensions(); ++d) load[d] += inst.items.at(i).sizes[d];
    p += inst.items[i].profit;
  }
  for (std::size_t d = 0; d < load.size(); ++d) EXPECT_LE(load[d], inst.capacities[d]);
  EXPECT_EQ(p, sol.profit);
}

MdkpInstance random_mdkp(std::mt19937_64& rng, int n, int d) {
  MdkpInstance inst;
  for (int k = 0; k < d; ++k) inst.capacities.push_back(5 + static_cast<Units>(rng() % 20));
  for (int i = 0; i < n; ++i) {
    MdkpItem it{static_cast<Units>(1 + rng() % 30), {}, i};
    for (int k = 0; k < d; ++k) it.sizes.push_back(static_cast<Units>(rng() % 10));
    inst.items.push_back(std::move(it));
  }
  return inst;
}

}  // namespace

TEST(Kp, ZeroCapacity) {
  std::vector<KpItem> items{{2, 5, 0}, {1, 3, 1}};
  auto s = solve_kp_dp(0, items);
  EXPECT_EQ(s.profit, 0);
  EXPECT_TRUE(s.selected.empty());
}

TEST(Kp, ZeroSizeItemsAreFree) {
  std::vector<KpItem> items{{0, 4, 0}, {3, 1, 1}};
  EXPECT_EQ(solve_kp_dp(0, items).profit, 4);
}

TEST(Kp, SingleFittingItem) {
  std::vector<KpItem> items{{4, 7, 0}};
  auto s = solve_kp_dp(4, items);
  EXPECT_EQ(s.selected, std::vector<int>{0});
  EXPECT_EQ(s.profit, 7);
}

TEST(Kp, MatchesExhaustiveUpTo15Items) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + t % 15;
    auto items = random_items(rng, n, 9, 20);
    const Units cap = t % 3 == 0 ? 20 : static_cast<Units>(rng() % 40);
    auto s = solve_kp_dp(cap, items);
    EXPECT_EQ(s.profit, kp_exhaustive(cap, items)) << "trial " << t;
    Units size = 0, profit = 0;
    for (int i : s.selected) size += items[i].size, profit += items[i].profit;
    EXPECT_LE(size, cap);
    EXPECT_EQ(profit, s.profit);
  }
}

TEST(Mkp, SingleKnapsackIsKp) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    MkpInstance inst{{static_cast<Units>(rng() % 30)}, random_items(rng, 10, 9, 15)};
    EXPECT_EQ(solve_mkp(inst, SolveMode::Exact).profit, solve_kp_dp(inst.capacities[0], inst.items).profit);
  }
}

TEST(Mkp, OversizedItemsAreLeftOut) {
  MkpInstance inst{{3, 4}, {{5, 10, 0}, {9, 2, 1}}};
  for (auto mode : {SolveMode::Greedy, SolveMode::Exact}) {
    auto s = solve_mkp(inst, mode);
    EXPECT_EQ(s.profit, 0);
    EXPECT_EQ(s.assignment, (std::vector<int>{kNone, kNone}));
  }
}

TEST(Mkp, ExactMatchesExhaustiveGreedyDominated) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 120; ++t) {
    const int n = 4 + t % 9;  // up to 12 items
    const int m = 1 + t % 3;
    MkpInstance inst;
    for (int k = 0; k < m; ++k) inst.capacities.push_back(static_cast<Units>(rng() % 15));
    inst.items = random_items(rng, n, 8, 20);
    const auto exact = solve_mkp(inst, SolveMode::Exact);
    const auto greedy = solve_mkp(inst, SolveMode::Greedy);
    expect_mkp_feasible(inst, exact);
    expect_mkp_feasible(inst, greedy);
    EXPECT_EQ(exact.profit, mkp_exhaustive(inst)) << "trial " << t;
    EXPECT_LE(greedy.profit, exact.profit);
  }
}

TEST(Mkp, ExactRefusesLargeInputs) {
  MkpInstance inst{{10}, {}};
  for (int i = 0; i < static_cast<int>(kMaxExactMkpItems) + 1; ++i) inst.items.push_back({1, 1, i});
  EXPECT_THROW(solve_mkp(inst, SolveMode::Exact), SizeLimitError);
  EXPECT_NO_THROW(solve_mkp(inst, SolveMode::Greedy));
}

TEST(Mdkp, OneDimensionIsKp) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    auto inst = random_mdkp(rng, 12, 1);
    std::vector<KpItem> items;
    for (const auto& it : inst.items) items.push_back({it.sizes[0], it.profit, it.id});
    EXPECT_EQ(solve_mdkp(inst, SolveMode::Exact).profit, solve_kp_dp(inst.capacities[0], items).profit);
  }
}

TEST(Mdkp, ZeroCapacityVector) {
  MdkpInstance inst{{0, 0}, {{5, {1, 0}, 0}, {3, {0, 2}, 1}}};
  for (auto mode : {SolveMode::Greedy, SolveMode::Exact}) EXPECT_TRUE(solve_mdkp(inst, mode).selected.empty());
}

TEST(Mdkp, DimensionMismatchIsStructural) {
  MdkpInstance inst{{3, 3}, {{1, {1}, 0}}};
  EXPECT_THROW(solve_mdkp(inst, SolveMode::Greedy), StructureError);
}

TEST(Mdkp, ExactMatchesExhaustiveGreedyDominated) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 120; ++t) {
    auto inst = random_mdkp(rng, 4 + t % 9, 1 + t % 5);  // d up to 5, 12 items
    const auto exact = solve_mdkp(inst, SolveMode::Exact);
    const auto greedy = solve_mdkp(inst, SolveMode::Greedy);
    expect_mdkp_feasible(inst, exact);
    expect_mdkp_feasible(inst, greedy);
    EXPECT_EQ(exact.profit, mdkp_exhaustive(inst)) << "trial " << t;
    EXPECT_LE(greedy.profit, exact.profit);
  }
}

TEST(Mdkp, FourDimensionsTwelveItems) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    auto inst = random_mdkp(rng, 12, 4);
    EXPECT_EQ(solve_mdkp(inst, SolveMode::Exact).profit, mdkp_exhaustive(inst));
  }
}
