#pragma once

// 0-1 knapsack (DP), multiple knapsack and multi-dimensional knapsack, each
// with a greedy heuristic and a bounded exact branch-and-bound.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "vne/network.hpp"

namespace vne {

enum class SolveMode { Greedy, Exact };

inline const char* to_string(SolveMode m) { return m == SolveMode::Greedy ? "greedy" : "exact"; }
inline SolveMode parse_solve_mode(const std::string& s) {
  if (s == "greedy") return SolveMode::Greedy;
  if (s == "exact") return SolveMode::Exact;
  throw std::invalid_argument("unknown solve mode '" + s + "'");
}

struct KpItem {
  Units size = 0;
  Units profit = 0;
  int id = 0;
};

struct KpSolution {
  std::vector<int> selected;  // positions in the item list, ascending
  Units profit = 0;
};

// Exact 0-1 knapsack by DP over capacities; O(n * capacity).
inline KpSolution solve_kp_dp(Units capacity, std::span<const KpItem> items) {
  if (capacity < 0) throw std::invalid_argument("negative knapsack capacity");
  for (const auto& it : items) {
    if (it.size < 0 || it.profit < 0) throw std::invalid_argument("negative item size or profit");
  }
  const std::size_t n = items.size();
  const auto cap = static_cast<std::size_t>(capacity);
  std::vector<Units> best(cap + 1, 0);
  std::vector<std::vector<char>> take(n, std::vector<char>(cap + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const Units s = items[i].size;
    if (s > capacity) continue;
    for (std::size_t c = cap + 1; c-- > static_cast<std::size_t>(s);) {
      const Units with = best[c - s] + items[i].profit;
      if (with > best[c]) {
        best[c] = with;
        take[i][c] = 1;
      }
    }
  }
  KpSolution sol;
  sol.profit = best[cap];
  std::size_t c = cap;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i][c]) {
      sol.selected.push_back(static_cast<int>(i));
      c -= static_cast<std::size_t>(items[i].size);
    }
  }
  std::reverse(sol.selected.begin(), sol.selected.end());
  return sol;
}

// Profit/size descending; zero-size items first. Ties: smaller size, then
// lower id.
inline bool efficiency_before(const KpItem& a, const KpItem& b) {
  const bool az = a.size == 0, bz = b.size == 0;
  if (az != bz) return az;
  if (!az) {
    const auto lhs = static_cast<__int128>(a.profit) * b.size;
    const auto rhs = static_cast<__int128>(b.profit) * a.size;
    if (lhs != rhs) return lhs > rhs;
  } else if (a.profit != b.profit) {
    return a.profit > b.profit;
  }
  if (a.size != b.size) return a.size < b.size;
  return a.id < b.id;
}

inline std::vector<int> efficiency_order(std::span<const KpItem> items) {
  std::vector<int> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return efficiency_before(items[x], items[y]); });
  return order;
}

struct MkpInstance {
  std::vector<Units> capacities;
  std::vector<KpItem> items;
};

struct MkpSolution {
  std::vector<int> assignment;  // knapsack per item, kNone when unpacked
  Units profit = 0;
};

inline constexpr std::size_t kMaxExactMkpItems = 15;

namespace detail {

inline void check_mkp(const MkpInstance& inst) {
  for (Units c : inst.capacities) {
    if (c < 0) throw std::invalid_argument("negative knapsack capacity");
  }
  for (const auto& it : inst.items) {
    if (it.size < 0 || it.profit < 0) throw std::invalid_argument("negative item size or profit");
  }
}

inline MkpSolution mkp_greedy(const MkpInstance& inst) {
  MkpSolution sol;
  sol.assignment.assign(inst.items.size(), kNone);
  std::vector<Units> room = inst.capacities;
  std::vector<int> bins(room.size());
  for (int i : efficiency_order(inst.items)) {
    const auto& item = inst.items[i];
    std::iota(bins.begin(), bins.end(), 0);
    std::stable_sort(bins.begin(), bins.end(), [&](int a, int b) { return room[a] > room[b]; });
    for (int k : bins) {
      if (room[k] >= item.size) {
        room[k] -= item.size;
        sol.assignment[i] = k;
        sol.profit += item.profit;
        break;
      }
    }
  }
  return sol;
}

// Upper bound: fractional fill of the pooled remaining capacity, counting
// only items that still fit in some single knapsack.
class MkpSearch {
 public:
  explicit MkpSearch(const MkpInstance& inst) : inst_(inst), order_(efficiency_order(inst.items)) {
    room_ = inst.capacities;
    current_.assign(inst.items.size(), kNone);
    best_ = mkp_greedy(inst);
  }

  MkpSolution run() {
    dfs(0, 0);
    return best_;
  }

 private:
  double bound(std::size_t pos, Units profit) const {
    Units pooled = 0, largest = 0;
    for (Units r : room_) {
      pooled += r;
      largest = std::max(largest, r);
    }
    double b = static_cast<double>(profit);
    for (std::size_t p = pos; p < order_.size(); ++p) {
      const auto& it = inst_.items[order_[p]];
      if (it.size > largest) continue;
      if (it.size <= pooled) {
        pooled -= it.size;
        b += static_cast<double>(it.profit);
      } else if (pooled > 0) {
        b += static_cast<double>(it.profit) * static_cast<double>(pooled) / static_cast<double>(it.size);
        pooled = 0;
      }
    }
    return b;
  }

  void dfs(std::size_t pos, Units profit) {
    if (profit > best_.profit) {
      best_.profit = profit;
      best_.assignment = current_;
    }
    if (pos == order_.size()) return;
    // integral profits: nothing below best + 1 can improve
    if (bound(pos, profit) < static_cast<double>(best_.profit) + 1.0 - 1e-6) return;
    const int i = order_[pos];
    const auto& item = inst_.items[i];
    std::vector<Units> tried;
    for (std::size_t k = 0; k < room_.size(); ++k) {
      if (room_[k] < item.size) continue;
      if (std::find(tried.begin(), tried.end(), room_[k]) != tried.end()) continue;
      tried.push_back(room_[k]);
      room_[k] -= item.size;
      current_[i] = static_cast<int>(k);
      dfs(pos + 1, profit + item.profit);
      current_[i] = kNone;
      room_[k] += item.size;
    }
    dfs(pos + 1, profit);
  }

  const MkpInstance& inst_;
  std::vector<int> order_;
  std::vector<Units> room_;
  std::vector<int> current_;
  MkpSolution best_;
};

}  // namespace detail

// Exact mode refuses more than kMaxExactMkpItems items.
inline MkpSolution solve_mkp(const MkpInstance& inst, SolveMode mode) {
  detail::check_mkp(inst);
  if (mode == SolveMode::Greedy) return detail::mkp_greedy(inst);
  if (inst.items.size() > kMaxExactMkpItems) {
    throw SizeLimitError("exact MKP limited to " + std::to_string(kMaxExactMkpItems) + " items, got " +
                         std::to_string(inst.items.size()));
  }
  return detail::MkpSearch(inst).run();
}

struct MdkpItem {
  Units profit = 0;
  std::vector<Units> sizes;
  int id = 0;
};

struct MdkpInstance {
  std::vector<Units> capacities;
  std::vector<MdkpItem> items;

  std::size_t dimensions() const { return capacities.size(); }
};

struct MdkpSolution {
  std::vector<int> selected;  // ascending positions
  Units profit = 0;
};

inline constexpr std::size_t kMaxExactMdkpItems = 24;

namespace detail {

inline void check_mdkp(const MdkpInstance& inst) {
  for (Units c : inst.capacities) {
    if (c < 0) throw std::invalid_argument("negative MDKP capacity");
  }
  for (const auto& it : inst.items) {
    if (it.sizes.size() != inst.capacities.size()) {
      throw StructureError("MDKP item " + std::to_string(it.id) + " has " + std::to_string(it.sizes.size()) +
                           " size components, expected " + std::to_string(inst.capacities.size()));
    }
    if (it.profit < 0) throw std::invalid_argument("negative MDKP profit");
    for (Units s : it.sizes) {
      if (s < 0) throw std::invalid_argument("negative MDKP size");
    }
  }
}

inline bool fits_alone(const MdkpInstance& inst, const MdkpItem& it) {
  for (std::size_t d = 0; d < inst.dimensions(); ++d) {
    if (it.sizes[d] > inst.capacities[d]) return false;
  }
  return true;
}

inline MdkpSolution mdkp_greedy(const MdkpInstance& inst) {
  struct Key {
    int index;
    bool free;        // no normalised weight at all
    double weight;    // sum of size/capacity over dimensions
    Units total;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < inst.items.size(); ++i) {
    const auto& it = inst.items[i];
    if (!fits_alone(inst, it)) continue;
    double w = 0.0;
    Units total = 0;
    for (std::size_t d = 0; d < inst.dimensions(); ++d) {
      total += it.sizes[d];
      if (it.sizes[d] > 0) w += static_cast<double>(it.sizes[d]) / static_cast<double>(inst.capacities[d]);
    }
    keys.push_back({static_cast<int>(i), w == 0.0, w, total});
  }
  std::stable_sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    const auto& ia = inst.items[a.index];
    const auto& ib = inst.items[b.index];
    if (a.free != b.free) return a.free;
    if (!a.free) {
      const double ea = static_cast<double>(ia.profit) / a.weight;
      const double eb = static_cast<double>(ib.profit) / b.weight;
      if (ea != eb) return ea > eb;
    } else if (ia.profit != ib.profit) {
      return ia.profit > ib.profit;
    }
    if (a.total != b.total) return a.total < b.total;
    return ia.id < ib.id;
  });
  MdkpSolution sol;
  std::vector<Units> room = inst.capacities;
  for (const auto& k : keys) {
    const auto& it = inst.items[k.index];
    bool ok = true;
    for (std::size_t d = 0; d < room.size() && ok; ++d) ok = it.sizes[d] <= room[d];
    if (!ok) continue;
    for (std::size_t d = 0; d < room.size(); ++d) room[d] -= it.sizes[d];
    sol.selected.push_back(k.index);
    sol.profit += it.profit;
  }
  std::sort(sol.selected.begin(), sol.selected.end());
  return sol;
}

// Depth-first branch-and-bound. The bound is the tightest of the
// per-dimension fractional knapsack relaxations.
class MdkpSearch {
 public:
  explicit MdkpSearch(const MdkpInstance& inst) : inst_(inst) {
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
      if (fits_alone(inst, inst.items[i])) candidates_.push_back(static_cast<int>(i));
    }
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [&](int a, int b) { return inst.items[a].profit > inst.items[b].profit; });
    // dimensions actually used by some candidate
    for (std::size_t d = 0; d < inst.dimensions(); ++d) {
      bool used = false;
      for (int i : candidates_) used = used || inst.items[i].sizes[d] > 0;
      if (!used) continue;
      active_dims_.push_back(d);
      std::vector<int> ord = candidates_;
      std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
        const auto& x = inst.items[a];
        const auto& y = inst.items[b];
        const bool xz = x.sizes[d] == 0, yz = y.sizes[d] == 0;
        if (xz != yz) return xz;
        if (xz) return false;
        return static_cast<__int128>(x.profit) * y.sizes[d] > static_cast<__int128>(y.profit) * x.sizes[d];
      });
      dim_orders_.push_back(std::move(ord));
    }
    room_ = inst.capacities;
    decided_.assign(inst.items.size(), 0);
    best_ = mdkp_greedy(inst);
  }

  MdkpSolution run() {
    dfs(0, 0);
    std::sort(best_.selected.begin(), best_.selected.end());
    return best_;
  }

 private:
  double bound(Units profit) const {
    double open_profit = 0.0;
    for (int i : candidates_) {
      if (!decided_[i]) open_profit += static_cast<double>(inst_.items[i].profit);
    }
    double best_bound = static_cast<double>(profit) + open_profit;
    for (std::size_t k = 0; k < active_dims_.size(); ++k) {
      const std::size_t d = active_dims_[k];
      Units cap = room_[d];
      double b = static_cast<double>(profit);
      for (int i : dim_orders_[k]) {
        if (decided_[i]) continue;
        const auto& it = inst_.items[i];
        if (it.sizes[d] <= cap) {
          cap -= it.sizes[d];
          b += static_cast<double>(it.profit);
        } else {
          b += static_cast<double>(it.profit) * static_cast<double>(cap) / static_cast<double>(it.sizes[d]);
          break;
        }
      }
      best_bound = std::min(best_bound, b);
    }
    return best_bound;
  }

  void dfs(std::size_t pos, Units profit) {
    if (profit > best_.profit) {
      best_.profit = profit;
      best_.selected = current_;
    }
    if (pos == candidates_.size()) return;
    if (bound(profit) < static_cast<double>(best_.profit) + 1.0 - 1e-6) return;
    const int i = candidates_[pos];
    const auto& it = inst_.items[i];
    decided_[i] = 1;
    bool fits = true;
    for (std::size_t d = 0; d < room_.size() && fits; ++d) fits = it.sizes[d] <= room_[d];
    if (fits) {
      for (std::size_t d = 0; d < room_.size(); ++d) room_[d] -= it.sizes[d];
      current_.push_back(i);
      dfs(pos + 1, profit + it.profit);
      current_.pop_back();
      for (std::size_t d = 0; d < room_.size(); ++d) room_[d] += it.sizes[d];
    }
    dfs(pos + 1, profit);
    decided_[i] = 0;
  }

  const MdkpInstance& inst_;
  std::vector<int> candidates_;
  std::vector<std::size_t> active_dims_;
  std::vector<std::vector<int>> dim_orders_;
  std::vector<Units> room_;
  std::vector<char> decided_;
  std::vector<int> current_;
  MdkpSolution best_;
};

}  // namespace detail

// Exact mode refuses more than kMaxExactMdkpItems items.
inline MdkpSolution solve_mdkp(const MdkpInstance& inst, SolveMode mode) {
  detail::check_mdkp(inst);
  if (mode == SolveMode::Greedy) return detail::mdkp_greedy(inst);
  if (inst.items.size() > kMaxExactMdkpItems) {
    throw SizeLimitError("exact MDKP limited to " + std::to_string(kMaxExactMdkpItems) + " items, got " +
                         std::to_string(inst.items.size()));
  }
  return detail::MdkpSearch(inst).run();
}

}  // namespace vne
