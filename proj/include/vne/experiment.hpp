#pragma once

// Repeated seeded trials: every trial draws a fresh substrate and request
// set from sub-seeds of the master seed, runs each selected algorithm on its
// own copy of the substrate, audits the resulting batch, and records the
// metrics. Aggregates carry the mean and a 95% CI half-width.

#include <boost/math/distributions/students_t.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "vne/baseline.hpp"
#include "vne/cycle_embedding.hpp"
#include "vne/generators.hpp"
#include "vne/path_embedding.hpp"

namespace vne {

// pe        path embedding (path requests)
// generic   the stand-in baseline, input order (any shape)
// gr        greedy revenue with the baseline as fallback (cycle requests, cycle substrate)
// c2ce-seq  c2ce in input order, no sorting, no fallback (cycle requests, cycle substrate)
inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{"pe", "generic", "gr", "c2ce-seq"};
  return names;
}

struct ExperimentConfig {
  SubstrateSpec substrate;
  RequestSpec requests;
  std::vector<std::string> algorithms{"pe", "generic"};
  int trials = 1;
  std::uint64_t seed = 1;
  bool timing = false;  // wall_ms stays 0 unless set, keeping output reproducible
  PeOptions pe;
  GenericOptions generic;
};

inline void check_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw StructureError("trial count must be at least 1");
  if (cfg.algorithms.empty()) throw StructureError("no algorithm selected");
  check_spec(cfg.substrate);
  check_spec(cfg.requests);
  for (const auto& a : cfg.algorithms) {
    if (std::find(known_algorithms().begin(), known_algorithms().end(), a) == known_algorithms().end()) {
      throw StructureError("unknown algorithm '" + a + "'");
    }
    if (a == "pe" && cfg.requests.shape != Shape::Path) {
      throw StructureError("algorithm 'pe' needs path requests, got " + std::string(to_string(cfg.requests.shape)));
    }
    if (a == "gr" || a == "c2ce-seq") {
      if (cfg.requests.shape != Shape::Cycle) {
        throw StructureError("algorithm '" + a + "' needs cycle requests, got " +
                             std::string(to_string(cfg.requests.shape)));
      }
      if (cfg.substrate.kind != TopologyKind::Cycle) {
        throw StructureError("algorithm '" + a + "' needs a cycle substrate");
      }
    }
  }
}

// c2ce per request in input order, committing each success.
inline EmbeddingBatch c2ce_sequential(SubstrateNetwork& net, std::span<const VirtualRequest> requests) {
  EmbeddingBatch batch(net);
  for (std::size_t j = 0; j < requests.size(); ++j) {
    if (auto s = c2ce(net, requests[j])) batch.commit_into(net, static_cast<int>(j), requests[j], s->to_embedding());
  }
  return batch;
}

inline EmbeddingBatch run_algorithm(const std::string& name, SubstrateNetwork& net,
                                    std::span<const VirtualRequest> requests, const ExperimentConfig& cfg) {
  if (name == "pe") return procedure_pe(net, requests, cfg.pe).batch;
  if (name == "generic") return generic_batch(net, requests, cfg.generic);
  if (name == "gr") {
    const GenericOptions g = cfg.generic;
    return greedy_revenue(net, requests,
                          [g](const SubstrateNetwork& n, const VirtualRequest& r) { return generic_embed(n, r, g); })
        .batch;
  }
  if (name == "c2ce-seq") return c2ce_sequential(net, requests);
  throw StructureError("unknown algorithm '" + name + "'");
}

struct TrialRecord {
  int trial = 0;
  std::string algorithm;
  double acceptance_ratio = 0.0;
  Units revenue = 0;
  double wall_ms = 0.0;
};

struct Aggregate {
  std::string algorithm;
  int samples = 0;
  double mean_acceptance = 0.0, ci95_acceptance = 0.0;
  double mean_revenue = 0.0, ci95_revenue = 0.0;
  double mean_wall_ms = 0.0, ci95_wall_ms = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // trial-major, algorithms in config order
  std::vector<Aggregate> aggregates;

  const Aggregate& aggregate(const std::string& algorithm) const {
    for (const auto& a : aggregates) {
      if (a.algorithm == algorithm) return a;
    }
    throw std::out_of_range("no aggregate for '" + algorithm + "'");
  }
};

// Two-sided 95% critical value: Student-t below 30 samples, normal above.
inline double critical_value_95(int samples) {
  if (samples < 2) return 0.0;
  if (samples >= 30) return 1.959964;
  boost::math::students_t dist(samples - 1);
  return boost::math::quantile(dist, 0.975);
}

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;
};

inline MeanCi mean_ci95(const std::vector<double>& xs) {
  MeanCi r;
  if (xs.empty()) return r;
  for (double x : xs) r.mean += x;
  r.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return r;
  double ss = 0.0;
  for (double x : xs) ss += (x - r.mean) * (x - r.mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  r.half_width = critical_value_95(static_cast<int>(xs.size())) * sd / std::sqrt(static_cast<double>(xs.size()));
  return r;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);
  ExperimentResult res;
  for (int t = 0; t < cfg.trials; ++t) {
    const auto base = gen_substrate(cfg.substrate, mix_seed(cfg.seed, 2 * static_cast<std::uint64_t>(t)));
    const auto requests = gen_requests(cfg.requests, mix_seed(cfg.seed, 2 * static_cast<std::uint64_t>(t) + 1));
    for (const auto& name : cfg.algorithms) {
      SubstrateNetwork net = base;
      const auto t0 = std::chrono::steady_clock::now();
      const auto batch = run_algorithm(name, net, requests, cfg);
      const auto t1 = std::chrono::steady_clock::now();
      std::string why;
      if (!audit_batch(base, batch, net, &why)) {
        throw std::logic_error("trial " + std::to_string(t) + ", " + name + ": batch audit failed: " + why);
      }
      const auto m = batch_metrics(batch, requests.size());
      TrialRecord r{t, name, m.acceptance_ratio, m.revenue, 0.0};
      if (cfg.timing) r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      res.records.push_back(std::move(r));
    }
  }
  for (const auto& name : cfg.algorithms) {
    std::vector<double> acr, rev, ms;
    for (const auto& r : res.records) {
      if (r.algorithm != name) continue;
      acr.push_back(r.acceptance_ratio);
      rev.push_back(static_cast<double>(r.revenue));
      ms.push_back(r.wall_ms);
    }
    const auto a = mean_ci95(acr), v = mean_ci95(rev), w = mean_ci95(ms);
    res.aggregates.push_back(
        {name, static_cast<int>(acr.size()), a.mean, a.half_width, v.mean, v.half_width, w.mean, w.half_width});
  }
  return res;
}

namespace detail {

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace detail

// trial,algorithm,acceptance_ratio,revenue,wall_ms per trial, then a `mean`
// and a `ci95` row per algorithm.
inline void write_csv(std::ostream& os, const ExperimentResult& res) {
  using detail::fixed6;
  os << "trial,algorithm,acceptance_ratio,revenue,wall_ms\n";
  for (const auto& r : res.records) {
    os << r.trial << ',' << r.algorithm << ',' << fixed6(r.acceptance_ratio) << ',' << r.revenue << ','
       << fixed6(r.wall_ms) << '\n';
  }
  for (const auto& a : res.aggregates) {
    os << "mean," << a.algorithm << ',' << fixed6(a.mean_acceptance) << ',' << fixed6(a.mean_revenue) << ','
       << fixed6(a.mean_wall_ms) << '\n';
    os << "ci95," << a.algorithm << ',' << fixed6(a.ci95_acceptance) << ',' << fixed6(a.ci95_revenue) << ','
       << fixed6(a.ci95_wall_ms) << '\n';
  }
}

inline std::string to_csv(const ExperimentResult& res) {
  std::ostringstream os;
  write_csv(os, res);
  return os.str();
}

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  return {{"substrate",
           {{"kind", to_string(cfg.substrate.kind)},
            {"nodes", cfg.substrate.nodes},
            {"edges", cfg.substrate.edges},
            {"cpu", {cfg.substrate.cpu_min, cfg.substrate.cpu_max}},
            {"bw", {cfg.substrate.bw_min, cfg.substrate.bw_max}}}},
          {"requests",
           {{"shape", to_string(cfg.requests.shape)},
            {"count", cfg.requests.count},
            {"vns", {cfg.requests.min_vns, cfg.requests.max_vns}},
            {"cpu", {cfg.requests.cpu_min, cfg.requests.cpu_max}},
            {"bw", {cfg.requests.bw_min, cfg.requests.bw_max}},
            {"revenue", to_string(cfg.requests.revenue)}}},
          {"algorithms", cfg.algorithms},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"mkp", to_string(cfg.pe.mkp)},
          {"mdkp", to_string(cfg.pe.mdkp)}};
}

inline nlohmann::json result_to_json(const ExperimentConfig& cfg, const ExperimentResult& res) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& r : res.records) {
    trials.push_back({{"trial", r.trial},
                      {"algorithm", r.algorithm},
                      {"acceptance_ratio", r.acceptance_ratio},
                      {"revenue", r.revenue},
                      {"wall_ms", r.wall_ms}});
  }
  nlohmann::json aggs = nlohmann::json::array();
  for (const auto& a : res.aggregates) {
    aggs.push_back({{"algorithm", a.algorithm},
                    {"samples", a.samples},
                    {"acceptance_ratio", {{"mean", a.mean_acceptance}, {"ci95", a.ci95_acceptance}}},
                    {"revenue", {{"mean", a.mean_revenue}, {"ci95", a.ci95_revenue}}},
                    {"wall_ms", {{"mean", a.mean_wall_ms}, {"ci95", a.ci95_wall_ms}}}});
  }
  return {{"config", config_to_json(cfg)}, {"trials", trials}, {"aggregates", aggs}};
}

}  // namespace vne
