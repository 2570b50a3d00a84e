// vne: instance generation, the embedders, theory sweeps and experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vne/baseline.hpp"
#include "vne/cycle_embedding.hpp"
#include "vne/experiment.hpp"
#include "vne/generators.hpp"
#include "vne/io.hpp"
#include "vne/path_embedding.hpp"
#include "vne/verify.hpp"

namespace {

using nlohmann::json;

struct SpecFlags {
  std::string topology = "random";
  std::string shape = "path";
  std::string revenue = "unit";
};

void add_spec_flags(CLI::App* cmd, vne::SubstrateSpec& s, vne::RequestSpec& r, SpecFlags& f) {
  cmd->add_option("--topology", f.topology, "random|complete|cycle|path")->capture_default_str();
  cmd->add_option("--nodes", s.nodes, "substrate node count")->capture_default_str();
  cmd->add_option("--edges", s.edges, "substrate edge count (random topology)")->capture_default_str();
  cmd->add_option("--cpu-cap-min", s.cpu_min)->capture_default_str();
  cmd->add_option("--cpu-cap-max", s.cpu_max)->capture_default_str();
  cmd->add_option("--bw-cap-min", s.bw_min)->capture_default_str();
  cmd->add_option("--bw-cap-max", s.bw_max)->capture_default_str();
  cmd->add_option("--shape", f.shape, "path|cycle")->capture_default_str();
  cmd->add_option("--requests", r.count, "request count")->capture_default_str();
  cmd->add_option("--min-vns", r.min_vns)->capture_default_str();
  cmd->add_option("--max-vns", r.max_vns)->capture_default_str();
  cmd->add_option("--cpu-min", r.cpu_min, "VN CPU demand range")->capture_default_str();
  cmd->add_option("--cpu-max", r.cpu_max)->capture_default_str();
  cmd->add_option("--bw-min", r.bw_min, "VL BW demand range")->capture_default_str();
  cmd->add_option("--bw-max", r.bw_max)->capture_default_str();
  cmd->add_option("--revenue", f.revenue, "unit|vn-count")->capture_default_str();
}

void apply(const SpecFlags& f, vne::SubstrateSpec& s, vne::RequestSpec& r) {
  s.kind = vne::parse_topology(f.topology);
  r.shape = vne::parse_shape(f.shape);
  r.revenue = vne::parse_revenue_rule(f.revenue);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

json wdag_to_json(const vne::SubstrateNetwork& net, const vne::Wdag& w, int request) {
  json layers = json::array();
  for (const auto& layer : w.layers) {
    json ids = json::array();
    for (auto s : layer) ids.push_back(net.node_id(s));
    layers.push_back(ids);
  }
  json arcs = json::array();
  for (int j = 0; j < static_cast<int>(w.arcs.size()); ++j) {
    const int next = j + 1 < w.layer_count() ? j + 1 : 0;
    for (const auto& a : w.arcs[j]) {
      arcs.push_back({{"from_layer", j},
                      {"from", net.node_id(w.layers[j][a.tail])},
                      {"to_layer", next},
                      {"to", net.node_id(w.layers[next][a.head])},
                      {"hops", a.hops},
                      {"weight", a.weight}});
    }
  }
  json j = {{"request", request},
            {"start", net.node_id(w.start)},
            {"dir", std::string(1, vne::symbol(w.dir))},
            {"layers", layers},
            {"arcs", arcs}};
  const auto c = vne::min_weight_cycle(w);
  j["dead_layer"] = w.dead_layer == vne::kNone ? json(nullptr) : json(w.dead_layer);
  j["min_cycle_weight"] = c ? json(c->weight) : json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path and cycle virtual network embedding"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a random instance as JSON");
  vne::SubstrateSpec gsub;
  vne::RequestSpec greq;
  SpecFlags gflags;
  std::uint64_t gseed = 1;
  std::string gout;
  add_spec_flags(gen, gsub, greq, gflags);
  gen->add_option("--seed", gseed)->capture_default_str();
  gen->add_option("--out", gout, "output file (stdout when omitted)");
  gen->callback([&] {
    apply(gflags, gsub, greq);
    vne::Instance inst{vne::gen_substrate(gsub, vne::mix_seed(gseed, 0)),
                       vne::gen_requests(greq, vne::mix_seed(gseed, 1))};
    emit(vne::instance_to_json(inst).dump(2) + "\n", gout);
  });

  // embed-paths
  auto* ep = app.add_subcommand("embed-paths", "path embedding (PE) on an instance file");
  std::string ep_in, ep_out, ep_trace, ep_mkp = "greedy", ep_mdkp = "greedy";
  ep->add_option("--in", ep_in, "instance JSON")->required();
  ep->add_option("--out", ep_out, "result JSON (stdout when omitted)");
  ep->add_option("--trace", ep_trace, "per-iteration JSON lines ('-' for stderr)");
  ep->add_option("--mkp", ep_mkp, "greedy|exact")->capture_default_str();
  ep->add_option("--mdkp", ep_mdkp, "greedy|exact")->capture_default_str();
  ep->callback([&] {
    auto inst = vne::load_instance(ep_in);
    const vne::SubstrateNetwork before = inst.network;
    vne::PeOptions opts{vne::parse_solve_mode(ep_mkp), vne::parse_solve_mode(ep_mdkp)};
    std::ofstream trace_file;
    std::ostream* trace = nullptr;
    if (ep_trace == "-") {
      trace = &std::cerr;
    } else if (!ep_trace.empty()) {
      trace_file.open(ep_trace);
      if (!trace_file) throw std::runtime_error("cannot write " + ep_trace);
      trace = &trace_file;
    }
    int round = 0;
    auto res = vne::procedure_pe(inst.network, inst.requests, opts, [&](const vne::PeIteration& it) {
      if (trace) {
        *trace << json{{"iteration", round}, {"path_lengths", it.path_lengths}, {"packed", it.packed},
                       {"funded", it.funded}}
                      .dump()
               << "\n";
      }
      ++round;
    });
    if (!vne::audit_batch(before, res.batch, inst.network)) throw std::logic_error("batch audit failed");
    auto out = vne::batch_to_json(before, res.batch, inst.requests.size());
    out["iterations"] = res.iterations.size();
    emit(out.dump(2) + "\n", ep_out);
  });

  // embed-cycles
  auto* ec = app.add_subcommand("embed-cycles", "greedy revenue (C2CE per request) on a cycle instance");
  std::string ec_in, ec_out, ec_dump, ec_fallback = "generic";
  ec->add_option("--in", ec_in, "instance JSON")->required();
  ec->add_option("--out", ec_out, "result JSON (stdout when omitted)");
  ec->add_option("--fallback", ec_fallback, "generic|none")->capture_default_str();
  ec->add_option("--dump-wdag", ec_dump, "write every WDAG built against the initial capacities");
  ec->callback([&] {
    auto inst = vne::load_instance(ec_in);
    const vne::SubstrateNetwork before = inst.network;
    if (!ec_dump.empty()) {
      json dump = json::array();
      for (int j = 0; j < static_cast<int>(inst.requests.size()); ++j) {
        vne::c2ce(before, inst.requests[j], [&](const vne::Wdag& w) { dump.push_back(wdag_to_json(before, w, j)); });
      }
      emit(dump.dump(2) + "\n", ec_dump);
    }
    vne::FallbackEmbedder fb;
    if (ec_fallback == "generic") {
      fb = [](const vne::SubstrateNetwork& n, const vne::VirtualRequest& r) { return vne::generic_embed(n, r); };
    } else if (ec_fallback != "none") {
      throw CLI::ValidationError("--fallback", "expected generic or none");
    }
    auto res = vne::greedy_revenue(inst.network, inst.requests, fb);
    if (!vne::audit_batch(before, res.batch, inst.network)) throw std::logic_error("batch audit failed");
    auto out = vne::batch_to_json(before, res.batch, inst.requests.size());
    out["simplex"] = res.simplex;
    out["fallback"] = res.fallback;
    emit(out.dump(2) + "\n", ec_out);
  });

  // embed-generic
  auto* eg = app.add_subcommand("embed-generic", "baseline embedder on an instance file");
  std::string eg_in, eg_out;
  bool eg_smooth = false;
  eg->add_option("--in", eg_in, "instance JSON")->required();
  eg->add_option("--out", eg_out, "result JSON (stdout when omitted)");
  eg->add_flag("--smooth-rank", eg_smooth, "one neighbor-averaging round on node ranks");
  eg->callback([&] {
    auto inst = vne::load_instance(eg_in);
    const vne::SubstrateNetwork before = inst.network;
    auto batch = vne::generic_batch(inst.network, inst.requests, vne::GenericOptions{eg_smooth});
    if (!vne::audit_batch(before, batch, inst.network)) throw std::logic_error("batch audit failed");
    emit(vne::batch_to_json(before, batch, inst.requests.size()).dump(2) + "\n", eg_out);
  });

  // verify-theory
  auto* vt = app.add_subcommand("verify-theory", "exhaustive theory sweeps, pass/fail table");
  int vt_nodes = 6, vt_samples = 40, vt_cycles = 200;
  std::uint64_t vt_seed = 7;
  vt->add_option("--max-nodes", vt_nodes, "exhaustive graph sweeps up to this size")->capture_default_str();
  vt->add_option("--samples", vt_samples, "random 7-8 node graphs for the trail check")->capture_default_str();
  vt->add_option("--cycle-cases", vt_cycles, "random cycle instances for the c2ce checks")->capture_default_str();
  vt->add_option("--seed", vt_seed)->capture_default_str();
  int vt_status = 0;
  vt->callback([&] {
    const std::vector<vne::SweepOutcome> rows{
        vne::sweep_trail_embedding(vt_nodes, vt_samples, vt_seed),
        vne::sweep_sset_to_sg(vt_nodes),
        vne::sweep_sg_to_sset(vt_nodes),
        vne::sweep_c2ce_oracle(vt_cycles, vt_seed),
        vne::sweep_cycle_correspondence(vt_cycles / 4, vt_seed + 1),
    };
    std::printf("%-46s %8s  %s\n", "check", "cases", "result");
    for (const auto& r : rows) {
      std::printf("%-46s %8d  %s\n", r.name.c_str(), r.cases, r.ok() ? "PASS" : "FAIL");
      if (!r.ok()) {
        std::printf("    %d failures; first: %s\n", r.failures, r.first_failure.c_str());
        vt_status = 1;
      }
    }
  });

  // experiment
  auto* ex = app.add_subcommand("experiment", "repeated seeded trials with 95% confidence intervals");
  vne::ExperimentConfig cfg;
  SpecFlags xflags;
  std::string ex_algos = "pe,generic", ex_out, ex_format = "csv", ex_mkp = "greedy", ex_mdkp = "greedy";
  add_spec_flags(ex, cfg.substrate, cfg.requests, xflags);
  ex->add_option("--algorithms", ex_algos, "comma list of pe,generic,gr,c2ce-seq")->capture_default_str();
  ex->add_option("--trials", cfg.trials)->capture_default_str();
  ex->add_option("--seed", cfg.seed)->capture_default_str();
  ex->add_option("--out", ex_out, "results file (stdout when omitted)");
  ex->add_option("--format", ex_format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  ex->add_option("--mkp", ex_mkp, "greedy|exact")->capture_default_str();
  ex->add_option("--mdkp", ex_mdkp, "greedy|exact")->capture_default_str();
  ex->add_flag("--timing", cfg.timing, "record wall_ms (output is then no longer reproducible)");
  ex->add_flag("--smooth-rank", cfg.generic.smooth_rank, "baseline: neighbor-averaged node ranks");
  ex->callback([&] {
    apply(xflags, cfg.substrate, cfg.requests);
    cfg.pe = {vne::parse_solve_mode(ex_mkp), vne::parse_solve_mode(ex_mdkp)};
    cfg.algorithms.clear();
    std::stringstream ss(ex_algos);
    for (std::string a; std::getline(ss, a, ',');)
      if (!a.empty()) cfg.algorithms.push_back(a);
    const auto res = vne::run_experiment(cfg);
    emit(ex_format == "csv" ? vne::to_csv(res) : vne::result_to_json(cfg, res).dump(2) + "\n", ex_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return vt_status;
}
