// Command-line front end: generate synthetic instances, run recoveries, and
// sweep dimensions into plot-ready CSV.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sptucker/bench.hpp"
#include "sptucker/io.hpp"
#include "sptucker/pipeline.hpp"
#include "sptucker/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sptucker;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitNumerical = 4;

Shape parse_dims(const std::string& text, std::size_t order_hint) {
  Shape dims;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    dims.push_back(std::stoull(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (dims.empty()) throw CLI::ValidationError("empty dimension list");
  // a single value means a cubic shape of the hinted order
  if (dims.size() == 1 && order_hint > 1) dims.assign(order_hint, dims.front());
  return dims;
}

void apply_config_json(const json& j, RecoveryConfig& cfg) {
  if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
  if (j.contains("L")) cfg.step_constant = j["L"].get<double>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("max_iters")) cfg.max_iters = j["max_iters"].get<std::size_t>();
  if (j.contains("change_tol_rel")) cfg.change_tol_rel = j["change_tol_rel"].get<double>();
  if (j.contains("a")) cfg.band_low = j["a"].get<double>();
  if (j.contains("b")) cfg.band_high = j["b"].get<double>();
  if (j.contains("gamma")) cfg.cluster_radius = j["gamma"].get<double>();
  if (j.contains("r")) cfg.dilation_radius = j["r"].get<double>();
  if (j.contains("R")) cfg.prune_window = j["R"].get<std::size_t>();
  if (j.contains("alpha")) {
    cfg.alpha_policy = AlphaPolicy::kFixed;
    cfg.alpha_fixed = j["alpha"].get<double>();
  }
  if (j.contains("warm_start_from_augmented")) {
    cfg.warm_start_from_augmented = j["warm_start_from_augmented"].get<bool>();
  }
  if (j.contains("postprocess_lambda")) {
    cfg.postprocess_lambda = j["postprocess_lambda"].get<double>();
  }
  if (j.contains("postprocess_max_iters")) {
    cfg.postprocess_max_iters = j["postprocess_max_iters"].get<std::size_t>();
  }
  if (j.contains("postprocess_change_tol_rel")) {
    cfg.postprocess_change_tol_rel = j["postprocess_change_tol_rel"].get<double>();
  }
}

json config_echo(const RecoveryConfig& cfg) {
  json j;
  j["lambda"] = cfg.lambda;
  j["L"] = cfg.step_constant;
  j["tol"] = cfg.tol;
  j["max_iters"] = cfg.max_iters;
  j["change_tol_rel"] = cfg.change_tol_rel;
  j["a"] = cfg.band_low;
  j["b"] = cfg.band_high;
  j["gamma"] = cfg.cluster_radius;
  j["r"] = cfg.dilation_radius;
  j["R"] = cfg.prune_window;
  j["alpha_policy"] =
      cfg.alpha_policy == AlphaPolicy::kFixed ? "fixed" : "median_of_support";
  j["alpha"] = cfg.alpha_fixed;
  j["warm_start_from_augmented"] = cfg.warm_start_from_augmented;
  if (cfg.postprocess_lambda) j["postprocess_lambda"] = *cfg.postprocess_lambda;
  j["postprocess_max_iters"] = cfg.postprocess_max_iters;
  j["postprocess_change_tol_rel"] = cfg.postprocess_change_tol_rel;
  return j;
}

struct ConfigFlags {
  std::optional<double> lambda, l, tol, change_tol_rel, a, b, gamma, r;
  std::optional<std::size_t> max_iters, prune_window;
  std::optional<double> alpha;
  std::optional<double> postprocess_lambda;
  std::string config_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--lambda", lambda, "regularization weight");
    cmd->add_option("--L", l, "step constant");
    cmd->add_option("--tol", tol, "effective-support threshold");
    cmd->add_option("--max-iters", max_iters, "iteration cap per stage");
    cmd->add_option("--change-tol", change_tol_rel,
                    "relative iterate-change stopping threshold");
    cmd->add_option("--a", a, "augmentation band lower bound");
    cmd->add_option("--b", b, "augmentation band upper bound");
    cmd->add_option("--gamma", gamma, "cluster radius");
    cmd->add_option("--r", r, "dilation radius");
    cmd->add_option("--R", prune_window, "pruning window");
    cmd->add_option("--alpha", alpha, "fixed augmentation target value");
    cmd->add_option("--pp-lambda", postprocess_lambda,
                    "postprocessing lambda (enables the lambda/L step)");
  }

  RecoveryConfig resolve() const {
    RecoveryConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw CLI::ValidationError("cannot read config file " + config_path);
      apply_config_json(json::parse(in), cfg);
    }
    if (lambda) cfg.lambda = *lambda;
    if (l) cfg.step_constant = *l;
    if (tol) cfg.tol = *tol;
    if (max_iters) cfg.max_iters = *max_iters;
    if (change_tol_rel) cfg.change_tol_rel = *change_tol_rel;
    if (a) cfg.band_low = *a;
    if (b) cfg.band_high = *b;
    if (gamma) cfg.cluster_radius = *gamma;
    if (r) cfg.dilation_radius = *r;
    if (prune_window) cfg.prune_window = *prune_window;
    if (alpha) {
      cfg.alpha_policy = AlphaPolicy::kFixed;
      cfg.alpha_fixed = *alpha;
    }
    if (postprocess_lambda) cfg.postprocess_lambda = *postprocess_lambda;
    cfg.validate();
    return cfg;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"sparse Tucker tensor recovery benchmark"};
  app.require_subcommand(1);

  bool deterministic = true;
  app.add_flag("--deterministic,!--no-deterministic", deterministic,
               "blank measured timings for byte-stable output (default on)");

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic instance as DTF-1 files");
  std::string gen_j, gen_i, gen_out;
  std::size_t gen_k = 10, gen_order = 3;
  std::uint64_t gen_seed = 0;
  std::size_t gen_replicate = 0;
  double gen_value_mean = 1.0, gen_value_spread = 0.1, gen_noise_spread = 0.005;
  std::string gen_convention = "stddev";
  gen->add_option("--J", gen_j, "core dimensions, e.g. 8,8,8 or 8")->required();
  gen->add_option("--I", gen_i, "observed dimensions")->required();
  gen->add_option("--k", gen_k, "support size");
  gen->add_option("--order", gen_order, "tensor order when --J/--I are scalars");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--replicate", gen_replicate, "replicate index within the seed");
  gen->add_option("--value-mean", gen_value_mean, "support value mean");
  gen->add_option("--value-spread", gen_value_spread, "support value Gaussian parameter");
  gen->add_option("--noise-spread", gen_noise_spread, "noise Gaussian parameter");
  gen->add_option("--spread-convention", gen_convention,
                  "read Gaussian parameters as 'variance' or 'stddev'")
      ->check(CLI::IsMember({"variance", "stddev"}));
  gen->add_option("-o,--out", gen_out, "output directory")->required();

  // recover
  auto* rec = app.add_subcommand("recover", "run a recovery method on an instance");
  std::string rec_dir, rec_method = "four_stage", rec_out;
  ConfigFlags rec_cfg;
  rec->add_option("instance", rec_dir, "instance directory from 'generate'")->required();
  rec->add_option("--method", rec_method, "fista | fista_pp | fista_mvpp | four_stage");
  rec->add_option("-o,--out", rec_out, "report JSON path (default stdout)");
  rec_cfg.attach(rec);

  // bench
  auto* bench = app.add_subcommand("bench", "dimension sweep, CSV output");
  std::vector<std::size_t> bench_j;
  double bench_ratio = 0.68;
  std::optional<std::size_t> bench_i;
  std::size_t bench_replicates = 20, bench_k = 10, bench_threads = 1;
  std::uint64_t bench_seed = 0;
  std::vector<std::string> bench_methods = {"fista", "fista_pp", "fista_mvpp", "four_stage"};
  std::string bench_out;
  ConfigFlags bench_cfg;
  bench->add_option("--J-list", bench_j, "core dimensions to sweep")->required();
  bench->add_option("--ratio", bench_ratio, "I = round(ratio * J)");
  bench->add_option("--I", bench_i, "explicit observed dimension (overrides --ratio)");
  bench->add_option("--replicates", bench_replicates, "replicates per sweep point");
  bench->add_option("--k", bench_k, "support size");
  bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--methods", bench_methods, "methods to compare");
  bench->add_option("--threads", bench_threads, "worker threads for replicates");
  bench->add_option("-o,--out", bench_out, "CSV path (default stdout)");
  bench_cfg.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed()) {
    ExperimentSpec spec;
    spec.core_dims = parse_dims(gen_j, gen_order);
    spec.observed_dims = parse_dims(gen_i, spec.core_dims.size());
    spec.support_size = gen_k;
    spec.seed = gen_seed;
    spec.support_value_mean = gen_value_mean;
    const bool as_variance = gen_convention == "variance";
    spec.support_value_std = gaussian_spread_to_std(gen_value_spread, as_variance);
    spec.noise_std = gaussian_spread_to_std(gen_noise_spread, as_variance);
    spec.validate();
    const Instance instance = make_instance(spec, gen_replicate);
    write_instance(gen_out, instance, spec);
    std::cout << "wrote instance to " << gen_out << "\n";
    return kExitOk;
  }

  if (rec->parsed()) {
    const Method method = parse_method(rec_method);
    const RecoveryConfig cfg = rec_cfg.resolve();
    const LoadedInstance loaded = read_instance(rec_dir);
    const RunMetrics metrics = evaluate(loaded.instance, method, cfg, 0);

    json report;
    report["format"] = "sptucker-report-v1";
    report["method"] = method_name(method);
    report["config"] = config_echo(cfg);
    report["frob_error"] = metrics.frob_error;
    report["support_precision"] = metrics.scores.precision;
    report["support_recall"] = metrics.scores.recall;
    report["support_f1"] = metrics.scores.f1;
    report["wall_time_s"] = deterministic ? 0.0 : metrics.wall_time_s;
    json stages = json::array();
    for (const auto& s : metrics.stages) {
      stages.push_back({{"name", s.name},
                        {"iterations", s.iterations},
                        {"seconds", deterministic ? 0.0 : s.seconds}});
    }
    report["stages"] = stages;

    if (rec_out.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::ofstream out(rec_out);
      if (!out) throw std::runtime_error("cannot write " + rec_out);
      out << report.dump(2) << "\n";
    }
    return kExitOk;
  }

  // bench
  BenchSpec spec;
  spec.j_values = bench_j;
  spec.ratio = bench_ratio;
  spec.explicit_i = bench_i;
  spec.replicates = bench_replicates;
  spec.support_size = bench_k;
  spec.seed = bench_seed;
  spec.threads = bench_threads;
  spec.deterministic = deterministic;
  spec.methods.clear();
  for (const auto& name : bench_methods) spec.methods.push_back(parse_method(name));
  const RecoveryConfig cfg = bench_cfg.resolve();

  const std::vector<BenchRow> rows = run_bench(spec, cfg);
  if (bench_out.empty()) {
    write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(bench_out);
    if (!out) throw std::runtime_error("cannot write " + bench_out);
    write_bench_csv(out, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
