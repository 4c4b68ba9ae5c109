#include "sptucker/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <future>
#include <limits>

namespace sptucker {

std::size_t rounded_observed_dim(std::size_t j, double ratio) {
  const auto i = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(j)));
  return std::clamp<std::size_t>(i, 1, j);
}

namespace {

ExperimentSpec sweep_point_spec(const BenchSpec& bench, std::size_t j) {
  ExperimentSpec spec;
  const std::size_t i = bench.explicit_i ? *bench.explicit_i
                                         : rounded_observed_dim(j, bench.ratio);
  spec.core_dims.assign(bench.order, j);
  spec.observed_dims.assign(bench.order, i);
  spec.support_size = bench.support_size;
  spec.support_value_mean = bench.support_value_mean;
  if (bench.support_value_std > 0.0) spec.support_value_std = bench.support_value_std;
  if (bench.noise_std > 0.0) spec.noise_std = bench.noise_std;
  spec.seed = bench.seed;
  spec.replicates = bench.replicates;
  return spec;
}

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  double stddev() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(n) * m * m) /
                       static_cast<double>(n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return {buf, ptr};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& bench, const RecoveryConfig& cfg) {
  std::vector<BenchRow> rows;
  for (std::size_t j : bench.j_values) {
    const ExperimentSpec spec = sweep_point_spec(bench, j);
    spec.validate();

    // replicate cells run concurrently; results are gathered by index
    std::vector<std::vector<RunMetrics>> per_replicate(bench.replicates);
    const std::size_t workers = std::max<std::size_t>(bench.threads, 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t rep = next.fetch_add(1);
        if (rep >= bench.replicates) break;
        const Instance instance = make_instance(spec, rep);
        for (Method method : bench.methods) {
          per_replicate[rep].push_back(evaluate(instance, method, cfg, rep));
        }
      }
    };
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::future<void>> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, worker));
      }
      for (auto& f : pool) f.get();
    }

    for (Method method : bench.methods) {
      Accumulator err, time, f1;
      for (const auto& replicate : per_replicate) {
        for (const auto& m : replicate) {
          if (m.method != method) continue;
          err.add(m.frob_error);
          time.add(m.wall_time_s);
          f1.add(m.scores.f1);
        }
      }
      BenchRow row;
      row.j = j;
      row.i = spec.observed_dims.front();
      row.method = method;
      row.replicates = bench.replicates;
      row.frob_error_mean = err.mean();
      row.frob_error_std = err.stddev();
      // measured timings are inherently run-dependent; deterministic output
      // (the default) blanks them so identical seeds give identical bytes
      row.time_s_mean = bench.deterministic ? 0.0 : time.mean();
      row.time_s_std = bench.deterministic ? 0.0 : time.stddev();
      row.support_f1_mean = f1.mean();
      rows.push_back(row);
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.j != b.j) return a.j < b.j;
    return method_name(a.method) < method_name(b.method);
  });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "# schema: " << kBenchCsvSchema << "\n";
  out << "J,I,method,replicates,frob_error_mean,frob_error_std,"
         "time_s_mean,time_s_std,support_f1_mean\n";
  for (const auto& r : rows) {
    out << r.j << ',' << r.i << ',' << method_name(r.method) << ',' << r.replicates << ','
        << format_double(r.frob_error_mean) << ',' << format_double(r.frob_error_std)
        << ',' << format_double(r.time_s_mean) << ',' << format_double(r.time_s_std)
        << ',' << format_double(r.support_f1_mean) << '\n';
  }
}

}  // namespace sptucker
