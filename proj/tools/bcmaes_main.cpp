#include "bcmaes/benchmarks.hpp"
#include "bcmaes/errors.hpp"
#include "bcmaes/optimizer.hpp"
#include "bcmaes/trace_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitNumerical = 2;

struct CliOptions {
  bcmaes::RunConfig config;
  std::string strategy = "s2";
  std::string prior = "niw";
  double mix_weight = 0.5;
  std::string start;
  std::string seeds = "0..9";
  std::string out;
  bool serial = false;
};

bool log_enabled() {
  const char* v = std::getenv("BCMAES_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::vector<double> parse_number_list(const std::string& s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string tok =
        s.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw bcmaes::InvalidArgument("bad number '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "0..9" (inclusive) or "0,3,7" or a single integer.
std::vector<std::uint64_t> parse_seed_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string tok =
        s.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      const std::size_t dots = tok.find("..");
      if (dots != std::string::npos) {
        const std::uint64_t lo = std::stoull(tok.substr(0, dots));
        const std::uint64_t hi = std::stoull(tok.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument(tok);
        for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stoull(tok));
      }
    } catch (const std::exception&) {
      throw bcmaes::InvalidArgument("bad seed token '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw bcmaes::InvalidArgument("empty seed list");
  return out;
}

void finalize_config(CliOptions& opt) {
  auto& c = opt.config;
  if (opt.strategy == "s1")
    c.strategy = bcmaes::Strategy::s1;
  else if (opt.strategy == "s2")
    c.strategy = bcmaes::Strategy::s2;
  else
    throw bcmaes::InvalidArgument("unknown strategy '" + opt.strategy +
                                  "' (expected s1 or s2)");

  if (opt.prior == "niw")
    c.prior = bcmaes::PriorVariant::niw();
  else if (opt.prior == "nw")
    c.prior = bcmaes::PriorVariant::nw();
  else if (opt.prior == "mix")
    c.prior = bcmaes::PriorVariant::mixture(opt.mix_weight);
  else
    throw bcmaes::InvalidArgument("unknown prior '" + opt.prior +
                                  "' (expected niw, nw, or mix)");

  if (!opt.start.empty()) {
    const auto vals = parse_number_list(opt.start);
    c.initial_mean = Eigen::Map<const bcmaes::Vector>(
        vals.data(), static_cast<Eigen::Index>(vals.size()));
  }

  const auto& info = bcmaes::benchmarks::lookup(c.function);
  if (info.fixed_dim != 0 && c.dimension != info.fixed_dim)
    throw bcmaes::InvalidArgument(c.function + " requires --dim " +
                                  std::to_string(info.fixed_dim));
  c.validate();
  if (c.resolved_population() == 1)
    std::cerr << "warning: population size 1 gives degenerate covariance "
                 "statistics\n";
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  auto& c = opt.config;
  cmd->add_option("--function", c.function, "benchmark function name");
  cmd->add_option("--dim", c.dimension, "problem dimension");
  cmd->add_option("--start", opt.start,
                  "initial mean, comma separated (default: all 10)");
  cmd->add_option("--sigma0", c.sigma0, "initial coordinate scale");
  cmd->add_option("--popsize", c.population,
                  "population size (0: 4 + floor(3 ln dim))");
  cmd->add_option("--strategy", opt.strategy, "mean correction: s1 or s2");
  cmd->add_option("--prior", opt.prior, "moment scaling: niw, nw, or mix");
  cmd->add_option("--mix-weight", opt.mix_weight,
                  "mixture weight on the niw side, in [0,1]");
  cmd->add_option("--max-iters", c.max_iterations, "iteration budget");
  cmd->add_option("--tol", c.target_fitness, "target fitness for early stop");
  cmd->add_option("--stagnation-window", c.stagnation_window,
                  "iterations without improvement before stopping");
  cmd->add_flag("--serial", opt.serial, "disable OpenMP in the kernels");
}

int do_run(CliOptions& opt) {
  finalize_config(opt);
  const auto exec = opt.serial ? bcmaes::Exec::serial : bcmaes::Exec::parallel;
  const std::string out_path = opt.out.empty() ? "trace.csv" : opt.out;

  bcmaes::IterationObserver observer;
  if (log_enabled()) {
    observer = [](const bcmaes::IterationTrace& t) {
      std::cerr << "iter=" << t.iteration
                << " best_f=" << bcmaes::format_double(t.best_f_so_far)
                << " logdet_cov=" << bcmaes::format_double(t.logdet_cov)
                << '\n';
    };
  }

  const auto result = bcmaes::run(opt.config, exec, observer);
  bcmaes::write_trace_csv_file(out_path, result.trace, opt.config.dimension);

  std::cout << "run function=" << opt.config.function
            << " dim=" << opt.config.dimension
            << " strategy=" << bcmaes::to_string(opt.config.strategy)
            << " prior=" << opt.prior << " seed=" << opt.config.seed
            << " iters=" << result.iterations
            << " stop=" << bcmaes::to_string(result.stop)
            << " best_f=" << bcmaes::format_double(result.best_fitness)
            << " trace=" << out_path << '\n';
  return result.stop == bcmaes::StopReason::numerical_failure ? kExitNumerical
                                                              : 0;
}

int do_sweep(CliOptions& opt) {
  finalize_config(opt);
  const auto seeds = parse_seed_list(opt.seeds);
  const std::string out_dir = opt.out.empty() ? "sweep" : opt.out;
  std::filesystem::create_directories(out_dir);

  const int n = static_cast<int>(seeds.size());
  std::vector<bcmaes::RunResult> results(n);
  std::vector<std::string> errors(n);

  // One run per seed; within-run kernels stay serial to avoid nesting.
#pragma omp parallel for schedule(dynamic) if (!opt.serial)
  for (int i = 0; i < n; ++i) {
    bcmaes::RunConfig c = opt.config;
    c.seed = seeds[i];
    try {
      results[i] = bcmaes::run(c, bcmaes::Exec::serial);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  for (int i = 0; i < n; ++i)
    if (!errors[i].empty()) throw bcmaes::Error(errors[i]);

  std::vector<double> best(n);
  bool any_numerical = false;
  for (int i = 0; i < n; ++i) {
    best[i] = results[i].best_fitness;
    any_numerical |= results[i].stop == bcmaes::StopReason::numerical_failure;
    const std::string path =
        out_dir + "/seed_" + std::to_string(seeds[i]) + ".csv";
    bcmaes::write_trace_csv_file(path, results[i].trace, opt.config.dimension);
    if (log_enabled())
      std::cerr << "seed=" << seeds[i]
                << " best_f=" << bcmaes::format_double(best[i])
                << " stop=" << bcmaes::to_string(results[i].stop) << '\n';
  }

  const auto summary =
      bcmaes::summarize_best(best, opt.config.target_fitness);
  {
    std::ofstream sf(out_dir + "/summary.csv", std::ios::binary);
    if (!sf) throw bcmaes::Error("cannot write " + out_dir + "/summary.csv");
    sf << bcmaes::summary_csv(summary);
  }

  std::cout << "sweep function=" << opt.config.function
            << " dim=" << opt.config.dimension
            << " strategy=" << bcmaes::to_string(opt.config.strategy)
            << " prior=" << opt.prior << " seeds=" << summary.seeds
            << " median_best_f=" << bcmaes::format_double(summary.median_best_f)
            << " successes=" << summary.successes << " out=" << out_dir << '\n';
  return any_numerical ? kExitNumerical : 0;
}

int do_list() {
  for (const auto& name : bcmaes::benchmarks::names()) {
    const auto& info = bcmaes::benchmarks::lookup(name);
    std::cout << name;
    if (info.fixed_dim != 0)
      std::cout << " (dim " << info.fixed_dim << " only)";
    const int probe_dim = info.fixed_dim != 0 ? info.fixed_dim : 2;
    if (const auto mv = info.min_value(probe_dim))
      std::cout << "  min@dim" << probe_dim << "="
                << bcmaes::format_double(*mv);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian sampling optimizer with conjugate moment updates"};
  app.require_subcommand(1);
  CliOptions opt;

  auto* cmd_run = app.add_subcommand("run", "single optimization run");
  add_common_flags(cmd_run, opt);
  cmd_run->add_option("--seed", opt.config.seed, "rng seed");
  cmd_run->add_option("--out", opt.out, "trace csv path (default trace.csv)");

  auto* cmd_sweep = app.add_subcommand("sweep", "multi-seed study");
  add_common_flags(cmd_sweep, opt);
  cmd_sweep->add_option("--seeds", opt.seeds,
                        "seed list: A..B inclusive or comma separated");
  cmd_sweep->add_option("--out", opt.out, "output directory (default sweep)");

  app.add_subcommand("list-functions", "list available benchmarks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand("run")) return do_run(opt);
    if (app.got_subcommand("sweep")) return do_sweep(opt);
    return do_list();
  } catch (const bcmaes::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bcmaes::NumericalFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
