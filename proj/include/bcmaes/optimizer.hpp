#pragma once

#include "bcmaes/kernels.hpp"
#include "bcmaes/prior.hpp"
#include "bcmaes/rng.hpp"
#include "bcmaes/types.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace bcmaes {

enum class Strategy { s1, s2 };

enum class StopReason {
  target_reached,
  max_iterations,
  stagnation,
  numerical_failure
};

std::string to_string(Strategy s);
std::string to_string(StopReason r);

struct RunConfig {
  std::string function = "cone";
  int dimension = 2;
  Vector initial_mean;        // empty: every coordinate set to 10
  double sigma0 = 1.0;
  int population = 0;         // 0: 4 + floor(3 ln p)
  Strategy strategy = Strategy::s2;
  PriorVariant prior = PriorVariant::niw();
  int max_iterations = 500;
  double target_fitness = 1e-12;
  int stagnation_window = 50;
  double stagnation_tol = 1e-12;
  std::uint64_t seed = 0;

  int resolved_population() const;
  Vector resolved_initial_mean() const;
  void validate() const;
};

// State recorded after each iteration. lambda_n and nu_n follow the
// exact counter laws lambda0 + t*k and nu0 + t*k at iteration t.
struct IterationTrace {
  int iteration = 0;  // 1-based
  double best_f_iter = 0.0;
  double best_f_so_far = 0.0;
  Vector best_point_so_far;
  Vector mean;         // post-update expected mean
  double logdet_cov = 0.0;  // post-update expected covariance
  double lambda_n = 0.0;
  double nu_n = 0.0;
};

struct RunProgress {
  double best_f = std::numeric_limits<double>::infinity();
  Vector best_point;
};

struct StepOutput {
  PriorHyperparams posterior;
  IterationTrace trace;
};

// One predict/correct iteration: expected moments, sample, evaluate,
// density-weight, double sort, corrected moments, conjugate update.
StepOutput step(const PriorHyperparams& prior, const RunConfig& config,
                const Objective& f, Rng& rng, int iteration,
                const RunProgress& progress, Exec exec = Exec::serial);

struct RunResult {
  Vector best_point;
  double best_fitness = 0.0;
  int iterations = 0;
  StopReason stop = StopReason::max_iterations;
  std::vector<IterationTrace> trace;
};

using IterationObserver = std::function<void(const IterationTrace&)>;

// The one-argument form resolves config.function from the benchmark
// registry; the objective form accepts any callable. The observer, if
// set, sees each trace row as it is produced.
RunResult run(const RunConfig& config, Exec exec = Exec::serial,
              const IterationObserver& on_iteration = {});
RunResult run(const RunConfig& config, const Objective& f,
              Exec exec = Exec::serial,
              const IterationObserver& on_iteration = {});

}  // namespace bcmaes
