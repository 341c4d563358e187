#include "bcmaes/optimizer.hpp"

#include "bcmaes/benchmarks.hpp"
#include "bcmaes/correction.hpp"
#include "bcmaes/errors.hpp"
#include "bcmaes/sampler.hpp"
#include "bcmaes/spd.hpp"

#include <cmath>
#include <limits>

namespace bcmaes {

std::string to_string(Strategy s) {
  return s == Strategy::s1 ? "s1" : "s2";
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::target_reached: return "target_reached";
    case StopReason::max_iterations: return "max_iterations";
    case StopReason::stagnation: return "stagnation";
    case StopReason::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

int RunConfig::resolved_population() const {
  if (population > 0) return population;
  return 4 + static_cast<int>(std::floor(3.0 * std::log(dimension)));
}

Vector RunConfig::resolved_initial_mean() const {
  if (initial_mean.size() == 0) return Vector::Constant(dimension, 10.0);
  return initial_mean;
}

void RunConfig::validate() const {
  if (dimension < 1) throw InvalidArgument("config: dimension must be >= 1");
  if (initial_mean.size() != 0 && initial_mean.size() != dimension)
    throw InvalidArgument("config: initial mean dimension mismatch");
  if (initial_mean.size() != 0 && !initial_mean.allFinite())
    throw InvalidArgument("config: non-finite initial mean");
  if (!(sigma0 > 0.0)) throw InvalidArgument("config: sigma0 must be positive");
  if (population < 0) throw InvalidArgument("config: population must be >= 0");
  if (max_iterations < 1)
    throw InvalidArgument("config: max_iterations must be >= 1");
  if (stagnation_window < 1)
    throw InvalidArgument("config: stagnation_window must be >= 1");
  if (prior.family == PriorFamily::mixture &&
      !(prior.weight >= 0.0 && prior.weight <= 1.0))
    throw InvalidArgument("config: mixture weight outside [0,1]");
}

StepOutput step(const PriorHyperparams& prior, const RunConfig& config,
                const Objective& f, Rng& rng, int iteration,
                const RunProgress& progress, Exec exec) {
  try {
    GaussianMoments moments = expected_moments(prior);
    const int k = config.resolved_population();

    std::vector<Vector> points;
    try {
      points = sample(moments, k, rng, exec);
    } catch (const NotPositiveDefinite&) {
      moments.covariance = spd::ensure_spd(moments.covariance);
      points = sample(moments, k, rng, exec);
    }

    const EvaluatedPopulation pop = evaluate_population(moments, points, f, exec);
    const SortedPopulation sorted = double_sort(pop);

    const Vector mu_c = config.strategy == Strategy::s1
                            ? strategy_one_mean(sorted, pop, moments.mean, exec)
                            : strategy_two_mean(pop);
    const Matrix sigma_c =
        corrected_covariance(sorted, pop, moments.covariance, exec);

    SampleStats stats;
    stats.n = k;
    stats.xbar = mu_c;
    stats.c = sigma_c;
    const PriorHyperparams post = posterior_update(prior, stats);
    const GaussianMoments post_moments = expected_moments(post);

    int best = 0;
    for (int i = 1; i < pop.size(); ++i)
      if (pop.fitness[i] < pop.fitness[best]) best = i;

    StepOutput out;
    out.posterior = post;
    out.trace.iteration = iteration;
    out.trace.best_f_iter = pop.fitness[best];
    if (pop.fitness[best] < progress.best_f) {
      out.trace.best_f_so_far = pop.fitness[best];
      out.trace.best_point_so_far = pop.points[best];
    } else {
      out.trace.best_f_so_far = progress.best_f;
      out.trace.best_point_so_far = progress.best_point;
    }
    out.trace.mean = post_moments.mean;
    out.trace.logdet_cov = spd::log_det(post_moments.covariance);
    out.trace.lambda_n = post.lambda;
    out.trace.nu_n = post.nu;
    return out;
  } catch (const NotPositiveDefinite& e) {
    throw NumericalFailure(e.what());
  } catch (const DegenerateDof& e) {
    throw NumericalFailure(e.what());
  }
}

namespace {

RunResult run_impl(const RunConfig& config, const Objective& f, Exec exec,
                   const IterationObserver& on_iteration) {
  config.validate();
  if (!f) throw InvalidArgument("run: null objective");

  PriorHyperparams prior =
      default_prior(config.resolved_initial_mean(), config.sigma0, config.prior);
  Rng rng(config.seed);
  RunProgress progress;
  RunResult result;
  result.trace.reserve(config.max_iterations);
  result.stop = StopReason::max_iterations;

  for (int t = 1; t <= config.max_iterations; ++t) {
    StepOutput out;
    try {
      out = step(prior, config, f, rng, t, progress, exec);
    } catch (const NumericalFailure&) {
      result.stop = StopReason::numerical_failure;
      break;
    }
    prior = out.posterior;
    progress.best_f = out.trace.best_f_so_far;
    progress.best_point = out.trace.best_point_so_far;
    if (on_iteration) on_iteration(out.trace);
    result.trace.push_back(std::move(out.trace));

    if (progress.best_f < config.target_fitness) {
      result.stop = StopReason::target_reached;
      break;
    }
    if (t > config.stagnation_window) {
      const double then =
          result.trace[t - 1 - config.stagnation_window].best_f_so_far;
      if (then - progress.best_f < config.stagnation_tol) {
        result.stop = StopReason::stagnation;
        break;
      }
    }
  }

  result.best_point = progress.best_point;
  result.best_fitness = progress.best_f;
  result.iterations = static_cast<int>(result.trace.size());
  return result;
}

}  // namespace

RunResult run(const RunConfig& config, const Objective& f, Exec exec,
              const IterationObserver& on_iteration) {
  return run_impl(config, f, exec, on_iteration);
}

RunResult run(const RunConfig& config, Exec exec,
              const IterationObserver& on_iteration) {
  const auto& info = benchmarks::lookup(config.function);
  if (info.fixed_dim != 0 && config.dimension != info.fixed_dim)
    throw InvalidArgument("run: " + config.function + " requires dimension " +
                          std::to_string(info.fixed_dim));
  return run_impl(config, info.fn, exec, on_iteration);
}

}  // namespace bcmaes
