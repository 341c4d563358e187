#include "bcmaes/correction.hpp"

#include "bcmaes/errors.hpp"
#include "bcmaes/spd.hpp"

#include <algorithm>
#include <numeric>

namespace bcmaes {

SortedPopulation double_sort(const EvaluatedPopulation& pop) {
  pop.validate();
  const int k = pop.size();

  std::vector<int> by_density(k);
  std::iota(by_density.begin(), by_density.end(), 0);
  std::stable_sort(by_density.begin(), by_density.end(),
                   [&](int a, int b) { return pop.weights[a] > pop.weights[b]; });

  std::vector<int> by_fitness(k);
  std::iota(by_fitness.begin(), by_fitness.end(), 0);
  std::stable_sort(by_fitness.begin(), by_fitness.end(),
                   [&](int a, int b) { return pop.fitness[a] < pop.fitness[b]; });

  SortedPopulation s;
  s.density_order = by_density;
  s.fitness_order = by_fitness;
  s.points.reserve(k);
  s.fitness.reserve(k);
  s.weights.reserve(k);
  for (int i = 0; i < k; ++i) {
    s.points.push_back(pop.points[by_fitness[i]]);
    s.fitness.push_back(pop.fitness[by_fitness[i]]);
    s.weights.push_back(pop.weights[by_density[i]]);
  }
  return s;
}

Vector strategy_one_mean(const SortedPopulation& sorted,
                         const EvaluatedPopulation& pop, const Vector& mu_hat,
                         Exec exec) {
  if (mu_hat.size() != pop.points.front().size())
    throw InvalidArgument("strategy_one_mean: mean dimension mismatch");
  const Vector reordered =
      kernels::weighted_mean(sorted.points, sorted.weights, exec);
  const Vector raw = kernels::weighted_mean(pop.points, pop.weights, exec);
  return reordered - (raw - mu_hat);
}

Vector strategy_two_mean(const EvaluatedPopulation& pop) {
  pop.validate();
  int best = 0;
  for (int i = 1; i < pop.size(); ++i)
    if (pop.fitness[i] < pop.fitness[best]) best = i;
  return pop.points[best];
}

Matrix corrected_covariance(const SortedPopulation& sorted,
                            const EvaluatedPopulation& pop,
                            const Matrix& sigma_hat, Exec exec) {
  const auto p = pop.points.front().size();
  if (sigma_hat.rows() != p || sigma_hat.cols() != p)
    throw InvalidArgument("corrected_covariance: covariance shape mismatch");

  const Vector xbar_f =
      kernels::weighted_mean(sorted.points, sorted.weights, exec);
  const Matrix scat_f =
      kernels::weighted_scatter(sorted.points, sorted.weights, xbar_f, exec);
  const Vector xbar_r = kernels::weighted_mean(pop.points, pop.weights, exec);
  const Matrix scat_r =
      kernels::weighted_scatter(pop.points, pop.weights, xbar_r, exec);

  return spd::ensure_spd(scat_f - (scat_r - sigma_hat));
}

}  // namespace bcmaes
