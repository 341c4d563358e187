#pragma once

#include "bcmaes/kernels.hpp"
#include "bcmaes/types.hpp"

namespace bcmaes {

// The double sort pairs the i-th best fitness with the i-th largest
// density weight: points are ordered by fitness ascending while the
// weight sequence stays density-descending. Both sorts are stable
// with original-index tie-breaks, so the pairing is deterministic.
struct SortedPopulation {
  std::vector<Vector> points;    // fitness ascending
  std::vector<double> fitness;   // ascending, aligned with points
  std::vector<double> weights;   // density descending
  std::vector<int> density_order;  // original index of density rank i
  std::vector<int> fitness_order;  // original index of fitness rank i
};

SortedPopulation double_sort(const EvaluatedPopulation& pop);

// Corrected mean, strategy one: reward the fitness ordering and
// subtract the prediction residual,
//   mu_c = sum_i w_(i) X_[i]  -  (sum_i w_i X_i - mu_hat)
// with w_(i) the i-th largest weight and X_[i] the i-th best point.
Vector strategy_one_mean(const SortedPopulation& sorted,
                         const EvaluatedPopulation& pop, const Vector& mu_hat,
                         Exec exec = Exec::serial);

// Corrected mean, strategy two: the best sampled point (smallest
// fitness, first index on ties).
Vector strategy_two_mean(const EvaluatedPopulation& pop);

// Corrected covariance shared by both strategies:
//   Sigma_c = ensure_spd( S_f - (S_r - sigma_hat) )
// where S_f is the weighted scatter under the fitness pairing around
// its own weighted mean and S_r the raw-pairing scatter around the
// raw weighted mean.
Matrix corrected_covariance(const SortedPopulation& sorted,
                            const EvaluatedPopulation& pop,
                            const Matrix& sigma_hat,
                            Exec exec = Exec::serial);

}  // namespace bcmaes
