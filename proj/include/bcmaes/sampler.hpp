#pragma once

#include "bcmaes/kernels.hpp"
#include "bcmaes/rng.hpp"
#include "bcmaes/types.hpp"

namespace bcmaes {

// k draws from N(mean, covariance). Standard normals are drawn
// serially from rng (the draw order defines the stream); the affine
// transform to X = mean + L z may run in parallel.
std::vector<Vector> sample(const GaussianMoments& moments, int k, Rng& rng,
                           Exec exec = Exec::serial);

// Log density of N(mean, covariance) at one point.
double log_density(const GaussianMoments& moments, const Vector& x);

std::vector<double> log_densities(const GaussianMoments& moments,
                                  const std::vector<Vector>& points,
                                  Exec exec = Exec::serial);

// Normalize log densities into weights summing to 1. Works in log
// space (subtracts the max before exponentiating) so extreme
// log densities cannot overflow or collapse to all-zero.
std::vector<double> weights_from_log_densities(
    const std::vector<double>& log_densities);

// Density weights of the points under the given moments.
std::vector<double> density_weights(const GaussianMoments& moments,
                                    const std::vector<Vector>& points,
                                    Exec exec = Exec::serial);

// Bundle sampling, fitness evaluation, and density weighting.
EvaluatedPopulation evaluate_population(const GaussianMoments& moments,
                                        const std::vector<Vector>& points,
                                        const Objective& f,
                                        Exec exec = Exec::serial);

}  // namespace bcmaes
