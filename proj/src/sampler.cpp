#include "bcmaes/sampler.hpp"

#include "bcmaes/errors.hpp"
#include "bcmaes/spd.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>

namespace bcmaes {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

}  // namespace

std::vector<Vector> sample(const GaussianMoments& moments, int k, Rng& rng,
                           Exec exec) {
  moments.validate();
  if (k < 1) throw InvalidArgument("sample: k must be >= 1");
  const int p = moments.dim();
  const Matrix l = spd::cholesky(moments.covariance);

  // Serial draws fix the stream layout: point-major, coordinate-minor.
  std::vector<Vector> z(k, Vector(p));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < p; ++j) z[i][j] = rng.next_normal();

  return kernels::affine_transform(moments.mean, l, z, exec);
}

double log_density(const GaussianMoments& moments, const Vector& x) {
  moments.validate();
  if (x.size() != moments.mean.size())
    throw InvalidArgument("log_density: dimension mismatch");
  const std::vector<Vector> one{x};
  return log_densities(moments, one, Exec::serial).front();
}

std::vector<double> log_densities(const GaussianMoments& moments,
                                  const std::vector<Vector>& points,
                                  Exec exec) {
  moments.validate();
  if (points.empty()) throw InvalidArgument("log_densities: empty point set");
  const int p = moments.dim();
  for (const auto& x : points)
    if (x.size() != p)
      throw InvalidArgument("log_densities: dimension mismatch");

  Eigen::LLT<Matrix> llt(moments.covariance);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("log_densities: covariance not SPD");
  const Matrix l = llt.matrixL();
  const double logdet = 2.0 * l.diagonal().array().log().sum();
  const double base = -0.5 * (p * kLog2Pi + logdet);

  const int n = static_cast<int>(points.size());
  std::vector<double> out(n);
  kernels::for_each_index(n, exec, [&](int i) {
    const Vector y =
        l.triangularView<Eigen::Lower>().solve(points[i] - moments.mean);
    out[i] = base - 0.5 * y.squaredNorm();
  });
  return out;
}

std::vector<double> weights_from_log_densities(
    const std::vector<double>& log_densities) {
  if (log_densities.empty())
    throw InvalidArgument("weights_from_log_densities: empty input");
  for (double ld : log_densities)
    if (!std::isfinite(ld))
      throw InvalidArgument("weights_from_log_densities: non-finite log density");
  const double m = *std::max_element(log_densities.begin(), log_densities.end());
  std::vector<double> w(log_densities.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_densities[i] - m);
    sum += w[i];
  }
  for (double& wi : w) wi /= sum;
  return w;
}

std::vector<double> density_weights(const GaussianMoments& moments,
                                    const std::vector<Vector>& points,
                                    Exec exec) {
  return weights_from_log_densities(log_densities(moments, points, exec));
}

EvaluatedPopulation evaluate_population(const GaussianMoments& moments,
                                        const std::vector<Vector>& points,
                                        const Objective& f, Exec exec) {
  if (!f) throw InvalidArgument("evaluate_population: null objective");
  EvaluatedPopulation pop;
  pop.points = points;
  pop.fitness = kernels::batch_evaluate(f, points, exec);
  for (double v : pop.fitness)
    if (!std::isfinite(v))
      throw NumericalFailure("evaluate_population: non-finite fitness");
  pop.log_densities = log_densities(moments, points, exec);
  pop.weights = weights_from_log_densities(pop.log_densities);
  pop.validate();
  return pop;
}

}  // namespace bcmaes
