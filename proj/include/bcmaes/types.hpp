#pragma once

#include "bcmaes/errors.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace bcmaes {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

using Objective = std::function<double(const Vector&)>;

// Mean and covariance of the search distribution for one iteration.
struct GaussianMoments {
  Vector mean;
  Matrix covariance;

  int dim() const { return static_cast<int>(mean.size()); }

  void validate() const {
    if (mean.size() == 0) throw InvalidArgument("moments: empty mean");
    if (covariance.rows() != mean.size() || covariance.cols() != mean.size())
      throw InvalidArgument("moments: covariance shape mismatch");
    if (!mean.allFinite() || !covariance.allFinite())
      throw InvalidArgument("moments: non-finite entries");
  }
};

// One sampled population together with everything derived from it.
struct EvaluatedPopulation {
  std::vector<Vector> points;
  std::vector<double> fitness;
  std::vector<double> log_densities;
  std::vector<double> weights;  // normalized density weights, sum to 1

  int size() const { return static_cast<int>(points.size()); }

  void validate() const {
    const auto k = points.size();
    if (k == 0) throw InvalidArgument("population: empty");
    if (fitness.size() != k || log_densities.size() != k || weights.size() != k)
      throw InvalidArgument("population: field length mismatch");
    double wsum = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0)) throw InvalidArgument("population: negative weight");
      wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
      throw InvalidArgument("population: weights do not sum to 1");
  }
};

}  // namespace bcmaes
