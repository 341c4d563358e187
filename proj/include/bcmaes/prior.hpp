#pragma once

#include "bcmaes/types.hpp"

namespace bcmaes {

enum class PriorFamily { niw, nw, mixture };

// Which conjugate family drives the expected moments. The mixture
// blends the two inverse scalings with weight w on the
// normal-inverse-Wishart side.
struct PriorVariant {
  PriorFamily family = PriorFamily::niw;
  double weight = 1.0;  // only meaningful for mixture

  static PriorVariant niw() { return {PriorFamily::niw, 1.0}; }
  static PriorVariant nw() { return {PriorFamily::nw, 0.0}; }
  static PriorVariant mixture(double w) { return {PriorFamily::mixture, w}; }
};

// Conjugate prior state (mu0, lambda, nu, Psi). Psi is stored in the
// inverse-Wishart orientation; the Wishart scale is Psi^-1 on demand.
struct PriorHyperparams {
  Vector mu0;
  double lambda = 1.0;
  double nu = 0.0;
  Matrix psi;
  PriorVariant variant;

  int dim() const { return static_cast<int>(mu0.size()); }
  void validate() const;
};

// Sufficient statistics of one batch: count, mean, and the sample
// covariance C = (1/n) sum (x_i - xbar)(x_i - xbar)^T.
struct SampleStats {
  double n = 0.0;
  Vector xbar;
  Matrix c;
};

SampleStats compute_stats(const std::vector<Vector>& points);

// Closed-form conjugate update:
//   mu1     = (lambda*mu0 + n*xbar) / (lambda + n)
//   lambda1 = lambda + n
//   nu1     = nu + n
//   Psi1    = Psi + n*C + n * lambda/(lambda+n) * (xbar-mu0)(xbar-mu0)^T
PriorHyperparams posterior_update(const PriorHyperparams& prior,
                                  const SampleStats& stats);

// Plug-in search distribution implied by the prior state:
// mean mu0, covariance
//   niw:     Psi / (nu - p - 1)
//   nw:      Psi / nu
//   mixture: (nu - p - 1 + w*p + w) / (nu * (nu - p - 1)) * Psi
// Throws DegenerateDof when nu is too small for the family.
GaussianMoments expected_moments(const PriorHyperparams& prior);

// Default initialization: lambda = 1, nu = p + 4,
// Psi = sigma0^2 * (nu - p - 1) * I so the initial expected covariance
// is exactly sigma0^2 * I under the niw scaling.
PriorHyperparams default_prior(const Vector& mean0, double sigma0,
                               PriorVariant variant);

}  // namespace bcmaes
