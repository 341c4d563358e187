#include "bcmaes/prior.hpp"

#include "bcmaes/errors.hpp"
#include "bcmaes/kernels.hpp"

namespace bcmaes {

void PriorHyperparams::validate() const {
  const int p = dim();
  if (p == 0) throw InvalidArgument("prior: empty mean");
  if (!mu0.allFinite()) throw InvalidArgument("prior: non-finite mean");
  if (!(lambda > 0.0)) throw InvalidArgument("prior: lambda must be positive");
  if (!(nu > p - 1)) throw InvalidArgument("prior: nu must exceed p - 1");
  if (psi.rows() != p || psi.cols() != p)
    throw InvalidArgument("prior: Psi shape mismatch");
  if (!psi.allFinite()) throw InvalidArgument("prior: non-finite Psi");
  if (variant.family == PriorFamily::mixture &&
      !(variant.weight >= 0.0 && variant.weight <= 1.0))
    throw InvalidArgument("prior: mixture weight outside [0,1]");
}

SampleStats compute_stats(const std::vector<Vector>& points) {
  if (points.empty()) throw InvalidArgument("compute_stats: empty batch");
  const int n = static_cast<int>(points.size());
  const std::vector<double> unif(n, 1.0 / n);
  SampleStats s;
  s.n = n;
  s.xbar = kernels::weighted_mean(points, unif, Exec::serial);
  s.c = kernels::weighted_scatter(points, unif, s.xbar, Exec::serial);
  return s;
}

PriorHyperparams posterior_update(const PriorHyperparams& prior,
                                  const SampleStats& stats) {
  prior.validate();
  const int p = prior.dim();
  if (!(stats.n > 0.0)) throw InvalidArgument("posterior_update: n must be positive");
  if (stats.xbar.size() != p || stats.c.rows() != p || stats.c.cols() != p)
    throw InvalidArgument("posterior_update: stats shape mismatch");
  if (!stats.xbar.allFinite() || !stats.c.allFinite())
    throw InvalidArgument("posterior_update: non-finite stats");

  const double n = stats.n;
  const double lam1 = prior.lambda + n;
  PriorHyperparams post;
  post.mu0 = (prior.lambda * prior.mu0 + n * stats.xbar) / lam1;
  post.lambda = lam1;
  post.nu = prior.nu + n;
  const Vector d = stats.xbar - prior.mu0;
  post.psi = prior.psi + n * stats.c +
             (n * prior.lambda / lam1) * (d * d.transpose());
  post.variant = prior.variant;
  return post;
}

GaussianMoments expected_moments(const PriorHyperparams& prior) {
  prior.validate();
  const int p = prior.dim();
  double scale = 0.0;
  switch (prior.variant.family) {
    case PriorFamily::niw:
      if (!(prior.nu > p + 1))
        throw DegenerateDof("expected_moments: niw needs nu > p + 1");
      scale = 1.0 / (prior.nu - p - 1);
      break;
    case PriorFamily::nw:
      if (!(prior.nu > 0.0))
        throw DegenerateDof("expected_moments: nw needs nu > 0");
      scale = 1.0 / prior.nu;
      break;
    case PriorFamily::mixture: {
      const double w = prior.variant.weight;
      if (!(prior.nu > 0.0))
        throw DegenerateDof("expected_moments: mixture needs nu > 0");
      if (w == 0.0) {
        // pure nw limit; avoids 0/0 in the blended form at nu = p + 1
        scale = 1.0 / prior.nu;
      } else {
        if (!(prior.nu > p + 1))
          throw DegenerateDof("expected_moments: mixture with w > 0 needs nu > p + 1");
        scale = (prior.nu - p - 1 + w * p + w) / (prior.nu * (prior.nu - p - 1));
      }
      break;
    }
  }
  GaussianMoments m;
  m.mean = prior.mu0;
  m.covariance = scale * prior.psi;
  return m;
}

PriorHyperparams default_prior(const Vector& mean0, double sigma0,
                               PriorVariant variant) {
  if (mean0.size() == 0) throw InvalidArgument("default_prior: empty mean");
  if (!(sigma0 > 0.0)) throw InvalidArgument("default_prior: sigma0 must be positive");
  const int p = static_cast<int>(mean0.size());
  PriorHyperparams prior;
  prior.mu0 = mean0;
  prior.lambda = 1.0;
  prior.nu = p + 4;
  prior.psi = sigma0 * sigma0 * (prior.nu - p - 1) *
              Matrix::Identity(p, p);
  prior.variant = variant;
  prior.validate();
  return prior;
}

}  // namespace bcmaes
