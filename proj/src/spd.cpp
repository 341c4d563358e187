#include "bcmaes/spd.hpp"

#include "bcmaes/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace bcmaes::spd {

namespace {

void check_square(const Matrix& a, const char* who) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw InvalidArgument(std::string(who) + ": matrix must be square and non-empty");
  if (!a.allFinite())
    throw InvalidArgument(std::string(who) + ": non-finite entries");
}

Eigen::LLT<Matrix> llt_or_throw(const Matrix& a, const char* who) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite(std::string(who) + ": Cholesky factorization failed");
  return llt;
}

}  // namespace

Matrix cholesky(const Matrix& a) {
  check_square(a, "cholesky");
  return llt_or_throw(a, "cholesky").matrixL();
}

Matrix inverse(const Matrix& a) {
  check_square(a, "inverse");
  auto llt = llt_or_throw(a, "inverse");
  return llt.solve(Matrix::Identity(a.rows(), a.cols()));
}

double log_det(const Matrix& a) {
  check_square(a, "log_det");
  auto llt = llt_or_throw(a, "log_det");
  Matrix l = llt.matrixL();
  return 2.0 * l.diagonal().array().log().sum();
}

Matrix ensure_spd(const Matrix& a, double floor_rel) {
  check_square(a, "ensure_spd");
  if (!(floor_rel > 0.0))
    throw InvalidArgument("ensure_spd: floor must be positive");

  Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("ensure_spd: eigendecomposition failed");

  const Vector& evals = es.eigenvalues();
  const double max_abs = evals.array().abs().maxCoeff();
  const double floor_val = floor_rel * (1.0 + max_abs);
  // Reconstruction round-off can leave eigenvalues a few ulps under
  // the floor; the slack keeps repeated applications a no-op.
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + max_abs);
  if (evals.minCoeff() >= floor_val - slack) return sym;

  Vector clipped = evals.cwiseMax(floor_val);
  Matrix rebuilt = es.eigenvectors() * clipped.asDiagonal() *
                   es.eigenvectors().transpose();
  return 0.5 * (rebuilt + rebuilt.transpose());
}

double inverse_convexity_gap(const Matrix& m, const Matrix& n, double lam) {
  check_square(m, "inverse_convexity_gap");
  check_square(n, "inverse_convexity_gap");
  if (m.rows() != n.rows())
    throw InvalidArgument("inverse_convexity_gap: dimension mismatch");
  if (!(lam >= 0.0 && lam <= 1.0))
    throw InvalidArgument("inverse_convexity_gap: lambda outside [0,1]");

  Matrix blend = lam * m + (1.0 - lam) * n;
  Matrix gap = lam * inverse(m) + (1.0 - lam) * inverse(n) - inverse(blend);
  Matrix sym = 0.5 * (gap + gap.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("inverse_convexity_gap: eigendecomposition failed");
  return es.eigenvalues().minCoeff();
}

}  // namespace bcmaes::spd
