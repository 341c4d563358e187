#include "bcmaes/kernels.hpp"

#include "bcmaes/errors.hpp"

namespace bcmaes::kernels {

namespace {

int chunk_count(int n) { return (n + reduction_chunk - 1) / reduction_chunk; }

void check_points(const std::vector<Vector>& points, const char* who) {
  if (points.empty())
    throw InvalidArgument(std::string(who) + ": empty point set");
  const auto p = points.front().size();
  for (const auto& x : points)
    if (x.size() != p)
      throw InvalidArgument(std::string(who) + ": inconsistent dimensions");
}

}  // namespace

std::vector<double> batch_evaluate(const Objective& f,
                                   const std::vector<Vector>& points,
                                   Exec exec) {
  check_points(points, "batch_evaluate");
  const int n = static_cast<int>(points.size());
  std::vector<double> out(n);
  for_each_index(n, exec, [&](int i) { out[i] = f(points[i]); });
  return out;
}

Vector weighted_mean(const std::vector<Vector>& points,
                     const std::vector<double>& w, Exec exec) {
  check_points(points, "weighted_mean");
  if (w.size() != points.size())
    throw InvalidArgument("weighted_mean: weight count mismatch");
  const int n = static_cast<int>(points.size());
  const auto p = points.front().size();
  const int nchunks = chunk_count(n);
  std::vector<Vector> partial(nchunks, Vector::Zero(p));
  for_each_index(nchunks, exec, [&](int c) {
    const int begin = c * reduction_chunk;
    const int end = std::min(n, begin + reduction_chunk);
    Vector acc = Vector::Zero(p);
    for (int i = begin; i < end; ++i) acc += w[i] * points[i];
    partial[c] = acc;
  });
  Vector out = Vector::Zero(p);
  for (int c = 0; c < nchunks; ++c) out += partial[c];
  return out;
}

Matrix weighted_scatter(const std::vector<Vector>& points,
                        const std::vector<double>& w, const Vector& center,
                        Exec exec) {
  check_points(points, "weighted_scatter");
  if (w.size() != points.size())
    throw InvalidArgument("weighted_scatter: weight count mismatch");
  if (center.size() != points.front().size())
    throw InvalidArgument("weighted_scatter: center dimension mismatch");
  const int n = static_cast<int>(points.size());
  const auto p = center.size();
  const int nchunks = chunk_count(n);
  std::vector<Matrix> partial(nchunks, Matrix::Zero(p, p));
  for_each_index(nchunks, exec, [&](int c) {
    const int begin = c * reduction_chunk;
    const int end = std::min(n, begin + reduction_chunk);
    Matrix acc = Matrix::Zero(p, p);
    for (int i = begin; i < end; ++i) {
      const Vector d = points[i] - center;
      // evaluate the outer product before scaling; folding w into one
      // factor rounds (a,b) and (b,a) differently
      const Matrix outer = d * d.transpose();
      acc += w[i] * outer;
    }
    partial[c] = acc;
  });
  Matrix out = Matrix::Zero(p, p);
  for (int c = 0; c < nchunks; ++c) out += partial[c];
  return out;
}

std::vector<Vector> affine_transform(const Vector& mean,
                                     const Matrix& chol_lower,
                                     const std::vector<Vector>& z, Exec exec) {
  check_points(z, "affine_transform");
  if (chol_lower.rows() != mean.size() || chol_lower.cols() != mean.size())
    throw InvalidArgument("affine_transform: factor shape mismatch");
  if (z.front().size() != mean.size())
    throw InvalidArgument("affine_transform: draw dimension mismatch");
  const int n = static_cast<int>(z.size());
  std::vector<Vector> out(n);
  for_each_index(n, exec, [&](int i) {
    out[i] = mean + chol_lower.triangularView<Eigen::Lower>() * z[i];
  });
  return out;
}

}  // namespace bcmaes::kernels
