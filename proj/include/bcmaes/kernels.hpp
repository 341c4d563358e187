#pragma once

#include "bcmaes/types.hpp"

namespace bcmaes {

enum class Exec { serial, parallel };

namespace kernels {

// Reductions accumulate fixed-width chunks into per-chunk partials and
// combine the partials in chunk order, so the serial and OpenMP paths
// produce bitwise-identical results.
inline constexpr int reduction_chunk = 64;

// fitness[i] = f(points[i])
std::vector<double> batch_evaluate(const Objective& f,
                                   const std::vector<Vector>& points,
                                   Exec exec);

// sum_i w[i] * points[i]
Vector weighted_mean(const std::vector<Vector>& points,
                     const std::vector<double>& w, Exec exec);

// sum_i w[i] * (points[i] - center) (points[i] - center)^T
Matrix weighted_scatter(const std::vector<Vector>& points,
                        const std::vector<double>& w, const Vector& center,
                        Exec exec);

// out[i] = mean + chol_lower * z[i]
std::vector<Vector> affine_transform(const Vector& mean,
                                     const Matrix& chol_lower,
                                     const std::vector<Vector>& z, Exec exec);

// Parallel or serial loop over [0, n); the body must be independent
// across indices.
template <class F>
void for_each_index(int n, Exec exec, F&& body) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) body(i);
  } else {
    for (int i = 0; i < n; ++i) body(i);
  }
}

}  // namespace kernels
}  // namespace bcmaes
