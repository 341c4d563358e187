#include "bcmaes/benchmarks.hpp"
#include "bcmaes/kernels.hpp"
#include "bcmaes/rng.hpp"
#include "bcmaes/sampler.hpp"

#include <chrono>
#include <cstdio>
#include <omp.h>

namespace {

using bcmaes::Exec;
using bcmaes::Matrix;
using bcmaes::Vector;

double time_ms(const std::function<void()>& body, int reps) {
  body();  // warm up
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-18s %10.3f %12.3f %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  const int n = 20000;
  const int p = 16;
  bcmaes::Rng rng(7);

  std::vector<Vector> points(n, Vector(p));
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) points[i][j] = rng.next_normal();
    w[i] = rng.next_uniform();
  }
  const double wsum = [&] {
    double s = 0.0;
    for (double v : w) s += v;
    return s;
  }();
  for (double& v : w) v /= wsum;

  bcmaes::GaussianMoments moments;
  moments.mean = Vector::Zero(p);
  moments.covariance = Matrix::Identity(p, p);
  const bcmaes::Objective rastrigin = bcmaes::benchmarks::rastrigin;
  const Vector center = Vector::Zero(p);

  std::printf("points=%d dim=%d threads=%d\n", n, p, omp_get_max_threads());
  std::printf("%-18s %10s %12s %8s\n", "kernel", "serial/ms", "parallel/ms",
              "speedup");

  report("batch_evaluate",
         time_ms([&] { bcmaes::kernels::batch_evaluate(rastrigin, points, Exec::serial); }, 5),
         time_ms([&] { bcmaes::kernels::batch_evaluate(rastrigin, points, Exec::parallel); }, 5));
  report("log_densities",
         time_ms([&] { bcmaes::log_densities(moments, points, Exec::serial); }, 5),
         time_ms([&] { bcmaes::log_densities(moments, points, Exec::parallel); }, 5));
  report("weighted_mean",
         time_ms([&] { bcmaes::kernels::weighted_mean(points, w, Exec::serial); }, 20),
         time_ms([&] { bcmaes::kernels::weighted_mean(points, w, Exec::parallel); }, 20));
  report("weighted_scatter",
         time_ms([&] { bcmaes::kernels::weighted_scatter(points, w, center, Exec::serial); }, 5),
         time_ms([&] { bcmaes::kernels::weighted_scatter(points, w, center, Exec::parallel); }, 5));

  return 0;
}
