#include "bcmaes/benchmarks.hpp"

#include "bcmaes/errors.hpp"

#include <cmath>

namespace bcmaes::benchmarks {

namespace {

// Per-coordinate minimum of the clipped Schwefel term, located
// numerically: argmax of x sin sqrt(x) on (0, 500).
constexpr double kSchwefel1ArgBest = 420.9687487857;
constexpr double kSchwefel1PerCoord = 1.2727567025e-05;

// Minimum of eggholder over the customary [-512, 512]^2 box (the
// function is unbounded below outside it).
constexpr double kEggholderMin = -959.6406627208;
constexpr double kEggholderX = 512.0;
constexpr double kEggholderY = 404.23180760;

void check_nonempty(const Vector& x) {
  if (x.size() == 0) throw InvalidArgument("benchmark: empty input");
}

}  // namespace

double cone(const Vector& x) {
  check_nonempty(x);
  return x.norm();
}

double schwefel2(const Vector& x) {
  check_nonempty(x);
  double sum = 0.0, prod = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    sum += a;
    prod *= a;
  }
  return sum + prod;
}

double rastrigin(const Vector& x) {
  check_nonempty(x);
  double acc = 10.0 * static_cast<double>(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    acc += x[i] * x[i] - 10.0 * std::cos(2.0 * M_PI * x[i]);
  return acc;
}

double schwefel1(const Vector& x) {
  check_nonempty(x);
  // Outside |x_i| < 500 the per-coordinate term freezes at its
  // boundary value, flattening the landscape far from the optimum.
  const double frozen = 500.0 * std::sin(std::sqrt(500.0));
  double acc = 418.9829 * static_cast<double>(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    acc -= (a < 500.0) ? x[i] * std::sin(std::sqrt(a)) : frozen;
  }
  return acc;
}

double eggholder(const Vector& x) {
  if (x.size() != 2) throw InvalidArgument("eggholder: requires dimension 2");
  const double a = x[0], b = x[1];
  return -(b + 47.0) * std::sin(std::sqrt(std::abs(a / 2.0 + b + 47.0))) -
         a * std::sin(std::sqrt(std::abs(a - (b + 47.0))));
}

std::optional<double> FunctionInfo::min_value(int dim) const {
  if (fixed_dim != 0 && dim != fixed_dim) return std::nullopt;
  if (name == "cone" || name == "schwefel2" || name == "rastrigin") return 0.0;
  if (name == "schwefel1") return kSchwefel1PerCoord * dim;
  if (name == "eggholder") return kEggholderMin;
  return std::nullopt;
}

std::optional<Vector> FunctionInfo::minimizer(int dim) const {
  if (fixed_dim != 0 && dim != fixed_dim) return std::nullopt;
  if (name == "cone" || name == "schwefel2" || name == "rastrigin")
    return Vector::Zero(dim);
  if (name == "schwefel1")
    return Vector::Constant(dim, kSchwefel1ArgBest);
  if (name == "eggholder") {
    Vector v(2);
    v << kEggholderX, kEggholderY;
    return v;
  }
  return std::nullopt;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"cone", "schwefel2", "rastrigin",
                                               "schwefel1", "eggholder"};
  return all;
}

const FunctionInfo& lookup(const std::string& name) {
  static const std::vector<FunctionInfo> registry = {
      {"cone", cone, 0},
      {"schwefel2", schwefel2, 0},
      {"rastrigin", rastrigin, 0},
      {"schwefel1", schwefel1, 0},
      {"eggholder", eggholder, 2},
  };
  for (const auto& info : registry)
    if (info.name == name) return info;
  std::string msg = "unknown benchmark '" + name + "'; available:";
  for (const auto& n : names()) msg += " " + n;
  throw InvalidArgument(msg);
}

}  // namespace bcmaes::benchmarks
