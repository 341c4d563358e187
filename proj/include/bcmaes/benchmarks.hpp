#pragma once

#include "bcmaes/types.hpp"

#include <optional>
#include <string>

namespace bcmaes::benchmarks {

double cone(const Vector& x);        // ||x||_2
double schwefel2(const Vector& x);   // sum |x_i| + prod |x_i|
double rastrigin(const Vector& x);   // 10 n + sum (x_i^2 - 10 cos 2 pi x_i)
double schwefel1(const Vector& x);   // 418.9829 n - sum x_i sin sqrt|x_i|, clipped at |x_i| = 500
double eggholder(const Vector& x);   // 2-D only

struct FunctionInfo {
  std::string name;
  Objective fn;
  // 0 means any dimension.
  int fixed_dim = 0;
  // Known minimum for the given dimension, when available in closed
  // form or located numerically to high precision.
  std::optional<double> min_value(int dim) const;
  std::optional<Vector> minimizer(int dim) const;
};

const std::vector<std::string>& names();
const FunctionInfo& lookup(const std::string& name);  // throws InvalidArgument

}  // namespace bcmaes::benchmarks
