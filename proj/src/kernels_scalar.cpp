#include <cmath>
#include <cstddef>

#include "lapflow/kernels.hpp"

namespace lapflow::kernels::scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sum_abs(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(x[i]);
  return acc;
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc = std::max(acc, std::abs(x[i] - y[i]));
  return acc;
}

}  // namespace lapflow::kernels::scalar
