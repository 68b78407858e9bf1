#pragma once

#include <cstddef>

// Dense vector primitives used by the operators and the solver.
// A scalar reference implementation always exists; an AVX2 variant is
// selected at runtime when the CPU supports it. Set LAPFLOW_KERNEL=scalar
// in the environment to force the reference path.

namespace lapflow::kernels {

double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

// Name of the variant the dispatcher picked ("scalar" or "avx2").
const char* active_variant();

}  // namespace lapflow::kernels
