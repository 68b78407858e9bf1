#include "lapflow/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lapflow::kernels {

namespace {

struct Vtable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sum_abs)(const double*, std::size_t);
  double (*max_abs_diff)(const double*, const double*, std::size_t);
  const char* name;
};

Vtable pick() {
  const char* force = std::getenv("LAPFLOW_KERNEL");
#if defined(__x86_64__)
  bool want_avx2 = force == nullptr || std::strcmp(force, "avx2") == 0;
  if (force != nullptr && std::strcmp(force, "scalar") == 0) want_avx2 = false;
  if (want_avx2 && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {avx2::dot, avx2::sum, avx2::sum_abs, avx2::max_abs_diff, "avx2"};
  }
#else
  (void)force;
#endif
  return {scalar::dot, scalar::sum, scalar::sum_abs, scalar::max_abs_diff, "scalar"};
}

const Vtable& table() {
  static const Vtable t = pick();
  return t;
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }
double sum(const double* x, std::size_t n) { return table().sum(x, n); }
double sum_abs(const double* x, std::size_t n) { return table().sum_abs(x, n); }
double max_abs_diff(const double* x, const double* y, std::size_t n) {
  return table().max_abs_diff(x, y, n);
}
const char* active_variant() { return table().name; }

}  // namespace lapflow::kernels
