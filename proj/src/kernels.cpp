#include "netgain/kernels.hpp"

#include <cmath>

namespace netgain::kernels {

namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*matvec)(const double*, std::size_t, std::size_t, const double*, double*);
  void (*matvec_acc)(const double*, std::size_t, std::size_t, const double*, double*);
  void (*matvec_t_acc)(const double*, std::size_t, std::size_t, const double*, double*);
  void (*ger_acc)(double*, std::size_t, std::size_t, double, const double*, const double*);
  void (*dtanh_mul)(const double*, const double*, double*, std::size_t);
};

constexpr KernelTable kScalarTable = {
    scalar::dot,       scalar::sum_sq,       scalar::axpy,    scalar::matvec,
    scalar::matvec_acc, scalar::matvec_t_acc, scalar::ger_acc, scalar::dtanh_mul,
};

#if defined(NETGAIN_AVX2_BUILD)
constexpr KernelTable kAvx2Table = {
    avx2::dot,       avx2::sum_sq,       avx2::axpy,    avx2::matvec,
    avx2::matvec_acc, avx2::matvec_t_acc, avx2::ger_acc, avx2::dtanh_mul,
};

bool cpu_has_avx2_fma() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

Lane g_lane = [] {
#if defined(NETGAIN_AVX2_BUILD)
  if (cpu_has_avx2_fma()) return Lane::avx2;
#endif
  return Lane::scalar;
}();

const KernelTable* g_table = [] {
#if defined(NETGAIN_AVX2_BUILD)
  if (cpu_has_avx2_fma()) return &kAvx2Table;
#endif
  return &kScalarTable;
}();

}  // namespace

Lane active_lane() { return g_lane; }

bool lane_supported(Lane lane) {
  if (lane == Lane::scalar) return true;
#if defined(NETGAIN_AVX2_BUILD)
  return cpu_has_avx2_fma();
#else
  return false;
#endif
}

bool set_lane(Lane lane) {
  if (!lane_supported(lane)) return false;
  g_lane = lane;
#if defined(NETGAIN_AVX2_BUILD)
  g_table = (lane == Lane::avx2) ? &kAvx2Table : &kScalarTable;
#else
  g_table = &kScalarTable;
#endif
  return true;
}

double dot(const double* a, const double* b, std::size_t n) {
  return g_table->dot(a, b, n);
}

double sum_sq(const double* x, std::size_t n) { return g_table->sum_sq(x, n); }

void axpy(double a, const double* x, double* y, std::size_t n) {
  g_table->axpy(a, x, y, n);
}

void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y) {
  g_table->matvec(a, rows, cols, x, y);
}

void matvec_acc(const double* a, std::size_t rows, std::size_t cols,
                const double* x, double* y) {
  g_table->matvec_acc(a, rows, cols, x, y);
}

void matvec_t_acc(const double* a, std::size_t rows, std::size_t cols,
                  const double* x, double* y) {
  g_table->matvec_t_acc(a, rows, cols, x, y);
}

void ger_acc(double* a, std::size_t rows, std::size_t cols, double alpha,
             const double* u, const double* v) {
  g_table->ger_acc(a, rows, cols, alpha, u, v);
}

void tanh_vec(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void dtanh_mul(const double* s, const double* g, double* out, std::size_t n) {
  g_table->dtanh_mul(s, g, out, n);
}

}  // namespace netgain::kernels
