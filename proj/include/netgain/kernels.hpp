#pragma once

#include <cstddef>

// Vector/matrix micro-kernels behind the rollout, backpropagation, and gain
// estimation inner loops. Every kernel has a scalar reference implementation;
// on x86-64 with AVX2+FMA a vectorized variant is selected at runtime. The
// two lanes are equivalence-tested (reductions may differ by reassociation
// roundoff only).
//
// tanh evaluation stays on libm in both lanes so the lane choice never
// changes activation values; SIMD covers the surrounding linear algebra and
// the activation-derivative arithmetic.

namespace netgain::kernels {

enum class Lane { scalar, avx2 };

// Lane actually used by the dispatched entry points below.
Lane active_lane();
bool lane_supported(Lane lane);
// Force a lane (tests, benchmarks). No-op returning false if unsupported.
bool set_lane(Lane lane);

double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* x, std::size_t n);
// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);
// y = A x, A row-major rows x cols
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);
// y += A x
void matvec_acc(const double* a, std::size_t rows, std::size_t cols,
                const double* x, double* y);
// y += A^T x, x of length rows, y of length cols
void matvec_t_acc(const double* a, std::size_t rows, std::size_t cols,
                  const double* x, double* y);
// A += alpha * u v^T
void ger_acc(double* a, std::size_t rows, std::size_t cols, double alpha,
             const double* u, const double* v);
// y_i = tanh(x_i); single libm implementation shared by both lanes
void tanh_vec(const double* x, double* y, std::size_t n);
// out_i = g_i * (1 - s_i^2), s being stored tanh activations
void dtanh_mul(const double* s, const double* g, double* out, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);
void matvec_acc(const double* a, std::size_t rows, std::size_t cols,
                const double* x, double* y);
void matvec_t_acc(const double* a, std::size_t rows, std::size_t cols,
                  const double* x, double* y);
void ger_acc(double* a, std::size_t rows, std::size_t cols, double alpha,
             const double* u, const double* v);
void dtanh_mul(const double* s, const double* g, double* out, std::size_t n);
}  // namespace scalar

#if defined(NETGAIN_AVX2_BUILD)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void matvec(const double* a, std::size_t rows, std::size_t cols,
            const double* x, double* y);
void matvec_acc(const double* a, std::size_t rows, std::size_t cols,
                const double* x, double* y);
void matvec_t_acc(const double* a, std::size_t rows, std::size_t cols,
                  const double* x, double* y);
void ger_acc(double* a, std::size_t rows, std::size_t cols, double alpha,
             const double* u, const double* v);
void dtanh_mul(const double* s, const double* g, double* out, std::size_t n);
}  // namespace avx2
#endif

}  // namespace netgain::kernels
