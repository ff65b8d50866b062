#include "netgain/linalg.hpp"

#include <cassert>
#include <cmath>

#include "netgain/kernels.hpp"

namespace netgain {

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == a.cols() && y.size() == a.rows());
  kernels::matvec(a.data(), a.rows(), a.cols(), x.data(), y.data());
}

void matvec_acc(const Matrix& a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == a.cols() && y.size() == a.rows());
  kernels::matvec_acc(a.data(), a.rows(), a.cols(), x.data(), y.data());
}

void matvec_t_acc(const Matrix& a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == a.rows() && y.size() == a.cols());
  kernels::matvec_t_acc(a.data(), a.rows(), a.cols(), x.data(), y.data());
}

void ger_acc(Matrix& a, double alpha, std::span<const double> u,
             std::span<const double> v) {
  assert(u.size() == a.rows() && v.size() == a.cols());
  kernels::ger_acc(a.data(), a.rows(), a.cols(), alpha, u.data(), v.data());
}

double frobenius_norm_sq(const Matrix& a) {
  return kernels::sum_sq(a.data(), a.size());
}

double frobenius_norm(const Matrix& a) { return std::sqrt(frobenius_norm_sq(a)); }

bool all_finite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool all_finite(const Matrix& a) {
  return all_finite(std::span<const double>{a.data(), a.size()});
}

}  // namespace netgain
