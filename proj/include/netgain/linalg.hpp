#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace netgain {

using Vector = std::vector<double>;

// Dense row-major double matrix. Sequences of vectors (trajectories) are
// stored as one Matrix with a row per time step.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void fill(double value) { data_.assign(data_.size(), value); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// y = A x
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y);
// y += A x
void matvec_acc(const Matrix& a, std::span<const double> x, std::span<double> y);
// y += A^T x
void matvec_t_acc(const Matrix& a, std::span<const double> x, std::span<double> y);
// A += alpha u v^T
void ger_acc(Matrix& a, double alpha, std::span<const double> u,
             std::span<const double> v);

double frobenius_norm_sq(const Matrix& a);
double frobenius_norm(const Matrix& a);

bool all_finite(std::span<const double> x);
bool all_finite(const Matrix& a);

}  // namespace netgain
