#include "netgain/operators.hpp"

#include <cmath>
#include <string>

#include "netgain/errors.hpp"
#include "netgain/kernels.hpp"

namespace netgain {

CgroParams CgroParams::zeros(int m, int p, int n, bool feedthrough) {
  CgroParams c;
  c.a_hat = Matrix(n, n);
  c.b_hat = Matrix(n, m);
  c.c_hat = Matrix(p, n);
  c.d_hat = feedthrough ? Matrix(p, m) : Matrix(0, 0);
  c.feedthrough = feedthrough;
  return c;
}

double cgro_gain_factor(double t) {
  const double e = kYoungEps;
  return std::sqrt((1.0 + t + e) * (2.0 * t + e) / (t + e)) / (1.0 - t);
}

double cgro_gain_factor_derivative(double t) {
  const double e = kYoungEps;
  const double h = cgro_gain_factor(t);
  return h * (0.5 * (1.0 / (1.0 + t + e) + 2.0 / (2.0 * t + e) - 1.0 / (t + e)) +
              1.0 / (1.0 - t));
}

// Gain bound used by the realization. With a0 = ||A||_F and 1-Lipschitz
// sigma = tanh, the incremental storage V = ||dx||^2 obeys, via Young's
// inequality with constant c > 0,
//   ||dx+||^2 <= (1+c) a0^2 ||dx||^2 + (1+1/c) ||B||_F^2 ||du||^2.
// Choosing c = (1-a0^2)/(2 a0^2 + eps) keeps (1+c) a0^2 = (1+a0^2)/2 < 1, so
// telescoping from dx(0) = 0 bounds the state energy, and the triangle
// inequality on y = scale (C sigma(x) + D u) yields the l2 bound
//   gain <= scale * (||C||_F ||B||_F H(a0^2) + ||D||_F)
// with H as in cgro_gain_factor. Rescaling the output map by
// gamma / max(bound, floor) pins the certified gain at gamma.
namespace {

double raw_gain_bound(const Matrix& a, const Matrix& b, const Matrix& c,
                      const Matrix& d) {
  const double t = frobenius_norm_sq(a);
  const double nb = frobenius_norm(b);
  const double nc = frobenius_norm(c);
  const double nd = d.empty() ? 0.0 : frobenius_norm(d);
  return nc * nb * cgro_gain_factor(t) + nd;
}

}  // namespace

CgroRealized cgro_realize(const CgroParams& params, double gamma, double radius) {
  if (!(gamma > 0.0)) {
    throw DomainError("cgro_realize: gamma must be > 0, got " +
                      std::to_string(gamma));
  }
  if (!(radius > 0.0 && radius < 1.0)) {
    throw DomainError("cgro_realize: contraction radius must lie in (0,1), got " +
                      std::to_string(radius));
  }
  CgroRealized r;
  r.radius = radius;
  r.feedthrough = params.feedthrough;

  const double q = frobenius_norm_sq(params.a_hat);
  const double denom = std::sqrt(q + 1.0);
  r.a = params.a_hat;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a.data()[i] *= radius / denom;
  r.b = params.b_hat;
  r.c = params.c_hat;
  r.d = params.feedthrough ? params.d_hat : Matrix(0, 0);

  const double bound = raw_gain_bound(r.a, r.b, r.c, r.d);
  r.scale = gamma / std::max(bound, kGainBoundFloor);
  r.certified_gain = gamma;
  return r;
}

double certified_gain_bound(const CgroRealized& r) {
  return raw_gain_bound(r.a, r.b, r.c, r.d) * r.scale;
}

void cgro_step_traced(const CgroRealized& r, std::span<const double> state,
                      std::span<const double> u, std::span<double> next,
                      std::span<double> y, std::span<double> s) {
  if (!all_finite(state) || !all_finite(u)) {
    throw ValueError("cgro_step: non-finite state or input");
  }
  kernels::tanh_vec(state.data(), s.data(), s.size());
  // y = scale * (C s + D u)
  matvec(r.c, s, y);
  if (r.feedthrough && !r.d.empty()) matvec_acc(r.d, u, y);
  for (double& v : y) v *= r.scale;
  // next = A s + B u
  matvec(r.a, s, next);
  matvec_acc(r.b, u, next);
}

void cgro_step(const CgroRealized& r, std::span<const double> state,
               std::span<const double> u, std::span<double> next,
               std::span<double> y) {
  Vector s(state.size());
  cgro_step_traced(r, state, u, next, y, s);
}

void CgroSubOperator::output(std::span<const double> state,
                             std::span<const double> u,
                             std::span<double> y) const {
  Vector s(state.size());
  kernels::tanh_vec(state.data(), s.data(), s.size());
  matvec(r_.c, s, y);
  if (r_.feedthrough && !r_.d.empty()) matvec_acc(r_.d, u, y);
  for (double& v : y) v *= r_.scale;
}

void CgroSubOperator::advance(std::span<const double> state,
                              std::span<const double> u,
                              std::span<double> next) const {
  Vector s(state.size());
  kernels::tanh_vec(state.data(), s.data(), s.size());
  matvec(r_.a, s, next);
  matvec_acc(r_.b, u, next);
}

void CgroOperator::rollout(std::span<const double> x0, const Matrix& d,
                           Matrix& e) const {
  if (d.rows() == 0) throw DomainError("rollout: empty input sequence");
  if (d.cols() != static_cast<std::size_t>(input_dim())) {
    throw ShapeError("rollout: input width " + std::to_string(d.cols()) +
                     " != operator input dim " + std::to_string(input_dim()));
  }
  if (x0.size() != static_cast<std::size_t>(state_dim())) {
    throw ShapeError("rollout: x0 size mismatch");
  }
  const std::size_t T = d.rows();
  e = Matrix(T, output_dim());
  Vector x(x0.begin(), x0.end());
  Vector next(x.size());
  Vector s(x.size());
  for (std::size_t t = 0; t < T; ++t) {
    cgro_step_traced(r_, x, d.row(t), next, e.row(t), s);
    std::swap(x, next);
  }
}

RnnParams RnnParams::zeros(int m, int p, int n) {
  RnnParams r;
  r.w_x = Matrix(n, n);
  r.w_u = Matrix(n, m);
  r.w_y = Matrix(p, n);
  r.b = Vector(n, 0.0);
  r.b_y = Vector(p, 0.0);
  return r;
}

void rnn_step(const RnnParams& params, std::span<const double> state,
              std::span<const double> u, std::span<double> next,
              std::span<double> y) {
  if (!all_finite(state) || !all_finite(u)) {
    throw ValueError("rnn_step: non-finite state or input");
  }
  // y from the pre-update state
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = params.b_y[i];
  matvec_acc(params.w_y, state, y);
  // next = tanh(W_x x + W_u u + b)
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = params.b[i];
  matvec_acc(params.w_x, state, next);
  matvec_acc(params.w_u, u, next);
  kernels::tanh_vec(next.data(), next.data(), next.size());
}

void RnnOperator::rollout(std::span<const double> x0, const Matrix& d,
                          Matrix& e) const {
  if (d.rows() == 0) throw DomainError("rollout: empty input sequence");
  if (d.cols() != static_cast<std::size_t>(input_dim())) {
    throw ShapeError("rollout: input width mismatch");
  }
  if (x0.size() != static_cast<std::size_t>(state_dim())) {
    throw ShapeError("rollout: x0 size mismatch");
  }
  const std::size_t T = d.rows();
  e = Matrix(T, output_dim());
  Vector x(x0.begin(), x0.end());
  Vector next(x.size());
  for (std::size_t t = 0; t < T; ++t) {
    rnn_step(p_, x, d.row(t), next, e.row(t));
    std::swap(x, next);
  }
}

}  // namespace netgain
