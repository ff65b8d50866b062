#pragma once

#include <memory>
#include <optional>
#include <span>

#include "netgain/linalg.hpp"
#include "netgain/topology.hpp"

namespace netgain {

// Anything that maps an initial state plus an input trajectory to an output
// trajectory. Used by the empirical incremental-gain estimator, which only
// needs rollouts.
class SequenceOperator {
 public:
  virtual ~SequenceOperator() = default;
  virtual int input_dim() const = 0;
  virtual int output_dim() const = 0;
  virtual int state_dim() const = 0;
  // d has one row per step (T x input_dim); e is resized to T x output_dim.
  virtual void rollout(std::span<const double> x0, const Matrix& d,
                       Matrix& e) const = 0;
};

// One sub-operator inside a network: deterministic step, a flag for direct
// input-to-output feedthrough, and an optional certified incremental L2 gain.
class SubOperator {
 public:
  virtual ~SubOperator() = default;
  virtual BlockDims dims() const = 0;
  virtual bool has_feedthrough() const = 0;
  virtual std::optional<double> assigned_gain() const = 0;
  // y from the current state; u is only read when has_feedthrough().
  virtual void output(std::span<const double> state, std::span<const double> u,
                      std::span<double> y) const = 0;
  // next = f(state, u)
  virtual void advance(std::span<const double> state, std::span<const double> u,
                       std::span<double> next) const = 0;

  void step(std::span<const double> state, std::span<const double> u,
            std::span<double> next, std::span<double> y) const {
    output(state, u, y);
    advance(state, u, next);
  }
};

// ---------------------------------------------------------------------------
// Certified-Gain Recurrent Operator (CGRO)
//
// Free parameters: four unconstrained matrices. The realization normalizes
// A_hat into a contraction and rescales the output map so the incremental L2
// gain equals an assigned value for every parameter choice.
// ---------------------------------------------------------------------------

struct CgroParams {
  Matrix a_hat;  // n x n
  Matrix b_hat;  // n x m
  Matrix c_hat;  // p x n
  Matrix d_hat;  // p x m; empty (0x0) when feedthrough is disabled
  bool feedthrough = false;

  static CgroParams zeros(int m, int p, int n, bool feedthrough = false);
};

// Realized dynamics:
//   x+ = A tanh(x) + B u
//   y  = scale * (C tanh(x) + D u)
// with ||A||_F < radius < 1 and certified incremental L2 gain equal to the
// assigned gamma.
struct CgroRealized {
  Matrix a, b, c, d;
  double scale = 1.0;
  double certified_gain = 0.0;
  double radius = 0.95;
  bool feedthrough = false;

  int state_dim() const { return static_cast<int>(a.rows()); }
  int input_dim() const { return static_cast<int>(b.cols()); }
  int output_dim() const { return static_cast<int>(c.rows()); }
};

inline constexpr double kDefaultContractionRadius = 0.95;
// Guard on the Young-constant denominator at ||A|| = 0.
inline constexpr double kYoungEps = 1e-12;
// Floor applied to the raw gain bound before dividing; the all-zero
// parameter point then realizes the zero operator.
inline constexpr double kGainBoundFloor = 1e-9;

// H(t) = sqrt((1+1/c) / (1 - (1+c) t)) with t = ||A||_F^2 and Young constant
// c = (1 - t) / (2t + eps). Closed form used by the bound and its gradient:
//   H(t)^2 = (1 + t + eps)(2t + eps) / ((1 - t)^2 (t + eps))
double cgro_gain_factor(double t);
// dH/dt, same parametrization.
double cgro_gain_factor_derivative(double t);

CgroRealized cgro_realize(const CgroParams& params, double gamma,
                          double radius = kDefaultContractionRadius);

// Recomputes the norm-product bound times scale from the realized matrices.
// Equals certified_gain except at the floored (near-zero-parameter) point,
// where the recomputed value is the tighter true bound.
double certified_gain_bound(const CgroRealized& r);

void cgro_step(const CgroRealized& r, std::span<const double> state,
               std::span<const double> u, std::span<double> next,
               std::span<double> y);
// Same step, also exposing s = tanh(state) for gradient code.
void cgro_step_traced(const CgroRealized& r, std::span<const double> state,
                      std::span<const double> u, std::span<double> next,
                      std::span<double> y, std::span<double> s);

class CgroSubOperator final : public SubOperator {
 public:
  explicit CgroSubOperator(CgroRealized r) : r_(std::move(r)) {}
  BlockDims dims() const override {
    return {r_.input_dim(), r_.output_dim(), r_.state_dim()};
  }
  bool has_feedthrough() const override { return r_.feedthrough; }
  std::optional<double> assigned_gain() const override { return r_.certified_gain; }
  void output(std::span<const double> state, std::span<const double> u,
              std::span<double> y) const override;
  void advance(std::span<const double> state, std::span<const double> u,
               std::span<double> next) const override;
  const CgroRealized& realized() const { return r_; }

 private:
  CgroRealized r_;
};

// Standalone CGRO viewed as a sequence operator (u = d directly).
class CgroOperator final : public SequenceOperator {
 public:
  explicit CgroOperator(CgroRealized r) : r_(std::move(r)) {}
  int input_dim() const override { return r_.input_dim(); }
  int output_dim() const override { return r_.output_dim(); }
  int state_dim() const override { return r_.state_dim(); }
  void rollout(std::span<const double> x0, const Matrix& d,
               Matrix& e) const override;
  const CgroRealized& realized() const { return r_; }

 private:
  CgroRealized r_;
};

// ---------------------------------------------------------------------------
// Vanilla RNN baseline (no gain certificate):
//   x+ = tanh(W_x x + W_u u + b)
//   y  = W_y x + b_y
// ---------------------------------------------------------------------------

struct RnnParams {
  Matrix w_x;  // n x n
  Matrix w_u;  // n x m
  Matrix w_y;  // p x n
  Vector b;    // n
  Vector b_y;  // p

  static RnnParams zeros(int m, int p, int n);
  int state_dim() const { return static_cast<int>(w_x.rows()); }
  int input_dim() const { return static_cast<int>(w_u.cols()); }
  int output_dim() const { return static_cast<int>(w_y.rows()); }
};

void rnn_step(const RnnParams& params, std::span<const double> state,
              std::span<const double> u, std::span<double> next,
              std::span<double> y);

class RnnOperator final : public SequenceOperator {
 public:
  explicit RnnOperator(RnnParams p) : p_(std::move(p)) {}
  int input_dim() const override { return p_.input_dim(); }
  int output_dim() const override { return p_.output_dim(); }
  int state_dim() const override { return p_.state_dim(); }
  void rollout(std::span<const double> x0, const Matrix& d,
               Matrix& e) const override;
  const RnnParams& params() const { return p_; }

 private:
  RnnParams p_;
};

}  // namespace netgain
