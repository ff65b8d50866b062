#include "netgain/training.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netgain/certificates.hpp"
#include "netgain/errors.hpp"
#include "netgain/kernels.hpp"
#include "netgain/rng.hpp"

namespace netgain {

namespace {

void validate_batch(const Batch& batch, int m, int p, const char* who) {
  if (batch.empty()) throw ShapeError(std::string(who) + ": empty batch");
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const SequenceRef& s = batch[i];
    if (s.d == nullptr || s.y == nullptr || s.d->rows() == 0 ||
        s.d->rows() != s.y->rows() ||
        s.d->cols() != static_cast<std::size_t>(m) ||
        s.y->cols() != static_cast<std::size_t>(p)) {
      throw ShapeError(std::string(who) + ": sequence " + std::to_string(i) +
                       " has inconsistent shapes");
    }
  }
}

std::size_t batch_sample_count(const Batch& batch) {
  std::size_t count = 0;
  for (const SequenceRef& s : batch) count += s.y->size();
  return count;
}

void copy_packed(const Matrix& m, std::span<double>& out) {
  std::copy(m.data(), m.data() + m.size(), out.begin());
  out = out.subspan(m.size());
}

void take_packed(Matrix& m, std::span<const double>& in) {
  std::copy(in.begin(), in.begin() + m.size(), m.data());
  in = in.subspan(m.size());
}

}  // namespace

// ---------------------------------------------------------------------------
// NetworkedCgroModel
// ---------------------------------------------------------------------------

NetworkedCgroModel NetworkedCgroModel::random_init(
    InterconnectionTopology topology, bool feedthrough, bool gamma_trainable,
    double gamma_init, std::uint64_t seed) {
  if (!(gamma_init > 0.0)) {
    throw DomainError("random_init: gamma_init must be > 0");
  }
  NetworkedCgroModel model;
  Rng rng(seed);
  for (int i = 0; i < topology.num_blocks(); ++i) {
    const BlockDims b = topology.block(i);
    CgroParams params = CgroParams::zeros(b.m, b.p, b.n, feedthrough);
    if (b.n > 0) {
      fill_gaussian(rng, params.a_hat, 0.5 / std::sqrt(static_cast<double>(b.n)));
      fill_gaussian(rng, params.b_hat, 0.5 / std::sqrt(static_cast<double>(b.m)));
      fill_gaussian(rng, params.c_hat, 0.5 / std::sqrt(static_cast<double>(b.n)));
    }
    if (feedthrough) {
      fill_gaussian(rng, params.d_hat, 0.5 / std::sqrt(static_cast<double>(b.m)));
    }
    model.xi.push_back(std::move(params));
  }
  model.gains.z.assign(topology.num_blocks(), 0.0);
  model.gains.gamma_trainable = gamma_trainable;
  model.gains.gamma_value = gamma_trainable ? std::sqrt(gamma_init) : gamma_init;
  model.topology = std::move(topology);
  return model;
}

std::size_t NetworkedCgroModel::num_parameters() const {
  std::size_t count = 0;
  for (const CgroParams& p : xi) {
    count += p.a_hat.size() + p.b_hat.size() + p.c_hat.size() + p.d_hat.size();
  }
  count += gains.z.size();
  if (gains.gamma_trainable) count += 1;
  return count;
}

void NetworkedCgroModel::pack(std::span<double> out) const {
  for (const CgroParams& p : xi) {
    copy_packed(p.a_hat, out);
    copy_packed(p.b_hat, out);
    copy_packed(p.c_hat, out);
    copy_packed(p.d_hat, out);
  }
  std::copy(gains.z.begin(), gains.z.end(), out.begin());
  out = out.subspan(gains.z.size());
  if (gains.gamma_trainable) out[0] = gains.gamma_value;
}

void NetworkedCgroModel::unpack(std::span<const double> in) {
  for (CgroParams& p : xi) {
    take_packed(p.a_hat, in);
    take_packed(p.b_hat, in);
    take_packed(p.c_hat, in);
    take_packed(p.d_hat, in);
  }
  std::copy(in.begin(), in.begin() + gains.z.size(), gains.z.begin());
  in = in.subspan(gains.z.size());
  if (gains.gamma_trainable) gains.gamma_value = in[0];
}

std::vector<CgroRealized> NetworkedCgroModel::realize() const {
  const GainAllocation alloc = allocation();
  std::vector<CgroRealized> realized;
  realized.reserve(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    realized.push_back(cgro_realize(xi[i], alloc.gammas[i], contraction_radius));
  }
  return realized;
}

NetworkedOperator NetworkedCgroModel::make_operator() const {
  GainAllocation alloc = allocation();
  std::vector<CgroRealized> realized = realize();
  std::vector<std::shared_ptr<const SubOperator>> subops;
  subops.reserve(realized.size());
  for (CgroRealized& r : realized) {
    subops.push_back(std::make_shared<CgroSubOperator>(std::move(r)));
  }
  return assemble_network(topology, std::move(subops), std::move(alloc));
}

double NetworkedCgroModel::loss(const Batch& batch) const {
  validate_batch(batch, topology.total_inputs(), topology.total_outputs(),
                 "loss");
  const NetworkedOperator net = make_operator();
  const Vector x0(topology.total_states(), 0.0);
  const std::size_t count = batch_sample_count(batch);
  double total = 0.0;
  Matrix e;
  for (const SequenceRef& seq : batch) {
    network_rollout(net, x0, *seq.d, e, nullptr);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const double r = e.data()[k] - seq.y->data()[k];
      total += r * r;
    }
  }
  return total / static_cast<double>(count);
}

// Reverse-mode differentiation of the mean squared loss through the unrolled
// network and through the realization map down to the free parameters.
double NetworkedCgroModel::loss_and_gradient(const Batch& batch,
                                             std::span<double> grad) const {
  const InterconnectionTopology& t = topology;
  const int nblocks = t.num_blocks();
  const int m = t.total_inputs();
  const int p = t.total_outputs();
  const int n = t.total_states();
  validate_batch(batch, m, p, "loss_and_gradient");
  if (grad.size() != num_parameters()) {
    throw ShapeError("loss_and_gradient: gradient buffer size mismatch");
  }

  const GainAllocation alloc = allocation();
  const std::vector<CgroRealized> realized = realize();
  std::vector<std::shared_ptr<const SubOperator>> subops;
  for (const CgroRealized& r : realized) {
    subops.push_back(std::make_shared<CgroSubOperator>(r));
  }
  const NetworkedOperator net = assemble_network(t, std::move(subops), alloc);

  // adjoint accumulators on the realized matrices
  std::vector<Matrix> ga(nblocks), gb(nblocks), gc(nblocks), gd(nblocks);
  Vector g_scale(nblocks, 0.0);
  for (int i = 0; i < nblocks; ++i) {
    const BlockDims b = t.block(i);
    ga[i] = Matrix(b.n, b.n);
    gb[i] = Matrix(b.n, b.m);
    gc[i] = Matrix(b.p, b.n);
    gd[i] = xi[i].feedthrough ? Matrix(b.p, b.m) : Matrix(0, 0);
  }

  const std::size_t count = batch_sample_count(batch);
  const double res_w = 2.0 / static_cast<double>(count);
  double total_sq = 0.0;

  const Vector x0(n, 0.0);
  Vector lambda_next(n), lambda(n), g_y(p), g_u(m), g_s(n), s_full(n);
  Vector w_scaled(p), g_uo(m);
  const Matrix& cm = t.coupling();
  Matrix e;
  RolloutTrace trace;

  for (const SequenceRef& seq : batch) {
    const Matrix& d = *seq.d;
    const Matrix& yref = *seq.y;
    const std::size_t T = d.rows();
    network_rollout(net, x0, d, e, &trace);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const double r = e.data()[k] - yref.data()[k];
      total_sq += r * r;
    }

    std::fill(lambda_next.begin(), lambda_next.end(), 0.0);
    for (std::size_t step = T; step-- > 0;) {
      const std::span<const double> y_row = trace.y.row(step);
      const std::span<const double> u_row = trace.u.row(step);
      kernels::tanh_vec(trace.x.row(step).data(), s_full.data(), n);

      for (int c = 0; c < p; ++c) {
        g_y[c] = res_w * (y_row[c] - yref(step, c));
      }
      // state-update path: u(t) feeds every x(t+1) through B
      std::fill(g_u.begin(), g_u.end(), 0.0);
      for (int i = 0; i < nblocks; ++i) {
        const BlockDims b = t.block(i);
        kernels::matvec_t_acc(realized[i].b.data(), b.n, b.m,
                              lambda_next.data() + t.state_offset(i),
                              g_u.data() + t.input_offset(i));
      }
      // u = M y + d
      kernels::matvec_t_acc(cm.data(), m, p, g_u.data(), g_y.data());

      std::fill(g_s.begin(), g_s.end(), 0.0);
      // outputs in reverse evaluation order so feedthrough adjoints reach
      // their dependency-predecessors before those are consumed
      for (auto it = net.evaluation_order().rbegin();
           it != net.evaluation_order().rend(); ++it) {
        const int i = *it;
        const BlockDims b = t.block(i);
        const CgroRealized& r = realized[i];
        const double* w = g_y.data() + t.output_offset(i);
        if (r.feedthrough && !r.d.empty()) {
          std::fill(g_uo.begin(), g_uo.begin() + b.m, 0.0);
          for (int row = 0; row < b.p; ++row) {
            kernels::axpy(r.scale * w[row], r.d.data() + row * b.m, g_uo.data(),
                          b.m);
          }
          kernels::matvec_t_acc(cm.data() + t.input_offset(i) * p, b.m, p,
                                g_uo.data(), g_y.data());
          kernels::ger_acc(gd[i].data(), b.p, b.m, r.scale, w,
                           u_row.data() + t.input_offset(i));
        }
        g_scale[i] +=
            kernels::dot(w, y_row.data() + t.output_offset(i), b.p) / r.scale;
        kernels::ger_acc(gc[i].data(), b.p, b.n, r.scale, w,
                         s_full.data() + t.state_offset(i));
        for (int row = 0; row < b.p; ++row) {
          w_scaled[row] = r.scale * w[row];
        }
        kernels::matvec_t_acc(r.c.data(), b.p, b.n, w_scaled.data(),
                              g_s.data() + t.state_offset(i));
      }
      // state recursion and parameter outer products
      for (int i = 0; i < nblocks; ++i) {
        const BlockDims b = t.block(i);
        const CgroRealized& r = realized[i];
        const double* lam = lambda_next.data() + t.state_offset(i);
        const double* s_i = s_full.data() + t.state_offset(i);
        kernels::matvec_t_acc(r.a.data(), b.n, b.n, lam,
                              g_s.data() + t.state_offset(i));
        kernels::ger_acc(ga[i].data(), b.n, b.n, 1.0, lam, s_i);
        kernels::ger_acc(gb[i].data(), b.n, b.m, 1.0, lam,
                         u_row.data() + t.input_offset(i));
        kernels::dtanh_mul(s_i, g_s.data() + t.state_offset(i),
                           lambda.data() + t.state_offset(i), b.n);
      }
      std::swap(lambda, lambda_next);
    }
  }

  // chain: realized matrices -> free parameters and gains
  const double gamma_M = alloc.gamma_M;
  double g_gamma_M = 0.0;
  std::span<double> out = grad;
  Vector g_z(nblocks, 0.0);
  const double radius = contraction_radius;

  for (int i = 0; i < nblocks; ++i) {
    const CgroParams& params = xi[i];
    const double q = frobenius_norm_sq(params.a_hat);
    const double denom = std::sqrt(q + 1.0);
    const double tt = radius * radius * q / (q + 1.0);
    const double nb = frobenius_norm(params.b_hat);
    const double nc = frobenius_norm(params.c_hat);
    const double nd = params.feedthrough ? frobenius_norm(params.d_hat) : 0.0;
    const double h = cgro_gain_factor(tt);
    const double ghat = nc * nb * h + nd;
    const double eff = std::max(ghat, kGainBoundFloor);
    const double gamma_i = alloc.gammas[i];
    const double g_gamma_i = g_scale[i] / eff;
    const double g_ghat =
        (ghat > kGainBoundFloor) ? -g_scale[i] * gamma_i / (eff * eff) : 0.0;

    // A_hat: through the contraction normalization A = radius*A_hat/denom and
    // through t = ||A||_F^2 entering the gain bound
    {
      const double inner =
          kernels::dot(ga[i].data(), params.a_hat.data(), ga[i].size());
      const double bound_coef = g_ghat * nc * nb *
                                cgro_gain_factor_derivative(tt) *
                                (radius * radius / ((q + 1.0) * (q + 1.0))) * 2.0;
      const double lin = radius / denom;
      const double quad = radius / (denom * denom * denom) * inner;
      std::span<double> slot = out.subspan(0, ga[i].size());
      for (std::size_t k = 0; k < slot.size(); ++k) {
        slot[k] = lin * ga[i].data()[k] +
                  (bound_coef - quad) * params.a_hat.data()[k];
      }
      out = out.subspan(slot.size());
    }
    // B_hat, C_hat, D_hat: direct use plus the Frobenius norms in the bound
    {
      const double coef = (nb > 0.0) ? g_ghat * nc * h / nb : 0.0;
      std::span<double> slot = out.subspan(0, gb[i].size());
      for (std::size_t k = 0; k < slot.size(); ++k) {
        slot[k] = gb[i].data()[k] + coef * params.b_hat.data()[k];
      }
      out = out.subspan(slot.size());
    }
    {
      const double coef = (nc > 0.0) ? g_ghat * nb * h / nc : 0.0;
      std::span<double> slot = out.subspan(0, gc[i].size());
      for (std::size_t k = 0; k < slot.size(); ++k) {
        slot[k] = gc[i].data()[k] + coef * params.c_hat.data()[k];
      }
      out = out.subspan(slot.size());
    }
    if (params.feedthrough) {
      const double coef = (nd > 0.0) ? g_ghat / nd : 0.0;
      std::span<double> slot = out.subspan(0, gd[i].size());
      for (std::size_t k = 0; k < slot.size(); ++k) {
        slot[k] = gd[i].data()[k] + coef * params.d_hat.data()[k];
      }
      out = out.subspan(slot.size());
    }

    const double alpha_i = alloc.alphas[i];
    g_z[i] = g_gamma_i * (-gamma_i * gains.z[i] / alpha_i);
    const double rm = t.max_row_abs_sum(i);
    g_gamma_M += g_gamma_i * gamma_i / (gamma_M * (rm * gamma_M * gamma_M + 1.0));
  }
  std::copy(g_z.begin(), g_z.end(), out.begin());
  out = out.subspan(g_z.size());
  if (gains.gamma_trainable) {
    const double z_M = gains.gamma_value;
    out[0] = (z_M * z_M > kGammaFloor) ? g_gamma_M * 2.0 * z_M : 0.0;
  }

  return total_sq / static_cast<double>(count);
}

void NetworkedCgroModel::epoch_extras(EpochLog& log) const {
  const GainAllocation alloc = allocation();
  log.gamma_M = alloc.gamma_M;
  log.min_cert_eig = certify_allocation(topology, alloc).min_eigenvalue;
}

// ---------------------------------------------------------------------------
// RnnModel
// ---------------------------------------------------------------------------

RnnModel RnnModel::random_init(int m, int p, int n, std::uint64_t seed) {
  RnnModel model;
  model.params = RnnParams::zeros(m, p, n);
  Rng rng(seed);
  fill_gaussian(rng, model.params.w_x, 0.5 / std::sqrt(static_cast<double>(n)));
  fill_gaussian(rng, model.params.w_u, 0.5 / std::sqrt(static_cast<double>(m)));
  fill_gaussian(rng, model.params.w_y, 0.5 / std::sqrt(static_cast<double>(n)));
  return model;
}

std::size_t RnnModel::num_parameters() const {
  return params.w_x.size() + params.w_u.size() + params.b.size() +
         params.w_y.size() + params.b_y.size();
}

void RnnModel::pack(std::span<double> out) const {
  copy_packed(params.w_x, out);
  copy_packed(params.w_u, out);
  std::copy(params.b.begin(), params.b.end(), out.begin());
  out = out.subspan(params.b.size());
  copy_packed(params.w_y, out);
  std::copy(params.b_y.begin(), params.b_y.end(), out.begin());
}

void RnnModel::unpack(std::span<const double> in) {
  take_packed(params.w_x, in);
  take_packed(params.w_u, in);
  std::copy(in.begin(), in.begin() + params.b.size(), params.b.begin());
  in = in.subspan(params.b.size());
  take_packed(params.w_y, in);
  std::copy(in.begin(), in.begin() + params.b_y.size(), params.b_y.begin());
}

double RnnModel::loss(const Batch& batch) const {
  validate_batch(batch, params.input_dim(), params.output_dim(), "rnn loss");
  const std::size_t count = batch_sample_count(batch);
  const RnnOperator op(params);
  const Vector x0(params.state_dim(), 0.0);
  double total = 0.0;
  Matrix e;
  for (const SequenceRef& seq : batch) {
    op.rollout(x0, *seq.d, e);
    for (std::size_t k = 0; k < e.size(); ++k) {
      const double r = e.data()[k] - seq.y->data()[k];
      total += r * r;
    }
  }
  return total / static_cast<double>(count);
}

double RnnModel::loss_and_gradient(const Batch& batch,
                                   std::span<double> grad) const {
  const int m = params.input_dim();
  const int p = params.output_dim();
  const int n = params.state_dim();
  validate_batch(batch, m, p, "rnn loss_and_gradient");
  if (grad.size() != num_parameters()) {
    throw ShapeError("rnn loss_and_gradient: gradient buffer size mismatch");
  }

  Matrix g_wx(n, n), g_wu(n, m), g_wy(p, n);
  Vector g_b(n, 0.0), g_by(p, 0.0);

  const std::size_t count = batch_sample_count(batch);
  const double res_w = 2.0 / static_cast<double>(count);
  double total_sq = 0.0;

  Vector lambda_next(n), g_a(n), g_y(p);
  for (const SequenceRef& seq : batch) {
    const Matrix& d = *seq.d;
    const Matrix& yref = *seq.y;
    const std::size_t T = d.rows();
    // forward, keeping the state trajectory; x(t+1) = tanh(a(t))
    Matrix xs(T + 1, n);
    Matrix ys(T, p);
    for (std::size_t step = 0; step < T; ++step) {
      rnn_step(params, xs.row(step), d.row(step), xs.row(step + 1),
               ys.row(step));
    }
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const double r = ys.data()[k] - yref.data()[k];
      total_sq += r * r;
    }

    std::fill(lambda_next.begin(), lambda_next.end(), 0.0);
    for (std::size_t step = T; step-- > 0;) {
      const std::span<const double> x_t = xs.row(step);
      for (int c = 0; c < p; ++c) {
        g_y[c] = res_w * (ys(step, c) - yref(step, c));
      }
      kernels::ger_acc(g_wy.data(), p, n, 1.0, g_y.data(), x_t.data());
      kernels::axpy(1.0, g_y.data(), g_by.data(), p);
      kernels::dtanh_mul(xs.row(step + 1).data(), lambda_next.data(), g_a.data(),
                         n);
      kernels::ger_acc(g_wx.data(), n, n, 1.0, g_a.data(), x_t.data());
      kernels::ger_acc(g_wu.data(), n, m, 1.0, g_a.data(), d.row(step).data());
      kernels::axpy(1.0, g_a.data(), g_b.data(), n);
      // lambda(t) = W_x^T g_a + W_y^T g_y
      std::fill(lambda_next.begin(), lambda_next.end(), 0.0);
      kernels::matvec_t_acc(params.w_x.data(), n, n, g_a.data(),
                            lambda_next.data());
      kernels::matvec_t_acc(params.w_y.data(), p, n, g_y.data(),
                            lambda_next.data());
    }
  }

  std::span<double> out = grad;
  copy_packed(g_wx, out);
  copy_packed(g_wu, out);
  std::copy(g_b.begin(), g_b.end(), out.begin());
  out = out.subspan(g_b.size());
  copy_packed(g_wy, out);
  std::copy(g_by.begin(), g_by.end(), out.begin());

  return total_sq / static_cast<double>(count);
}

void RnnModel::epoch_extras(EpochLog& log) const {
  log.gamma_M = std::numeric_limits<double>::quiet_NaN();
  log.min_cert_eig = std::numeric_limits<double>::quiet_NaN();
}

// ---------------------------------------------------------------------------
// Training loop and gradient check
// ---------------------------------------------------------------------------

namespace {

template <typename Model>
void fd_gradient(Model& model, const Batch& batch, double fd_step,
                 std::span<double> grad) {
  const std::size_t np = model.num_parameters();
  Vector theta(np);
  model.pack(theta);
  for (std::size_t k = 0; k < np; ++k) {
    const double saved = theta[k];
    theta[k] = saved + fd_step;
    model.unpack(theta);
    const double up = model.loss(batch);
    theta[k] = saved - fd_step;
    model.unpack(theta);
    const double down = model.loss(batch);
    theta[k] = saved;
    grad[k] = (up - down) / (2.0 * fd_step);
  }
  model.unpack(theta);
}

template <typename Model>
std::vector<EpochLog> train_impl(Model& model, const Batch& train_set,
                                 const Batch& val_set,
                                 const TrainingConfig& cfg) {
  if (cfg.epochs < 1) throw DomainError("train: epochs must be >= 1");
  if (!(cfg.learning_rate > 0.0)) throw DomainError("train: learning rate must be > 0");
  if (!(cfg.fd_step > 0.0)) throw DomainError("train: fd_step must be > 0");

  const std::size_t np = model.num_parameters();
  Vector theta(np), grad(np);
  std::vector<EpochLog> history;
  history.reserve(cfg.epochs);

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    double train_loss;
    if (cfg.gradient_method == GradientMethod::reverse_mode) {
      train_loss = model.loss_and_gradient(train_set, grad);
    } else {
      train_loss = model.loss(train_set);
      fd_gradient(model, train_set, cfg.fd_step, grad);
    }
    if (!std::isfinite(train_loss)) {
      throw DivergenceError("train: non-finite loss at epoch " +
                            std::to_string(epoch) + " (learning rate " +
                            std::to_string(cfg.learning_rate) + ")");
    }
    EpochLog log;
    log.epoch = epoch;
    log.train_loss = train_loss;
    log.val_loss = val_set.empty() ? std::numeric_limits<double>::quiet_NaN()
                                   : model.loss(val_set);
    model.epoch_extras(log);
    history.push_back(log);

    model.pack(theta);
    kernels::axpy(-cfg.learning_rate, grad.data(), theta.data(), np);
    model.unpack(theta);
  }
  return history;
}

template <typename Model>
double gradient_check_impl(Model& model, const Batch& batch, double fd_step,
                           int max_coords, std::uint64_t seed) {
  if (!(fd_step > 0.0)) throw DomainError("gradient_check: fd_step must be > 0");
  const std::size_t np = model.num_parameters();
  Vector analytic(np);
  model.loss_and_gradient(batch, analytic);

  std::vector<std::size_t> coords(np);
  for (std::size_t k = 0; k < np; ++k) coords[k] = k;
  if (max_coords > 0 && static_cast<std::size_t>(max_coords) < np) {
    Rng rng(seed);
    std::shuffle(coords.begin(), coords.end(), rng);
    coords.resize(max_coords);
  }

  Vector theta(np);
  model.pack(theta);
  double worst = 0.0;
  for (std::size_t k : coords) {
    const double saved = theta[k];
    theta[k] = saved + fd_step;
    model.unpack(theta);
    const double up = model.loss(batch);
    theta[k] = saved - fd_step;
    model.unpack(theta);
    const double down = model.loss(batch);
    theta[k] = saved;
    const double fd = (up - down) / (2.0 * fd_step);
    const double denom = std::max(std::abs(analytic[k]), std::abs(fd));
    const double err = (denom < 1e-8) ? std::abs(analytic[k] - fd)
                                      : std::abs(analytic[k] - fd) / denom;
    worst = std::max(worst, err);
  }
  model.unpack(theta);
  return worst;
}

}  // namespace

std::vector<EpochLog> train(NetworkedCgroModel& model, const Batch& train_set,
                            const Batch& val_set, const TrainingConfig& cfg) {
  return train_impl(model, train_set, val_set, cfg);
}

std::vector<EpochLog> train(RnnModel& model, const Batch& train_set,
                            const Batch& val_set, const TrainingConfig& cfg) {
  return train_impl(model, train_set, val_set, cfg);
}

double gradient_check(NetworkedCgroModel& model, const Batch& batch,
                      double fd_step, int max_coords, std::uint64_t seed) {
  return gradient_check_impl(model, batch, fd_step, max_coords, seed);
}

double gradient_check(RnnModel& model, const Batch& batch, double fd_step,
                      int max_coords, std::uint64_t seed) {
  return gradient_check_impl(model, batch, fd_step, max_coords, seed);
}

}  // namespace netgain
