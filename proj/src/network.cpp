#include "netgain/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netgain/errors.hpp"

namespace netgain {

namespace {

// Any nonzero coupling from block j's output columns into block i's input rows.
bool blocks_coupled(const InterconnectionTopology& t, int from_j, int into_i) {
  const Matrix& m = t.coupling();
  const int r0 = t.input_offset(into_i);
  const int c0 = t.output_offset(from_j);
  for (int r = 0; r < t.block(into_i).m; ++r) {
    for (int c = 0; c < t.block(from_j).p; ++c) {
      if (m(r0 + r, c0 + c) != 0.0) return true;
    }
  }
  return false;
}

std::string cycle_to_string(const std::vector<int>& cycle) {
  std::string out;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k > 0) out += " -> ";
    out += std::to_string(cycle[k]);
  }
  return out;
}

}  // namespace

NetworkedOperator assemble_network(
    InterconnectionTopology topology,
    std::vector<std::shared_ptr<const SubOperator>> subops,
    GainAllocation allocation) {
  const int n = topology.num_blocks();
  if (static_cast<int>(subops.size()) != n) {
    throw ShapeError("assemble_network: expected " + std::to_string(n) +
                     " sub-operators, got " + std::to_string(subops.size()));
  }
  if (static_cast<int>(allocation.gammas.size()) != n) {
    throw ShapeError("assemble_network: allocation size mismatch");
  }
  for (int i = 0; i < n; ++i) {
    const BlockDims want = topology.block(i);
    const BlockDims have = subops[i]->dims();
    if (want.m != have.m || want.p != have.p || want.n != have.n) {
      throw ShapeError("assemble_network: sub-operator " + std::to_string(i) +
                       " dims (" + std::to_string(have.m) + "," +
                       std::to_string(have.p) + "," + std::to_string(have.n) +
                       ") do not match topology block (" + std::to_string(want.m) +
                       "," + std::to_string(want.p) + "," + std::to_string(want.n) +
                       ")");
    }
    const auto gain = subops[i]->assigned_gain();
    if (!gain.has_value()) {
      throw DomainError("assemble_network: sub-operator " + std::to_string(i) +
                        " carries no assigned gain");
    }
    const double want_gain = allocation.gammas[i];
    if (std::abs(*gain - want_gain) > 1e-12 * std::max(1.0, std::abs(want_gain))) {
      throw DomainError("assemble_network: sub-operator " + std::to_string(i) +
                        " gain " + std::to_string(*gain) +
                        " does not match allocation " + std::to_string(want_gain));
    }
  }

  // dependency edges j -> i: y_j must be known before y_i
  std::vector<std::vector<int>> deps(n);
  for (int i = 0; i < n; ++i) {
    if (!subops[i]->has_feedthrough()) continue;
    for (int j = 0; j < n; ++j) {
      if (blocks_coupled(topology, j, i)) deps[i].push_back(j);
    }
  }

  // Kahn's algorithm, smallest index first so the order is identity whenever
  // no feedthrough constraints exist.
  std::vector<int> remaining_deps(n);
  std::vector<std::vector<int>> dependents(n);
  for (int i = 0; i < n; ++i) {
    remaining_deps[i] = static_cast<int>(deps[i].size());
    for (int j : deps[i]) dependents[j].push_back(i);
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int i = 0; i < n; ++i) {
      if (!placed[i] && remaining_deps[i] == 0) {
        next = i;
        break;
      }
    }
    if (next < 0) {
      // extract one cycle among the unplaced nodes for the error message
      std::vector<int> stack;
      std::vector<int> mark(n, 0);
      int v = 0;
      while (placed[v]) ++v;
      while (mark[v] == 0) {
        mark[v] = 1;
        stack.push_back(v);
        for (int j : deps[v]) {
          if (!placed[j]) {
            v = j;
            break;
          }
        }
      }
      auto it = std::find(stack.begin(), stack.end(), v);
      std::vector<int> cycle(it, stack.end());
      cycle.push_back(v);
      throw WellPosednessError(
          "assemble_network: cyclic direct feedthrough among sub-operators " +
          cycle_to_string(cycle));
    }
    placed[next] = true;
    order.push_back(next);
    for (int i : dependents[next]) --remaining_deps[i];
  }

  return NetworkedOperator(std::move(topology), std::move(subops),
                           std::move(allocation), std::move(order));
}

void NetworkedOperator::rollout(std::span<const double> x0, const Matrix& d,
                                Matrix& e) const {
  network_rollout(*this, x0, d, e, nullptr);
}

void network_rollout(const NetworkedOperator& net, std::span<const double> x0,
                     const Matrix& d, Matrix& e, RolloutTrace* trace) {
  const InterconnectionTopology& t = net.topology();
  const int m = t.total_inputs();
  const int p = t.total_outputs();
  const int n = t.total_states();
  if (d.rows() == 0) throw DomainError("network_rollout: empty input sequence");
  if (d.cols() != static_cast<std::size_t>(m)) {
    throw ShapeError("network_rollout: input width " + std::to_string(d.cols()) +
                     " != network input dim " + std::to_string(m));
  }
  if (x0.size() != static_cast<std::size_t>(n)) {
    throw ShapeError("network_rollout: x0 size " + std::to_string(x0.size()) +
                     " != total state dim " + std::to_string(n));
  }
  if (!all_finite(x0) || !all_finite(d)) {
    throw ValueError("network_rollout: non-finite input");
  }

  const std::size_t T = d.rows();
  e = Matrix(T, p);
  if (trace != nullptr) {
    trace->x = Matrix(T + 1, n);
    trace->u = Matrix(T, m);
    trace->y = Matrix(T, p);
  }

  Vector x(x0.begin(), x0.end());
  Vector x_next(n);
  Vector u(m);
  Vector y(p);
  const Matrix& cm = t.coupling();

  for (std::size_t step = 0; step < T; ++step) {
    if (trace != nullptr) {
      std::copy(x.begin(), x.end(), trace->x.row(step).begin());
    }
    std::span<const double> d_row = d.row(step);
    // outputs in dependency order; feedthrough blocks read their input rows
    // from the already-computed part of y
    for (int i : net.evaluation_order()) {
      const SubOperator& op = *net.subops()[i];
      const BlockDims dims = t.block(i);
      std::span<const double> xi{x.data() + t.state_offset(i),
                                 static_cast<std::size_t>(dims.n)};
      std::span<double> yi{y.data() + t.output_offset(i),
                           static_cast<std::size_t>(dims.p)};
      if (op.has_feedthrough()) {
        for (int r = 0; r < dims.m; ++r) {
          const int row = t.input_offset(i) + r;
          double acc = d_row[row];
          for (int c = 0; c < p; ++c) acc += cm(row, c) * y[c];
          u[row] = acc;
        }
        op.output(xi, {u.data() + t.input_offset(i),
                       static_cast<std::size_t>(dims.m)},
                  yi);
      } else {
        op.output(xi, {}, yi);
      }
    }
    // completed input u = M y + d, then advance every state
    for (int r = 0; r < m; ++r) {
      double acc = d_row[r];
      for (int c = 0; c < p; ++c) acc += cm(r, c) * y[c];
      u[r] = acc;
    }
    for (int i = 0; i < t.num_blocks(); ++i) {
      const SubOperator& op = *net.subops()[i];
      const BlockDims dims = t.block(i);
      op.advance({x.data() + t.state_offset(i), static_cast<std::size_t>(dims.n)},
                 {u.data() + t.input_offset(i), static_cast<std::size_t>(dims.m)},
                 {x_next.data() + t.state_offset(i),
                  static_cast<std::size_t>(dims.n)});
    }
    std::copy(y.begin(), y.end(), e.row(step).begin());
    if (!all_finite(e.row(step))) {
      throw ValueError("network_rollout: non-finite output at step " +
                       std::to_string(step));
    }
    if (trace != nullptr) {
      std::copy(u.begin(), u.end(), trace->u.row(step).begin());
      std::copy(y.begin(), y.end(), trace->y.row(step).begin());
    }
    std::swap(x, x_next);
  }
  if (trace != nullptr) {
    std::copy(x.begin(), x.end(), trace->x.row(T).begin());
  }
}

double loss_mse(const std::vector<Matrix>& y, const std::vector<Matrix>& y_ref) {
  if (y.size() != y_ref.size() || y.empty()) {
    throw ShapeError("loss_mse: sequence count mismatch or empty batch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].rows() != y_ref[i].rows() || y[i].cols() != y_ref[i].cols()) {
      throw ShapeError("loss_mse: shape mismatch in sequence " + std::to_string(i));
    }
    for (std::size_t k = 0; k < y[i].size(); ++k) {
      const double r = y[i].data()[k] - y_ref[i].data()[k];
      total += r * r;
    }
  }
  return total;
}

double loss_mse_mean(const std::vector<Matrix>& y,
                     const std::vector<Matrix>& y_ref) {
  std::size_t count = 0;
  for (const Matrix& s : y_ref) count += s.size();
  if (count == 0) throw ShapeError("loss_mse_mean: empty reference batch");
  return loss_mse(y, y_ref) / static_cast<double>(count);
}

}  // namespace netgain
