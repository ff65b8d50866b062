#pragma once

#include <memory>
#include <vector>

#include "netgain/operators.hpp"
#include "netgain/parametrization.hpp"
#include "netgain/topology.hpp"

namespace netgain {

// Per-step record of a network rollout, enough to replay the computation
// backwards: stacked states x(0..T), completed inputs u(0..T-1) and outputs
// y(0..T-1).
struct RolloutTrace {
  Matrix x;  // (T+1) x n_total
  Matrix u;  // T x m_total
  Matrix y;  // T x p_total
};

// N sub-operators wired through the coupling matrix, u = M y + d, e = y.
// Outputs are computed in a topological order of the direct-feedthrough
// dependency graph; construction rejects cyclic feedthrough coupling.
class NetworkedOperator final : public SequenceOperator {
 public:
  NetworkedOperator(InterconnectionTopology topology,
                    std::vector<std::shared_ptr<const SubOperator>> subops,
                    GainAllocation allocation, std::vector<int> evaluation_order)
      : topology_(std::move(topology)),
        subops_(std::move(subops)),
        allocation_(std::move(allocation)),
        evaluation_order_(std::move(evaluation_order)) {}

  const InterconnectionTopology& topology() const { return topology_; }
  const std::vector<std::shared_ptr<const SubOperator>>& subops() const {
    return subops_;
  }
  const GainAllocation& allocation() const { return allocation_; }
  const std::vector<int>& evaluation_order() const { return evaluation_order_; }

  int input_dim() const override { return topology_.total_inputs(); }
  int output_dim() const override { return topology_.total_outputs(); }
  int state_dim() const override { return topology_.total_states(); }
  void rollout(std::span<const double> x0, const Matrix& d,
               Matrix& e) const override;

 private:
  InterconnectionTopology topology_;
  std::vector<std::shared_ptr<const SubOperator>> subops_;
  GainAllocation allocation_;
  std::vector<int> evaluation_order_;
};

// Validates dimensions against the topology blocks and assigned gains against
// the allocation, builds the feedthrough dependency graph (edge j -> i iff
// sub-operator i has feedthrough and the M sub-block from block j's outputs
// into block i's inputs is nonzero) and topologically sorts it. Throws
// ShapeError / DomainError on mismatches and WellPosednessError (listing the
// cycle) on cyclic feedthrough.
NetworkedOperator assemble_network(
    InterconnectionTopology topology,
    std::vector<std::shared_ptr<const SubOperator>> subops,
    GainAllocation allocation);

// At each step: outputs in evaluation order (feedthrough sub-operators read
// u_i = (M y + d)_i from already-computed entries), then every state advances
// with the completed u = M y + d; e(t) = y(t).
void network_rollout(const NetworkedOperator& net, std::span<const double> x0,
                     const Matrix& d, Matrix& e, RolloutTrace* trace = nullptr);

// Sum over sequences and steps of squared residuals.
double loss_mse(const std::vector<Matrix>& y, const std::vector<Matrix>& y_ref);
// Same, divided by the total scalar sample count (the per-sample form logged
// and minimized during training).
double loss_mse_mean(const std::vector<Matrix>& y,
                     const std::vector<Matrix>& y_ref);

}  // namespace netgain
