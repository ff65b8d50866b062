#pragma once

#include <cstdint>
#include <vector>

#include "netgain/network.hpp"
#include "netgain/operators.hpp"
#include "netgain/parametrization.hpp"
#include "netgain/topology.hpp"

namespace netgain {

enum class GradientMethod { reverse_mode, central_finite_difference };

struct TrainingConfig {
  double learning_rate = 1e-2;
  int epochs = 1;
  GradientMethod gradient_method = GradientMethod::reverse_mode;
  double fd_step = 1e-5;
  std::uint64_t seed = 0;
  bool train_gamma_M = false;
};

// One (input, reference-output) trajectory pair; non-owning.
struct SequenceRef {
  const Matrix* d = nullptr;
  const Matrix* y = nullptr;
};
using Batch = std::vector<SequenceRef>;

struct EpochLog {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double gamma_M = 0.0;
  double min_cert_eig = 0.0;
};

// Networked model over free parameters: per block the unconstrained CGRO
// matrices plus z_i, and the network gain (fixed or free). Realization is a
// pure function of the parameters, re-run on every evaluation, so the gain
// certificate holds at every training iterate.
struct NetworkedCgroModel {
  InterconnectionTopology topology;
  std::vector<CgroParams> xi;
  FreeGainParams gains;
  double contraction_radius = kDefaultContractionRadius;

  // Gaussian entries with stddev 0.5/sqrt(fan-in); z_i = 0. In trainable
  // mode gamma_init seeds z_M = sqrt(gamma_init).
  static NetworkedCgroModel random_init(InterconnectionTopology topology,
                                        bool feedthrough, bool gamma_trainable,
                                        double gamma_init, std::uint64_t seed);

  std::size_t num_parameters() const;
  void pack(std::span<double> out) const;
  void unpack(std::span<const double> in);

  GainAllocation allocation() const { return allocate_gains(topology, gains); }
  std::vector<CgroRealized> realize() const;
  NetworkedOperator make_operator() const;

  double loss(const Batch& batch) const;
  double loss_and_gradient(const Batch& batch, std::span<double> grad) const;
  void epoch_extras(EpochLog& log) const;
};

// Monolithic RNN baseline trained on the same (d, y) pairs.
struct RnnModel {
  RnnParams params;

  static RnnModel random_init(int m, int p, int n, std::uint64_t seed);

  std::size_t num_parameters() const;
  void pack(std::span<double> out) const;
  void unpack(std::span<const double> in);
  RnnOperator make_operator() const { return RnnOperator(params); }

  double loss(const Batch& batch) const;
  double loss_and_gradient(const Batch& batch, std::span<double> grad) const;
  void epoch_extras(EpochLog& log) const;
};

// Full-batch gradient descent, exactly cfg.epochs epochs, one update per
// epoch. Each row logs the losses at the parameters entering that epoch plus
// the gain/certificate state (networked model). Throws DivergenceError when
// the training loss goes non-finite. Deterministic.
std::vector<EpochLog> train(NetworkedCgroModel& model, const Batch& train_set,
                            const Batch& val_set, const TrainingConfig& cfg);
std::vector<EpochLog> train(RnnModel& model, const Batch& train_set,
                            const Batch& val_set, const TrainingConfig& cfg);

// Max relative error between reverse-mode and central finite differences over
// up to max_coords randomly chosen coordinates.
double gradient_check(NetworkedCgroModel& model, const Batch& batch,
                      double fd_step, int max_coords = 50,
                      std::uint64_t seed = 0);
double gradient_check(RnnModel& model, const Batch& batch, double fd_step,
                      int max_coords = 50, std::uint64_t seed = 0);

}  // namespace netgain
