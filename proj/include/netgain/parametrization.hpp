#pragma once

#include <vector>

#include "netgain/topology.hpp"

namespace netgain {

// Unconstrained gain parameters: one real z_i per sub-operator, plus the
// network gain target, either fixed (gamma_M > 0) or itself free (z_M, with
// gamma_M = max(z_M^2, floor)).
struct FreeGainParams {
  std::vector<double> z;
  bool gamma_trainable = false;
  double gamma_value = 1.0;  // gamma_M when fixed, z_M when trainable

  static FreeGainParams fixed(std::vector<double> z, double gamma_M) {
    return {std::move(z), false, gamma_M};
  }
  static FreeGainParams trainable(std::vector<double> z, double z_M) {
    return {std::move(z), true, z_M};
  }
};

// Storage weights and sub-operator gains realized from free parameters. For
// every real choice of z the invariants
//   alpha_i >= 1 + max_col_abs_sum(i)
//   0 < alpha_i * gamma_i^2 <= gamma_M^2 / (max_row_abs_sum(i)*gamma_M^2 + 1)
// hold by construction; that closed-form totality is the point of the map.
struct GainAllocation {
  std::vector<double> alphas;
  std::vector<double> gammas;
  double gamma_M = 0.0;
};

// Lower clamp applied to a trainable gamma_M = z_M^2 so downstream divisions
// by gamma_M stay defined.
inline constexpr double kGammaFloor = 1e-6;

// alpha_i = 1 + max_col_abs_sum(i) + z_i^2
double alpha_from_z(const InterconnectionTopology& t, int i, double z_i);

// gamma_i = sqrt(1 / (1 + max_col_abs_sum(i) + z_i^2))
//         * sqrt(gamma_M^2 / (max_row_abs_sum(i) * gamma_M^2 + 1))
// Strictly positive and finite for every real z_i; throws DomainError when
// gamma_M <= 0.
double nu(const InterconnectionTopology& t, int i, double z_i, double gamma_M);

// z_M^2; callers clamp the degenerate z_M = 0 case via kGammaFloor.
double gamma_from_free(double z_M);

// Network gain target implied by the free parameters (applies the floor in
// trainable mode, validates positivity in fixed mode).
double effective_gamma_M(const FreeGainParams& params);

GainAllocation allocate_gains(const InterconnectionTopology& t,
                              const FreeGainParams& params);

}  // namespace netgain
