#include "netgain/parametrization.hpp"

#include <cmath>
#include <string>

#include "netgain/errors.hpp"

namespace netgain {

double alpha_from_z(const InterconnectionTopology& t, int i, double z_i) {
  return 1.0 + t.max_col_abs_sum(i) + z_i * z_i;
}

double nu(const InterconnectionTopology& t, int i, double z_i, double gamma_M) {
  if (!(gamma_M > 0.0)) {
    throw DomainError("nu: gamma_M must be > 0, got " + std::to_string(gamma_M));
  }
  const double alpha = alpha_from_z(t, i, z_i);
  const double row = t.max_row_abs_sum(i);
  const double g2 = gamma_M * gamma_M;
  return std::sqrt(1.0 / alpha) * std::sqrt(g2 / (row * g2 + 1.0));
}

double gamma_from_free(double z_M) { return z_M * z_M; }

double effective_gamma_M(const FreeGainParams& params) {
  if (params.gamma_trainable) {
    return std::max(gamma_from_free(params.gamma_value), kGammaFloor);
  }
  if (!(params.gamma_value > 0.0)) {
    throw DomainError("gamma_M: fixed value must be > 0, got " +
                      std::to_string(params.gamma_value));
  }
  return params.gamma_value;
}

GainAllocation allocate_gains(const InterconnectionTopology& t,
                              const FreeGainParams& params) {
  if (static_cast<int>(params.z.size()) != t.num_blocks()) {
    throw ShapeError("allocate_gains: expected " + std::to_string(t.num_blocks()) +
                     " z entries, got " + std::to_string(params.z.size()));
  }
  GainAllocation a;
  a.gamma_M = effective_gamma_M(params);
  a.alphas.reserve(params.z.size());
  a.gammas.reserve(params.z.size());
  for (int i = 0; i < t.num_blocks(); ++i) {
    a.alphas.push_back(alpha_from_z(t, i, params.z[i]));
    a.gammas.push_back(nu(t, i, params.z[i], a.gamma_M));
  }
  return a;
}

}  // namespace netgain
