#pragma once

#include <cstdint>
#include <random>

#include "netgain/linalg.hpp"

namespace netgain {

using Rng = std::mt19937_64;

inline void fill_gaussian(Rng& rng, Matrix& m, double stddev) {
  std::normal_distribution<double> dist(0.0, stddev);
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = dist(rng);
}

inline double uniform_in(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Log-uniform draw over [lo, hi], lo > 0. Covers magnitude decades evenly.
inline double log_uniform_in(Rng& rng, double lo, double hi) {
  return std::exp(uniform_in(rng, std::log(lo), std::log(hi)));
}

}  // namespace netgain
