#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "netgain/linalg.hpp"

namespace netgain {

// Three-tank benchmark parameters. Units: cm^2 for cross-sections,
// dimensionless flow fractions, g in cm/s^2, sampling time in s.
struct TankParams {
  double A1 = 38.0, A2 = 32.0, A3 = 21.0;
  double a1 = 0.05, a2 = 0.03, a3 = 0.06;
  double k1 = 0.32, k2 = 0.23, k3 = 0.52;
  double k_c = 50.0;
  double g = 981.0;
  double Ts = 0.1;
};

// Right-hand side of the tank dynamics; levels are clamped at zero inside the
// square roots. Throws ValueError on non-finite input.
std::array<double, 3> tank_derivative(const std::array<double, 3>& h, double v,
                                      const TankParams& p);

// Forward Euler with post-step clamping at zero. Returns levels h(0..T) as a
// (T+1) x 3 matrix for an input sequence of length T.
Matrix simulate_tanks(const std::array<double, 3>& h0,
                      const std::vector<double>& v, const TankParams& p);

// One recorded trajectory in network coordinates: d(t) is the full stacked
// exogenous input (the pump flow enters channel 1, the rest are zero for the
// three-tank layout), y(t) the noisy measured levels at the same instant,
// x0 the plant's initial levels.
struct Sequence {
  Matrix d;   // T x m
  Matrix y;   // T x p
  Vector x0;  // plant initial state (diagnostic; models start from zero)
};

struct Dataset {
  std::vector<Sequence> sequences;
  std::vector<int> ident_indices;
  std::vector<int> val_indices;
  int input_dim = 0;
  int output_dim = 0;
  double Ts = 0.0;
  double noise_std = 0.0;
  std::uint64_t seed = 0;
  double split_ratio = 0.7;

  std::vector<const Sequence*> ident() const;
  std::vector<const Sequence*> val() const;
};

struct DatasetSpec {
  int n_seq = 20;
  int T = 200;
  double v_min = 10.0;
  double v_max = 100.0;
  // Gaussian measurement noise; when unset, 0.01 * mean simulated level.
  std::optional<double> noise_std;
  double split_ratio = 0.7;
  std::uint64_t seed = 0;
  int hold = 20;  // steps each random input level is held
};

// Piecewise-constant excitation in [v_min, v_max], initial levels uniform in
// [0, 20] cm, per-sequence derived seeds, seeded shuffle before the split:
// the first ceil(split_ratio * n_seq) shuffled sequences identify, the rest
// validate. Deterministic given the seed.
Dataset generate_dataset(const TankParams& p, const DatasetSpec& spec);

// CSV-per-sequence directory plus a JSON manifest.
void save_dataset(const Dataset& ds, const std::filesystem::path& dir);
Dataset load_dataset(const std::filesystem::path& dir);

// Per-channel affine standardization fitted on the identification split.
// Channels with (near) zero variance keep scale 1 so constant-zero input
// channels stay exactly zero.
struct Normalization {
  Vector d_mean, d_std, y_mean, y_std;
  bool empty() const { return d_mean.empty(); }
};

Normalization fit_normalization(const Dataset& ds);
Dataset apply_normalization(const Dataset& ds, const Normalization& norm);
// Maps model outputs back to plant units.
void denormalize_outputs(const Normalization& norm, Matrix& y);

}  // namespace netgain
