#include "netgain/plant.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "netgain/errors.hpp"
#include "netgain/rng.hpp"

namespace netgain {

namespace {

double outflow(double area_ratio, double g, double h) {
  return area_ratio * std::sqrt(2.0 * g * std::max(h, 0.0));
}

// round-trip-exact decimal formatting
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed * 0x9e3779b97f4a7c15ULL + stream;
}

}  // namespace

std::array<double, 3> tank_derivative(const std::array<double, 3>& h, double v,
                                      const TankParams& p) {
  for (double level : h) {
    if (!std::isfinite(level)) throw ValueError("tank_derivative: non-finite level");
  }
  if (!std::isfinite(v)) throw ValueError("tank_derivative: non-finite inflow");
  const double q1 = outflow(p.a1 / p.A1, p.g, h[0]);
  const double q2 = outflow(p.a2 / p.A2, p.g, h[1]);
  const double q3 = outflow(p.a3 / p.A3, p.g, h[2]);
  return {
      -q1 + p.k1 * outflow(p.a3 / p.A1, p.g, h[2]) + p.k_c * v / p.A1,
      -q2 + p.k2 * outflow(p.a1 / p.A2, p.g, h[0]),
      -q3 + p.k3 * outflow(p.a2 / p.A3, p.g, h[1]),
  };
}

Matrix simulate_tanks(const std::array<double, 3>& h0,
                      const std::vector<double>& v, const TankParams& p) {
  for (double level : h0) {
    if (!(level >= 0.0)) throw ValueError("simulate_tanks: h0 must be >= 0");
  }
  Matrix levels(v.size() + 1, 3);
  std::array<double, 3> h = h0;
  for (int c = 0; c < 3; ++c) levels(0, c) = h[c];
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::array<double, 3> dh = tank_derivative(h, v[t], p);
    for (int c = 0; c < 3; ++c) {
      h[c] = std::max(h[c] + p.Ts * dh[c], 0.0);
      if (!std::isfinite(h[c])) {
        throw ValueError("simulate_tanks: non-finite level at step " +
                         std::to_string(t));
      }
      levels(t + 1, c) = h[c];
    }
  }
  return levels;
}

std::vector<const Sequence*> Dataset::ident() const {
  std::vector<const Sequence*> out;
  out.reserve(ident_indices.size());
  for (int i : ident_indices) out.push_back(&sequences[i]);
  return out;
}

std::vector<const Sequence*> Dataset::val() const {
  std::vector<const Sequence*> out;
  out.reserve(val_indices.size());
  for (int i : val_indices) out.push_back(&sequences[i]);
  return out;
}

Dataset generate_dataset(const TankParams& p, const DatasetSpec& spec) {
  if (spec.n_seq < 2) throw DomainError("generate_dataset: n_seq must be >= 2");
  if (spec.T < 1) throw DomainError("generate_dataset: T must be >= 1");
  if (!(spec.v_min <= spec.v_max)) {
    throw DomainError("generate_dataset: invalid v range");
  }
  if (!(spec.split_ratio > 0.0 && spec.split_ratio <= 1.0)) {
    throw DomainError("generate_dataset: split_ratio must lie in (0, 1]");
  }
  if (spec.hold < 1) throw DomainError("generate_dataset: hold must be >= 1");
  if (spec.noise_std.has_value() && *spec.noise_std < 0.0) {
    throw DomainError("generate_dataset: noise_std must be >= 0");
  }

  constexpr int kInputDim = 4;  // (y3-coupling, pump, y1-coupling, y2-coupling)
  constexpr int kOutputDim = 3;
  constexpr double kMaxInitialLevel = 20.0;

  Dataset ds;
  ds.input_dim = kInputDim;
  ds.output_dim = kOutputDim;
  ds.Ts = p.Ts;
  ds.seed = spec.seed;
  ds.split_ratio = spec.split_ratio;

  // first pass: excitation, initial levels, noise-free simulation
  std::vector<Matrix> levels(spec.n_seq);
  double level_sum = 0.0;
  std::size_t level_count = 0;
  for (int k = 0; k < spec.n_seq; ++k) {
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(k)));
    std::vector<double> v(spec.T);
    double held = uniform_in(rng, spec.v_min, spec.v_max);
    for (int t = 0; t < spec.T; ++t) {
      if (t > 0 && t % spec.hold == 0) {
        held = uniform_in(rng, spec.v_min, spec.v_max);
      }
      v[t] = held;
    }
    std::array<double, 3> h0{uniform_in(rng, 0.0, kMaxInitialLevel),
                             uniform_in(rng, 0.0, kMaxInitialLevel),
                             uniform_in(rng, 0.0, kMaxInitialLevel)};
    levels[k] = simulate_tanks(h0, v, p);
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      level_sum += std::abs(levels[k].data()[i]);
    }
    level_count += levels[k].size();

    Sequence seq;
    seq.d = Matrix(spec.T, kInputDim);
    for (int t = 0; t < spec.T; ++t) seq.d(t, 1) = v[t];
    seq.x0 = {h0[0], h0[1], h0[2]};
    ds.sequences.push_back(std::move(seq));
  }
  ds.noise_std = spec.noise_std.value_or(
      0.01 * level_sum / static_cast<double>(level_count));

  // second pass: measured outputs y(t) = h(t) + w(t), t = 0..T-1
  for (int k = 0; k < spec.n_seq; ++k) {
    Rng rng(mix_seed(spec.seed ^ 0x6e6f697365ULL, static_cast<std::uint64_t>(k)));
    std::normal_distribution<double> noise(0.0, ds.noise_std);
    Sequence& seq = ds.sequences[k];
    seq.y = Matrix(spec.T, kOutputDim);
    for (int t = 0; t < spec.T; ++t) {
      for (int c = 0; c < kOutputDim; ++c) {
        seq.y(t, c) =
            levels[k](t, c) + (ds.noise_std > 0.0 ? noise(rng) : 0.0);
      }
    }
  }

  // seeded shuffle, then split
  std::vector<int> order(spec.n_seq);
  for (int k = 0; k < spec.n_seq; ++k) order[k] = k;
  Rng shuffle_rng(mix_seed(spec.seed ^ 0x73706c6974ULL, 0));
  std::shuffle(order.begin(), order.end(), shuffle_rng);
  const int n_ident = static_cast<int>(
      std::ceil(spec.split_ratio * static_cast<double>(spec.n_seq)));
  ds.ident_indices.assign(order.begin(), order.begin() + n_ident);
  ds.val_indices.assign(order.begin() + n_ident, order.end());
  return ds;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["schema_version"] = 1;
  manifest["n_seq"] = ds.sequences.size();
  manifest["T"] = ds.sequences.empty() ? 0 : ds.sequences[0].d.rows();
  manifest["input_dim"] = ds.input_dim;
  manifest["output_dim"] = ds.output_dim;
  manifest["Ts"] = ds.Ts;
  manifest["noise_std"] = ds.noise_std;
  manifest["seed"] = ds.seed;
  manifest["split_ratio"] = ds.split_ratio;
  manifest["ident_indices"] = ds.ident_indices;
  manifest["val_indices"] = ds.val_indices;
  nlohmann::json x0s = nlohmann::json::array();
  nlohmann::json files = nlohmann::json::array();
  for (std::size_t k = 0; k < ds.sequences.size(); ++k) {
    x0s.push_back(ds.sequences[k].x0);
    char name[32];
    std::snprintf(name, sizeof(name), "seq_%04zu.csv", k);
    files.push_back(name);
  }
  manifest["x0"] = x0s;
  manifest["files"] = files;
  std::ofstream mf(dir / "manifest.json");
  mf << manifest.dump(2) << "\n";

  for (std::size_t k = 0; k < ds.sequences.size(); ++k) {
    const Sequence& seq = ds.sequences[k];
    std::ofstream out(dir / files[k].get<std::string>());
    out << "t";
    for (int c = 0; c < ds.input_dim; ++c) out << ",d" << c;
    for (int c = 0; c < ds.output_dim; ++c) out << ",y" << c;
    out << "\n";
    for (std::size_t t = 0; t < seq.d.rows(); ++t) {
      out << t;
      for (std::size_t c = 0; c < seq.d.cols(); ++c) {
        out << "," << format_double(seq.d(t, c));
      }
      for (std::size_t c = 0; c < seq.y.cols(); ++c) {
        out << "," << format_double(seq.y(t, c));
      }
      out << "\n";
    }
  }
}

namespace {

double parse_double(const std::string& field, const std::string& where) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw PersistenceError("dataset: bad numeric field '" + field + "' in " +
                           where);
  }
  return value;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  const fs::path manifest_path = dir / "manifest.json";
  std::ifstream mf(manifest_path);
  if (!mf) throw PersistenceError("dataset: cannot open " + manifest_path.string());
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(mf);
  } catch (const nlohmann::json::parse_error& err) {
    throw PersistenceError("dataset: manifest parse error at byte " +
                           std::to_string(err.byte) + ": " + err.what());
  }
  if (manifest.value("schema_version", -1) != 1) {
    throw MigrationError("dataset: unsupported manifest schema_version");
  }

  Dataset ds;
  try {
    ds.input_dim = manifest.at("input_dim").get<int>();
    ds.output_dim = manifest.at("output_dim").get<int>();
    ds.Ts = manifest.at("Ts").get<double>();
    ds.noise_std = manifest.at("noise_std").get<double>();
    ds.seed = manifest.at("seed").get<std::uint64_t>();
    ds.split_ratio = manifest.at("split_ratio").get<double>();
    ds.ident_indices = manifest.at("ident_indices").get<std::vector<int>>();
    ds.val_indices = manifest.at("val_indices").get<std::vector<int>>();
    const auto files = manifest.at("files").get<std::vector<std::string>>();
    const auto x0s = manifest.at("x0").get<std::vector<Vector>>();
    const std::size_t T = manifest.at("T").get<std::size_t>();

    for (std::size_t k = 0; k < files.size(); ++k) {
      std::ifstream in(dir / files[k]);
      if (!in) throw PersistenceError("dataset: cannot open " + files[k]);
      std::string line;
      std::getline(in, line);  // header
      Sequence seq;
      seq.d = Matrix(T, ds.input_dim);
      seq.y = Matrix(T, ds.output_dim);
      seq.x0 = x0s.at(k);
      for (std::size_t t = 0; t < T; ++t) {
        if (!std::getline(in, line)) {
          throw PersistenceError("dataset: " + files[k] + " truncated at row " +
                                 std::to_string(t));
        }
        std::stringstream ss(line);
        std::string field;
        std::getline(ss, field, ',');  // t column
        for (int c = 0; c < ds.input_dim; ++c) {
          std::getline(ss, field, ',');
          seq.d(t, c) = parse_double(field, files[k]);
        }
        for (int c = 0; c < ds.output_dim; ++c) {
          std::getline(ss, field, ',');
          seq.y(t, c) = parse_double(field, files[k]);
        }
      }
      ds.sequences.push_back(std::move(seq));
    }
  } catch (const nlohmann::json::exception& err) {
    throw PersistenceError("dataset: malformed manifest: " +
                           std::string(err.what()));
  }
  for (int idx : ds.ident_indices) {
    if (idx < 0 || idx >= static_cast<int>(ds.sequences.size())) {
      throw PersistenceError("dataset: split index out of range");
    }
  }
  return ds;
}

Normalization fit_normalization(const Dataset& ds) {
  Normalization norm;
  const auto ident = ds.ident();
  if (ident.empty()) throw DomainError("fit_normalization: empty identification set");
  const int m = ds.input_dim;
  const int p = ds.output_dim;
  norm.d_mean.assign(m, 0.0);
  norm.d_std.assign(m, 0.0);
  norm.y_mean.assign(p, 0.0);
  norm.y_std.assign(p, 0.0);

  std::size_t rows = 0;
  for (const Sequence* seq : ident) rows += seq->d.rows();
  for (const Sequence* seq : ident) {
    for (std::size_t t = 0; t < seq->d.rows(); ++t) {
      for (int c = 0; c < m; ++c) norm.d_mean[c] += seq->d(t, c);
      for (int c = 0; c < p; ++c) norm.y_mean[c] += seq->y(t, c);
    }
  }
  for (int c = 0; c < m; ++c) norm.d_mean[c] /= static_cast<double>(rows);
  for (int c = 0; c < p; ++c) norm.y_mean[c] /= static_cast<double>(rows);
  for (const Sequence* seq : ident) {
    for (std::size_t t = 0; t < seq->d.rows(); ++t) {
      for (int c = 0; c < m; ++c) {
        const double diff = seq->d(t, c) - norm.d_mean[c];
        norm.d_std[c] += diff * diff;
      }
      for (int c = 0; c < p; ++c) {
        const double diff = seq->y(t, c) - norm.y_mean[c];
        norm.y_std[c] += diff * diff;
      }
    }
  }
  for (int c = 0; c < m; ++c) {
    norm.d_std[c] = std::sqrt(norm.d_std[c] / static_cast<double>(rows));
    if (norm.d_std[c] < 1e-12) norm.d_std[c] = 1.0;
  }
  for (int c = 0; c < p; ++c) {
    norm.y_std[c] = std::sqrt(norm.y_std[c] / static_cast<double>(rows));
    if (norm.y_std[c] < 1e-12) norm.y_std[c] = 1.0;
  }
  return norm;
}

Dataset apply_normalization(const Dataset& ds, const Normalization& norm) {
  Dataset out = ds;
  for (Sequence& seq : out.sequences) {
    for (std::size_t t = 0; t < seq.d.rows(); ++t) {
      for (std::size_t c = 0; c < seq.d.cols(); ++c) {
        seq.d(t, c) = (seq.d(t, c) - norm.d_mean[c]) / norm.d_std[c];
      }
      for (std::size_t c = 0; c < seq.y.cols(); ++c) {
        seq.y(t, c) = (seq.y(t, c) - norm.y_mean[c]) / norm.y_std[c];
      }
    }
  }
  return out;
}

void denormalize_outputs(const Normalization& norm, Matrix& y) {
  for (std::size_t t = 0; t < y.rows(); ++t) {
    for (std::size_t c = 0; c < y.cols(); ++c) {
      y(t, c) = y(t, c) * norm.y_std[c] + norm.y_mean[c];
    }
  }
}

}  // namespace netgain
