#include "netgain/certificates.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <iostream>
#include <string>

#include "netgain/errors.hpp"

namespace netgain {

namespace {

void check_allocation(const InterconnectionTopology& t, const GainAllocation& a) {
  if (static_cast<int>(a.alphas.size()) != t.num_blocks() ||
      static_cast<int>(a.gammas.size()) != t.num_blocks()) {
    throw ShapeError("certificate: allocation size does not match topology");
  }
  if (!(a.gamma_M > 0.0)) throw DomainError("certificate: gamma_M must be > 0");
}

}  // namespace

Matrix assemble_certificate_matrix(const InterconnectionTopology& t,
                                   const GainAllocation& a) {
  check_allocation(t, a);
  const int p = t.total_outputs();
  const int m = t.total_inputs();
  const double g2 = a.gamma_M * a.gamma_M;
  Matrix s(p + m, p + m);

  for (int i = 0; i < t.num_blocks(); ++i) {
    const double ag2 = a.alphas[i] * a.gammas[i] * a.gammas[i];
    if (ag2 == g2) {
      throw SingularityError(
          "certificate: alpha_i*gamma_i^2 == gamma_M^2 for sub-operator " +
          std::to_string(i) + "; Schur diagonal undefined, use the full form");
    }
    // top-left block: (alpha_i - 1) I_{p_i}
    for (int j = 0; j < t.block(i).p; ++j) {
      const int col = t.output_offset(i) + j;
      s(col, col) = a.alphas[i] - 1.0;
    }
    // bottom-right block: -1/D_ii I_{m_i}, D_ii = ag2*g2/(ag2 - g2)
    const double neg_inv_d = -(ag2 - g2) / (ag2 * g2);
    for (int j = 0; j < t.block(i).m; ++j) {
      const int row = p + t.input_offset(i) + j;
      s(row, row) = neg_inv_d;
    }
  }
  const Matrix& cm = t.coupling();
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < p; ++c) {
      s(p + r, c) = cm(r, c);
      s(c, p + r) = cm(r, c);
    }
  }
  return s;
}

Matrix assemble_full_condition_matrix(const InterconnectionTopology& t,
                                      const GainAllocation& a) {
  check_allocation(t, a);
  const int p = t.total_outputs();
  const int m = t.total_inputs();
  const double g2 = a.gamma_M * a.gamma_M;

  // per-input-channel weights alpha_i gamma_i^2
  Vector gw(m, 0.0);
  for (int i = 0; i < t.num_blocks(); ++i) {
    const double ag2 = a.alphas[i] * a.gammas[i] * a.gammas[i];
    for (int j = 0; j < t.block(i).m; ++j) gw[t.input_offset(i) + j] = ag2;
  }

  Matrix s(p + m, p + m);
  const Matrix& cm = t.coupling();
  // top-left: A_Np - I - M^T G M
  for (int i = 0; i < t.num_blocks(); ++i) {
    for (int j = 0; j < t.block(i).p; ++j) {
      const int col = t.output_offset(i) + j;
      s(col, col) = a.alphas[i] - 1.0;
    }
  }
  for (int c1 = 0; c1 < p; ++c1) {
    for (int c2 = 0; c2 < p; ++c2) {
      double acc = 0.0;
      for (int r = 0; r < m; ++r) acc += cm(r, c1) * gw[r] * cm(r, c2);
      s(c1, c2) -= acc;
    }
  }
  // off-diagonal: -M^T G / -G M
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < p; ++c) {
      const double v = -gw[r] * cm(r, c);
      s(c, p + r) = v;
      s(p + r, c) = v;
    }
  }
  // bottom-right: gamma_M^2 I - G
  for (int r = 0; r < m; ++r) s(p + r, p + r) = g2 - gw[r];
  return s;
}

std::pair<bool, double> check_psd(const Matrix& s, double tol) {
  if (s.rows() != s.cols()) throw ShapeError("check_psd: matrix must be square");
  if (tol < 0.0) throw DomainError("check_psd: tol must be >= 0");
  if (!all_finite(s)) throw ValueError("check_psd: non-finite entry");
  const std::size_t n = s.rows();
  if (n == 0) return {true, 0.0};

  double max_abs = 0.0, max_asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      max_abs = std::max(max_abs, std::abs(s(i, j)));
      max_asym = std::max(max_asym, std::abs(s(i, j) - s(j, i)));
    }
  }
  if (max_abs > 0.0 && max_asym > 1e-12 * max_abs) {
    throw ValueError("check_psd: matrix asymmetry " + std::to_string(max_asym) +
                     " exceeds 1e-12 relative");
  }

  Eigen::MatrixXd e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e(i, j) = 0.5 * (s(i, j) + s(j, i));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e,
                                                        Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -tol, min_eig};
}

std::pair<bool, double> gershgorin_check(const Matrix& s) {
  if (s.rows() != s.cols()) throw ShapeError("gershgorin_check: square matrix required");
  const std::size_t n = s.rows();
  double margin = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) radius += std::abs(s(i, j));
    }
    const double row_margin = s(i, i) - radius;
    if (first || row_margin < margin) margin = row_margin;
    first = false;
  }
  return {margin >= 0.0, margin};
}

CertificateReport certify_allocation(const InterconnectionTopology& t,
                                     const GainAllocation& a, double tol) {
  Matrix s;
  try {
    s = assemble_certificate_matrix(t, a);
  } catch (const SingularityError&) {
    s = assemble_full_condition_matrix(t, a);
  }
  CertificateReport report;
  report.matrix_dim = static_cast<int>(s.rows());
  auto [pass, margin] = gershgorin_check(s);
  report.gershgorin_pass = pass;
  report.worst_row_margin = margin;
  auto [psd, min_eig] = check_psd(s, tol);
  report.psd = psd;
  report.min_eigenvalue = min_eig;
  return report;
}

double estimate_incremental_gain(const SequenceOperator& op,
                                 const std::vector<SequencePair>& pairs,
                                 std::span<const double> x0, int* skipped) {
  if (pairs.empty()) throw EstimationError("gain estimate: no input pairs");
  int skip_count = 0;
  double worst = -1.0;
  Matrix e, e_tilde;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const SequencePair& pair = pairs[k];
    if (pair.d.rows() == 0 || pair.d.rows() != pair.d_tilde.rows() ||
        pair.d.cols() != pair.d_tilde.cols()) {
      throw ShapeError("gain estimate: pair " + std::to_string(k) +
                       " has mismatched or empty sequences");
    }
    double den = 0.0;
    for (std::size_t i = 0; i < pair.d.size(); ++i) {
      const double diff = pair.d.data()[i] - pair.d_tilde.data()[i];
      den += diff * diff;
    }
    if (den == 0.0) {
      ++skip_count;
      std::cerr << "gain estimate: skipping pair " << k
                << " with identical inputs\n";
      continue;
    }
    op.rollout(x0, pair.d, e);
    op.rollout(x0, pair.d_tilde, e_tilde);
    double num = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const double diff = e.data()[i] - e_tilde.data()[i];
      num += diff * diff;
    }
    worst = std::max(worst, std::sqrt(num / den));
  }
  if (skipped != nullptr) *skipped = skip_count;
  if (worst < 0.0) {
    throw EstimationError("gain estimate: all pairs had identical inputs");
  }
  return worst;
}

}  // namespace netgain
