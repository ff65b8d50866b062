#pragma once

#include <utility>
#include <vector>

#include "netgain/linalg.hpp"
#include "netgain/operators.hpp"
#include "netgain/parametrization.hpp"
#include "netgain/topology.hpp"

namespace netgain {

inline constexpr double kPsdTolerance = 1e-9;

struct CertificateReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  bool gershgorin_pass = false;
  double worst_row_margin = 0.0;
  int matrix_dim = 0;
};

// Schur-complement form of the network gain condition, size (p + m):
//   [ A_Np - I   M^T    ]
//   [ M          -D^-1  ]
// with A_Np = blkdiag(alpha_i I_{p_i}) and D diagonal with block entries
// alpha_i gamma_i^2 gamma_M^2 / (alpha_i gamma_i^2 - gamma_M^2). PSD of this
// matrix certifies the network gain gamma_M. Throws SingularityError when
// some alpha_i gamma_i^2 == gamma_M^2 (fully decoupled boundary), where the
// full-form matrix below stays usable.
Matrix assemble_certificate_matrix(const InterconnectionTopology& t,
                                   const GainAllocation& a);

// Negated quadratic-form matrix of the full gain condition in stacked (y, d)
// variables, size (p + m):
//   [ A_Np - I - M^T G M   -M^T G          ]
//   [ -G M                 gamma_M^2 I - G ]
// with G = blkdiag(alpha_i gamma_i^2 I_{m_i}). No inversion involved; PSD of
// this matrix is the certificate in its primitive form.
Matrix assemble_full_condition_matrix(const InterconnectionTopology& t,
                                      const GainAllocation& a);

// (psd, min eigenvalue) via a symmetric eigensolver. The matrix is
// symmetrized by averaging first; asymmetry beyond 1e-12 relative or
// non-finite entries raise ValueError.
std::pair<bool, double> check_psd(const Matrix& s, double tol);

// (pass, worst row margin): pass iff every diagonal entry dominates its
// off-diagonal absolute row sum. Sufficient for PSD, never necessary.
std::pair<bool, double> gershgorin_check(const Matrix& s);

// Schur form when defined, full form at the decoupled boundary.
CertificateReport certify_allocation(const InterconnectionTopology& t,
                                     const GainAllocation& a,
                                     double tol = kPsdTolerance);

struct SequencePair {
  Matrix d;        // T x m
  Matrix d_tilde;  // T x m
};

// Empirical lower bound on the incremental L2 gain:
//   max over pairs of sqrt(sum_t ||e - e~||^2 / sum_t ||d - d~||^2)
// with both rollouts started from the same x0 so the storage term vanishes.
// Pairs with zero input difference are skipped (counted in *skipped when
// given); all pairs zero raises EstimationError.
double estimate_incremental_gain(const SequenceOperator& op,
                                 const std::vector<SequencePair>& pairs,
                                 std::span<const double> x0,
                                 int* skipped = nullptr);

}  // namespace netgain
