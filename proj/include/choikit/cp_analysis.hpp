#pragma once

#include "choikit/channel.hpp"

#include <cstdint>
#include <vector>

namespace choikit {

// Thrown by operations that require a positive semidefinite Choi matrix.
class CriterionViolation : public std::runtime_error {
public:
  CriterionViolation(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
  double min_eigenvalue_;
};

struct CpReport {
  bool verdict = false;
  std::vector<double> choi_spectrum;  // descending; empty if the Choi matrix is not Hermitian
  double min_eigenvalue = 0.0;        // NaN when the spectrum is unavailable
  double hermiticity_defect = 0.0;
  int minimal_rank = 0;               // eigenvalues above the rank cutoff
  double tolerance_used = 0.0;        // scale-adjusted cutoff tol * max(1, ||J||_F)

  bool spectrum_available() const noexcept { return !choi_spectrum.empty(); }
};

// Complete positivity test: alpha is CP iff its Choi matrix is positive
// semidefinite. A non-Hermitian Choi matrix yields verdict=false with the
// defect reported and the spectrum omitted.
CpReport is_completely_positive(const ChannelMap& channel, double tol = kDefaultTol);

// Factor of the Choi matrix with J = q^dag q.
struct QFactor {
  ComplexMatrix q;
};

// q = D^{1/2} V^dag from J = V D V^dag; eigenvalues that are negative within
// tolerance are clamped to zero. Throws CriterionViolation when J is not
// positive within tol.
QFactor q_factor(const ChoiMatrix& j, double tol = kDefaultTol);

// Minimal Kraus family from the spectral decomposition of the Choi matrix:
// for each eigenvalue lambda_p above the cutoff with eigenvector v_p,
// M_p(m, i) = sqrt(lambda_p) * v_p[m * N + i]. The set size equals the
// minimal Kraus rank.
KrausSet kraus_from_choi(const ChoiMatrix& j, double tol = kDefaultTol);

// Kraus family read row-wise off any factor q with J = q^dag q, using the
// canonical basis of the coefficient space: M_p(i, j) = conj(q(p, i * N + j)).
// Rows of negligible norm are dropped.
KrausSet kraus_from_q(const QFactor& qf, int dim, double tol = kDefaultTol);

// Number of eigenvalues above the cutoff tol * max(1, ||J||_F); equals the
// size of a minimal Kraus representation.
int minimal_kraus_rank(const ChoiMatrix& j, double tol = kDefaultTol);

// M'_p = sum_q u(p, q) M_q for an isometry u (u^dag u = I, at least as many
// rows as columns). The rotated family induces the identical channel.
KrausSet rotate_kraus(const KrausSet& ks, const ComplexMatrix& u, double orth_tol = kOrthTol);

// (alpha (x) id)(x) by block action; x lives on H (x) C^N with N = dim.
ComplexMatrix apply_extended(const ChannelMap& channel, const ComplexMatrix& x);

// Brute-force CP probe that never touches the criterion path: applies
// alpha (x) id to the entangled-pair operator sum_ij P_ij (x) P_ij (whose
// image reproduces the Choi matrix) and to `trials` random density operators,
// requiring every image to be positive semidefinite.
bool cp_oracle(const ChannelMap& channel, int trials, double tol = kDefaultTol,
               std::uint64_t seed = 123456789u);

}  // namespace choikit
