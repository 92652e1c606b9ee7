#include "choikit/cp_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace choikit {

namespace {

double rank_cutoff(double tol, const ComplexMatrix& j) {
  return tol * std::max(1.0, j.norm());
}

struct CheckedSpectrum {
  EigenDecomposition eig;
  double cutoff = 0.0;
};

// Eigendecomposes J and rejects spectra with eigenvalues below -cutoff.
CheckedSpectrum positive_spectrum(const ChoiMatrix& j, double tol, const char* where) {
  EigenDecomposition eig = eig_hermitian(j.matrix);
  const double cutoff = rank_cutoff(tol, j.matrix);
  const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (min_eig < -cutoff) {
    throw CriterionViolation(std::string(where) + ": Choi matrix is not positive (min eigenvalue " +
                                 std::to_string(min_eig) + ")",
                             min_eig);
  }
  return {std::move(eig), cutoff};
}

int count_above(const RealVector& descending, double cutoff) {
  int count = 0;
  while (count < descending.size() && descending(count) > cutoff) ++count;
  return count;
}

bool image_is_positive(const ComplexMatrix& image, double tol) {
  const double scale = std::max(1.0, image.norm());
  if (hermiticity_defect(image) > kSymTol * scale) return false;
  const EigenDecomposition eig = eig_hermitian(image);
  return eig.eigenvalues(eig.eigenvalues.size() - 1) >= -tol * scale;
}

}  // namespace

CpReport is_completely_positive(const ChannelMap& channel, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("is_completely_positive: tol must be >= 0");
  const ChoiMatrix j = build_choi(channel);
  CpReport report;
  report.hermiticity_defect = hermiticity_defect(j.matrix);
  const double scale = std::max(1.0, j.matrix.norm());
  report.tolerance_used = tol * scale;
  if (report.hermiticity_defect > kSymTol * scale) {
    // Not Hermiticity-preserving, hence not CP; no real spectrum to report.
    report.verdict = false;
    report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  const EigenDecomposition eig = eig_hermitian(j.matrix);
  report.choi_spectrum.assign(eig.eigenvalues.data(),
                              eig.eigenvalues.data() + eig.eigenvalues.size());
  report.min_eigenvalue = report.choi_spectrum.back();
  report.minimal_rank = count_above(eig.eigenvalues, report.tolerance_used);
  report.verdict = report.min_eigenvalue >= -report.tolerance_used;
  return report;
}

QFactor q_factor(const ChoiMatrix& j, double tol) {
  const CheckedSpectrum checked = positive_spectrum(j, tol, "q_factor");
  const RealVector clamped = checked.eig.eigenvalues.cwiseMax(0.0);
  ComplexMatrix q = clamped.cwiseSqrt().cast<Complex>().asDiagonal() *
                    checked.eig.eigenvectors.adjoint();
  return QFactor{std::move(q)};
}

KrausSet kraus_from_choi(const ChoiMatrix& j, double tol) {
  const CheckedSpectrum checked = positive_spectrum(j, tol, "kraus_from_choi");
  const int n = j.dim;
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index p = 0; p < checked.eig.eigenvalues.size(); ++p) {
    const double lambda = checked.eig.eigenvalues(p);
    if (lambda <= checked.cutoff) break;  // descending order: prefix scan
    const double root = std::sqrt(lambda);
    ComplexMatrix m(n, n);
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col)
        m(row, col) = root * checked.eig.eigenvectors(static_cast<Eigen::Index>(row) * n + col, p);
    ops.push_back(std::move(m));
  }
  return KrausSet{n, std::move(ops)};
}

KrausSet kraus_from_q(const QFactor& qf, int dim, double tol) {
  if (dim <= 0) throw std::invalid_argument("kraus_from_q: dimension must be positive");
  const Eigen::Index n2 = static_cast<Eigen::Index>(dim) * dim;
  if (qf.q.rows() != n2 || qf.q.cols() != n2) {
    throw std::invalid_argument("kraus_from_q: factor must be " + std::to_string(n2) + "x" +
                                std::to_string(n2));
  }
  // Row norms square to the spectral weights, so drop rows below the cutoff.
  const double scale = std::max(1.0, qf.q.squaredNorm());
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index p = 0; p < qf.q.rows(); ++p) {
    if (qf.q.row(p).squaredNorm() <= tol * scale) continue;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(i, j) = std::conj(qf.q(p, static_cast<Eigen::Index>(i) * dim + j));
    ops.push_back(std::move(m));
  }
  return KrausSet{dim, std::move(ops)};
}

int minimal_kraus_rank(const ChoiMatrix& j, double tol) {
  const CheckedSpectrum checked = positive_spectrum(j, tol, "minimal_kraus_rank");
  return count_above(checked.eig.eigenvalues, checked.cutoff);
}

KrausSet rotate_kraus(const KrausSet& ks, const ComplexMatrix& u, double orth_tol) {
  const auto k = static_cast<Eigen::Index>(ks.operators.size());
  if (u.cols() != k) {
    throw std::invalid_argument("rotate_kraus: matrix has " + std::to_string(u.cols()) +
                                " columns, set has " + std::to_string(k) + " operators");
  }
  if (u.rows() < u.cols()) {
    throw std::invalid_argument("rotate_kraus: isometry needs at least as many rows as columns");
  }
  if (!all_finite(u)) throw std::invalid_argument("rotate_kraus: non-finite entries");
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(k, k)).norm();
  if (defect > orth_tol) {
    throw std::invalid_argument("rotate_kraus: matrix is not an isometry (defect " +
                                std::to_string(defect) + ")");
  }
  std::vector<ComplexMatrix> rotated;
  rotated.reserve(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index p = 0; p < u.rows(); ++p) {
    ComplexMatrix m = ComplexMatrix::Zero(ks.dim, ks.dim);
    for (Eigen::Index q = 0; q < k; ++q) m.noalias() += u(p, q) * ks.operators[q];
    rotated.push_back(std::move(m));
  }
  return KrausSet{ks.dim, std::move(rotated)};
}

ComplexMatrix apply_extended(const ChannelMap& channel, const ComplexMatrix& x) {
  const int n = channel.dim();
  const Eigen::Index n2 = static_cast<Eigen::Index>(n) * n;
  if (x.rows() != n2 || x.cols() != n2) {
    throw std::invalid_argument("apply_extended: operand must be " + std::to_string(n2) + "x" +
                                std::to_string(n2));
  }
  ComplexMatrix out(n2, n2);
  ComplexMatrix block(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          block(a, b) = x(static_cast<Eigen::Index>(a) * n + k, static_cast<Eigen::Index>(b) * n + l);
      const ComplexMatrix image = channel.apply(block);
      for (int m = 0; m < n; ++m)
        for (int q = 0; q < n; ++q)
          out(static_cast<Eigen::Index>(m) * n + k, static_cast<Eigen::Index>(q) * n + l) =
              image(m, q);
    }
  }
  return out;
}

bool cp_oracle(const ChannelMap& channel, int trials, double tol, std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("cp_oracle: trials must be >= 0");
  const int n = channel.dim();
  const Eigen::Index n2 = static_cast<Eigen::Index>(n) * n;

  // Entangled-pair probe: the image of sum_ij P_ij (x) P_ij is the Choi
  // matrix itself, so this single state decides the verdict.
  ComplexVector pair = ComplexVector::Zero(n2);
  for (int i = 0; i < n; ++i) pair(static_cast<Eigen::Index>(i) * n + i) = Complex(1.0, 0.0);
  const ComplexMatrix probe = pair * pair.adjoint();
  if (!image_is_positive(apply_extended(channel, probe), tol)) return false;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    ComplexMatrix b(n2, n2);
    for (Eigen::Index r = 0; r < n2; ++r)
      for (Eigen::Index c = 0; c < n2; ++c) b(r, c) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = b * b.adjoint();
    rho /= rho.trace().real();
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    if (!image_is_positive(apply_extended(channel, rho), tol)) return false;
  }
  return true;
}

}  // namespace choikit
