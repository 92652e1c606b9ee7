#include "choikit/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace choikit {

namespace {

void require_square(const ComplexMatrix& a, const char* where) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(where) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& a) {
  require_square(a, "hermiticity_defect");
  return (a - a.adjoint()).norm();
}

bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return hermiticity_defect(a) <= tol * std::max(1.0, a.norm());
}

ComplexMatrix matrix_unit(int i, int j, int n) {
  if (n <= 0) throw std::invalid_argument("matrix_unit: dimension must be positive");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument("matrix_unit: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") out of range for dimension " +
                                std::to_string(n));
  }
  ComplexMatrix unit = ComplexMatrix::Zero(n, n);
  unit(i - 1, j - 1) = Complex(1.0, 0.0);
  return unit;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "hs_inner");
  require_square(b, "hs_inner");
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("hs_inner: dimension mismatch (" + std::to_string(a.rows()) +
                                " vs " + std::to_string(b.rows()) + ")");
  }
  // tr(A^dag B) = sum_ij conj(A_ij) B_ij
  return a.conjugate().cwiseProduct(b).sum();
}

ComplexMatrix hs_expand(const ComplexMatrix& x) {
  require_square(x, "hs_expand");
  // (P_ij, X)_2 picks out the (i, j) entry, so the grid is X itself.
  return x;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& a, double sym_tol) {
  require_square(a, "eig_hermitian");
  if (!all_finite(a)) throw std::invalid_argument("eig_hermitian: non-finite entries");
  const double defect = hermiticity_defect(a);
  if (defect > sym_tol * std::max(1.0, a.norm())) {
    throw NonHermitianError(
        "eig_hermitian: matrix is not Hermitian (defect " + std::to_string(defect) + ")",
        defect);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigendecomposition did not converge");
  }
  // Eigen sorts ascending; flip to descending.
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

PositivityResult is_positive_semidefinite(const ComplexMatrix& a, double tol) {
  const EigenDecomposition eig = eig_hermitian(a);
  const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
  return {min_eig >= -tol * std::max(1.0, a.norm()), min_eig};
}

}  // namespace choikit
