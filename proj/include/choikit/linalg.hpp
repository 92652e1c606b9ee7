#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace choikit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance scales. Checks marked "relative" multiply by max(1, ||A||_F).
inline constexpr double kSymTol = 1e-10;     // Hermitian symmetry defect (relative)
inline constexpr double kOrthTol = 1e-10;    // orthonormality defect (absolute)
inline constexpr double kResidTol = 1e-9;    // reconstruction residuals (relative)
inline constexpr double kDefaultTol = 1e-10; // positivity / rank cutoff scale

// Thrown when an operation requires a Hermitian input; carries ||A - A^dag||_F.
class NonHermitianError : public std::invalid_argument {
public:
  NonHermitianError(const std::string& what, double defect)
      : std::invalid_argument(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

private:
  double defect_;
};

// ||A - A^dag||_F; the matrix must be square.
double hermiticity_defect(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

// defect <= tol * max(1, ||A||_F)
bool is_hermitian(const ComplexMatrix& a, double tol = kSymTol);

// Matrix unit P_ij = |e_i><e_j|: 1 at row i, column j, zeros elsewhere.
// Indices are 1-based to match operator-basis notation; storage is 0-based.
ComplexMatrix matrix_unit(int i, int j, int n);

// Hilbert-Schmidt inner product tr(A^dag B); conjugate-linear in `a`.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Coefficient grid of X in the matrix-unit basis: c_ij = (P_ij, X)_2, which
// evaluates to the (i, j) entry of X, so sum_ij c_ij P_ij = X exactly.
ComplexMatrix hs_expand(const ComplexMatrix& x);

// Kronecker product with the left factor outermost:
// (a (x) b)(r * rows(b) + s, c * cols(b) + t) = a(r, c) * b(s, t).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // orthonormal columns, same order
};

// Full spectrum of a Hermitian matrix with eigenvalues sorted descending.
// Throws NonHermitianError when the defect exceeds sym_tol * max(1, ||A||_F).
EigenDecomposition eig_hermitian(const ComplexMatrix& a, double sym_tol = kSymTol);

struct PositivityResult {
  bool positive = false;
  double min_eigenvalue = 0.0;
};

// positive iff the minimum eigenvalue is >= -tol * max(1, ||A||_F).
PositivityResult is_positive_semidefinite(const ComplexMatrix& a, double tol = kDefaultTol);

}  // namespace choikit
