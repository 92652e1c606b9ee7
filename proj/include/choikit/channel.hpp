#pragma once

#include "choikit/linalg.hpp"

#include <string_view>
#include <vector>

namespace choikit {

// Linear map on N x N operators, stored through its action on the matrix
// units: basis_action(i, j) = alpha(P_{i+1, j+1}) with 0-based (i, j).
// Linearity then determines the map: alpha(X) = sum_ij X(i, j) * basis_action(i, j).
class ChannelMap {
public:
  explicit ChannelMap(int dim);  // zero map
  static ChannelMap identity_map(int dim);

  int dim() const noexcept { return dim_; }
  const ComplexMatrix& basis_action(int i, int j) const;
  void set_basis_action(int i, int j, ComplexMatrix value);

  ComplexMatrix apply(const ComplexMatrix& x) const;

private:
  int dim_ = 0;
  std::vector<ComplexMatrix> action_;  // index i * dim + j
};

// Finite Kraus family {M_p}; alpha(X) = sum_p M_p X M_p^dag.
struct KrausSet {
  int dim = 0;
  std::vector<ComplexMatrix> operators;

  ComplexMatrix apply(const ComplexMatrix& x) const;
  // sum_p M_p^dag M_p = I within tol * max(1, sqrt(dim))
  bool is_trace_preserving(double tol = kResidTol) const;
};

// Validates shapes and finiteness; requires at least one operator.
KrausSet make_kraus_set(std::vector<ComplexMatrix> operators);

// Tensor ordering of the Choi matrix: the channel OUTPUT sits on the left
// factor, J = sum_ij alpha(P_ij) (x) P_ij. Serialized data carries this tag
// because the opposite ordering is also in common use.
inline constexpr std::string_view kChoiOrdering = "output-first";

struct ChoiMatrix {
  int dim = 0;  // N; matrix is N^2 x N^2
  ComplexMatrix matrix;
};

// Validates an N^2 x N^2 matrix and wraps it.
ChoiMatrix choi_from_matrix(ComplexMatrix m);

ChannelMap channel_from_kraus(const KrausSet& ks);

// Entry identity: J(m*N + i, n*N + j) = alpha(P_ij)(m, n), 0-based. Entries
// are relocated, never combined, so the round trip through channel_from_choi
// is exact.
ChoiMatrix build_choi(const ChannelMap& channel);
ChannelMap channel_from_choi(const ChoiMatrix& j);

ChannelMap compose(const ChannelMap& a, const ChannelMap& b);  // a after b

// mu * a + (1 - mu) * b; a convex mix when mu lies in [0, 1].
ChannelMap convex_mix(const ChannelMap& a, const ChannelMap& b, double mu);

// Trace over the output (left) factor; equals I_N iff the map preserves trace.
ComplexMatrix partial_trace_output(const ChoiMatrix& j);

// alpha(X^dag) = alpha(X)^dag for all X, checked on the basis actions.
bool is_hermiticity_preserving(const ChannelMap& channel, double tol = kSymTol);

}  // namespace choikit
