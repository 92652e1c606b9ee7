#include "choikit/channel.hpp"

#include <cmath>
#include <utility>

namespace choikit {

namespace {

void require_dim(int dim, const char* where) {
  if (dim <= 0) {
    throw std::invalid_argument(std::string(where) + ": dimension must be positive, got " +
                                std::to_string(dim));
  }
}

void require_operand(const ComplexMatrix& x, int dim, const char* where) {
  if (x.rows() != dim || x.cols() != dim) {
    throw std::invalid_argument(std::string(where) + ": operand must be " + std::to_string(dim) +
                                "x" + std::to_string(dim) + ", got " + std::to_string(x.rows()) +
                                "x" + std::to_string(x.cols()));
  }
}

}  // namespace

ChannelMap::ChannelMap(int dim) : dim_(dim) {
  require_dim(dim, "ChannelMap");
  action_.assign(static_cast<std::size_t>(dim) * dim, ComplexMatrix::Zero(dim, dim));
}

ChannelMap ChannelMap::identity_map(int dim) {
  ChannelMap out(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      out.action_[static_cast<std::size_t>(i) * dim + j](i, j) = Complex(1.0, 0.0);
  return out;
}

const ComplexMatrix& ChannelMap::basis_action(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw std::invalid_argument("ChannelMap::basis_action: index out of range");
  }
  return action_[static_cast<std::size_t>(i) * dim_ + j];
}

void ChannelMap::set_basis_action(int i, int j, ComplexMatrix value) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw std::invalid_argument("ChannelMap::set_basis_action: index out of range");
  }
  require_operand(value, dim_, "ChannelMap::set_basis_action");
  if (!all_finite(value)) {
    throw std::invalid_argument("ChannelMap::set_basis_action: non-finite entries");
  }
  action_[static_cast<std::size_t>(i) * dim_ + j] = std::move(value);
}

ComplexMatrix ChannelMap::apply(const ComplexMatrix& x) const {
  require_operand(x, dim_, "ChannelMap::apply");
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      out.noalias() += x(i, j) * action_[static_cast<std::size_t>(i) * dim_ + j];
  return out;
}

ComplexMatrix KrausSet::apply(const ComplexMatrix& x) const {
  require_dim(dim, "KrausSet::apply");
  require_operand(x, dim, "KrausSet::apply");
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& m : operators) out.noalias() += m * x * m.adjoint();
  return out;
}

bool KrausSet::is_trace_preserving(double tol) const {
  require_dim(dim, "KrausSet::is_trace_preserving");
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& m : operators) sum.noalias() += m.adjoint() * m;
  const double defect = (sum - ComplexMatrix::Identity(dim, dim)).norm();
  return defect <= tol * std::max(1.0, std::sqrt(static_cast<double>(dim)));
}

KrausSet make_kraus_set(std::vector<ComplexMatrix> operators) {
  if (operators.empty()) {
    throw std::invalid_argument("make_kraus_set: at least one operator required");
  }
  const Eigen::Index n = operators.front().rows();
  for (const ComplexMatrix& m : operators) {
    if (m.rows() != n || m.cols() != n) {
      throw std::invalid_argument("make_kraus_set: operators must share one square shape");
    }
    if (!all_finite(m)) {
      throw std::invalid_argument("make_kraus_set: non-finite entries");
    }
  }
  if (n <= 0) throw std::invalid_argument("make_kraus_set: operators must be non-empty matrices");
  return KrausSet{static_cast<int>(n), std::move(operators)};
}

ChoiMatrix choi_from_matrix(ComplexMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("choi_from_matrix: matrix must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const auto side = m.rows();
  const auto root = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(side))));
  if (side <= 0 || root * root != side) {
    throw std::invalid_argument("choi_from_matrix: side " + std::to_string(side) +
                                " is not a perfect square");
  }
  if (!all_finite(m)) throw std::invalid_argument("choi_from_matrix: non-finite entries");
  return ChoiMatrix{static_cast<int>(root), std::move(m)};
}

ChannelMap channel_from_kraus(const KrausSet& ks) {
  require_dim(ks.dim, "channel_from_kraus");
  const int n = ks.dim;
  ChannelMap out(n);
  // alpha(P_ij) = sum_p M_p P_ij M_p^dag = sum_p col_i(M_p) col_j(M_p)^dag
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      for (const ComplexMatrix& m : ks.operators) a.noalias() += m.col(i) * m.col(j).adjoint();
      out.set_basis_action(i, j, std::move(a));
    }
  }
  return out;
}

ChoiMatrix build_choi(const ChannelMap& channel) {
  const int n = channel.dim();
  ComplexMatrix j = ComplexMatrix::Zero(static_cast<Eigen::Index>(n) * n,
                                        static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j0 = 0; j0 < n; ++j0) {
      const ComplexMatrix& a = channel.basis_action(i, j0);
      for (int m = 0; m < n; ++m)
        for (int q = 0; q < n; ++q)
          j(static_cast<Eigen::Index>(m) * n + i, static_cast<Eigen::Index>(q) * n + j0) = a(m, q);
    }
  }
  return ChoiMatrix{n, std::move(j)};
}

ChannelMap channel_from_choi(const ChoiMatrix& j) {
  const int n = j.dim;
  require_dim(n, "channel_from_choi");
  if (j.matrix.rows() != static_cast<Eigen::Index>(n) * n ||
      j.matrix.cols() != static_cast<Eigen::Index>(n) * n) {
    throw std::invalid_argument("channel_from_choi: matrix must be " + std::to_string(n * n) +
                                "x" + std::to_string(n * n));
  }
  ChannelMap out(n);
  for (int i = 0; i < n; ++i) {
    for (int j0 = 0; j0 < n; ++j0) {
      ComplexMatrix a(n, n);
      for (int m = 0; m < n; ++m)
        for (int q = 0; q < n; ++q)
          a(m, q) = j.matrix(static_cast<Eigen::Index>(m) * n + i,
                             static_cast<Eigen::Index>(q) * n + j0);
      out.set_basis_action(i, j0, std::move(a));
    }
  }
  return out;
}

ChannelMap compose(const ChannelMap& a, const ChannelMap& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
  ChannelMap out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out.set_basis_action(i, j, a.apply(b.basis_action(i, j)));
  return out;
}

ChannelMap convex_mix(const ChannelMap& a, const ChannelMap& b, double mu) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("convex_mix: dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
  if (!std::isfinite(mu)) throw std::invalid_argument("convex_mix: mu must be finite");
  ChannelMap out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      out.set_basis_action(i, j, mu * a.basis_action(i, j) + (1.0 - mu) * b.basis_action(i, j));
  return out;
}

ComplexMatrix partial_trace_output(const ChoiMatrix& j) {
  const int n = j.dim;
  require_dim(n, "partial_trace_output");
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j0 = 0; j0 < n; ++j0)
      for (int m = 0; m < n; ++m)
        out(i, j0) += j.matrix(static_cast<Eigen::Index>(m) * n + i,
                               static_cast<Eigen::Index>(m) * n + j0);
  return out;
}

bool is_hermiticity_preserving(const ChannelMap& channel, double tol) {
  // alpha(X^dag) = alpha(X)^dag  iff  alpha(P_ji) = alpha(P_ij)^dag for all i, j.
  double defect = 0.0;
  double scale = 1.0;
  for (int i = 0; i < channel.dim(); ++i) {
    for (int j = 0; j < channel.dim(); ++j) {
      defect = std::max(defect,
                        (channel.basis_action(j, i) - channel.basis_action(i, j).adjoint()).norm());
      scale = std::max(scale, channel.basis_action(i, j).norm());
    }
  }
  return defect <= tol * scale;
}

}  // namespace choikit
