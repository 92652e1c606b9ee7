#include "choikit/builtin_channels.hpp"

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

void validate_weight(const ComplexMatrix& w, int dim, const char* kind) {
  if (w.rows() != dim || w.cols() != dim) {
    throw std::invalid_argument(std::string(kind) + ": W must be " + std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  if (!all_finite(w)) throw std::invalid_argument(std::string(kind) + ": W has non-finite entries");
  if (!is_hermitian(w)) throw std::invalid_argument(std::string(kind) + ": W must be Hermitian");
  const PositivityResult pos = is_positive_semidefinite(w, kResidTol);
  if (!pos.positive) {
    throw std::invalid_argument(std::string(kind) + ": W must be positive semidefinite (min eigenvalue " +
                                std::to_string(pos.min_eigenvalue) + ")");
  }
  if (std::abs(w.trace() - Complex(1.0, 0.0)) > kResidTol * std::max(1.0, w.norm())) {
    throw std::invalid_argument(std::string(kind) + ": W must have unit trace, got " +
                                std::to_string(w.trace().real()));
  }
}

void validate_unitary(const ComplexMatrix& u, int dim) {
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("unitary_conjugation: U must be " + std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  if (!all_finite(u)) throw std::invalid_argument("unitary_conjugation: U has non-finite entries");
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).norm();
  if (defect > kOrthTol * std::max(1.0, std::sqrt(static_cast<double>(dim)))) {
    throw std::invalid_argument("unitary_conjugation: U is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
}

// The spectral-decomposition family {sqrt(w_i) |v_i><v_j| : w_i > 0, all j}.
// Diagonal W keeps the standard basis so the family is {sqrt(w_ii) P_ij}.
KrausSet replacement_kraus(const ComplexMatrix& w) {
  const int n = static_cast<int>(w.rows());
  const double cutoff = kDefaultTol * std::max(1.0, w.norm());
  std::vector<ComplexMatrix> ops;

  ComplexMatrix offdiag = w;
  offdiag.diagonal().setZero();
  if (offdiag.norm() <= 1e-14 * std::max(1.0, w.norm())) {
    for (int i = 0; i < n; ++i) {
      const double wi = w(i, i).real();
      if (wi <= cutoff) continue;
      const double root = std::sqrt(wi);
      for (int j = 0; j < n; ++j) ops.push_back(root * matrix_unit(i + 1, j + 1, n));
    }
    return KrausSet{n, std::move(ops)};
  }

  const EigenDecomposition eig = eig_hermitian(w);
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double wi = eig.eigenvalues(i);
    if (wi <= cutoff) continue;
    const double root = std::sqrt(wi);
    for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
      ops.push_back(root * eig.eigenvectors.col(i) * eig.eigenvectors.col(j).adjoint());
    }
  }
  return KrausSet{n, std::move(ops)};
}

}  // namespace

ChannelSpec ChannelSpec::identity(int dim) {
  ChannelSpec spec;
  spec.kind = ChannelKind::Identity;
  spec.dim = dim;
  return spec;
}

ChannelSpec ChannelSpec::transposition(int dim) {
  ChannelSpec spec;
  spec.kind = ChannelKind::Transposition;
  spec.dim = dim;
  return spec;
}

ChannelSpec ChannelSpec::replacement(ComplexMatrix w) {
  ChannelSpec spec;
  spec.kind = ChannelKind::Replacement;
  spec.dim = static_cast<int>(w.rows());
  spec.weight = std::move(w);
  return spec;
}

ChannelSpec ChannelSpec::depolarizing(ComplexMatrix w, double mu) {
  ChannelSpec spec;
  spec.kind = ChannelKind::Depolarizing;
  spec.dim = static_cast<int>(w.rows());
  spec.weight = std::move(w);
  spec.mu = mu;
  return spec;
}

ChannelSpec ChannelSpec::unitary_conjugation(ComplexMatrix u) {
  ChannelSpec spec;
  spec.kind = ChannelKind::UnitaryConjugation;
  spec.dim = static_cast<int>(u.rows());
  spec.unitary = std::move(u);
  return spec;
}

ChannelSpec ChannelSpec::kraus_explicit(std::vector<ComplexMatrix> operators) {
  ChannelSpec spec;
  spec.kind = ChannelKind::KrausExplicit;
  spec.dim = operators.empty() ? 0 : static_cast<int>(operators.front().rows());
  spec.operators = std::move(operators);
  return spec;
}

ChannelMap make_channel(const ChannelSpec& spec) {
  switch (spec.kind) {
    case ChannelKind::Identity:
      require_dim(spec.dim, "identity");
      return ChannelMap::identity_map(spec.dim);

    case ChannelKind::Transposition: {
      require_dim(spec.dim, "transposition");
      ChannelMap out(spec.dim);
      for (int i = 0; i < spec.dim; ++i)
        for (int j = 0; j < spec.dim; ++j)
          out.set_basis_action(i, j, matrix_unit(j + 1, i + 1, spec.dim));
      return out;
    }

    case ChannelKind::Replacement: {
      require_dim(spec.dim, "replacement");
      validate_weight(spec.weight, spec.dim, "replacement");
      ChannelMap out(spec.dim);
      for (int i = 0; i < spec.dim; ++i) out.set_basis_action(i, i, spec.weight);
      return out;
    }

    case ChannelKind::Depolarizing: {
      require_dim(spec.dim, "depolarizing");
      validate_weight(spec.weight, spec.dim, "depolarizing");
      if (!(spec.mu >= 0.0 && spec.mu <= 1.0)) {
        throw std::invalid_argument("depolarizing: mu must lie in [0, 1], got " +
                                    std::to_string(spec.mu));
      }
      return convex_mix(make_channel(ChannelSpec::replacement(spec.weight)),
                        ChannelMap::identity_map(spec.dim), spec.mu);
    }

    case ChannelKind::UnitaryConjugation: {
      require_dim(spec.dim, "unitary_conjugation");
      validate_unitary(spec.unitary, spec.dim);
      return channel_from_kraus(KrausSet{spec.dim, {spec.unitary}});
    }

    case ChannelKind::KrausExplicit: {
      KrausSet ks = make_kraus_set(spec.operators);
      if (spec.dim != 0 && spec.dim != ks.dim) {
        throw std::invalid_argument("kraus_explicit: operator dimension " +
                                    std::to_string(ks.dim) + " disagrees with dim " +
                                    std::to_string(spec.dim));
      }
      return channel_from_kraus(ks);
    }
  }
  throw std::logic_error("make_channel: unknown channel kind");
}

std::optional<KrausSet> reference_kraus(const ChannelSpec& spec) {
  switch (spec.kind) {
    case ChannelKind::Transposition:
      return std::nullopt;

    case ChannelKind::Identity:
      require_dim(spec.dim, "identity");
      return KrausSet{spec.dim, {ComplexMatrix::Identity(spec.dim, spec.dim)}};

    case ChannelKind::UnitaryConjugation:
      require_dim(spec.dim, "unitary_conjugation");
      validate_unitary(spec.unitary, spec.dim);
      return KrausSet{spec.dim, {spec.unitary}};

    case ChannelKind::KrausExplicit:
      return make_kraus_set(spec.operators);

    case ChannelKind::Replacement:
      require_dim(spec.dim, "replacement");
      validate_weight(spec.weight, spec.dim, "replacement");
      return replacement_kraus(spec.weight);

    case ChannelKind::Depolarizing: {
      require_dim(spec.dim, "depolarizing");
      validate_weight(spec.weight, spec.dim, "depolarizing");
      if (!(spec.mu >= 0.0 && spec.mu <= 1.0)) {
        throw std::invalid_argument("depolarizing: mu must lie in [0, 1], got " +
                                    std::to_string(spec.mu));
      }
      std::vector<ComplexMatrix> ops;
      if (spec.mu > 0.0) {
        const double root = std::sqrt(spec.mu);
        for (const ComplexMatrix& m : replacement_kraus(spec.weight).operators)
          ops.push_back(root * m);
      }
      if (spec.mu < 1.0) {
        ops.push_back(std::sqrt(1.0 - spec.mu) *
                      ComplexMatrix::Identity(spec.dim, spec.dim));
      }
      return KrausSet{spec.dim, std::move(ops)};
    }
  }
  throw std::logic_error("reference_kraus: unknown channel kind");
}

std::vector<SweepRecord> truncation_sweep(const std::function<ChannelSpec(int)>& family,
                                          const std::vector<int>& dims, double tol) {
  std::vector<SweepRecord> records;
  records.reserve(dims.size());
  for (int dim : dims) {
    try {
      const ChannelSpec spec = family(dim);
      const CpReport report = is_completely_positive(make_channel(spec), tol);
      records.push_back({dim, report.min_eigenvalue, report.minimal_rank, report.verdict});
    } catch (const std::exception& e) {
      throw std::runtime_error("truncation_sweep: failure at dim " + std::to_string(dim) + ": " +
                               e.what());
    }
  }
  return records;
}

ChannelSpec geometric_replacement(int dim, double ratio) {
  require_dim(dim, "geometric_replacement");
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw std::invalid_argument("geometric_replacement: ratio must lie in (0, 1], got " +
                                std::to_string(ratio));
  }
  RealVector weights(dim);
  double term = 1.0;
  for (int n = 0; n < dim; ++n) {
    weights(n) = term;
    term *= ratio;
  }
  weights /= weights.sum();
  ComplexMatrix w = ComplexMatrix::Zero(dim, dim);
  w.diagonal() = weights.cast<Complex>();
  return ChannelSpec::replacement(std::move(w));
}

}  // namespace choikit
