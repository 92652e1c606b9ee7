#pragma once

#include "choikit/cp_analysis.hpp"

#include <functional>
#include <optional>

namespace choikit {

enum class ChannelKind {
  Identity,
  Transposition,       // X -> X^T
  Replacement,         // X -> tr(X) W
  Depolarizing,        // X -> mu tr(X) W + (1 - mu) X
  UnitaryConjugation,  // X -> U X U^dag
  KrausExplicit,
};

struct ChannelSpec {
  ChannelKind kind = ChannelKind::Identity;
  int dim = 0;
  ComplexMatrix weight;                  // W (replacement, depolarizing)
  double mu = 0.0;                       // depolarizing mix
  ComplexMatrix unitary;                 // unitary conjugation
  std::vector<ComplexMatrix> operators;  // explicit Kraus family

  static ChannelSpec identity(int dim);
  static ChannelSpec transposition(int dim);
  static ChannelSpec replacement(ComplexMatrix w);
  static ChannelSpec depolarizing(ComplexMatrix w, double mu);
  static ChannelSpec unitary_conjugation(ComplexMatrix u);
  static ChannelSpec kraus_explicit(std::vector<ComplexMatrix> operators);
};

// Validates the parameters (W positive semidefinite with unit trace, mu in
// [0, 1], U unitary) and builds the channel. Invalid parameters raise
// std::invalid_argument.
ChannelMap make_channel(const ChannelSpec& spec);

// Closed-form Kraus family where one exists; nullopt for transposition.
// Replacement uses the spectral decomposition W = sum_i w_i |v_i><v_i| and
// returns {sqrt(w_i) |v_i><v_j|}; for diagonal W this is the family
// {sqrt(w_ii) P_ij} verbatim. Depolarizing takes the union of the scaled
// replacement family and sqrt(1 - mu) I.
std::optional<KrausSet> reference_kraus(const ChannelSpec& spec);

struct SweepRecord {
  int dim = 0;
  double min_eigenvalue = 0.0;
  int minimal_rank = 0;  // positive-eigenvalue count; the minimal Kraus rank when CP
  bool verdict = false;
};

// Analyzes family(dim) at each requested truncation dimension. Generator or
// construction failures are reported with the offending dim named.
std::vector<SweepRecord> truncation_sweep(const std::function<ChannelSpec(int)>& family,
                                          const std::vector<int>& dims,
                                          double tol = kDefaultTol);

// Replacement spec with geometric weights w_n proportional to ratio^n,
// renormalized to unit trace at each truncation dimension.
ChannelSpec geometric_replacement(int dim, double ratio);

}  // namespace choikit
