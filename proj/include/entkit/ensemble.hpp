#pragma once

#include <vector>

#include "entkit/state.hpp"

namespace entkit {

// A finite pure-state realization of a density matrix:
// rho = sum_i p_i |psi_i><psi_i|.
struct EnsembleMember {
  double probability;
  PureState state;
};

class Ensemble {
 public:
  Ensemble(std::vector<EnsembleMember> members, DensityMatrix realized);

  const std::vector<EnsembleMember>& members() const { return members_; }
  const DensityMatrix& realized() const { return realized_; }

  double probability_sum() const;
  // Max elementwise |sum_i p_i |psi_i><psi_i| - realized|.
  double realization_deviation() const;

  // Checks the invariants (probabilities >= 0, sum to 1 within
  // ensemble_prob_sum, mixture matches within ensemble_realize).
  bool valid(const Tolerances& tol = default_tolerances()) const;

 private:
  std::vector<EnsembleMember> members_;
  DensityMatrix realized_;
};

// Schrodinger-HJW parametrization: every k-member decomposition of rho arises
// from a k x r isometry applied to the square-root-scaled eigenbasis of its
// numerical support (eigenvalues above rank_cutoff define r). Members are
// |phi_j> proportional to sum_i M[j,i] sqrt(lambda_i) |e_i> with probability
// equal to the squared norm. Members with probability below 1e-12 are
// dropped. Throws std::invalid_argument on shape mismatch or when
// M^dagger M deviates from identity beyond tol.isometry.
Ensemble decompose_from_isometry(const DensityMatrix& rho, const cmat& mixing,
                                 const Tolerances& tol = default_tolerances());

// Numerical rank of rho: eigenvalues above tol.rank_cutoff.
int support_rank(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

}  // namespace entkit
