#pragma once

#include <vector>

#include "entkit/state.hpp"

namespace entkit {

// Kronecker product, row-major index convention (left factor most
// significant): (A kron B)[i1*rB+i2, j1*cB+j2] = A[i1,j1] * B[i2,j2].
cmat kron(const cmat& a, const cmat& b);
cvec kron(const cvec& a, const cvec& b);

// Partial trace onto the kept parties. `keep` must be nonempty, strictly
// increasing and within range; throws std::invalid_argument otherwise.
// The result carries the restricted profile; trace and Hermiticity are
// preserved to ptrace_consistency.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Same, acting directly on a pure state's amplitudes (no projector built).
DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep);

// tr(rho^2); equals 1 exactly for pure states.
double purity(const DensityMatrix& rho);
double purity(const cmat& m);

struct EigResult {
  Eigen::VectorXd values;  // descending
  cmat vectors;            // column i pairs with values[i]
};

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
// Throws std::invalid_argument if the input is non-Hermitian beyond
// tol.hermiticity. Within degenerate eigenspaces the returned basis is
// solver-dependent; callers may rely on spans only.
EigResult hermitian_eig(const cmat& m, const Tolerances& tol = default_tolerances());
EigResult hermitian_eig(const DensityMatrix& rho,
                        const Tolerances& tol = default_tolerances());

// Complement of `keep` in {0,...,parties-1}.
std::vector<int> complement_parties(const std::vector<int>& keep, int parties);

}  // namespace entkit
