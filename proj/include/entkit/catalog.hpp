#pragma once

#include <cstdint>

#include "entkit/state.hpp"

namespace entkit {
namespace states {

// |phi+> = (|01> + |10>)/sqrt(2) on 2x2.
PureState bell();

// (|0...0> + |d-1 ... d-1>)/sqrt(2) on n parties of local dimension d.
PureState ghz(int parties, int local_dim);

// (|10...0> + |01...0> + ... + |0...01>)/sqrt(n) on n qubits.
PureState w(int parties);

// (1/sqrt(d)) sum_i |ii> on d x d; both reductions are maximally mixed.
PureState max_entangled(int d);

// 2x2x3 benchmark state (1/sqrt(3))(|000> + |111> + |phi+>|2>): both qubit
// reductions are maximally mixed and the cut A|BC carries full concurrence.
PureState state_223();

// Totally antisymmetric three-qutrit state
// (1/sqrt(6)) sum over permutations of |012> with the permutation sign.
// Every single-party reduction is I3/3.
PureState antisymmetric_qutrit();

// One-parameter 2x2x2x3 family: (1-t)/24 * I_24 + t |psi><psi| with
// |psi> = (|0000> + |0012> + |1100> + |1112>)/2. The identity term is
// normalized on the full 24-dimensional space. Requires t in [0, 1].
DensityMatrix family_2223(double t);

// Haar-uniform pure state, deterministic per seed.
PureState haar_random_pure(const DimProfile& profile, std::uint64_t seed);

// Random density matrix of the given rank: partial trace of a Haar pure
// state on profile x rank ancilla. Requires 1 <= rank <= profile total.
DensityMatrix random_density(const DimProfile& profile, int rank, std::uint64_t seed);

}  // namespace states
}  // namespace entkit
