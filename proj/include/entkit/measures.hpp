#pragma once

#include <cstdint>
#include <optional>

#include "entkit/ensemble.hpp"
#include "entkit/exec.hpp"
#include "entkit/profile.hpp"
#include "entkit/state.hpp"

namespace entkit {

// Largest concurrence a state can attain across a cut whose smaller side has
// dimension d: sqrt(2 (d-1) / d). Used as the clamping ceiling.
double concurrence_ceiling(long smaller_side_dim);

// Pure-state concurrence across a cut: sqrt(2 (1 - tr(rho_A^2))) with rho_A
// the reduction onto side A. Symmetric in the two sides. The cut must cover
// every party of psi. Values are clamped to [0, ceiling]; clamping beyond
// clamp_warn is reported to stderr.
double concurrence_pure(const PureState& psi, const Partition& cut);

// Wootters closed form for two-qubit states:
// max{0, l1 - l2 - l3 - l4} with l_i the descending square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy). Exact to solver precision.
// Requires a 2x2 profile.
double concurrence_two_qubit(const DensityMatrix& rho);

// Closed-form cap on the concurrence of assistance:
// min over both sides of sqrt(2 (1 - tr(rho_side^2))).
double coa_upper_bound(const DensityMatrix& rho, const Partition& cut);

// Multipartite concurrence of a 4-party pure state: the quadratic mean
// structure sqrt( (1/4) * sum of the squared concurrences over all seven
// bipartitions -- four 1|3 cuts and three 2|2 cuts ).
double concurrence_four_party(const PureState& psi);

// ---------------------------------------------------------------------------
// Convex-roof optimization
// ---------------------------------------------------------------------------

enum class RoofDirection { upper_bound_of_min, lower_bound_of_max };

struct RoofOptions {
  std::uint64_t seed;   // required; no hidden global RNG
  int restarts = 0;     // 0 -> 64 when total <= 16, 256 otherwise
  int k_max = 0;        // 0 -> min(r^2, r + 2)
  double refine_tol = 1e-8;
  int max_sweeps = 120;
  double step_init = 0.5;
  double step_min = 1e-5;
  Exec exec = Exec::parallel;

  explicit RoofOptions(std::uint64_t seed_value) : seed(seed_value) {}
  RoofOptions with_seed(std::uint64_t s) const {
    RoofOptions o = *this;
    o.seed = s;
    return o;
  }
};

struct RoofEstimate {
  // Exactly the probability-weighted concurrence of `witness`.
  double value = 0.0;
  RoofDirection direction = RoofDirection::upper_bound_of_min;
  std::optional<Ensemble> witness;
  int restarts_used = 0;
  bool converged = false;  // best value stable over the final patience window
};

// Convex-roof concurrence (minimization over decompositions). The returned
// value is an upper bound of the true minimum: it is the exact average of a
// concrete witness decomposition. Deterministic for a fixed seed and
// monotonically non-increasing in the restart count.
RoofEstimate convex_roof_concurrence(const DensityMatrix& rho, const Partition& cut,
                                     const RoofOptions& opts);

// Concurrence of assistance (maximization over decompositions). The returned
// value is a lower bound of the true maximum and never exceeds
// coa_upper_bound(rho, cut) beyond rounding.
RoofEstimate concurrence_assistance(const DensityMatrix& rho, const Partition& cut,
                                    const RoofOptions& opts);

// Roof over the 4-party multipartite concurrence (used for mixed 4-party
// states). Minimization only.
RoofEstimate convex_roof_four_party(const DensityMatrix& rho, const RoofOptions& opts);

int default_restarts(long total_dimension);

}  // namespace entkit
