#pragma once

// Internal: fast evaluation of pure-state concurrence functionals on
// (possibly subnormalized) member vectors, used by the closed forms and by
// the convex-roof optimizer's inner loop. Not part of the public API.

#include <vector>

#include "entkit/measures.hpp"
#include "entkit/profile.hpp"
#include "entkit/state.hpp"

namespace entkit::detail {

// Precomputed reshuffle of a flat basis index into (row, col) across a cut.
// Rows always carry the smaller side; concurrence is side-symmetric.
struct CutMap {
  long dim_row = 1, dim_col = 1;
  std::vector<long> row_of, col_of;

  static CutMap build(const DimProfile& profile, const Partition& cut);

  // tr(rho_row^2) of the normalized state, given the unnormalized member m
  // with squared norm q. Cost O(dim_row^2 * dim_col).
  double reduced_purity(const cvec& m, double q, cmat& x_ws, cmat& rho_ws) const;
};

// One pure-state measure: either the concurrence across a single cut, or the
// 4-party combination sqrt(1/4 sum_cuts C^2).
class MemberMeasure {
 public:
  static MemberMeasure single_cut(const DimProfile& profile, const Partition& cut);
  static MemberMeasure four_party(const DimProfile& profile);

  // q * C(m / sqrt(q)) for the unnormalized member m, q = |m|^2.
  // Returns 0 for q below 1e-14.
  double eval(const cvec& m) const;

  // C(psi) for a normalized state.
  double eval_normalized(const PureState& psi) const { return eval_unit(psi.amplitudes()); }
  double eval_unit(const cvec& unit_vector) const;

  double ceiling() const { return ceiling_; }

 private:
  std::vector<CutMap> cuts_;
  bool combine_ = false;  // true: 4-party quadratic mean over seven cuts
  double ceiling_ = 0.0;
  // Workspaces; MemberMeasure is copied per worker thread, never shared.
  mutable std::vector<cmat> x_ws_, rho_ws_;

  void init_workspaces();
};

// Shared clamp: into [0, ceiling], warning on stderr when the adjustment
// exceeds clamp_warn.
double clamp_concurrence(double value, double ceiling);

}  // namespace entkit::detail
