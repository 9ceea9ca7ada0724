#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entkit/measures.hpp"
#include "entkit/state.hpp"

namespace entkit {

// Weight coordinates for the monogamy bounds. Every block is a simplex
// (nonnegative, unit sum within simplex_sum); only the blocks relevant to a
// given checker are validated by it.
struct WeightPoint {
  // Tripartite bounds: interpolation weight between the two pair terms.
  double x = 1.0;

  // N-party bound: one weight per B-party, length N-1.
  std::vector<double> p;

  // 2|2-cut bound: x over the four Lemma-driven legs
  // (A1A2|B1, A1A2|B2, B1B2|A1, B1B2|A2) and, per leg t, y_t over the two
  // pair terms that leg splits into.
  std::array<double, 4> t3_x{0.25, 0.25, 0.25, 0.25};
  std::array<std::array<double, 2>, 4> t3_y{
      {{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}}};

  // 4-party pairwise bound. t4_p[t]: party t's simplex over the other three
  // parties in ascending order. t4_x[b]: bipartition b's simplex over the
  // four pair slots (A1B1, A1B2, A2B1, A2B2); the slot weight is the
  // coefficient the bipartition contributes to that pair's concurrence. The
  // three bipartitions are {0,1}|{2,3}, {0,2}|{1,3}, {0,3}|{1,2}.
  std::array<std::array<double, 3>, 4> t4_p{{{1.0 / 3, 1.0 / 3, 1.0 / 3},
                                             {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                             {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                             {1.0 / 3, 1.0 / 3, 1.0 / 3}}};
  std::array<std::array<double, 4>, 3> t4_x{{{0.25, 0.25, 0.25, 0.25},
                                             {0.25, 0.25, 0.25, 0.25},
                                             {0.25, 0.25, 0.25, 0.25}}};
};

// How a reported number relates to the true quantity.
enum class TermDirection { exact, upper_estimate, lower_estimate };

struct TermInfo {
  std::string label;
  double value = 0.0;
  TermDirection direction = TermDirection::exact;
};

// What a passing report proves about the underlying inequality.
//  exact      every term closed-form; pass/fail decides the instance.
//  certifies  estimate directions make the test at least as strict as the
//             inequality, so a pass certifies the instance.
//  necessary  estimate directions make the test implied by the inequality;
//             a pass is a consistency check, a fail would refute.
//  mixed      directions pull both ways; see the per-term provenance.
enum class CheckKind { exact, certifies, necessary, mixed };

struct BoundReport {
  std::optional<double> lhs;     // absent when not evaluated
  double rhs = 0.0;
  std::optional<double> margin;  // lhs - rhs
  bool satisfied = true;         // margin >= -tolerance; true when margin absent
  double tolerance = 0.0;
  CheckKind kind = CheckKind::exact;
  WeightPoint weights;
  std::vector<TermInfo> terms;   // per-term provenance
  std::string note;
};

struct CheckOptions {
  RoofOptions roof;
  bool evaluate_lhs = true;  // 4-party mixed lhs is roof-estimated only on request
  int lhs_restarts = 12;     // budget for that (expensive) estimate
  explicit CheckOptions(std::uint64_t seed) : roof(seed) {}
};

// Tripartite pure-state bound: C^2(psi, A|BC) >= x C_a^2(rho_AB) + (1-x) C_a^2(rho_AC).
BoundReport check_tripartite_pure(const PureState& psi, double x, const CheckOptions& opts);

// Tripartite mixed-state bound: C^2(rho, A|B1B2) >= x C^2(rho_AB1) + (1-x) C^2(rho_AB2).
BoundReport check_tripartite_mixed(const DensityMatrix& rho, double x,
                                   const CheckOptions& opts);

// N-party generalizations with a weight per B-party:
// pure input uses assistance terms, mixed input uses concurrence terms.
BoundReport check_nparty(const PureState& psi, const std::vector<double>& p,
                         const CheckOptions& opts);
BoundReport check_nparty(const DensityMatrix& rho, const std::vector<double>& p,
                         const CheckOptions& opts);

// 4-party pure-state bound across the fixed cut {0,1}|{2,3}:
// C^2 >= sum_ij T_ij C^2(rho_{A_i B_j}), with T built from (t3_x, t3_y).
// On an all-qubit profile the stronger qubit form T11 = x1+x3, T12 = x2+x3,
// T21 = x1+x4, T22 = x2+x4 applies (noted in the report).
BoundReport two_two_cut_bound(const PureState& psi, const WeightPoint& w,
                              const CheckOptions& opts);

// 4-party pairwise lower bound on the mixed multipartite concurrence:
// C^2(rho_1234) >= (1/4) sum_{i<j} L_ij C^2(rho_ij), with
// L_ij = p_ij + p_ji + (the two bipartition slot weights of the pair).
// Evaluates the bound both in aggregated L form and per-cut derivation form
// and requires them to agree to 1e-9. The lhs is evaluated exactly for pure
// input and roof-estimated for mixed input when opts.evaluate_lhs is set.
BoundReport four_party_pair_bound(const DensityMatrix& rho, const WeightPoint& w,
                                  const CheckOptions& opts);

enum class WeightObjective { two_two_cut, pair_lower_bound };

// Exhaustive vertex enumeration of the weight polytope (the bound is
// multilinear in each simplex block, so the optimum sits on a vertex):
// 4 x 2^4 = 64 vertices for the 2|2-cut bound, 3^4 x 4^3 = 5184 for the
// pairwise bound. Ties break to the lexicographically first vertex.
std::pair<WeightPoint, BoundReport> optimize_weights(WeightObjective objective,
                                                     const DensityMatrix& rho,
                                                     const CheckOptions& opts);
std::pair<WeightPoint, BoundReport> optimize_weights(WeightObjective objective,
                                                     const PureState& psi,
                                                     const CheckOptions& opts);

// All-qubit comparison checker at power two:
// C^2(rho, A|B1..Bn-1) >= sum_i C^2(rho_ABi) with exact pairwise terms.
BoundReport check_qubit_ckw(const DensityMatrix& rho, const CheckOptions& opts);

// Dual assistance bound for all-qubit pure states:
// C^2(psi, A|B1..Bn-1) <= sum_i C_a^2(rho_ABi). The report's lhs column
// holds the assistance sum so that `satisfied == (margin >= -tolerance)`
// keeps one orientation; an unsatisfied first pass escalates restarts once.
BoundReport check_dual_coa(const PureState& psi, const CheckOptions& opts);

// Weight choice that turns the pairwise bound for the 2x2x2x3 family into
// exactly the (0,1) pair concurrence: both bipartitions separating that pair
// put full slot weight on it, and every remaining block points at a pair
// whose concurrence vanishes on the family.
WeightPoint family_2223_reference_weights();

// The four pair coefficients (A1B1, A1B2, A2B1, A2B2) the 2|2-cut bound
// derives from a weight point; `all_qubits` selects the stronger qubit form.
std::array<double, 4> two_two_cut_coefficients(const WeightPoint& w, bool all_qubits);

}  // namespace entkit
