#pragma once

namespace entkit {

// Central numeric tolerance configuration. Every validation in the library
// cites one of these fields by name in its failure message, so a pass/fail
// decision can always be traced back to the tolerance that produced it.
struct Tolerances {
  double hermiticity = 1e-10;     // max elementwise |rho - rho^dagger|
  double trace_one = 1e-10;       // |tr(rho) - 1|
  double psd = 1e-10;             // min eigenvalue >= -psd
  double unit_norm = 1e-10;       // | ||psi|| - 1 |
  double eig_reconstruction = 1e-10;
  double ptrace_consistency = 1e-12;
  double rank_cutoff = 1e-10;     // eigenvalues below this count as zero
  double isometry = 1e-10;        // max elementwise |M^dagger M - I|
  double ensemble_prob_sum = 1e-10;
  double ensemble_realize = 1e-8; // max elementwise deviation of sum p|psi><psi|
  double simplex_sum = 1e-12;     // weight vectors must sum to 1 within this
  double roof_witness = 1e-9;     // estimate value vs witness average
  double clamp_warn = 1e-9;       // clamping beyond this is reported
  double check_exact = 1e-9;      // inequality tolerance, all terms closed-form
  double check_estimated = 5e-3;  // inequality tolerance, any roof-estimated term
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace entkit
