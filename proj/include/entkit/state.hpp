#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "entkit/profile.hpp"
#include "entkit/tolerances.hpp"

namespace entkit {

using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

// Normalized pure state over a dimension profile. Immutable after
// construction; all operations on it are pure functions.
class PureState {
 public:
  // Validates |norm - 1| <= tol.unit_norm, throws std::invalid_argument.
  static PureState validated(cvec amplitudes, DimProfile profile,
                             const Tolerances& tol = default_tolerances());

  // Normalizes the vector (used by constructors that build states from
  // amplitude patterns; the pattern fixes the ray, not the scale).
  static PureState normalized(cvec amplitudes, DimProfile profile);

  const cvec& amplitudes() const { return amps_; }
  const DimProfile& profile() const { return profile_; }

  cmat projector() const { return amps_ * amps_.adjoint(); }

 private:
  PureState(cvec a, DimProfile p) : amps_(std::move(a)), profile_(std::move(p)) {}
  cvec amps_;
  DimProfile profile_;
};

struct ValidationReport {
  double hermiticity_dev = 0.0;
  double trace_dev = 0.0;
  double min_eigenvalue = 0.0;
  bool hermitian_ok = false;
  bool trace_ok = false;
  bool psd_ok = false;
  bool passed = false;
  std::string summary() const;
};

// Hermitian, PSD, trace-one matrix over a dimension profile.
class DensityMatrix {
 public:
  // Full validation against the type invariants; throws std::invalid_argument
  // naming the violated tolerance.
  static DensityMatrix validated(cmat m, DimProfile profile,
                                 const Tolerances& tol = default_tolerances());

  // No validation; for matrices that are valid by construction (partial
  // traces of valid states, convex mixtures, projectors of unit vectors).
  static DensityMatrix trusted(cmat m, DimProfile profile);

  static DensityMatrix from_pure(const PureState& psi);

  const cmat& matrix() const { return m_; }
  const DimProfile& profile() const { return profile_; }
  long dim() const { return profile_.total(); }

 private:
  DensityMatrix(cmat m, DimProfile p) : m_(std::move(m)), profile_(std::move(p)) {}
  cmat m_;
  DimProfile profile_;
};

// Report-based validation (never throws).
ValidationReport validate_density(const cmat& m,
                                  const Tolerances& tol = default_tolerances());

inline ValidationReport validate_density(const DensityMatrix& rho,
                                         const Tolerances& tol = default_tolerances()) {
  return validate_density(rho.matrix(), tol);
}

}  // namespace entkit
