#include "entkit/state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "entkit/tensor.hpp"

namespace entkit {

PureState PureState::validated(cvec amplitudes, DimProfile profile, const Tolerances& tol) {
  if (amplitudes.size() != profile.total())
    throw std::invalid_argument("PureState: amplitude length " +
                                std::to_string(amplitudes.size()) + " != profile total " +
                                std::to_string(profile.total()));
  const double n = amplitudes.norm();
  if (std::abs(n - 1.0) > tol.unit_norm)
    throw std::invalid_argument("PureState: norm deviates by " + std::to_string(n - 1.0) +
                                " (tolerance unit_norm=" + std::to_string(tol.unit_norm) + ")");
  return PureState(std::move(amplitudes), std::move(profile));
}

PureState PureState::normalized(cvec amplitudes, DimProfile profile) {
  if (amplitudes.size() != profile.total())
    throw std::invalid_argument("PureState: amplitude length mismatch");
  const double n = amplitudes.norm();
  if (n <= 0.0) throw std::invalid_argument("PureState: zero vector cannot be normalized");
  return PureState(amplitudes / n, std::move(profile));
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (passed ? "pass" : "fail") << " (hermiticity_dev=" << hermiticity_dev
     << ", trace_dev=" << trace_dev << ", min_eigenvalue=" << min_eigenvalue << ")";
  return os.str();
}

ValidationReport validate_density(const cmat& m, const Tolerances& tol) {
  ValidationReport r;
  if (m.rows() != m.cols()) return r;  // all flags false
  r.hermiticity_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  r.trace_dev = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
  r.hermitian_ok = r.hermiticity_dev <= tol.hermiticity;
  r.trace_ok = r.trace_dev <= tol.trace_one;
  // Eigenvalues of the Hermitian part; for near-Hermitian input this is the
  // right PSD probe, for badly non-Hermitian input the report already fails.
  Eigen::SelfAdjointEigenSolver<cmat> es(0.5 * (m + m.adjoint()),
                                         Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.psd_ok = r.min_eigenvalue >= -tol.psd;
  r.passed = r.hermitian_ok && r.trace_ok && r.psd_ok;
  return r;
}

DensityMatrix DensityMatrix::validated(cmat m, DimProfile profile, const Tolerances& tol) {
  if (m.rows() != profile.total() || m.cols() != profile.total())
    throw std::invalid_argument("DensityMatrix: matrix side " + std::to_string(m.rows()) +
                                " != profile total " + std::to_string(profile.total()));
  const ValidationReport r = validate_density(m, tol);
  if (!r.passed)
    throw std::invalid_argument("DensityMatrix: " + r.summary() +
                                " against tolerances hermiticity/trace_one/psd");
  return DensityMatrix(std::move(m), std::move(profile));
}

DensityMatrix DensityMatrix::trusted(cmat m, DimProfile profile) {
  if (m.rows() != profile.total() || m.cols() != profile.total())
    throw std::invalid_argument("DensityMatrix: matrix side != profile total");
  return DensityMatrix(std::move(m), std::move(profile));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix::trusted(psi.projector(), psi.profile());
}

}  // namespace entkit
