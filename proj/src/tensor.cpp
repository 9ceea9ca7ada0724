#include "entkit/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace entkit {

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

cvec kron(const cvec& a, const cvec& b) {
  cvec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

std::vector<int> complement_parties(const std::vector<int>& keep, int parties) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int p = 0; p < parties; ++p) {
    if (k < keep.size() && keep[k] == p) {
      ++k;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

namespace {

void check_keep(const std::vector<int>& keep, int parties) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep list is empty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= parties)
      throw std::invalid_argument("partial_trace: party index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep list must be strictly increasing");
  }
}

// Flat offsets of every multi-index of `parties` within the full profile.
std::vector<long> group_offsets(const DimProfile& profile, const std::vector<int>& parties) {
  long count = 1;
  for (int p : parties) count *= profile.dim(p);
  std::vector<long> offsets(static_cast<std::size_t>(count), 0);
  long repeat = 1;
  for (int pi = static_cast<int>(parties.size()) - 1; pi >= 0; --pi) {
    const int p = parties[static_cast<std::size_t>(pi)];
    const long d = profile.dim(p), stride = profile.stride(p);
    const long block = repeat * d;
    for (long i = 0; i < count; ++i) {
      const long digit = (i / repeat) % d;
      offsets[static_cast<std::size_t>(i)] += digit * stride;
    }
    repeat = block;
  }
  return offsets;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const DimProfile& profile = rho.profile();
  check_keep(keep, profile.parties());
  const std::vector<int> traced = complement_parties(keep, profile.parties());
  if (traced.empty()) return rho;

  const std::vector<long> keep_off = group_offsets(profile, keep);
  const std::vector<long> tr_off = group_offsets(profile, traced);
  const long dk = static_cast<long>(keep_off.size());

  cmat out = cmat::Zero(dk, dk);
  const cmat& m = rho.matrix();
  for (long a = 0; a < dk; ++a) {
    for (long b = 0; b < dk; ++b) {
      std::complex<double> sum = 0.0;
      for (long t : tr_off) sum += m(keep_off[static_cast<std::size_t>(a)] + t,
                                     keep_off[static_cast<std::size_t>(b)] + t);
      out(a, b) = sum;
    }
  }
  return DensityMatrix::trusted(std::move(out), profile.restricted(keep));
}

DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep) {
  const DimProfile& profile = psi.profile();
  check_keep(keep, profile.parties());
  const std::vector<int> traced = complement_parties(keep, profile.parties());
  if (traced.empty())
    return DensityMatrix::trusted(psi.projector(), profile);

  const std::vector<long> keep_off = group_offsets(profile, keep);
  const std::vector<long> tr_off = group_offsets(profile, traced);
  const long dk = static_cast<long>(keep_off.size());
  const long dt = static_cast<long>(tr_off.size());

  // rho_keep = X X^dagger where X(a,t) = psi[keep_offset(a) + traced_offset(t)].
  cmat x(dk, dt);
  const cvec& v = psi.amplitudes();
  for (long a = 0; a < dk; ++a)
    for (long t = 0; t < dt; ++t)
      x(a, t) = v(keep_off[static_cast<std::size_t>(a)] + tr_off[static_cast<std::size_t>(t)]);
  return DensityMatrix::trusted(x * x.adjoint(), profile.restricted(keep));
}

double purity(const cmat& m) { return (m * m).trace().real(); }

double purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

EigResult hermitian_eig(const cmat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: non-square input");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol.hermiticity)
    throw std::invalid_argument("hermitian_eig: input deviates from Hermitian by " +
                                std::to_string(dev) + " (tolerance hermiticity=" +
                                std::to_string(tol.hermiticity) + ")");
  Eigen::SelfAdjointEigenSolver<cmat> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");

  const Eigen::Index n = m.rows();
  EigResult r;
  r.values.resize(n);
  r.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {  // ascending -> descending
    r.values(i) = es.eigenvalues()(n - 1 - i);
    r.vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return r;
}

EigResult hermitian_eig(const DensityMatrix& rho, const Tolerances& tol) {
  return hermitian_eig(rho.matrix(), tol);
}

}  // namespace entkit
