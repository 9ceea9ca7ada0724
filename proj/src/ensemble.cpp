#include "entkit/ensemble.hpp"

#include <stdexcept>

#include "entkit/tensor.hpp"

namespace entkit {

Ensemble::Ensemble(std::vector<EnsembleMember> members, DensityMatrix realized)
    : members_(std::move(members)), realized_(std::move(realized)) {
  for (const auto& m : members_) {
    if (m.probability < 0.0)
      throw std::invalid_argument("Ensemble: negative probability");
    if (m.state.profile() != realized_.profile())
      throw std::invalid_argument("Ensemble: member profile mismatch");
  }
}

double Ensemble::probability_sum() const {
  double s = 0.0;
  for (const auto& m : members_) s += m.probability;
  return s;
}

double Ensemble::realization_deviation() const {
  cmat mix = cmat::Zero(realized_.dim(), realized_.dim());
  for (const auto& m : members_) mix += m.probability * m.state.projector();
  return (mix - realized_.matrix()).cwiseAbs().maxCoeff();
}

bool Ensemble::valid(const Tolerances& tol) const {
  if (std::abs(probability_sum() - 1.0) > tol.ensemble_prob_sum) return false;
  return realization_deviation() <= tol.ensemble_realize;
}

int support_rank(const DensityMatrix& rho, const Tolerances& tol) {
  const EigResult eig = hermitian_eig(rho, tol);
  int r = 0;
  while (r < eig.values.size() && eig.values(r) > tol.rank_cutoff) ++r;
  return r;
}

Ensemble decompose_from_isometry(const DensityMatrix& rho, const cmat& mixing,
                                 const Tolerances& tol) {
  const EigResult eig = hermitian_eig(rho, tol);
  int r = 0;
  while (r < eig.values.size() && eig.values(r) > tol.rank_cutoff) ++r;
  if (r == 0) throw std::invalid_argument("decompose_from_isometry: zero-rank input");

  if (mixing.cols() != r)
    throw std::invalid_argument("decompose_from_isometry: mixing has " +
                                std::to_string(mixing.cols()) + " columns, support rank is " +
                                std::to_string(r));
  if (mixing.rows() < r)
    throw std::invalid_argument("decompose_from_isometry: need at least rank-many members");
  const double iso_dev =
      (mixing.adjoint() * mixing - cmat::Identity(r, r)).cwiseAbs().maxCoeff();
  if (iso_dev > tol.isometry)
    throw std::invalid_argument("decompose_from_isometry: mixing deviates from isometry by " +
                                std::to_string(iso_dev) + " (tolerance isometry=" +
                                std::to_string(tol.isometry) + ")");

  cmat f(rho.dim(), r);
  for (int i = 0; i < r; ++i) f.col(i) = eig.vectors.col(i) * std::sqrt(eig.values(i));
  const cmat members = f * mixing.transpose();  // column j = unnormalized |phi_j>

  std::vector<EnsembleMember> out;
  out.reserve(static_cast<std::size_t>(members.cols()));
  for (Eigen::Index j = 0; j < members.cols(); ++j) {
    const double q = members.col(j).squaredNorm();
    if (q < 1e-12) continue;
    out.push_back({q, PureState::normalized(members.col(j), rho.profile())});
  }
  return Ensemble(std::move(out), rho);
}

}  // namespace entkit
