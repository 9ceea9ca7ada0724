#include "entkit/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/tensor.hpp"
#include "member_measure.hpp"

namespace entkit {

double concurrence_ceiling(long d) {
  if (d < 1) throw std::invalid_argument("concurrence_ceiling: dimension must be >= 1");
  return std::sqrt(2.0 * static_cast<double>(d - 1) / static_cast<double>(d));
}

double concurrence_pure(const PureState& psi, const Partition& cut) {
  const auto f = detail::MemberMeasure::single_cut(psi.profile(), cut);
  return f.eval_normalized(psi);
}

double concurrence_two_qubit(const DensityMatrix& rho) {
  if (rho.profile() != DimProfile({2, 2}))
    throw std::invalid_argument("concurrence_two_qubit: profile must be 2x2, got " +
                                rho.profile().to_string());
  cmat yy = cmat::Zero(4, 4);  // sigma_y tensor sigma_y (real)
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  const cmat rho_tilde = yy * rho.matrix().conjugate() * yy;

  const EigResult er = hermitian_eig(rho.matrix());
  cmat sqrt_rho = cmat::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    const double lam = std::max(0.0, er.values(i));
    sqrt_rho += std::sqrt(lam) * er.vectors.col(i) * er.vectors.col(i).adjoint();
  }

  // Hermitian PSD product route: eigenvalues of sqrt(rho) rho~ sqrt(rho)
  // coincide with those of rho rho~ but stay on a numerically stable path.
  const EigResult em = hermitian_eig(sqrt_rho * rho_tilde * sqrt_rho);
  double c = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double lam = std::sqrt(std::max(0.0, em.values(i)));
    c += (i == 0) ? lam : -lam;
  }
  return detail::clamp_concurrence(std::max(0.0, c), 1.0);
}

double coa_upper_bound(const DensityMatrix& rho, const Partition& cut) {
  cut.require_covers(rho.profile().parties());
  auto side_cap = [&](const std::vector<int>& side) {
    const double p = purity(partial_trace(rho, side));
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
  };
  return std::min(side_cap(cut.side_a()), side_cap(cut.side_b()));
}

double concurrence_four_party(const PureState& psi) {
  const auto f = detail::MemberMeasure::four_party(psi.profile());
  return f.eval_normalized(psi);
}

int default_restarts(long total_dimension) { return total_dimension <= 16 ? 64 : 256; }

}  // namespace entkit
