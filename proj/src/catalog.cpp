#include "entkit/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "entkit/rng.hpp"
#include "entkit/tensor.hpp"

namespace entkit {
namespace states {

PureState bell() {
  DimProfile profile({2, 2});
  cvec v = cvec::Zero(4);
  v(1) = 1.0;  // |01>
  v(2) = 1.0;  // |10>
  return PureState::normalized(std::move(v), std::move(profile));
}

PureState ghz(int parties, int local_dim) {
  if (parties < 2 || local_dim < 2)
    throw std::invalid_argument("ghz: need parties >= 2 and local dimension >= 2");
  DimProfile profile(std::vector<int>(static_cast<std::size_t>(parties), local_dim));
  cvec v = cvec::Zero(profile.total());
  v(0) = 1.0;
  v(profile.total() - 1) = 1.0;
  return PureState::normalized(std::move(v), std::move(profile));
}

PureState w(int parties) {
  if (parties < 2) throw std::invalid_argument("w: need parties >= 2");
  DimProfile profile(std::vector<int>(static_cast<std::size_t>(parties), 2));
  cvec v = cvec::Zero(profile.total());
  long one_hot = 1;
  for (int p = 0; p < parties; ++p, one_hot <<= 1) v(one_hot) = 1.0;
  return PureState::normalized(std::move(v), std::move(profile));
}

PureState max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: need d >= 2");
  DimProfile profile({d, d});
  cvec v = cvec::Zero(profile.total());
  for (int i = 0; i < d; ++i) v(static_cast<long>(i) * d + i) = 1.0;
  return PureState::normalized(std::move(v), std::move(profile));
}

PureState state_223() {
  DimProfile profile({2, 2, 3});
  cvec v = cvec::Zero(12);
  const double a = 1.0 / std::sqrt(3.0);
  const double b = 1.0 / std::sqrt(6.0);
  v(profile.index_of({0, 0, 0})) = a;
  v(profile.index_of({1, 1, 1})) = a;
  v(profile.index_of({0, 1, 2})) = b;  // |phi+>|2> spreads over |012>,|102>
  v(profile.index_of({1, 0, 2})) = b;
  return PureState::validated(std::move(v), std::move(profile));
}

PureState antisymmetric_qutrit() {
  DimProfile profile({3, 3, 3});
  cvec v = cvec::Zero(27);
  const double a = 1.0 / std::sqrt(6.0);
  // Basis digits 0..2 stand for the conventional labels 1..3.
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int i = 0; i < 6; ++i) {
    const double sign = i < 3 ? 1.0 : -1.0;
    v(profile.index_of({perms[i][0], perms[i][1], perms[i][2]})) = sign * a;
  }
  return PureState::validated(std::move(v), std::move(profile));
}

DensityMatrix family_2223(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("family_2223: t must lie in [0, 1]");
  DimProfile profile({2, 2, 2, 3});
  cvec v = cvec::Zero(24);
  v(profile.index_of({0, 0, 0, 0})) = 0.5;
  v(profile.index_of({0, 0, 1, 2})) = 0.5;
  v(profile.index_of({1, 1, 0, 0})) = 0.5;
  v(profile.index_of({1, 1, 1, 2})) = 0.5;
  cmat m = ((1.0 - t) / 24.0) * cmat::Identity(24, 24) + t * (v * v.adjoint());
  return DensityMatrix::validated(std::move(m), std::move(profile));
}

PureState haar_random_pure(const DimProfile& profile, std::uint64_t seed) {
  CounterRng rng(seed);
  return PureState::normalized(haar_vector(static_cast<int>(profile.total()), rng), profile);
}

DensityMatrix random_density(const DimProfile& profile, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > profile.total())
    throw std::invalid_argument("random_density: rank must be in [1, total]");
  CounterRng rng(seed);
  const long d = profile.total();
  // Purification: Haar vector on system x ancilla(rank), ancilla traced out.
  cvec v = haar_vector(static_cast<int>(d * rank), rng);
  cmat x(d, rank);
  for (long i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) x(i, j) = v(i * rank + j);
  return DensityMatrix::trusted(x * x.adjoint(), profile);
}

}  // namespace states
}  // namespace entkit
