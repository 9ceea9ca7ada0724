#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entkit/catalog.hpp"
#include "entkit/ensemble.hpp"
#include "entkit/measures.hpp"
#include "entkit/rng.hpp"
#include "entkit/tensor.hpp"
#include "oracles.hpp"

using namespace entkit;

namespace {

PureState product_state(const DimProfile& profile, std::uint64_t seed) {
  CounterRng rng(seed);
  cvec v = cvec::Ones(1);
  for (int p = 0; p < profile.parties(); ++p)
    v = kron(v, haar_vector(profile.dim(p), rng));
  return PureState::normalized(v, profile);
}

}  // namespace

TEST_CASE("pure concurrence closed values") {
  const PureState anti = states::antisymmetric_qutrit();
  CHECK(std::abs(concurrence_pure(anti, Partition({0}, {1, 2})) - 2.0 / std::sqrt(3.0)) <=
        1e-12);

  const PureState ex = states::state_223();
  CHECK(std::abs(concurrence_pure(ex, Partition({0}, {1, 2})) - 1.0) <= 1e-12);

  for (int d : {2, 3, 4}) {
    const PureState me = states::max_entangled(d);
    CHECK(std::abs(concurrence_pure(me, Partition({0}, {1})) - concurrence_ceiling(d)) <=
          1e-12);
  }

  const PureState prod = product_state(DimProfile({2, 2, 3}), 17);
  CHECK(concurrence_pure(prod, Partition({0}, {1, 2})) <= 1e-7);
}

TEST_CASE("pure concurrence is symmetric in the cut sides") {
  for (const auto& dims : {std::vector<int>{2, 3}, {2, 2, 3}, {3, 3, 3}}) {
    const DimProfile profile(dims);
    for (int i = 0; i < 10; ++i) {
      const PureState psi = states::haar_random_pure(profile, 400 + i);
      const Partition cut({0}, [&] {
        std::vector<int> rest;
        for (int p = 1; p < profile.parties(); ++p) rest.push_back(p);
        return rest;
      }());
      CHECK(std::abs(concurrence_pure(psi, cut) - concurrence_pure(psi, cut.swapped())) <=
            1e-10);
      // agreement with the from-scratch oracle
      CHECK(std::abs(concurrence_pure(psi, cut) -
                     oracles::brute_cut_concurrence(psi.amplitudes(), dims, {0})) <= 1e-12);
    }
  }
}

TEST_CASE("pure concurrence rejects cuts that do not cover the state") {
  const PureState ex = states::state_223();
  CHECK_THROWS_AS(concurrence_pure(ex, Partition({0}, {1})), std::invalid_argument);
}

TEST_CASE("two-qubit closed form") {
  CHECK(std::abs(concurrence_two_qubit(DensityMatrix::from_pure(states::bell())) - 1.0) <=
        1e-10);

  const cmat bell_proj = states::bell().projector();
  for (double t : {0.0, 1.0 / 3.0, 0.4, 0.7, 1.0}) {
    const cmat m = (1.0 - t) * 0.25 * cmat::Identity(4, 4) + t * bell_proj;
    const DensityMatrix rho = DensityMatrix::validated(m, DimProfile({2, 2}));
    const double expect = std::max(0.0, (3.0 * t - 1.0) / 2.0);
    CHECK(std::abs(concurrence_two_qubit(rho) - expect) <= 1e-12);
  }

  // Separable Bell-diagonal state: equal mixture of two Bell projectors.
  cvec minus = cvec::Zero(4);
  minus(1) = 1.0 / std::sqrt(2.0);
  minus(2) = -1.0 / std::sqrt(2.0);
  const cmat mix = 0.5 * bell_proj + 0.5 * minus * minus.adjoint();
  CHECK(concurrence_two_qubit(DensityMatrix::validated(mix, DimProfile({2, 2}))) <= 1e-12);

  CHECK_THROWS_AS(
      concurrence_two_qubit(DensityMatrix::from_pure(states::max_entangled(3))),
      std::invalid_argument);
}

TEST_CASE("assistance cap closed values") {
  const DensityMatrix bell = DensityMatrix::from_pure(states::bell());
  CHECK(std::abs(coa_upper_bound(bell, Partition({0}, {1})) - 1.0) <= 1e-12);

  // Both single-qubit reductions of rho_AB for the 223 state have purity 1/2;
  // cross-checked against the brute-force partial-trace oracle.
  const PureState ex = states::state_223();
  const DensityMatrix ab = partial_trace(ex, {0, 1});
  const cmat brute_a = oracles::brute_partial_trace(ab.matrix(), {2, 2}, {0});
  const cmat brute_b = oracles::brute_partial_trace(ab.matrix(), {2, 2}, {1});
  CHECK(std::abs((brute_a * brute_a).trace().real() - 0.5) <= 1e-12);
  CHECK(std::abs((brute_b * brute_b).trace().real() - 0.5) <= 1e-12);
  CHECK(std::abs(coa_upper_bound(ab, Partition({0}, {1})) - 1.0) <= 1e-12);

  const PureState prod = product_state(DimProfile({2, 3}), 23);
  CHECK(coa_upper_bound(DensityMatrix::from_pure(prod), Partition({0}, {1})) <= 1e-7);

  // cap of the full 223 state across the 0,2|1 cut, against the oracle
  const DensityMatrix full = DensityMatrix::from_pure(ex);
  const cmat r_ac = oracles::brute_partial_trace(full.matrix(), {2, 2, 3}, {0, 2});
  const cmat r_b = oracles::brute_partial_trace(full.matrix(), {2, 2, 3}, {1});
  const double cap_a = std::sqrt(std::max(0.0, 2.0 * (1.0 - (r_ac * r_ac).trace().real())));
  const double cap_b = std::sqrt(std::max(0.0, 2.0 * (1.0 - (r_b * r_b).trace().real())));
  CHECK(std::abs(coa_upper_bound(full, Partition({0, 2}, {1})) - std::min(cap_a, cap_b)) <=
        1e-12);
}

TEST_CASE("four-party pure concurrence") {
  const PureState prod = product_state(DimProfile({2, 2, 2, 2}), 5);
  CHECK(concurrence_four_party(prod) <= 1e-7);

  // GHZ4: every one of the seven bipartition terms has C^2 = 1, so the value
  // is sqrt(7)/2. Cross-checked term by term through the trace oracle.
  const PureState ghz4 = states::ghz(4, 2);
  double sum_sq = 0.0;
  const std::vector<std::vector<int>> sides = {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}};
  for (const auto& side : sides) {
    const cmat red = oracles::brute_partial_trace(ghz4.projector(), {2, 2, 2, 2}, side);
    sum_sq += 2.0 * (1.0 - (red * red).trace().real());
  }
  CHECK(std::abs(std::sqrt(0.25 * sum_sq) - std::sqrt(7.0) / 2.0) <= 1e-12);
  CHECK(std::abs(concurrence_four_party(ghz4) - std::sqrt(7.0) / 2.0) <= 1e-12);

  // family vector at t=1, term-by-term cross-check
  const DensityMatrix fam = states::family_2223(1.0);
  const EigResult eig = hermitian_eig(fam);
  const PureState psi = PureState::normalized(eig.vectors.col(0), fam.profile());
  double sum2 = 0.0;
  for (const auto& side : sides) {
    const cmat red =
        oracles::brute_partial_trace(psi.projector(), {2, 2, 2, 3}, side);
    sum2 += 2.0 * (1.0 - (red * red).trace().real());
  }
  CHECK(std::abs(concurrence_four_party(psi) - std::sqrt(0.25 * sum2)) <= 1e-12);

  CHECK_THROWS_AS(concurrence_four_party(states::ghz(3, 2)), std::invalid_argument);
}

TEST_CASE("decompose_from_isometry identity and pure cases") {
  const DensityMatrix ab = partial_trace(states::state_223(), {0, 1});
  const Ensemble eigen_ens = decompose_from_isometry(ab, cmat::Identity(3, 3));
  CHECK(eigen_ens.members().size() == 3);
  CHECK(eigen_ens.valid());

  const DensityMatrix pure = DensityMatrix::from_pure(states::bell());
  const Ensemble single = decompose_from_isometry(pure, cmat::Ones(1, 1));
  CHECK(single.members().size() == 1);
  CHECK(single.members()[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(single.valid());
}

TEST_CASE("decompose_from_isometry Hadamard mixing of the maximally mixed qubit") {
  const DensityMatrix half =
      DensityMatrix::validated(0.5 * cmat::Identity(2, 2), DimProfile({2}));
  cmat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  const Ensemble ens = decompose_from_isometry(half, h);
  REQUIRE(ens.members().size() == 2);
  CHECK(ens.members()[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ens.members()[1].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ens.realization_deviation() <= 1e-12);
  // members are the +/- superpositions up to eigenbasis gauge
  for (const auto& m : ens.members()) {
    const double p0 = std::norm(m.state.amplitudes()(0));
    CHECK(p0 == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("decompose_from_isometry validates its input") {
  const DensityMatrix ab = partial_trace(states::state_223(), {0, 1});  // rank 3
  CHECK_THROWS_AS(decompose_from_isometry(ab, cmat::Identity(2, 2)), std::invalid_argument);
  cmat not_iso = cmat::Identity(3, 3);
  not_iso(0, 0) = 1.5;
  CHECK_THROWS_AS(decompose_from_isometry(ab, not_iso), std::invalid_argument);
  CHECK_THROWS_AS(decompose_from_isometry(ab, cmat::Identity(2, 3)), std::invalid_argument);
}

TEST_CASE("random isometries always produce valid ensembles") {
  for (const auto& dims : {std::vector<int>{2, 2}, {2, 3}}) {
    const DimProfile profile(dims);
    CounterRng rng(808);
    for (int i = 0; i < 200; ++i) {
      const int rank = 1 + static_cast<int>(rng.below(3));
      const DensityMatrix rho =
          states::random_density(profile, rank, 7000 + static_cast<std::uint64_t>(i));
      const int r = support_rank(rho);
      const int k = r + static_cast<int>(rng.below(3));
      const Ensemble ens = decompose_from_isometry(rho, haar_isometry(k, r, rng));
      CHECK(ens.valid());
    }
  }
}
