#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entkit/catalog.hpp"
#include "entkit/monogamy.hpp"
#include "entkit/rng.hpp"
#include "entkit/tensor.hpp"

using namespace entkit;

namespace {

PureState product_state(const DimProfile& profile, std::uint64_t seed) {
  CounterRng rng(seed);
  cvec v = cvec::Ones(1);
  for (int p = 0; p < profile.parties(); ++p)
    v = kron(v, haar_vector(profile.dim(p), rng));
  return PureState::normalized(v, profile);
}

WeightPoint random_weights(CounterRng& rng) {
  WeightPoint w;
  auto simplex = [&rng](double* v, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      double u;
      do {
        u = rng.uniform();
      } while (u <= 0.0);
      v[i] = -std::log(u);
      sum += v[i];
    }
    for (int i = 0; i < n; ++i) v[i] /= sum;
  };
  for (int t = 0; t < 4; ++t) simplex(w.t4_p[static_cast<std::size_t>(t)].data(), 3);
  for (int b = 0; b < 3; ++b) simplex(w.t4_x[static_cast<std::size_t>(b)].data(), 4);
  simplex(w.t3_x.data(), 4);
  for (int t = 0; t < 4; ++t) simplex(w.t3_y[static_cast<std::size_t>(t)].data(), 2);
  return w;
}

}  // namespace

TEST_CASE("tripartite pure bound saturates on the 223 state at x=1") {
  const PureState ex = states::state_223();
  const CheckOptions opts(1);
  const BoundReport r = check_tripartite_pure(ex, 1.0, opts);
  CHECK(*r.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(*r.margin) <= 1e-3);
  CHECK(r.satisfied);
  CHECK(r.kind == CheckKind::necessary);  // assistance terms are lower estimates

  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const BoundReport rx = check_tripartite_pure(ex, x, opts);
    CHECK(std::abs(rx.rhs - (8.0 + x) / 9.0) <= 2e-3);
    CHECK(rx.satisfied);
  }
}

TEST_CASE("tripartite bounds vanish on product states") {
  const PureState prod = product_state(DimProfile({2, 2, 2}), 3);
  const CheckOptions opts(2);
  const BoundReport r = check_tripartite_pure(prod, 0.5, opts);
  CHECK(*r.lhs <= 1e-9);
  CHECK(r.rhs <= 1e-9);
  CHECK(r.satisfied);

  const BoundReport rm = check_tripartite_mixed(DensityMatrix::from_pure(prod), 0.5, opts);
  CHECK(*rm.lhs <= 1e-12);
  CHECK(rm.rhs <= 1e-12);
}

TEST_CASE("tripartite checkers validate their input") {
  const PureState ex = states::state_223();
  CHECK_THROWS_AS(check_tripartite_pure(ex, 1.5, CheckOptions(1)), std::invalid_argument);
  CHECK_THROWS_AS(check_tripartite_pure(states::bell(), 0.5, CheckOptions(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_tripartite_mixed(DensityMatrix::from_pure(states::ghz(4, 2)), 0.5,
                             CheckOptions(1)),
      std::invalid_argument);
}

TEST_CASE("mixed tripartite bound on the antisymmetric state") {
  const DensityMatrix rho = DensityMatrix::from_pure(states::antisymmetric_qutrit());
  const CheckOptions opts(7);
  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const BoundReport r = check_tripartite_mixed(rho, x, opts);
    CHECK(std::abs(*r.lhs - 4.0 / 3.0) <= 1e-9);
    CHECK(std::abs(r.rhs - 1.0) <= 5e-3);
    CHECK(r.satisfied);
  }
}

TEST_CASE("mixed tripartite rhs at the endpoints equals the exact pair term") {
  // On all-qubit profiles the pair terms come from the closed form, so the
  // endpoint rhs must equal the direct two-qubit value bitwise.
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = states::random_density(DimProfile({2, 2, 2}), 2, 600 + i);
    const CheckOptions opts(10 + i);
    const double c01 = concurrence_two_qubit(partial_trace(rho, {0, 1}));
    const double c02 = concurrence_two_qubit(partial_trace(rho, {0, 2}));
    const BoundReport r0 = check_tripartite_mixed(rho, 1.0, opts);
    const BoundReport r1 = check_tripartite_mixed(rho, 0.0, opts);
    CHECK(r0.rhs == doctest::Approx(c01 * c01).epsilon(1e-12));
    CHECK(r1.rhs == doctest::Approx(c02 * c02).epsilon(1e-12));
    CHECK(r0.satisfied);
    CHECK(r1.satisfied);
  }
}

TEST_CASE("interior rhs never exceeds the endpoint maximum (linearity)") {
  const DensityMatrix rho = states::random_density(DimProfile({2, 2, 2}), 3, 5150);
  const CheckOptions opts(3);
  const double rhs0 = check_tripartite_mixed(rho, 0.0, opts).rhs;
  const double rhs1 = check_tripartite_mixed(rho, 1.0, opts).rhs;
  for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double rhs = check_tripartite_mixed(rho, x, opts).rhs;
    CHECK(rhs <= std::max(rhs0, rhs1) + 1e-12);
  }
}

TEST_CASE("N=3 corollary reduces exactly to the tripartite checkers") {
  const PureState ex = states::state_223();
  const CheckOptions opts(5);
  const BoundReport a = check_tripartite_pure(ex, 0.3, opts);
  const BoundReport b = check_nparty(ex, {0.3, 0.7}, opts);
  CHECK(*a.lhs == *b.lhs);
  CHECK(a.rhs == b.rhs);
}

TEST_CASE("corollary on the 4-qubit GHZ density has vanishing rhs") {
  const DensityMatrix ghz = DensityMatrix::from_pure(states::ghz(4, 2));
  const CheckOptions opts(8);
  const BoundReport r =
      check_nparty(ghz, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, opts);
  CHECK(*r.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.rhs <= 1e-12);  // every GHZ pair reduction has zero concurrence
  CHECK(r.satisfied);
}

TEST_CASE("corollary on a product of pure factors gives 0 >= 0") {
  const PureState prod = product_state(DimProfile({2, 2, 2, 2}), 12);
  const BoundReport r =
      check_nparty(prod, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, CheckOptions(4));
  CHECK(*r.lhs <= 1e-9);
  CHECK(r.satisfied);
}

TEST_CASE("corollary rejects bad weight vectors") {
  const PureState ex = states::state_223();
  CHECK_THROWS_AS(check_nparty(ex, {0.4, 0.4}, CheckOptions(1)), std::invalid_argument);
  CHECK_THROWS_AS(check_nparty(ex, {1.2, -0.2}, CheckOptions(1)), std::invalid_argument);
  CHECK_THROWS_AS(check_nparty(ex, {1.0}, CheckOptions(1)), std::invalid_argument);
}

TEST_CASE("2|2-cut coefficients, uniform and qubit forms") {
  WeightPoint uniform;
  const auto c = two_two_cut_coefficients(uniform, false);
  for (double v : c) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));

  WeightPoint wq;
  wq.t3_x = {0.4, 0.3, 0.2, 0.1};
  const auto q = two_two_cut_coefficients(wq, true);
  CHECK(q[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(q[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q[3] == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("2|2-cut bound on product and W4 states") {
  const PureState prod = product_state(DimProfile({2, 2, 2, 2}), 31);
  const BoundReport r = two_two_cut_bound(prod, WeightPoint{}, CheckOptions(3));
  CHECK(*r.lhs <= 1e-9);
  CHECK(r.rhs <= 1e-9);
  CHECK(r.satisfied);

  // W4: all pair concurrences are 1/2, every pair term exact, and the qubit
  // coefficient rows always sum to 2 regardless of the leg weights.
  const PureState w4 = states::w(4);
  WeightPoint w;
  w.t3_x = {0.4, 0.3, 0.2, 0.1};
  const BoundReport rw = two_two_cut_bound(w4, w, CheckOptions(3));
  CHECK(rw.rhs == doctest::Approx(2.0 * 0.25).epsilon(1e-9));
  CHECK(rw.satisfied);
  CHECK(rw.note.find("qubit") != std::string::npos);
}

TEST_CASE("2|2-cut bound validates weights and party count") {
  const PureState w4 = states::w(4);
  WeightPoint bad;
  bad.t3_x = {0.5, 0.5, 0.5, -0.5};
  CHECK_THROWS_AS(two_two_cut_bound(w4, bad, CheckOptions(1)), std::invalid_argument);
  CHECK_THROWS_AS(two_two_cut_bound(states::ghz(3, 2), WeightPoint{}, CheckOptions(1)),
                  std::invalid_argument);
}

TEST_CASE("pairwise bound reproduces the family's exact pair concurrence") {
  const WeightPoint ref = family_2223_reference_weights();
  CheckOptions opts(9);
  opts.evaluate_lhs = false;
  for (double t : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const DensityMatrix fam = states::family_2223(t);
    const BoundReport r = four_party_pair_bound(fam, ref, opts);
    const double c = std::max(0.0, (3.0 * t - 1.0) / 2.0);
    CHECK(std::abs(r.rhs - c * c) <= 1e-9);
  }
}

TEST_CASE("pairwise bound vanishes on product and GHZ4 states") {
  CheckOptions opts(11);
  opts.evaluate_lhs = false;
  CounterRng rng(77);
  const DensityMatrix prod =
      DensityMatrix::from_pure(product_state(DimProfile({2, 2, 2, 2}), 13));
  const DensityMatrix ghz = DensityMatrix::from_pure(states::ghz(4, 2));
  for (int i = 0; i < 5; ++i) {
    const WeightPoint w = random_weights(rng);
    CHECK(four_party_pair_bound(prod, w, opts).rhs <= 1e-9);
    CHECK(four_party_pair_bound(ghz, w, opts).rhs <= 1e-12);
  }
}

TEST_CASE("pairwise bound lhs is exact for pure input") {
  const DensityMatrix fam = states::family_2223(1.0);
  const BoundReport r =
      four_party_pair_bound(fam, family_2223_reference_weights(), CheckOptions(2));
  REQUIRE(r.lhs.has_value());
  CHECK(*r.lhs == doctest::Approx(1.75).epsilon(1e-9));  // 7/4 for this vector
  CHECK(*r.margin >= 0.0);
  CHECK(r.satisfied);
}

TEST_CASE("aggregated and derivation routes agree on random weights and states") {
  // The call itself enforces agreement to 1e-9 and throws std::logic_error
  // on any mismatch, so execution without an exception is the assertion.
  CheckOptions opts(21);
  opts.evaluate_lhs = false;
  CounterRng rng(99);
  for (int s = 0; s < 5; ++s) {
    const DensityMatrix rho =
        states::random_density(DimProfile({2, 2, 2, 2}), 1 + s, 860 + s);
    for (int i = 0; i < 20; ++i) {
      const WeightPoint w = random_weights(rng);
      CHECK_NOTHROW(four_party_pair_bound(rho, w, opts));
    }
  }
}

TEST_CASE("vertex optimization dominates interior samples and the reference choice") {
  CheckOptions opts(33);
  opts.evaluate_lhs = false;

  const DensityMatrix fam = states::family_2223(1.0);
  const auto [w4, r4] = optimize_weights(WeightObjective::pair_lower_bound, fam, opts);
  CHECK(r4.rhs >= 1.0 - 1e-9);  // at least the hand-picked bound C^2 = 1

  CounterRng rng(1234);
  for (int i = 0; i < 200; ++i) {
    const WeightPoint w = random_weights(rng);
    const BoundReport r = four_party_pair_bound(fam, w, opts);
    CHECK(r.rhs <= r4.rhs + 1e-9);
  }

  const PureState w4s = states::w(4);
  const auto [w3, r3] = optimize_weights(WeightObjective::two_two_cut, w4s, opts);
  for (int i = 0; i < 200; ++i) {
    WeightPoint w = random_weights(rng);
    const BoundReport r = two_two_cut_bound(w4s, w, opts);
    CHECK(r.rhs <= r3.rhs + 1e-9);
  }
}

TEST_CASE("qubit comparison bound saturates on W and is loose on GHZ") {
  const CheckOptions opts(15);
  const BoundReport w = check_qubit_ckw(DensityMatrix::from_pure(states::w(3)), opts);
  CHECK(*w.lhs == doctest::Approx(8.0 / 9.0).epsilon(1e-9));
  CHECK(w.rhs == doctest::Approx(8.0 / 9.0).epsilon(1e-9));
  CHECK(std::abs(*w.margin) <= 1e-9);
  CHECK(w.satisfied);

  const BoundReport g = check_qubit_ckw(DensityMatrix::from_pure(states::ghz(3, 2)), opts);
  CHECK(*g.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(g.rhs <= 1e-12);

  const DensityMatrix prod =
      DensityMatrix::from_pure(product_state(DimProfile({2, 2, 2}), 44));
  const BoundReport p = check_qubit_ckw(prod, opts);
  CHECK(*p.lhs <= 1e-9);
  CHECK(p.rhs <= 1e-9);

  CHECK_THROWS_AS(
      check_qubit_ckw(DensityMatrix::from_pure(states::state_223()), opts),
      std::invalid_argument);
}

TEST_CASE("dual assistance bound on GHZ, W and product states") {
  const CheckOptions opts(16);
  const BoundReport g = check_dual_coa(states::ghz(3, 2), opts);
  CHECK(*g.lhs == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(g.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.satisfied);

  const BoundReport w = check_dual_coa(states::w(3), opts);
  CHECK(w.rhs == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(*w.lhs >= 8.0 / 9.0 - 1e-6);
  CHECK(w.satisfied);

  const BoundReport p = check_dual_coa(product_state(DimProfile({2, 2, 2}), 9), opts);
  CHECK(p.rhs <= 1e-9);
  CHECK(p.satisfied);

  CHECK_THROWS_AS(check_dual_coa(states::state_223(), opts), std::invalid_argument);
}

TEST_CASE("provenance marks directions and the check kind") {
  const CheckOptions opts(18);
  const BoundReport t1 = check_tripartite_pure(states::state_223(), 0.5, opts);
  bool saw_lower = false;
  for (const auto& t : t1.terms)
    if (t.direction == TermDirection::lower_estimate) saw_lower = true;
  CHECK(saw_lower);

  // all-qubit mixed tripartite: lhs estimated from above, rhs exact
  const DensityMatrix rho = states::random_density(DimProfile({2, 2, 2}), 2, 5510);
  const BoundReport t2 = check_tripartite_mixed(rho, 0.5, opts);
  CHECK(t2.kind == CheckKind::necessary);
  CHECK(t2.tolerance == doctest::Approx(5e-3));
}
