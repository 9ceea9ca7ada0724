#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace entkit {

// Counter-based pseudo-random generator built on the SplitMix64 mixer.
// The n-th output is a pure function of (seed, n), which makes streams
// cheap to split and makes every sampled object reproducible across
// platforms from the seed alone. Gaussian variates use Box-Muller on the
// generator's own uniforms; std::normal_distribution is deliberately not
// used because its output sequence is implementation-defined.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  // Derives an independent stream: stream i of a given seed never overlaps
  // the base sequence or other streams in practice (distinct mixed inputs).
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; one cached value per pair.
  double gaussian();

  std::complex<double> complex_gaussian() { return {gaussian(), gaussian()}; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// Haar-distributed k x r isometry (k >= r): QR of a complex Gaussian matrix
// with the R-diagonal phase fix, so the distribution is exactly invariant.
Eigen::MatrixXcd haar_isometry(int k, int r, CounterRng& rng);

inline Eigen::MatrixXcd haar_unitary(int n, CounterRng& rng) {
  return haar_isometry(n, n, rng);
}

// Normalized Haar-uniform state vector of dimension n.
Eigen::VectorXcd haar_vector(int n, CounterRng& rng);

}  // namespace entkit
