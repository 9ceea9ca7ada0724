#include "entkit/rng.hpp"

#include <cmath>

namespace entkit {

double CounterRng::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 is kept away from zero so the log stays finite.
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_ = radius * std::sin(angle);
  have_cached_ = true;
  return radius * std::cos(angle);
}

Eigen::MatrixXcd haar_isometry(int k, int r, CounterRng& rng) {
  Eigen::MatrixXcd g(k, r);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = rng.complex_gaussian();

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(k, r);
  // Fix the gauge so the factorization has a positive R diagonal; this is
  // what makes QR of a Ginibre matrix exactly Haar.
  const auto& qrm = qr.matrixQR();
  for (int j = 0; j < r; ++j) {
    const std::complex<double> d = qrm(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

Eigen::VectorXcd haar_vector(int n, CounterRng& rng) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
  v.normalize();
  return v;
}

}  // namespace entkit
