#pragma once

// Independent reference implementations used only by tests. These
// deliberately avoid the library's indexing machinery: everything is spelled
// out with digit decoding and nested summation so that agreement with the
// production kernels is a meaningful check.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

inline std::vector<int> decode_digits(long index, const std::vector<int>& dims) {
  std::vector<int> digits(dims.size());
  for (int p = static_cast<int>(dims.size()) - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<int>(index % dims[static_cast<std::size_t>(p)]);
    index /= dims[static_cast<std::size_t>(p)];
  }
  return digits;
}

inline long encode_digits(const std::vector<int>& digits, const std::vector<int>& dims) {
  long index = 0;
  for (std::size_t p = 0; p < dims.size(); ++p)
    index = index * dims[p] + digits[p];
  return index;
}

// Partial trace by double digit decoding and explicit summation.
inline cmat brute_partial_trace(const cmat& m, const std::vector<int>& dims,
                                const std::vector<int>& keep) {
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) kept[static_cast<std::size_t>(k)] = true;

  std::vector<int> keep_dims;
  for (int k : keep) keep_dims.push_back(dims[static_cast<std::size_t>(k)]);
  long dk = 1;
  for (int d : keep_dims) dk *= d;

  cmat out = cmat::Zero(dk, dk);
  const long total = m.rows();
  for (long g1 = 0; g1 < total; ++g1) {
    const std::vector<int> d1 = decode_digits(g1, dims);
    for (long g2 = 0; g2 < total; ++g2) {
      const std::vector<int> d2 = decode_digits(g2, dims);
      bool diagonal_on_traced = true;
      for (std::size_t p = 0; p < dims.size(); ++p) {
        if (!kept[p] && d1[p] != d2[p]) {
          diagonal_on_traced = false;
          break;
        }
      }
      if (!diagonal_on_traced) continue;
      std::vector<int> r, c;
      for (int k : keep) {
        r.push_back(d1[static_cast<std::size_t>(k)]);
        c.push_back(d2[static_cast<std::size_t>(k)]);
      }
      out(encode_digits(r, keep_dims), encode_digits(c, keep_dims)) += m(g1, g2);
    }
  }
  return out;
}

// Kronecker product by direct four-index bookkeeping.
inline cmat naive_kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i1 = 0; i1 < a.rows(); ++i1)
    for (Eigen::Index i2 = 0; i2 < b.rows(); ++i2)
      for (Eigen::Index j1 = 0; j1 < a.cols(); ++j1)
        for (Eigen::Index j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

// Two-qubit assistance closed form: the sum of the descending square roots of
// the eigenvalues of sqrt(rho) rho~ sqrt(rho) (versus the alternating sum for
// the concurrence).
inline double coa_two_qubit(const cmat& rho) {
  cmat yy = cmat::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const cmat rho_tilde = yy * rho.conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<cmat> es(rho);
  cmat sqrt_rho = cmat::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    const double lam = std::max(0.0, es.eigenvalues()(i));
    sqrt_rho += std::sqrt(lam) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  Eigen::SelfAdjointEigenSolver<cmat> em(sqrt_rho * rho_tilde * sqrt_rho);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) sum += std::sqrt(std::max(0.0, em.eigenvalues()(i)));
  return sum;
}

// Concurrence of a pure state across a cut, from scratch: builds the
// reduction by digit bookkeeping and takes sqrt(2(1 - tr rho_A^2)).
inline double brute_cut_concurrence(const cvec& amps, const std::vector<int>& dims,
                                    const std::vector<int>& side_a) {
  const cmat proj = amps * amps.adjoint();
  const cmat rho_a = brute_partial_trace(proj, dims, side_a);
  const double p = (rho_a * rho_a).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

}  // namespace oracles
