#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entkit/measures.hpp"
#include "entkit/rng.hpp"
#include "entkit/tensor.hpp"
#include "member_measure.hpp"

namespace entkit {
namespace {

using detail::MemberMeasure;

// Local refinement of a decomposition isometry by coordinate-wise Givens
// rotations on member pairs. Left-multiplying the mixing isometry by a
// unitary reaches every decomposition with the same member count, and
// two-row Givens rotations (real and imaginary generators; diagonal phases
// are gauge) generate that group, so coordinate descent moves freely on the
// full decomposition manifold. A rotation touches two members only, so each
// probe re-evaluates exactly two member contributions.
class Refiner {
 public:
  Refiner(const cmat& f, MemberMeasure measure, bool maximize, const RoofOptions& opts)
      : f_(f), measure_(std::move(measure)), maximize_(maximize), opts_(opts) {}

  // Returns the refined objective; `mixing` is updated in place.
  double run(cmat& mixing, bool& converged) {
    init(mixing);
    converged = false;
    double step = opts_.step_init;
    const int k = static_cast<int>(mixing.rows());
    for (int sweep = 0; sweep < opts_.max_sweeps; ++sweep) {
      double gain = 0.0;
      for (int a = 0; a < k - 1; ++a) {
        for (int b = a + 1; b < k; ++b) {
          for (double phi : {0.0, M_PI / 2}) {
            gain += descend_coordinate(a, b, phi, step);
          }
        }
      }
      if (gain < opts_.refine_tol) {
        if (step <= opts_.step_min) {
          converged = true;
          break;
        }
        step *= 0.5;
      }
    }
    // Undo any floating-point drift from the accumulated rotations so the
    // returned mixing satisfies the isometry contract exactly enough, and
    // recompute the objective for that exact mixing.
    reorthonormalize();
    mixing = mixing_;
    return objective_;
  }

  double objective() const { return objective_; }

 private:
  void init(const cmat& mixing) {
    mixing_ = mixing;
    psi_.noalias() = f_ * mixing_.transpose();
    contrib_.resize(static_cast<std::size_t>(psi_.cols()));
    objective_ = 0.0;
    for (Eigen::Index j = 0; j < psi_.cols(); ++j) {
      contrib_[static_cast<std::size_t>(j)] = measure_.eval(psi_.col(j));
      objective_ += contrib_[static_cast<std::size_t>(j)];
    }
  }

  // Tries +/- theta on the (a,b) generator, walking while it improves.
  double descend_coordinate(int a, int b, double phi, double step) {
    double gained = 0.0;
    for (double sign : {1.0, -1.0}) {
      int walks = 0;
      while (try_rotation(a, b, phi, sign * step)) {
        gained += last_gain_;
        if (++walks >= 40) break;
      }
      if (walks > 0) break;  // opposite sign cannot also improve locally
    }
    return gained;
  }

  bool try_rotation(int a, int b, double phi, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const std::complex<double> w = std::polar(1.0, phi);
    cand_a_ = c * psi_.col(a) + (s * w) * psi_.col(b);
    cand_b_ = (-s * std::conj(w)) * psi_.col(a) + c * psi_.col(b);
    const double na = measure_.eval(cand_a_);
    const double nb = measure_.eval(cand_b_);
    const double old = contrib_[static_cast<std::size_t>(a)] + contrib_[static_cast<std::size_t>(b)];
    const double delta = (na + nb) - old;
    const double eps = 1e-15 * std::max(1.0, std::abs(objective_));
    const bool improves = maximize_ ? delta > eps : delta < -eps;
    if (!improves) return false;

    psi_.col(a) = cand_a_;
    psi_.col(b) = cand_b_;
    const Eigen::RowVectorXcd row_a = mixing_.row(a);
    mixing_.row(a) = c * row_a + (s * w) * mixing_.row(b);
    mixing_.row(b) = (-s * std::conj(w)) * row_a + c * mixing_.row(b);
    contrib_[static_cast<std::size_t>(a)] = na;
    contrib_[static_cast<std::size_t>(b)] = nb;
    objective_ += delta;
    last_gain_ = std::abs(delta);
    return true;
  }

  void reorthonormalize() {
    const int r = static_cast<int>(mixing_.cols());
    const double dev =
        (mixing_.adjoint() * mixing_ - cmat::Identity(r, r)).cwiseAbs().maxCoeff();
    if (dev > 1e-13) {
      Eigen::HouseholderQR<cmat> qr(mixing_);
      mixing_ = qr.householderQ() * cmat::Identity(mixing_.rows(), r);
    }
    psi_.noalias() = f_ * mixing_.transpose();
    objective_ = 0.0;
    for (Eigen::Index j = 0; j < psi_.cols(); ++j) {
      contrib_[static_cast<std::size_t>(j)] = measure_.eval(psi_.col(j));
      objective_ += contrib_[static_cast<std::size_t>(j)];
    }
  }

  const cmat& f_;
  MemberMeasure measure_;
  bool maximize_;
  const RoofOptions& opts_;

  cmat mixing_, psi_;
  cvec cand_a_, cand_b_;
  std::vector<double> contrib_;
  double objective_ = 0.0;
  double last_gain_ = 0.0;
};

struct RestartOutcome {
  double value = 0.0;
  int index = std::numeric_limits<int>::max();
  cmat mixing;
  bool refine_converged = false;
};

bool better(const RestartOutcome& x, const RestartOutcome& y, bool maximize) {
  if (x.value != y.value) return maximize ? x.value > y.value : x.value < y.value;
  return x.index < y.index;
}

cmat identity_start(int k, int r) {
  cmat m = cmat::Zero(k, r);
  for (int i = 0; i < r; ++i) m(i, i) = 1.0;
  return m;
}

cmat fourier_start(int k, int r) {
  cmat m(k, r);
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (int j = 0; j < k; ++j)
    for (int c = 0; c < r; ++c)
      m(j, c) = std::polar(scale, 2.0 * M_PI * j * c / static_cast<double>(k));
  return m;
}

class RoofEngine {
 public:
  RoofEngine(const DensityMatrix& rho, MemberMeasure measure, bool maximize,
             std::optional<double> analytic_bound, const RoofOptions& opts)
      : rho_(rho), measure_(std::move(measure)), maximize_(maximize),
        analytic_bound_(analytic_bound), opts_(opts) {}

  RoofEstimate run() {
    const Tolerances& tol = default_tolerances();
    const EigResult eig = hermitian_eig(rho_);
    int r = 0;
    while (r < eig.values.size() && eig.values(r) > tol.rank_cutoff) ++r;
    if (r == 0) throw std::invalid_argument("roof: input has numerically zero trace");

    f_.resize(rho_.dim(), r);
    for (int i = 0; i < r; ++i) f_.col(i) = eig.vectors.col(i) * std::sqrt(eig.values(i));

    if (r == 1) return pure_shortcut();

    rank_ = r;
    k_min_ = r;
    const long cap = opts_.k_max > 0 ? opts_.k_max : r + 2;
    k_max_ = static_cast<int>(std::min<long>(static_cast<long>(r) * r, cap));
    if (k_max_ < k_min_) k_max_ = k_min_;
    legs_ = k_max_ - k_min_ + 1;
    restarts_ = opts_.restarts > 0 ? opts_.restarts
                                   : default_restarts(rho_.profile().total());

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts_));

    // Canonical restarts first (identity and Fourier mixings). When one of
    // them already touches the analytic bound there is nothing left to gain
    // and the remaining budget is skipped; the decision depends only on
    // these fixed restarts, so the result stays deterministic.
    const int canonical = std::min(restarts_, 2);
    for (int i = 0; i < canonical; ++i)
      outcomes[static_cast<std::size_t>(i)] = run_restart(i);
    RestartOutcome best = outcomes[0];
    for (int i = 1; i < canonical; ++i)
      if (better(outcomes[static_cast<std::size_t>(i)], best, maximize_))
        best = outcomes[static_cast<std::size_t>(i)];

    int executed = canonical;
    if (!bound_reached(best.value) && restarts_ > canonical) {
      executed = restarts_;
#ifdef _OPENMP
      if (opts_.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = canonical; i < restarts_; ++i)
          outcomes[static_cast<std::size_t>(i)] = run_restart(i);
      } else {
        for (int i = canonical; i < restarts_; ++i)
          outcomes[static_cast<std::size_t>(i)] = run_restart(i);
      }
#else
      for (int i = canonical; i < restarts_; ++i)
        outcomes[static_cast<std::size_t>(i)] = run_restart(i);
#endif
      for (int i = canonical; i < restarts_; ++i)
        if (better(outcomes[static_cast<std::size_t>(i)], best, maximize_))
          best = outcomes[static_cast<std::size_t>(i)];
    }

    return finalize(best, outcomes, executed);
  }

 private:
  RoofEstimate pure_shortcut() {
    PureState member = PureState::normalized(f_.col(0), rho_.profile());
    const double c = measure_.eval_normalized(member);
    std::vector<EnsembleMember> ms;
    ms.push_back({1.0, member});
    RoofEstimate est;
    est.value = c;
    est.direction = maximize_ ? RoofDirection::lower_bound_of_max
                              : RoofDirection::upper_bound_of_min;
    est.witness = Ensemble(std::move(ms), rho_);
    est.restarts_used = 0;
    est.converged = true;
    return est;
  }

  bool bound_reached(double value) const {
    if (!analytic_bound_) return false;
    return maximize_ ? value >= *analytic_bound_ - 1e-9 : value <= *analytic_bound_ + 1e-7;
  }

  RestartOutcome run_restart(int index) const {
    MemberMeasure measure = measure_;  // private workspace

    double best_val = maximize_ ? -std::numeric_limits<double>::infinity()
                                : std::numeric_limits<double>::infinity();
    cmat best_m;
    for (int leg = 0; leg < legs_; ++leg) {
      const int k = k_min_ + leg;
      cmat m;
      if (index == 0) {
        m = identity_start(k, rank_);
      } else if (index == 1) {
        m = fourier_start(k, rank_);
      } else {
        CounterRng rng(opts_.seed,
                       1000003ULL * static_cast<std::uint64_t>(index) +
                           static_cast<std::uint64_t>(leg) + 17);
        m = haar_isometry(k, rank_, rng);
      }
      const cmat psi = f_ * m.transpose();
      double val = 0.0;
      for (Eigen::Index j = 0; j < psi.cols(); ++j) val += measure.eval(psi.col(j));
      if (maximize_ ? val > best_val : val < best_val) {
        best_val = val;
        best_m = m;
      }
    }

    RestartOutcome out;
    out.index = index;
    out.mixing = best_m;
    Refiner refiner(f_, measure, maximize_, opts_);
    out.value = refiner.run(out.mixing, out.refine_converged);
    return out;
  }

  RoofEstimate finalize(const RestartOutcome& best,
                        const std::vector<RestartOutcome>& outcomes, int executed) {
    Ensemble witness = decompose_from_isometry(rho_, best.mixing);
    double value = 0.0;
    for (const auto& m : witness.members())
      value += m.probability * measure_.eval_normalized(m.state);

    // Patience window over the restart sequence: converged means the running
    // best stopped improving well before the budget ran out.
    bool window_ok = true;
    if (executed == restarts_ && restarts_ > 2) {
      const int window = std::max(8, restarts_ / 4);
      double running = outcomes[0].value;
      int last_improved = 0;
      for (int i = 1; i < executed; ++i) {
        const double v = outcomes[static_cast<std::size_t>(i)].value;
        const bool improves = maximize_ ? v > running + 1e-9 : v < running - 1e-9;
        if (improves) {
          running = v;
          last_improved = i;
        }
      }
      window_ok = (executed - last_improved) > window;
    }

    RoofEstimate est;
    est.value = value;
    est.direction = maximize_ ? RoofDirection::lower_bound_of_max
                              : RoofDirection::upper_bound_of_min;
    est.witness = std::move(witness);
    est.restarts_used = executed;
    est.converged = best.refine_converged && window_ok;
    return est;
  }

  const DensityMatrix& rho_;
  MemberMeasure measure_;
  bool maximize_;
  std::optional<double> analytic_bound_;
  const RoofOptions& opts_;

  cmat f_;
  int rank_ = 0, k_min_ = 0, k_max_ = 0, legs_ = 0, restarts_ = 0;
};

}  // namespace

RoofEstimate convex_roof_concurrence(const DensityMatrix& rho, const Partition& cut,
                                     const RoofOptions& opts) {
  auto measure = detail::MemberMeasure::single_cut(rho.profile(), cut);
  RoofEngine engine(rho, std::move(measure), /*maximize=*/false, 0.0, opts);
  return engine.run();
}

RoofEstimate concurrence_assistance(const DensityMatrix& rho, const Partition& cut,
                                    const RoofOptions& opts) {
  auto measure = detail::MemberMeasure::single_cut(rho.profile(), cut);
  const double cap = coa_upper_bound(rho, cut);
  RoofEngine engine(rho, std::move(measure), /*maximize=*/true, cap, opts);
  return engine.run();
}

RoofEstimate convex_roof_four_party(const DensityMatrix& rho, const RoofOptions& opts) {
  auto measure = detail::MemberMeasure::four_party(rho.profile());
  RoofEngine engine(rho, std::move(measure), /*maximize=*/false, 0.0, opts);
  return engine.run();
}

}  // namespace entkit
