#include "member_measure.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "entkit/tensor.hpp"

namespace entkit::detail {

CutMap CutMap::build(const DimProfile& profile, const Partition& cut) {
  cut.require_covers(profile.parties());
  const long da = profile.dim_of(cut.side_a());
  const long db = profile.dim_of(cut.side_b());
  const std::vector<int>& rows = (da <= db) ? cut.side_a() : cut.side_b();
  const std::vector<int>& cols = (da <= db) ? cut.side_b() : cut.side_a();

  CutMap map;
  map.dim_row = std::min(da, db);
  map.dim_col = std::max(da, db);
  const long total = profile.total();
  map.row_of.assign(static_cast<std::size_t>(total), 0);
  map.col_of.assign(static_cast<std::size_t>(total), 0);

  auto accumulate = [&](const std::vector<int>& parties, std::vector<long>& out) {
    long stride = 1;
    for (int pi = static_cast<int>(parties.size()) - 1; pi >= 0; --pi) {
      const int p = parties[static_cast<std::size_t>(pi)];
      const long d = profile.dim(p), gstride = profile.stride(p);
      for (long g = 0; g < total; ++g)
        out[static_cast<std::size_t>(g)] += ((g / gstride) % d) * stride;
      stride *= d;
    }
  };
  accumulate(rows, map.row_of);
  accumulate(cols, map.col_of);
  return map;
}

double CutMap::reduced_purity(const cvec& m, double q, cmat& x_ws, cmat& rho_ws) const {
  for (long g = 0; g < m.size(); ++g)
    x_ws(row_of[static_cast<std::size_t>(g)], col_of[static_cast<std::size_t>(g)]) = m(g);
  rho_ws.noalias() = x_ws * x_ws.adjoint();
  return rho_ws.squaredNorm() / (q * q);
}

double clamp_concurrence(double value, double ceiling) {
  double c = value;
  if (c < 0.0) c = 0.0;
  if (c > ceiling) c = ceiling;
  if (std::abs(c - value) > default_tolerances().clamp_warn)
    std::cerr << "[entkit] concurrence value " << value << " clamped to " << c << "\n";
  return c;
}

void MemberMeasure::init_workspaces() {
  x_ws_.clear();
  rho_ws_.clear();
  for (const CutMap& c : cuts_) {
    x_ws_.emplace_back(c.dim_row, c.dim_col);
    rho_ws_.emplace_back(c.dim_row, c.dim_row);
  }
}

MemberMeasure MemberMeasure::single_cut(const DimProfile& profile, const Partition& cut) {
  MemberMeasure f;
  f.cuts_.push_back(CutMap::build(profile, cut));
  f.combine_ = false;
  f.ceiling_ = concurrence_ceiling(f.cuts_[0].dim_row);
  f.init_workspaces();
  return f;
}

MemberMeasure MemberMeasure::four_party(const DimProfile& profile) {
  if (profile.parties() != 4)
    throw std::invalid_argument("four-party concurrence requires exactly 4 subsystems, got " +
                                std::to_string(profile.parties()));
  MemberMeasure f;
  const std::vector<std::vector<int>> sides = {{0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}};
  double ceil_sq = 0.0;
  for (const auto& a : sides) {
    Partition cut(a, complement_parties(a, 4));
    f.cuts_.push_back(CutMap::build(profile, cut));
    const double ci = concurrence_ceiling(f.cuts_.back().dim_row);
    ceil_sq += 0.25 * ci * ci;
  }
  f.combine_ = true;
  f.ceiling_ = std::sqrt(ceil_sq);
  f.init_workspaces();
  return f;
}

double MemberMeasure::eval(const cvec& m) const {
  const double q = m.squaredNorm();
  if (q < 1e-14) return 0.0;
  if (!combine_) {
    const double p = cuts_[0].reduced_purity(m, q, x_ws_[0], rho_ws_[0]);
    double c2 = 2.0 * (1.0 - p);
    if (c2 < 0.0) c2 = 0.0;
    return q * clamp_concurrence(std::sqrt(c2), ceiling_);
  }
  double sum_c2 = 0.0;
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    const double p = cuts_[i].reduced_purity(m, q, x_ws_[i], rho_ws_[i]);
    const double c2 = 2.0 * (1.0 - p);
    if (c2 > 0.0) sum_c2 += c2;
  }
  return q * clamp_concurrence(std::sqrt(0.25 * sum_c2), ceiling_);
}

double MemberMeasure::eval_unit(const cvec& v) const {
  if (!combine_) {
    const double p = cuts_[0].reduced_purity(v, 1.0, x_ws_[0], rho_ws_[0]);
    double c2 = 2.0 * (1.0 - p);
    if (c2 < 0.0) c2 = 0.0;
    return clamp_concurrence(std::sqrt(c2), ceiling_);
  }
  double sum_c2 = 0.0;
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    const double p = cuts_[i].reduced_purity(v, 1.0, x_ws_[i], rho_ws_[i]);
    const double c2 = 2.0 * (1.0 - p);
    if (c2 > 0.0) sum_c2 += c2;
  }
  return clamp_concurrence(std::sqrt(0.25 * sum_c2), ceiling_);
}

}  // namespace entkit::detail
