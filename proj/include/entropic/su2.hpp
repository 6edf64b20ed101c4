#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "entropic/entropy.hpp"
#include "entropic/error.hpp"
#include "entropic/half_int.hpp"
#include "entropic/probability.hpp"
#include "entropic/specfun/wigner.hpp"

namespace entropic {

namespace detail {

inline void validate_column(HalfInt j, HalfInt m) {
  if (j.doubled() < 0) throw DomainError("spin j must be nonnegative");
  if (!j.same_class(m) || std::abs(m.doubled()) > j.doubled()) {
    throw DomainError("column index m = " + m.to_string() + " is not a weight of j = " + j.to_string());
  }
}

}  // namespace detail

/// |d^j_{m',m}(theta)|^2 as an n x n bistochastic matrix (rows m', columns m, ascending).
inline BistochasticMatrix bistochastic_matrix(HalfInt j, double theta) {
  const DenseMatrix d = dmatrix(j, theta);
  std::vector<double> squared(d.data().size());
  std::transform(d.data().begin(), d.data().end(), squared.begin(), [](double v) { return v * v; });
  return BistochasticMatrix(d.rows(), std::move(squared));
}

/// p_{m'} = |d^j_{m',m}(theta)|^2 for m' = -j, ..., j.
inline ProbabilityVector column_distribution(HalfInt j, HalfInt m, double theta) {
  detail::validate_column(j, m);
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(j.doubled()) + 1);
  for (HalfInt mp = -j; mp <= j; mp = mp + 1) {
    const double d = wigner_d({j, mp, m, theta});
    p.push_back(d * d);
  }
  return ProbabilityVector(std::move(p));
}

/// Shannon subadditivity of the column distribution under the two-row split.
inline SubadditivityReport su2_subadditivity(HalfInt j, HalfInt m, double theta) {
  return subadditivity_report(bipartite_split(column_distribution(j, m, theta)));
}

inline SubadditivityReport su2_tsallis_subadditivity(HalfInt j, HalfInt m, double theta, QParam q) {
  return tsallis_subadditivity_report(bipartite_split(column_distribution(j, m, theta)), q);
}

/// Hand-derived closed forms of the m = j column for j = 3/2 and j = 2, ordered
/// by ascending m'.
///
/// j = 3/2: p1 = (cos+1)^3/8, p2 = 3 sin^2(theta/2)(sin^2(theta/2)-1)^2,
///          p3 = 3(1-cos)^2(1+cos)/8, p4 = -(cos-1)^3/8, for m' = 3/2, 1/2, -1/2, -3/2.
/// j = 2:   t1 = (cos+1)^4/16, t2 = 4cos^6(theta/2)(1-cos^2(theta/2)), t3 = 3 sin^4(theta)/8,
///          t4 = 4 sin^6(theta/2)(1-sin^2(theta/2)), t5 = (cos-1)^4/16, for m' = 2, ..., -2.
inline std::vector<double> closed_form_distribution(HalfInt j, double theta) {
  const double c = std::cos(theta);
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  if (j == HalfInt::from_doubled(3)) {
    const double s2 = sh * sh;
    const double p1 = std::pow(c + 1.0, 3) / 8.0;
    const double p2 = 3.0 * s2 * std::pow(s2 - 1.0, 2);
    // Not 3(cos-1)^3(cos+1)/8: that one is negative and does not sum to one.
    const double p3 = 3.0 * std::pow(1.0 - c, 2) * (1.0 + c) / 8.0;
    const double p4 = -std::pow(c - 1.0, 3) / 8.0;
    return {p4, p3, p2, p1};
  }
  if (j == HalfInt(2)) {
    const double c2 = ch * ch;
    const double s2 = sh * sh;
    const double t1 = std::pow(c + 1.0, 4) / 16.0;
    const double t2 = 4.0 * std::pow(ch, 6) * (1.0 - c2);
    const double t3 = 3.0 * std::pow(std::sin(theta), 4) / 8.0;
    const double t4 = 4.0 * std::pow(sh, 6) * (1.0 - s2);
    const double t5 = std::pow(c - 1.0, 4) / 16.0;
    return {t5, t4, t3, t2, t1};
  }
  throw DomainError("closed forms exist for j = 3/2 and j = 2 only");
}

/// Max |column_distribution(j, j, theta) - closed form| over m'.
inline double closed_form_check(HalfInt j, double theta) {
  const std::vector<double> closed = closed_form_distribution(j, theta);
  const ProbabilityVector p = column_distribution(j, j, theta);
  double worst = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) worst = std::max(worst, std::abs(closed[i] - p[i]));
  return worst;
}

/// A theta sweep of one column; Tsallis reports when q is set, Shannon otherwise.
struct Su2Sweep {
  HalfInt j;
  HalfInt m;
  std::vector<double> theta_grid;
  std::optional<QParam> q;
};

struct SweepPoint {
  double theta;
  SubadditivityReport report;
};

inline std::vector<SweepPoint> sweep(const Su2Sweep& s) {
  detail::validate_column(s.j, s.m);
  if (s.theta_grid.empty()) throw DimensionError("sweep grid must not be empty");
  std::vector<SweepPoint> out;
  out.reserve(s.theta_grid.size());
  for (double theta : s.theta_grid) {
    out.push_back({theta, s.q ? su2_tsallis_subadditivity(s.j, s.m, theta, *s.q) : su2_subadditivity(s.j, s.m, theta)});
  }
  return out;
}

}  // namespace entropic
