#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "entropic/error.hpp"
#include "entropic/probability.hpp"

namespace entropic {

/// Slack below -kSlackTolerance counts as a violated inequality.
inline constexpr double kSlackTolerance = 1e-12;

/// Deformation parameter of the Tsallis and Renyi entropies: q > 0, q != 1.
class QParam {
 public:
  explicit QParam(double q) : q_(q) {
    if (!std::isfinite(q) || q <= 0.0) throw DomainError("entropy parameter q must be positive");
    if (q == 1.0) throw DomainError("q = 1 is reserved for the Shannon entropy");
  }
  double value() const { return q_; }

 private:
  double q_;
};

enum class EntropyKind { shannon, tsallis, renyi };

inline std::string_view to_string(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::shannon: return "shannon";
    case EntropyKind::tsallis: return "tsallis";
    case EntropyKind::renyi: return "renyi";
  }
  return "unknown";
}

/// Joint and marginal entropies of a bipartite table, in nats.
///
/// `h_first` belongs to the marginal over columns and `h_second` to the
/// marginal over rows (the order returned by `marginals`). `slack` is always
/// h_first + h_second - h_joint exactly as computed. `asserted` tells whether
/// slack >= -kSlackTolerance is a mathematical guarantee for this kind (true
/// for Shannon and for Tsallis with q > 1).
struct SubadditivityReport {
  EntropyKind kind = EntropyKind::shannon;
  double q = 1.0;
  double h_joint = 0.0;
  double h_first = 0.0;
  double h_second = 0.0;
  double slack = 0.0;
  bool asserted = true;
  /// Tsallis only: (sum p1^q + sum p2^q - 1) - sum p12^q. Nonpositive when q > 1.
  std::optional<double> power_sum_gap;

  double lhs() const { return h_first + h_second; }
  bool violated(double tolerance = kSlackTolerance) const { return asserted && slack < -tolerance; }
};

namespace detail {

inline double shannon_sum(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

// sum_i (p_i^q - p_i), evaluated as p (p^{q-1} - 1) to keep precision near q = 1.
inline double power_sum_minus_total(std::span<const double> p, double q) {
  double acc = 0.0;
  for (double v : p) {
    if (v > 0.0) acc += v * std::expm1((q - 1.0) * std::log(v));
  }
  return acc;
}

inline double power_sum(std::span<const double> p, double q) {
  double acc = 0.0;
  for (double v : p) {
    if (v > 0.0) acc += std::pow(v, q);
  }
  return acc;
}

inline double tsallis_sum(std::span<const double> p, double q) { return power_sum_minus_total(p, q) / (1.0 - q); }

inline double renyi_sum(std::span<const double> p, double q) {
  return std::log1p(power_sum_minus_total(p, q)) / (1.0 - q);
}

inline void require_rank2(const JointTable& t) {
  if (t.rank() != 2) throw DimensionError("subadditivity reports need a rank-2 table; marginalize a rank-3 table first");
}

}  // namespace detail

/// H = -sum p ln p with 0 ln 0 = 0.
inline double shannon(const ProbabilityVector& p) { return detail::shannon_sum(p.components()); }

inline double joint_shannon(const JointTable& t) { return detail::shannon_sum(t.entries()); }

/// S_q = (sum p^q - 1) / (1 - q).
inline double tsallis(const ProbabilityVector& p, QParam q) { return detail::tsallis_sum(p.components(), q.value()); }

/// R_q = ln(sum p^q) / (1 - q).
inline double renyi(const ProbabilityVector& p, QParam q) { return detail::renyi_sum(p.components(), q.value()); }

inline SubadditivityReport subadditivity_report(const JointTable& t) {
  detail::require_rank2(t);
  const auto [first, second] = marginals(t);
  SubadditivityReport r;
  r.kind = EntropyKind::shannon;
  r.h_joint = joint_shannon(t);
  r.h_first = shannon(first);
  r.h_second = shannon(second);
  r.slack = r.h_first + r.h_second - r.h_joint;
  r.asserted = true;
  return r;
}

/// Tsallis analog; the nonnegative-slack contract applies only for q > 1.
inline SubadditivityReport tsallis_subadditivity_report(const JointTable& t, QParam q) {
  detail::require_rank2(t);
  const auto [first, second] = marginals(t);
  const double qv = q.value();
  SubadditivityReport r;
  r.kind = EntropyKind::tsallis;
  r.q = qv;
  r.h_joint = detail::tsallis_sum(t.entries(), qv);
  r.h_first = detail::tsallis_sum(first.components(), qv);
  r.h_second = detail::tsallis_sum(second.components(), qv);
  r.slack = r.h_first + r.h_second - r.h_joint;
  r.asserted = qv > 1.0;
  r.power_sum_gap = detail::power_sum(first.components(), qv) + detail::power_sum(second.components(), qv) - 1.0 -
                    detail::power_sum(t.entries(), qv);
  return r;
}

/// Renyi analog. Renyi entropies are not subadditive in general: report only.
inline SubadditivityReport renyi_subadditivity_report(const JointTable& t, QParam q) {
  detail::require_rank2(t);
  const auto [first, second] = marginals(t);
  const double qv = q.value();
  SubadditivityReport r;
  r.kind = EntropyKind::renyi;
  r.q = qv;
  r.h_joint = detail::renyi_sum(t.entries(), qv);
  r.h_first = detail::renyi_sum(first.components(), qv);
  r.h_second = detail::renyi_sum(second.components(), qv);
  r.slack = r.h_first + r.h_second - r.h_joint;
  r.asserted = false;
  return r;
}

}  // namespace entropic
