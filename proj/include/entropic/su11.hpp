#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "entropic/entropy.hpp"
#include "entropic/error.hpp"
#include "entropic/half_int.hpp"
#include "entropic/probability.hpp"
#include "entropic/specfun/su11_functions.hpp"

namespace entropic {

/// Terms below this size may end an adaptive truncation.
inline constexpr double kTruncationTermFloor = 1e-14;
/// Length of the non-increasing run required before stopping.
inline constexpr std::size_t kMonotoneRun = 10;
inline constexpr std::size_t kMaxTruncation = 100000;
/// Minimum captured mass for an entropy report on a discrete-series prefix.
inline constexpr double kMinCapturedMass = 1.0 - 1e-6;

/// Finite prefix of an infinite probability sequence, ordered by `enumerate_weights(kind, ...)`.
struct TruncatedDistribution {
  std::vector<double> values;
  double captured_mass = 0.0;
  double tail_bound = 0.0;
  std::size_t truncation = 0;
  SeriesKind kind = SeriesKind::discrete_positive;
};

namespace detail {

inline void require_discrete_column(int k, HalfInt m, SeriesKind kind) {
  if (kind != SeriesKind::discrete_positive && kind != SeriesKind::discrete_negative) {
    throw DomainError("discrete-series distribution needs a discrete series kind");
  }
  if (k < 1) throw DomainError("discrete series needs k >= 1");
  const HalfInt j = HalfInt::from_doubled(-k);
  if (!j.same_class(m)) throw DomainError("m must differ from j = -k/2 by an integer");
  if (kind == SeriesKind::discrete_positive && m < -j) throw DomainError("positive discrete series needs m >= -j");
  if (kind == SeriesKind::discrete_negative && m > j) throw DomainError("negative discrete series needs m <= j");
}

inline double discrete_term(int k, HalfInt m, double t, SeriesKind kind, std::size_t i) {
  const HalfInt mp = weight_at(kind, HalfInt::from_doubled(-k), i);
  return std::norm(bargmann_b({kind, k, mp, m, t}));
}

// Geometric estimate of the discarded mass from the last two terms.
inline double geometric_tail(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double last = v.back();
  const double prev = v[v.size() - 2];
  if (last == 0.0) return 0.0;
  if (!(prev > 0.0) || last >= prev) return last;
  const double r = last / prev;
  return last * r / (1.0 - r);
}

inline bool monotone_tail(const std::vector<double>& v) {
  if (v.size() < kMonotoneRun) return false;
  for (std::size_t i = v.size() - kMonotoneRun + 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) return false;
  }
  return true;
}

inline TruncatedDistribution finish(std::vector<double> values, SeriesKind kind) {
  TruncatedDistribution d;
  d.captured_mass = std::accumulate(values.begin(), values.end(), 0.0);
  d.tail_bound = geometric_tail(values);
  d.truncation = values.size();
  d.values = std::move(values);
  d.kind = kind;
  return d;
}

}  // namespace detail

/// |b^j_{m',m}(t)|^2 over m' in series order, j = -k/2, truncated adaptively:
/// stop once the last term is below 1e-14, the last 10 terms are non-increasing
/// and the captured mass reaches 1 - eps.
inline TruncatedDistribution discrete_series_distribution(int k, HalfInt m, double t, double eps,
                                                          SeriesKind kind = SeriesKind::discrete_positive) {
  detail::require_discrete_column(k, m, kind);
  if (!(eps > 0.0) || eps > 1e-6) throw DomainError("eps must lie in (0, 1e-6]");
  std::vector<double> values;
  double mass = 0.0;
  for (std::size_t i = 0; i < kMaxTruncation; ++i) {
    const double v = detail::discrete_term(k, m, t, kind, i);
    values.push_back(v);
    mass += v;
    const bool past_peak = t == 0.0 ? mass >= 1.0 : detail::monotone_tail(values);
    if (v < kTruncationTermFloor && past_peak && mass >= 1.0 - eps) {
      TruncatedDistribution d = detail::finish(std::move(values), kind);
      const double total = d.captured_mass + d.tail_bound;
      if (total < 1.0 - 1e-6 || total > 1.0 + 1e-8) {
        throw ConvergenceError("discrete-series mass " + std::to_string(total) + " outside [1 - 1e-6, 1 + 1e-8]");
      }
      return d;
    }
  }
  throw ConvergenceError("discrete-series distribution did not converge within " + std::to_string(kMaxTruncation) +
                         " terms");
}

/// Fixed-length prefix; no convergence requirement.
inline TruncatedDistribution discrete_series_prefix(int k, HalfInt m, double t, std::size_t count,
                                                    SeriesKind kind = SeriesKind::discrete_positive) {
  detail::require_discrete_column(k, m, kind);
  if (count == 0) throw DimensionError("prefix length must be positive");
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = detail::discrete_term(k, m, t, kind, i);
  return detail::finish(std::move(values), kind);
}

/// Shannon subadditivity of the renormalized prefix under the parity/pair split.
inline SubadditivityReport su11_subadditivity(const TruncatedDistribution& d) {
  if (d.values.empty()) throw DimensionError("empty truncated distribution");
  if (d.captured_mass < kMinCapturedMass) {
    throw DomainError("captured mass " + std::to_string(d.captured_mass) + " is below 1 - 1e-6");
  }
  return subadditivity_report(interleave_split(ProbabilityVector::normalized(d.values)));
}

/// Report on a prefix whose normalization is not a theorem. Entropies are
/// computed on the renormalized prefix; `raw_mass` is the sum before that.
struct SeriesReport {
  SubadditivityReport report;
  double raw_mass = 0.0;
  std::size_t truncation = 0;
  bool normalization_asserted = false;
};

namespace detail {

inline SeriesReport series_report(const std::vector<double>& values) {
  SeriesReport r;
  r.raw_mass = std::accumulate(values.begin(), values.end(), 0.0);
  r.truncation = values.size();
  r.report = subadditivity_report(interleave_split(ProbabilityVector::normalized(values)));
  return r;
}

}  // namespace detail

/// |c^j_{m',m}(t)|^2 over m' = -j, -j+1, ... (j = -k/2), truncated at `truncation` terms.
inline SeriesReport mixed_series_report(int k, double m, double t, std::size_t truncation) {
  if (truncation == 0) throw DimensionError("truncation must be positive");
  if (k < 1) throw DomainError("mixed series needs k >= 1");
  const HalfInt j = HalfInt::from_doubled(-k);
  std::vector<double> values(truncation);
  for (std::size_t i = 0; i < truncation; ++i) {
    values[i] = std::norm(c_function({k, weight_at(SeriesKind::discrete_positive, j, i), m, t}));
  }
  return detail::series_report(values);
}

/// |l^j_{m',m,sigma}(t)|^2 over the integer or half-integer m' lattice, j = -1/2 + i s.
inline SeriesReport continuous_series_report(double s, double m, int sigma, double t, std::size_t truncation,
                                             SeriesKind lattice = SeriesKind::continuous_integer) {
  if (truncation == 0) throw DimensionError("truncation must be positive");
  if (lattice != SeriesKind::continuous_integer && lattice != SeriesKind::continuous_half_integer) {
    throw DomainError("continuous series needs an integer or half-integer lattice");
  }
  std::vector<double> values(truncation);
  for (std::size_t i = 0; i < truncation; ++i) {
    values[i] = std::norm(l_function({s, weight_at(lattice, HalfInt(0), i), m, sigma, t}));
  }
  return detail::series_report(values);
}

}  // namespace entropic
