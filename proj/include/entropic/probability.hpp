#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entropic/error.hpp"
#include "entropic/half_int.hpp"

namespace entropic {

inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr double kNegativeClamp = 1e-12;

namespace detail {

// Clamps components in [-kNegativeClamp, 0) to zero and checks the unit total.
inline void sanitize_probabilities(std::vector<double>& values, double tolerance, std::string_view what) {
  for (double& v : values) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite component");
    if (v < 0.0) {
      if (v < -kNegativeClamp) {
        throw DomainError(std::string(what) + ": negative component " + std::to_string(v));
      }
      v = 0.0;
    }
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (std::abs(total - 1.0) > tolerance) {
    throw DomainError(std::string(what) + ": components sum to " + std::to_string(total) + ", not 1");
  }
}

}  // namespace detail

/// Finite nonnegative vector summing to one.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> components, double tolerance = kProbabilityTolerance)
      : components_(std::move(components)), tolerance_(tolerance) {
    if (components_.empty()) throw DimensionError("probability vector must not be empty");
    detail::sanitize_probabilities(components_, tolerance_, "probability vector");
  }

  /// Divides by the total first; used for truncated series prefixes.
  static ProbabilityVector normalized(std::span<const double> weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0) || !std::isfinite(total)) throw DomainError("cannot normalize weights with total " + std::to_string(total));
    std::vector<double> out(weights.begin(), weights.end());
    for (double& v : out) v /= total;
    return ProbabilityVector(std::move(out));
  }

  std::span<const double> components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  double operator[](std::size_t i) const { return components_[i]; }
  double tolerance() const { return tolerance_; }
  double sum() const { return std::accumulate(components_.begin(), components_.end(), 0.0); }

  /// Copy with `count` zeros appended.
  ProbabilityVector padded(std::size_t count) const {
    std::vector<double> out = components_;
    out.resize(out.size() + count, 0.0);
    return ProbabilityVector(std::move(out), tolerance_);
  }

 private:
  std::vector<double> components_;
  double tolerance_;
};

/// Nonnegative rank-2 or rank-3 table with unit total, stored row-major.
class JointTable {
 public:
  JointTable(std::vector<std::size_t> dims, std::vector<double> entries) : dims_(std::move(dims)), entries_(std::move(entries)) {
    if (dims_.size() != 2 && dims_.size() != 3) throw DimensionError("joint table must have rank 2 or 3");
    std::size_t n = 1;
    for (auto d : dims_) {
      if (d == 0) throw DimensionError("joint table extents must be positive");
      n *= d;
    }
    if (n != entries_.size()) throw DimensionError("joint table entry count does not match its extents");
    detail::sanitize_probabilities(entries_, kProbabilityTolerance, "joint table");
  }

  std::size_t rank() const { return dims_.size(); }
  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t extent(std::size_t axis) const { return dims_.at(axis); }
  std::span<const double> entries() const { return entries_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * dims_[1] + j]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dims_[1] + j) * dims_[2] + k];
  }

  /// Row-major flattening as a probability vector.
  ProbabilityVector flatten() const { return ProbabilityVector(entries_); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> entries_;
};

/// n x n nonnegative matrix with unit row and column sums.
class BistochasticMatrix {
 public:
  BistochasticMatrix(std::size_t n, std::vector<double> entries, double tolerance = kProbabilityTolerance)
      : n_(n), entries_(std::move(entries)) {
    if (n_ == 0 || entries_.size() != n_ * n_) throw DimensionError("bistochastic matrix must be n x n with n >= 1");
    for (double& v : entries_) {
      if (!std::isfinite(v) || v < -kNegativeClamp) throw DomainError("bistochastic matrix entries must be nonnegative");
      v = std::max(v, 0.0);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (std::size_t k = 0; k < n_; ++k) {
        row += entries_[i * n_ + k];
        col += entries_[k * n_ + i];
      }
      if (std::abs(row - 1.0) > tolerance || std::abs(col - 1.0) > tolerance) {
        throw DomainError("row/column " + std::to_string(i) + " of bistochastic matrix does not sum to 1");
      }
    }
  }

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t k) const { return entries_[i * n_ + k]; }

  /// Fixed second index k: p_i^{(k)} = m_{ik}.
  ProbabilityVector column(std::size_t k) const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = entries_[i * n_ + k];
    return ProbabilityVector(std::move(out));
  }

  ProbabilityVector row(std::size_t i) const {
    return ProbabilityVector(std::vector<double>(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                                 entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)));
  }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

// ---------------------------------------------------------------------------
// Invertible index mappings
// ---------------------------------------------------------------------------

/// Two rows: first ceil(N/2) components, then the rest with one zero of padding when N is odd.
inline JointTable bipartite_split(const ProbabilityVector& p) {
  const std::size_t n = p.size();
  if (n < 2) throw DimensionError("bipartite split needs at least two components");
  const std::size_t cols = (n + 1) / 2;
  std::vector<double> entries(p.components().begin(), p.components().end());
  entries.resize(2 * cols, 0.0);
  return JointTable({2, cols}, std::move(entries));
}

/// Row-major fill of an n1 x n2 table; unused trailing cells are zero.
inline JointTable general_reshape(const ProbabilityVector& p, std::size_t n1, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw DimensionError("reshape extents must be positive");
  if (n1 * n2 < p.size()) throw DimensionError("reshape table has fewer cells than the vector has components");
  std::vector<double> entries(p.components().begin(), p.components().end());
  entries.resize(n1 * n2, 0.0);
  return JointTable({n1, n2}, std::move(entries));
}

/// Row-major fill over (k, j, l).
inline JointTable tripartite_reshape(const ProbabilityVector& p, std::size_t n1, std::size_t n2, std::size_t n3) {
  if (n1 == 0 || n2 == 0 || n3 == 0) throw DimensionError("reshape extents must be positive");
  if (n1 * n2 * n3 < p.size()) throw DimensionError("reshape table has fewer cells than the vector has components");
  std::vector<double> entries(p.components().begin(), p.components().end());
  entries.resize(n1 * n2 * n3, 0.0);
  return JointTable({n1, n2, n3}, std::move(entries));
}

/// ceil(N/2) x 2 table with row k = (p_{2k-1}, p_{2k}). Its row marginal holds
/// the consecutive-pair sums and its column marginal the odd/even index sums.
inline JointTable interleave_split(const ProbabilityVector& p) {
  const std::size_t rows = (p.size() + 1) / 2;
  std::vector<double> entries(p.components().begin(), p.components().end());
  entries.resize(2 * rows, 0.0);
  return JointTable({rows, 2}, std::move(entries));
}

/// First: sum over the row index (a vector over columns). Second: sum over the
/// column index (a vector over rows).
inline std::pair<ProbabilityVector, ProbabilityVector> marginals(const JointTable& t) {
  if (t.rank() != 2) throw DimensionError("marginals of a rank-3 table need an explicit axis selection");
  const std::size_t rows = t.extent(0);
  const std::size_t cols = t.extent(1);
  std::vector<double> over_cols(cols, 0.0);
  std::vector<double> over_rows(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      over_cols[j] += t(i, j);
      over_rows[i] += t(i, j);
    }
  }
  return {ProbabilityVector(std::move(over_cols)), ProbabilityVector(std::move(over_rows))};
}

/// Single-axis marginal of a table of any rank.
inline ProbabilityVector marginal(const JointTable& t, std::size_t axis) {
  if (axis >= t.rank()) throw DimensionError("marginal axis out of range");
  std::vector<double> out(t.extent(axis), 0.0);
  const auto dims = t.dims();
  const auto entries = t.entries();
  for (std::size_t flat = 0; flat < entries.size(); ++flat) {
    std::size_t rest = flat;
    std::size_t index = 0;
    for (std::size_t a = t.rank(); a-- > 0;) {
      const std::size_t coord = rest % dims[a];
      rest /= dims[a];
      if (a == axis) index = coord;
    }
    out[index] += entries[flat];
  }
  return ProbabilityVector(std::move(out));
}

/// Sums a rank-3 table over the axis not in {keep_first, keep_second}.
inline JointTable marginalize(const JointTable& t, std::size_t keep_first, std::size_t keep_second) {
  if (t.rank() != 3) throw DimensionError("pairwise marginalization needs a rank-3 table");
  if (keep_first >= 3 || keep_second >= 3 || keep_first == keep_second) {
    throw DimensionError("pairwise marginalization needs two distinct axes in [0, 3)");
  }
  const auto dims = t.dims();
  const std::size_t n_first = dims[keep_first];
  const std::size_t n_second = dims[keep_second];
  std::vector<double> out(n_first * n_second, 0.0);
  for (std::size_t i = 0; i < dims[0]; ++i) {
    for (std::size_t j = 0; j < dims[1]; ++j) {
      for (std::size_t k = 0; k < dims[2]; ++k) {
        const std::size_t idx[3] = {i, j, k};
        out[idx[keep_first] * n_second + idx[keep_second]] += t(i, j, k);
      }
    }
  }
  return JointTable({n_first, n_second}, std::move(out));
}

// ---------------------------------------------------------------------------
// Weight enumeration for infinite-dimensional series
// ---------------------------------------------------------------------------

enum class SeriesKind { discrete_positive, discrete_negative, continuous_integer, continuous_half_integer };

inline std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::discrete_positive: return "discrete_positive";
    case SeriesKind::discrete_negative: return "discrete_negative";
    case SeriesKind::continuous_integer: return "continuous_integer";
    case SeriesKind::continuous_half_integer: return "continuous_half_integer";
  }
  return "unknown";
}

inline SeriesKind parse_series_kind(std::string_view name) {
  if (name == "discrete_positive") return SeriesKind::discrete_positive;
  if (name == "discrete_negative") return SeriesKind::discrete_negative;
  if (name == "continuous_integer") return SeriesKind::continuous_integer;
  if (name == "continuous_half_integer") return SeriesKind::continuous_half_integer;
  throw DomainError("unknown series kind '" + std::string(name) + "'");
}

/// The i-th weight (0-based) of the ordering for `kind`. `j` is ignored by the continuous kinds.
inline HalfInt weight_at(SeriesKind kind, HalfInt j, std::size_t i) {
  const int n = static_cast<int>(i);
  switch (kind) {
    case SeriesKind::discrete_positive: return -j + n;
    case SeriesKind::discrete_negative: return j - n;
    case SeriesKind::continuous_integer:
      // 0, 1, -1, 2, -2, ...
      return (n % 2 == 1) ? HalfInt((n + 1) / 2) : HalfInt(-(n / 2));
    case SeriesKind::continuous_half_integer:
      // -1/2, 1/2, -3/2, 3/2, ...
      return (n % 2 == 0) ? HalfInt::from_doubled(-(n + 1)) : HalfInt::from_doubled(n);
  }
  throw DomainError("unknown series kind");
}

inline std::vector<HalfInt> enumerate_weights(SeriesKind kind, HalfInt j, std::size_t count) {
  if (count == 0) throw DimensionError("weight enumeration needs count >= 1");
  std::vector<HalfInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(weight_at(kind, j, i));
  return out;
}

}  // namespace entropic
