#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "entropic/error.hpp"
#include "entropic/half_int.hpp"
#include "entropic/specfun/jacobi.hpp"

namespace entropic {

/// Small dense row-major real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<double>& data() const { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  DenseMatrix& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  /// Max absolute column sum.
  double norm1() const {
    double best = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
      best = std::max(best, s);
    }
    return best;
  }

  double max_abs_diff(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix comparison shape mismatch");
    double best = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) best = std::max(best, std::abs(data_[i] - o.data_[i]));
    return best;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Arguments of a Wigner d-function element d^j_{m',m}(theta).
struct WignerDArgs {
  HalfInt j;
  HalfInt m_prime;
  HalfInt m;
  double theta = 0.0;

  void validate() const {
    if (j.doubled() < 0) throw DomainError("spin j must be nonnegative");
    if (!j.same_class(m_prime) || !j.same_class(m)) {
      throw DomainError("weights must be in the same integer/half-integer class as j = " + j.to_string());
    }
    if (std::abs(m_prime.doubled()) > j.doubled() || std::abs(m.doubled()) > j.doubled()) {
      throw DomainError("weights must satisfy |m'|, |m| <= j");
    }
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  }

  /// m' + m >= 0 and m' - m >= 0.
  bool canonical() const { return m_prime.doubled() + m.doubled() >= 0 && m_prime >= m; }
};

namespace detail {

inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// log sqrt((j+m')!(j-m')! / ((j+m)!(j-m)!)), integers passed as doubles.
inline double log_sqrt_factorial_ratio(const WignerDArgs& a) {
  const double j = a.j.value();
  const double mp = a.m_prime.value();
  const double m = a.m.value();
  return 0.5 * (std::lgamma(j + mp + 1.0) + std::lgamma(j - mp + 1.0) - std::lgamma(j + m + 1.0) -
                std::lgamma(j - m + 1.0));
}

// sqrt(S) P in the canonical sector, with the powers of cos(theta/2) and
// sin(theta/2) kept signed so the result is analytic in theta.
inline double canonical_wigner_d(const WignerDArgs& a) {
  const int n = integer_difference(a.j, a.m_prime);
  const int alpha = integer_difference(a.m_prime, a.m);
  const int beta = (a.m_prime + a.m).to_int();
  const double half = 0.5 * a.theta;
  return std::exp(log_sqrt_factorial_ratio(a)) * ipow(std::cos(half), beta) * ipow(std::sin(half), alpha) *
         jacobi<double>(static_cast<unsigned>(n), alpha, beta, std::cos(a.theta));
}

}  // namespace detail

/// S^{(j)}_{m',m}(theta) = (j+m')!(j-m')!/((j+m)!(j-m)!) cos^{2(m'+m)}(theta/2) sin^{2(m'-m)}(theta/2).
/// Defined on the canonical sector only; map other sectors with the symmetry relations first.
inline double s_factor(const WignerDArgs& args) {
  args.validate();
  if (!args.canonical()) throw DomainError("s_factor is defined for m' + m >= 0 and m' - m >= 0 only");
  const double half = 0.5 * args.theta;
  const int beta = (args.m_prime + args.m).to_int();
  const int alpha = integer_difference(args.m_prime, args.m);
  return std::exp(2.0 * detail::log_sqrt_factorial_ratio(args)) * detail::ipow(std::cos(half), 2 * beta) *
         detail::ipow(std::sin(half), 2 * alpha);
}

/// Wigner d-function d^j_{m',m}(theta), the matrix element of exp(i theta J_y)
/// in the basis ordered by ascending weight.
///
/// The canonical sector (m' + m >= 0, m' - m >= 0) is sqrt(S) P_{j-m'}^{(m'-m, m'+m)}(cos theta);
/// the other three sectors follow from
///   d_{m',m} = d_{-m,-m'},  d_{m',m} = (-1)^{m'-m} d_{m,m'},  d_{m',m} = (-1)^{m'-m} d_{-m',-m}.
inline double wigner_d(const WignerDArgs& args) {
  args.validate();
  const int sum = args.m_prime.doubled() + args.m.doubled();
  const bool ascending = args.m_prime >= args.m;
  const double sign = parity_sign(integer_difference(args.m_prime, args.m));
  if (sum >= 0 && ascending) return detail::canonical_wigner_d(args);
  if (sum <= 0 && ascending) return detail::canonical_wigner_d({args.j, -args.m, -args.m_prime, args.theta});
  if (sum >= 0) return sign * detail::canonical_wigner_d({args.j, args.m, args.m_prime, args.theta});
  return sign * detail::canonical_wigner_d({args.j, -args.m_prime, -args.m, args.theta});
}

/// Full (2j+1) x (2j+1) matrix; row index m', column index m, both from -j to j.
inline DenseMatrix dmatrix(HalfInt j, double theta) {
  if (j.doubled() < 0) throw DomainError("spin j must be nonnegative");
  const std::size_t dim = static_cast<std::size_t>(j.doubled()) + 1;
  DenseMatrix d(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const HalfInt mp = -j + static_cast<int>(r);
      const HalfInt m = -j + static_cast<int>(c);
      d(r, c) = wigner_d({j, mp, m, theta});
    }
  }
  return d;
}

/// Largest 2j accepted by the matrix-exponential oracle.
inline constexpr int kOracleMaxDoubledSpin = 12;

/// exp(theta K) with K = (J_+ - J_-)/2 = i J_y, by scaling and squaring a
/// Taylor series. Independent of the Jacobi route; intended for small j.
inline DenseMatrix wigner_oracle(HalfInt j, double theta) {
  if (j.doubled() < 0) throw DomainError("spin j must be nonnegative");
  if (j.doubled() > kOracleMaxDoubledSpin) {
    throw DomainError("wigner_oracle supports 2j <= " + std::to_string(kOracleMaxDoubledSpin));
  }
  const std::size_t dim = static_cast<std::size_t>(j.doubled()) + 1;
  DenseMatrix a(dim, dim);
  for (std::size_t r = 0; r + 1 < dim; ++r) {
    const double m = -j.value() + static_cast<double>(r);
    const double raise = std::sqrt((j.value() - m) * (j.value() + m + 1.0));
    a(r + 1, r) = 0.5 * raise * theta;
    a(r, r + 1) = -0.5 * raise * theta;
  }
  int squarings = 0;
  const double norm = a.norm1();
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  a *= std::ldexp(1.0, -squarings);

  DenseMatrix result = DenseMatrix::identity(dim);
  DenseMatrix term = DenseMatrix::identity(dim);
  for (int k = 1; k <= 40; ++k) {
    term = term * a;
    term *= 1.0 / k;
    result += term;
    if (term.norm1() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace entropic
