#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include "entropic/error.hpp"
#include "entropic/specfun/log_gamma.hpp"

namespace entropic {

/// Largest |z| accepted for a non-terminating series.
inline constexpr double kHyp2f1RadiusLimit = 0.95;

struct Hyp2f1Options {
  /// Stop once |term| < tolerance * |sum| for three consecutive terms.
  double tolerance = 1e-16;
  std::size_t max_terms = 1'000'000;
};

namespace detail {

inline std::optional<long long> nonpositive_integer_order(Complex v) {
  if (!is_nonpositive_integer(v)) return std::nullopt;
  return static_cast<long long>(-v.real());
}

}  // namespace detail

/// Gauss hypergeometric function 2F1(a, b; c; z) by its power series.
///
/// Accepts |z| <= 0.95, or any z when a or b is a nonpositive integer (the
/// series is then a polynomial). Throws PoleError if c + n = 0 is reached
/// before the series terminates.
inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z, Hyp2f1Options options = {}) {
  for (Complex v : {a, b, c, z}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("hyp2f1: non-finite argument");
  }
  const auto order_a = detail::nonpositive_integer_order(a);
  const auto order_b = detail::nonpositive_integer_order(b);
  const bool terminating = order_a.has_value() || order_b.has_value();
  if (z == Complex(0.0, 0.0)) return 1.0;
  if (!terminating && std::abs(z) > kHyp2f1RadiusLimit) {
    throw DomainError("hyp2f1: |z| = " + std::to_string(std::abs(z)) + " outside the series convergence domain");
  }

  // Terms can be tiny while a parameter + n is still left of zero and grow for a
  // long stretch afterwards (c near a negative integer). A small term only counts
  // once every real part is past zero and the term ratio has dropped below one.
  const double settle = std::max({0.0, -a.real(), -b.real(), -c.real()});
  Complex sum = 1.0;
  Complex term = 1.0;
  int small_run = 0;
  for (std::size_t n = 0; n < options.max_terms; ++n) {
    const double nn = static_cast<double>(n);
    const Complex an = a + nn;
    const Complex bn = b + nn;
    if (an == Complex(0.0, 0.0) || bn == Complex(0.0, 0.0)) return sum;
    const Complex cn = c + nn;
    if (cn == Complex(0.0, 0.0)) throw PoleError("hyp2f1: c is a nonpositive integer reached before termination");
    const Complex ratio = an * bn / (cn * (nn + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) throw ConvergenceError("hyp2f1: partial sum overflowed");
    const double r = std::abs(ratio);
    if (nn + 1.0 >= settle && r < 1.0 && std::abs(term) / (1.0 - r) < options.tolerance * std::abs(sum)) {
      if (++small_run >= 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge within " + std::to_string(options.max_terms) + " terms");
}

}  // namespace entropic

namespace entropic {

/// 2F1(a, b; c; z) / Gamma(c), finite at c = -N via
///   (a)_{N+1} (b)_{N+1} z^{N+1} / (N+1)! * 2F1(a+N+1, b+N+1; N+2; z).
inline Complex hyp2f1_regularized(Complex a, Complex b, Complex c, Complex z, Hyp2f1Options options = {}) {
  if (const auto order = detail::nonpositive_integer_order(c)) {
    const long long n = *order;
    Complex scale = 1.0;
    for (long long i = 0; i <= n; ++i) {
      const double ii = static_cast<double>(i);
      scale *= (a + ii) * (b + ii) * z / (ii + 1.0);
    }
    if (scale == Complex(0.0, 0.0)) return 0.0;
    const double shift = static_cast<double>(n + 1);
    return scale * hyp2f1(a + shift, b + shift, shift + 1.0, z, options);
  }
  return hyp2f1(a, b, c, z, options) * std::exp(-log_gamma(c));
}

}  // namespace entropic
