#pragma once

#include <type_traits>

namespace entropic {

namespace detail {

// Explicit sum  P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}
// with generalized binomials. Valid for every real a, b; used when the
// recurrence denominator vanishes (a + b a negative integer).
template <typename Real>
Real jacobi_by_sum(unsigned n, Real a, Real b, Real x) {
  const auto binom = [](Real top, unsigned k) {
    Real r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (top - Real(i)) / Real(i + 1);
    return r;
  };
  const Real lo = (x - 1) / 2;
  const Real hi = (x + 1) / 2;
  Real sum = 0;
  for (unsigned s = 0; s <= n; ++s) {
    Real term = binom(Real(n) + a, n - s) * binom(Real(n) + b, s);
    for (unsigned i = 0; i < s; ++i) term *= lo;
    for (unsigned i = s; i < n; ++i) term *= hi;
    sum += term;
  }
  return sum;
}

}  // namespace detail

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence in n.
template <typename Real>
Real jacobi(unsigned n, Real a, Real b, Real x) {
  static_assert(std::is_floating_point_v<Real>, "jacobi needs a floating-point type");
  if (n == 0) return Real(1);
  Real y0 = 1;
  Real y1 = (a + 1) + (a + b + 2) * (x - 1) / 2;
  for (unsigned k = 2; k <= n; ++k) {
    const Real kk = Real(k);
    const Real s = 2 * kk + a + b;
    const Real denom = 2 * kk * (kk + a + b) * (s - 2);
    if (denom == Real(0)) return detail::jacobi_by_sum(n, a, b, x);
    const Real c1 = (s - 1) * (s * (s - 2) * x + a * a - b * b);
    const Real c0 = -2 * (kk + a - 1) * (kk + b - 1) * s;
    const Real yk = (c1 * y1 + c0 * y0) / denom;
    y0 = y1;
    y1 = yk;
  }
  return y1;
}

}  // namespace entropic
