#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "entropic/error.hpp"

namespace entropic {

using Complex = std::complex<double>;

namespace detail {

// Lanczos approximation, g = 7, nine coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    x += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace detail

/// log Gamma(z) on the branch continuous from the positive real axis, with the
/// cut along the negative real axis.
///
/// Re z >= 0.5 uses Lanczos directly. Otherwise the reflection formula gives the
/// value modulo 2 pi i, and the imaginary part is pinned by the argument sum of
/// log Gamma(z) = log Gamma(z + n) - sum_{k<n} log(z + k).
inline Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("log_gamma of a non-finite argument");
  if (detail::is_nonpositive_integer(z)) throw PoleError("log_gamma pole at a nonpositive integer");
  if (z.real() >= 0.5) return detail::lanczos_log_gamma(z);

  constexpr double pi = std::numbers::pi;
  const Complex reflected = std::log(pi) - std::log(std::sin(pi * z)) - detail::lanczos_log_gamma(1.0 - z);

  const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  double arg_sum = 0.0;
  for (int k = 0; k < shift; ++k) arg_sum += std::arg(z + static_cast<double>(k));
  const double target = detail::lanczos_log_gamma(z + static_cast<double>(shift)).imag() - arg_sum;
  const double turns = std::round((target - reflected.imag()) / (2.0 * pi));
  return {reflected.real(), reflected.imag() + 2.0 * pi * turns};
}

inline double log_gamma(double x) {
  const Complex v = log_gamma(Complex(x, 0.0));
  return v.real();
}

/// True where 1/Gamma(z) vanishes.
inline bool reciprocal_gamma_vanishes(Complex z) { return detail::is_nonpositive_integer(z); }

}  // namespace entropic
