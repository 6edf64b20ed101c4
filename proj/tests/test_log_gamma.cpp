#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "entropic/specfun/log_gamma.hpp"
#include "fixtures/reference_values.hpp"

using entropic::Complex;
using entropic::log_gamma;
using Catch::Matchers::WithinAbs;

namespace {

bool close(Complex got, fixtures::ComplexRef want, double tol) {
  return std::abs(got - Complex(want.re, want.im)) <= tol * std::max(1.0, std::abs(Complex(want.re, want.im)));
}

}  // namespace

TEST_CASE("log_gamma trivial points") {
  CHECK_THAT(std::abs(log_gamma(Complex(1.0, 0.0))), WithinAbs(0.0, 1e-14));
  CHECK_THAT(std::abs(log_gamma(Complex(2.0, 0.0))), WithinAbs(0.0, 1e-14));
  CHECK_THAT(log_gamma(Complex(0.5, 0.0)).real(), WithinAbs(0.5 * std::log(std::numbers::pi), 1e-14));
  CHECK_THAT(log_gamma(10.0), WithinAbs(std::log(362880.0), 1e-12));
}

TEST_CASE("log_gamma matches the mpmath fixtures") {
  CHECK(close(log_gamma(Complex(3.0, 4.0)), fixtures::kLogGamma3p4i, 1e-13));
  CHECK(close(log_gamma(Complex(-2.5, 0.5)), fixtures::kLogGammaM2p5p05i, 1e-13));
  CHECK(close(log_gamma(Complex(0.25, -7.0)), fixtures::kLogGamma025m7i, 1e-13));
}

TEST_CASE("log_gamma poles") {
  CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), entropic::PoleError);
  CHECK_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), entropic::PoleError);
  CHECK(entropic::reciprocal_gamma_vanishes(Complex(-4.0, 0.0)));
  CHECK_FALSE(entropic::reciprocal_gamma_vanishes(Complex(-4.0, 1e-3)));
}

TEST_CASE("property: real log_gamma agrees with std::lgamma on [0.5, 20]") {
  for (int i = 0; i <= 390; ++i) {
    const double x = 0.5 + 0.05 * i;
    const double ref = std::lgamma(x);
    CHECK_THAT(log_gamma(x), WithinAbs(ref, 1e-13 * std::max(1.0, std::abs(ref))));
  }
}

TEST_CASE("property: recurrence log Gamma(z+1) = log Gamma(z) + log z modulo 2 pi i") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> re(-8.0, 15.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Complex z(re(rng), im(rng));
    const Complex diff = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    const double turns = diff.imag() / (2.0 * std::numbers::pi);
    CHECK_THAT(diff.real(), WithinAbs(0.0, 1e-11 * std::max(1.0, std::abs(log_gamma(z)))));
    CHECK_THAT(turns - std::round(turns), WithinAbs(0.0, 1e-11));
  }
}

TEST_CASE("property: conjugate symmetry") {
  for (double x : {-3.7, -0.2, 0.7, 4.0}) {
    for (double y : {0.3, 2.0, 9.0}) {
      const Complex a = log_gamma(Complex(x, y));
      const Complex b = log_gamma(Complex(x, -y));
      CHECK_THAT(std::abs(a - std::conj(b)), WithinAbs(0.0, 1e-12));
    }
  }
}
