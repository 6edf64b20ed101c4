#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "entropic/su2.hpp"

using namespace entropic;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;
const HalfInt kThreeHalves = HalfInt::from_doubled(3);

std::vector<double> grid(std::size_t n, double lo, double hi) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

}  // namespace

TEST_CASE("column distribution at theta = 0 is a delta") {
  const auto p = column_distribution(HalfInt(2), HalfInt(1), 0.0);
  REQUIRE(p.size() == 5);
  CHECK(p[3] == 1.0);
  CHECK(p[0] == 0.0);
  CHECK_THROWS_AS(column_distribution(HalfInt(1), kThreeHalves, 0.3), DomainError);
  CHECK_THROWS_AS(column_distribution(HalfInt(1), HalfInt(2), 0.3), DomainError);
}

TEST_CASE("closed forms at theta = pi/2") {
  const auto p = closed_form_distribution(kThreeHalves, kPi / 2);
  CHECK_THAT(p[3], WithinAbs(1.0 / 8, 1e-15));
  CHECK_THAT(p[2], WithinAbs(3.0 / 8, 1e-15));
  CHECK_THAT(p[1], WithinAbs(3.0 / 8, 1e-15));
  CHECK_THAT(p[0], WithinAbs(1.0 / 8, 1e-15));
  const auto t = closed_form_distribution(HalfInt(2), kPi / 2);
  CHECK_THAT(t[4], WithinAbs(1.0 / 16, 1e-15));
  CHECK_THAT(t[0], WithinAbs(1.0 / 16, 1e-15));
  CHECK_THAT(t[2], WithinAbs(3.0 / 8, 1e-15));
  CHECK_THROWS_AS(closed_form_distribution(HalfInt(1), 0.3), DomainError);
}

TEST_CASE("closed forms reproduce the d-function column") {
  for (double theta : grid(64, 0.0, 2.0 * kPi)) {
    CHECK(closed_form_check(kThreeHalves, theta) <= 1e-12);
    CHECK(closed_form_check(HalfInt(2), theta) <= 1e-12);
  }
}

TEST_CASE("cubed (cos - 1) variant of p3 is not a probability component") {
  // 3(cos-1)^3(cos+1)/8 and its absolute value both break normalization.
  const double theta = kPi / 3;
  const double c = std::cos(theta);
  const double cubed = 3.0 * std::pow(c - 1.0, 3) * (c + 1.0) / 8.0;
  const auto p = closed_form_distribution(kThreeHalves, theta);
  CHECK(cubed < 0.0);
  const double with_abs = p[0] + std::abs(cubed) + p[2] + p[3];
  CHECK(std::abs(with_abs - 1.0) > 0.05);
  CHECK_THAT(std::accumulate(p.begin(), p.end(), 0.0), WithinAbs(1.0, 1e-15));
}

TEST_CASE("bistochastic matrix from d") {
  for (int two_j = 1; two_j <= 10; ++two_j) {
    for (double theta : grid(16, 0.0, 2.0 * kPi)) {
      const auto m = bistochastic_matrix(HalfInt::from_doubled(two_j), theta);
      CHECK(m.size() == static_cast<std::size_t>(two_j + 1));
    }
  }
}

TEST_CASE("su2 subadditivity examples") {
  CHECK_THAT(su2_subadditivity(kThreeHalves, kThreeHalves, 0.0).slack, WithinAbs(0.0, 1e-15));
  CHECK_THAT(su2_subadditivity(kThreeHalves, kThreeHalves, kPi).slack, WithinAbs(0.0, 1e-9));
  CHECK(su2_subadditivity(kThreeHalves, kThreeHalves, kPi / 2).slack > 0.01);
  CHECK(su2_tsallis_subadditivity(HalfInt(2), HalfInt(2), kPi / 2, QParam(2.0)).slack > 0.0);
  CHECK_THAT(su2_tsallis_subadditivity(HalfInt(2), HalfInt(2), 0.0, QParam(2.0)).slack, WithinAbs(0.0, 1e-15));
}

TEST_CASE("Tsallis report near q = 1 matches Shannon") {
  for (double theta : grid(9, 0.1, 6.0)) {
    const auto s = su2_subadditivity(HalfInt(2), HalfInt(2), theta);
    const auto t = su2_tsallis_subadditivity(HalfInt(2), HalfInt(2), theta, QParam(1.0 + 1e-6));
    CHECK_THAT(t.h_joint, WithinAbs(s.h_joint, 1e-5));
    CHECK_THAT(t.h_first, WithinAbs(s.h_first, 1e-5));
    CHECK_THAT(t.h_second, WithinAbs(s.h_second, 1e-5));
    CHECK_THAT(t.slack, WithinAbs(s.slack, 1e-5));
  }
}

TEST_CASE("theta sweeps: equality only at 0, pi, 2 pi") {
  // Slack leaves the roots like theta^6 (j = 3/2, every root) or theta^8 (j = 2 at pi),
  // so the clear 1e-4 margin starts well past 0.1 there.
  struct Case {
    HalfInt j;
    double margin_ends;
    double margin_pi;
  };
  for (const Case& c : {Case{kThreeHalves, 0.35, 0.35}, Case{HalfInt(2), 0.1, 0.5}}) {
    const auto points = sweep({c.j, c.j, grid(256, 0.0, 2.0 * kPi), std::nullopt});
    REQUIRE(points.size() == 256);
    for (const auto& p : points) {
      CHECK(p.report.slack >= -1e-12);
      const double to_ends = std::min(p.theta, 2.0 * kPi - p.theta);
      if (to_ends > c.margin_ends && std::abs(p.theta - kPi) > c.margin_pi) CHECK(p.report.slack >= 1e-4);
    }
    CHECK(points.front().report.slack <= 1e-9);
    CHECK(points.back().report.slack <= 1e-9);
    CHECK(su2_subadditivity(c.j, c.j, kPi).slack <= 1e-9);
  }
}

TEST_CASE("slack is flat near the roots") {
  // mpmath, 30 digits.
  for (double theta : {0.1, kPi - 0.1, kPi + 0.1, 2.0 * kPi - 0.1}) {
    CHECK_THAT(su2_subadditivity(kThreeHalves, kThreeHalves, theta).slack, WithinRel(9.00268e-8, 1e-5));
  }
  CHECK_THAT(su2_subadditivity(kThreeHalves, kThreeHalves, 0.3).slack, WithinRel(6.19785e-5, 1e-5));
  CHECK_THAT(su2_subadditivity(HalfInt(2), HalfInt(2), kPi + 0.1).slack, WithinRel(4.75638e-10, 1e-4));
  CHECK_THAT(su2_subadditivity(HalfInt(2), HalfInt(2), 0.1).slack, WithinRel(4.16667e-4, 1e-5));
}

TEST_CASE("sweep bookkeeping") {
  const auto one = sweep({HalfInt(1), HalfInt(0), {1.0}, std::nullopt});
  REQUIRE(one.size() == 1);
  CHECK(one[0].theta == 1.0);
  const auto ts = sweep({HalfInt(1), HalfInt(0), {0.5, 0.2}, QParam(3.0)});
  CHECK(ts[0].theta == 0.5);
  CHECK(ts[1].report.kind == EntropyKind::tsallis);
  CHECK_THROWS_AS(sweep({HalfInt(1), HalfInt(0), {}, std::nullopt}), DimensionError);
}

TEST_CASE("property: all columns are probability vectors with nonnegative slack") {
  for (int two_j = 1; two_j <= 10; ++two_j) {
    const HalfInt j = HalfInt::from_doubled(two_j);
    for (HalfInt m = -j; m <= j; m = m + 1) {
      for (double theta : grid(64, 0.0, 2.0 * kPi)) {
        const auto p = column_distribution(j, m, theta);
        CHECK_THAT(p.sum(), WithinAbs(1.0, 1e-10));
        CHECK(su2_subadditivity(j, m, theta).slack >= -1e-12);
      }
    }
  }
}
