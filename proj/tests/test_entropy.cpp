#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "entropic/entropy.hpp"
#include "support/random_tables.hpp"

using namespace entropic;
using Catch::Matchers::WithinAbs;

TEST_CASE("Shannon entropy hand values") {
  CHECK(shannon(ProbabilityVector({1.0, 0.0, 0.0})) == 0.0);
  CHECK_THAT(shannon(ProbabilityVector({0.25, 0.25, 0.25, 0.25})), WithinAbs(std::log(4.0), 1e-15));
  CHECK_THAT(shannon(ProbabilityVector({0.5, 0.25, 0.25})), WithinAbs(1.5 * std::log(2.0), 1e-15));
  const double h = -(0.4 * std::log(0.4) + 0.1 * std::log(0.1) + 0.3 * std::log(0.3) + 0.2 * std::log(0.2));
  CHECK_THAT(joint_shannon(JointTable({2, 2}, {0.4, 0.1, 0.3, 0.2})), WithinAbs(h, 1e-15));
}

TEST_CASE("Tsallis and Renyi hand values") {
  const ProbabilityVector uniform2({0.5, 0.5});
  CHECK_THAT(tsallis(uniform2, QParam(2.0)), WithinAbs(0.5, 1e-15));
  CHECK(tsallis(ProbabilityVector({1.0, 0.0}), QParam(3.0)) == 0.0);
  CHECK_THAT(renyi(ProbabilityVector({0.2, 0.2, 0.2, 0.2, 0.2}), QParam(0.7)), WithinAbs(std::log(5.0), 1e-14));
  CHECK_THAT(renyi(ProbabilityVector({0.5, 0.25, 0.25}), QParam(2.0)), WithinAbs(std::log(1.0 / 0.375), 1e-15));
  CHECK(renyi(ProbabilityVector({0.0, 1.0}), QParam(2.0)) == 0.0);
}

TEST_CASE("QParam rejects q <= 0 and q == 1") {
  CHECK_THROWS_AS(QParam(1.0), DomainError);
  CHECK_THROWS_AS(QParam(0.0), DomainError);
  CHECK_THROWS_AS(QParam(-2.0), DomainError);
  CHECK_NOTHROW(QParam(0.5));
}

TEST_CASE("subadditivity report hand cases") {
  const auto correlated = subadditivity_report(JointTable({2, 2}, {0.5, 0.0, 0.0, 0.5}));
  CHECK_THAT(correlated.h_joint, WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(correlated.h_first, WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(correlated.slack, WithinAbs(std::log(2.0), 1e-15));
  CHECK(correlated.slack == correlated.h_first + correlated.h_second - correlated.h_joint);

  const auto delta = subadditivity_report(JointTable({2, 2}, {0.0, 1.0, 0.0, 0.0}));
  CHECK(delta.h_joint == 0.0);
  CHECK(delta.slack == 0.0);

  CHECK_THROWS_AS(subadditivity_report(JointTable({2, 1, 2}, {0.25, 0.25, 0.25, 0.25})), DimensionError);
}

TEST_CASE("Tsallis subadditivity hand cases") {
  const auto uniform = tsallis_subadditivity_report(JointTable({2, 2}, {0.25, 0.25, 0.25, 0.25}), QParam(2.0));
  CHECK_THAT(uniform.h_first, WithinAbs(0.5, 1e-15));
  CHECK_THAT(uniform.h_joint, WithinAbs(0.75, 1e-15));
  CHECK_THAT(uniform.slack, WithinAbs(0.25, 1e-15));
  CHECK(uniform.asserted);
  // The power-sum form with the inequality reversed would need 0 >= 0.25.
  REQUIRE(uniform.power_sum_gap.has_value());
  CHECK_THAT(*uniform.power_sum_gap, WithinAbs(-0.25, 1e-15));

  const auto diag = tsallis_subadditivity_report(JointTable({2, 2}, {0.5, 0.0, 0.0, 0.5}), QParam(2.0));
  CHECK_THAT(diag.slack, WithinAbs(0.5, 1e-15));

  const auto low_q = tsallis_subadditivity_report(JointTable({2, 2}, {0.5, 0.0, 0.0, 0.5}), QParam(0.5));
  CHECK_FALSE(low_q.asserted);
  CHECK_FALSE(renyi_subadditivity_report(JointTable({2, 2}, {0.25, 0.25, 0.25, 0.25}), QParam(2.0)).asserted);
}

TEST_CASE("Tsallis pseudo-additivity on product tables") {
  std::mt19937_64 rng(11);
  for (double q : {0.5, 1.5, 2.0, 3.0}) {
    const auto t = testsupport::random_product_table(rng, 3, 4);
    const auto r = tsallis_subadditivity_report(t, QParam(q));
    CHECK_THAT(r.slack, WithinAbs((q - 1.0) * r.h_first * r.h_second, 1e-13));
  }
}

TEST_CASE("property: Shannon slack nonnegative, zero exactly on product tables") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto rows = testsupport::random_extent(rng, 1, 6);
    const auto cols = testsupport::random_extent(rng, 1, 6);
    const bool product = trial % 2 == 0;
    const auto t = product ? testsupport::random_product_table(rng, rows, cols) : testsupport::random_table(rng, rows, cols);
    const auto r = subadditivity_report(t);
    CHECK(r.slack >= -1e-12);
    CHECK(r.h_joint >= -1e-12);
    const bool near_product = testsupport::product_distance(t) < 1e-8;
    CHECK((std::abs(r.slack) < 1e-12) == near_product);
  }
}

TEST_CASE("property: Tsallis slack nonnegative for q > 1") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto t = testsupport::random_table(rng, testsupport::random_extent(rng, 1, 6), testsupport::random_extent(rng, 1, 6));
    for (double q : {1.5, 2.0, 3.0}) CHECK(tsallis_subadditivity_report(t, QParam(q)).slack >= -1e-12);
  }
}

TEST_CASE("property: q -> 1 limits match Shannon") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testsupport::random_vector(rng, testsupport::random_extent(rng, 1, 20), 0.1);
    const double h = shannon(p);
    for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
      CHECK_THAT(tsallis(p, QParam(q)), WithinAbs(h, 1e-5));
      CHECK_THAT(renyi(p, QParam(q)), WithinAbs(h, 1e-5));
    }
  }
}

TEST_CASE("property: permutation and zero-padding invariance") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = testsupport::random_vector(rng, testsupport::random_extent(rng, 1, 12), 0.2);
    const auto padded = p.padded(testsupport::random_extent(rng, 1, 5));
    CHECK(shannon(padded) == shannon(p));
    CHECK(tsallis(padded, QParam(2.0)) == tsallis(p, QParam(2.0)));
    CHECK(renyi(padded, QParam(0.5)) == renyi(p, QParam(0.5)));

    std::vector<double> shuffled(p.components().begin(), p.components().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const ProbabilityVector s(shuffled);
    CHECK_THAT(shannon(s), WithinAbs(shannon(p), 1e-14));
    CHECK_THAT(tsallis(s, QParam(1.5)), WithinAbs(tsallis(p, QParam(1.5)), 1e-14));
  }
}
