#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "burnside/proof.hpp"
#include "burnside/sampling.hpp"

using burnside::EstimateReport;
using burnside::EventKind;
using burnside::FiniteGroup;
using burnside::GroupAction;
using burnside::orbit_partition;
using burnside::OrbitPartition;
using burnside::parse_cycles;
using burnside::Permutation;
using burnside::Rational;
using burnside::sample_once;
using burnside::SampleRng;

namespace {

FiniteGroup from_cycles(std::initializer_list<const char*> cycles,
                        std::size_t degree) {
  std::vector<Permutation> generators;
  for (const char* text : cycles) generators.push_back(parse_cycles(text, degree));
  return FiniteGroup::generate(std::move(generators), degree);
}

GroupAction swap_on3() {
  return GroupAction::natural(from_cycles({"(0 1)"}, 3));
}

bool within(double estimate, double exact, double standard_error, double k) {
  if (standard_error == 0.0) return estimate == exact;
  return std::abs(estimate - exact) <= k * standard_error;
}

}  // namespace

TEST_CASE("bounded draws stay in range and hit every value") {
  SampleRng rng(123);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t v = rng.bounded(7);
    REQUIRE(v < 7);
    ++seen[v];
  }
  for (int count : seen) CHECK(count > 0);
  CHECK(SampleRng(9).bounded(1) == 0);
}

TEST_CASE("single-point action has a single outcome") {
  GroupAction action = GroupAction::natural(FiniteGroup::generate({}, 1));
  OrbitPartition partition = orbit_partition(action);
  SampleRng rng(42);
  for (int i = 0; i < 10; ++i) {
    burnside::SampleOutcome out = sample_once(action, partition, rng);
    CHECK(out.g == 0);
    CHECK(out.orbit_index == 0);
    CHECK(out.y == 0);
    CHECK(out.gy == 0);
  }
}

TEST_CASE("sample outcomes are internally consistent") {
  for (const GroupAction& action :
       {swap_on3(), GroupAction::natural(from_cycles({"(0 1)", "(0 1 2)"}, 3)),
        GroupAction::colorings(from_cycles({"(0 1 2 3)"}, 4), 2)}) {
    OrbitPartition partition = orbit_partition(action);
    SampleRng rng(7);
    for (int i = 0; i < 500; ++i) {
      burnside::SampleOutcome out = sample_once(action, partition, rng);
      CHECK(out.gy == action.apply(out.g, out.y));
      CHECK(partition.orbit_of[out.y] == out.orbit_index);
    }
  }
}

TEST_CASE("orbit stage oversamples small orbits") {
  // Orbits {0,1} and {2}: the singleton is drawn with probability 1/2,
  // matching weight(g, 2) = 1/4 per element.
  GroupAction action = swap_on3();
  OrbitPartition partition = orbit_partition(action);
  SampleRng rng(2718);
  int hits = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    if (sample_once(action, partition, rng).y == 2) ++hits;
  }
  double freq = static_cast<double>(hits) / n;
  double se = std::sqrt(0.5 * 0.5 / n);
  CHECK(std::abs(freq - 0.5) <= 4 * se);
}

TEST_CASE("orbit count estimate on the trivial group is exact") {
  GroupAction action = GroupAction::natural(FiniteGroup::generate({}, 5));
  EstimateReport report = burnside::estimate_orbit_count(action, 1000, 99);
  CHECK(report.estimate == 5.0);
  CHECK(report.standard_error == 0.0);
  CHECK(report.exact == Rational(5));
  CHECK(report.quantity == "orbit-count");
}

TEST_CASE("orbit count estimate calibrates on C4 2-colorings") {
  GroupAction action = GroupAction::colorings(from_cycles({"(0 1 2 3)"}, 4), 2);
  EstimateReport report = burnside::estimate_orbit_count(action, 10000, 31337);
  CHECK(report.exact == Rational(6));
  CHECK(within(report.estimate, 6.0, report.standard_error, 4.0));
  // Population SD is sqrt(mean of {16,2,4,2}^2 - 36) ~ 5.93; the standard
  // error should land near 0.0593.
  CHECK(report.standard_error > 0.03);
  CHECK(report.standard_error < 0.09);
}

TEST_CASE("identical seeds give bit-identical reports") {
  GroupAction action = GroupAction::colorings(from_cycles({"(0 1 2 3)"}, 4), 2);
  EstimateReport a = burnside::estimate_orbit_count(action, 2000, 5);
  EstimateReport b = burnside::estimate_orbit_count(action, 2000, 5);
  CHECK(a.estimate == b.estimate);
  CHECK(a.standard_error == b.standard_error);

  EstimateReport c = burnside::estimate_orbit_count(action, 2000, 6);
  CHECK(a.estimate != c.estimate);

  EstimateReport e1 = burnside::estimate_event(action, EventKind::GyEqX, 3, 2000, 5);
  EstimateReport e2 = burnside::estimate_event(action, EventKind::GyEqX, 3, 2000, 5);
  CHECK(e1.estimate == e2.estimate);
  CHECK(e1.standard_error == e2.standard_error);
}

TEST_CASE("event estimates converge to the exact probabilities") {
  SUBCASE("gx=x under the trivial group is always a hit") {
    GroupAction action = GroupAction::natural(FiniteGroup::generate({}, 4));
    EstimateReport report =
        burnside::estimate_event(action, EventKind::GxEqX, 2, 500, 11);
    CHECK(report.estimate == 1.0);
    CHECK(report.standard_error == 0.0);
    CHECK(report.exact == Rational(1));
  }

  SUBCASE("y in orb(x) matches 1/N") {
    GroupAction action = swap_on3();
    EstimateReport report =
        burnside::estimate_event(action, EventKind::YInOrbX, 0, 10000, 12);
    CHECK(report.exact == Rational(1, 2));
    CHECK(within(report.estimate, 0.5, report.standard_error, 4.0));
  }

  SUBCASE("gy=x on the swap action at the fixed point") {
    GroupAction action = swap_on3();
    EstimateReport report =
        burnside::estimate_event(action, EventKind::GyEqX, 2, 10000, 13);
    CHECK(report.exact == Rational(1, 2));
    CHECK(within(report.estimate, 0.5, report.standard_error, 4.0));
    CHECK(report.quantity == "gy=x (x=2)");
  }
}

TEST_CASE("group element draws are uniform on S3") {
  GroupAction action = GroupAction::natural(from_cycles({"(0 1)", "(0 1 2)"}, 3));
  OrbitPartition partition = orbit_partition(action);
  SampleRng rng(4242);
  const int n = 10000;
  std::vector<int> counts(6, 0);
  for (int i = 0; i < n; ++i) ++counts[sample_once(action, partition, rng).g];
  const double p = 1.0 / 6.0;
  const double band = 4.0 * std::sqrt(p * (1 - p) / n);
  for (int count : counts) {
    CHECK(std::abs(static_cast<double>(count) / n - p) <= band);
  }
}

TEST_CASE("input validation") {
  GroupAction action = swap_on3();
  CHECK_THROWS(burnside::estimate_orbit_count(action, 0, 1));
  CHECK_THROWS(burnside::estimate_event(action, EventKind::GxEqX, 0, 0, 1));
  CHECK_THROWS_AS(burnside::estimate_event(action, EventKind::GxEqX, 9, 10, 1),
                  burnside::OutOfRangeError);
  CHECK_THROWS(SampleRng(1).bounded(0));
}
