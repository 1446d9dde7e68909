#include "burnside/sampling.hpp"

#include <cmath>

#include "burnside/counting.hpp"
#include "burnside/proof.hpp"

namespace burnside {

std::uint64_t SampleRng::bounded(std::uint64_t k) {
  if (k == 0) throw Error("bounded draw from an empty range");
  // Reject raw values below 2^64 mod k; what remains splits into equal
  // blocks of k, so the residue is unbiased.
  const std::uint64_t threshold = (-k) % k;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % k;
  }
}

SampleOutcome sample_once(const GroupAction& action,
                          const OrbitPartition& partition, SampleRng& rng) {
  if (action.size() == 0) throw Error("cannot sample from an empty space");
  SampleOutcome out;
  out.g = rng.bounded(action.group().order());
  out.orbit_index = rng.bounded(partition.orbit_count);
  const auto& members = partition.orbit_members[out.orbit_index];
  out.y = members[rng.bounded(members.size())];
  out.gy = action.apply(out.g, out.y);
  return out;
}

namespace {

using U128 = unsigned __int128;

// Moments are accumulated as exact integers so that the mean, the n-1
// sample variance, and in particular a zero variance come out bit-identical
// on every platform.
struct Moments {
  U128 sum = 0;
  U128 sum_sq = 0;
  std::size_t n = 0;

  void add(std::uint64_t v) {
    sum += v;
    sum_sq += static_cast<U128>(v) * v;
    ++n;
  }

  double mean() const { return static_cast<double>(sum) / static_cast<double>(n); }

  double standard_error() const {
    if (n < 2) return 0.0;
    const U128 numer = static_cast<U128>(n) * sum_sq - sum * sum;
    const double variance =
        static_cast<double>(numer) /
        (static_cast<double>(n) * static_cast<double>(n - 1));
    return std::sqrt(variance / static_cast<double>(n));
  }
};

}  // namespace

EstimateReport estimate_orbit_count(const GroupAction& action,
                                    std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error("samples must be >= 1");

  std::vector<std::uint64_t> fix_size(action.group().order(), 0);
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    for (std::uint32_t x = 0; x < action.size(); ++x) {
      if (action.apply(g, x) == x) ++fix_size[g];
    }
  }

  SampleRng rng(seed);
  Moments moments;
  for (std::size_t i = 0; i < samples; ++i) {
    moments.add(fix_size[rng.bounded(action.group().order())]);
  }

  EstimateReport report;
  report.quantity = "orbit-count";
  report.estimate = moments.mean();
  report.standard_error = moments.standard_error();
  report.exact = Rational(BigInt(count_orbits_direct(action)));
  report.samples = samples;
  report.seed = seed;
  return report;
}

EstimateReport estimate_event(const GroupAction& action, EventKind event,
                              std::uint32_t x, std::size_t samples,
                              std::uint64_t seed) {
  if (samples == 0) throw Error("samples must be >= 1");
  if (x >= action.size()) {
    throw OutOfRangeError("point " + std::to_string(x) +
                          " out of range for space of size " +
                          std::to_string(action.size()));
  }

  ProbabilityModel model = ProbabilityModel::build(action);
  const OrbitPartition& partition = model.partition();

  EstimateReport report;
  switch (event) {
    case EventKind::GyEqX:
      report.quantity = "gy=x (x=" + std::to_string(x) + ")";
      report.exact = model.prob_gy_eq(x);
      break;
    case EventKind::YInOrbX:
      report.quantity = "y in orb(x) (x=" + std::to_string(x) + ")";
      report.exact = model.prob_y_in_orb(x);
      break;
    case EventKind::GxEqX:
      report.quantity = "gx=x (x=" + std::to_string(x) + ")";
      report.exact = model.prob_gx_eq_x(x);
      break;
  }

  SampleRng rng(seed);
  Moments moments;
  for (std::size_t i = 0; i < samples; ++i) {
    const SampleOutcome out = sample_once(action, partition, rng);
    bool hit = false;
    switch (event) {
      case EventKind::GyEqX:
        hit = out.gy == x;
        break;
      case EventKind::YInOrbX:
        hit = partition.orbit_of[out.y] == partition.orbit_of[x];
        break;
      case EventKind::GxEqX:
        hit = action.apply(out.g, x) == x;
        break;
    }
    moments.add(hit ? 1 : 0);
  }

  report.estimate = moments.mean();
  report.standard_error = moments.standard_error();
  report.samples = samples;
  report.seed = seed;
  return report;
}

}  // namespace burnside
