#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "burnside/action.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Generator identity and stream discipline, fixed for reproducibility:
//   - engine: std::mt19937_64 seeded directly with the 64-bit seed; its
//     output sequence is pinned by the C++ standard, so fixtures are
//     bit-identical across platforms;
//   - bounded(k) draws uniformly from [0, k) by rejection (discard raw
//     values from the biased top of the 64-bit range), never by plain
//     modulo;
//   - one run owns one engine and is sequential; per sample the bounded
//     draws are consumed in the fixed order g, orbit, y.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bounded(std::uint64_t k);

private:
  std::mt19937_64 engine_;
};

// One draw of the proof's experiment.
struct SampleOutcome {
  std::size_t g = 0;
  std::size_t orbit_index = 0;
  std::uint32_t y = 0;
  std::uint32_t gy = 0;  // act(g, y)
};

SampleOutcome sample_once(const GroupAction& action,
                          const OrbitPartition& partition, SampleRng& rng);

// A sampled estimate paired with the exact value it should converge to.
// standard_error is the sample standard deviation (n-1 denominator, zero
// when all draws are identical) divided by sqrt(samples). Estimates are the
// only floating-point values in the project and never feed back into exact
// computations.
struct EstimateReport {
  std::string quantity;
  double estimate = 0.0;
  Rational exact;
  double standard_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Averages |fix(g)| over uniform draws of g: an unbiased estimator of the
// orbit count.
EstimateReport estimate_orbit_count(const GroupAction& action,
                                    std::size_t samples, std::uint64_t seed);

enum class EventKind { GyEqX, YInOrbX, GxEqX };

// Empirical frequency of the event over independent runs of sample_once,
// paired with the exact probability from the probability model.
EstimateReport estimate_event(const GroupAction& action, EventKind event,
                              std::uint32_t x, std::size_t samples,
                              std::uint64_t seed);

}  // namespace burnside
