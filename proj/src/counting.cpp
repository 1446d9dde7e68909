#include "burnside/counting.hpp"

#include <numeric>

namespace burnside {

std::size_t count_orbits_direct(const GroupAction& action) {
  return orbit_partition(action).orbit_count;
}

namespace {

std::vector<std::size_t> fix_sizes(const GroupAction& action) {
  std::vector<std::size_t> sizes(action.group().order(), 0);
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    for (std::uint32_t x = 0; x < action.size(); ++x) {
      if (action.apply(g, x) == x) ++sizes[g];
    }
  }
  return sizes;
}

}  // namespace

std::uint64_t fixed_pairs(const GroupAction& action) {
  std::uint64_t by_element = 0;
  for (std::size_t size : fix_sizes(action)) by_element += size;

  // Double count: summing stabilizer sizes over points must agree.
  std::uint64_t by_point = 0;
  for (std::uint32_t x = 0; x < action.size(); ++x) {
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      if (action.apply(g, x) == x) ++by_point;
    }
  }
  if (by_element != by_point) {
    throw ConsistencyError("fixed-pair sums disagree: sum_g |fix(g)| = " +
                           std::to_string(by_element) +
                           ", sum_x |stab(x)| = " + std::to_string(by_point));
  }
  return by_element;
}

std::size_t count_orbits_burnside(const GroupAction& action) {
  Rational average;
  const auto order = static_cast<std::int64_t>(action.group().order());
  for (std::size_t size : fix_sizes(action)) {
    average += Rational(static_cast<std::int64_t>(size), order);
  }
  if (!average.is_integer()) {
    throw ConsistencyError(
        "fixed-point average " + average.str() +
        " is not an integer; the action cannot be a valid group action");
  }
  return static_cast<std::size_t>(average.to_integer().convert_to<std::uint64_t>());
}

OrbitCountReport orbit_count_report(const GroupAction& action) {
  OrbitCountReport report;
  report.group_order = action.group().order();
  report.fix_sizes = fix_sizes(action);
  report.fixed_pairs = fixed_pairs(action);
  report.burnside_value =
      Rational(BigInt(report.fixed_pairs), BigInt(report.group_order));
  report.direct_count = count_orbits_direct(action);
  return report;
}

}  // namespace burnside
