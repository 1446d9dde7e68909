#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burnside/action.hpp"
#include "burnside/rational.hpp"

namespace burnside {

// Both routes to the orbit count plus the fixed-pair count linking them.
// For any validated action burnside_value = fixed_pairs / group_order is an
// integer equal to direct_count; fix_sizes keeps the per-element terms for
// failure localization.
struct OrbitCountReport {
  std::size_t direct_count = 0;
  Rational burnside_value;
  std::uint64_t fixed_pairs = 0;
  std::size_t group_order = 0;
  std::vector<std::size_t> fix_sizes;  // per element index
};

std::size_t count_orbits_direct(const GroupAction& action);

// (1/|G|) * sum_g |fix(g)| in exact rational arithmetic. Throws
// ConsistencyError if the average is not an integer, which cannot happen
// for a validated action.
std::size_t count_orbits_burnside(const GroupAction& action);

// |{(g,x) : act(g,x) = x}|. Computed by both summation orders (over g and
// over x); throws ConsistencyError if they disagree.
std::uint64_t fixed_pairs(const GroupAction& action);

OrbitCountReport orbit_count_report(const GroupAction& action);

}  // namespace burnside
