#include "burnside/action.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace burnside {

ActionSpace ActionSpace::indexed(std::size_t m) {
  ActionSpace space;
  space.size = m;
  space.labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) space.labels.push_back(std::to_string(i));
  return space;
}

namespace {

std::string coloring_label(std::size_t encoding, std::size_t degree,
                           std::size_t colors) {
  // Point 0 leftmost. Contiguous digits while they are unambiguous.
  std::string label;
  for (std::size_t i = 0; i < degree; ++i) {
    if (colors > 10 && i > 0) label += '.';
    label += std::to_string(encoding % colors);
    encoding /= colors;
  }
  return label;
}

}  // namespace

GroupAction::GroupAction(FiniteGroup group, ActionSpace space,
                         std::vector<std::vector<std::uint32_t>> table,
                         Kind kind, std::size_t colors)
    : group_(std::move(group)),
      space_(std::move(space)),
      table_(std::move(table)),
      kind_(kind),
      colors_(colors) {
  if (space_.size == 0) throw Error("action space must have >= 1 point");
  if (space_.labels.size() != space_.size) {
    throw Error("action space needs one label per point");
  }
  std::set<std::string> distinct(space_.labels.begin(), space_.labels.end());
  if (distinct.size() != space_.size) {
    throw Error("action space labels must be distinct");
  }
  if (table_.size() != group_.order()) {
    throw InvalidActionError(
        "action table has " + std::to_string(table_.size()) +
        " rows for a group of order " + std::to_string(group_.order()));
  }
  for (std::size_t g = 0; g < table_.size(); ++g) {
    if (table_[g].size() != space_.size) {
      throw InvalidActionError("action table row " + std::to_string(g) +
                               " has " + std::to_string(table_[g].size()) +
                               " entries for a space of size " +
                               std::to_string(space_.size));
    }
  }
}

void GroupAction::validate_identity_and_rows() const {
  const std::size_t e = group_.identity_index();
  for (std::uint32_t x = 0; x < space_.size; ++x) {
    if (table_[e][x] != x) {
      throw InvalidActionError(
          "identity axiom violated: act(e, " + std::to_string(x) + ") = " +
          std::to_string(table_[e][x]) + ", witness x=" + std::to_string(x));
    }
  }
  std::vector<bool> hit(space_.size);
  for (std::size_t g = 0; g < group_.order(); ++g) {
    std::fill(hit.begin(), hit.end(), false);
    for (std::uint32_t x = 0; x < space_.size; ++x) {
      std::uint32_t image = table_[g][x];
      if (image >= space_.size) {
        throw InvalidActionError("act(" + std::to_string(g) + ", " +
                                 std::to_string(x) + ") = " +
                                 std::to_string(image) + " is out of range");
      }
      if (hit[image]) {
        throw InvalidActionError("element " + std::to_string(g) +
                                 " does not act bijectively: point " +
                                 std::to_string(image) + " is hit twice");
      }
      hit[image] = true;
    }
  }
}

void GroupAction::validate_compatibility_exhaustive() const {
  for (std::size_t g = 0; g < group_.order(); ++g) {
    for (std::size_t h = 0; h < group_.order(); ++h) {
      auto gh = group_.index_of(compose(group_.element(g), group_.element(h)));
      if (!gh) throw ConsistencyError("group not closed under composition");
      for (std::uint32_t x = 0; x < space_.size; ++x) {
        if (table_[*gh][x] != table_[g][table_[h][x]]) {
          throw InvalidActionError(
              "compatibility violated: act(gh, x) != act(g, act(h, x)), "
              "witness (g=" +
              std::to_string(g) + ", h=" + std::to_string(h) +
              ", x=" + std::to_string(x) + ")");
        }
      }
    }
  }
}

void GroupAction::validate_compatibility_generated() const {
  // act(a*gen) = act(a) . act(gen) for every a and generator extends to all
  // pairs by induction over the BFS generator words.
  for (std::size_t a = 0; a < group_.order(); ++a) {
    for (std::size_t gen : group_.generator_indices()) {
      auto prod =
          group_.index_of(compose(group_.element(a), group_.element(gen)));
      if (!prod) throw ConsistencyError("group not closed under composition");
      for (std::uint32_t x = 0; x < space_.size; ++x) {
        if (table_[*prod][x] != table_[a][table_[gen][x]]) {
          throw InvalidActionError(
              "compatibility violated: witness (g=" + std::to_string(a) +
              ", h=" + std::to_string(gen) + ", x=" + std::to_string(x) + ")");
        }
      }
    }
  }
}

GroupAction GroupAction::natural(FiniteGroup group) {
  std::vector<std::vector<std::uint32_t>> table;
  table.reserve(group.order());
  for (const Permutation& p : group.elements()) {
    table.emplace_back(p.images().begin(), p.images().end());
  }
  ActionSpace space = ActionSpace::indexed(group.degree());
  GroupAction action(std::move(group), std::move(space), std::move(table),
                     Kind::Natural, 0);
  action.validate_identity_and_rows();
  action.validate_compatibility_generated();
  return action;
}

GroupAction GroupAction::colorings(FiniteGroup group, std::size_t colors,
                                   std::size_t space_cap) {
  if (colors == 0) throw Error("colorings need >= 1 color");
  const std::size_t n = group.degree();
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > space_cap / colors) {
      throw CapExceededError(
          "coloring space " + std::to_string(colors) + "^" +
              std::to_string(n) + " exceeds space cap " +
              std::to_string(space_cap),
          size);
    }
    size *= colors;
  }

  // Encoding: point 0 is the least significant base-c digit. The action
  // permutes positions by g^-1, which keeps it a left action.
  std::vector<std::size_t> power(n);
  for (std::size_t i = 0, p = 1; i < n; ++i, p *= colors) power[i] = p;

  std::vector<std::vector<std::uint32_t>> table(group.order());
  std::vector<std::size_t> digits(n);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Permutation& ginv = group.element(group.inverse_index(g));
    auto& row = table[g];
    row.resize(size);
    for (std::size_t f = 0; f < size; ++f) {
      std::size_t rest = f;
      for (std::size_t i = 0; i < n; ++i) {
        digits[i] = rest % colors;
        rest /= colors;
      }
      std::size_t image = 0;
      for (std::size_t i = 0; i < n; ++i) image += digits[ginv(static_cast<std::uint32_t>(i))] * power[i];
      row[f] = static_cast<std::uint32_t>(image);
    }
  }

  ActionSpace space;
  space.size = size;
  space.labels.reserve(size);
  for (std::size_t f = 0; f < size; ++f) {
    space.labels.push_back(coloring_label(f, n, colors));
  }

  GroupAction action(std::move(group), std::move(space), std::move(table),
                     Kind::Colorings, colors);
  action.validate_identity_and_rows();
  action.validate_compatibility_generated();
  return action;
}

GroupAction GroupAction::from_table(
    FiniteGroup group, ActionSpace space,
    std::vector<std::vector<std::uint32_t>> table) {
  GroupAction action(std::move(group), std::move(space), std::move(table),
                     Kind::Table, 0);
  action.validate_identity_and_rows();
  action.validate_compatibility_exhaustive();
  return action;
}

std::vector<std::uint32_t> orbit(const GroupAction& action, std::uint32_t x) {
  if (x >= action.size()) {
    throw OutOfRangeError("point " + std::to_string(x) +
                          " out of range for space of size " +
                          std::to_string(action.size()));
  }
  std::vector<std::uint32_t> points;
  points.reserve(action.group().order());
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    points.push_back(action.apply(g, x));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

OrbitPartition orbit_partition(const GroupAction& action) {
  OrbitPartition partition;
  partition.orbit_of.assign(action.size(), SIZE_MAX);
  for (std::uint32_t x = 0; x < action.size(); ++x) {
    if (partition.orbit_of[x] != SIZE_MAX) continue;
    std::vector<std::uint32_t> members = orbit(action, x);
    const std::size_t index = partition.orbit_members.size();
    for (std::uint32_t y : members) partition.orbit_of[y] = index;
    partition.orbit_members.push_back(std::move(members));
  }
  partition.orbit_count = partition.orbit_members.size();
  return partition;
}

FixSet fix_set(const GroupAction& action, std::size_t element_index) {
  if (element_index >= action.group().order()) {
    throw OutOfRangeError("element index " + std::to_string(element_index) +
                          " out of range for group of order " +
                          std::to_string(action.group().order()));
  }
  FixSet fix;
  fix.element = element_index;
  for (std::uint32_t x = 0; x < action.size(); ++x) {
    if (action.apply(element_index, x) == x) fix.points.push_back(x);
  }
  return fix;
}

std::vector<std::size_t> stabilizer(const GroupAction& action,
                                    std::uint32_t x) {
  return transporter(action, x, x);
}

std::vector<std::size_t> transporter(const GroupAction& action,
                                     std::uint32_t y, std::uint32_t x) {
  if (y >= action.size() || x >= action.size()) {
    throw OutOfRangeError("point out of range for space of size " +
                          std::to_string(action.size()));
  }
  std::vector<std::size_t> hits;
  for (std::size_t h = 0; h < action.group().order(); ++h) {
    if (action.apply(h, y) == x) hits.push_back(h);
  }
  return hits;
}

}  // namespace burnside
