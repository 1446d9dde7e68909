#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

inline constexpr std::size_t kDefaultSpaceCap = 1'000'000;

namespace detail {
struct ActionTamper;
}

// The finite labeled set X being acted on.
struct ActionSpace {
  std::size_t size = 0;
  std::vector<std::string> labels;  // distinct; defaults to "0".."m-1"

  static ActionSpace indexed(std::size_t m);
};

// A validated action of a FiniteGroup on an ActionSpace, stored as one row
// of images per group element. Construction checks the axioms (identity
// acts trivially, rows are bijections, act(gh,x) = act(g, act(h,x))), so
// downstream code may assume them. Immutable afterwards.
class GroupAction {
public:
  enum class Kind { Natural, Colorings, Table };

  // X = {0..degree-1}, act(g, x) = g(x).
  static GroupAction natural(FiniteGroup group);

  // X = all functions f : {0..n-1} -> {0..c-1}, encoded base-c with point 0
  // least significant; (g.f)(i) = f(g^-1(i)) so the action stays a left
  // action. Labels render each coloring as a color string, point 0 leftmost.
  static GroupAction colorings(FiniteGroup group, std::size_t colors,
                               std::size_t space_cap = kDefaultSpaceCap);

  // Explicit table: table[g][x] = act(g, x). Both axioms are checked
  // exhaustively and violations name a witness.
  static GroupAction from_table(FiniteGroup group, ActionSpace space,
                                std::vector<std::vector<std::uint32_t>> table);

  const FiniteGroup& group() const { return group_; }
  const ActionSpace& space() const { return space_; }
  std::size_t size() const { return space_.size; }

  std::uint32_t apply(std::size_t element_index, std::uint32_t point) const {
    return table_[element_index][point];
  }

  Kind kind() const { return kind_; }
  std::size_t colors() const { return colors_; }  // 0 unless Kind::Colorings

private:
  friend struct detail::ActionTamper;

  GroupAction(FiniteGroup group, ActionSpace space,
              std::vector<std::vector<std::uint32_t>> table, Kind kind,
              std::size_t colors);

  void validate_identity_and_rows() const;
  void validate_compatibility_exhaustive() const;
  void validate_compatibility_generated() const;

  FiniteGroup group_;
  ActionSpace space_;
  std::vector<std::vector<std::uint32_t>> table_;
  Kind kind_;
  std::size_t colors_;
};

// The partition of X into orbits, indexed by minimal member, ascending.
struct OrbitPartition {
  std::size_t orbit_count = 0;
  std::vector<std::size_t> orbit_of;                  // point -> orbit index
  std::vector<std::vector<std::uint32_t>> orbit_members;  // each sorted
};

// {x in X : act(g, x) = x}.
struct FixSet {
  std::size_t element = 0;
  std::vector<std::uint32_t> points;  // sorted
};

// {act(g, x) : g in G}, sorted. Always contains x.
std::vector<std::uint32_t> orbit(const GroupAction& action, std::uint32_t x);

OrbitPartition orbit_partition(const GroupAction& action);

FixSet fix_set(const GroupAction& action, std::size_t element_index);

// {h : act(h, x) = x} as sorted element indices. Always contains 0.
std::vector<std::size_t> stabilizer(const GroupAction& action, std::uint32_t x);

// {h : act(h, y) = x} as sorted element indices; empty iff x and y lie in
// different orbits.
std::vector<std::size_t> transporter(const GroupAction& action,
                                     std::uint32_t y, std::uint32_t x);

namespace detail {
// Test support: flips one table entry after validation so failure paths in
// the counting and proof checkers can be exercised. Not for production use.
struct ActionTamper {
  static void set(GroupAction& action, std::size_t element_index,
                  std::uint32_t point, std::uint32_t value) {
    action.table_[element_index][point] = value;
  }
};
}  // namespace detail

}  // namespace burnside
