#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

// A bijection on {0..n-1}, stored as its image sequence. Immutable once
// constructed; the constructor rejects anything that is not a permutation.
class Permutation {
public:
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }

  // Image of a point.
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  std::span<const std::uint32_t> images() const { return images_; }

  Permutation inverse() const;

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

// (p * q)(i) = p(q(i)): q is applied first. This convention is fixed
// project-wide; "gy" means apply g to the point y.
Permutation compose(const Permutation& p, const Permutation& q);

// Parses whitespace-tolerant 0-based cycle notation, e.g. "(0 1 2)(3 4)".
// Fixed points may be omitted; "()" alone denotes the identity. Points are
// separated by spaces/tabs only -- there are no commas in the grammar.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Canonical cycle form: cycles sorted by minimal member, each written
// starting from its minimal member, fixed points omitted; identity is "()".
// parse_cycles(format_cycles(p), p.degree()) == p.
std::string format_cycles(const Permutation& p);

}  // namespace burnside
