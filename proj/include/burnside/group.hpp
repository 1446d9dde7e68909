#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "burnside/permutation.hpp"

namespace burnside {

inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

// A finite permutation group, fully enumerated as the closure of a
// generator set. Element 0 is always the identity; the remaining order is
// BFS discovery order (multiplying on the right by generators in input
// order), so indices are reproducible across runs.
class FiniteGroup {
public:
  static FiniteGroup generate(std::vector<Permutation> generators,
                              std::size_t degree,
                              std::size_t max_order = kDefaultMaxOrder);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t identity_index() const { return 0; }

  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::span<const Permutation> elements() const { return elements_; }

  // Index of the inverse of element i.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;

  // Indices of the generators within elements(), in input order.
  std::span<const std::size_t> generator_indices() const {
    return generator_indices_;
  }

private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generator_indices_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

}  // namespace burnside
