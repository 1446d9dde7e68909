#include "burnside/group.hpp"

#include <utility>

namespace burnside {

FiniteGroup FiniteGroup::generate(std::vector<Permutation> generators,
                                  std::size_t degree, std::size_t max_order) {
  if (degree == 0) throw DegreeError("group degree must be >= 1");
  if (max_order == 0) throw Error("max_order must be >= 1");
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw DegreeError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " +
                        std::to_string(degree));
    }
  }

  FiniteGroup group;
  group.degree_ = degree;
  group.elements_.push_back(Permutation::identity(degree));
  group.index_.emplace(
      std::vector<std::uint32_t>(group.elements_[0].images().begin(),
                                 group.elements_[0].images().end()),
      0);

  // BFS closure from the identity, multiplying on the right by generators
  // in input order. Discovery order fixes the element indices.
  for (std::size_t front = 0; front < group.elements_.size(); ++front) {
    for (const Permutation& gen : generators) {
      Permutation next = compose(group.elements_[front], gen);
      std::vector<std::uint32_t> key(next.images().begin(),
                                     next.images().end());
      if (group.index_.contains(key)) continue;
      if (group.elements_.size() >= max_order) {
        throw CapExceededError(
            "group closure exceeds max_order " + std::to_string(max_order) +
                " (enumerated " + std::to_string(group.elements_.size()) +
                " elements so far)",
            group.elements_.size());
      }
      group.index_.emplace(std::move(key), group.elements_.size());
      group.elements_.push_back(std::move(next));
    }
  }

  group.inverse_.resize(group.elements_.size());
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    auto inv = group.index_of(group.elements_[i].inverse());
    if (!inv) throw ConsistencyError("closure not closed under inverse");
    group.inverse_[i] = *inv;
  }

  for (const Permutation& gen : generators) {
    group.generator_indices_.push_back(*group.index_of(gen));
  }
  return group;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(
      std::vector<std::uint32_t>(p.images().begin(), p.images().end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace burnside
