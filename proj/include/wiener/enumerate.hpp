#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wiener/families.hpp"
#include "wiener/graph.hpp"

namespace wiener {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxTreeOrder = 20;

// Level sequence of a rooted tree in preorder: root at level 0, each vertex
// followed by its subtrees.
using LevelSequence = std::vector<std::int32_t>;

// All rooted trees on m vertices as canonical level sequences, generated by
// the Beyer-Hedetniemi successor (lexicographically decreasing, from the
// path to the star).
std::vector<LevelSequence> rooted_trees(int order);

Graph tree_from_level_sequence(std::span<const std::int32_t> levels);

// One representative per isomorphism class of free trees of the given
// order, 1 <= order <= kMaxTreeOrder. Trees are rooted at their centroid:
// a unique centroid gets a multiset of rooted branches of size < n/2; a
// central edge joins an unordered pair of rooted trees of size n/2.
void for_each_free_tree(int order, const std::function<void(const LevelSequence&)>& visit);
std::vector<Graph> free_trees(int order);

// Starlike specs of the given order: partitions of order-1 into `arms`
// parts (or any number >= 3 of parts) in non-decreasing order.
std::vector<FamilySpec> enumerate_starlike(int order, std::optional<int> arms = std::nullopt);

struct Census {
  int order = 0;
  std::size_t trees = 0;
  std::map<std::size_t, std::size_t> complexity_histogram;
  std::size_t irregular = 0;
  std::vector<std::vector<Edge>> irregular_witnesses;
};

Census census(int order);

}  // namespace wiener
