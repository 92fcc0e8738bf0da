#include "wiener/enumerate.hpp"

#include <algorithm>
#include <string>

namespace wiener {

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxTreeOrder) {
    throw EnumerationError("tree order must be in [1, " + std::to_string(kMaxTreeOrder) +
                           "], got " + std::to_string(order));
  }
}

struct CatalogEntry {
  int size = 0;
  LevelSequence levels;
};

// Rooted trees of sizes 1..max_size, ordered by size descending and then by
// level sequence descending. Any fixed total order makes a non-increasing
// choice of branches canonical.
std::vector<CatalogEntry> branch_catalog(int max_size) {
  std::vector<CatalogEntry> out;
  for (int m = max_size; m >= 1; --m) {
    for (auto& seq : rooted_trees(m)) out.push_back({m, std::move(seq)});
  }
  return out;
}

class UnicentroidWalker {
 public:
  UnicentroidWalker(int order, const std::function<void(const LevelSequence&)>& visit)
      : visit_(visit), catalog_(branch_catalog((order - 1) / 2)) {
    const int max_size = (order - 1) / 2;
    block_start_.assign(static_cast<std::size_t>(max_size) + 1, catalog_.size());
    for (std::size_t i = catalog_.size(); i-- > 0;) {
      block_start_[static_cast<std::size_t>(catalog_[i].size)] = i;
    }
    max_size_ = max_size;
    current_.push_back(0);
    walk(order - 1, 0);
  }

 private:
  void walk(int remaining, std::size_t from) {
    if (remaining == 0) {
      visit_(current_);
      return;
    }
    if (max_size_ == 0) return;
    const int cap = std::min(remaining, max_size_);
    for (std::size_t i = std::max(from, block_start_[static_cast<std::size_t>(cap)]);
         i < catalog_.size(); ++i) {
      const CatalogEntry& branch = catalog_[i];
      const std::size_t mark = current_.size();
      for (std::int32_t level : branch.levels) current_.push_back(level + 1);
      walk(remaining - branch.size, i);
      current_.resize(mark);
    }
  }

  const std::function<void(const LevelSequence&)>& visit_;
  std::vector<CatalogEntry> catalog_;
  std::vector<std::size_t> block_start_;
  int max_size_ = 0;
  LevelSequence current_;
};

void partitions(int remaining, int parts, Arm min_part, std::vector<Arm>& current,
                std::vector<FamilySpec>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(starlike(current));
    return;
  }
  // Non-decreasing parts: the rest must be at least min_part each.
  for (Arm x = min_part; x * parts <= remaining; ++x) {
    current.push_back(x);
    partitions(remaining - static_cast<int>(x), parts - 1, x, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<LevelSequence> rooted_trees(int order) {
  if (order < 1) throw EnumerationError("rooted tree order must be at least 1");
  std::vector<LevelSequence> out;
  LevelSequence seq(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) seq[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(seq);
    // Last position above level 1; none left means the star was reached.
    std::size_t p = seq.size() - 1;
    while (p > 0 && seq[p] <= 1) --p;
    if (p == 0) break;
    std::size_t q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
  }
  return out;
}

Graph tree_from_level_sequence(std::span<const std::int32_t> levels) {
  if (levels.empty() || levels[0] != 0) {
    throw EnumerationError("level sequence must start with the root at level 0");
  }
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level{0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto level = static_cast<std::size_t>(levels[i]);
    if (level < 1 || level > last_at_level.size()) {
      throw EnumerationError("level sequence is not a preorder of a rooted tree");
    }
    const auto v = static_cast<Vertex>(i);
    edges.push_back({last_at_level[level - 1], v});
    last_at_level.resize(level);
    last_at_level.push_back(v);
  }
  return Graph(static_cast<Vertex>(levels.size()), edges);
}

void for_each_free_tree(int order, const std::function<void(const LevelSequence&)>& visit) {
  check_order(order);
  UnicentroidWalker(order, visit);
  if (order % 2 == 0) {
    const std::vector<LevelSequence> halves = rooted_trees(order / 2);
    LevelSequence joined;
    for (std::size_t i = 0; i < halves.size(); ++i) {
      for (std::size_t j = i; j < halves.size(); ++j) {
        joined = halves[i];
        for (std::int32_t level : halves[j]) joined.push_back(level + 1);
        visit(joined);
      }
    }
  }
}

std::vector<Graph> free_trees(int order) {
  std::vector<Graph> out;
  for_each_free_tree(order, [&](const LevelSequence& seq) {
    out.push_back(tree_from_level_sequence(seq));
  });
  return out;
}

std::vector<FamilySpec> enumerate_starlike(int order, std::optional<int> arms) {
  if (order < 4) throw EnumerationError("starlike trees need order at least 4");
  if (arms && *arms < 3) throw EnumerationError("starlike trees need at least 3 arms");
  if (arms && order - 1 < *arms) {
    throw EnumerationError("infeasible: order " + std::to_string(order) + " cannot carry " +
                           std::to_string(*arms) + " arms");
  }
  std::vector<FamilySpec> out;
  std::vector<Arm> current;
  const int lo = arms ? *arms : 3;
  const int hi = arms ? *arms : order - 1;
  for (int t = lo; t <= hi; ++t) partitions(order - 1, t, 1, current, out);
  return out;
}

Census census(int order) {
  check_order(order);
  Census c;
  c.order = order;
  for_each_free_tree(order, [&](const LevelSequence& seq) {
    const Graph g = tree_from_level_sequence(seq);
    const TransmissionProfile prof = transmission_profile(g);
    ++c.trees;
    ++c.complexity_histogram[prof.complexity];
    if (prof.is_irregular) {
      ++c.irregular;
      c.irregular_witnesses.push_back(g.edges());
    }
  });
  return c;
}

}  // namespace wiener
