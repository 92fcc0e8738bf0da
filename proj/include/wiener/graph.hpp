#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiener {

using Vertex = std::int32_t;
using Transmission = std::int64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrc {
  kEmpty,
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
  kNotAnEdge,
  kNoEdges,
  kNotATree,
  kTooLarge,
  kMalformedInput,
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

// Undirected, simple, connected graph on vertices 0..n-1. Adjacency lists are
// kept sorted. Every constructor validates, so a Graph value is always a
// legal input for the metric functions below.
class Graph {
 public:
  // Single isolated vertex.
  Graph();
  Graph(Vertex order, std::span<const Edge> edges);

  Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_tree() const noexcept { return edge_count_ + 1 == adj_.size(); }

  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Materialized all-pairs hop distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Vertex n)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  Vertex order() const noexcept { return n_; }
  std::int32_t operator()(Vertex u, Vertex v) const {
    return data_[index(u, v)];
  }
  std::span<const std::int32_t> row(Vertex u) const {
    return {data_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }
  std::span<std::int32_t> row(Vertex u) {
    return {data_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  Vertex n_;
  std::vector<std::int32_t> data_;
};

inline constexpr Vertex kMaxMaterializedOrder = 4096;

// Hop distances from `source` into `dist` (resized to n).
void bfs_distances(const Graph& g, Vertex source, std::vector<std::int32_t>& dist);

// Throws GraphErrc::kTooLarge above kMaxMaterializedOrder; callers needing
// only sums should use transmission_profile, which streams.
DistanceMatrix all_distances(const Graph& g);

struct TransmissionProfile {
  std::vector<Transmission> transmissions;
  Transmission wiener = 0;
  std::size_t complexity = 0;
  std::vector<Transmission> transmission_set;
  std::vector<Edge> collisions;  // vertex pairs u < v with equal transmission
  bool is_irregular = false;
  bool is_regular = false;
};

TransmissionProfile transmission_profile(const Graph& g);

// Derives the invariants from a transmission vector computed elsewhere.
TransmissionProfile profile_from_transmissions(std::vector<Transmission> transmissions);

struct EdgeSplit {
  Edge edge;
  std::int64_t n_u = 0;  // strictly closer to edge.u
  std::int64_t n_v = 0;  // strictly closer to edge.v
  std::int64_t equidistant = 0;
};

EdgeSplit edge_split(const Graph& g, Vertex u, Vertex v);

// Vertices are the edges of g in the order of g.edges().
Graph line_graph(const Graph& g);

// Necessary-condition filters for transmission irregular trees. Either flag
// being set certifies that the tree is not transmission irregular.
struct TreeFilters {
  std::optional<Edge> equal_split;          // an edge with n_u == n_v
  std::vector<Edge> unit_split_edges;       // edges with |n_u - n_v| == 1

  bool has_equal_split() const noexcept { return equal_split.has_value(); }
  bool has_two_unit_splits() const noexcept { return unit_split_edges.size() >= 2; }
  bool excludes_irregular() const noexcept {
    return has_equal_split() || has_two_unit_splits();
  }
};

TreeFilters tree_filters(const Graph& g);

// Edge-list text: "n m" then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace wiener
