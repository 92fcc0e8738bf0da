#include "wiener/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace wiener {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph() : adj_(1) {}

Graph::Graph(Vertex order, std::span<const Edge> edges) {
  if (order < 1) {
    throw GraphError(GraphErrc::kEmpty, "graph must have at least one vertex");
  }
  adj_.resize(static_cast<std::size_t>(order));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw GraphError(GraphErrc::kOutOfRange,
                       "edge " + edge_text(e.u, e.v) + " out of range for n=" +
                           std::to_string(order));
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrc::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < order; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw GraphError(GraphErrc::kDuplicateEdge,
                       "duplicate edge " + edge_text(std::min(v, *dup), std::max(v, *dup)));
    }
  }
  edge_count_ = edges.size();

  // Connectivity.
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != adj_.size()) {
    throw GraphError(GraphErrc::kDisconnected,
                     "graph is disconnected (" + std::to_string(reached) + " of " +
                         std::to_string(adj_.size()) + " vertices reachable from 0)");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void bfs_distances(const Graph& g, Vertex source, std::vector<std::int32_t>& dist) {
  const auto n = static_cast<std::size_t>(g.order());
  dist.assign(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != n) {
    throw GraphError(GraphErrc::kDisconnected, "graph is disconnected");
  }
}

DistanceMatrix all_distances(const Graph& g) {
  if (g.order() > kMaxMaterializedOrder) {
    throw GraphError(GraphErrc::kTooLarge,
                     "distance matrix limited to " + std::to_string(kMaxMaterializedOrder) +
                         " vertices");
  }
  DistanceMatrix d(g.order());
  std::vector<std::int32_t> dist;
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_distances(g, s, dist);
    std::copy(dist.begin(), dist.end(), d.row(s).begin());
  }
  return d;
}

TransmissionProfile profile_from_transmissions(std::vector<Transmission> transmissions) {
  TransmissionProfile p;
  p.transmissions = std::move(transmissions);
  Transmission total = 0;
  for (Transmission t : p.transmissions) total += t;
  p.wiener = total / 2;

  p.transmission_set = p.transmissions;
  std::sort(p.transmission_set.begin(), p.transmission_set.end());
  p.transmission_set.erase(std::unique(p.transmission_set.begin(), p.transmission_set.end()),
                           p.transmission_set.end());
  p.complexity = p.transmission_set.size();

  // Group vertices by value; pairs within a group in ascending order.
  std::map<Transmission, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < static_cast<Vertex>(p.transmissions.size()); ++v) {
    groups[p.transmissions[v]].push_back(v);
  }
  for (const auto& [value, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        p.collisions.push_back({members[i], members[j]});
      }
    }
  }
  std::sort(p.collisions.begin(), p.collisions.end());

  p.is_irregular = p.complexity == p.transmissions.size();
  p.is_regular = p.complexity == 1;
  return p;
}

TransmissionProfile transmission_profile(const Graph& g) {
  std::vector<Transmission> tr(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::int32_t> dist;
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_distances(g, s, dist);
    Transmission sum = 0;
    for (std::int32_t d : dist) sum += d;
    tr[s] = sum;
  }
  return profile_from_transmissions(std::move(tr));
}

EdgeSplit edge_split(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError(GraphErrc::kNotAnEdge, edge_text(u, v) + " is not an edge");
  }
  std::vector<std::int32_t> du, dv;
  bfs_distances(g, u, du);
  bfs_distances(g, v, dv);
  EdgeSplit s{{u, v}, 0, 0, 0};
  for (std::size_t w = 0; w < du.size(); ++w) {
    if (du[w] < dv[w]) {
      ++s.n_u;
    } else if (dv[w] < du[w]) {
      ++s.n_v;
    } else {
      ++s.equidistant;
    }
  }
  return s;
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> es = g.edges();
  if (es.empty()) {
    throw GraphError(GraphErrc::kNoEdges, "line graph of an edgeless graph");
  }
  // Edges incident to each vertex, as indices into es.
  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    incident[es[i].u].push_back(static_cast<Vertex>(i));
    incident[es[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> out;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        out.push_back({std::min(inc[i], inc[j]), std::max(inc[i], inc[j])});
      }
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so no
  // pair is produced twice.
  return Graph(static_cast<Vertex>(es.size()), out);
}

TreeFilters tree_filters(const Graph& g) {
  if (!g.is_tree()) {
    throw GraphError(GraphErrc::kNotATree, "tree filters require a tree");
  }
  TreeFilters f;
  for (const Edge& e : g.edges()) {
    const EdgeSplit s = edge_split(g, e.u, e.v);
    const auto diff = s.n_u - s.n_v;
    if (diff == 0 && !f.equal_split) f.equal_split = e;
    if (diff == 1 || diff == -1) f.unit_split_edges.push_back(e);
  }
  return f;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw GraphError(GraphErrc::kMalformedInput, std::string("edge list: missing ") + what);
  };
  auto parse_pair = [&](long long& a, long long& b, const char* what) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) {
      throw GraphError(GraphErrc::kMalformedInput,
                       std::string("edge list: malformed ") + what + ": '" + line + "'");
    }
  };
  long long n = 0, m = 0;
  next_line("header");
  parse_pair(n, m, "header");
  if (n < 1) throw GraphError(GraphErrc::kEmpty, "edge list: n must be at least 1");
  if (m < 0) throw GraphError(GraphErrc::kMalformedInput, "edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    next_line("edge line");
    parse_pair(u, v, "edge line");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrc::kOutOfRange, "edge list: edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw GraphError(GraphErrc::kMalformedInput, "edge list: more edges than declared");
    }
  }
  return Graph(static_cast<Vertex>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace wiener
