#pragma once

#include <utility>
#include <vector>

#include "nctb/vertex_set.hpp"

namespace nctb {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Connectivity is not enforced here; metric operations check it.
class Graph {
public:
  Graph() = default;
  /// Throws ValidationError on loops, duplicate edges or out-of-range ids.
  Graph(int n, const std::vector<Edge> &edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  VertexSet open_neighborhood(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  bool connected() const;
  /// Some pair (a, b) with no path between them, when disconnected.
  std::pair<Vertex, Vertex> unreachable_pair() const;

  /// Graph minus vertex v; ids above v shift down by one.
  Graph without(Vertex v) const;

  friend bool operator==(const Graph &a, const Graph &b) { return a.adj_ == b.adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

/// All-pairs hop distances. Unreachable pairs hold `kUnreachable`.
class DistanceMatrix {
public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int &at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  /// Largest finite distance from x.
  int eccentricity(Vertex x) const;
  int diameter() const;

private:
  int n_ = 0;
  std::vector<int> d_;
};

/// BFS from every vertex. Throws ValidationError naming an unreachable pair
/// unless `allow_disconnected` is set.
DistanceMatrix all_pairs_distances(const Graph &g, bool allow_disconnected = false);

/// B_r(x). Radii beyond the eccentricity give x's whole component.
VertexSet ball(const DistanceMatrix &d, Vertex x, int r);
VertexSet ball(const Graph &g, Vertex x, int r);

/// { w : d(u,w) + d(w,v) = d(u,v) }.
VertexSet interval_vertices(const DistanceMatrix &d, Vertex u, Vertex v);

/// Largest pairwise distance inside `members`.
int set_diameter(const VertexSet &members, const DistanceMatrix &d);

/// Lexicographically least (u, v), u <= v, realizing the diameter of `members`.
std::pair<Vertex, Vertex> diametral_pair(const VertexSet &members, const DistanceMatrix &d);

} // namespace nctb
