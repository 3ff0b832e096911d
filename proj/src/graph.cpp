#include "nctb/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "nctb/error.hpp"

namespace nctb {

Graph::Graph(int n, const std::vector<Edge> &edges) : adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ValidationError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n));
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto &list = adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw ValidationError("parallel edge " + std::to_string(v) + " " + std::to_string(*dup));
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::open_neighborhood(Vertex v) const { return VertexSet(order(), adj_[v]); }

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = open_neighborhood(v);
  s.insert(v);
  return s;
}

namespace {

std::vector<int> bfs(const Graph &g, Vertex source) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != DistanceMatrix::kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

} // namespace

bool Graph::connected() const { return order() == 0 || unreachable_pair().first < 0; }

std::pair<Vertex, Vertex> Graph::unreachable_pair() const {
  if (order() == 0) return {-1, -1};
  auto dist = bfs(*this, 0);
  for (Vertex v = 0; v < order(); ++v)
    if (dist[v] == DistanceMatrix::kUnreachable) return {0, v};
  return {-1, -1};
}

Graph Graph::without(Vertex v) const {
  std::vector<Edge> kept;
  auto relabel = [v](Vertex w) { return w > v ? w - 1 : w; };
  for (auto [a, b] : edges())
    if (a != v && b != v) kept.emplace_back(relabel(a), relabel(b));
  return Graph(order() - 1, kept);
}

int DistanceMatrix::eccentricity(Vertex x) const {
  int ecc = 0;
  for (Vertex v = 0; v < n_; ++v) ecc = std::max(ecc, (*this)(x, v));
  return ecc;
}

int DistanceMatrix::diameter() const {
  int diam = 0;
  for (Vertex v = 0; v < n_; ++v) diam = std::max(diam, eccentricity(v));
  return diam;
}

DistanceMatrix all_pairs_distances(const Graph &g, bool allow_disconnected) {
  if (!allow_disconnected) {
    auto [a, b] = g.unreachable_pair();
    if (a >= 0)
      throw ValidationError("graph is disconnected: no path between vertices " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs(g, s);
    for (Vertex v = 0; v < g.order(); ++v) d.at(s, v) = row[v];
  }
  return d;
}

VertexSet ball(const DistanceMatrix &d, Vertex x, int r) {
  if (x < 0 || x >= d.order()) throw ValidationError("ball center " + std::to_string(x) + " out of range");
  if (r < 0) throw ValidationError("negative ball radius");
  VertexSet out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    int dv = d(x, v);
    if (dv != DistanceMatrix::kUnreachable && dv <= r) out.insert(v);
  }
  return out;
}

VertexSet ball(const Graph &g, Vertex x, int r) { return ball(all_pairs_distances(g, true), x, r); }

VertexSet interval_vertices(const DistanceMatrix &d, Vertex u, Vertex v) {
  VertexSet out(d.order());
  int duv = d(u, v);
  if (duv == DistanceMatrix::kUnreachable) return out;
  for (Vertex w = 0; w < d.order(); ++w) {
    int a = d(u, w), b = d(w, v);
    if (a != DistanceMatrix::kUnreachable && b != DistanceMatrix::kUnreachable && a + b == duv) out.insert(w);
  }
  return out;
}

int set_diameter(const VertexSet &members, const DistanceMatrix &d) {
  int best = 0;
  auto list = members.members();
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) best = std::max(best, d(list[i], list[j]));
  return best;
}

std::pair<Vertex, Vertex> diametral_pair(const VertexSet &members, const DistanceMatrix &d) {
  auto list = members.members();
  if (list.empty()) throw ValidationError("diametral pair of an empty set");
  std::pair<Vertex, Vertex> best{list[0], list[0]};
  int best_d = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      int dij = d(list[i], list[j]);
      if (dij > best_d) {
        best_d = dij;
        best = {list[i], list[j]};
      }
    }
  return best;
}

} // namespace nctb
