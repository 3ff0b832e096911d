#include "nctb/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "nctb/error.hpp"

namespace nctb {

int Rng::between(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

namespace {

void require(bool ok, const char *what, int n) {
  if (!ok) throw ValidationError(std::string("invalid size for ") + what + ": " + std::to_string(n));
}

} // namespace

Graph path_graph(int n) {
  require(n >= 1, "path", n);
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle", n);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite", std::min(a, b));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph octahedron(int n) {
  require(n >= 2, "octahedron", n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 2 * n; ++u)
    for (Vertex v = u + 1; v < 2 * n; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  return Graph(2 * n, edges);
}

Graph edgeless(int n) {
  require(n >= 1, "edgeless graph", n);
  return Graph(n, {});
}

Graph star(int leaves) {
  require(leaves >= 1, "star", leaves);
  return complete_bipartite(1, leaves);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree", n);
  Rng rng(seed);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(label[i], label[rng.between(0, i)]);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(label[v], label[rng.between(0, v - 1)]);
  return Graph(n, edges);
}

Graph random_cactus(int n, std::uint64_t seed) {
  require(n >= 1, "cactus", n);
  Rng rng(seed);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    Vertex anchor = rng.between(0, count - 1);
    int room = n - count;
    if (room >= 2 && rng.chance(2, 3)) {
      int len = rng.between(3, std::min(8, room + 1));
      Vertex prev = anchor;
      for (int i = 1; i < len; ++i) {
        edges.emplace_back(prev, count);
        prev = count++;
      }
      edges.emplace_back(prev, anchor);
    } else {
      edges.emplace_back(anchor, count++);
    }
  }
  return Graph(n, edges);
}

IntervalGraph random_interval(int n, std::uint64_t seed) {
  require(n >= 1, "interval graph", n);
  Rng rng(seed);
  // Integer model with strictly increasing starts, each start before the
  // running maximum end so the intersection graph stays connected.
  std::vector<int> s(n), e(n);
  int max_end = 0;
  for (Vertex v = 0; v < n; ++v) {
    s[v] = v == 0 ? 0 : rng.between(s[v - 1] + 1, max_end - 1);
    e[v] = s[v] + 2 + rng.between(0, 12);
    max_end = std::max(max_end, e[v]);
  }
  // Rank-compress to distinct endpoints; at equal values starts sort before
  // ends, which keeps touching segments intersecting.
  std::vector<std::tuple<int, int, Vertex>> points;
  for (Vertex v = 0; v < n; ++v) {
    points.emplace_back(s[v], 0, v);
    points.emplace_back(e[v], 1, v);
  }
  std::sort(points.begin(), points.end());
  IntervalRepresentation rep;
  rep.start.assign(n, 0);
  rep.end.assign(n, 0);
  for (std::size_t rank = 0; rank < points.size(); ++rank) {
    auto [value, kind, v] = points[rank];
    (kind == 0 ? rep.start : rep.end)[v] = static_cast<double>(rank);
  }
  // Shuffle vertex ids so the left-to-right order is not the id order.
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);
  IntervalRepresentation shuffled;
  shuffled.start.assign(n, 0);
  shuffled.end.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    shuffled.start[perm[v]] = rep.start[v];
    shuffled.end[perm[v]] = rep.end[v];
  }
  return IntervalGraph{shuffled.intersection_graph(), shuffled};
}

Graph random_connected(int n, int extra_percent, std::uint64_t seed) {
  require(n >= 1, "random graph", n);
  Graph tree = random_tree(n, seed);
  Rng rng(seed ^ 0x5bd1e995ULL);
  auto edges = tree.edges();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && rng.chance(extra_percent, 100)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

} // namespace nctb
