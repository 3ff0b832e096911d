#include "nctb/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "nctb/error.hpp"

namespace nctb {

std::vector<std::vector<Vertex>> false_twin_classes(const Graph &g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighborhood;
  for (Vertex v = 0; v < g.order(); ++v) by_neighborhood[g.neighbors(v)].push_back(v);
  std::vector<std::vector<Vertex>> classes;
  for (auto &[nbhd, members] : by_neighborhood) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return classes;
}

bool is_vertex_cover(const Graph &g, const std::vector<Vertex> &cover) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.order()) return false;
    in[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

namespace {

std::vector<Vertex> approx_cover(const Graph &g) {
  std::vector<bool> in(g.order(), false);
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) in[u] = in[v] = true;
  // Drop redundant picks, highest id first.
  for (Vertex v = g.order() - 1; v >= 0; --v) {
    if (!in[v]) continue;
    bool redundant = std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return in[w]; });
    if (redundant) in[v] = false;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

// Decides whether the edges among `alive` can be covered with `budget`
// vertices, appending the chosen vertices to `chosen`.
bool cover_within(const Graph &g, VertexSet alive, int budget, std::vector<Vertex> &chosen) {
  // Degree-one rule: take the neighbor.
  while (true) {
    Vertex pick = -1, best = -1;
    int best_deg = 0;
    for (Vertex v = alive.first(); v >= 0; v = alive.next(v + 1)) {
      int deg = 0;
      Vertex last = -1;
      for (Vertex w : g.neighbors(v))
        if (alive.contains(w)) {
          ++deg;
          last = w;
        }
      if (deg == 1 && pick < 0) pick = last;
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    if (best_deg == 0) return true;
    if (budget == 0) return false;
    if (pick >= 0) {
      chosen.push_back(pick);
      alive.erase(pick);
      --budget;
      continue;
    }
    std::size_t mark = chosen.size();
    VertexSet without_best = alive;
    without_best.erase(best);
    chosen.push_back(best);
    if (cover_within(g, without_best, budget - 1, chosen)) return true;
    chosen.resize(mark);
    std::vector<Vertex> nbrs;
    for (Vertex w : g.neighbors(best))
      if (alive.contains(w)) nbrs.push_back(w);
    if (static_cast<int>(nbrs.size()) > budget) return false;
    VertexSet rest = alive;
    rest.erase(best);
    for (Vertex w : nbrs) {
      rest.erase(w);
      chosen.push_back(w);
    }
    if (cover_within(g, rest, budget - static_cast<int>(nbrs.size()), chosen)) return true;
    chosen.resize(mark);
    return false;
  }
}

} // namespace

std::vector<Vertex> vertex_cover(const Graph &g, CoverMode mode) {
  if (mode == CoverMode::approx2) return approx_cover(g);
  // Any matching size is a lower bound on the minimum cover.
  std::vector<bool> used(g.order(), false);
  int matching = 0;
  for (auto [u, v] : g.edges())
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      ++matching;
    }
  for (int k = matching; k <= kExactCoverCap; ++k) {
    std::vector<Vertex> chosen;
    if (cover_within(g, g.all_vertices(), k, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  throw BudgetExceeded("minimum vertex cover exceeds the exact-mode cap of " + std::to_string(kExactCoverCap));
}

int hyperbolicity_doubled(const DistanceMatrix &d, int threads) {
  const int n = d.order();
  if (n < 4) return 0;
  threads = std::max(1, threads);
  std::vector<int> partial(threads, 0);
  auto sweep = [&](int worker) {
    int best = 0;
    for (Vertex i = worker; i < n; i += threads)
      for (Vertex j = i + 1; j < n; ++j)
        for (Vertex k = j + 1; k < n; ++k)
          for (Vertex l = k + 1; l < n; ++l) {
            int s[3] = {d(i, j) + d(k, l), d(i, k) + d(j, l), d(i, l) + d(j, k)};
            std::sort(s, s + 3);
            best = std::max(best, s[2] - s[1]);
          }
    partial[worker] = best;
  };
  if (threads == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(sweep, w);
    for (auto &t : pool) t.join();
  }
  return *std::max_element(partial.begin(), partial.end());
}

VcDimensionResult vc_dimension(const std::vector<VertexSet> &family, int universe, int dmax) {
  VcDimensionResult result;
  if (family.empty()) return result;
  auto shattered = [&](const std::vector<Vertex> &s) {
    std::vector<bool> seen(std::size_t{1} << s.size(), false);
    std::size_t hits = 0;
    for (const auto &c : family) {
      std::size_t trace = 0;
      for (std::size_t b = 0; b < s.size(); ++b)
        if (c.contains(s[b])) trace |= std::size_t{1} << b;
      if (!seen[trace]) {
        seen[trace] = true;
        if (++hits == seen.size()) return true;
      }
    }
    return false;
  };
  std::vector<std::vector<Vertex>> level{{}};
  for (int size = 1; size <= dmax; ++size) {
    std::set<std::vector<Vertex>> previous(level.begin(), level.end());
    std::vector<std::vector<Vertex>> next;
    for (const auto &base : level) {
      Vertex from = base.empty() ? 0 : base.back() + 1;
      for (Vertex v = from; v < universe; ++v) {
        auto cand = base;
        cand.push_back(v);
        // Every subset of a shattered set is shattered.
        bool closed = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
          auto sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          closed = previous.count(sub) > 0;
        }
        if (closed && shattered(cand)) next.push_back(std::move(cand));
      }
    }
    if (next.empty()) return result;
    result.dimension = size;
    result.witness = next.front();
    level = std::move(next);
  }
  result.possibly_larger = true;
  return result;
}

VcDimensionResult vc_dimension_of_balls(const Graph &g, int dmax) {
  auto family = enumerate_balls(g);
  return vc_dimension(family.classes, g.order(), dmax);
}

void IntervalRepresentation::validate(const Graph &g) const {
  if (order() != g.order() || end.size() != start.size())
    throw ValidationError("interval representation has " + std::to_string(order()) + " segments for a graph on " +
                          std::to_string(g.order()) + " vertices");
  std::vector<double> ends;
  for (Vertex v = 0; v < order(); ++v) {
    if (start[v] > end[v]) throw ValidationError("segment of vertex " + std::to_string(v) + " has start > end");
    ends.push_back(start[v]);
    ends.push_back(end[v]);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
    throw ValidationError("interval endpoints are not pairwise distinct");
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v) {
      bool meet = std::max(start[u], start[v]) <= std::min(end[u], end[v]);
      if (meet != g.adjacent(u, v))
        throw ValidationError("interval representation mismatch at pair " + std::to_string(u) + " " +
                              std::to_string(v));
    }
}

Graph IntervalRepresentation::intersection_graph() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (std::max(start[u], start[v]) <= std::min(end[u], end[v])) edges.emplace_back(u, v);
  return Graph(order(), edges);
}

bool is_tree(const Graph &g) { return g.order() >= 1 && g.size() == g.order() - 1 && g.connected(); }

CactusStructure::CactusStructure(const Graph &g)
    : n_(g.order()), cut_(g.order(), false), blocks_of_(g.order()), cut_node_(g.order(), -1) {
  if (!g.connected()) throw ValidationError("cactus must be connected");
  // Tarjan's biconnected components over an edge stack.
  std::vector<int> disc(n_, -1), low(n_, 0);
  std::vector<Edge> stack;
  int timer = 0;
  std::vector<std::vector<Edge>> raw_blocks;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent >= 0 || children > 1) cut_[u] = true;
          std::vector<Edge> block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == Edge{u, w}) break;
          }
          raw_blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        low[u] = std::min(low[u], disc[w]);
        stack.emplace_back(u, w);
      }
    }
  };
  if (n_ > 0) dfs(0, -1);

  for (auto &edges : raw_blocks) {
    Block block;
    block.members = VertexSet(n_);
    std::map<Vertex, std::vector<Vertex>> local;
    for (auto [a, b] : edges) {
      block.members.insert(a);
      block.members.insert(b);
      local[a].push_back(b);
      local[b].push_back(a);
    }
    if (edges.size() == 1) {
      block.vertices = {std::min(edges[0].first, edges[0].second), std::max(edges[0].first, edges[0].second)};
    } else {
      bool cycle = static_cast<int>(edges.size()) == block.members.count();
      for (auto &[v, nb] : local) cycle = cycle && nb.size() == 2;
      if (!cycle)
        throw ValidationError("not a cactus: block containing vertex " + std::to_string(block.members.first()) +
                              " is neither a cycle nor an edge");
      block.is_cycle = true;
      Vertex start = block.members.first(), prev = -1, cur = start;
      do {
        block.vertices.push_back(cur);
        const auto &nb = local[cur];
        Vertex nxt = (prev < 0) ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
        prev = cur;
        cur = nxt;
      } while (cur != start);
    }
    blocks_.push_back(std::move(block));
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block &a, const Block &b) { return a.members < b.members; });
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
    blocks_[b].members.for_each([&](Vertex v) { blocks_of_[v].push_back(b); });

  int nodes = static_cast<int>(blocks_.size());
  for (Vertex v = 0; v < n_; ++v)
    if (cut_[v]) cut_node_[v] = nodes++;
  tree_.assign(nodes, {});
  for (Vertex v = 0; v < n_; ++v)
    if (cut_[v])
      for (int b : blocks_of_[v]) {
        tree_[b].push_back(cut_node_[v]);
        tree_[cut_node_[v]].push_back(b);
      }
}

int CactusStructure::node_of(Vertex v) const {
  if (cut_[v]) return cut_node_[v];
  return blocks_of_[v].empty() ? -1 : blocks_of_[v].front();
}

std::vector<int> CactusStructure::path_blocks(Vertex u, Vertex v) const {
  int src = node_of(u), dst = node_of(v);
  if (src < 0 || dst < 0) return {};
  std::vector<int> parent(tree_.size(), -2);
  std::deque<int> queue{src};
  parent[src] = -1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    if (a == dst) break;
    for (int b : tree_[a])
      if (parent[b] == -2) {
        parent[b] = a;
        queue.push_back(b);
      }
  }
  std::vector<int> out;
  for (int a = dst; a >= 0; a = parent[a])
    if (a < static_cast<int>(blocks_.size())) out.push_back(a);
  std::reverse(out.begin(), out.end());
  return out;
}

VertexSet CactusStructure::path_of_cycles(Vertex u, Vertex v) const {
  VertexSet out(n_);
  for (int b : path_blocks(u, v)) out |= blocks_[b].members;
  out.insert(u);
  out.insert(v);
  return out;
}

} // namespace nctb
