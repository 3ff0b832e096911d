#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "nctb/balls.hpp"
#include "nctb/error.hpp"
#include "nctb/generators.hpp"
#include "nctb/graph.hpp"
#include "nctb/reductions.hpp"
#include "nctb/structure.hpp"
#include "oracles.hpp"

using namespace nctb;

namespace {

oracle::Set to_set(const VertexSet &s) {
  auto m = s.members();
  return oracle::Set(m.begin(), m.end());
}

std::vector<Graph> small_corpus() {
  std::vector<Graph> out = {path_graph(1), path_graph(2), path_graph(5), cycle_graph(3), cycle_graph(6),
                            cycle_graph(7), star(4), complete_bipartite(2, 3), octahedron(3)};
  for (std::uint64_t s = 1; s <= 12; ++s) {
    out.push_back(random_tree(3 + static_cast<int>(s % 8), s));
    out.push_back(random_cactus(4 + static_cast<int>(s % 8), s));
    out.push_back(random_interval(3 + static_cast<int>(s % 8), s).graph);
    out.push_back(random_connected(4 + static_cast<int>(s % 7), 30, s));
  }
  return out;
}

Graph relabel(const Graph &g, const std::vector<Vertex> &perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

} // namespace

TEST_CASE("distances agree with Floyd-Warshall") {
  for (const auto &g : small_corpus()) {
    auto d = all_pairs_distances(g);
    auto ref = oracle::floyd(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) REQUIRE(d(u, v) == ref[u][v]);
  }
  CHECK(all_pairs_distances(path_graph(3))(0, 2) == 2);
  CHECK(all_pairs_distances(cycle_graph(6))(0, 3) == 3);
}

TEST_CASE("disconnected input names an unreachable pair") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(all_pairs_distances(g), doctest::Contains("no path between vertices"), ValidationError);
  auto d = all_pairs_distances(g, true);
  CHECK(d(0, 2) == DistanceMatrix::kUnreachable);
  CHECK(d(2, 3) == 1);
}

TEST_CASE("graph construction rejects loops and parallel edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
}

TEST_CASE("balls") {
  auto d6 = all_pairs_distances(cycle_graph(6));
  CHECK(ball(d6, 0, 1) == VertexSet(6, {5, 0, 1}));
  CHECK(ball(d6, 4, 0) == VertexSet(6, {4}));
  CHECK(ball(d6, 2, 9) == VertexSet::full(6));
  CHECK_THROWS_AS(ball(d6, 6, 1), ValidationError);
  CHECK_THROWS_AS(ball(d6, 0, -1), ValidationError);

  auto pre = preprocess_setcover(SetCoverInstance{2, {{0}, {1}, {0, 1}}, 1}, SetCoverFlavor::split);
  auto split = setcover_to_gadget(pre.instance, SetCoverFlavor::split);
  auto ds = all_pairs_distances(split.graph);
  CHECK(ds(split.vertex("w1"), split.vertex("s1")) == 2);
  int um = split.vertex("u" + std::to_string(pre.instance.m() + 1));
  CHECK(ball(ds, um, 1) == VertexSet::full(split.graph.order()));
}

TEST_CASE("ball monotonicity in the radius") {
  for (const auto &g : small_corpus()) {
    auto d = all_pairs_distances(g);
    for (Vertex x = 0; x < g.order(); ++x) {
      for (int r = 0; r < d.eccentricity(x); ++r) REQUIRE(ball(d, x, r).subset_of(ball(d, x, r + 1)));
      REQUIRE(ball(d, x, d.eccentricity(x)) == VertexSet::full(g.order()));
    }
  }
}

TEST_CASE("ball family counts") {
  CHECK(enumerate_balls(cycle_graph(6)).size() == 19);
  CHECK(enumerate_balls(path_graph(2)).size() == 3);
  // Five singletons, four leaf edges and V.
  CHECK(enumerate_balls(star(4)).size() == 10);
}

TEST_CASE("ball family matches brute force and keeps its invariants") {
  for (const auto &g : small_corpus()) {
    auto d = all_pairs_distances(g);
    auto fam = enumerate_balls(d);
    auto ref = oracle::all_balls(g);
    REQUIRE(fam.size() == ref.size());
    std::set<oracle::Set> mine;
    for (const auto &c : fam.classes) mine.insert(to_set(c));
    REQUIRE(mine == std::set<oracle::Set>(ref.begin(), ref.end()));

    REQUIRE(std::is_sorted(fam.classes.begin(), fam.classes.end()));
    int reps = 0, n = g.order();
    for (std::size_t i = 0; i < fam.size(); ++i) {
      REQUIRE(std::is_sorted(fam.reps[i].begin(), fam.reps[i].end()));
      for (const auto &rep : fam.reps[i]) {
        REQUIRE(ball(d, rep.center, rep.radius) == fam.classes[i]);
        REQUIRE(rep.radius <= d.eccentricity(rep.center));
        REQUIRE(fam.classes[i].contains(rep.center));
      }
      reps += static_cast<int>(fam.reps[i].size());
      REQUIRE(fam.find(fam.classes[i]) == static_cast<int>(i));
    }
    int expected = 0;
    for (Vertex x = 0; x < n; ++x) expected += d.eccentricity(x) + 1;
    REQUIRE(reps == expected);
    REQUIRE(static_cast<int>(fam.size()) <= n * std::min(d.diameter() + 1, n));
  }
}

TEST_CASE("twin swaps leave the ball family unchanged up to relabelling") {
  for (const auto &g : small_corpus()) {
    for (const auto &cls : false_twin_classes(g)) {
      if (cls.size() < 2) continue;
      std::vector<Vertex> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[cls[0]], perm[cls[1]]);
      Graph h = relabel(g, perm);
      CHECK(h == g);
      auto a = enumerate_balls(g), b = enumerate_balls(h);
      std::set<std::vector<Vertex>> mapped, direct;
      for (const auto &c : a.classes) {
        std::vector<Vertex> m;
        c.for_each([&](Vertex v) { m.push_back(perm[v]); });
        std::sort(m.begin(), m.end());
        mapped.insert(m);
      }
      for (const auto &c : b.classes) direct.insert(c.members());
      CHECK(mapped == direct);
    }
  }
}

TEST_CASE("diametral pairs") {
  auto p3 = all_pairs_distances(path_graph(3));
  CHECK(diametral_pair(VertexSet(3, {0, 1, 2}), p3) == std::pair<Vertex, Vertex>{0, 2});
  CHECK(diametral_pair(VertexSet(3, {1}), p3) == std::pair<Vertex, Vertex>{1, 1});
  auto c6 = all_pairs_distances(cycle_graph(6));
  CHECK(diametral_pair(ball(c6, 0, 2), c6) == std::pair<Vertex, Vertex>{1, 4});
  CHECK_THROWS_AS(diametral_pair(VertexSet(3), p3), ValidationError);

  for (const auto &g : small_corpus()) {
    auto d = all_pairs_distances(g);
    auto ref = oracle::floyd(g);
    for (const auto &c : enumerate_balls(d).classes) {
      auto m = c.members();
      int diam = 0;
      std::pair<Vertex, Vertex> best{m[0], m[0]};
      for (Vertex u : m)
        for (Vertex v : m)
          if (u <= v && ref[u][v] > diam) diam = ref[u][v], best = {u, v};
      REQUIRE(diametral_pair(c, d) == best);
    }
  }
}

TEST_CASE("intervals between vertices") {
  CHECK(interval_vertices(all_pairs_distances(path_graph(3)), 0, 2) == VertexSet(3, {0, 1, 2}));
  CHECK(interval_vertices(all_pairs_distances(cycle_graph(4)), 0, 2) == VertexSet::full(4));
  CHECK(interval_vertices(all_pairs_distances(cycle_graph(6)), 0, 2) == VertexSet(6, {0, 1, 2}));
}

TEST_CASE("false twins") {
  auto star4 = false_twin_classes(star(4));
  CHECK(star4 == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3, 4}});
  CHECK(false_twin_classes(path_graph(3)) == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
  CHECK(false_twin_classes(cycle_graph(6)).size() == 6);
  for (const auto &g : small_corpus()) {
    std::vector<int> cls_of(g.order());
    auto classes = false_twin_classes(g);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Vertex v : classes[c]) cls_of[v] = static_cast<int>(c);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v)
        REQUIRE((cls_of[u] == cls_of[v]) == (g.neighbors(u) == g.neighbors(v)));
  }
}

TEST_CASE("vertex covers") {
  CHECK(vertex_cover(star(4), CoverMode::exact) == std::vector<Vertex>{0});
  CHECK(vertex_cover(cycle_graph(6), CoverMode::exact).size() == 3);
  auto p3 = vertex_cover(path_graph(3), CoverMode::approx2);
  CHECK(is_vertex_cover(path_graph(3), p3));
  CHECK(p3.size() <= 2);
  for (const auto &g : small_corpus()) {
    int opt = oracle::min_vertex_cover(g);
    auto exact = vertex_cover(g, CoverMode::exact);
    auto approx = vertex_cover(g, CoverMode::approx2);
    REQUIRE(is_vertex_cover(g, exact));
    REQUIRE(is_vertex_cover(g, approx));
    REQUIRE(static_cast<int>(exact.size()) == opt);
    REQUIRE(static_cast<int>(approx.size()) <= 2 * opt);
  }
}

TEST_CASE("hyperbolicity") {
  CHECK(hyperbolicity_doubled(all_pairs_distances(cycle_graph(4))) == 2);
  CHECK(hyperbolicity_doubled(all_pairs_distances(path_graph(3))) == 0);
  for (const auto &g : small_corpus()) {
    auto d = all_pairs_distances(g);
    int h = hyperbolicity_doubled(d);
    REQUIRE(h == oracle::hyperbolicity_doubled(g));
    REQUIRE(hyperbolicity_doubled(d, 3) == h);
    if (is_tree(g)) REQUIRE(h == 0);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.rbegin(), perm.rend(), 0);
    REQUIRE(hyperbolicity_doubled(all_pairs_distances(relabel(g, perm))) == h);
  }
}

TEST_CASE("VC-dimension of balls") {
  CHECK(vc_dimension_of_balls(cycle_graph(6), 5).dimension == 3);
  CHECK(vc_dimension_of_balls(path_graph(2), 5).dimension == 1);
  for (const auto &g : small_corpus()) {
    auto fam = enumerate_balls(g);
    oracle::Family ref;
    for (const auto &c : fam.classes) ref.push_back(to_set(c));
    auto res = vc_dimension(fam.classes, g.order(), g.order());
    REQUIRE(res.dimension == oracle::vc_dimension(ref, g.order()));
    REQUIRE(static_cast<int>(res.witness.size()) == res.dimension);
    // Dropping balls can only lower the dimension.
    std::vector<VertexSet> half;
    for (std::size_t i = 0; i < fam.size(); i += 2) half.push_back(fam.classes[i]);
    REQUIRE(vc_dimension(half, g.order(), g.order()).dimension <= res.dimension);
  }
}

TEST_CASE("Hausdorff distance") {
  auto d = all_pairs_distances(cycle_graph(6));
  CHECK(hausdorff_distance(ball(d, 0, 1), ball(d, 3, 1), d) == 2);
  CHECK(hausdorff_distance(ball(d, 0, 1), ball(d, 0, 1), d) == 0);
  Rng rng(11);
  for (const auto &g : small_corpus()) {
    auto dd = all_pairs_distances(g);
    auto ref = oracle::floyd(g);
    auto fam = enumerate_balls(dd);
    for (int t = 0; t < 20; ++t) {
      int i = rng.between(0, static_cast<int>(fam.size()) - 1), j = rng.between(0, static_cast<int>(fam.size()) - 1);
      REQUIRE(hausdorff_distance(fam.classes[i], fam.classes[j], dd) ==
              oracle::hausdorff(ref, to_set(fam.classes[i]), to_set(fam.classes[j])));
    }
  }
}

TEST_CASE("generators") {
  auto oct = octahedron(3);
  CHECK(oct.order() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  CHECK(cycle_graph(6) == Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  CHECK_THROWS_AS(cycle_graph(2), ValidationError);
  CHECK(complete_bipartite(2, 3).size() == 6);

  for (std::uint64_t s = 1; s <= 30; ++s) {
    CHECK_NOTHROW(CactusStructure(random_cactus(12, s)));
    auto t = random_tree(15, s);
    CHECK(is_tree(t));
    auto ig = random_interval(14, s);
    CHECK_NOTHROW(ig.representation.validate(ig.graph));
    CHECK(ig.graph.connected());
    CHECK(random_connected(10, 25, s).connected());
    CHECK(random_tree(15, s) == t);
  }
  CHECK(!(random_tree(20, 1) == random_tree(20, 2)));
}

TEST_CASE("cactus structure") {
  CactusStructure c(cycle_graph(5));
  CHECK(c.blocks().size() == 1);
  CHECK(c.blocks()[0].is_cycle);
  CHECK_THROWS_AS(CactusStructure(complete_bipartite(2, 3)), ValidationError);
  // Two triangles sharing vertex 0, plus a pendant edge.
  Graph bowtie(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {4, 5}});
  CactusStructure b(bowtie);
  CHECK(b.blocks().size() == 3);
  CHECK(b.is_cut_vertex(0));
  CHECK(b.is_cut_vertex(4));
  CHECK(!b.is_cut_vertex(1));
  CHECK(b.path_of_cycles(1, 5) == VertexSet::full(6));
}
