#include <doctest.h>

#include "nctb/balls.hpp"
#include "nctb/concept.hpp"
#include "nctb/error.hpp"
#include "nctb/generators.hpp"
#include "nctb/solver.hpp"
#include "oracles.hpp"

using namespace nctb;

namespace {

ConceptClass balls_of(const Graph &g, bool components = false) {
  auto fam = enumerate_balls(all_pairs_distances(g, components));
  return balls_as_concept_class(fam, g.order());
}

oracle::Family to_family(const ConceptClass &cc) {
  oracle::Family out;
  for (const auto &c : cc.concepts) {
    auto m = c.members();
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> gs = {path_graph(3), path_graph(5), cycle_graph(4), cycle_graph(5), star(4),
                           complete_bipartite(2, 3), octahedron(2)};
  for (std::uint64_t s = 1; s <= 8; ++s) {
    gs.push_back(random_tree(3 + static_cast<int>(s % 5), s));
    gs.push_back(random_connected(4 + static_cast<int>(s % 4), 30, s));
    gs.push_back(random_interval(3 + static_cast<int>(s % 5), s).graph);
  }
  return gs;
}

} // namespace

TEST_CASE("witnesses verify and the decision is monotone in k") {
  for (const auto &g : small_graphs()) {
    auto cc = balls_of(g);
    for (bool pos : {true, false}) {
      auto res = nctd_exact(cc, pos, 8);
      REQUIRE(res.status == SolveStatus::optimal);
      REQUIRE(res.witness);
      auto rep = verify(cc, *res.witness, pos);
      REQUIRE(rep.ok);
      REQUIRE(rep.size <= res.k);
      if (res.k > 1) REQUIRE(!*nctd_decision(cc, res.k - 1, pos).answer);
      REQUIRE(*nctd_decision(cc, res.k + 1, pos).answer);
    }
  }
}

TEST_CASE("signed never exceeds positive-only") {
  for (const auto &g : small_graphs()) {
    auto cc = balls_of(g);
    REQUIRE(nctd_exact(cc, false, 8).k <= nctd_exact(cc, true, 8).k);
  }
}

TEST_CASE("trees and interval graphs need at most two positives") {
  for (std::uint64_t s = 1; s <= 12; ++s) {
    REQUIRE(nctd_exact(balls_of(random_tree(2 + static_cast<int>(s % 6), s)), true, 4).k <= 2);
    REQUIRE(nctd_exact(balls_of(random_interval(2 + static_cast<int>(s % 6), s).graph), true, 4).k <= 2);
  }
}

TEST_CASE("solver matches exhaustive search on tiny classes") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    ConceptClass cc;
    cc.ground = 4;
    std::vector<bool> used(16, false);
    int want = rng.between(2, 7);
    while (static_cast<int>(cc.size()) < want) {
      int mask = rng.between(0, 15);
      if (used[mask]) continue;
      used[mask] = true;
      VertexSet c(4);
      for (int v = 0; v < 4; ++v)
        if (mask >> v & 1) c.insert(v);
      cc.concepts.push_back(c);
    }
    auto fam = to_family(cc);
    for (bool pos : {true, false})
      for (int k = 0; k <= 3; ++k) {
        auto d = nctd_decision(cc, k, pos);
        REQUIRE(d.answer);
        REQUIRE(*d.answer == oracle::nctm_exists(fam, 4, k, pos));
      }
  }
}

TEST_CASE("deterministic witnesses") {
  auto cc = balls_of(cycle_graph(7));
  auto a = nctd_exact(cc, false, 4), b = nctd_exact(cc, false, 4);
  CHECK(a.k == b.k);
  CHECK(a.nodes == b.nodes);
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("six-cycle values") {
  auto cc = balls_of(cycle_graph(6));
  CHECK(cc.size() == 19);
  auto s = nctd_exact(cc, false, 4);
  CHECK(s.k == 2);
  CHECK(!*nctd_decision(cc, 1, false).answer);
  // Only the antipode separates B_2(x) = V - {x+3} from V, so T(V) = V.
  for (int k = 2; k <= 5; ++k) CHECK(!*nctd_decision(cc, k, true).answer);
  auto p = nctd_decision(cc, 6, true);
  CHECK(*p.answer);
  CHECK(verify(cc, *p.witness, true).ok);
}

TEST_CASE("small fixed graphs") {
  CHECK(!*nctd_decision(balls_of(cycle_graph(4)), 1, true).answer);
  CHECK(!*nctd_decision(balls_of(path_graph(2)), 1, true).answer);
  CHECK(*nctd_decision(balls_of(edgeless(3), true), 1, true).answer);
  CHECK(nctd_exact(balls_of(edgeless(3), true), true, 3).k == 1);
  auto oct = balls_of(octahedron(3));
  CHECK(!*nctd_decision(oct, 5, true).answer);
}

TEST_CASE("budget") {
  auto cc = balls_of(cycle_graph(8));
  auto d = nctd_decision(cc, 2, false, 3);
  CHECK(!d.answer);
  CHECK(!d.witness);
  auto e = nctd_exact(cc, false, 4, 3);
  CHECK(e.status == SolveStatus::budget_exceeded);
  CHECK(std::string(to_string(e.status)) == "budget-exceeded");
  auto low = nctd_exact(balls_of(cycle_graph(6)), false, 1);
  CHECK(low.status == SolveStatus::above_kmax);
  CHECK(!low.witness);
  CHECK_THROWS_AS(nctd_decision(cc, -1, false), ValidationError);
}

TEST_CASE("solver matches exhaustive search on small ball classes") {
  std::vector<Graph> gs = {path_graph(4), cycle_graph(4), cycle_graph(5), star(3), complete_bipartite(2, 3)};
  for (std::uint64_t s = 1; s <= 6; ++s) gs.push_back(random_connected(5, 40, s));
  for (const auto &g : gs) {
    auto cc = balls_of(g);
    auto fam = to_family(cc);
    for (bool pos : {true, false})
      for (int k = 1; k <= 3; ++k) REQUIRE(*nctd_decision(cc, k, pos).answer == oracle::nctm_exists(fam, g.order(), k, pos));
  }
}
