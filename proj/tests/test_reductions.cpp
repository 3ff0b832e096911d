#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "nctb/balls.hpp"
#include "nctb/error.hpp"
#include "nctb/reductions.hpp"
#include "nctb/solver.hpp"
#include "nctb/structure.hpp"
#include "oracles.hpp"

using namespace nctb;

namespace {

ConceptClass gadget_class(const ReductionOutput &out) {
  return balls_as_concept_class(enumerate_balls(out.graph), out.graph.order());
}

// Every instance on n elements with m sets (each a subset of [n], repeats
// allowed, sets listed in non-decreasing mask order) covering all elements.
std::vector<SetCoverInstance> all_instances(int n, int m, int t) {
  std::vector<SetCoverInstance> out;
  std::vector<int> masks;
  std::function<void(int)> go = [&](int lo) {
    if (static_cast<int>(masks.size()) == m) {
      SetCoverInstance inst{n, {}, t};
      int covered = 0;
      for (int mask : masks) {
        std::vector<int> s;
        for (int e = 0; e < n; ++e)
          if (mask >> e & 1) s.push_back(e);
        inst.sets.push_back(s);
        covered |= mask;
      }
      if (covered == (1 << n) - 1) out.push_back(inst);
      return;
    }
    for (int mask = lo; mask < (1 << n); ++mask) {
      masks.push_back(mask);
      go(mask);
      masks.pop_back();
    }
  };
  go(0);
  return out;
}

// Smallest cover as set indices, by brute force.
std::vector<int> some_min_cover(const SetCoverInstance &inst) {
  for (int size = 0; size <= inst.m(); ++size)
    for (std::uint32_t s = 0; s < (1u << inst.m()); ++s) {
      if (__builtin_popcount(s) != size) continue;
      std::vector<int> chosen;
      for (int j = 0; j < inst.m(); ++j)
        if (s >> j & 1) chosen.push_back(j);
      if (inst.is_cover(chosen)) return chosen;
    }
  return {};
}

} // namespace

TEST_CASE("preprocessing") {
  auto pre = preprocess_setcover(fixture::small_setcover(), SetCoverFlavor::split);
  // Element 1 misses only set 2, element 2 only set 1.
  CHECK(pre.instance.n == 2);
  CHECK(pre.instance.m() == 5);
  CHECK(pre.set_origin == std::vector<int>{0, 1, 2, 1, 0});
  for (int e = 0; e < pre.instance.n; ++e) {
    int misses = 0;
    for (const auto &s : pre.instance.sets) misses += std::find(s.begin(), s.end(), e) == s.end();
    CHECK(misses >= 2);
  }
  auto all = preprocess_setcover({2, {{0, 1}, {0}, {0}}, 1}, true);
  CHECK(all.removed_elements == std::vector<int>{0});
  CHECK(all.element_origin == std::vector<int>{1});
  CHECK(all.instance.m() > all.instance.n);
  CHECK_THROWS_AS(preprocess_setcover({2, {{0}}, 1}, false), ValidationError);
  CHECK_THROWS_AS(setcover_to_gadget(fixture::small_setcover(), SetCoverFlavor::split), ValidationError);
}

TEST_CASE("set cover gadget shapes") {
  auto pre = preprocess_setcover(fixture::small_setcover(), SetCoverFlavor::split).instance;
  int n = pre.n, m = pre.m();
  auto split = setcover_to_gadget(pre, SetCoverFlavor::split);
  CHECK(split.graph.order() == n + 3 * m + 1);
  CHECK(split.k == m + pre.t);
  Vertex um = split.vertex("u" + std::to_string(m + 1));
  CHECK(split.graph.degree(um) == split.graph.order() - 1);
  // v_i ~ s_j exactly when element i is not in set j.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      bool in = std::find(pre.sets[j].begin(), pre.sets[j].end(), i) != pre.sets[j].end();
      CHECK(split.graph.adjacent(split.vertex("v" + std::to_string(i + 1)), split.vertex("s" + std::to_string(j + 1))) ==
            !in);
    }
  // Split gadget with n=2 and m=3: 12 vertices.
  SetCoverInstance tiny{2, {{0}, {1}, {}}, 1};
  auto p = preprocess_setcover(tiny, SetCoverFlavor::split).instance;
  CHECK(p.m() == 3);
  CHECK(setcover_to_gadget(p, SetCoverFlavor::split).graph.order() == 12);

  auto co = preprocess_setcover(fixture::small_setcover(), SetCoverFlavor::cobipartite).instance;
  auto cob = setcover_to_gadget(co, SetCoverFlavor::cobipartite);
  CHECK(cob.k == 2 * co.m() + co.t + 1);
  CHECK(cob.roles.back() == "v*");
  auto bip = setcover_to_gadget(co, SetCoverFlavor::bipartite);
  CHECK(all_pairs_distances(bip.graph).diameter() == 3);
  CHECK(bip.roles.back() == "z");
  CHECK_THROWS_AS(bip.vertex("nobody"), ValidationError);
  CHECK(parse_flavor("cobipartite") == SetCoverFlavor::cobipartite);
  CHECK_THROWS_AS(parse_flavor("tripartite"), ValidationError);
}

TEST_CASE("forward maps verify within budget for every flavor") {
  std::vector<SetCoverInstance> insts = {fixture::small_setcover(), {3, {{0, 1}, {2}, {1, 2}, {0}}, 2},
                                         {2, {{0}, {1}, {}}, 2}, {3, {{0, 1, 2}, {0}, {1}, {2}}, 1}};
  for (const auto &raw : insts)
    for (auto flavor : {SetCoverFlavor::split, SetCoverFlavor::cobipartite, SetCoverFlavor::bipartite}) {
      auto pre = preprocess_setcover(raw, flavor).instance;
      auto cover = some_min_cover(pre);
      REQUIRE(static_cast<int>(cover.size()) <= pre.t);
      auto out = setcover_to_gadget(pre, flavor);
      auto tm = setcover_forward_map(pre, cover, flavor);
      auto rep = verify(gadget_class(out), tm, true);
      INFO(to_string(flavor));
      REQUIRE(rep.ok);
      REQUIRE(rep.size <= out.k);
    }
  auto pre = preprocess_setcover(fixture::small_setcover(), SetCoverFlavor::split).instance;
  CHECK_THROWS_AS(setcover_forward_map(pre, {0}, SetCoverFlavor::split), ValidationError);
  CHECK_THROWS_AS(setcover_forward_map(pre, {0, 1}, SetCoverFlavor::split), ValidationError);
}

TEST_CASE("split gadget: cover within t iff the decision says yes") {
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int t = 1; t <= 2; ++t)
        for (const auto &raw : all_instances(n, m, t)) {
          auto pre = preprocess_setcover(raw, SetCoverFlavor::split).instance;
          auto out = setcover_to_gadget(pre, SetCoverFlavor::split);
          auto cc = gadget_class(out);
          bool small_cover = oracle::min_set_cover(raw.n, raw.sets) <= t;
          auto d = nctd_decision(cc, out.k, true);
          REQUIRE(d.answer);
          REQUIRE(*d.answer == small_cover);
          if (*d.answer) {
            // Backward direction: T(V) holds W and its S-part covers.
            auto fam = enumerate_balls(out.graph);
            int whole = fam.find(out.graph.all_vertices());
            REQUIRE(whole >= 0);
            const auto &tv = d.witness->samples[whole].positive;
            std::vector<int> chosen;
            for (int j = 0; j < pre.m(); ++j) {
              REQUIRE(tv.contains(out.vertex("w" + std::to_string(j + 1))));
              if (tv.contains(out.vertex("s" + std::to_string(j + 1)))) chosen.push_back(j);
            }
            REQUIRE(pre.is_cover(chosen));
          }
          ++checked;
        }
  CHECK(checked > 20);
}

TEST_CASE("set representation") {
  CHECK(set_rep(2).p == 2);
  CHECK(set_rep(6).p == 3);
  CHECK(set_rep(1).p == 2);
  auto r = set_rep(6);
  CHECK(set_rep(2)(1) == std::vector<int>{1, 2});
  CHECK(set_rep(2)(3) == std::vector<int>{2, 3});
  CHECK(r(1) == std::vector<int>{1, 2, 3});
  CHECK(r(2) == std::vector<int>{1, 2, 4});
  CHECK(r(5) == std::vector<int>{1, 2, 5});
  std::set<std::vector<int>> seen;
  for (int l = 1; l <= 3 * 6; ++l) {
    REQUIRE(r(l).size() == 3);
    REQUIRE(seen.insert(r(l)).second);
    REQUIRE(r.inverse(r(l)) == l);
  }
  CHECK(r.inverse({4, 5, 6}) == 0);
  CHECK_THROWS_AS(set_rep(0), ValidationError);
}

TEST_CASE("p3sat gadget structure") {
  auto inst = fixture::p3sat_5_6();
  auto out = p3sat_to_gadget(inst);
  CHECK(out.graph.order() == 132);
  CHECK(out.k == 33);
  CHECK(out.cover.size() == 45);
  CHECK(is_vertex_cover(out.graph, out.cover));
  auto d = all_pairs_distances(out.graph);
  CHECK(d.diameter() == 3);
  VertexSet V = out.graph.all_vertices();
  for (int l = 1; l <= 18; ++l) {
    auto u = out.vertex("u" + std::to_string(l)), w = out.vertex("w" + std::to_string(l));
    REQUIRE(ball(d, u, 2) == V - VertexSet(132, {w}));
  }
  for (const char *part : {"alpha", "beta", "gamma"})
    for (int i = 1; i <= 5; ++i) {
      std::string p = part;
      auto c = out.vertex("c^" + p + "_" + std::to_string(i));
      auto t = out.vertex("t^" + p + "_" + std::to_string(2 * i));
      auto f = out.vertex("f^" + p + "_" + std::to_string(2 * i - 1));
      REQUIRE(ball(d, c, 2) == V - VertexSet(132, {t, f}));
    }
  CHECK(ball(d, out.vertex("u19"), 2) == V);
  // t^δ_{2i} and c_j share no V^δ neighbour iff C_j has x^δ_i positively.
  auto r = set_rep(6);
  for (int j = 1; j <= 6; ++j)
    for (const auto &lit : inst.clauses[j - 1]) {
      std::string p = to_string(lit.part);
      auto c = out.vertex("c" + std::to_string(j));
      auto t = out.vertex("t^" + p + "_" + std::to_string(2 * lit.index));
      bool common = false;
      for (int q = 1; q <= 6; ++q) {
        auto v = out.vertex("v^" + p + "_" + std::to_string(q));
        common |= out.graph.adjacent(c, v) && out.graph.adjacent(t, v);
      }
      REQUIRE(common == !lit.positive);
    }
  Partitioned3SatInstance few{5, {{Literal{Part::alpha, 1, true}}}};
  CHECK_THROWS_AS(p3sat_to_gadget(few), ValidationError);
  Partitioned3SatInstance twice{1, {{Literal{Part::alpha, 1, true}, Literal{Part::alpha, 1, false}}}};
  CHECK_THROWS_AS(twice.validate(), ValidationError);
}

TEST_CASE("p3sat forward map and extraction") {
  auto inst = fixture::p3sat_5_6();
  auto a = fixture::p3sat_5_6_assignment();
  REQUIRE(satisfies(inst, a));
  auto out = p3sat_to_gadget(inst);
  auto tm = p3sat_forward_map(inst, a);
  auto rep = verify(gadget_class(out), tm, true);
  CHECK(rep.ok);
  // The radius-1 set of u_{3M+1} has 3M + 14p + 3 elements.
  CHECK(rep.size == 63);
  auto fam = enumerate_balls(out.graph);
  int zi = fam.find(ball(out.graph, out.vertex("z"), 1));
  CHECK(tm.samples[zi].positive == VertexSet(132, {out.vertex("z"), out.vertex("u1")}));
  auto ex = p3sat_extract_assignment(inst, tm, out);
  CHECK(ex.satisfying);
  CHECK(ex.assignment == a);

  auto bad = a;
  bad[0][0] = false; // breaks the first clause
  CHECK(!satisfies(inst, bad));
  CHECK_THROWS_AS(p3sat_forward_map(inst, bad), ValidationError);

  // Dropping both literals of x^alpha_1 from T(V) is malformed.
  auto broken = tm;
  int whole = fam.find(out.graph.all_vertices());
  broken.samples[whole].positive.erase(out.vertex("t^alpha_2"));
  broken.samples[whole].positive.erase(out.vertex("f^alpha_1"));
  CHECK_THROWS_AS(p3sat_extract_assignment(inst, broken, out), InvalidWitness);
}

TEST_CASE("p3sat forward map meets the budget once 14p + 3 <= 3N") {
  auto [inst, a] = fixture::planted_p3sat(20, 21, 7);
  auto out = p3sat_to_gadget(inst);
  auto tm = p3sat_forward_map(inst, a);
  auto rep = verify(gadget_class(out), tm, true);
  CHECK(rep.ok);
  CHECK(rep.size <= out.k);
  CHECK(out.k == 123);
  CHECK(p3sat_extract_assignment(inst, tm, out).satisfying);
}
