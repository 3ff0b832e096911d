#pragma once

#include <vector>

#include "nctb/generators.hpp"
#include "nctb/reductions.hpp"

namespace fixture {

using namespace nctb;

// n=2, m=3, t=1 with sets {1}, {2}, {1,2}.
inline SetCoverInstance small_setcover() { return {2, {{0}, {1}, {0, 1}}, 1}; }

// Satisfiable 3-partitioned formula with N=5, M=6 and one satisfying assignment.
inline Partitioned3SatInstance p3sat_5_6() {
  auto L = [](Part p, int i, bool s) { return Literal{p, i, s}; };
  const Part a = Part::alpha, b = Part::beta, c = Part::gamma;
  return {5,
          {{L(a, 1, true), L(b, 2, false), L(c, 3, true)},
           {L(a, 2, true), L(b, 1, true), L(c, 4, false)},
           {L(a, 3, false), L(b, 3, true), L(c, 5, false)},
           {L(a, 4, true), L(b, 4, false), L(c, 1, true)},
           {L(a, 5, false), L(b, 5, true), L(c, 2, true)},
           {L(a, 2, false), L(b, 1, false), L(c, 3, false)}}};
}

inline Assignment p3sat_5_6_assignment() {
  return {{true, false, true, false, true}, {false, true, true, false, false}, {true, true, false, false, true}};
}

// Random 3-partitioned formula with each clause made true by a planted
// assignment.
inline std::pair<Partitioned3SatInstance, Assignment> planted_p3sat(int N, int M, std::uint64_t seed) {
  Rng rng(seed);
  Assignment a(3, std::vector<bool>(N));
  for (auto &row : a)
    for (int i = 0; i < N; ++i) row[i] = rng.chance(1, 2);
  Partitioned3SatInstance inst{N, {}};
  for (int j = 0; j < M; ++j) {
    std::vector<Literal> cl;
    for (int p = 0; p < 3; ++p) cl.push_back({Part(p), rng.between(1, N), rng.chance(1, 2)});
    int p = rng.between(0, 2);
    cl[p].positive = a[p][cl[p].index - 1];
    inst.clauses.push_back(cl);
  }
  return {inst, a};
}

// Twin-class graphs for the kernel: cover {0,1}, optionally adjacent, a class
// of `twins` common neighbours, and at most one private neighbour. Vertex ids
// are shuffled by the seed.
inline Graph planted_twins(std::uint64_t seed) {
  Rng rng(seed);
  int twins = rng.between(6, 10);
  int extra = rng.between(0, 2); // 0: none, 1: private to 0, 2: private to 1
  bool linked = rng.chance(1, 2);
  int n = 2 + twins + (extra ? 1 : 0);
  std::vector<Edge> edges;
  if (linked) edges.push_back({0, 1});
  for (int i = 0; i < twins; ++i) edges.push_back({0, 2 + i}), edges.push_back({1, 2 + i});
  if (extra) edges.push_back({extra - 1, n - 1});
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.between(0, i)]);
  for (auto &[u, v] : edges) u = perm[u], v = perm[v];
  return Graph(n, edges);
}

} // namespace fixture
