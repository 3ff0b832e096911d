#include "nctb/constructors.hpp"

#include <string>

#include "nctb/error.hpp"
#include "nctb/generators.hpp"

namespace nctb {

namespace {

SignedSample diametral_sample(const VertexSet &members, const DistanceMatrix &d) {
  auto [u, v] = diametral_pair(members, d);
  VertexSet pos(members.universe(), {u, v});
  return SignedSample::positive_only(pos);
}

TeachingMap diametral_map(const BallFamily &family, const DistanceMatrix &d) {
  TeachingMap tm;
  for (const auto &cls : family.classes) tm.samples.push_back(diametral_sample(cls, d));
  return tm;
}

} // namespace

BallMap tree_nctm_plus(const Graph &g) {
  if (!is_tree(g)) throw ValidationError("input is not a tree");
  auto d = all_pairs_distances(g);
  BallMap out{enumerate_balls(d), {}};
  out.map = diametral_map(out.family, d);
  return out;
}

BallMap interval_nctm_plus(const Graph &g, const IntervalRepresentation &rep) {
  rep.validate(g);
  auto d = all_pairs_distances(g);
  BallMap out{enumerate_balls(d), {}};
  const int n = g.order();
  for (std::size_t i = 0; i < out.family.size(); ++i) {
    const auto &cls = out.family.classes[i];
    const auto &rep0 = out.family.canonical(i);
    if (rep0.radius == 0) {
      out.map.samples.push_back(SignedSample::positive_only(VertexSet(n, {rep0.center})));
      continue;
    }
    Vertex u = -1, v = -1;
    cls.for_each([&](Vertex w) {
      if (u < 0 || rep.end[w] < rep.end[u]) u = w;
      if (v < 0 || rep.start[w] > rep.start[v]) v = w;
    });
    // u's segment nests inside every other one; {u} alone would clash with
    // B_0(u), and any second member keeps the inclusion argument intact.
    if (u == v) v = (cls - VertexSet(n, {u})).first();
    out.map.samples.push_back(SignedSample::positive_only(VertexSet(n, {u, v})));
  }
  return out;
}

BallMap cycle_nctm(int n) {
  Graph g = cycle_graph(n);
  auto d = all_pairs_distances(g);
  BallMap out{enumerate_balls(d), {}};
  for (std::size_t i = 0; i < out.family.size(); ++i) {
    SignedSample s(n);
    if (out.family.classes[i].count() < n) {
      // The minimal representative spans the arc x-r .. x+r with 2r+1 < n.
      auto [x, r] = out.family.canonical(i);
      s.positive.insert(((x - r) % n + n) % n);
      s.negative.insert((x + r + 1) % n);
    }
    out.map.samples.push_back(s);
  }
  return out;
}

Vertex apex(const DistanceMatrix &d, Vertex x, Vertex u, Vertex v) {
  VertexSet common = interval_vertices(d, x, u) & interval_vertices(d, x, v);
  Vertex best = -1;
  int best_dist = -1;
  bool unique = true;
  common.for_each([&](Vertex y) {
    if (d(x, y) > best_dist) {
      best = y;
      best_dist = d(x, y);
      unique = true;
    } else if (d(x, y) == best_dist) {
      unique = false;
    }
  });
  if (!unique)
    throw InvariantViolation("apex of " + std::to_string(x) + " for " + std::to_string(u) + "," +
                             std::to_string(v) + " is not unique");
  return best;
}

Vertex gate(const DistanceMatrix &d, Vertex z, const VertexSet &block) {
  Vertex best = -1;
  block.for_each([&](Vertex w) {
    if (best < 0 || d(z, w) < d(z, best)) best = w;
  });
  if (best < 0) throw ValidationError("gate into an empty block");
  block.for_each([&](Vertex w) {
    if (d(z, best) + d(best, w) != d(z, w))
      throw InvariantViolation("block is not gated for vertex " + std::to_string(z));
  });
  return best;
}

namespace {

VertexSet cactus_negative(const CactusStructure &cs, const DistanceMatrix &d, const VertexSet &cls, BallRep rep,
                          Vertex u, Vertex v) {
  const int n = d.order();
  const Vertex x = rep.center;
  const int r = rep.radius;
  VertexSet none(n);
  if (!cs.path_of_cycles(u, v).contains(x))
    throw InvariantViolation("minimal center " + std::to_string(x) + " lies outside C(u,v)");
  const VertexSet *cycle = nullptr;
  int hits = 0;
  for (int b : cs.path_blocks(u, v))
    if (cs.blocks()[b].members.contains(x)) {
      cycle = &cs.blocks()[b].members;
      ++hits;
    }
  if (hits != 1) return none;

  Vertex gu = gate(d, u, *cycle), gv = gate(d, v, *cycle);
  VertexSet near = interval_vertices(d, x, gu) | interval_vertices(d, x, gv);
  std::vector<Vertex> zs;
  std::vector<Vertex> gates;
  for (Vertex z = 0; z < n; ++z) {
    if (d(x, z) != r + 1) continue;
    Vertex gz = gate(d, z, *cycle);
    if (near.contains(gz)) continue;
    zs.push_back(z);
    gates.push_back(gz);
  }
  // Strict improvement keeps the smallest id among equally good candidates.
  auto pick = [&](Vertex anchor) {
    Vertex best = -1;
    int best_dist = -1;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (d(x, anchor) + d(anchor, zs[i]) != d(x, zs[i])) continue;
      if (d(anchor, gates[i]) > best_dist) {
        best = zs[i];
        best_dist = d(anchor, gates[i]);
      }
    }
    return best;
  };
  VertexSet neg(n);
  for (Vertex s : {pick(gu), pick(gv)})
    if (s >= 0) {
      if (cls.contains(s)) throw InvariantViolation("negative example " + std::to_string(s) + " lies in its ball");
      neg.insert(s);
    }
  return neg;
}

} // namespace

BallMap cactus_nctm(const Graph &g) {
  CactusStructure cs(g);
  auto d = all_pairs_distances(g);
  BallMap out{enumerate_balls(d), {}};
  const int n = g.order();
  for (std::size_t i = 0; i < out.family.size(); ++i) {
    const auto &cls = out.family.classes[i];
    auto [u, v] = diametral_pair(cls, d);
    for (const auto &rep : out.family.reps[i]) {
      Vertex x2 = apex(d, rep.center, u, v);
      if (ball(d, x2, rep.radius - d(rep.center, x2)) != cls)
        throw InvariantViolation("re-centering ball " + rep.label() + " at its apex changes it");
    }
    SignedSample s(VertexSet(n, {u, v}), VertexSet(n));
    if (cls.count() > 1) s.negative = cactus_negative(cs, d, cls, out.family.canonical(i), u, v);
    out.map.samples.push_back(s);
  }
  return out;
}

HyperbolicMap hyperbolic_approx_nctm_plus(const Graph &g) {
  auto d = all_pairs_distances(g);
  HyperbolicMap out;
  out.map.family = enumerate_balls(d);
  out.map.map = diametral_map(out.map.family, d);
  out.delta_doubled = hyperbolicity_doubled(d);
  return out;
}

BallMap diam2_nctm(const Graph &g) {
  auto d = all_pairs_distances(g);
  if (d.diameter() != 2) throw ValidationError("graph has diameter " + std::to_string(d.diameter()) + ", not 2");
  const int n = g.order();
  const VertexSet all = g.all_vertices();
  for (auto [x, y] : g.edges())
    if ((g.closed_neighborhood(x) | g.closed_neighborhood(y)) != all)
      throw ValidationError("edge " + std::to_string(x) + "-" + std::to_string(y) +
                            " violates B_1(x) ∪ B_1(y) = V");
  BallMap out{enumerate_balls(d), {}};
  for (std::size_t i = 0; i < out.family.size(); ++i) {
    const auto &cls = out.family.classes[i];
    auto [x, r] = out.family.canonical(i);
    SignedSample s(n);
    if (cls != all) {
      s.positive.insert(x);
      if (r == 0) {
        s.negative.insert(g.neighbors(x).front());
      } else {
        for (Vertex z = 0; z < n; ++z)
          if (d(x, z) == 2) {
            s.negative.insert(z);
            break;
          }
      }
    }
    out.map.samples.push_back(s);
  }
  return out;
}

} // namespace nctb
