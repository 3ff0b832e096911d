#pragma once

#include "nctb/balls.hpp"
#include "nctb/concept.hpp"
#include "nctb/graph.hpp"
#include "nctb/structure.hpp"

namespace nctb {

/// A teaching map aligned with the classes of a ball family.
struct BallMap {
  BallFamily family;
  TeachingMap map;
};

/// Diametral pair per ball, a singleton for radius-0 balls. Throws on non-trees.
BallMap tree_nctm_plus(const Graph &g);

/// Per ball of radius >= 1: {member with the leftmost end, member with the
/// rightmost start}. When both are the same vertex u, the smallest other
/// member joins u.
BallMap interval_nctm_plus(const Graph &g, const IntervalRepresentation &rep);

/// Signed map on B(C_n): an arc gets +{first vertex}, -{first vertex after it},
/// walking in increasing index order; the whole cycle gets the empty sample.
BallMap cycle_nctm(int n);

/// Signed map of size <= 4 for a cactus.
BallMap cactus_nctm(const Graph &g);

/// Unique y in I(x,u) ∩ I(x,v) farthest from x. Throws InvariantViolation if
/// the maximizer is not unique.
Vertex apex(const DistanceMatrix &d, Vertex x, Vertex u, Vertex v);

/// Nearest member of `block` to z, checked to lie on a shortest path from z to
/// every block member.
Vertex gate(const DistanceMatrix &d, Vertex z, const VertexSet &block);

struct HyperbolicMap {
  BallMap map;
  int delta_doubled = 0;
};
/// Diametral pair per ball, good up to Hausdorff distance 2*delta.
HyperbolicMap hyperbolic_approx_nctm_plus(const Graph &g);

/// Signed size-2 map for diameter-2 graphs where every edge xy has
/// B_1(x) ∪ B_1(y) = V.
BallMap diam2_nctm(const Graph &g);

} // namespace nctb
