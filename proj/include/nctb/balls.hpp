#pragma once

#include <string>
#include <vector>

#include "nctb/graph.hpp"

namespace nctb {

/// A (center, radius) pair naming a ball.
struct BallRep {
  Vertex center = 0;
  int radius = 0;

  friend auto operator<=>(const BallRep &a, const BallRep &b) {
    if (auto c = a.radius <=> b.radius; c != 0) return c;
    return a.center <=> b.center;
  }
  friend bool operator==(const BallRep &, const BallRep &) = default;
  std::string label() const { return "(" + std::to_string(center) + "," + std::to_string(radius) + ")"; }
};

struct Ball {
  Vertex center = 0;
  int radius = 0;
  VertexSet members;
};

Ball make_ball(const DistanceMatrix &d, Vertex x, int r);

/// The deduplicated family B(G).
///
/// Every (x, r) with 0 <= r <= ecc(x) lands in exactly one class. Classes are
/// ordered by their member sets (VertexSet ordering); `reps[i]` is sorted by
/// (radius, center), so `reps[i].front()` is the canonical minimal ball.
struct BallFamily {
  std::vector<VertexSet> classes;
  std::vector<std::vector<BallRep>> reps;

  std::size_t size() const { return classes.size(); }
  const BallRep &canonical(std::size_t i) const { return reps[i].front(); }
  /// Class index of a member set, or -1 if it is not a ball.
  int find(const VertexSet &members) const;
  int find(const DistanceMatrix &d, Vertex x, int r) const { return find(ball(d, x, r)); }
};

/// Radii run 0..eccentricity(x) per center. With a disconnected distance
/// matrix each component is treated on its own (eccentricity within the
/// component).
BallFamily enumerate_balls(const DistanceMatrix &d);
BallFamily enumerate_balls(const Graph &g);

/// Hausdorff distance between two vertex sets of the same graph.
int hausdorff_distance(const VertexSet &a, const VertexSet &b, const DistanceMatrix &d);
int hausdorff_distance(const Ball &a, const Ball &b, const DistanceMatrix &d);

} // namespace nctb
