#include "nctb/balls.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "nctb/error.hpp"

namespace nctb {

Ball make_ball(const DistanceMatrix &d, Vertex x, int r) { return Ball{x, r, ball(d, x, r)}; }

int BallFamily::find(const VertexSet &members) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), members);
  if (it == classes.end() || *it != members) return -1;
  return static_cast<int>(it - classes.begin());
}

BallFamily enumerate_balls(const DistanceMatrix &d) {
  std::map<VertexSet, std::vector<BallRep>> by_set;
  for (Vertex x = 0; x < d.order(); ++x) {
    int ecc = d.eccentricity(x);
    for (int r = 0; r <= ecc; ++r) by_set[ball(d, x, r)].push_back(BallRep{x, r});
  }
  BallFamily family;
  family.classes.reserve(by_set.size());
  family.reps.reserve(by_set.size());
  for (auto &[members, reps] : by_set) {
    std::sort(reps.begin(), reps.end());
    family.classes.push_back(members);
    family.reps.push_back(std::move(reps));
  }
  return family;
}

BallFamily enumerate_balls(const Graph &g) { return enumerate_balls(all_pairs_distances(g)); }

int hausdorff_distance(const VertexSet &a, const VertexSet &b, const DistanceMatrix &d) {
  if (a.universe() != b.universe()) throw ValidationError("hausdorff distance across different graphs");
  auto la = a.members(), lb = b.members();
  if (la.empty() || lb.empty()) throw ValidationError("hausdorff distance of an empty set");
  auto directed = [&](const std::vector<Vertex> &from, const std::vector<Vertex> &to) {
    int worst = 0;
    for (Vertex p : from) {
      int nearest = std::numeric_limits<int>::max();
      for (Vertex q : to) {
        int dpq = d(p, q);
        if (dpq != DistanceMatrix::kUnreachable) nearest = std::min(nearest, dpq);
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(la, lb), directed(lb, la));
}

int hausdorff_distance(const Ball &a, const Ball &b, const DistanceMatrix &d) {
  return hausdorff_distance(a.members, b.members, d);
}

} // namespace nctb
