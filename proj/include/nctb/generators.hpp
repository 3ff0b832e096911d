#pragma once

#include <cstdint>
#include <random>

#include "nctb/graph.hpp"
#include "nctb/structure.hpp"

namespace nctb {

/// mt19937_64 plus an explicit bounded draw, so outputs are identical across
/// standard libraries (std::uniform_int_distribution is not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  int between(int lo, int hi);
  bool chance(int numerator, int denominator) { return between(0, denominator - 1) < numerator; }

private:
  std::mt19937_64 engine_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
/// K_{2n} minus the perfect matching {2i, 2i+1}.
Graph octahedron(int n);
Graph edgeless(int n);
Graph star(int leaves);

Graph random_tree(int n, std::uint64_t seed);
/// Random cactus grown by hanging pendant edges and short cycles off
/// existing vertices.
Graph random_cactus(int n, std::uint64_t seed);

struct IntervalGraph {
  Graph graph;
  IntervalRepresentation representation;
};
/// Connected interval graph with integer endpoints 0..2n-1.
IntervalGraph random_interval(int n, std::uint64_t seed);

/// Random spanning tree plus each remaining pair with probability
/// extra_percent / 100.
Graph random_connected(int n, int extra_percent, std::uint64_t seed);

} // namespace nctb
