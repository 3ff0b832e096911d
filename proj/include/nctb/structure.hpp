#pragma once

#include <optional>
#include <vector>

#include "nctb/balls.hpp"
#include "nctb/graph.hpp"

namespace nctb {

/// Partition of V by equal open neighborhoods. Classes are sorted by their
/// smallest member and each class is sorted.
std::vector<std::vector<Vertex>> false_twin_classes(const Graph &g);

enum class CoverMode { exact, approx2 };

/// Exact branching refuses covers larger than this.
inline constexpr int kExactCoverCap = 20;

/// Vertex cover as a sorted vertex list. Exact mode throws BudgetExceeded when
/// the minimum exceeds `kExactCoverCap`; approx2 takes both ends of a greedy
/// maximal matching and then drops vertices whose neighbors are all covered.
std::vector<Vertex> vertex_cover(const Graph &g, CoverMode mode);
bool is_vertex_cover(const Graph &g, const std::vector<Vertex> &cover);

/// Twice the Gromov hyperbolicity (an integer): max over quadruples of the gap
/// between the two largest pairwise distance sums.
int hyperbolicity_doubled(const DistanceMatrix &d, int threads = 1);

struct VcDimensionResult {
  int dimension = 0;
  std::vector<Vertex> witness;
  /// The search stopped at dmax with a shattered set in hand.
  bool possibly_larger = false;
};

/// VC-dimension of a set family over ground 0..universe-1, searching subsets up
/// to size dmax.
VcDimensionResult vc_dimension(const std::vector<VertexSet> &family, int universe, int dmax);
VcDimensionResult vc_dimension_of_balls(const Graph &g, int dmax);

/// Segment model of an interval graph; endpoints are all pairwise distinct.
struct IntervalRepresentation {
  std::vector<double> start;
  std::vector<double> end;

  int order() const { return static_cast<int>(start.size()); }
  /// Checks s <= e, distinct endpoints, and that the intersection graph is g.
  void validate(const Graph &g) const;
  Graph intersection_graph() const;
};

/// Block decomposition of a cactus (every block a cycle or a bridge).
class CactusStructure {
public:
  struct Block {
    bool is_cycle = false;
    /// Cycle order for cycles; the two ends for a bridge.
    std::vector<Vertex> vertices;
    VertexSet members;
  };

  /// Throws ValidationError when g is not a connected cactus.
  explicit CactusStructure(const Graph &g);

  const std::vector<Block> &blocks() const { return blocks_; }
  bool is_cut_vertex(Vertex v) const { return cut_[v]; }
  const std::vector<int> &blocks_of(Vertex v) const { return blocks_of_[v]; }

  /// Block indices on the block-tree path between C(u) and C(v).
  std::vector<int> path_blocks(Vertex u, Vertex v) const;
  /// Union of the blocks on that path (or {u} if u = v is a cut vertex).
  VertexSet path_of_cycles(Vertex u, Vertex v) const;

private:
  int node_of(Vertex v) const;

  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<bool> cut_;
  std::vector<std::vector<int>> blocks_of_;
  // Block-cut tree: nodes [0, blocks) are blocks, then one node per cut vertex.
  std::vector<int> cut_node_;
  std::vector<std::vector<int>> tree_;
};

bool is_tree(const Graph &g);

} // namespace nctb
