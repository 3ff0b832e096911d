#pragma once

#include <optional>
#include <vector>

#include "nctb/graph.hpp"
#include "nctb/solver.hpp"
#include "nctb/structure.hpp"

namespace nctb {

struct Rr1Step {
  Graph reduced;
  Vertex deleted = -1;
  /// The oversized twin class (ids before deletion).
  std::vector<Vertex> twins;
  /// The cover with ids shifted to the reduced graph.
  std::vector<Vertex> cover;
};

/// Largest twin class multiplicity RR1 leaves behind: 2^|X| + 1.
long long rr1_threshold(int cover_size);

/// One application of the false-twin rule w.r.t. cover X, or nullopt if no
/// twin class inside V \ X has more than 2^|X| + 1 members. Throws if X is not
/// a vertex cover.
std::optional<Rr1Step> rr1_step(const Graph &g, const std::vector<Vertex> &cover);

struct Deletion {
  /// Id in the original graph.
  Vertex vertex = -1;
  /// Original ids of the twin class it was taken from.
  std::vector<Vertex> twins;
};

struct KernelTrace {
  std::vector<Vertex> cover;
  std::vector<Deletion> deletions;
  Graph kernel;
  /// Original id -> kernel id, or -1 when deleted.
  std::vector<Vertex> vertex_map;
};

/// 2^x (2^x + 1) + x.
long long kernel_size_bound(int cover_size);

KernelTrace kernelize(const Graph &g, CoverMode mode = CoverMode::approx2);

/// Kernelize, then solve the positive-only problem on the kernel's balls.
/// Signed mode is refused with a ValidationError.
SolveResult solve_via_kernel(const Graph &g, bool positive_only, int k_max,
                             std::uint64_t budget = kDefaultNodeBudget, CoverMode mode = CoverMode::approx2);

} // namespace nctb
