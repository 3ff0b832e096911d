#pragma once

#include <string>
#include <vector>

#include "nctb/balls.hpp"
#include "nctb/concept.hpp"
#include "nctb/graph.hpp"

namespace nctb {

/// Elements are 0..n-1 here; files use 1..n.
struct SetCoverInstance {
  int n = 0;
  std::vector<std::vector<int>> sets;
  int t = 0;

  int m() const { return static_cast<int>(sets.size()); }
  /// Throws unless sets are non-empty in number, in range and cover all n.
  void validate() const;
  bool is_cover(const std::vector<int> &chosen) const;
};

struct PreprocessedSetCover {
  SetCoverInstance instance;
  /// Index of the input set each output set copies.
  std::vector<int> set_origin;
  /// Input id of each surviving element.
  std::vector<int> element_origin;
  /// Input ids of elements dropped for lying in every set.
  std::vector<int> removed_elements;
};

enum class SetCoverFlavor { split, cobipartite, bipartite };

const char *to_string(SetCoverFlavor flavor);
SetCoverFlavor parse_flavor(const std::string &name);

/// Drops elements present in every set and duplicates sets until each element
/// misses at least two sets; with `more_sets_than_elements` also duplicates
/// set 0 until m > n.
PreprocessedSetCover preprocess_setcover(const SetCoverInstance &inst, bool more_sets_than_elements);
/// Preprocessing matching the flavor's requirements.
PreprocessedSetCover preprocess_setcover(const SetCoverInstance &inst, SetCoverFlavor flavor);

struct ReductionOutput {
  std::string flavor;
  Graph graph;
  int k = 0;
  std::vector<std::string> roles;
  /// Vertex cover recorded by the construction (p3sat only).
  std::vector<Vertex> cover;

  /// Vertex carrying `role`; throws if absent.
  Vertex vertex(const std::string &role) const;
};

/// Gadget for an instance that already satisfies the preprocessing invariants.
ReductionOutput setcover_to_gadget(const SetCoverInstance &inst, SetCoverFlavor flavor);

/// Positive-only map over enumerate_balls(gadget) built from a cover of size
/// at most t (set indices into `inst`).
TeachingMap setcover_forward_map(const SetCoverInstance &inst, const std::vector<int> &cover, SetCoverFlavor flavor);

struct SetRep {
  int M = 0;
  int p = 0;
  /// mapping[l-1] is the image of l, a sorted p-subset of 1..2p.
  std::vector<std::vector<int>> mapping;

  const std::vector<int> &operator()(int l) const { return mapping.at(l - 1); }
  /// Preimage of a p-subset, or 0 if it is not an image.
  int inverse(const std::vector<int> &subset) const;
};

/// p is minimal with 3M <= C(2p, p); l maps to the l-th p-subset of [2p] in
/// colex order.
SetRep set_rep(int M);

enum class Part { alpha = 0, beta = 1, gamma = 2 };

const char *to_string(Part part);

struct Literal {
  Part part = Part::alpha;
  /// 1..N
  int index = 1;
  bool positive = true;
  friend bool operator==(const Literal &, const Literal &) = default;
};

struct Partitioned3SatInstance {
  int N = 0;
  std::vector<std::vector<Literal>> clauses;

  int M() const { return static_cast<int>(clauses.size()); }
  /// Clauses have 1..3 literals, at most one per part, indices in 1..N.
  void validate() const;
};

/// assignment[part][i-1] is the value of x^part_i.
using Assignment = std::vector<std::vector<bool>>;

bool satisfies(const Partitioned3SatInstance &inst, const Assignment &assignment);

/// Diameter-3 gadget with budget 3N + 3M. Requires M > N.
ReductionOutput p3sat_to_gadget(const Partitioned3SatInstance &inst);

/// Positive-only map over enumerate_balls(gadget) from a satisfying
/// assignment. Requires 2p + 3 <= 3N (the V^W sets). The radius-1 sets of
/// u_1..u_{3M} and u_{3M+1} have 13p + 2 and 3M + 14p + 3 elements, so for
/// small N the map can still exceed 3N + 3M.
TeachingMap p3sat_forward_map(const Partitioned3SatInstance &inst, const Assignment &assignment);

struct ExtractedAssignment {
  Assignment assignment;
  bool satisfying = false;
};

/// Reads the assignment off the teaching set of V(G) = B_2(u_{3M+1}).
/// Throws InvalidWitness when some variable has neither literal vertex there.
ExtractedAssignment p3sat_extract_assignment(const Partitioned3SatInstance &inst, const TeachingMap &tm,
                                             const ReductionOutput &out);

} // namespace nctb
