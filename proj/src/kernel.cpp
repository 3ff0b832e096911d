#include "nctb/kernel.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nctb/balls.hpp"
#include "nctb/concept.hpp"
#include "nctb/error.hpp"

namespace nctb {

long long rr1_threshold(int cover_size) {
  if (cover_size >= 62) return std::numeric_limits<long long>::max();
  return (1LL << cover_size) + 1;
}

long long kernel_size_bound(int cover_size) {
  if (cover_size >= 31) return std::numeric_limits<long long>::max();
  long long p = 1LL << cover_size;
  return p * (p + 1) + cover_size;
}

std::optional<Rr1Step> rr1_step(const Graph &g, const std::vector<Vertex> &cover) {
  if (!is_vertex_cover(g, cover)) throw ValidationError("the given vertex set is not a vertex cover");
  VertexSet in_cover(g.order(), cover);
  const long long limit = rr1_threshold(static_cast<int>(cover.size()));
  // Classes come sorted by smallest member, so the first oversized one wins.
  for (const auto &cls : false_twin_classes(g)) {
    std::vector<Vertex> independent;
    for (Vertex v : cls)
      if (!in_cover.contains(v)) independent.push_back(v);
    if (static_cast<long long>(independent.size()) <= limit) continue;
    Rr1Step step;
    step.deleted = independent.back();
    step.twins = independent;
    step.reduced = g.without(step.deleted);
    for (Vertex x : cover) step.cover.push_back(x > step.deleted ? x - 1 : x);
    return step;
  }
  return std::nullopt;
}

KernelTrace kernelize(const Graph &g, CoverMode mode) {
  KernelTrace trace;
  trace.cover = vertex_cover(g, mode);
  trace.kernel = g;
  // current[i] = original id of the vertex now numbered i.
  std::vector<Vertex> current(g.order());
  for (Vertex v = 0; v < g.order(); ++v) current[v] = v;
  std::vector<Vertex> cover = trace.cover;
  while (auto step = rr1_step(trace.kernel, cover)) {
    Deletion del;
    del.vertex = current[step->deleted];
    for (Vertex t : step->twins) del.twins.push_back(current[t]);
    trace.deletions.push_back(std::move(del));
    current.erase(current.begin() + step->deleted);
    trace.kernel = std::move(step->reduced);
    cover = std::move(step->cover);
  }
  trace.vertex_map.assign(g.order(), -1);
  for (std::size_t i = 0; i < current.size(); ++i) trace.vertex_map[current[i]] = static_cast<Vertex>(i);
  return trace;
}

SolveResult solve_via_kernel(const Graph &g, bool positive_only, int k_max, std::uint64_t budget, CoverMode mode) {
  if (!positive_only) throw ValidationError("the kernel is only known to be safe for positive-only maps");
  auto trace = kernelize(g, mode);
  // Edgeless inputs stay edgeless; their balls are taken per component.
  auto family = enumerate_balls(all_pairs_distances(trace.kernel, true));
  return nctd_exact(balls_as_concept_class(family, trace.kernel.order()), true, k_max, budget);
}

} // namespace nctb
