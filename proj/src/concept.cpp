#include "nctb/concept.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

#include "nctb/error.hpp"

namespace nctb {

void ConceptClass::validate() const {
  if (!labels.empty() && labels.size() != concepts.size())
    throw ValidationError("concept labels do not match the concept count");
  std::set<VertexSet> seen;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (concepts[i].universe() != ground)
      throw ValidationError("concept " + std::to_string(i) + " is not over the ground set");
    if (!seen.insert(concepts[i]).second)
      throw ValidationError("concept " + std::to_string(i) + " duplicates an earlier concept");
  }
}

int TeachingMap::size() const {
  int best = 0;
  for (const auto &s : samples) best = std::max(best, s.size());
  return best;
}

bool TeachingMap::positive_only() const {
  return std::all_of(samples.begin(), samples.end(), [](const SignedSample &s) { return s.is_positive_only(); });
}

const char *to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::clash:
    return "clash";
  case ViolationKind::inclusion_broken:
    return "inclusion-broken";
  case ViolationKind::not_realizable:
    return "not-realizable";
  }
  return "?";
}

bool realizable(const SignedSample &sample, const VertexSet &c) {
  return sample.positive.subset_of(c) && !sample.negative.intersects(c);
}

bool clashes(const SignedSample &a, const SignedSample &b, const VertexSet &ca, const VertexSet &cb) {
  VertexSet witness = (a.support() | b.support()) & (ca ^ cb);
  return witness.empty();
}

namespace {

void check_shape(std::size_t concepts, const TeachingMap &tm) {
  if (tm.count() != concepts)
    throw ValidationError("teaching map covers " + std::to_string(tm.count()) + " concepts, class has " +
                          std::to_string(concepts));
}

template <typename Exempt>
VerificationReport verify_pairs(const std::vector<VertexSet> &concepts, const TeachingMap &tm, bool positive_only,
                                int threads, Exempt exempt) {
  check_shape(concepts.size(), tm);
  VerificationReport report;
  report.size = tm.size();
  report.positive_only = positive_only;
  const int m = static_cast<int>(concepts.size());
  std::vector<VertexSet> supports;
  supports.reserve(m);
  for (int i = 0; i < m; ++i) {
    const auto &s = tm.samples[i];
    if (s.positive.universe() != concepts[i].universe() || s.negative.universe() != concepts[i].universe())
      throw ValidationError("sample " + std::to_string(i) + " is over a different ground set");
    if (!realizable(s, concepts[i])) report.violations.push_back({i, i, ViolationKind::not_realizable});
    if (positive_only && !s.negative.empty()) report.violations.push_back({i, i, ViolationKind::inclusion_broken});
    supports.push_back(s.support());
  }
  threads = std::max(1, std::min(threads, m));
  std::vector<std::vector<Violation>> found(threads);
  auto scan = [&](int worker) {
    for (int i = worker; i < m; i += threads)
      for (int j = i + 1; j < m; ++j) {
        VertexSet joint = supports[i] | supports[j];
        if (!(joint & (concepts[i] ^ concepts[j])).empty()) continue;
        if (exempt(i, j)) continue;
        found[worker].push_back({i, j, ViolationKind::clash});
      }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(scan, w);
    for (auto &t : pool) t.join();
  }
  std::vector<Violation> clashes_found;
  for (auto &part : found) clashes_found.insert(clashes_found.end(), part.begin(), part.end());
  std::sort(clashes_found.begin(), clashes_found.end(),
            [](const Violation &a, const Violation &b) { return std::tie(a.first, a.second) < std::tie(b.first, b.second); });
  report.violations.insert(report.violations.end(), clashes_found.begin(), clashes_found.end());
  report.ok = report.violations.empty();
  return report;
}

} // namespace

VerificationReport verify(const ConceptClass &cc, const TeachingMap &tm, bool positive_only, int threads) {
  return verify_pairs(cc.concepts, tm, positive_only, threads, [](int, int) { return false; });
}

VerificationReport verify_approx(const BallFamily &family, const TeachingMap &tm, int rho, const DistanceMatrix &d) {
  if (rho < 0) throw ValidationError("negative approximation radius");
  return verify_pairs(family.classes, tm, true, 1, [&](int i, int j) {
    return hausdorff_distance(family.classes[i], family.classes[j], d) <= rho;
  });
}

ConceptClass balls_as_concept_class(const BallFamily &family, int ground) {
  ConceptClass cc;
  cc.ground = ground;
  cc.concepts = family.classes;
  for (std::size_t i = 0; i < family.size(); ++i) cc.labels.push_back(family.canonical(i).label());
  return cc;
}

ExampleClass c5_example_class() {
  constexpr int n = 5;
  ExampleClass out;
  out.concepts.ground = n;
  for (Vertex i = 0; i < n; ++i) {
    VertexSet pair(n, {i, (i + 2) % n});
    out.concepts.concepts.push_back(pair);
    out.concepts.labels.push_back("pair " + std::to_string(i) + " " + std::to_string((i + 2) % n));
    out.map.samples.push_back(SignedSample::positive_only(pair));
  }
  for (Vertex i = 0; i < n; ++i) {
    out.concepts.concepts.push_back(VertexSet(n, {i, (i + 1) % n, (i + 2) % n}));
    out.concepts.labels.push_back("path from " + std::to_string(i));
    out.map.samples.push_back(SignedSample::positive_only(VertexSet(n, {i, (i + 1) % n})));
  }
  return out;
}

} // namespace nctb
