#include "nctb/reductions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "nctb/error.hpp"
#include "nctb/structure.hpp"

namespace nctb {

void SetCoverInstance::validate() const {
  if (n < 0) throw ValidationError("negative element count");
  if (sets.empty()) throw ValidationError("set cover instance has no sets");
  if (t < 0) throw ValidationError("negative cover budget");
  std::vector<char> covered(n, 0);
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (int e : sets[j]) {
      if (e < 0 || e >= n) throw ValidationError("set " + std::to_string(j + 1) + " has element out of range");
      covered[e] = 1;
    }
  for (int e = 0; e < n; ++e)
    if (!covered[e]) throw ValidationError("element " + std::to_string(e + 1) + " lies in no set");
}

bool SetCoverInstance::is_cover(const std::vector<int> &chosen) const {
  std::vector<char> covered(n, 0);
  for (int j : chosen) {
    if (j < 0 || j >= m()) return false;
    for (int e : sets[j]) covered[e] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

const char *to_string(SetCoverFlavor flavor) {
  switch (flavor) {
  case SetCoverFlavor::split:
    return "split";
  case SetCoverFlavor::cobipartite:
    return "cobipartite";
  case SetCoverFlavor::bipartite:
    return "bipartite";
  }
  return "?";
}

SetCoverFlavor parse_flavor(const std::string &name) {
  if (name == "split") return SetCoverFlavor::split;
  if (name == "cobipartite") return SetCoverFlavor::cobipartite;
  if (name == "bipartite") return SetCoverFlavor::bipartite;
  throw ValidationError("unknown flavor '" + name + "'");
}

PreprocessedSetCover preprocess_setcover(const SetCoverInstance &inst, bool more_sets_than_elements) {
  inst.validate();
  const int m = inst.m();
  std::vector<int> count(inst.n, 0);
  for (const auto &s : inst.sets)
    for (int e : std::set<int>(s.begin(), s.end())) ++count[e];

  PreprocessedSetCover out;
  std::vector<int> renumber(inst.n, -1);
  for (int e = 0; e < inst.n; ++e) {
    if (count[e] == m) {
      out.removed_elements.push_back(e);
    } else {
      renumber[e] = static_cast<int>(out.element_origin.size());
      out.element_origin.push_back(e);
    }
  }
  auto &res = out.instance;
  res.n = static_cast<int>(out.element_origin.size());
  res.t = inst.t;
  for (int j = 0; j < m; ++j) {
    std::set<int> kept;
    for (int e : inst.sets[j])
      if (renumber[e] >= 0) kept.insert(renumber[e]);
    res.sets.emplace_back(kept.begin(), kept.end());
    out.set_origin.push_back(j);
  }
  auto duplicate = [&](int j) {
    res.sets.push_back(res.sets[j]);
    out.set_origin.push_back(out.set_origin[j]);
  };
  // An element missing exactly one set gets that set duplicated; afterwards
  // it misses two sets for good, so this terminates.
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < res.n && !changed; ++e) {
      int missing = -1, misses = 0;
      for (int j = 0; j < res.m(); ++j)
        if (!std::binary_search(res.sets[j].begin(), res.sets[j].end(), e)) {
          missing = j;
          ++misses;
        }
      if (misses == 1) {
        duplicate(missing);
        changed = true;
      }
    }
  }
  if (more_sets_than_elements)
    while (res.m() <= res.n) duplicate(0);
  return out;
}

PreprocessedSetCover preprocess_setcover(const SetCoverInstance &inst, SetCoverFlavor flavor) {
  return preprocess_setcover(inst, flavor != SetCoverFlavor::split);
}

Vertex ReductionOutput::vertex(const std::string &role) const {
  auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) throw ValidationError("no vertex with role " + role);
  return static_cast<Vertex>(it - roles.begin());
}

namespace {

using Rule = std::function<std::optional<VertexSet>(Vertex, int)>;

// The rules are stated per (center, radius), but several representatives can
// name one ball. A ball starts with the set of its canonical representative;
// balls caught in a violation then try the other representatives' sets and
// finally their union, keeping the first option that lowers the violation
// count.
TeachingMap map_from_rule(const BallFamily &family, const Rule &rule) {
  const std::size_t B = family.size();
  std::vector<std::vector<VertexSet>> options(B);
  for (std::size_t i = 0; i < B; ++i) {
    for (const auto &rep : family.reps[i]) {
      auto t = rule(rep.center, rep.radius);
      if (!t) continue;
      if (!t->subset_of(family.classes[i]))
        throw InvariantViolation("teaching set for ball " + rep.label() + " leaves the ball");
      if (std::find(options[i].begin(), options[i].end(), *t) == options[i].end()) options[i].push_back(*t);
    }
    if (options[i].empty()) throw InvariantViolation("no teaching set defined for ball " + family.canonical(i).label());
    if (options[i].size() > 1) {
      VertexSet all = options[i][0];
      for (const auto &t : options[i]) all |= t;
      options[i].push_back(all);
    }
  }

  TeachingMap tm;
  for (std::size_t i = 0; i < B; ++i) tm.samples.push_back(SignedSample::positive_only(options[i][0]));
  ConceptClass cc{family.classes.empty() ? 0 : family.classes[0].universe(), family.classes, {}};
  auto bad = [&]() { return verify(cc, tm, true).violations; };

  auto violations = bad();
  for (bool progress = true; progress && !violations.empty();) {
    progress = false;
    std::set<std::size_t> involved;
    for (const auto &v : violations) involved.insert(v.first), involved.insert(v.second);
    for (std::size_t i : involved) {
      if (options[i].size() < 2) continue;
      auto keep = tm.samples[i];
      for (std::size_t c = 1; c < options[i].size(); ++c) {
        tm.samples[i] = SignedSample::positive_only(options[i][c]);
        auto now = bad();
        if (now.size() < violations.size()) {
          violations = std::move(now);
          keep = tm.samples[i];
          progress = true;
          break;
        }
      }
      tm.samples[i] = keep;
      if (progress) break;
    }
  }
  return tm;
}

// Vertex numbering: V = v_1..v_n, S = s_1..s_m, U = u_1..u_{m+1},
// W = w_1..w_m, then v* (co-bipartite) or z (bipartite).
struct SetCoverLayout {
  int n, m;
  Vertex v(int i) const { return i; }
  Vertex s(int j) const { return n + j; }
  Vertex u(int j) const { return n + m + j; }
  Vertex w(int j) const { return n + 2 * m + 1 + j; }
  Vertex extra() const { return n + 3 * m + 1; }
  int order(SetCoverFlavor f) const { return n + 3 * m + 1 + (f == SetCoverFlavor::split ? 0 : 1); }

  VertexSet range(Vertex first, int count, int universe) const {
    VertexSet out(universe);
    for (int i = 0; i < count; ++i) out.insert(first + i);
    return out;
  }
};

void check_preprocessed(const SetCoverInstance &inst, SetCoverFlavor flavor) {
  inst.validate();
  const int m = inst.m();
  for (int e = 0; e < inst.n; ++e) {
    int c = 0;
    for (const auto &s : inst.sets) c += std::count(s.begin(), s.end(), e) > 0 ? 1 : 0;
    if (c > m - 2)
      throw ValidationError("element " + std::to_string(e + 1) + " lies in more than m-2 sets; preprocess first");
  }
  if (flavor != SetCoverFlavor::split && m <= inst.n)
    throw ValidationError("this flavor needs more sets than elements; preprocess first");
}

bool in_set(const SetCoverInstance &inst, int e, int j) {
  const auto &s = inst.sets[j];
  return std::find(s.begin(), s.end(), e) != s.end();
}

void require_clique(const Graph &g, const std::vector<Vertex> &vs, const char *what) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) throw InvariantViolation(std::string(what) + " is not a clique");
}

void require_independent(const Graph &g, const std::vector<Vertex> &vs, const char *what) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.adjacent(vs[a], vs[b])) throw InvariantViolation(std::string(what) + " is not independent");
}

} // namespace

ReductionOutput setcover_to_gadget(const SetCoverInstance &inst, SetCoverFlavor flavor) {
  check_preprocessed(inst, flavor);
  const int n = inst.n, m = inst.m();
  SetCoverLayout L{n, m};
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!in_set(inst, i, j)) edges.emplace_back(L.v(i), L.s(j));
  for (int j = 0; j < m; ++j)
    for (int l = 0; l < m; ++l)
      if (j != l) edges.emplace_back(L.u(j), L.w(l));
  for (int l = 0; l < m; ++l) edges.emplace_back(L.u(m), L.w(l));

  if (flavor == SetCoverFlavor::bipartite) {
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i < n; ++i) edges.emplace_back(L.u(j), L.v(i));
    for (int j = 0; j <= m; ++j) edges.emplace_back(L.extra(), L.u(j));
    for (int j = 0; j < m; ++j) edges.emplace_back(L.extra(), L.s(j));
  } else {
    for (int j = 0; j <= m; ++j)
      for (int l = 0; l < m; ++l) edges.emplace_back(L.u(j), L.s(l));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < m; ++l) edges.emplace_back(L.v(i), L.w(l));
    // U ∪ V is a clique.
    std::vector<Vertex> uv;
    for (int j = 0; j <= m; ++j) uv.push_back(L.u(j));
    for (int i = 0; i < n; ++i) uv.push_back(L.v(i));
    for (std::size_t a = 0; a < uv.size(); ++a)
      for (std::size_t b = a + 1; b < uv.size(); ++b) edges.emplace_back(uv[a], uv[b]);
    if (flavor == SetCoverFlavor::cobipartite) {
      std::vector<Vertex> ws;
      for (int l = 0; l < m; ++l) ws.push_back(L.w(l));
      for (int l = 0; l < m; ++l) ws.push_back(L.s(l));
      for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = a + 1; b < ws.size(); ++b) edges.emplace_back(ws[a], ws[b]);
      for (int i = 0; i < n; ++i) edges.emplace_back(L.extra(), L.v(i));
      for (int l = 0; l < m; ++l) edges.emplace_back(L.extra(), L.w(l));
      for (int j = 0; j <= m; ++j) edges.emplace_back(L.extra(), L.u(j));
    }
  }

  ReductionOutput out;
  out.flavor = to_string(flavor);
  out.graph = Graph(L.order(flavor), edges);
  out.k = flavor == SetCoverFlavor::cobipartite ? 2 * m + inst.t + 1 : m + inst.t;
  for (int i = 0; i < n; ++i) out.roles.push_back("v" + std::to_string(i + 1));
  for (int j = 0; j < m; ++j) out.roles.push_back("s" + std::to_string(j + 1));
  for (int j = 0; j <= m; ++j) out.roles.push_back("u" + std::to_string(j + 1));
  for (int j = 0; j < m; ++j) out.roles.push_back("w" + std::to_string(j + 1));
  if (flavor == SetCoverFlavor::cobipartite) out.roles.push_back("v*");
  if (flavor == SetCoverFlavor::bipartite) out.roles.push_back("z");

  const Graph &g = out.graph;
  std::vector<Vertex> ws, us, vs;
  for (int j = 0; j < m; ++j) ws.push_back(L.w(j)), ws.push_back(L.s(j));
  for (int j = 0; j <= m; ++j) us.push_back(L.u(j));
  for (int i = 0; i < n; ++i) us.push_back(L.v(i));
  switch (flavor) {
  case SetCoverFlavor::split:
    if (g.degree(L.u(m)) != g.order() - 1) throw InvariantViolation("u_{m+1} is not universal");
    require_independent(g, ws, "W ∪ S");
    require_clique(g, us, "U ∪ V");
    break;
  case SetCoverFlavor::cobipartite:
    if (g.degree(L.u(m)) != g.order() - 1) throw InvariantViolation("u_{m+1} is not universal");
    require_clique(g, ws, "W ∪ S");
    us.push_back(L.extra());
    require_clique(g, us, "U ∪ V ∪ {v*}");
    break;
  case SetCoverFlavor::bipartite: {
    std::vector<Vertex> left, right;
    for (int j = 0; j < m; ++j) left.push_back(L.w(j)), right.push_back(L.s(j));
    for (int i = 0; i < n; ++i) left.push_back(L.v(i));
    left.push_back(L.extra());
    for (int j = 0; j <= m; ++j) right.push_back(L.u(j));
    require_independent(g, left, "W ∪ V ∪ {z}");
    require_independent(g, right, "U ∪ S");
    int diam = all_pairs_distances(g).diameter();
    if (diam != 3) throw InvariantViolation("bipartite gadget has diameter " + std::to_string(diam));
    break;
  }
  }
  return out;
}

TeachingMap setcover_forward_map(const SetCoverInstance &inst, const std::vector<int> &cover, SetCoverFlavor flavor) {
  if (!inst.is_cover(cover)) throw ValidationError("the given sets do not form a cover");
  if (static_cast<int>(std::set<int>(cover.begin(), cover.end()).size()) > inst.t)
    throw ValidationError("cover is larger than the budget t");
  auto out = setcover_to_gadget(inst, flavor);
  const Graph &g = out.graph;
  const int N = g.order(), n = inst.n, m = inst.m();
  SetCoverLayout L{n, m};
  auto d = all_pairs_distances(g);
  auto family = enumerate_balls(d);

  VertexSet V = L.range(L.v(0), n, N), S = L.range(L.s(0), m, N), U = L.range(L.u(0), m + 1, N),
            W = L.range(L.w(0), m, N), U0 = L.range(L.u(0), m, N);
  VertexSet chosen(N);
  for (int j : cover) chosen.insert(L.s(j));
  const Vertex um = L.u(m), x0 = L.extra();
  auto b1 = [&](Vertex x) { return ball(d, x, 1); };
  auto one = [&](std::initializer_list<Vertex> xs) { return VertexSet(N, std::vector<Vertex>(xs)); };

  Rule rule;
  switch (flavor) {
  case SetCoverFlavor::split:
    rule = [&](Vertex x, int r) -> std::optional<VertexSet> {
      if (r == 0) return one({x});
      if (r != 1) return std::nullopt;
      if (V.contains(x)) return b1(x) & S;
      if (W.contains(x) || S.contains(x)) return one({x, um});
      return chosen | (b1(x) & W);
    };
    break;
  case SetCoverFlavor::cobipartite:
    rule = [&](Vertex x, int r) -> std::optional<VertexSet> {
      if (r == 0) return one({x});
      if (r != 1) return std::nullopt;
      if (x == x0) return one({x0, um});
      if (V.contains(x)) return one({x0}) | U | (b1(x) & S);
      if (S.contains(x)) return one({x, um}) | (b1(x) & V);
      if (W.contains(x)) return one({x0}) | S | (b1(x) & U);
      return one({x0}) | chosen | U0 | (b1(x) & W);
    };
    break;
  case SetCoverFlavor::bipartite:
    rule = [&](Vertex x, int r) -> std::optional<VertexSet> {
      if (r == 0) return one({x});
      if (r > 2 || (x == x0 && r == 2)) return std::nullopt;
      if (x == x0) return one({x0}) | S;
      if (V.contains(x)) return (r == 1 ? one({x}) : one({L.w(0)})) | (b1(x) & S);
      if (S.contains(x)) return (r == 1 ? one({x, x0}) : one({um, x0})) | (b1(x) & V);
      if (W.contains(x)) return (r == 1 ? one({x}) : one({x, x0})) | (b1(x) & U0);
      return (r == 1 ? one({x}) : chosen) | (b1(x) & W);
    };
    break;
  }
  return map_from_rule(family, rule);
}

int SetRep::inverse(const std::vector<int> &subset) const {
  auto it = std::find(mapping.begin(), mapping.end(), subset);
  return it == mapping.end() ? 0 : static_cast<int>(it - mapping.begin()) + 1;
}

SetRep set_rep(int M) {
  if (M < 1) throw ValidationError("set_rep needs M >= 1");
  SetRep out;
  out.M = M;
  auto central = [](int p) {
    long long c = 1;
    for (int i = 1; i <= p; ++i) c = c * (p + i) / i;
    return c;
  };
  out.p = 1;
  while (central(out.p) < 3LL * M) ++out.p;
  const int p = out.p;
  // Colex successor: bump the lowest element that has room, reset the ones
  // below it to 1..i.
  std::vector<int> c(p);
  for (int i = 0; i < p; ++i) c[i] = i + 1;
  for (int l = 0; l < 3 * M; ++l) {
    out.mapping.push_back(c);
    int i = 0;
    while (i + 1 < p && c[i] + 1 == c[i + 1]) ++i;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j + 1;
  }
  return out;
}

const char *to_string(Part part) {
  switch (part) {
  case Part::alpha:
    return "alpha";
  case Part::beta:
    return "beta";
  case Part::gamma:
    return "gamma";
  }
  return "?";
}

void Partitioned3SatInstance::validate() const {
  if (N < 1) throw ValidationError("need at least one variable per part");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    const auto &cl = clauses[j];
    std::string where = "clause " + std::to_string(j + 1);
    if (cl.empty() || cl.size() > 3) throw ValidationError(where + " must have 1 to 3 literals");
    std::array<int, 3> seen{};
    for (const auto &lit : cl) {
      if (lit.index < 1 || lit.index > N) throw ValidationError(where + " has a variable index out of range");
      if (++seen[static_cast<int>(lit.part)] > 1)
        throw ValidationError(where + " uses two variables from part " + to_string(lit.part));
    }
  }
}

bool satisfies(const Partitioned3SatInstance &inst, const Assignment &assignment) {
  if (assignment.size() != 3) return false;
  for (const auto &values : assignment)
    if (static_cast<int>(values.size()) != inst.N) return false;
  return std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const std::vector<Literal> &cl) {
    return std::any_of(cl.begin(), cl.end(), [&](const Literal &lit) {
      return assignment[static_cast<int>(lit.part)][lit.index - 1] == lit.positive;
    });
  });
}

namespace {

// Vertex numbering: C, W, U, u_{3M+1}, u', z, then A^δ (t_2i, f_2i-1 per i)
// for each part, then V^δ and V^{δ,*} for each part, then V^W, then C^δ for
// each part. Indices i, l and p' are 1-based as in the construction.
struct SatLayout {
  int N, M, p;
  Vertex c(int j) const { return j - 1; }
  Vertex w(int l) const { return M + l - 1; }
  Vertex u(int l) const { return 4 * M + l - 1; }
  Vertex u_last() const { return 7 * M; }
  Vertex u_prime() const { return 7 * M + 1; }
  Vertex z() const { return 7 * M + 2; }
  Vertex t(int d, int i) const { return 7 * M + 3 + 2 * N * d + 2 * (i - 1); }
  Vertex f(int d, int i) const { return t(d, i) + 1; }
  Vertex v(int d, int q) const { return 7 * M + 3 + 6 * N + 4 * p * d + q - 1; }
  Vertex vs(int d, int q) const { return v(d, q) + 2 * p; }
  Vertex vw(int q) const { return 7 * M + 3 + 6 * N + 12 * p + q - 1; }
  Vertex cd(int d, int i) const { return 7 * M + 3 + 6 * N + 14 * p + N * d + i - 1; }
  int order() const { return 7 * M + 3 + 9 * N + 14 * p; }
};

const char *kPartName[3] = {"alpha", "beta", "gamma"};

SatLayout layout_for(const Partitioned3SatInstance &inst) {
  inst.validate();
  if (inst.M() <= inst.N) throw ValidationError("the gadget needs more clauses than variables per part (M > N)");
  return SatLayout{inst.N, inst.M(), set_rep(inst.M()).p};
}

std::vector<int> complement(const std::vector<int> &s, int p) {
  std::vector<int> out;
  for (int q = 1; q <= 2 * p; ++q)
    if (!std::binary_search(s.begin(), s.end(), q)) out.push_back(q);
  return out;
}

} // namespace

ReductionOutput p3sat_to_gadget(const Partitioned3SatInstance &inst) {
  const SatLayout L = layout_for(inst);
  const SetRep rep = set_rep(L.M);
  const int N = L.N, M = L.M, p = L.p;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto add = [&](Vertex a, Vertex b) {
    if (a == b) return;
    Edge e{std::min(a, b), std::max(a, b)};
    if (seen.insert(e).second) edges.push_back(e);
  };

  for (int d = 0; d < 3; ++d)
    for (int q = 1; q <= 2 * p; ++q)
      for (int l = 1; l <= 3 * M; ++l) {
        add(L.v(d, q), L.u(l));
        add(L.vs(d, q), L.u(l));
      }
  for (int a = 1; a <= 2 * p; ++a)
    for (int b = a + 1; b <= 2 * p; ++b) add(L.vw(a), L.vw(b));
  for (int d = 0; d < 3; ++d)
    for (int i = 1; i <= N; ++i) {
      for (int q : rep(2 * i)) add(L.t(d, i), L.v(d, q));
      for (int q : rep(2 * i - 1)) add(L.f(d, i), L.v(d, q));
    }
  for (int j = 1; j <= M; ++j)
    for (int d = 0; d < 3; ++d) {
      const Literal *lit = nullptr;
      for (const auto &l : inst.clauses[j - 1])
        if (static_cast<int>(l.part) == d) lit = &l;
      if (!lit) {
        for (int q = 1; q <= 2 * p; ++q) add(L.c(j), L.v(d, q));
        continue;
      }
      int code = lit->positive ? 2 * lit->index : 2 * lit->index - 1;
      for (int q : complement(rep(code), p)) add(L.c(j), L.v(d, q));
    }
  for (int l = 1; l <= 3 * M; ++l) {
    for (int q : rep(l)) add(L.w(l), L.vw(q));
    for (int q : complement(rep(l), p)) add(L.u(l), L.vw(q));
  }
  for (int d = 0; d < 3; ++d)
    for (int i = 1; i <= N; ++i) {
      for (int q : rep(2 * i)) {
        add(L.t(d, i), L.vs(d, q));
        add(L.f(d, i), L.vs(d, q));
      }
      for (int q : complement(rep(2 * i), p)) add(L.cd(d, i), L.vs(d, q));
      for (int d2 = 0; d2 < 3; ++d2)
        if (d2 != d)
          for (int q = 1; q <= 2 * p; ++q) add(L.cd(d, i), L.vs(d2, q));
    }

  const int order = L.order();
  VertexSet ua(order);
  for (int l = 1; l <= 3 * M; ++l) ua.insert(L.u(l));
  for (int d = 0; d < 3; ++d)
    for (int i = 1; i <= N; ++i) ua.insert(L.t(d, i)), ua.insert(L.f(d, i));
  ua.for_each([&](Vertex x) { add(L.z(), x); });
  add(L.z(), L.u_last());
  add(L.z(), L.u_prime());
  for (Vertex x = 0; x < order; ++x)
    if (!ua.contains(x)) add(L.u_last(), x);
  // u' copies the neighborhood of u_{3M+1}, which by now contains u' itself.
  std::vector<Vertex> last_nbrs;
  for (const auto &[a, b] : edges) {
    if (a == L.u_last()) last_nbrs.push_back(b);
    if (b == L.u_last()) last_nbrs.push_back(a);
  }
  for (Vertex x : last_nbrs) add(L.u_prime(), x);

  ReductionOutput out;
  out.flavor = "p3sat";
  out.graph = Graph(order, edges);
  out.k = 3 * N + 3 * M;
  out.roles.assign(order, "");
  for (int j = 1; j <= M; ++j) out.roles[L.c(j)] = "c" + std::to_string(j);
  for (int l = 1; l <= 3 * M; ++l) {
    out.roles[L.w(l)] = "w" + std::to_string(l);
    out.roles[L.u(l)] = "u" + std::to_string(l);
  }
  out.roles[L.u_last()] = "u" + std::to_string(3 * M + 1);
  out.roles[L.u_prime()] = "u'" + std::to_string(3 * M + 1);
  out.roles[L.z()] = "z";
  for (int d = 0; d < 3; ++d) {
    std::string part = kPartName[d];
    for (int i = 1; i <= N; ++i) {
      out.roles[L.t(d, i)] = "t^" + part + "_" + std::to_string(2 * i);
      out.roles[L.f(d, i)] = "f^" + part + "_" + std::to_string(2 * i - 1);
      out.roles[L.cd(d, i)] = "c^" + part + "_" + std::to_string(i);
    }
    for (int q = 1; q <= 2 * p; ++q) {
      out.roles[L.v(d, q)] = "v^" + part + "_" + std::to_string(q);
      out.roles[L.vs(d, q)] = "v^" + part + "*_" + std::to_string(q);
    }
  }
  for (int q = 1; q <= 2 * p; ++q) out.roles[L.vw(q)] = "v^W_" + std::to_string(q);

  out.cover = {L.u_last(), L.u_prime(), L.z()};
  for (int q = 1; q <= 2 * p; ++q) {
    out.cover.push_back(L.vw(q));
    for (int d = 0; d < 3; ++d) out.cover.push_back(L.v(d, q)), out.cover.push_back(L.vs(d, q));
  }
  std::sort(out.cover.begin(), out.cover.end());
  if (!is_vertex_cover(out.graph, out.cover)) throw InvariantViolation("recorded vertex cover misses an edge");
  int diam = all_pairs_distances(out.graph).diameter();
  if (diam != 3) throw InvariantViolation("p3sat gadget has diameter " + std::to_string(diam));
  return out;
}

TeachingMap p3sat_forward_map(const Partitioned3SatInstance &inst, const Assignment &assignment) {
  const SatLayout L = layout_for(inst);
  if (!satisfies(inst, assignment)) throw ValidationError("assignment does not satisfy the formula");
  if (2 * L.p + 3 > 3 * L.N)
    throw ValidationError("the V^W teaching sets would exceed the budget (needs 2p+3 <= 3N, p=" + std::to_string(L.p) +
                          ")");
  auto out = p3sat_to_gadget(inst);
  const int order = out.graph.order();
  const int N = L.N, M = L.M, p = L.p;
  auto d = all_pairs_distances(out.graph);
  auto family = enumerate_balls(d);

  VertexSet A(order), U(order), W(order), Vw(order), Vd(order), Cs(order), pi(order);
  for (int l = 1; l <= 3 * M; ++l) U.insert(L.u(l)), W.insert(L.w(l));
  for (int j = 1; j <= M; ++j) Cs.insert(L.c(j));
  for (int q = 1; q <= 2 * p; ++q) Vw.insert(L.vw(q));
  std::vector<int> part_of(order, -1);
  for (int dd = 0; dd < 3; ++dd) {
    for (int i = 1; i <= N; ++i) {
      A.insert(L.t(dd, i)), A.insert(L.f(dd, i));
      part_of[L.t(dd, i)] = part_of[L.f(dd, i)] = dd;
      Cs.insert(L.cd(dd, i));
      pi.insert(assignment[dd][i - 1] ? L.t(dd, i) : L.f(dd, i));
    }
    for (int q = 1; q <= 2 * p; ++q) Vd.insert(L.v(dd, q)), Vd.insert(L.vs(dd, q));
  }
  auto one = [&](std::initializer_list<Vertex> xs) { return VertexSet(order, std::vector<Vertex>(xs)); };
  const Vertex ul = L.u_last(), up = L.u_prime(), z = L.z();

  Rule rule = [&](Vertex x, int r) -> std::optional<VertexSet> {
    if (r == 0) return one({x});
    if (r > 2) return std::nullopt;
    VertexSet b1 = ball(d, x, 1);
    if (x == z) return r == 1 ? std::optional<VertexSet>(one({z, L.u(1)})) : std::nullopt;
    if (A.contains(x)) {
      if (r == 1) return b1;
      VertexSet extra = one({L.u(1)});
      for (int dd = 0; dd < 3; ++dd)
        if (dd != part_of[x]) extra.insert(L.t(dd, 1));
      return extra | b1;
    }
    if (Vd.contains(x)) return (r == 1 ? VertexSet(order) : one({L.w(1), z})) | (b1 - U);
    if (Vw.contains(x)) return r == 1 ? one({ul, up}) | Vw | (b1 & U) : one({ul, up, z}) | Vw | U;
    if (Cs.contains(x)) return r == 1 ? b1 : one({x, L.w(1)}) | (ball(d, x, 2) & A);
    if (U.contains(x) || x == ul || x == up) return r == 1 ? b1 - Cs : (ball(d, x, 2) & W) | pi;
    if (W.contains(x)) return r == 1 ? b1 : one({x, z, ul, up}) | (ball(d, x, 2) & U);
    return std::nullopt;
  };
  return map_from_rule(family, rule);
}

ExtractedAssignment p3sat_extract_assignment(const Partitioned3SatInstance &inst, const TeachingMap &tm,
                                             const ReductionOutput &out) {
  const SatLayout L = layout_for(inst);
  if (out.graph.order() != L.order()) throw ValidationError("gadget does not match the instance");
  auto d = all_pairs_distances(out.graph);
  auto family = enumerate_balls(d);
  if (tm.count() != family.size()) throw ValidationError("teaching map does not match the gadget's balls");
  int idx = family.find(d, L.u_last(), 2);
  if (idx < 0) throw InvariantViolation("B_2(u_{3M+1}) is missing from the ball family");
  const VertexSet &t = tm.samples[idx].positive;
  ExtractedAssignment res;
  res.assignment.assign(3, std::vector<bool>(L.N, false));
  for (int dd = 0; dd < 3; ++dd)
    for (int i = 1; i <= L.N; ++i) {
      bool has_t = t.contains(L.t(dd, i)), has_f = t.contains(L.f(dd, i));
      if (!has_t && !has_f)
        throw InvalidWitness("teaching set of V(G) has neither literal of x^" + std::string(kPartName[dd]) + "_" +
                             std::to_string(i));
      res.assignment[dd][i - 1] = has_t && !has_f;
    }
  res.satisfying = satisfies(inst, res.assignment);
  return res;
}

} // namespace nctb
