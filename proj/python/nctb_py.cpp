#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nctb/balls.hpp"
#include "nctb/cli.hpp"
#include "nctb/concept.hpp"
#include "nctb/constructors.hpp"
#include "nctb/error.hpp"
#include "nctb/generators.hpp"
#include "nctb/kernel.hpp"
#include "nctb/reductions.hpp"
#include "nctb/solver.hpp"
#include "nctb/structure.hpp"

namespace py = pybind11;
using namespace nctb;

namespace {

// Python side: vertex sets are sorted lists, samples are (pos, neg) pairs.
using Sample = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

std::vector<Sample> to_py(const TeachingMap &tm) {
  std::vector<Sample> out;
  for (const auto &s : tm.samples) out.emplace_back(s.positive.members(), s.negative.members());
  return out;
}

TeachingMap from_py(const std::vector<Sample> &samples, int universe) {
  TeachingMap tm;
  for (const auto &[pos, neg] : samples) {
    for (Vertex v : pos)
      if (v < 0 || v >= universe) throw ValidationError("vertex " + std::to_string(v) + " out of range");
    for (Vertex v : neg)
      if (v < 0 || v >= universe) throw ValidationError("vertex " + std::to_string(v) + " out of range");
    tm.samples.emplace_back(VertexSet(universe, pos), VertexSet(universe, neg));
  }
  return tm;
}

ConceptClass to_class(const std::vector<std::vector<Vertex>> &concepts, int ground) {
  ConceptClass cc;
  cc.ground = ground;
  for (const auto &c : concepts) cc.concepts.emplace_back(ground, c);
  cc.validate();
  return cc;
}

py::dict report_dict(const VerificationReport &rep) {
  py::list violations;
  for (const auto &v : rep.violations) violations.append(py::make_tuple(to_string(v.kind), v.first, v.second));
  py::dict d;
  d["ok"] = rep.ok;
  d["size"] = rep.size;
  d["positive_only"] = rep.positive_only;
  d["violations"] = violations;
  return d;
}

py::dict ball_map_dict(const BallMap &bm) {
  py::list classes;
  for (std::size_t i = 0; i < bm.family.size(); ++i) {
    py::list reps;
    for (const auto &r : bm.family.reps[i]) reps.append(py::make_tuple(r.center, r.radius));
    classes.append(py::make_tuple(bm.family.classes[i].members(), reps));
  }
  py::dict d;
  d["balls"] = classes;
  d["map"] = to_py(bm.map);
  d["size"] = bm.map.size();
  return d;
}

ConceptClass ball_class(const Graph &g, bool components) {
  return balls_as_concept_class(enumerate_balls(all_pairs_distances(g, components)), g.order());
}

py::dict solve_dict(const SolveResult &res) {
  py::dict d;
  d["k"] = res.k;
  d["status"] = to_string(res.status);
  d["nodes"] = res.nodes;
  d["map"] = res.witness ? py::cast(to_py(*res.witness)) : py::none();
  return d;
}

} // namespace

PYBIND11_MODULE(_nctb, m) {
  m.doc() = "Non-clashing teaching maps for balls in graphs";

  auto &base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidWitness>(m, "InvalidWitness", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<Edge> &>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("connected", &Graph::connected)
      .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
      .def("__repr__", [](const Graph &g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star", &star);
  m.def("edgeless", &edgeless);
  m.def("octahedron", &octahedron);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_cactus", &random_cactus, py::arg("n"), py::arg("seed"));
  m.def("random_connected", &random_connected, py::arg("n"), py::arg("extra_percent"), py::arg("seed"));
  m.def(
      "random_interval",
      [](int n, std::uint64_t seed) {
        auto ig = random_interval(n, seed);
        return py::make_tuple(ig.graph, ig.representation.start, ig.representation.end);
      },
      py::arg("n"), py::arg("seed"), "Returns (graph, starts, ends).");

  m.def(
      "distances",
      [](const Graph &g, bool components) {
        auto d = all_pairs_distances(g, components);
        std::vector<std::vector<int>> out(g.order(), std::vector<int>(g.order()));
        for (Vertex u = 0; u < g.order(); ++u)
          for (Vertex v = 0; v < g.order(); ++v) out[u][v] = d(u, v);
        return out;
      },
      py::arg("g"), py::arg("components") = false, "Distance matrix; -1 between components.");
  m.def(
      "balls",
      [](const Graph &g, bool components) {
        auto fam = enumerate_balls(all_pairs_distances(g, components));
        std::vector<std::vector<Vertex>> out;
        for (const auto &c : fam.classes) out.push_back(c.members());
        return out;
      },
      py::arg("g"), py::arg("components") = false, "Distinct balls as sorted vertex lists, in family order.");

  m.def(
      "verify",
      [](const std::vector<std::vector<Vertex>> &concepts, int ground, const std::vector<Sample> &samples,
         bool positive_only, int threads) {
        return report_dict(verify(to_class(concepts, ground), from_py(samples, ground), positive_only, threads));
      },
      py::arg("concepts"), py::arg("ground"), py::arg("samples"), py::arg("positive_only") = false,
      py::arg("threads") = 1);
  m.def(
      "verify_balls",
      [](const Graph &g, const std::vector<Sample> &samples, bool positive_only, std::optional<int> rho,
         bool components) {
        auto d = all_pairs_distances(g, components);
        auto fam = enumerate_balls(d);
        auto tm = from_py(samples, g.order());
        if (rho) return report_dict(verify_approx(fam, tm, *rho, d));
        return report_dict(verify(balls_as_concept_class(fam, g.order()), tm, positive_only));
      },
      py::arg("g"), py::arg("samples"), py::arg("positive_only") = false, py::arg("rho") = py::none(),
      py::arg("components") = false);

  m.def(
      "construct",
      [](const std::string &cls, const Graph &g, std::optional<std::pair<std::vector<double>, std::vector<double>>>
                                                      intervals) {
        if (cls == "tree") return ball_map_dict(tree_nctm_plus(g));
        if (cls == "cycle") return ball_map_dict(cycle_nctm(g.order()));
        if (cls == "cactus") return ball_map_dict(cactus_nctm(g));
        if (cls == "diam2") return ball_map_dict(diam2_nctm(g));
        if (cls == "interval") {
          if (!intervals) throw ValidationError("the interval class needs (starts, ends)");
          return ball_map_dict(interval_nctm_plus(g, {intervals->first, intervals->second}));
        }
        if (cls == "hyperbolic") {
          auto hm = hyperbolic_approx_nctm_plus(g);
          auto d = ball_map_dict(hm.map);
          d["rho"] = hm.delta_doubled;
          return d;
        }
        throw ValidationError("unknown class '" + cls + "'");
      },
      py::arg("cls"), py::arg("g"), py::arg("intervals") = py::none());

  m.def(
      "nctd",
      [](const Graph &g, bool positive_only, int kmax, std::uint64_t budget, bool components) {
        return solve_dict(nctd_exact(ball_class(g, components), positive_only, kmax, budget));
      },
      py::arg("g"), py::arg("positive_only") = false, py::arg("kmax") = 8, py::arg("budget") = kDefaultNodeBudget,
      py::arg("components") = false);
  m.def(
      "decide",
      [](const Graph &g, int k, bool positive_only, std::uint64_t budget, bool components) -> std::optional<bool> {
        return nctd_decision(ball_class(g, components), k, positive_only, budget).answer;
      },
      py::arg("g"), py::arg("k"), py::arg("positive_only") = false, py::arg("budget") = kDefaultNodeBudget,
      py::arg("components") = false, "True/False, or None when the node budget runs out.");

  m.def(
      "kernelize",
      [](const Graph &g, bool exact_cover) {
        auto tr = kernelize(g, exact_cover ? CoverMode::exact : CoverMode::approx2);
        py::dict d;
        d["kernel"] = tr.kernel;
        d["cover"] = tr.cover;
        std::vector<Vertex> deleted;
        for (const auto &del : tr.deletions) deleted.push_back(del.vertex);
        d["deleted"] = deleted;
        d["vertex_map"] = tr.vertex_map;
        d["bound"] = kernel_size_bound(static_cast<int>(tr.cover.size()));
        return d;
      },
      py::arg("g"), py::arg("exact_cover") = false);

  m.def(
      "hyperbolicity_doubled",
      [](const Graph &g, int threads) { return hyperbolicity_doubled(all_pairs_distances(g), threads); },
      py::arg("g"), py::arg("threads") = 1);
  m.def(
      "vc_dimension",
      [](const Graph &g, int dmax) { return vc_dimension_of_balls(g, dmax).dimension; }, py::arg("g"),
      py::arg("dmax") = 4);

  m.def(
      "reduce_setcover",
      [](int n, const std::vector<std::vector<int>> &sets, int t, const std::string &flavor) {
        auto f = parse_flavor(flavor);
        auto pre = preprocess_setcover(SetCoverInstance{n, sets, t}, f);
        auto out = setcover_to_gadget(pre.instance, f);
        py::dict d;
        d["graph"] = out.graph;
        d["k"] = out.k;
        d["roles"] = out.roles;
        d["sets"] = pre.instance.sets;
        d["set_origin"] = pre.set_origin;
        return d;
      },
      py::arg("n"), py::arg("sets"), py::arg("t"), py::arg("flavor") = "split",
      "Elements are 0-based here. Returns the gadget for the preprocessed instance.");

  m.def(
      "cli",
      [](const std::vector<std::string> &args, const std::string &input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "", "Runs one command line; returns (exit code, stdout, stderr).");
}
