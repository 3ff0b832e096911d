#include "nctb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nctb/balls.hpp"
#include "nctb/concept.hpp"
#include "nctb/constructors.hpp"
#include "nctb/error.hpp"
#include "nctb/generators.hpp"
#include "nctb/io.hpp"
#include "nctb/kernel.hpp"
#include "nctb/reductions.hpp"
#include "nctb/solver.hpp"
#include "nctb/structure.hpp"

namespace nctb {

namespace {

using json = nlohmann::ordered_json;

// Key/value pairs printed last as "RESULT k=v ..." (and as JSON with --json).
class Summary {
public:
  void add(const std::string &key, json value) { items_.emplace_back(key, std::move(value)); }

  void print(std::ostream &out, bool as_json) const {
    if (as_json) {
      json obj = json::object();
      for (const auto &[k, v] : items_) obj[k] = v;
      out << obj.dump() << '\n';
    }
    out << "RESULT";
    for (const auto &[k, v] : items_) out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    out << '\n';
  }

private:
  std::vector<std::pair<std::string, json>> items_;
};

struct Options {
  bool json = false;
  int threads = 1;
  std::optional<std::uint64_t> seed;

  std::string input = "-";
  std::string map_file;
  std::string concepts_file;
  std::string intervals_file;
  std::string roles_file;
  std::string assignment_file;
  std::string family = "tree";
  std::string klass;
  std::string mode = "nctd+";
  std::string flavor;
  std::string cover_mode = "approx2";
  std::string cover_sets;
  int n = 0;
  int b = 0;
  int extra = 20;
  int kmax = 8;
  std::optional<int> k;
  std::uint64_t budget = kDefaultNodeBudget;
  bool positive_only = false;
  bool components = false;
  std::optional<int> rho;
  int dmax = 4;
};

class Runner {
public:
  Runner(const Options &opt, std::istream &in, std::ostream &out) : opt_(opt), in_(in), out_(out) {}

  std::istream &open(const std::string &path) {
    if (path == "-") {
      if (stdin_used_) throw ValidationError("standard input can feed only one file");
      stdin_used_ = true;
      return in_;
    }
    auto f = std::make_unique<std::ifstream>(path);
    if (!*f) throw ValidationError("cannot read " + path);
    files_.push_back(std::move(f));
    return *files_.back();
  }

  static std::string name(const std::string &path) { return path == "-" ? "<stdin>" : path; }

  Graph graph() { return read_graph(open(opt_.input), name(opt_.input)); }

  std::uint64_t seed() const {
    if (opt_.seed) return *opt_.seed;
    if (const char *env = std::getenv("NCTB_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception &) {
        throw ValidationError(std::string("NCTB_SEED is not an integer: ") + env);
      }
    }
    return 1;
  }

  // The ball class of a graph, or an explicit concept file.
  struct Target {
    ConceptClass cc;
    std::optional<BallFamily> family;
    std::optional<DistanceMatrix> dist;
  };

  Target target() {
    Target t;
    if (!opt_.concepts_file.empty()) {
      t.cc = read_concepts(open(opt_.concepts_file), name(opt_.concepts_file));
      return t;
    }
    Graph g = graph();
    t.dist = all_pairs_distances(g, opt_.components);
    t.family = enumerate_balls(*t.dist);
    t.cc = balls_as_concept_class(*t.family, g.order());
    return t;
  }

  int gen(Summary &sum) {
    const std::uint64_t s = seed();
    const std::string &f = opt_.family;
    Graph g;
    if (f == "path") g = path_graph(opt_.n);
    else if (f == "cycle") g = cycle_graph(opt_.n);
    else if (f == "star") g = star(opt_.n);
    else if (f == "edgeless") g = edgeless(opt_.n);
    else if (f == "octahedron") g = octahedron(opt_.n);
    else if (f == "bipartite") g = complete_bipartite(opt_.n, opt_.b);
    else if (f == "tree") g = random_tree(opt_.n, s);
    else if (f == "cactus") g = random_cactus(opt_.n, s);
    else if (f == "connected") g = random_connected(opt_.n, opt_.extra, s);
    else if (f == "interval") {
      auto ig = random_interval(opt_.n, s);
      g = ig.graph;
      if (!opt_.intervals_file.empty()) {
        std::ofstream rep(opt_.intervals_file);
        if (!rep) throw ValidationError("cannot write " + opt_.intervals_file);
        write_intervals(rep, ig.representation);
      }
    } else
      throw ValidationError("unknown family '" + f + "'");
    write_graph(out_, g);
    sum.add("family", f);
    sum.add("n", g.order());
    sum.add("m", g.size());
    sum.add("seed", s);
    return 0;
  }

  int balls(Summary &sum) {
    Graph g = graph();
    auto d = all_pairs_distances(g, opt_.components);
    auto family = enumerate_balls(d);
    out_ << "ground " << g.order() << '\n';
    for (std::size_t i = 0; i < family.size(); ++i) {
      out_ << format_members(family.classes[i]) << " #";
      for (const auto &rep : family.reps[i]) out_ << ' ' << rep.label();
      out_ << '\n';
    }
    sum.add("balls", family.size());
    sum.add("diameter", d.diameter());
    return 0;
  }

  int construct(Summary &sum) {
    Graph g = graph();
    BallMap bm;
    std::optional<int> delta2;
    const std::string &c = opt_.klass;
    if (c == "tree") bm = tree_nctm_plus(g);
    else if (c == "interval") {
      if (opt_.intervals_file.empty()) throw ValidationError("--intervals is required for the interval class");
      auto rep = read_intervals(open(opt_.intervals_file), g.order(), name(opt_.intervals_file));
      bm = interval_nctm_plus(g, rep);
    } else if (c == "cycle") {
      // Only the graph's order matters, but it must be the cycle 0-1-...-(n-1).
      if (!(g == cycle_graph(g.order()))) throw ValidationError("input is not the cycle 0-1-...-(n-1)");
      bm = cycle_nctm(g.order());
    } else if (c == "cactus") bm = cactus_nctm(g);
    else if (c == "hyperbolic") {
      auto hm = hyperbolic_approx_nctm_plus(g);
      bm = std::move(hm.map);
      delta2 = hm.delta_doubled;
    } else if (c == "diam2") bm = diam2_nctm(g);
    else
      throw ValidationError("unknown class '" + c + "'");
    write_map(out_, bm.map, labels(bm.family));
    sum.add("class", c);
    sum.add("concepts", bm.map.count());
    sum.add("size", bm.map.size());
    sum.add("positive_only", bm.map.positive_only());
    if (delta2) sum.add("rho", *delta2);
    return 0;
  }

  int verify_cmd(Summary &sum) {
    auto t = target();
    TeachingMap tm = read_map(open(opt_.map_file), t.cc.ground, name(opt_.map_file));
    if (tm.count() != t.cc.size())
      throw ValidationError("map has " + std::to_string(tm.count()) + " entries for " + std::to_string(t.cc.size()) +
                            " concepts");
    VerificationReport rep;
    if (opt_.rho) {
      if (!t.family) throw ValidationError("--rho needs a graph input");
      rep = verify_approx(*t.family, tm, *opt_.rho, *t.dist);
    } else
      rep = verify(t.cc, tm, opt_.positive_only, opt_.threads);
    for (const auto &v : rep.violations) {
      out_ << to_string(v.kind) << ' ' << v.first;
      if (v.second != v.first) out_ << ' ' << v.second;
      out_ << '\n';
    }
    sum.add("ok", rep.ok);
    sum.add("size", rep.size);
    sum.add("positive_only", rep.positive_only);
    sum.add("violations", rep.violations.size());
    return rep.ok ? 0 : 1;
  }

  bool positive_mode() const {
    if (opt_.mode == "nctd+") return true;
    if (opt_.mode == "nctd") return false;
    throw ValidationError("mode must be nctd or nctd+");
  }

  int solve(Summary &sum) {
    bool pos = positive_mode();
    auto t = target();
    auto lbl = t.family ? labels(*t.family) : t.cc.labels;
    if (opt_.k) {
      auto res = nctd_decision(t.cc, *opt_.k, pos, opt_.budget);
      if (res.witness) write_map(out_, *res.witness, lbl);
      sum.add("answer", !res.answer ? "UNKNOWN" : *res.answer ? "YES" : "NO");
      sum.add("k", *opt_.k);
      sum.add("nodes", res.nodes);
      sum.add("mode", opt_.mode);
      return res.answer && *res.answer ? 0 : 1;
    }
    auto res = nctd_exact(t.cc, pos, opt_.kmax, opt_.budget);
    if (res.witness) write_map(out_, *res.witness, lbl);
    exact_summary(sum, res);
    sum.add("mode", opt_.mode);
    return res.status == SolveStatus::optimal ? 0 : 1;
  }

  // answer=YES k=<value> when solved, answer=NO k=<kmax> when every k up to
  // kmax was refuted.
  void exact_summary(Summary &sum, const SolveResult &res) const {
    const char *answer = res.status == SolveStatus::optimal ? "YES" : res.status == SolveStatus::above_kmax ? "NO" : "UNKNOWN";
    sum.add("answer", answer);
    sum.add("k", res.status == SolveStatus::above_kmax ? opt_.kmax : res.k);
    sum.add("status", to_string(res.status));
    sum.add("nodes", res.nodes);
  }

  CoverMode cover_mode() const {
    if (opt_.cover_mode == "approx2") return CoverMode::approx2;
    if (opt_.cover_mode == "exact") return CoverMode::exact;
    throw ValidationError("cover must be approx2 or exact");
  }

  int kernelize_cmd(Summary &sum) {
    Graph g = graph();
    auto trace = kernelize(g, cover_mode());
    write_graph(out_, trace.kernel);
    out_ << "# cover";
    for (Vertex v : trace.cover) out_ << ' ' << v;
    out_ << '\n';
    for (const auto &del : trace.deletions) {
      out_ << "# deleted " << del.vertex << " twins";
      for (Vertex v : del.twins) out_ << ' ' << v;
      out_ << '\n';
    }
    out_ << "# kept";
    for (Vertex v = 0; v < g.order(); ++v)
      if (trace.vertex_map[v] >= 0) out_ << ' ' << v << "->" << trace.vertex_map[v];
    out_ << '\n';
    sum.add("n", g.order());
    sum.add("kernel_n", trace.kernel.order());
    sum.add("deleted", trace.deletions.size());
    sum.add("cover", trace.cover.size());
    sum.add("bound", kernel_size_bound(static_cast<int>(trace.cover.size())));
    return 0;
  }

  int solve_vc(Summary &sum) {
    Graph g = graph();
    bool pos = positive_mode();
    auto trace = kernelize(g, cover_mode());
    auto res = solve_via_kernel(g, pos, opt_.kmax, opt_.budget, cover_mode());
    if (res.witness) {
      auto family = enumerate_balls(all_pairs_distances(trace.kernel, true));
      write_map(out_, *res.witness, labels(family));
    }
    sum.add("kernel_n", trace.kernel.order());
    exact_summary(sum, res);
    return res.status == SolveStatus::optimal ? 0 : 1;
  }

  int reduce(Summary &sum) {
    ReductionOutput red;
    if (opt_.flavor == "p3sat") {
      auto inst = read_p3sat(open(opt_.input), name(opt_.input));
      red = p3sat_to_gadget(inst);
      sum.add("flavor", "p3sat");
      sum.add("p", set_rep(inst.M()).p);
    } else {
      auto flavor = parse_flavor(opt_.flavor);
      auto inst = read_setcover(open(opt_.input), name(opt_.input));
      auto pre = preprocess_setcover(inst, flavor);
      red = setcover_to_gadget(pre.instance, flavor);
      sum.add("flavor", to_string(flavor));
      sum.add("sets", pre.instance.m());
      sum.add("elements", pre.instance.n);
    }
    write_graph(out_, red.graph);
    if (!opt_.roles_file.empty()) {
      std::ofstream roles(opt_.roles_file);
      if (!roles) throw ValidationError("cannot write " + opt_.roles_file);
      write_roles(roles, red.roles);
    } else
      for (std::size_t v = 0; v < red.roles.size(); ++v) out_ << "# role " << v << ' ' << red.roles[v] << '\n';
    sum.add("n", red.graph.order());
    sum.add("k", red.k);
    if (!red.cover.empty()) sum.add("cover", red.cover.size());
    return 0;
  }

  int witness(Summary &sum) {
    TeachingMap tm;
    ReductionOutput red;
    if (opt_.flavor == "p3sat") {
      auto inst = read_p3sat(open(opt_.input), name(opt_.input));
      if (opt_.assignment_file.empty()) throw ValidationError("--assignment is required for p3sat");
      auto a = read_assignment(open(opt_.assignment_file), inst.N, name(opt_.assignment_file));
      red = p3sat_to_gadget(inst);
      tm = p3sat_forward_map(inst, a);
    } else {
      auto flavor = parse_flavor(opt_.flavor);
      auto inst = read_setcover(open(opt_.input), name(opt_.input));
      auto pre = preprocess_setcover(inst, flavor);
      std::vector<int> cover;
      for (int s : parse_ids(opt_.cover_sets)) {
        if (s < 1 || s > inst.m()) throw ValidationError("set " + std::to_string(s) + " out of range");
        auto it = std::find(pre.set_origin.begin(), pre.set_origin.end(), s - 1);
        cover.push_back(static_cast<int>(it - pre.set_origin.begin()));
      }
      red = setcover_to_gadget(pre.instance, flavor);
      tm = setcover_forward_map(pre.instance, cover, flavor);
    }
    auto d = all_pairs_distances(red.graph);
    auto family = enumerate_balls(d);
    auto rep = verify(balls_as_concept_class(family, red.graph.order()), tm, true, opt_.threads);
    write_map(out_, tm, labels(family));
    sum.add("flavor", opt_.flavor);
    sum.add("concepts", tm.count());
    sum.add("size", tm.size());
    sum.add("k", red.k);
    sum.add("ok", rep.ok);
    sum.add("within_budget", tm.size() <= red.k);
    return rep.ok && tm.size() <= red.k ? 0 : 1;
  }

  int extract(Summary &sum) {
    auto inst = read_p3sat(open(opt_.input), name(opt_.input));
    auto red = p3sat_to_gadget(inst);
    auto tm = read_map(open(opt_.map_file), red.graph.order(), name(opt_.map_file));
    auto res = p3sat_extract_assignment(inst, tm, red);
    write_assignment(out_, res.assignment);
    sum.add("satisfying", res.satisfying);
    return res.satisfying ? 0 : 1;
  }

  int vcdim(Summary &sum) {
    Graph g = graph();
    auto family = enumerate_balls(all_pairs_distances(g, opt_.components));
    auto res = vc_dimension(family.classes, g.order(), opt_.dmax);
    std::string w;
    for (Vertex v : res.witness) w += (w.empty() ? "" : ",") + std::to_string(v);
    sum.add("vcdim", res.dimension);
    sum.add("witness", w.empty() ? "-" : w);
    sum.add("possibly_larger", res.possibly_larger);
    return 0;
  }

  int hyperbolicity(Summary &sum) {
    Graph g = graph();
    int d2 = hyperbolicity_doubled(all_pairs_distances(g), opt_.threads);
    sum.add("delta", std::to_string(d2 / 2) + (d2 % 2 ? ".5" : ""));
    sum.add("delta_doubled", d2);
    return 0;
  }

private:
  static std::vector<std::string> labels(const BallFamily &family) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < family.size(); ++i) out.push_back(family.canonical(i).label());
    return out;
  }

  static std::vector<int> parse_ids(const std::string &text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        std::size_t used = 0;
        ids.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception &) {
        throw ValidationError("bad set id '" + item + "' in --cover");
      }
    }
    return ids;
  }

  const Options &opt_;
  std::istream &in_;
  std::ostream &out_;
  bool stdin_used_ = false;
  std::vector<std::unique_ptr<std::ifstream>> files_;
};

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Non-clashing teaching maps for balls in graphs", "nctb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Also print the summary as a JSON line");
  app.add_option("--threads", opt.threads, "Worker threads (never changes output)")->check(CLI::Range(1, 256));
  app.add_option("--seed", opt.seed, "Generator seed (falls back to NCTB_SEED, then 1)");

  auto graph_in = [&](CLI::App *sub) { sub->add_option("--input,-i", opt.input, "Input file ('-' for stdin)"); };

  auto *gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", opt.family,
                  "path|cycle|star|edgeless|octahedron|bipartite|tree|cactus|interval|connected")
      ->required();
  gen->add_option("--n", opt.n, "Size (vertices, leaves or half-order by family)")->required();
  gen->add_option("--b", opt.b, "Second side for bipartite");
  gen->add_option("--extra", opt.extra, "Extra edge percentage for connected");
  gen->add_option("--intervals", opt.intervals_file, "Write the interval model here");

  auto *balls = app.add_subcommand("balls", "List the distinct balls");
  graph_in(balls);
  balls->add_flag("--components", opt.components, "Allow disconnected graphs (balls per component)");

  auto *construct = app.add_subcommand("construct", "Build a teaching map for a graph class");
  graph_in(construct);
  construct->add_option("--class", opt.klass, "tree|interval|cycle|cactus|hyperbolic|diam2")->required();
  construct->add_option("--intervals", opt.intervals_file, "Interval model (interval class)");

  auto *verify = app.add_subcommand("verify", "Check a teaching map");
  graph_in(verify);
  verify->add_option("--concepts", opt.concepts_file, "Concept class file instead of a graph");
  verify->add_option("--map", opt.map_file, "Teaching map ('-' for stdin)")->required();
  verify->add_flag("--positive-only", opt.positive_only, "Require positive-only samples");
  verify->add_option("--rho", opt.rho, "Approximate check up to Hausdorff distance rho");
  verify->add_flag("--components", opt.components, "Allow disconnected graphs");

  auto *solve = app.add_subcommand("solve", "Exact solver");
  graph_in(solve);
  solve->add_option("--concepts", opt.concepts_file, "Concept class file instead of a graph");
  solve->add_option("--mode", opt.mode, "nctd|nctd+");
  solve->add_option("--kmax", opt.kmax, "Largest size tried");
  solve->add_option("--k", opt.k, "Decide a single size instead");
  solve->add_option("--budget", opt.budget, "Search node budget");
  solve->add_flag("--components", opt.components, "Allow disconnected graphs");

  auto *solve_vc = app.add_subcommand("solve-vc", "Kernelize, then solve (nctd+ only)");
  graph_in(solve_vc);
  solve_vc->add_option("--mode", opt.mode, "nctd+");
  solve_vc->add_option("--kmax", opt.kmax, "Largest size tried");
  solve_vc->add_option("--budget", opt.budget, "Search node budget");
  solve_vc->add_option("--cover", opt.cover_mode, "approx2|exact");

  auto *kern = app.add_subcommand("kernelize", "Apply the false-twin rule exhaustively");
  graph_in(kern);
  kern->add_option("--cover", opt.cover_mode, "approx2|exact");

  auto *reduce = app.add_subcommand("reduce", "Build a hardness gadget");
  graph_in(reduce);
  reduce->add_option("--flavor", opt.flavor, "split|cobipartite|bipartite|p3sat")->required();
  reduce->add_option("--roles", opt.roles_file, "Write roles here instead of as comments");

  auto *witness = app.add_subcommand("witness", "Forward teaching map for a gadget");
  graph_in(witness);
  witness->add_option("--flavor", opt.flavor, "split|cobipartite|bipartite|p3sat")->required();
  witness->add_option("--cover", opt.cover_sets, "Comma-separated 1-based set ids");
  witness->add_option("--assignment", opt.assignment_file, "Satisfying assignment (p3sat)");

  auto *extract = app.add_subcommand("extract", "Read an assignment off a p3sat gadget map");
  graph_in(extract);
  extract->add_option("--map", opt.map_file, "Teaching map")->required();

  auto *vcdim = app.add_subcommand("vcdim", "VC-dimension of the ball family");
  graph_in(vcdim);
  vcdim->add_option("--dmax", opt.dmax, "Largest set size tried");
  vcdim->add_flag("--components", opt.components, "Allow disconnected graphs");

  auto *hyp = app.add_subcommand("hyperbolicity", "Four-point hyperbolicity");
  graph_in(hyp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Runner run(opt, in, out);
  Summary sum;
  int code = 0;
  try {
    auto *sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    if (cmd == "gen") code = run.gen(sum);
    else if (cmd == "balls") code = run.balls(sum);
    else if (cmd == "construct") code = run.construct(sum);
    else if (cmd == "verify") code = run.verify_cmd(sum);
    else if (cmd == "solve") code = run.solve(sum);
    else if (cmd == "solve-vc") code = run.solve_vc(sum);
    else if (cmd == "kernelize") code = run.kernelize_cmd(sum);
    else if (cmd == "reduce") code = run.reduce(sum);
    else if (cmd == "witness") code = run.witness(sum);
    else if (cmd == "extract") code = run.extract(sum);
    else if (cmd == "vcdim") code = run.vcdim(sum);
    else if (cmd == "hyperbolicity") code = run.hyperbolicity(sum);
  } catch (const InvalidWitness &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  sum.print(out, opt.json);
  return code;
}

} // namespace nctb
