#include "nctb/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "nctb/error.hpp"

namespace nctb {

namespace {

// Line reader that hands out tokenized content lines with their numbers.
class Lines {
public:
  Lines(std::istream &in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next content line split into tokens; comment (if any) in `comment`.
  bool next(std::vector<std::string> &tokens, std::string *comment = nullptr) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      std::string body = line, note;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        body = line.substr(0, hash);
        note = line.substr(hash + 1);
      }
      tokens.clear();
      std::istringstream words(body);
      for (std::string w; words >> w;) tokens.push_back(w);
      if (tokens.empty() || tokens[0] == "RESULT") continue;
      if (comment) {
        auto b = note.find_first_not_of(' ');
        auto e = note.find_last_not_of(" \r");
        *comment = b == std::string::npos ? "" : note.substr(b, e - b + 1);
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(source_, number_, what); }

  int integer(const std::string &token, const char *what) const {
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) fail(std::string("expected ") + what + ", got '" + token + "'");
    return value;
  }

  double number(const std::string &token, const char *what) const {
    try {
      std::size_t used = 0;
      double value = std::stod(token, &used);
      if (used == token.size()) return value;
    } catch (const std::exception &) {
    }
    fail(std::string("expected ") + what + ", got '" + token + "'");
  }

  Vertex vertex(const std::string &token, int universe) const {
    int v = integer(token, "a vertex id");
    if (v < 0 || (universe >= 0 && v >= universe)) fail("vertex " + token + " out of range");
    return v;
  }

  int line() const { return number_; }

private:
  std::istream &in_;
  std::string source_;
  int number_ = 0;
};

void write_ids(std::ostream &out, const VertexSet &s) {
  s.for_each([&](Vertex v) { out << ' ' << v; });
}

} // namespace

std::string format_members(const VertexSet &s) {
  std::ostringstream out;
  bool first = true;
  s.for_each([&](Vertex v) {
    out << (first ? "" : " ") << v;
    first = false;
  });
  return out.str();
}

Graph read_graph(std::istream &in, const std::string &source) {
  Lines lines(in, source);
  std::vector<std::string> t;
  if (!lines.next(t)) lines.fail("missing header 'n m'");
  if (t.size() != 2) lines.fail("header must be 'n m'");
  int n = lines.integer(t[0], "vertex count"), m = lines.integer(t[1], "edge count");
  if (n < 0 || m < 0) lines.fail("negative count");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    if (!lines.next(t)) lines.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (t.size() != 2) lines.fail("edge line must be 'u v'");
    edges.emplace_back(lines.vertex(t[0], n), lines.vertex(t[1], n));
  }
  if (lines.next(t)) lines.fail("unexpected content after the edge list");
  try {
    return Graph(n, edges);
  } catch (const ValidationError &e) {
    throw ParseError(source, lines.line(), e.what());
  }
}

void write_graph(std::ostream &out, const Graph &g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

IntervalRepresentation read_intervals(std::istream &in, int n, const std::string &source) {
  Lines lines(in, source);
  IntervalRepresentation rep;
  rep.start.assign(n, 0);
  rep.end.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::string> t;
  while (lines.next(t)) {
    if (t.size() != 3) lines.fail("interval line must be 'vertex s e'");
    Vertex v = lines.vertex(t[0], n);
    if (seen[v]) lines.fail("vertex " + t[0] + " listed twice");
    seen[v] = 1;
    rep.start[v] = lines.number(t[1], "a start point");
    rep.end[v] = lines.number(t[2], "an end point");
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) lines.fail("no interval for vertex " + std::to_string(v));
  return rep;
}

void write_intervals(std::ostream &out, const IntervalRepresentation &rep) {
  // Shortest round-trip form.
  auto put = [&](double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    out << ' ' << std::string_view(buf, res.ptr - buf);
  };
  for (int v = 0; v < rep.order(); ++v) {
    out << v;
    put(rep.start[v]);
    put(rep.end[v]);
    out << '\n';
  }
}

ConceptClass read_concepts(std::istream &in, const std::string &source) {
  Lines lines(in, source);
  ConceptClass cc;
  cc.ground = -1;
  std::vector<std::vector<Vertex>> rows;
  std::vector<int> row_line;
  std::vector<std::string> t;
  std::string label;
  bool any_label = false;
  while (lines.next(t, &label)) {
    if (t[0] == "ground") {
      if (!rows.empty() || cc.ground >= 0) lines.fail("'ground' must be the first line");
      if (t.size() != 2) lines.fail("expected 'ground N'");
      cc.ground = lines.integer(t[1], "a ground size");
      if (cc.ground < 0) lines.fail("negative ground size");
      continue;
    }
    std::vector<Vertex> row;
    if (!(t.size() == 1 && t[0] == "-"))
      for (const auto &w : t) row.push_back(lines.vertex(w, cc.ground));
    rows.push_back(std::move(row));
    row_line.push_back(lines.line());
    cc.labels.push_back(label);
    any_label = any_label || !label.empty();
  }
  if (cc.ground < 0) {
    cc.ground = 0;
    for (const auto &row : rows)
      for (Vertex v : row) cc.ground = std::max(cc.ground, v + 1);
  }
  for (auto &row : rows) cc.concepts.emplace_back(cc.ground, row);
  if (!any_label) cc.labels.clear();
  for (std::size_t i = 0; i < cc.concepts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (cc.concepts[i] == cc.concepts[j])
        throw ParseError(source, row_line[i], "concept repeats line " + std::to_string(row_line[j]));
  return cc;
}

void write_concepts(std::ostream &out, const ConceptClass &cc) {
  out << "ground " << cc.ground << '\n';
  for (std::size_t i = 0; i < cc.size(); ++i) {
    const auto &c = cc.concepts[i];
    out << (c.empty() ? "-" : format_members(c));
    if (!cc.labels.empty() && !cc.labels[i].empty()) out << " # " << cc.labels[i];
    out << '\n';
  }
}

TeachingMap read_map(std::istream &in, int universe, const std::string &source) {
  Lines lines(in, source);
  TeachingMap tm;
  std::vector<std::string> t;
  while (lines.next(t)) {
    if (t.size() < 3 || t[0] != "concept" || t[2] != "pos") lines.fail("expected 'concept <i> pos ...'");
    int index = lines.integer(t[1], "a concept index");
    if (index != static_cast<int>(tm.count()))
      lines.fail("expected concept " + std::to_string(tm.count()) + ", got " + t[1]);
    SignedSample s(universe);
    bool negative = false;
    for (std::size_t i = 3; i < t.size(); ++i) {
      if (t[i] == "neg") {
        if (negative) lines.fail("'neg' given twice");
        negative = true;
        continue;
      }
      Vertex v = lines.vertex(t[i], universe);
      (negative ? s.negative : s.positive).insert(v);
    }
    if (s.positive.intersects(s.negative)) lines.fail("a vertex is both positive and negative");
    tm.samples.push_back(std::move(s));
  }
  return tm;
}

void write_map(std::ostream &out, const TeachingMap &tm, const std::vector<std::string> &labels) {
  for (std::size_t i = 0; i < tm.count(); ++i) {
    const auto &s = tm.samples[i];
    out << "concept " << i << " pos";
    write_ids(out, s.positive);
    if (!s.negative.empty()) {
      out << " neg";
      write_ids(out, s.negative);
    }
    if (i < labels.size() && !labels[i].empty()) out << " # " << labels[i];
    out << '\n';
  }
}

SetCoverInstance read_setcover(std::istream &in, const std::string &source) {
  Lines lines(in, source);
  std::vector<std::string> t;
  if (!lines.next(t)) lines.fail("missing header 'n m t'");
  if (t.size() != 3) lines.fail("header must be 'n m t'");
  SetCoverInstance inst;
  inst.n = lines.integer(t[0], "element count");
  int m = lines.integer(t[1], "set count");
  inst.t = lines.integer(t[2], "budget t");
  if (inst.n < 1 || m < 1 || inst.t < 0) lines.fail("need n >= 1, m >= 1, t >= 0");
  for (int i = 0; i < m; ++i) {
    if (!lines.next(t)) lines.fail("expected " + std::to_string(m) + " sets, found " + std::to_string(i));
    std::vector<int> set;
    for (const auto &w : t) {
      int e = lines.integer(w, "an element id");
      if (e < 1 || e > inst.n) lines.fail("element " + w + " outside 1.." + std::to_string(inst.n));
      set.push_back(e - 1);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.sets.push_back(std::move(set));
  }
  if (lines.next(t)) lines.fail("unexpected content after the sets");
  try {
    inst.validate();
  } catch (const ValidationError &e) {
    throw ParseError(source, lines.line(), e.what());
  }
  return inst;
}

void write_setcover(std::ostream &out, const SetCoverInstance &inst) {
  out << inst.n << ' ' << inst.m() << ' ' << inst.t << '\n';
  for (const auto &set : inst.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i] + 1;
    out << '\n';
  }
}

Partitioned3SatInstance read_p3sat(std::istream &in, const std::string &source) {
  Lines lines(in, source);
  std::vector<std::string> t;
  if (!lines.next(t)) lines.fail("missing header 'N M'");
  if (t.size() != 2) lines.fail("header must be 'N M'");
  Partitioned3SatInstance inst;
  inst.N = lines.integer(t[0], "variables per part");
  int M = lines.integer(t[1], "clause count");
  if (inst.N < 1 || M < 1) lines.fail("need N >= 1 and M >= 1");
  for (int c = 0; c < M; ++c) {
    if (!lines.next(t)) lines.fail("expected " + std::to_string(M) + " clauses, found " + std::to_string(c));
    std::vector<Literal> clause;
    for (const auto &w : t) {
      auto a = w.find(':'), b = w.rfind(':');
      if (a == std::string::npos || a == b) lines.fail("literal must be part:index:sign, got '" + w + "'");
      std::string part = w.substr(0, a), sign = w.substr(b + 1);
      Literal lit;
      if (part == "alpha") lit.part = Part::alpha;
      else if (part == "beta") lit.part = Part::beta;
      else if (part == "gamma") lit.part = Part::gamma;
      else lines.fail("unknown part '" + part + "'");
      lit.index = lines.integer(w.substr(a + 1, b - a - 1), "a variable index");
      if (sign == "+") lit.positive = true;
      else if (sign == "-") lit.positive = false;
      else lines.fail("sign must be + or -, got '" + sign + "'");
      clause.push_back(lit);
    }
    inst.clauses.push_back(std::move(clause));
  }
  if (lines.next(t)) lines.fail("unexpected content after the clauses");
  try {
    inst.validate();
  } catch (const ValidationError &e) {
    throw ParseError(source, lines.line(), e.what());
  }
  return inst;
}

void write_p3sat(std::ostream &out, const Partitioned3SatInstance &inst) {
  out << inst.N << ' ' << inst.M() << '\n';
  for (const auto &clause : inst.clauses) {
    for (std::size_t i = 0; i < clause.size(); ++i)
      out << (i ? " " : "") << to_string(clause[i].part) << ':' << clause[i].index << ':'
          << (clause[i].positive ? '+' : '-');
    out << '\n';
  }
}

std::vector<std::string> read_roles(std::istream &in, int n, const std::string &source) {
  Lines lines(in, source);
  std::vector<std::string> roles(n);
  std::vector<std::string> t;
  while (lines.next(t)) {
    if (t.size() != 2) lines.fail("role line must be 'vertex role'");
    Vertex v = lines.vertex(t[0], n);
    if (!roles[v].empty()) lines.fail("vertex " + t[0] + " has two roles");
    roles[v] = t[1];
  }
  for (int v = 0; v < n; ++v)
    if (roles[v].empty()) lines.fail("no role for vertex " + std::to_string(v));
  return roles;
}

void write_roles(std::ostream &out, const std::vector<std::string> &roles) {
  for (std::size_t v = 0; v < roles.size(); ++v) out << v << ' ' << roles[v] << '\n';
}

Assignment read_assignment(std::istream &in, int N, const std::string &source) {
  Lines lines(in, source);
  Assignment a;
  std::vector<std::string> t;
  while (lines.next(t)) {
    if (a.size() == 3) lines.fail("an assignment has three rows");
    if (static_cast<int>(t.size()) != N) lines.fail("expected " + std::to_string(N) + " values");
    std::vector<bool> row;
    for (const auto &w : t) {
      if (w != "0" && w != "1") lines.fail("values must be 0 or 1");
      row.push_back(w == "1");
    }
    a.push_back(std::move(row));
  }
  if (a.size() != 3) lines.fail("an assignment has three rows");
  return a;
}

void write_assignment(std::ostream &out, const Assignment &assignment) {
  for (const auto &row : assignment) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << (row[i] ? 1 : 0);
    out << '\n';
  }
}

} // namespace nctb
