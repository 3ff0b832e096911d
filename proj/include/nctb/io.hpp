#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nctb/concept.hpp"
#include "nctb/graph.hpp"
#include "nctb/reductions.hpp"
#include "nctb/structure.hpp"

namespace nctb {

// All readers skip blank lines, '#' comments and "RESULT ..." summary lines,
// so a command's stdout can be fed to the next one. Errors are ParseError
// carrying "<source>:<line>".

/// "n m", then m lines "u v" (0-based).
Graph read_graph(std::istream &in, const std::string &source = "<stdin>");
void write_graph(std::ostream &out, const Graph &g);

/// n lines "vertex s e".
IntervalRepresentation read_intervals(std::istream &in, int n, const std::string &source = "<stdin>");
void write_intervals(std::ostream &out, const IntervalRepresentation &rep);

/// One concept per line: ids, or "-" for the empty concept, and an optional
/// "# label". An optional first line "ground N" fixes the ground set;
/// otherwise it is 0..max id.
ConceptClass read_concepts(std::istream &in, const std::string &source = "<stdin>");
void write_concepts(std::ostream &out, const ConceptClass &cc);

/// "concept <i> pos <ids...> [neg <ids...>]", one line per concept in order.
TeachingMap read_map(std::istream &in, int universe, const std::string &source = "<stdin>");
/// Labels, when given, are appended as comments.
void write_map(std::ostream &out, const TeachingMap &tm, const std::vector<std::string> &labels = {});

/// "n m t", then m lines of 1-based element ids.
SetCoverInstance read_setcover(std::istream &in, const std::string &source = "<stdin>");
void write_setcover(std::ostream &out, const SetCoverInstance &inst);

/// "N M", then M clause lines of "part:index:sign" with part in
/// {alpha, beta, gamma} and sign in {+, -}.
Partitioned3SatInstance read_p3sat(std::istream &in, const std::string &source = "<stdin>");
void write_p3sat(std::ostream &out, const Partitioned3SatInstance &inst);

/// "vertex role" lines.
std::vector<std::string> read_roles(std::istream &in, int n, const std::string &source = "<stdin>");
void write_roles(std::ostream &out, const std::vector<std::string> &roles);

/// Three lines (alpha, beta, gamma) of N values 0/1.
Assignment read_assignment(std::istream &in, int N, const std::string &source = "<stdin>");
void write_assignment(std::ostream &out, const Assignment &assignment);

std::string format_members(const VertexSet &s);

} // namespace nctb
