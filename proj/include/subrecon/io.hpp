#pragma once

#include <string>
#include <vector>

#include "subrecon/oracle.hpp"
#include "subrecon/types.hpp"

namespace subrecon {

/// Parses the JSON instance document:
///   {"graph": {"n": 4, "edges": [[0,1], ...]},
///    "variant": "edge|induced|spanning", "rule": "tj|ts",
///    "property": {"kind": "...", "i"?, "j"?, "s"?, "t"?},
///    "source": [...], "target": [...]}
/// Solutions are vertex lists for the induced and spanning variants and
/// [u,v] pair lists for the edge variant. Unknown fields anywhere are
/// rejected with input_error, as are malformed values. Parsing does not
/// check feasibility; pair with validate_instance for that.
Instance parse_instance_json(const std::string& text);

/// Inverse of parse_instance_json; parse(serialize(x)) == x.
std::string serialize_instance_json(const Instance& inst);

/// One-line canonical form: vertex sets as "0 1 2", edge sets as "0-1 1-2"
/// (u < v, ascending). The empty solution prints as an empty line.
std::string format_solution(const Solution& sol);

/// Parses one format_solution line. Tolerates extra whitespace.
Solution parse_solution_line(const std::string& line, SolutionKind kind);

/// One canonical solution per line, newline-terminated.
std::string format_sequence(const ReconfigSequence& seq);

/// Parses format_sequence output: every line (including blank lines, which
/// denote the empty solution) becomes one step.
std::vector<Solution> parse_sequence_text(const std::string& text,
                                          SolutionKind kind);

/// Graphviz rendering of an explored reconfiguration graph. Nodes carry
/// canonical solution labels; source and target are highlighted.
std::string to_dot(const ReconfigGraph& rg);

}  // namespace subrecon
