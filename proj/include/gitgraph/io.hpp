#pragma once

#include <stdexcept>
#include <string>

#include "gitgraph/graph.hpp"

namespace gitgraph {

// Malformed input text (not valid JSON, wrong types, missing fields).
struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed text describing an invalid graph.
struct GraphInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"n": .., "k": .., "branches": [{"start":..,"end":..,"length":..}, ...]},
// 1-indexed, branches sorted by end. parse(serialize(g)) == g.
std::string serialize_json(const GitGraph& g);
GitGraph parse_json(const std::string& text);

// Graphviz digraph: main vertices m1..mk filled, branch vertices
// w{end}_{i} unfilled, edges left to right. Deterministic ordering.
std::string serialize_dot(const GitGraph& g);

// Plain edge list, one "from to" pair per line, same vertex names and order
// as the DOT output.
std::string serialize_edges(const GitGraph& g);

// POSIX shell script of git commands reconstructing the DAG: main commits
// M1..Mk tagged m1..mk, feature branches created at their start tag and
// merged (no fast-forward) when the main branch reaches their end commit.
// Requires k >= 1.
std::string emit_git_script(const GitGraph& g);

}  // namespace gitgraph
