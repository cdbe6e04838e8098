#ifndef FLAGCERT_NOTATION_HPP
#define FLAGCERT_NOTATION_HPP

#include <stdexcept>
#include <string>

#include "flagcert/graph.hpp"

namespace flagcert {

// Raised for malformed textual inputs (graph notation, certificate files,
// graphon files, solver output).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adjacency-list notation: '{' pairs '}' '_' '{' n ',' k '}'. A pair is two
// juxtaposed vertex ids; labeled vertices are digits 1..k, unlabeled ones
// letters starting at 'a' (= vertex k+1). Vertices not mentioned are
// isolated. Whitespace between tokens is ignored.
Graph parse_graph(const std::string& text);

// Edges in row-major pair order, no whitespace: "{12,1a}_{3,2}".
std::string format_graph(const Graph& g);

}  // namespace flagcert

#endif
