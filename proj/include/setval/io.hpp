#ifndef SETVAL_IO_HPP
#define SETVAL_IO_HPP

// Text formats.
//
// Signed edge list:
//   # comment
//   vertices: a b c        optional; fixes id order and admits isolated vertices
//   a b +
//   b c -
// Vertex ids are assigned by first appearance (header first). Repeating an
// edge with the same sign is tolerated and counted; with the other sign it
// is a DuplicateEdgeConflict.
//
// Valuation (text):
//   m: 3
//   a: 1 2
//   b:
//   c: 3
// Valuation (JSON): {"ground_size": 3, "labels": {"a": [1, 2], "b": [], "c": [3]}}
// Both serializers list vertices in byte order of their names.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setval/graph.hpp"
#include "setval/oracle.hpp"
#include "setval/valuation.hpp"

namespace setval {

struct SignedGraphDocument {
  SignedGraph graph;
  std::vector<std::string> names;  // names[v] for VertexId v
  std::size_t duplicate_edges = 0;
};

// Throws ParseError, SelfLoopRejected, DuplicateEdgeConflict.
SignedGraphDocument parse_signed_graph(std::string_view text);

// Throws PreconditionViolated if names does not cover every vertex or a name
// is not a valid token.
std::string serialize_signed_graph(const SignedGraph& sg, std::span<const std::string> names);

// "v0", "v1", ...
std::vector<std::string> default_names(std::size_t n);

struct ValuationDocument {
  GroundSet ground{1};
  std::map<std::string, SetLabel> labels;

  bool operator==(const ValuationDocument&) const = default;
};

// Throws ParseError (malformed lines, element outside [1, m], repeated
// element or name) and NotInjective.
ValuationDocument parse_valuation_text(std::string_view text);
ValuationDocument parse_valuation_json(std::string_view text);
// Dispatches on the first non-blank character ('{' means JSON).
ValuationDocument parse_valuation(std::string_view text);

std::string serialize_valuation_text(const ValuationDocument& doc);
std::string serialize_valuation_json(const ValuationDocument& doc);

ValuationDocument to_document(const SetValuation& val, std::span<const std::string> names);

// Orders labels by the graph's name table. Throws MissingLabel for a vertex
// without a label and InvalidVertex for a label naming an unknown vertex.
SetValuation to_valuation(const ValuationDocument& doc, std::span<const std::string> names);

std::string report_text(const SuiteReport& report);
std::string report_json(const SuiteReport& report);

// Whole file, or standard input for "-". Throws IoError.
std::string read_input(const std::string& path);
void write_output(const std::string& path, std::string_view content);

}  // namespace setval

#endif  // SETVAL_IO_HPP
