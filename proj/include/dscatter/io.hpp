#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "dscatter/graph.hpp"
#include "dscatter/treewidth.hpp"

namespace dscatter {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph files: 'c' comment lines, one "p dss <n> <m>" header, then m lines
// "e <a> <b>" with 1-based labels. Labels beyond 1..n are accepted (sparse
// external ids); internally vertices are always 0..n-1 and the label table
// remembers the mapping.
struct ParsedGraph {
  Graph graph;
  std::vector<long long> labels;  // internal id -> external label
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_text(const std::string& text);
std::string serialize_graph(const Graph& g, const std::vector<long long>* labels = nullptr,
                            const std::vector<std::string>& comments = {});

// Decomposition files: "b <node-id> <v1> <v2> ..." bags (0-based contiguous
// node ids, vertices as 1-based labels) and "e <a> <b>" tree edges. A label
// table from the matching graph file translates sparse labels.
TreeDecomposition parse_decomposition(std::istream& in,
                                      const std::vector<long long>* labels = nullptr);
TreeDecomposition parse_decomposition_text(const std::string& text,
                                           const std::vector<long long>* labels = nullptr);
std::string serialize_decomposition(const TreeDecomposition& td,
                                    const std::vector<long long>* labels = nullptr);

// Flat result record; unset fields stay out of the serialized object, keys
// are emitted sorted, and nothing nondeterministic enters unless the caller
// fills wall_ms explicitly.
struct RunReport {
  std::string command;
  std::optional<std::string> instance;
  std::optional<int> n, m, max_degree, components;
  std::optional<int> d;
  std::optional<std::string> algo, rule, rho;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<int>> solution;  // internal ids
  std::optional<std::vector<long long>> solution_labels;
  std::optional<int> size;
  std::optional<bool> feasible;
  std::optional<Edge> witness;
  std::optional<std::uint64_t> subsets_examined;
  std::optional<int> upper_bound;
  std::optional<int> oracle_size;
  std::optional<double> ratio;
  std::optional<int> product_n, product_m;
  std::optional<std::vector<int>> vertex_map;
  std::optional<std::string> relation;
  std::optional<int> width_in, width_out;
  std::optional<bool> valid;
  std::optional<std::string> out_path;
  std::optional<double> wall_ms;
};

std::string to_jsonl(const RunReport& report);   // one line, no trailing newline
std::string to_pretty(const RunReport& report);  // indented

}  // namespace dscatter
