#include "dscatter/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dscatter {

namespace {

constexpr long long kMaxVertices = 50'000'000;

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_int(const std::string& tok, int lineno, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<long long, long long>> raw;
  std::vector<int> raw_line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "second problem line");
      if (toks.size() != 4 || toks[1] != "dss")
        throw ParseError(lineno, "expected 'p dss <n> <m>'");
      n = parse_int(toks[2], lineno, "vertex count");
      m = parse_int(toks[3], lineno, "edge count");
      if (n < 0 || n > kMaxVertices) throw ParseError(lineno, "vertex count out of range");
      if (m < 0) throw ParseError(lineno, "edge count out of range");
    } else if (toks[0] == "e") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e <a> <b>'");
      const long long a = parse_int(toks[1], lineno, "vertex label");
      const long long b = parse_int(toks[2], lineno, "vertex label");
      if (a < 1 || b < 1) throw ParseError(lineno, "vertex labels are 1-based");
      if (a == b) throw ParseError(lineno, "self-loop");
      if (n < 0) throw ParseError(lineno, "edge before problem line");
      raw.emplace_back(a, b);
      raw_line.push_back(lineno);
    } else {
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  if (static_cast<long long>(raw.size()) != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(raw.size()));

  std::set<long long> distinct;
  bool dense = true;
  for (const auto& [a, b] : raw) {
    distinct.insert(a);
    distinct.insert(b);
    dense = dense && a <= n && b <= n;
  }
  ParsedGraph out;
  std::map<long long, int> id_of;
  if (dense) {
    for (long long l = 1; l <= n; ++l) out.labels.push_back(l);
    for (long long l = 1; l <= n; ++l) id_of[l] = static_cast<int>(l - 1);
  } else {
    if (static_cast<long long>(distinct.size()) > n)
      throw ParseError(lineno, "more distinct labels than declared vertices");
    for (long long l : distinct) {
      id_of[l] = static_cast<int>(out.labels.size());
      out.labels.push_back(l);
    }
    long long filler = distinct.empty() ? 0 : *distinct.rbegin();
    while (static_cast<long long>(out.labels.size()) < n) out.labels.push_back(++filler);
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Edge e{std::min(id_of[raw[i].first], id_of[raw[i].second]),
                 std::max(id_of[raw[i].first], id_of[raw[i].second])};
    if (!seen.insert(e).second) throw ParseError(raw_line[i], "duplicate edge");
    edges.push_back(e);
  }
  out.graph = Graph(static_cast<int>(n), edges);
  return out;
}

ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g, const std::vector<long long>* labels,
                            const std::vector<std::string>& comments) {
  if (labels && static_cast<int>(labels->size()) != g.n())
    throw std::invalid_argument("serialize_graph: label table size mismatch");
  auto name = [&](int v) { return labels ? (*labels)[v] : v + 1; };
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p dss " << g.n() << " " << g.m() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << name(u) << " " << name(v) << "\n";
  return out.str();
}

TreeDecomposition parse_decomposition(std::istream& in, const std::vector<long long>* labels) {
  std::map<long long, int> id_of;
  if (labels) {
    for (std::size_t i = 0; i < labels->size(); ++i) id_of[(*labels)[i]] = static_cast<int>(i);
  }
  auto vertex_of = [&](long long label, int lineno) {
    if (!labels) {
      if (label < 1) throw ParseError(lineno, "vertex labels are 1-based");
      return static_cast<int>(label - 1);
    }
    const auto it = id_of.find(label);
    if (it == id_of.end())
      throw ParseError(lineno, "label " + std::to_string(label) + " not in the graph");
    return it->second;
  };

  std::string line;
  int lineno = 0;
  std::map<long long, std::vector<int>> bags_by_id;
  std::vector<std::pair<long long, long long>> raw_edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "b") {
      if (toks.size() < 2) throw ParseError(lineno, "expected 'b <node-id> <vertices...>'");
      const long long node = parse_int(toks[1], lineno, "node id");
      if (node < 0) throw ParseError(lineno, "node ids are 0-based and nonnegative");
      if (bags_by_id.count(node)) throw ParseError(lineno, "duplicate bag");
      std::vector<int> bag;
      for (std::size_t i = 2; i < toks.size(); ++i)
        bag.push_back(vertex_of(parse_int(toks[i], lineno, "vertex label"), lineno));
      bags_by_id[node] = std::move(bag);
    } else if (toks[0] == "e") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e <a> <b>'");
      raw_edges.emplace_back(parse_int(toks[1], lineno, "node id"),
                             parse_int(toks[2], lineno, "node id"));
    } else {
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "'");
    }
  }
  const long long k = static_cast<long long>(bags_by_id.size());
  std::vector<std::vector<int>> bags;
  for (auto& [node, bag] : bags_by_id) {
    if (node != static_cast<long long>(bags.size()))
      throw ParseError(lineno, "bag ids are not contiguous from 0");
    bags.push_back(std::move(bag));
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : raw_edges) {
    if (a < 0 || a >= k || b < 0 || b >= k)
      throw ParseError(lineno, "tree edge endpoint out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return TreeDecomposition(std::move(bags), std::move(edges));
}

TreeDecomposition parse_decomposition_text(const std::string& text,
                                           const std::vector<long long>* labels) {
  std::istringstream in(text);
  return parse_decomposition(in, labels);
}

std::string serialize_decomposition(const TreeDecomposition& td,
                                    const std::vector<long long>* labels) {
  auto name = [&](int v) { return labels ? (*labels)[v] : v + 1; };
  std::ostringstream out;
  for (int node = 0; node < td.node_count(); ++node) {
    out << "b " << node;
    for (int v : td.bag(node)) out << " " << name(v);
    out << "\n";
  }
  auto edges = td.tree_edges();
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out << "e " << a << " " << b << "\n";
  return out.str();
}

namespace {

nlohmann::json report_json(const RunReport& r) {
  nlohmann::json j;
  j["command"] = r.command;
  auto put = [&](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("instance", r.instance);
  put("n", r.n);
  put("m", r.m);
  put("max_degree", r.max_degree);
  put("components", r.components);
  put("d", r.d);
  put("algo", r.algo);
  put("rule", r.rule);
  put("rho", r.rho);
  put("seed", r.seed);
  put("solution", r.solution);
  put("solution_labels", r.solution_labels);
  put("size", r.size);
  put("feasible", r.feasible);
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  put("subsets_examined", r.subsets_examined);
  put("upper_bound", r.upper_bound);
  put("oracle_size", r.oracle_size);
  put("ratio", r.ratio);
  put("product_n", r.product_n);
  put("product_m", r.product_m);
  put("vertex_map", r.vertex_map);
  put("relation", r.relation);
  put("width_in", r.width_in);
  put("width_out", r.width_out);
  put("valid", r.valid);
  put("out_path", r.out_path);
  put("wall_ms", r.wall_ms);
  return j;
}

}  // namespace

std::string to_jsonl(const RunReport& report) { return report_json(report).dump(); }

std::string to_pretty(const RunReport& report) { return report_json(report).dump(2); }

}  // namespace dscatter
