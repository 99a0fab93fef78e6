#include "gst/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gst {

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool parse_u32(const std::string& tok, NodeId& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

bool parse_f64(const std::string& tok, double& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

LoadedGraph parse_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<double> p;
  std::vector<std::pair<NodeId, std::string>> label_entries;
  std::unordered_set<std::uint64_t> seen_pairs;
  NodeId max_node = 0;
  bool any_edge = false;
  bool have_header = false;
  NodeId header_nodes = 0;
  std::size_t low_confidence = 0;
  std::size_t first_low_line = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue; // blank
    if (tok[0] == '#') {
      std::string kind;
      ls >> kind;
      if (kind == "nodes" || (tok == "#nodes")) {
        std::string num;
        if (tok == "#nodes") num = kind; else ls >> num;
        NodeId n = 0;
        if (num.empty() || !parse_u32(num, n)) fail_line(line_no, "bad # nodes directive");
        have_header = true;
        header_nodes = n;
      } else if (kind == "label") {
        NodeId u = 0;
        std::string id_tok;
        if (!(ls >> id_tok) || !parse_u32(id_tok, u)) fail_line(line_no, "bad # label directive");
        std::string text;
        std::getline(ls, text);
        if (!text.empty() && text.front() == ' ') text.erase(text.begin());
        label_entries.emplace_back(u, text);
      }
      continue; // plain comment
    }

    NodeId u = 0;
    NodeId v = 0;
    std::string vtok;
    if (!parse_u32(tok, u) || !(ls >> vtok) || !parse_u32(vtok, v)) {
      fail_line(line_no, "malformed edge line '" + line + "'");
    }
    double prob = 1.0;
    std::string ptok;
    if (ls >> ptok) {
      if (!parse_f64(ptok, prob)) fail_line(line_no, "malformed confidence '" + ptok + "'");
      std::string extra;
      if (ls >> extra) fail_line(line_no, "trailing token '" + extra + "'");
    }
    if (u == v) fail_line(line_no, "self-loop at node " + std::to_string(u));
    if (!(prob > 0.0) || prob > 1.0) {
      fail_line(line_no, "confidence " + format_double(prob) + " outside (0,1]");
    }
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                        std::max(u, v);
    if (!seen_pairs.insert(key).second) {
      fail_line(line_no, "duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
    }
    if (prob <= 0.95) {
      if (low_confidence == 0) first_low_line = line_no;
      ++low_confidence;
    }
    edges.push_back({u, v});
    p.push_back(prob);
    max_node = std::max(max_node, std::max(u, v));
    any_edge = true;
  }

  NodeId node_count = any_edge ? max_node + 1 : 0;
  if (have_header) {
    if (header_nodes < node_count) {
      throw std::runtime_error("# nodes " + std::to_string(header_nodes) +
                               " is smaller than max node index + 1");
    }
    node_count = header_nodes;
  }

  std::vector<std::string> labels;
  if (!label_entries.empty()) {
    labels.assign(node_count, "");
    for (auto& [u, text] : label_entries) {
      if (u >= node_count) throw std::runtime_error("label for unknown node " + std::to_string(u));
      labels[u] = std::move(text);
    }
  }

  LoadedGraph out{ProbGraph(node_count, std::move(edges), std::move(p), std::move(labels)), {}};
  if (low_confidence > 0) {
    out.warnings.push_back(std::to_string(low_confidence) +
                           " edge(s) with confidence <= 0.95 (first on line " +
                           std::to_string(first_low_line) +
                           "); typical inputs stay above 0.95");
  }
  return out;
}

LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const ProbGraph& g) {
  out << "# nodes " << g.node_count() << "\n";
  if (!g.labels().empty()) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (!g.labels()[u].empty()) out << "# label " << u << " " << g.labels()[u] << "\n";
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u << " " << g.edge(e).v;
    if (g.p(e) != 1.0) out << " " << format_double(g.p(e));
    out << "\n";
  }
}

void write_graph(const std::string& path, const ProbGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_graph(out, g);
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

// Shared reader for the two node-indexed CSV sidecar formats.
template <typename T, typename Parse>
std::vector<T> load_node_csv(const std::string& path, NodeId node_count,
                             const char* what, Parse parse) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<T> values(node_count);
  std::vector<char> seen(node_count, 0);
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::string a = line;
    std::string b;
    if (auto comma = line.find(','); comma != std::string::npos) {
      a = line.substr(0, comma);
      b = line.substr(comma + 1);
    } else {
      std::istringstream ls(line);
      ls >> a >> b;
    }
    NodeId u = 0;
    if (!parse_u32(a, u)) {
      if (rows == 0) continue; // header row
      fail_line(line_no, std::string("malformed ") + what + " row");
    }
    T value{};
    if (u >= node_count || !parse(b, value)) {
      fail_line(line_no, std::string("malformed ") + what + " row");
    }
    if (seen[u]) fail_line(line_no, "duplicate entry for node " + std::to_string(u));
    seen[u] = 1;
    values[u] = value;
    ++rows;
  }
  if (rows != node_count) {
    throw std::runtime_error(path + ": expected " + std::to_string(node_count) +
                             " rows, found " + std::to_string(rows));
  }
  return values;
}

} // namespace

std::vector<int> load_partition_csv(const std::string& path, NodeId node_count) {
  return load_node_csv<int>(path, node_count, "partition",
                            [](const std::string& tok, int& out) {
                              auto [ptr, ec] = std::from_chars(
                                  tok.data(), tok.data() + tok.size(), out);
                              return ec == std::errc() && ptr == tok.data() + tok.size();
                            });
}

std::vector<double> load_scores_csv(const std::string& path, NodeId node_count) {
  return load_node_csv<double>(path, node_count, "score",
                               [](const std::string& tok, double& out) {
                                 return parse_f64(tok, out);
                               });
}

} // namespace gst
