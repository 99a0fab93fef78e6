#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gst/graph.hpp"

namespace gst {

struct LoadedGraph {
  ProbGraph graph;
  std::vector<std::string> warnings;
};

/// Parses the whitespace-separated edge-list format: one `u v` or `u v p`
/// edge per line, `#`-prefixed comment lines, and two comment directives:
///   # nodes <N>          overrides the inferred node count (max index + 1)
///   # label <u> <text>   attaches a display label to node u
/// Missing p defaults to 1.0. Malformed lines, self-loops, duplicate pairs
/// (either orientation) and p outside (0,1] raise std::runtime_error with
/// the offending line number. Confidences <= 0.95 are collected as warnings.
LoadedGraph parse_graph(std::istream& in);
LoadedGraph load_graph(const std::string& path);

/// Writes the same format, starting with a `# nodes N` directive so that
/// trailing isolated nodes survive a round-trip; p is omitted when 1.0 and
/// printed as the shortest round-trip decimal otherwise.
void write_graph(std::ostream& out, const ProbGraph& g);
void write_graph(const std::string& path, const ProbGraph& g);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// CSV `node,label` with an optional header row; every node in
/// [0, node_count) must appear exactly once.
std::vector<int> load_partition_csv(const std::string& path, NodeId node_count);

/// CSV `node,value`, same coverage rule.
std::vector<double> load_scores_csv(const std::string& path, NodeId node_count);

} // namespace gst
