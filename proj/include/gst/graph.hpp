#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gst {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge; endpoints are normalized so that u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
};

// Adjacency entry: neighbor node plus the id of the connecting edge.
struct Neighbor {
  NodeId node;
  EdgeId edge;
};

/// Immutable undirected graph with a confidence p in (0,1] per edge and
/// strictly ascending adjacency lists (enables linear merge intersection).
/// Safe to share across threads once constructed.
class ProbGraph {
public:
  ProbGraph() = default;

  /// Validates and indexes the edge set. Throws std::invalid_argument on
  /// self-loops, duplicate edges (either orientation), endpoints outside
  /// [0, node_count), or p outside (0,1].
  ProbGraph(NodeId node_count, std::vector<Edge> edges, std::vector<double> p,
            std::vector<std::string> labels = {});

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  Edge edge(EdgeId e) const { return edges_[e]; }
  double p(EdgeId e) const { return p_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& probabilities() const { return p_; }

  NodeId degree(NodeId u) const {
    return static_cast<NodeId>(adj_offset_[u + 1] - adj_offset_[u]);
  }

  std::span<const Neighbor> neighbors(NodeId u) const {
    return {adj_.data() + adj_offset_[u], adj_offset_[u + 1] - adj_offset_[u]};
  }

  NodeId max_degree() const { return max_degree_; }

  /// Optional node labels carried through I/O; empty when the input had
  /// none. Algorithms never look at these.
  const std::vector<std::string>& labels() const { return labels_; }

private:
  NodeId node_count_ = 0;
  NodeId max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> p_;
  std::vector<std::size_t> adj_offset_{0};
  std::vector<Neighbor> adj_;
  std::vector<std::string> labels_;
};

/// Visits (w, e_uw, e_vw) for every common neighbor w of u and v, in
/// ascending order of w. Linear merge over the two sorted lists.
template <typename Fn>
void for_each_common_neighbor(const ProbGraph& g, NodeId u, NodeId v, Fn&& fn) {
  std::span<const Neighbor> a = g.neighbors(u);
  std::span<const Neighbor> b = g.neighbors(v);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].node < b[j].node) {
      ++i;
    } else if (a[i].node > b[j].node) {
      ++j;
    } else {
      fn(a[i].node, a[i].edge, b[j].edge);
      ++i;
      ++j;
    }
  }
}

/// Common neighbors of u and v, ascending. Requires u != v.
std::vector<NodeId> common_neighbors(const ProbGraph& g, NodeId u, NodeId v);

/// Same, restricted to the subgraph given by the edge-inclusion mask: w
/// qualifies only if both {u,w} and {v,w} are included.
std::vector<NodeId> common_neighbors(const ProbGraph& g, NodeId u, NodeId v,
                                     std::span<const char> included);

/// Subgraph on the same node set keeping exactly the edges with
/// included[e] != 0; kept edges are renumbered densely in ascending
/// original id order and keep their p values and labels.
ProbGraph subgraph(const ProbGraph& g, std::span<const char> included);

/// Convenience overload taking the kept edge ids directly.
ProbGraph subgraph(const ProbGraph& g, std::span<const EdgeId> kept);

} // namespace gst
