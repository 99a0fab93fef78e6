#include "gst/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gst {

ProbGraph::ProbGraph(NodeId node_count, std::vector<Edge> edges,
                     std::vector<double> p, std::vector<std::string> labels)
    : node_count_(node_count),
      edges_(std::move(edges)),
      p_(std::move(p)),
      labels_(std::move(labels)) {
  if (p_.size() != edges_.size()) {
    throw std::invalid_argument("edge and probability counts differ");
  }
  if (!labels_.empty() && labels_.size() != node_count_) {
    throw std::invalid_argument("label count differs from node count");
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= node_count_) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " outside node range");
    }
    std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + "}");
    }
    if (!(p_[i] > 0.0) || p_[i] > 1.0) {
      throw std::invalid_argument("edge confidence out of (0,1] on edge {" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
  }

  adj_offset_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offset_[e.u + 1];
    ++adj_offset_[e.v + 1];
  }
  for (NodeId u = 0; u < node_count_; ++u) {
    adj_offset_[u + 1] += adj_offset_[u];
  }
  adj_.resize(edges_.size() * 2);
  std::vector<std::size_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adj_[cursor[edges_[e].u]++] = {edges_[e].v, e};
    adj_[cursor[edges_[e].v]++] = {edges_[e].u, e};
  }
  for (NodeId u = 0; u < node_count_; ++u) {
    auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(adj_offset_[u]);
    auto end = adj_.begin() + static_cast<std::ptrdiff_t>(adj_offset_[u + 1]);
    std::sort(begin, end,
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    max_degree_ = std::max(max_degree_, degree(u));
  }
}

std::vector<NodeId> common_neighbors(const ProbGraph& g, NodeId u, NodeId v) {
  std::vector<NodeId> out;
  for_each_common_neighbor(g, u, v,
                           [&](NodeId w, EdgeId, EdgeId) { out.push_back(w); });
  return out;
}

std::vector<NodeId> common_neighbors(const ProbGraph& g, NodeId u, NodeId v,
                                     std::span<const char> included) {
  std::vector<NodeId> out;
  for_each_common_neighbor(g, u, v, [&](NodeId w, EdgeId euw, EdgeId evw) {
    if (included[euw] && included[evw]) out.push_back(w);
  });
  return out;
}

ProbGraph subgraph(const ProbGraph& g, std::span<const char> included) {
  std::vector<Edge> edges;
  std::vector<double> p;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (included[e]) {
      edges.push_back(g.edge(e));
      p.push_back(g.p(e));
    }
  }
  return ProbGraph(g.node_count(), std::move(edges), std::move(p), g.labels());
}

ProbGraph subgraph(const ProbGraph& g, std::span<const EdgeId> kept) {
  std::vector<char> included(g.edge_count(), 0);
  for (EdgeId e : kept) included[e] = 1;
  return subgraph(g, included);
}

} // namespace gst
