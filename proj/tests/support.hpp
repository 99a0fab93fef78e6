// Shared fixtures and generators for the test suites.
#pragma once

#include <random>
#include <sstream>
#include <vector>

#include "gst/graph.hpp"

namespace gst::test {

inline ProbGraph make_graph(NodeId n, std::vector<Edge> edges, double p = 1.0) {
  std::vector<double> probs(edges.size(), p);
  return ProbGraph(n, std::move(edges), std::move(probs));
}

inline ProbGraph triangle(double p = 1.0) {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  return ProbGraph(3, edges, std::vector<double>(3, p));
}

inline ProbGraph path3(double p = 1.0) {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  return ProbGraph(3, edges, std::vector<double>(2, p));
}

inline ProbGraph star(NodeId leaves, double p = 1.0) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return ProbGraph(leaves + 1, edges, std::vector<double>(leaves, p));
}

// Node 0 with four spokes plus one closing edge, the worked five-node
// example: expected degree 2.8 and expected triangles 0.343 at contribution
// 0.7 per edge.
inline ProbGraph hub_example() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}};
  return ProbGraph(5, edges, std::vector<double>(5, 1.0));
}

// Erdos-Renyi G(n, p_edge), optionally with random confidences.
inline ProbGraph erdos_renyi(NodeId n, double p_edge, std::uint64_t seed,
                             bool random_confidence = false,
                             double min_conf = 0.3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  std::vector<double> p;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng) < p_edge) {
        edges.push_back({u, v});
        p.push_back(random_confidence
                        ? min_conf + (1.0 - min_conf) * coin(rng)
                        : 1.0);
      }
    }
  }
  return ProbGraph(n, std::move(edges), std::move(p));
}

inline ProbGraph erdos_renyi_mean_degree(NodeId n, double mean_degree,
                                         std::uint64_t seed,
                                         bool random_confidence = false) {
  return erdos_renyi(n, mean_degree / static_cast<double>(n - 1), seed,
                     random_confidence);
}

inline std::vector<char> random_inclusion(EdgeId m, std::uint64_t seed,
                                          double keep_prob = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<char> inc(m);
  for (EdgeId e = 0; e < m; ++e) inc[e] = coin(rng) < keep_prob ? 1 : 0;
  return inc;
}

} // namespace gst::test
