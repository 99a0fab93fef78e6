#include "gst/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace gst {

std::vector<double> scaled_contributions(const ProbGraph& g, double s) {
  if (!(s >= 0.0) || s > 1.0) {
    throw std::invalid_argument("scaling factor must lie in [0,1]");
  }
  std::vector<double> out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[e] = g.p(e) * s;
  return out;
}

double expected_degree(const ProbGraph& g, std::span<const double> scaled_p,
                       NodeId u) {
  double sum = 0.0;
  for (const Neighbor& nb : g.neighbors(u)) sum += scaled_p[nb.edge];
  return sum;
}

double expected_triangles(const ProbGraph& g, std::span<const double> scaled_p,
                          NodeId u) {
  double sum = 0.0;
  for (const Neighbor& nb : g.neighbors(u)) {
    // Each triangle {u,v,x} is visited once via the constraint x > v.
    for_each_common_neighbor(g, u, nb.node,
                             [&](NodeId x, EdgeId e_ux, EdgeId e_vx) {
                               if (x > nb.node) {
                                 sum += scaled_p[nb.edge] * scaled_p[e_ux] *
                                        scaled_p[e_vx];
                               }
                             });
  }
  return sum;
}

std::vector<double> degree_distribution_dp(std::span<const double> incident) {
  std::vector<double> pr{1.0};
  pr.reserve(incident.size() + 1);
  for (double q : incident) {
    pr.push_back(0.0);
    for (std::size_t k = pr.size() - 1; k > 0; --k) {
      pr[k] = pr[k] * (1.0 - q) + pr[k - 1] * q;
    }
    pr[0] *= 1.0 - q;
  }
  return pr;
}

double expected_wedges(const ProbGraph& g, std::span<const double> scaled_p,
                       NodeId u, double exp_deg_u, double exp_tri_u) {
  std::vector<double> incident;
  incident.reserve(g.degree(u));
  for (const Neighbor& nb : g.neighbors(u)) incident.push_back(scaled_p[nb.edge]);
  std::vector<double> pr = degree_distribution_dp(incident);
  double ex2 = 0.0;
  for (std::size_t k = 1; k < pr.size(); ++k) {
    ex2 += static_cast<double>(k) * static_cast<double>(k) * pr[k];
  }
  double wedges = 0.5 * (ex2 - exp_deg_u) - exp_tri_u;
  if (wedges < 0.0) {
    if (wedges < -1e-9) throw std::logic_error("negative expected wedge count");
    wedges = 0.0;
  }
  return wedges;
}

StructuralCaps structural_caps(const ProbGraph& g, NodeId u) {
  StructuralCaps caps;
  caps.deg = g.degree(u);
  std::int64_t matches = 0;
  for (const Neighbor& nb : g.neighbors(u)) {
    for_each_common_neighbor(g, u, nb.node,
                             [&](NodeId, EdgeId, EdgeId) { ++matches; });
  }
  caps.tri = matches / 2; // every triangle at u matched via both neighbors
  caps.wedge = caps.deg * (caps.deg - 1) / 2;
  return caps;
}

namespace {

void for_node_range(NodeId node_count, int threads,
                    const std::function<void(NodeId, NodeId)>& body) {
  if (threads <= 1 || node_count == 0) {
    body(0, node_count);
    return;
  }
  int workers = std::min<int>(threads, static_cast<int>(node_count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  NodeId chunk = (node_count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    NodeId begin = static_cast<NodeId>(w) * chunk;
    NodeId end = std::min<NodeId>(begin + chunk, node_count);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] { body(begin, end); });
  }
  for (std::thread& t : pool) t.join();
}

} // namespace

ScaledExpectations compute_all(const ProbGraph& g, double s, int threads) {
  ScaledExpectations ex;
  ex.s = s;
  ex.scaled_p = scaled_contributions(g, s);
  NodeId n = g.node_count();
  ex.exp_deg.resize(n);
  ex.exp_tri.resize(n);
  ex.exp_wedge.resize(n);
  ex.cap_deg.resize(n);
  ex.cap_tri.resize(n);
  ex.cap_wedge.resize(n);
  for_node_range(n, threads, [&](NodeId begin, NodeId end) {
    for (NodeId u = begin; u < end; ++u) {
      ex.exp_deg[u] = expected_degree(g, ex.scaled_p, u);
      ex.exp_tri[u] = expected_triangles(g, ex.scaled_p, u);
      ex.exp_wedge[u] = expected_wedges(g, ex.scaled_p, u, ex.exp_deg[u], ex.exp_tri[u]);
      StructuralCaps caps = structural_caps(g, u);
      ex.cap_deg[u] = caps.deg;
      ex.cap_tri[u] = caps.tri;
      ex.cap_wedge[u] = caps.wedge;
    }
  });
  return ex;
}

} // namespace gst
