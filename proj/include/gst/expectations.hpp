#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gst/graph.hpp"

namespace gst {

/// Per-node expected local properties under independent edge inclusion with
/// probabilities p(e)*S, together with the structural maxima attainable in
/// any subgraph.
struct ScaledExpectations {
  double s = 1.0;
  std::vector<double> scaled_p; // p(e) * S, indexed by EdgeId
  std::vector<double> exp_deg;
  std::vector<double> exp_tri;
  std::vector<double> exp_wedge;
  std::vector<std::int64_t> cap_deg;   // degree in the input graph
  std::vector<std::int64_t> cap_tri;   // triangles through the node
  std::vector<std::int64_t> cap_wedge; // C(degree, 2)
};

/// p(e) * S for every edge. Throws std::invalid_argument unless 0 <= S <= 1.
std::vector<double> scaled_contributions(const ProbGraph& g, double s);

/// Sum of scaled contributions over edges incident to u.
double expected_degree(const ProbGraph& g, std::span<const double> scaled_p,
                       NodeId u);

/// Sum over triangles {u,v,x} of the product of their three contributions;
/// triangles are enumerated by merge intersection of sorted neighbor lists.
double expected_triangles(const ProbGraph& g, std::span<const double> scaled_p,
                          NodeId u);

/// Distribution of the number of successes among independent Bernoulli
/// trials with the given probabilities (convolution dynamic program).
/// Result has size incident.size() + 1 and sums to 1.
std::vector<double> degree_distribution_dp(std::span<const double> incident);

/// (E[X^2] - E[X]) / 2 - E[triangles], with X the random degree of u; E[X^2]
/// comes from degree_distribution_dp over u's incident contributions. The
/// result is nonnegative up to rounding and is clamped at 0.
double expected_wedges(const ProbGraph& g, std::span<const double> scaled_p,
                       NodeId u, double exp_deg_u, double exp_tri_u);

struct StructuralCaps {
  std::int64_t deg = 0;
  std::int64_t tri = 0;
  std::int64_t wedge = 0;
};

/// Maximum degree / triangle / centered-wedge counts node u can have in any
/// subgraph: its degree, its triangle count, and C(degree, 2).
StructuralCaps structural_caps(const ProbGraph& g, NodeId u);

/// All per-node expectations and caps. Node computations are independent;
/// `threads` > 1 partitions the nodes across workers.
ScaledExpectations compute_all(const ProbGraph& g, double s, int threads = 1);

} // namespace gst
