#pragma once

#include <span>
#include <vector>

#include "gst/expectations.hpp"
#include "gst/graph.hpp"
#include "gst/solver.hpp"

namespace gst {

/// Size limits for the brute-force references; anything larger is refused.
struct OracleBudget {
  int max_edges_exhaustive = 16;
  int max_world_edges = 12;
};

/// E[m_l(u)] by exhaustive enumeration of the inclusion patterns of the
/// edges relevant to (u, l): the incident edges, plus the edges among u's
/// neighbors for triangles and wedges. Deliberately shares no counting code
/// with the expectations module.
double enumerate_worlds_expectation(const ProbGraph& g,
                                    std::span<const double> scaled_p, NodeId u,
                                    Property l, const OracleBudget& budget = {});

struct OptimumResult {
  double distance = 0.0;
  std::vector<char> included;
};

/// Exact minimum of the configured total distance over all 2^|E| subgraphs;
/// ties resolved toward the lexicographically smallest inclusion vector.
/// Subgraph counts are recomputed naively per world; only the distance
/// formula is shared with the solver.
OptimumResult exhaustive_optimum(const ProbGraph& g, const GstConfig& config,
                                 const OracleBudget& budget = {});

/// True iff no single edge flip has gain above the acceptance epsilon.
bool nash_check(const ProbGraph& g, const SubgraphState& state,
                const ScaledExpectations& ex, const GstConfig& config);

} // namespace gst
