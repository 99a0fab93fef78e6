#pragma once

#include <cstdint>
#include <vector>

#include "gst/expectations.hpp"
#include "gst/graph.hpp"

namespace gst {

enum class Property { degree, triangle, wedge };

/// Which local properties enter the distance; degree is always in.
enum class PropertySet { deg, deg_tri, deg_tri_wedge };

constexpr bool has_triangle(PropertySet p) { return p != PropertySet::deg; }
constexpr bool has_wedge(PropertySet p) { return p == PropertySet::deg_tri_wedge; }

enum class EdgeOrder { by_id, seeded_shuffle_per_round };

struct GstConfig {
  double s = 1.0;
  double t = 0.01; // early-termination tolerance on the per-round distance drop
  PropertySet properties = PropertySet::deg_tri_wedge;
  bool normalized = true; // false gives the unnormalized variant (UNGST)
  std::uint64_t seed = 0;
  int max_rounds = 1000;
  EdgeOrder edge_order = EdgeOrder::by_id;
};

// Flips with gain below this are rejected; keeps floating-point zero-gain
// flips from oscillating.
inline constexpr double kGainEpsilon = 1e-12;

/// Edge-inclusion vector plus per-node degree / triangle / centered-wedge
/// counts of the current subgraph, maintained incrementally. The wedge count
/// always equals C(cur_deg, 2) - cur_tri.
struct SubgraphState {
  std::vector<char> included;
  std::vector<std::int64_t> cur_deg;
  std::vector<std::int64_t> cur_tri;
  std::vector<std::int64_t> cur_wedge;
  std::int64_t included_edge_count = 0;
};

/// State with every edge included; counts start at the structural values of
/// the input graph.
SubgraphState full_state(const ProbGraph& g);

/// State recounted from scratch for an arbitrary inclusion vector. Also the
/// reference used to validate incremental maintenance.
SubgraphState recount_state(const ProbGraph& g, std::vector<char> included);

/// |m_l(u) - E[m_l(u)]|, divided by the structural cap when `normalized`
/// (0 when the cap is 0: the count and the expectation are then both 0).
double node_distance(const SubgraphState& state, const ScaledExpectations& ex,
                     NodeId u, Property l, bool normalized);

/// Sum of node_distance over all nodes and configured properties.
double total_distance(const SubgraphState& state, const ScaledExpectations& ex,
                      const GstConfig& config);

/// Nodes whose counts change when e flips: both endpoints plus their common
/// neighbors in the currently included subgraph.
std::vector<NodeId> affected_set(const ProbGraph& g, const SubgraphState& state,
                                 EdgeId e);

/// Distance decrease obtained by flipping e's inclusion, computed from the
/// affected nodes only; equals the full total_distance delta. Positive means
/// the flip improves the subgraph. The state is not mutated.
double gain(const ProbGraph& g, const SubgraphState& state,
            const ScaledExpectations& ex, const GstConfig& config, EdgeId e);

/// Toggles e and incrementally updates the counts of its affected set.
void flip(const ProbGraph& g, SubgraphState& state, EdgeId e);

struct TraceRow {
  double total_distance = 0.0;
  std::uint64_t flips = 0;
  double cumulative_seconds = 0.0;
};

/// Row 0 is the starting subgraph (the full edge set); row r the state after
/// sweep round r.
struct ConvergenceTrace {
  std::vector<TraceRow> rows;
};

enum class StopReason { tolerance_met, frontier_exhausted, round_cap_reached };

const char* stop_reason_name(StopReason r);

struct RunResult {
  SubgraphState state;
  std::vector<EdgeId> kept_edges;
  ConvergenceTrace trace;
  StopReason stop = StopReason::tolerance_met;
  int rounds = 0;
  std::uint64_t total_flips = 0;
  double final_distance = 0.0;
  double stage1_seconds = 0.0;
  double stage2_seconds = 0.0;
};

/// Two-stage sparsification: expectations first, then rounds of
/// best-response edge flips over a frontier of affected nodes until the
/// per-round distance drop falls to the tolerance, the frontier empties,
/// or the round cap is hit. `threads` only affects stage one.
RunResult run(const ProbGraph& g, const GstConfig& config, int threads = 1);

} // namespace gst
