#include "gst/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gst {

namespace {

std::int64_t wedge_count(std::int64_t deg, std::int64_t tri) {
  return deg * (deg - 1) / 2 - tri;
}

double gap_term(std::int64_t count, double expected, std::int64_t cap,
                bool normalized) {
  double diff = std::abs(static_cast<double>(count) - expected);
  if (!normalized) return diff;
  return cap > 0 ? diff / static_cast<double>(cap) : 0.0;
}

// Distance of node u if its counts were (deg, tri); the wedge count follows
// from the identity.
double node_gap(const ScaledExpectations& ex, const GstConfig& cfg, NodeId u,
                std::int64_t deg, std::int64_t tri) {
  double d = gap_term(deg, ex.exp_deg[u], ex.cap_deg[u], cfg.normalized);
  if (has_triangle(cfg.properties)) {
    d += gap_term(tri, ex.exp_tri[u], ex.cap_tri[u], cfg.normalized);
  }
  if (has_wedge(cfg.properties)) {
    d += gap_term(wedge_count(deg, tri), ex.exp_wedge[u], ex.cap_wedge[u],
                  cfg.normalized);
  }
  return d;
}

void masked_common_neighbors(const ProbGraph& g, const SubgraphState& state,
                             NodeId u, NodeId v, std::vector<NodeId>& out) {
  out.clear();
  for_each_common_neighbor(g, u, v, [&](NodeId w, EdgeId euw, EdgeId evw) {
    if (state.included[euw] && state.included[evw]) out.push_back(w);
  });
}

double gain_impl(const ProbGraph& g, const SubgraphState& state,
                 const ScaledExpectations& ex, const GstConfig& cfg, EdgeId e,
                 std::vector<NodeId>& cn) {
  Edge ed = g.edge(e);
  std::int64_t sign = state.included[e] ? -1 : +1;
  masked_common_neighbors(g, state, ed.u, ed.v, cn);
  std::int64_t c = static_cast<std::int64_t>(cn.size());
  double gn = 0.0;
  for (NodeId v : {ed.u, ed.v}) {
    gn += node_gap(ex, cfg, v, state.cur_deg[v], state.cur_tri[v]) -
          node_gap(ex, cfg, v, state.cur_deg[v] + sign,
                   state.cur_tri[v] + sign * c);
  }
  for (NodeId w : cn) {
    gn += node_gap(ex, cfg, w, state.cur_deg[w], state.cur_tri[w]) -
          node_gap(ex, cfg, w, state.cur_deg[w], state.cur_tri[w] + sign);
  }
  return gn;
}

void apply_flip(const ProbGraph& g, SubgraphState& state, EdgeId e,
                const std::vector<NodeId>& cn) {
  Edge ed = g.edge(e);
  std::int64_t sign = state.included[e] ? -1 : +1;
  state.included[e] = state.included[e] ? 0 : 1;
  state.included_edge_count += sign;
  std::int64_t c = static_cast<std::int64_t>(cn.size());
  for (NodeId v : {ed.u, ed.v}) {
    state.cur_deg[v] += sign;
    state.cur_tri[v] += sign * c;
    state.cur_wedge[v] = wedge_count(state.cur_deg[v], state.cur_tri[v]);
  }
  for (NodeId w : cn) {
    state.cur_tri[w] += sign;
    state.cur_wedge[w] = wedge_count(state.cur_deg[w], state.cur_tri[w]);
  }
}

void validate(const GstConfig& cfg) {
  if (!(cfg.s >= 0.0) || cfg.s > 1.0) {
    throw std::invalid_argument("scaling factor must lie in [0,1]");
  }
  if (!(cfg.t >= 0.0)) throw std::invalid_argument("tolerance must be >= 0");
  if (cfg.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
}

} // namespace

SubgraphState full_state(const ProbGraph& g) {
  SubgraphState state;
  NodeId n = g.node_count();
  state.included.assign(g.edge_count(), 1);
  state.included_edge_count = g.edge_count();
  state.cur_deg.resize(n);
  state.cur_tri.resize(n);
  state.cur_wedge.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    StructuralCaps caps = structural_caps(g, u);
    state.cur_deg[u] = caps.deg;
    state.cur_tri[u] = caps.tri;
    state.cur_wedge[u] = wedge_count(caps.deg, caps.tri);
  }
  return state;
}

SubgraphState recount_state(const ProbGraph& g, std::vector<char> included) {
  SubgraphState state;
  NodeId n = g.node_count();
  state.included = std::move(included);
  state.cur_deg.assign(n, 0);
  state.cur_tri.assign(n, 0);
  state.cur_wedge.assign(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!state.included[e]) continue;
    ++state.included_edge_count;
    ++state.cur_deg[g.edge(e).u];
    ++state.cur_deg[g.edge(e).v];
    // Each included triangle is seen from all three of its edges; credit the
    // opposite vertex so every node gets counted exactly once per triangle.
    for_each_common_neighbor(g, g.edge(e).u, g.edge(e).v,
                             [&](NodeId w, EdgeId euw, EdgeId evw) {
                               if (state.included[euw] && state.included[evw]) {
                                 ++state.cur_tri[w];
                               }
                             });
  }
  for (NodeId u = 0; u < n; ++u) {
    state.cur_wedge[u] = wedge_count(state.cur_deg[u], state.cur_tri[u]);
  }
  return state;
}

double node_distance(const SubgraphState& state, const ScaledExpectations& ex,
                     NodeId u, Property l, bool normalized) {
  switch (l) {
    case Property::degree:
      return gap_term(state.cur_deg[u], ex.exp_deg[u], ex.cap_deg[u], normalized);
    case Property::triangle:
      return gap_term(state.cur_tri[u], ex.exp_tri[u], ex.cap_tri[u], normalized);
    case Property::wedge:
      return gap_term(state.cur_wedge[u], ex.exp_wedge[u], ex.cap_wedge[u],
                      normalized);
  }
  return 0.0;
}

double total_distance(const SubgraphState& state, const ScaledExpectations& ex,
                      const GstConfig& config) {
  double sum = 0.0;
  for (NodeId u = 0; u < state.cur_deg.size(); ++u) {
    sum += node_gap(ex, config, u, state.cur_deg[u], state.cur_tri[u]);
  }
  return sum;
}

std::vector<NodeId> affected_set(const ProbGraph& g, const SubgraphState& state,
                                 EdgeId e) {
  Edge ed = g.edge(e);
  std::vector<NodeId> out;
  masked_common_neighbors(g, state, ed.u, ed.v, out);
  out.push_back(ed.u);
  out.push_back(ed.v);
  std::sort(out.begin(), out.end());
  return out;
}

double gain(const ProbGraph& g, const SubgraphState& state,
            const ScaledExpectations& ex, const GstConfig& config, EdgeId e) {
  std::vector<NodeId> cn;
  return gain_impl(g, state, ex, config, e, cn);
}

void flip(const ProbGraph& g, SubgraphState& state, EdgeId e) {
  Edge ed = g.edge(e);
  std::vector<NodeId> cn;
  masked_common_neighbors(g, state, ed.u, ed.v, cn);
  apply_flip(g, state, e, cn);
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::tolerance_met: return "tolerance";
    case StopReason::frontier_exhausted: return "frontier-empty";
    case StopReason::round_cap_reached: return "max-rounds";
  }
  return "unknown";
}

RunResult run(const ProbGraph& g, const GstConfig& config, int threads) {
  validate(config);
  using clock = std::chrono::steady_clock;
  auto seconds_since = [](clock::time_point from) {
    return std::chrono::duration<double>(clock::now() - from).count();
  };

  auto stage1_begin = clock::now();
  ScaledExpectations ex = compute_all(g, config.s, threads);
  double stage1 = seconds_since(stage1_begin);

  auto stage2_begin = clock::now();
  RunResult res;
  NodeId n = g.node_count();
  EdgeId m = g.edge_count();

  // Start from the whole edge set; the counts are then exactly the
  // structural values already gathered for the caps.
  res.state.included.assign(m, 1);
  res.state.included_edge_count = m;
  res.state.cur_deg.assign(ex.cap_deg.begin(), ex.cap_deg.end());
  res.state.cur_tri.assign(ex.cap_tri.begin(), ex.cap_tri.end());
  res.state.cur_wedge.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    res.state.cur_wedge[u] = wedge_count(res.state.cur_deg[u], res.state.cur_tri[u]);
  }

  res.trace.rows.push_back({total_distance(res.state, ex, config), 0, 0.0});

  std::vector<char> frontier(n, 1);
  std::vector<char> next_frontier(n, 0);
  std::vector<EdgeId> sweep;
  std::vector<NodeId> cn;
  std::mt19937_64 rng(config.seed);
  int r = 0;

  while (true) {
    sweep.clear();
    for (EdgeId e = 0; e < m; ++e) {
      if (frontier[g.edge(e).u] || frontier[g.edge(e).v]) sweep.push_back(e);
    }
    if (config.edge_order == EdgeOrder::seeded_shuffle_per_round) {
      std::shuffle(sweep.begin(), sweep.end(), rng);
    }
    std::fill(next_frontier.begin(), next_frontier.end(), 0);
    std::uint64_t flips = 0;
    for (EdgeId e : sweep) {
      if (gain_impl(g, res.state, ex, config, e, cn) > kGainEpsilon) {
        apply_flip(g, res.state, e, cn);
        ++flips;
        // Re-enqueue the closed neighborhood of every affected node: an
        // edge's gain depends on the counts of its endpoints and of their
        // common neighbors, and all of those lie within one hop of a node
        // whose counts just changed.
        auto enqueue = [&](NodeId v) {
          next_frontier[v] = 1;
          for (const Neighbor& nb : g.neighbors(v)) next_frontier[nb.node] = 1;
        };
        enqueue(g.edge(e).u);
        enqueue(g.edge(e).v);
        for (NodeId w : cn) enqueue(w);
      }
    }
    ++r;
    res.total_flips += flips;
    res.trace.rows.push_back(
        {total_distance(res.state, ex, config), flips, seconds_since(stage2_begin)});
    const auto& rows = res.trace.rows;
    if (r >= 2 && rows[r - 1].total_distance - rows[r].total_distance <= config.t) {
      res.stop = StopReason::tolerance_met;
      break;
    }
    if (flips == 0) {
      res.stop = StopReason::frontier_exhausted;
      break;
    }
    if (r >= config.max_rounds) {
      res.stop = StopReason::round_cap_reached;
      break;
    }
    frontier.swap(next_frontier);
  }

  res.rounds = r;
  res.final_distance = res.trace.rows.back().total_distance;
  res.kept_edges.reserve(static_cast<std::size_t>(res.state.included_edge_count));
  for (EdgeId e = 0; e < m; ++e) {
    if (res.state.included[e]) res.kept_edges.push_back(e);
  }
  res.stage1_seconds = stage1;
  res.stage2_seconds = seconds_since(stage2_begin);
  return res;
}

} // namespace gst
