#include "gst/oracle.hpp"

#include <stdexcept>

namespace gst {

namespace {

std::int64_t choose2_int(std::int64_t x) { return x * (x - 1) / 2; }

} // namespace

double enumerate_worlds_expectation(const ProbGraph& g,
                                    std::span<const double> scaled_p, NodeId u,
                                    Property l, const OracleBudget& budget) {
  // Relevant edges, gathered by plain edge-list scans.
  std::vector<EdgeId> incident;
  std::vector<NodeId> nbrs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge ed = g.edge(e);
    if (ed.u == u || ed.v == u) {
      incident.push_back(e);
      nbrs.push_back(ed.u == u ? ed.v : ed.u);
    }
  }
  std::vector<EdgeId> closing;
  if (l != Property::degree) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      Edge ed = g.edge(e);
      bool u_in = false;
      bool v_in = false;
      for (NodeId w : nbrs) {
        if (ed.u == w) u_in = true;
        if (ed.v == w) v_in = true;
      }
      if (u_in && v_in) closing.push_back(e);
    }
  }

  std::size_t k = incident.size() + closing.size();
  if (k > static_cast<std::size_t>(budget.max_world_edges)) {
    throw std::runtime_error("oracle world budget exceeded: " +
                             std::to_string(k) + " relevant edges");
  }

  // closing_at[i][j]: position of edge {nbrs[i], nbrs[j]} in the pattern,
  // or -1 when the pair is not connected.
  std::vector<std::vector<int>> closing_at(nbrs.size(),
                                           std::vector<int>(nbrs.size(), -1));
  for (std::size_t c = 0; c < closing.size(); ++c) {
    Edge ed = g.edge(closing[c]);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (nbrs[i] == ed.u && nbrs[j] == ed.v) {
          closing_at[i][j] = closing_at[j][i] =
              static_cast<int>(incident.size() + c);
        }
      }
    }
  }

  double sum = 0.0;
  for (std::uint64_t world = 0; world < (1ull << k); ++world) {
    double pr = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      double q = scaled_p[i < incident.size() ? incident[i]
                                              : closing[i - incident.size()]];
      pr *= (world >> i) & 1 ? q : 1.0 - q;
    }
    if (pr == 0.0) continue;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < incident.size(); ++i) {
      deg += (world >> i) & 1;
    }
    double count = 0.0;
    if (l == Property::degree) {
      count = static_cast<double>(deg);
    } else {
      std::int64_t tri = 0;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          if (((world >> i) & 1) && ((world >> j) & 1) &&
              closing_at[i][j] >= 0 && ((world >> closing_at[i][j]) & 1)) {
            ++tri;
          }
        }
      }
      count = static_cast<double>(l == Property::triangle
                                      ? tri
                                      : choose2_int(deg) - tri);
    }
    sum += pr * count;
  }
  return sum;
}

OptimumResult exhaustive_optimum(const ProbGraph& g, const GstConfig& config,
                                 const OracleBudget& budget) {
  EdgeId m = g.edge_count();
  if (m > static_cast<EdgeId>(budget.max_edges_exhaustive)) {
    throw std::runtime_error("oracle exhaustive budget exceeded: " +
                             std::to_string(m) + " edges");
  }
  ScaledExpectations ex = compute_all(g, config.s);

  // Triangles as edge triples spanning exactly three nodes.
  struct Triple {
    NodeId a, b, c;
    EdgeId e1, e2, e3;
  };
  std::vector<Triple> triangles;
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = i + 1; j < m; ++j) {
      for (EdgeId k = j + 1; k < m; ++k) {
        NodeId nodes[6] = {g.edge(i).u, g.edge(i).v, g.edge(j).u,
                           g.edge(j).v, g.edge(k).u, g.edge(k).v};
        NodeId distinct[6];
        std::size_t n_distinct = 0;
        for (NodeId x : nodes) {
          bool seen = false;
          for (std::size_t d = 0; d < n_distinct; ++d) {
            if (distinct[d] == x) seen = true;
          }
          if (!seen) distinct[n_distinct++] = x;
        }
        if (n_distinct == 3) {
          triangles.push_back({distinct[0], distinct[1], distinct[2], i, j, k});
        }
      }
    }
  }

  NodeId n = g.node_count();
  SubgraphState scratch;
  scratch.cur_deg.assign(n, 0);
  scratch.cur_tri.assign(n, 0);
  scratch.cur_wedge.assign(n, 0);

  auto lex_less = [m](std::uint64_t a, std::uint64_t b) {
    for (EdgeId e = 0; e < m; ++e) {
      int ba = (a >> e) & 1;
      int bb = (b >> e) & 1;
      if (ba != bb) return ba < bb;
    }
    return false;
  };

  double best = 0.0;
  std::uint64_t best_mask = 0;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::fill(scratch.cur_deg.begin(), scratch.cur_deg.end(), 0);
    std::fill(scratch.cur_tri.begin(), scratch.cur_tri.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1) {
        ++scratch.cur_deg[g.edge(e).u];
        ++scratch.cur_deg[g.edge(e).v];
      }
    }
    for (const Triple& t : triangles) {
      if (((mask >> t.e1) & 1) && ((mask >> t.e2) & 1) && ((mask >> t.e3) & 1)) {
        ++scratch.cur_tri[t.a];
        ++scratch.cur_tri[t.b];
        ++scratch.cur_tri[t.c];
      }
    }
    for (NodeId u = 0; u < n; ++u) {
      scratch.cur_wedge[u] = choose2_int(scratch.cur_deg[u]) - scratch.cur_tri[u];
    }
    double dist = total_distance(scratch, ex, config);
    if (first || dist < best || (dist == best && lex_less(mask, best_mask))) {
      best = dist;
      best_mask = mask;
      first = false;
    }
  }

  OptimumResult res;
  res.distance = best;
  res.included.assign(m, 0);
  for (EdgeId e = 0; e < m; ++e) res.included[e] = (best_mask >> e) & 1;
  return res;
}

bool nash_check(const ProbGraph& g, const SubgraphState& state,
                const ScaledExpectations& ex, const GstConfig& config) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (gain(g, state, ex, config, e) > kGainEpsilon) return false;
  }
  return true;
}

} // namespace gst
