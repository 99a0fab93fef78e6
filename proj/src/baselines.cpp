#include "gst/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gst {

namespace {

void check_keep_count(const ProbGraph& g, EdgeId keep_count) {
  if (keep_count > g.edge_count()) {
    throw std::invalid_argument("keep_count exceeds edge count");
  }
}

// Scores every edge from one endpoint's ranking of its incident edges and
// keeps the maximum over both endpoints. rank_key orders incident edges
// (best first); side_score maps a 1-based rank to the endpoint's score.
template <typename RankKey, typename SideScore>
std::vector<EdgeScore> endpoint_ranked_scores(const ProbGraph& g,
                                              RankKey rank_key,
                                              SideScore side_score) {
  std::vector<EdgeScore> scores(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) scores[e] = {e, 0.0};
  std::vector<Neighbor> order;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nbs = g.neighbors(u);
    order.assign(nbs.begin(), nbs.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](const Neighbor& a, const Neighbor& b) {
                       double ka = rank_key(u, a);
                       double kb = rank_key(u, b);
                       if (ka != kb) return ka > kb;
                       return a.node < b.node;
                     });
    for (std::size_t r = 0; r < order.size(); ++r) {
      double s = side_score(u, r + 1);
      scores[order[r].edge].score = std::max(scores[order[r].edge].score, s);
    }
  }
  return scores;
}

} // namespace

std::vector<EdgeId> random_edge(const ProbGraph& g, EdgeId keep_count,
                                std::uint64_t seed) {
  check_keep_count(g, keep_count);
  std::vector<EdgeId> ids(g.edge_count());
  std::iota(ids.begin(), ids.end(), 0);
  std::mt19937_64 rng(seed);
  for (EdgeId i = 0; i < keep_count; ++i) {
    std::uniform_int_distribution<EdgeId> pick(i, g.edge_count() - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(keep_count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<EdgeScore> local_degree_scores(const ProbGraph& g) {
  return endpoint_ranked_scores(
      g,
      [&](NodeId, const Neighbor& nb) {
        return static_cast<double>(g.degree(nb.node));
      },
      [&](NodeId u, std::size_t rank) {
        NodeId d = g.degree(u);
        if (d <= 1) return 1.0;
        return 1.0 - std::log(static_cast<double>(rank)) /
                         std::log(static_cast<double>(d));
      });
}

std::vector<EdgeId> local_degree(const ProbGraph& g, EdgeId keep_count) {
  check_keep_count(g, keep_count);
  return top_k_by_score(local_degree_scores(g), keep_count);
}

std::vector<EdgeScore> local_jaccard_scores(const ProbGraph& g) {
  std::vector<double> sim(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Edge ed = g.edge(e);
    std::int64_t inter = 0;
    for_each_common_neighbor(g, ed.u, ed.v,
                             [&](NodeId, EdgeId, EdgeId) { ++inter; });
    // Neighborhoods without the endpoints themselves; u and v are adjacent,
    // so each side loses exactly one member.
    std::int64_t uni = (g.degree(ed.u) - 1) + (g.degree(ed.v) - 1) - inter;
    sim[e] = uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
  }
  return endpoint_ranked_scores(
      g, [&](NodeId, const Neighbor& nb) { return sim[nb.edge]; },
      [&](NodeId u, std::size_t rank) {
        return 1.0 - (static_cast<double>(rank) - 1.0) /
                         static_cast<double>(g.degree(u));
      });
}

std::vector<EdgeId> local_jaccard(const ProbGraph& g, EdgeId keep_count) {
  check_keep_count(g, keep_count);
  return top_k_by_score(local_jaccard_scores(g), keep_count);
}

EdgeId keep_count_from_ratio(const ProbGraph& g, double ratio) {
  if (!(ratio >= 0.0) || ratio > 1.0) {
    throw std::invalid_argument("ratio must lie in [0,1]");
  }
  auto k = static_cast<std::int64_t>(std::llround(ratio * g.edge_count()));
  k = std::clamp<std::int64_t>(k, 0, g.edge_count());
  return static_cast<EdgeId>(k);
}

std::vector<EdgeId> top_k_by_score(std::vector<EdgeScore> scores,
                                   EdgeId keep_count) {
  std::sort(scores.begin(), scores.end(),
            [](const EdgeScore& a, const EdgeScore& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.edge < b.edge;
            });
  std::vector<EdgeId> kept;
  kept.reserve(keep_count);
  for (EdgeId i = 0; i < keep_count; ++i) kept.push_back(scores[i].edge);
  std::sort(kept.begin(), kept.end());
  return kept;
}

} // namespace gst
