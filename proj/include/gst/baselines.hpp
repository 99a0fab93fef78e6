#pragma once

#include <cstdint>
#include <vector>

#include "gst/graph.hpp"

namespace gst {

struct EdgeScore {
  EdgeId edge;
  double score;
};

/// Uniformly random keep_count-subset of the edges (seeded Fisher-Yates
/// prefix), returned in ascending edge id order.
std::vector<EdgeId> random_edge(const ProbGraph& g, EdgeId keep_count,
                                std::uint64_t seed);

/// Local-degree scores: at each endpoint, incident edges are ranked by the
/// other endpoint's degree (descending, ties by ascending neighbor id) and
/// scored 1 - log(rank)/log(deg); a degree-1 endpoint scores 1. The edge
/// keeps the better of its two endpoint scores.
std::vector<EdgeScore> local_degree_scores(const ProbGraph& g);
std::vector<EdgeId> local_degree(const ProbGraph& g, EdgeId keep_count);

/// Local-Jaccard scores: edges are ranked per endpoint by the Jaccard
/// similarity of the endpoint neighborhoods (excluding the endpoints
/// themselves) and scored 1 - (rank-1)/deg; again the better endpoint wins.
std::vector<EdgeScore> local_jaccard_scores(const ProbGraph& g);
std::vector<EdgeId> local_jaccard(const ProbGraph& g, EdgeId keep_count);

/// round(ratio * |E|), clamped to [0, |E|]. Throws unless 0 <= ratio <= 1.
EdgeId keep_count_from_ratio(const ProbGraph& g, double ratio);

/// The keep_count highest-scoring edges (ties by ascending edge id),
/// returned in ascending edge id order.
std::vector<EdgeId> top_k_by_score(std::vector<EdgeScore> scores,
                                   EdgeId keep_count);

} // namespace gst
