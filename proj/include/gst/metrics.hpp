#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gst/graph.hpp"

namespace gst {

/// Transitivity: 3 * triangles / sum_u C(deg(u), 2); 0 when the graph has no
/// connected triple.
double global_clustering(const ProbGraph& g);

/// Size of the largest connected component divided by the node count.
double largest_cc(const ProbGraph& g);

/// |value_star - value_orig| / max(|value_orig|, 1e-12).
double deviation(double value_star, double value_orig);

/// Pair-counting adjusted Rand index between two per-node labelings.
/// 1 for identical partitions (up to label permutation).
double ari(std::span<const int> p1, std::span<const int> p2);

struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
  bool significant = false; // p < 0.01
};

/// Rank correlation with average ranks for ties; the p-value comes from the
/// t-approximation t = rho * sqrt((n-2) / (1-rho^2)). Requires n >= 3.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

enum class NodeProperty { degree, local_clustering };

/// Per-node degree, or triangles / C(deg,2) (0 when deg < 2).
std::vector<double> node_property_vector(const ProbGraph& g, NodeProperty which);

/// One score table: method -> (query -> value).
using ScoreTable = std::map<std::string, std::map<std::string, double>>;

struct RankingSummary {
  // method -> rank per (table, query) cell, in table order then query order
  std::map<std::string, std::vector<double>> ranks;
  std::map<std::string, double> mean;
  // the (table index, query) behind each rank position
  std::vector<std::pair<std::size_t, std::string>> cells;
};

/// Ranks the methods 1..k (1 best) within every (table, query) cell; exact
/// ties share the average of the tied ranks. Cells are restricted to the
/// queries present for every method of their table.
RankingSummary rankings(const std::vector<ScoreTable>& tables,
                        const std::map<std::string, bool>& higher_is_better);

/// Direction convention used by the CLI: deviation-style queries rank low
/// values first, everything else high values first.
bool default_higher_is_better(const std::string& query);

struct EvalInputs {
  const std::vector<int>* partition_orig = nullptr;
  const std::vector<int>* partition_sparse = nullptr;
  const std::vector<double>* scores_orig = nullptr;
  const std::vector<double>* scores_sparse = nullptr;
};

struct QueryReport {
  std::string method;
  double s = 0.0;
  double edge_ratio = 0.0;
  std::map<std::string, double> queries;
  std::map<std::string, double> p_values; // spearman-backed queries only
};

/// The structural query battery comparing a sparse subgraph against its
/// original: deviation of global clustering and largest component, Spearman
/// of degree and local clustering vectors, plus ARI / Spearman of externally
/// supplied partitions and node scores when present.
QueryReport evaluate_queries(const ProbGraph& orig, const ProbGraph& sparse,
                             const EvalInputs& inputs, std::string method,
                             double s);

} // namespace gst
