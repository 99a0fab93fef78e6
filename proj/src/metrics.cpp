#include "gst/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gst {

namespace {

double choose2(double x) { return x * (x - 1.0) / 2.0; }

std::int64_t triangle_total(const ProbGraph& g) {
  std::int64_t matches = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for_each_common_neighbor(g, g.edge(e).u, g.edge(e).v,
                             [&](NodeId, EdgeId, EdgeId) { ++matches; });
  }
  return matches / 3; // each triangle matched once per edge
}

// Regularized incomplete beta via Lentz's continued fraction; used for the
// Student-t tail of the Spearman significance test.
double beta_cf(double a, double b, double x) {
  const double eps = 3e-14;
  const double fpmin = 1e-300;
  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

double ibeta_reg(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                 a * std::log(x) + b * std::log1p(-x);
  double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

// Two-sided tail of Student's t with nu degrees of freedom.
double t_two_sided_p(double t, double nu) {
  return ibeta_reg(nu / 2.0, 0.5, nu / (nu + t * t));
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  double n = static_cast<double>(a.size());
  double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double num = 0.0;
  double va = 0.0;
  double vb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  if (va <= 0.0 || vb <= 0.0) return 0.0; // a constant input has no ranking
  return num / std::sqrt(va * vb);
}

} // namespace

double global_clustering(const ProbGraph& g) {
  double triples = 0.0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    triples += choose2(static_cast<double>(g.degree(u)));
  }
  if (triples <= 0.0) return 0.0;
  return 3.0 * static_cast<double>(triangle_total(g)) / triples;
}

double largest_cc(const ProbGraph& g) {
  NodeId n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::vector<NodeId> size(n, 0);
  NodeId best = 0;
  for (NodeId u = 0; u < n; ++u) best = std::max(best, ++size[find(u)]);
  return static_cast<double>(best) / static_cast<double>(n);
}

double deviation(double value_star, double value_orig) {
  return std::abs(value_star - value_orig) / std::max(std::abs(value_orig), 1e-12);
}

double ari(std::span<const int> p1, std::span<const int> p2) {
  if (p1.size() != p2.size()) {
    throw std::invalid_argument("partition sizes differ");
  }
  std::map<std::pair<int, int>, std::int64_t> contingency;
  std::map<int, std::int64_t> rows;
  std::map<int, std::int64_t> cols;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    ++contingency[{p1[i], p2[i]}];
    ++rows[p1[i]];
    ++cols[p2[i]];
  }
  double index = 0.0;
  for (auto& [_, c] : contingency) index += choose2(static_cast<double>(c));
  double sum_rows = 0.0;
  for (auto& [_, c] : rows) sum_rows += choose2(static_cast<double>(c));
  double sum_cols = 0.0;
  for (auto& [_, c] : cols) sum_cols += choose2(static_cast<double>(c));
  double pairs = choose2(static_cast<double>(p1.size()));
  if (pairs <= 0.0) return 1.0;
  double expected = sum_rows * sum_cols / pairs;
  double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0; // both partitions degenerate
  return (index - expected) / (max_index - expected);
}

SpearmanResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("sequence sizes differ");
  if (x.size() < 3) throw std::invalid_argument("spearman needs n >= 3");
  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  SpearmanResult res;
  res.rho = pearson(rx, ry);
  double nu = static_cast<double>(x.size()) - 2.0;
  double denom = 1.0 - res.rho * res.rho;
  if (denom < 1e-15) {
    res.p_value = 0.0;
  } else {
    double t = res.rho * std::sqrt(nu / denom);
    res.p_value = t_two_sided_p(t, nu);
  }
  res.significant = res.p_value < 0.01;
  return res;
}

std::vector<double> node_property_vector(const ProbGraph& g, NodeProperty which) {
  std::vector<double> out(g.node_count());
  if (which == NodeProperty::degree) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      out[u] = static_cast<double>(g.degree(u));
    }
    return out;
  }
  std::vector<std::int64_t> tri(g.node_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for_each_common_neighbor(g, g.edge(e).u, g.edge(e).v,
                             [&](NodeId w, EdgeId, EdgeId) { ++tri[w]; });
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    double pairs = choose2(static_cast<double>(g.degree(u)));
    out[u] = pairs > 0.0 ? static_cast<double>(tri[u]) / pairs : 0.0;
  }
  return out;
}

RankingSummary rankings(const std::vector<ScoreTable>& tables,
                        const std::map<std::string, bool>& higher_is_better) {
  RankingSummary out;
  for (std::size_t table_idx = 0; table_idx < tables.size(); ++table_idx) {
    const ScoreTable& table = tables[table_idx];
    if (table.empty()) continue;
    std::vector<std::string> queries;
    for (const auto& [query, _] : table.begin()->second) {
      bool everywhere = true;
      for (const auto& [_, qs] : table) {
        if (!qs.count(query)) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) queries.push_back(query);
    }
    for (const std::string& query : queries) {
      out.cells.emplace_back(table_idx, query);
      bool hib = default_higher_is_better(query);
      if (auto it = higher_is_better.find(query); it != higher_is_better.end()) {
        hib = it->second;
      }
      std::vector<std::pair<double, const std::string*>> cells;
      cells.reserve(table.size());
      for (const auto& [method, qs] : table) {
        cells.emplace_back(qs.at(query), &method);
      }
      std::sort(cells.begin(), cells.end(),
                [&](const auto& a, const auto& b) {
                  if (a.first != b.first) {
                    return hib ? a.first > b.first : a.first < b.first;
                  }
                  return *a.second < *b.second;
                });
      std::size_t i = 0;
      while (i < cells.size()) {
        std::size_t j = i;
        while (j + 1 < cells.size() && cells[j + 1].first == cells[i].first) ++j;
        double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
          out.ranks[*cells[k].second].push_back(rank);
        }
        i = j + 1;
      }
    }
  }
  for (const auto& [method, ranks] : out.ranks) {
    double sum = std::accumulate(ranks.begin(), ranks.end(), 0.0);
    out.mean[method] = sum / static_cast<double>(ranks.size());
  }
  return out;
}

bool default_higher_is_better(const std::string& query) {
  return query.find("deviation") == std::string::npos;
}

QueryReport evaluate_queries(const ProbGraph& orig, const ProbGraph& sparse,
                             const EvalInputs& inputs, std::string method,
                             double s) {
  if (orig.node_count() != sparse.node_count()) {
    throw std::invalid_argument("original and sparse node counts differ");
  }
  QueryReport rep;
  rep.method = std::move(method);
  rep.s = s;
  rep.edge_ratio = orig.edge_count() > 0
                       ? static_cast<double>(sparse.edge_count()) /
                             static_cast<double>(orig.edge_count())
                       : 0.0;
  rep.queries["gcc_deviation"] =
      deviation(global_clustering(sparse), global_clustering(orig));
  rep.queries["lcc_deviation"] = deviation(largest_cc(sparse), largest_cc(orig));
  if (orig.node_count() >= 3) {
    auto add_spearman = [&](const std::string& name, NodeProperty prop) {
      SpearmanResult r = spearman(node_property_vector(orig, prop),
                                  node_property_vector(sparse, prop));
      rep.queries[name] = r.rho;
      rep.p_values[name] = r.p_value;
    };
    add_spearman("degree_spearman", NodeProperty::degree);
    add_spearman("local_clustering_spearman", NodeProperty::local_clustering);
    if (inputs.scores_orig && inputs.scores_sparse) {
      SpearmanResult r = spearman(*inputs.scores_orig, *inputs.scores_sparse);
      rep.queries["betweenness_spearman"] = r.rho;
      rep.p_values["betweenness_spearman"] = r.p_value;
    }
  }
  if (inputs.partition_orig && inputs.partition_sparse) {
    rep.queries["community_ari"] = ari(*inputs.partition_orig, *inputs.partition_sparse);
  }
  return rep;
}

} // namespace gst
