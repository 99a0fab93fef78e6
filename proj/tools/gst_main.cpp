// Command-line front end: expect / sparsify / eval / compare / oracle / timing.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gst/baselines.hpp"
#include "gst/expectations.hpp"
#include "gst/graph.hpp"
#include "gst/io.hpp"
#include "gst/metrics.hpp"
#include "gst/oracle.hpp"
#include "gst/solver.hpp"

using json = nlohmann::ordered_json;
using namespace gst;

namespace {

int default_threads() {
  if (const char* env = std::getenv("GST_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

PropertySet parse_props(const std::string& s) {
  if (s == "2") return PropertySet::deg;
  if (s == "23") return PropertySet::deg_tri;
  if (s == "23w") return PropertySet::deg_tri_wedge;
  throw CLI::ValidationError("--props", "must be one of 2|23|23w");
}

const char* props_name(PropertySet p) {
  switch (p) {
    case PropertySet::deg: return "2";
    case PropertySet::deg_tri: return "23";
    case PropertySet::deg_tri_wedge: return "23w";
  }
  return "?";
}

EdgeOrder parse_order(const std::string& s) {
  if (s == "by-id") return EdgeOrder::by_id;
  if (s == "shuffle") return EdgeOrder::seeded_shuffle_per_round;
  throw CLI::ValidationError("--order", "must be by-id|shuffle");
}

ProbGraph load_with_warnings(const std::string& path) {
  LoadedGraph lg = load_graph(path);
  for (const std::string& w : lg.warnings) {
    std::cerr << "warning: " << path << ": " << w << "\n";
  }
  return std::move(lg.graph);
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- expect --

struct ExpectArgs {
  std::string input;
  std::string output;
  double s = 1.0;
  int threads = default_threads();
};

int cmd_expect(const ExpectArgs& a) {
  ProbGraph g = load_with_warnings(a.input);
  ScaledExpectations ex = compute_all(g, a.s, a.threads);
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, a.output);
  out << "node,exp_deg,exp_tri,exp_wedge,cap_deg,cap_tri,cap_wedge\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    out << u << ',' << format_double(ex.exp_deg[u]) << ','
        << format_double(ex.exp_tri[u]) << ',' << format_double(ex.exp_wedge[u])
        << ',' << ex.cap_deg[u] << ',' << ex.cap_tri[u] << ',' << ex.cap_wedge[u]
        << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- sparsify --

struct SparsifyArgs {
  std::string input;
  std::string output;
  std::string report;
  std::string trace;
  std::string method = "gst";
  double s = -1.0;
  double t = 0.01;
  std::string props = "23w";
  bool unnormalized = false;
  std::uint64_t seed = 0;
  int max_rounds = 1000;
  std::string order = "by-id";
  int threads = default_threads();
  double ratio = -1.0;
  std::string match;
};

GstConfig gst_config_from(const SparsifyArgs& a) {
  GstConfig cfg;
  cfg.s = a.s;
  cfg.t = a.t;
  cfg.properties = parse_props(a.props);
  cfg.normalized = !a.unnormalized;
  cfg.seed = a.seed;
  cfg.max_rounds = a.max_rounds;
  cfg.edge_order = parse_order(a.order);
  return cfg;
}

json gst_config_json(const GstConfig& cfg, int threads) {
  return json{{"s", cfg.s},
              {"t", cfg.t},
              {"properties", props_name(cfg.properties)},
              {"normalized", cfg.normalized},
              {"seed", cfg.seed},
              {"max_rounds", cfg.max_rounds},
              {"edge_order", cfg.edge_order == EdgeOrder::by_id ? "by-id" : "shuffle"},
              {"threads", threads}};
}

void write_trace_csv(const std::string& path, const ConvergenceTrace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "round,total_distance,flips,cumulative_seconds\n";
  for (std::size_t r = 0; r < trace.rows.size(); ++r) {
    const TraceRow& row = trace.rows[r];
    out << r << ',' << format_double(row.total_distance) << ',' << row.flips
        << ',' << format_double(row.cumulative_seconds) << "\n";
  }
}

EdgeId resolve_keep_count(const ProbGraph& g, const SparsifyArgs& a) {
  if (a.ratio >= 0.0 && !a.match.empty()) {
    throw std::runtime_error("--ratio and --match are mutually exclusive");
  }
  if (a.ratio >= 0.0) return keep_count_from_ratio(g, a.ratio);
  if (!a.match.empty()) {
    ProbGraph other = load_with_warnings(a.match);
    if (other.edge_count() > g.edge_count()) {
      throw std::runtime_error("--match graph has more edges than the input");
    }
    return other.edge_count();
  }
  throw std::runtime_error("method '" + a.method + "' needs --ratio or --match");
}

int cmd_sparsify(const SparsifyArgs& a) {
  ProbGraph g = load_with_warnings(a.input);
  json report;
  report["method"] = a.method;
  report["input"] = a.input;
  report["nodes"] = g.node_count();
  report["edges"] = g.edge_count();

  std::vector<EdgeId> kept;
  if (a.method == "gst") {
    if (a.s < 0.0) throw std::runtime_error("gst needs --s");
    GstConfig cfg = gst_config_from(a);
    RunResult res = run(g, cfg, a.threads);
    kept = res.kept_edges;
    report["config"] = gst_config_json(cfg, a.threads);
    report["result"] = {
        {"kept_edges", kept.size()},
        {"edge_ratio", g.edge_count() > 0
                           ? static_cast<double>(kept.size()) / g.edge_count()
                           : 0.0},
        {"final_distance", res.final_distance},
        {"rounds", res.rounds},
        {"flips", res.total_flips},
        {"stop", stop_reason_name(res.stop)}};
    report["timing"] = {{"stage1_seconds", res.stage1_seconds},
                        {"stage2_seconds", res.stage2_seconds}};
    if (!a.trace.empty()) write_trace_csv(a.trace, res.trace);
  } else {
    if (!a.trace.empty()) {
      throw std::runtime_error("--trace is only produced by method gst");
    }
    EdgeId keep = resolve_keep_count(g, a);
    auto begin = std::chrono::steady_clock::now();
    if (a.method == "ld") {
      kept = local_degree(g, keep);
    } else if (a.method == "ljs") {
      kept = local_jaccard(g, keep);
    } else {
      kept = random_edge(g, keep, a.seed);
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
            .count();
    report["config"] = {{"keep_count", keep}, {"seed", a.seed}};
    if (a.ratio >= 0.0) report["config"]["ratio"] = a.ratio;
    if (!a.match.empty()) report["config"]["match"] = a.match;
    report["result"] = {
        {"kept_edges", kept.size()},
        {"edge_ratio", g.edge_count() > 0
                           ? static_cast<double>(kept.size()) / g.edge_count()
                           : 0.0}};
    report["timing"] = {{"seconds", seconds}};
  }

  ProbGraph sparse = subgraph(g, kept);
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, a.output);
  write_graph(out, sparse);
  write_json(a.report, report);
  return 0;
}

// ------------------------------------------------------------------ eval --

struct EvalArgs {
  std::string input;
  std::string sparse;
  std::string output;
  std::string method = "unknown";
  double s = 0.0;
  std::string partition_orig, partition_sparse;
  std::string scores_orig, scores_sparse;
};

json report_to_json(const QueryReport& rep) {
  json j;
  j["method"] = rep.method;
  j["s"] = rep.s;
  j["edge_ratio"] = rep.edge_ratio;
  j["queries"] = json::object();
  for (const auto& [name, value] : rep.queries) j["queries"][name] = value;
  if (!rep.p_values.empty()) {
    j["p_values"] = json::object();
    for (const auto& [name, value] : rep.p_values) j["p_values"][name] = value;
  }
  return j;
}

int cmd_eval(const EvalArgs& a) {
  ProbGraph orig = load_with_warnings(a.input);
  ProbGraph sparse = load_with_warnings(a.sparse);
  if (a.partition_orig.empty() != a.partition_sparse.empty()) {
    throw std::runtime_error("partition files must be given for both graphs");
  }
  if (a.scores_orig.empty() != a.scores_sparse.empty()) {
    throw std::runtime_error("score files must be given for both graphs");
  }
  std::vector<int> part_orig, part_sparse;
  std::vector<double> sc_orig, sc_sparse;
  EvalInputs in;
  if (!a.partition_orig.empty()) {
    part_orig = load_partition_csv(a.partition_orig, orig.node_count());
    part_sparse = load_partition_csv(a.partition_sparse, sparse.node_count());
    in.partition_orig = &part_orig;
    in.partition_sparse = &part_sparse;
  }
  if (!a.scores_orig.empty()) {
    sc_orig = load_scores_csv(a.scores_orig, orig.node_count());
    sc_sparse = load_scores_csv(a.scores_sparse, sparse.node_count());
    in.scores_orig = &sc_orig;
    in.scores_sparse = &sc_sparse;
  }
  QueryReport rep = evaluate_queries(orig, sparse, in, a.method, a.s);
  json j = report_to_json(rep);
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, a.output);
  out << j.dump(2) << "\n";
  return 0;
}

// --------------------------------------------------------------- compare --

struct CompareArgs {
  std::string input;
  std::string scores_json;
  std::string out_dir;
  std::vector<std::string> methods{"gst", "ld", "ljs", "re"};
  std::vector<double> s_grid;
  int n = 100;
  double t = 0.01;
  std::string props = "23w";
  bool unnormalized = false;
  std::uint64_t seed = 0;
  int max_rounds = 1000;
  std::string order = "by-id";
  int threads = default_threads();
  std::string partition_orig;
  std::string partition_template;
  std::string scores_orig;
  std::string scores_template;
};

std::string fill_template(std::string tmpl, const std::string& method,
                          double s, int rep) {
  auto replace_all = [&](const std::string& key, const std::string& value) {
    std::size_t pos;
    while ((pos = tmpl.find(key)) != std::string::npos) {
      tmpl.replace(pos, key.size(), value);
    }
  };
  replace_all("{method}", method);
  replace_all("{s}", format_double(s));
  replace_all("{rep}", std::to_string(rep));
  return tmpl;
}

void write_ranking_outputs(const std::string& out_dir,
                           const RankingSummary& summary,
                           const std::vector<double>& s_labels, json extra) {
  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir + "/ranking.csv");
  if (!csv) throw std::runtime_error("cannot write ranking.csv");
  csv << "method,s,query,rank\n";
  for (const auto& [method, ranks] : summary.ranks) {
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      csv << method << ',' << format_double(s_labels[summary.cells[i].first])
          << ',' << summary.cells[i].second << ',' << format_double(ranks[i])
          << "\n";
    }
  }
  json j;
  j["cells"] = summary.cells.size();
  j["methods"] = json::object();
  for (const auto& [method, mean] : summary.mean) {
    j["methods"][method] = {{"mean_ranking", mean},
                            {"ranks", summary.ranks.at(method)}};
  }
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::ofstream js(out_dir + "/summary.json");
  if (!js) throw std::runtime_error("cannot write summary.json");
  js << j.dump(2) << "\n";
}

int compare_from_scores(const CompareArgs& a) {
  std::ifstream in(a.scores_json);
  if (!in) throw std::runtime_error("cannot open '" + a.scores_json + "'");
  json table_json = json::parse(in);
  std::map<std::string, bool> higher;
  if (table_json.contains("higher_is_better")) {
    for (auto& [q, v] : table_json["higher_is_better"].items()) higher[q] = v;
  }
  std::vector<ScoreTable> tables;
  std::vector<double> s_labels;
  for (auto& entry : table_json.at("tables")) {
    s_labels.push_back(entry.value("s", 0.0));
    ScoreTable table;
    for (auto& [method, qs] : entry.at("scores").items()) {
      for (auto& [query, value] : qs.items()) {
        table[method][query] = value;
      }
    }
    tables.push_back(std::move(table));
  }
  RankingSummary summary = rankings(tables, higher);
  write_ranking_outputs(a.out_dir, summary, s_labels,
                        json{{"source", a.scores_json}});
  return 0;
}

int cmd_compare(const CompareArgs& a) {
  if (!a.scores_json.empty()) return compare_from_scores(a);

  if (a.input.empty()) throw std::runtime_error("compare needs -i or --scores-json");
  if (a.n < 1) throw std::runtime_error("--n must be >= 1");
  if (a.s_grid.empty()) throw std::runtime_error("compare needs --s-grid");
  bool has_gst = false;
  for (const std::string& m : a.methods) has_gst |= m == "gst";
  if (!has_gst) {
    throw std::runtime_error("compare needs gst among --methods (baseline "
                             "edge counts are matched to it)");
  }

  ProbGraph g = load_with_warnings(a.input);
  std::vector<int> part_orig;
  std::vector<double> sc_orig;
  bool mesoscopic_warned = false;
  if (!a.partition_orig.empty()) {
    part_orig = load_partition_csv(a.partition_orig, g.node_count());
  }
  if (!a.scores_orig.empty()) {
    sc_orig = load_scores_csv(a.scores_orig, g.node_count());
  }

  std::vector<ScoreTable> tables;
  std::vector<double> s_labels;
  json protocol;
  protocol["input"] = a.input;
  protocol["n"] = a.n;
  protocol["base_seed"] = a.seed;
  protocol["similarity_means"] = json::object();

  for (double s : a.s_grid) {
    std::map<std::string, std::map<std::string, double>> sums;
    std::map<std::string, std::map<std::string, int>> counts;

    for (int rep = 0; rep < a.n; ++rep) {
      GstConfig cfg;
      cfg.s = s;
      cfg.t = a.t;
      cfg.properties = parse_props(a.props);
      cfg.normalized = !a.unnormalized;
      cfg.seed = a.seed + static_cast<std::uint64_t>(rep);
      cfg.max_rounds = a.max_rounds;
      cfg.edge_order = parse_order(a.order);
      RunResult res = run(g, cfg, a.threads);
      EdgeId keep = static_cast<EdgeId>(res.kept_edges.size());

      for (const std::string& method : a.methods) {
        std::vector<EdgeId> kept;
        if (method == "gst") {
          kept = res.kept_edges;
        } else if (method == "ld") {
          kept = local_degree(g, keep);
        } else if (method == "ljs") {
          kept = local_jaccard(g, keep);
        } else if (method == "re") {
          kept = random_edge(g, keep, cfg.seed);
        } else {
          throw std::runtime_error("unknown method '" + method + "'");
        }
        ProbGraph sparse = subgraph(g, kept);

        std::vector<int> part_sparse;
        std::vector<double> sc_sparse;
        EvalInputs in;
        if (!part_orig.empty() && !a.partition_template.empty()) {
          std::string path = fill_template(a.partition_template, method, s, rep);
          if (std::filesystem::exists(path)) {
            part_sparse = load_partition_csv(path, g.node_count());
            in.partition_orig = &part_orig;
            in.partition_sparse = &part_sparse;
          }
        }
        if (!sc_orig.empty() && !a.scores_template.empty()) {
          std::string path = fill_template(a.scores_template, method, s, rep);
          if (std::filesystem::exists(path)) {
            sc_sparse = load_scores_csv(path, g.node_count());
            in.scores_orig = &sc_orig;
            in.scores_sparse = &sc_sparse;
          }
        }
        if (!in.partition_orig && !mesoscopic_warned &&
            (a.partition_orig.empty() || a.partition_template.empty())) {
          std::cerr << "warning: no partition files; mesoscopic queries "
                       "skipped\n";
          mesoscopic_warned = true;
        }

        QueryReport rep_q = evaluate_queries(g, sparse, in, method, s);
        for (const auto& [query, value] : rep_q.queries) {
          sums[method][query] += value;
          counts[method][query] += 1;
        }
      }
    }

    ScoreTable table;
    std::string s_key = format_double(s);
    for (const auto& [method, qs] : sums) {
      for (const auto& [query, sum] : qs) {
        int c = counts[method][query];
        if (c == a.n) { // only queries evaluated on every repetition
          table[method][query] = sum / static_cast<double>(c);
          protocol["similarity_means"][s_key][method][query] = table[method][query];
        }
      }
    }
    tables.push_back(std::move(table));
    s_labels.push_back(s);
  }

  RankingSummary summary = rankings(tables, {});
  write_ranking_outputs(a.out_dir, summary, s_labels, std::move(protocol));
  return 0;
}

// ---------------------------------------------------------------- oracle --

struct OracleArgs {
  std::string mode;
  std::string input;
  std::string sparse;
  double s = 1.0;
  std::string props = "23w";
  bool unnormalized = false;
  NodeId node = 0;
  std::string property = "degree";
  int max_edges = 16;
  int max_world_edges = 12;
};

int cmd_oracle(const OracleArgs& a) {
  ProbGraph g = load_with_warnings(a.input);
  GstConfig cfg;
  cfg.s = a.s;
  cfg.properties = parse_props(a.props);
  cfg.normalized = !a.unnormalized;
  OracleBudget budget;
  budget.max_edges_exhaustive = a.max_edges;
  budget.max_world_edges = a.max_world_edges;
  json j;

  if (a.mode == "optimum") {
    OptimumResult res = exhaustive_optimum(g, cfg, budget);
    j["distance"] = res.distance;
    j["kept"] = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (res.included[e]) j["kept"].push_back({g.edge(e).u, g.edge(e).v});
    }
  } else if (a.mode == "nash") {
    if (a.sparse.empty()) throw std::runtime_error("nash needs --sparse");
    ProbGraph sparse = load_with_warnings(a.sparse);
    // Re-associate the sparse edges with the original edge ids.
    std::map<std::pair<NodeId, NodeId>, EdgeId> index;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      index[{g.edge(e).u, g.edge(e).v}] = e;
    }
    std::vector<char> included(g.edge_count(), 0);
    for (EdgeId e = 0; e < sparse.edge_count(); ++e) {
      auto it = index.find({sparse.edge(e).u, sparse.edge(e).v});
      if (it == index.end()) {
        throw std::runtime_error("sparse edge not present in the input graph");
      }
      included[it->second] = 1;
    }
    SubgraphState state = recount_state(g, std::move(included));
    ScaledExpectations ex = compute_all(g, cfg.s);
    double max_gain = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      max_gain = std::max(max_gain, gain(g, state, ex, cfg, e));
    }
    j["nash"] = nash_check(g, state, ex, cfg);
    j["max_gain"] = max_gain;
  } else if (a.mode == "expectation") {
    Property l = a.property == "degree"     ? Property::degree
                 : a.property == "triangle" ? Property::triangle
                                            : Property::wedge;
    ScaledExpectations ex = compute_all(g, cfg.s);
    double world = enumerate_worlds_expectation(g, ex.scaled_p, a.node, l, budget);
    double fast = l == Property::degree     ? ex.exp_deg[a.node]
                  : l == Property::triangle ? ex.exp_tri[a.node]
                                            : ex.exp_wedge[a.node];
    j["value"] = world;
    j["fast_path"] = fast;
    j["difference"] = std::abs(world - fast);
  } else {
    throw std::runtime_error("oracle mode must be optimum|nash|expectation");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- timing --

struct TimingArgs {
  std::string input;
  std::string output;
  double s = 0.5;
  double t = 0.01;
  std::string props = "23w";
  bool unnormalized = false;
  std::uint64_t seed = 0;
  std::string order = "by-id";
  int n = 10;
  int threads = default_threads();
};

int cmd_timing(const TimingArgs& a) {
  if (a.n < 1) throw std::runtime_error("--n must be >= 1");
  ProbGraph g = load_with_warnings(a.input);
  GstConfig cfg;
  cfg.s = a.s;
  cfg.t = a.t;
  cfg.properties = parse_props(a.props);
  cfg.normalized = !a.unnormalized;
  cfg.seed = a.seed;
  cfg.edge_order = parse_order(a.order);

  std::vector<double> s1, s2;
  int rounds = 0;
  for (int rep = 0; rep < a.n; ++rep) {
    RunResult res = run(g, cfg, a.threads);
    s1.push_back(res.stage1_seconds);
    s2.push_back(res.stage2_seconds);
    rounds = res.rounds;
  }
  auto stats = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= static_cast<double>(v.size());
    return std::pair<double, double>(mean, std::sqrt(var));
  };
  auto [m1, d1] = stats(s1);
  auto [m2, d2] = stats(s2);
  json j;
  j["input"] = a.input;
  j["n"] = a.n;
  j["threads"] = a.threads;
  j["rounds"] = rounds;
  j["stage1"] = {{"mean_seconds", m1}, {"stddev_seconds", d1}};
  j["stage2"] = {{"mean_seconds", m2}, {"stddev_seconds", d2}};
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, a.output);
  out << j.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-preserving graph sparsification via "
               "game-theoretic edge sampling (GST) with filtering baselines "
               "and an evaluation suite"};
  app.require_subcommand(1);

  ExpectArgs expect_args;
  CLI::App* expect = app.add_subcommand(
      "expect", "Per-node scaled expectations and structural caps as CSV");
  expect->add_option("-i,--input", expect_args.input, "input edge list")
      ->required();
  expect->add_option("-o,--output", expect_args.output, "output CSV (default stdout)");
  expect->add_option("--s", expect_args.s, "scaling factor in [0,1]")->required();
  expect->add_option("--threads", expect_args.threads, "worker threads");

  SparsifyArgs sp;
  CLI::App* sparsify = app.add_subcommand("sparsify", "Sample a sparse subgraph");
  sparsify->add_option("-i,--input", sp.input, "input edge list")->required();
  sparsify->add_option("-o,--output", sp.output, "output edge list (default stdout)");
  sparsify->add_option("--report", sp.report, "JSON run report path");
  sparsify->add_option("--trace", sp.trace, "CSV convergence trace path (gst)");
  sparsify->add_option("--method", sp.method, "gst|ld|ljs|re")
      ->check(CLI::IsMember({"gst", "ld", "ljs", "re"}));
  sparsify->add_option("--s", sp.s, "scaling factor (gst)");
  sparsify->add_option("--t", sp.t, "tolerance (gst, default 0.01)");
  sparsify->add_option("--props", sp.props, "properties 2|23|23w (gst)")
      ->check(CLI::IsMember({"2", "23", "23w"}));
  sparsify->add_flag("--unnormalized", sp.unnormalized,
                     "drop the per-node normalization (UNGST)");
  sparsify->add_option("--seed", sp.seed, "seed (gst shuffle order, re)");
  sparsify->add_option("--max-rounds", sp.max_rounds, "round cap (gst)");
  sparsify->add_option("--order", sp.order, "sweep order by-id|shuffle (gst)")
      ->check(CLI::IsMember({"by-id", "shuffle"}));
  sparsify->add_option("--threads", sp.threads, "stage-one worker threads");
  sparsify->add_option("--ratio", sp.ratio, "keep ratio (ld|ljs|re)");
  sparsify->add_option("--match", sp.match,
                       "edge list whose edge count to match (ld|ljs|re)");

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand(
      "eval", "Structural-query similarity report for a sparse subgraph");
  eval->add_option("-i,--input", ev.input, "original edge list")->required();
  eval->add_option("--sparse", ev.sparse, "sparse edge list")->required();
  eval->add_option("-o,--output", ev.output, "output JSON (default stdout)");
  eval->add_option("--method", ev.method, "method name for the report");
  eval->add_option("--s", ev.s, "scaling factor for the report");
  eval->add_option("--partition-orig", ev.partition_orig, "CSV node,label");
  eval->add_option("--partition-sparse", ev.partition_sparse, "CSV node,label");
  eval->add_option("--scores-orig", ev.scores_orig, "CSV node,value");
  eval->add_option("--scores-sparse", ev.scores_sparse, "CSV node,value");

  CompareArgs cp;
  CLI::App* compare = app.add_subcommand(
      "compare", "Repeated-run method comparison with ranking aggregation");
  compare->add_option("-i,--input", cp.input, "input edge list");
  compare->add_option("--scores-json", cp.scores_json,
                      "aggregate a precomputed score table instead of running");
  compare->add_option("--out-dir", cp.out_dir, "output directory")->required();
  compare->add_option("--methods", cp.methods, "methods to compare")->delimiter(',');
  compare->add_option("--s-grid", cp.s_grid, "scaling factors")->delimiter(',');
  compare->add_option("--n", cp.n, "repetitions per method and S (default 100)");
  compare->add_option("--t", cp.t, "gst tolerance");
  compare->add_option("--props", cp.props, "gst properties 2|23|23w")
      ->check(CLI::IsMember({"2", "23", "23w"}));
  compare->add_flag("--unnormalized", cp.unnormalized, "UNGST variant");
  compare->add_option("--seed", cp.seed, "base seed; repetition r uses seed+r");
  compare->add_option("--max-rounds", cp.max_rounds, "gst round cap");
  compare->add_option("--order", cp.order, "gst sweep order")
      ->check(CLI::IsMember({"by-id", "shuffle"}));
  compare->add_option("--threads", cp.threads, "stage-one worker threads");
  compare->add_option("--partition-orig", cp.partition_orig,
                      "partition CSV of the original graph");
  compare->add_option("--partition-template", cp.partition_template,
                      "per-run partition path with {method},{s},{rep}");
  compare->add_option("--scores-orig", cp.scores_orig,
                      "node score CSV of the original graph");
  compare->add_option("--scores-template", cp.scores_template,
                      "per-run score path with {method},{s},{rep}");

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force references for ad-hoc validation");
  oracle->add_option("mode", oa.mode, "optimum|nash|expectation")->required();
  oracle->add_option("-i,--input", oa.input, "input edge list")->required();
  oracle->add_option("--sparse", oa.sparse, "sparse edge list (nash)");
  oracle->add_option("--s", oa.s, "scaling factor")->required();
  oracle->add_option("--props", oa.props, "properties 2|23|23w")
      ->check(CLI::IsMember({"2", "23", "23w"}));
  oracle->add_flag("--unnormalized", oa.unnormalized, "UNGST distances");
  oracle->add_option("--node", oa.node, "node id (expectation)");
  oracle->add_option("--property", oa.property, "degree|triangle|wedge")
      ->check(CLI::IsMember({"degree", "triangle", "wedge"}));
  oracle->add_option("--max-edges", oa.max_edges, "exhaustive budget");
  oracle->add_option("--max-world-edges", oa.max_world_edges, "world budget");

  TimingArgs ta;
  CLI::App* timing = app.add_subcommand(
      "timing", "Mean and stddev of the two stage wall times over n runs");
  timing->add_option("-i,--input", ta.input, "input edge list")->required();
  timing->add_option("-o,--output", ta.output, "output JSON (default stdout)");
  timing->add_option("--s", ta.s, "scaling factor")->required();
  timing->add_option("--t", ta.t, "tolerance");
  timing->add_option("--props", ta.props, "properties 2|23|23w")
      ->check(CLI::IsMember({"2", "23", "23w"}));
  timing->add_flag("--unnormalized", ta.unnormalized, "UNGST variant");
  timing->add_option("--seed", ta.seed, "seed");
  timing->add_option("--order", ta.order, "sweep order")
      ->check(CLI::IsMember({"by-id", "shuffle"}));
  timing->add_option("--n", ta.n, "repetitions (default 10)");
  timing->add_option("--threads", ta.threads, "stage-one worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expect->parsed()) return cmd_expect(expect_args);
    if (sparsify->parsed()) return cmd_sparsify(sp);
    if (eval->parsed()) return cmd_eval(ev);
    if (compare->parsed()) return cmd_compare(cp);
    if (oracle->parsed()) return cmd_oracle(oa);
    if (timing->parsed()) return cmd_timing(ta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
