#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "gst/graph.hpp"
#include "gst/io.hpp"
#include "support.hpp"

using namespace gst;

TEST_CASE("parse: plain edges default to confidence 1") {
  std::istringstream in("0 1\n1 2");
  LoadedGraph lg = parse_graph(in);
  CHECK(lg.graph.node_count() == 3);
  CHECK(lg.graph.edge_count() == 2);
  CHECK(lg.graph.p(0) == 1.0);
  CHECK(lg.graph.p(1) == 1.0);
  CHECK(lg.warnings.empty());
}

TEST_CASE("parse: explicit confidence") {
  std::istringstream in("0 1 0.99");
  LoadedGraph lg = parse_graph(in);
  CHECK(lg.graph.node_count() == 2);
  CHECK(lg.graph.p(0) == 0.99);
}

TEST_CASE("parse: duplicate edge in either orientation is rejected") {
  std::istringstream in("0 1\n1 0");
  CHECK_THROWS_WITH_AS(parse_graph(in),
                       doctest::Contains("duplicate"), std::runtime_error);
}

TEST_CASE("parse: self-loop rejected with line number") {
  std::istringstream in("0 1\n2 2");
  CHECK_THROWS_WITH_AS(parse_graph(in), doctest::Contains("line 2"),
                       std::runtime_error);
}

TEST_CASE("parse: malformed line reported") {
  std::istringstream in("0 x");
  CHECK_THROWS_WITH_AS(parse_graph(in), doctest::Contains("line 1"),
                       std::runtime_error);
}

TEST_CASE("parse: confidence out of range") {
  std::istringstream bad1("0 1 0");
  CHECK_THROWS_AS(parse_graph(bad1), std::runtime_error);
  std::istringstream bad2("0 1 1.5");
  CHECK_THROWS_AS(parse_graph(bad2), std::runtime_error);
}

TEST_CASE("parse: low confidence warns but loads") {
  std::istringstream in("0 1 0.5\n1 2 0.9");
  LoadedGraph lg = parse_graph(in);
  CHECK(lg.graph.edge_count() == 2);
  REQUIRE(lg.warnings.size() == 1);
  CHECK(lg.warnings[0].find("2 edge(s)") != std::string::npos);
}

TEST_CASE("parse: nodes directive allows trailing isolated nodes") {
  std::istringstream in("# nodes 5\n0 1");
  LoadedGraph lg = parse_graph(in);
  CHECK(lg.graph.node_count() == 5);
  CHECK(lg.graph.degree(4) == 0);

  std::istringstream bad("# nodes 2\n0 3");
  CHECK_THROWS_AS(parse_graph(bad), std::runtime_error);
}

TEST_CASE("parse: comments and labels") {
  std::istringstream in("# a comment\n# label 0 Berlin\n# label 2 Potsdam\n0 1\n1 2");
  LoadedGraph lg = parse_graph(in);
  REQUIRE(lg.graph.labels().size() == 3);
  CHECK(lg.graph.labels()[0] == "Berlin");
  CHECK(lg.graph.labels()[1] == "");
  CHECK(lg.graph.labels()[2] == "Potsdam");
}

TEST_CASE("write/load round-trip is exact") {
  ProbGraph g = test::erdos_renyi(12, 0.4, 7, /*random_confidence=*/true);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  LoadedGraph lg = parse_graph(in);
  REQUIRE(lg.graph.node_count() == g.node_count());
  REQUIRE(lg.graph.edge_count() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(lg.graph.edge(e).u == g.edge(e).u);
    CHECK(lg.graph.edge(e).v == g.edge(e).v);
    CHECK(lg.graph.p(e) == g.p(e)); // bit-exact via shortest round-trip decimals
  }
}

TEST_CASE("round-trip keeps labels and isolated nodes") {
  ProbGraph g(4, {{0, 2}}, {0.97}, {"a", "", "c", ""});
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in(out.str());
  LoadedGraph lg = parse_graph(in);
  CHECK(lg.graph.node_count() == 4);
  REQUIRE(lg.graph.labels().size() == 4);
  CHECK(lg.graph.labels()[2] == "c");
}

TEST_CASE("common_neighbors on the fixtures") {
  ProbGraph k3 = test::triangle();
  CHECK(common_neighbors(k3, 0, 1) == std::vector<NodeId>{2});
  ProbGraph p3 = test::path3();
  CHECK(common_neighbors(p3, 0, 2) == std::vector<NodeId>{1});
  CHECK(common_neighbors(p3, 0, 1).empty());
}

TEST_CASE("common_neighbors respects the edge mask") {
  ProbGraph k3 = test::triangle();
  std::vector<char> all{1, 1, 1};
  CHECK(common_neighbors(k3, 0, 1, all) == std::vector<NodeId>{2});
  std::vector<char> no02{1, 0, 1}; // edge {0,2} excluded
  CHECK(common_neighbors(k3, 0, 1, no02).empty());
}

TEST_CASE("adjacency invariants on random graphs") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    ProbGraph g = test::erdos_renyi(30, 0.2, seed);
    std::size_t total = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto nbs = g.neighbors(u);
      total += nbs.size();
      for (std::size_t i = 1; i < nbs.size(); ++i) {
        CHECK(nbs[i - 1].node < nbs[i].node);
      }
      for (const Neighbor& nb : nbs) {
        // symmetric with the same edge id
        bool found = false;
        for (const Neighbor& back : g.neighbors(nb.node)) {
          if (back.node == u && back.edge == nb.edge) found = true;
        }
        CHECK(found);
      }
    }
    CHECK(total == 2 * std::size_t{g.edge_count()});
  }
}

TEST_CASE("merge intersection matches hash-set intersection") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 20; ++it) {
    ProbGraph g = test::erdos_renyi(25, 0.3, rng());
    std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
    NodeId u = pick(rng);
    NodeId v = pick(rng);
    if (u == v) continue;
    std::set<NodeId> nu;
    for (const Neighbor& nb : g.neighbors(u)) nu.insert(nb.node);
    std::vector<NodeId> expected;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nu.count(nb.node)) expected.push_back(nb.node);
    }
    CHECK(common_neighbors(g, u, v) == expected);
    CHECK(common_neighbors(g, u, v) == common_neighbors(g, v, u));
  }
}

TEST_CASE("subgraph keeps p values and renumbers densely") {
  ProbGraph g(4, {{0, 1}, {1, 2}, {2, 3}}, {1.0, 0.97, 0.96});
  std::vector<char> inc{1, 0, 1};
  ProbGraph s = subgraph(g, inc);
  CHECK(s.node_count() == 4);
  REQUIRE(s.edge_count() == 2);
  CHECK(s.edge(0).u == 0);
  CHECK(s.edge(1).v == 3);
  CHECK(s.p(1) == 0.96);
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(ProbGraph(3, {{0, 0}}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ProbGraph(3, {{0, 1}, {1, 0}}, {1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProbGraph(2, {{0, 2}}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ProbGraph(3, {{0, 1}}, {0.0}), std::invalid_argument);
}

TEST_CASE("partition and score CSV loaders enforce full coverage") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gst_io_tests";
  fs::create_directories(dir);
  auto put = [&](const char* name, const char* text) {
    std::ofstream out(dir / name);
    out << text;
    return (dir / name).string();
  };

  std::string good = put("part.csv", "node,label\n0,1\n1,1\n2,2\n");
  CHECK(load_partition_csv(good, 3) == std::vector<int>{1, 1, 2});

  std::string spaced = put("part2.csv", "2 7\n0 5\n1 5\n");
  CHECK(load_partition_csv(spaced, 3) == std::vector<int>{5, 5, 7});

  std::string missing = put("part3.csv", "node,label\n0,1\n2,2\n");
  CHECK_THROWS_AS(load_partition_csv(missing, 3), std::runtime_error);

  std::string dup = put("part4.csv", "0,1\n0,2\n1,0\n");
  CHECK_THROWS_AS(load_partition_csv(dup, 3), std::runtime_error);

  std::string scores = put("scores.csv", "node,value\n0,0.5\n1,-1.25\n");
  CHECK(load_scores_csv(scores, 2) == std::vector<double>{0.5, -1.25});
  CHECK_THROWS_AS(load_scores_csv(scores, 3), std::runtime_error);
}
