#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gst/expectations.hpp"
#include "gst/oracle.hpp"
#include "support.hpp"

using namespace gst;
using doctest::Approx;

TEST_CASE("scaled_contributions") {
  ProbGraph g(2, {{0, 1}}, {1.0});
  CHECK(scaled_contributions(g, 0.7)[0] == Approx(0.7).epsilon(1e-12));
  ProbGraph g2(2, {{0, 1}}, {0.99});
  CHECK(scaled_contributions(g2, 1.0)[0] == 0.99);
  ProbGraph g3(2, {{0, 1}}, {0.8});
  CHECK(scaled_contributions(g3, 0.0)[0] == 0.0);
  CHECK_THROWS_AS(scaled_contributions(g, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(scaled_contributions(g, -0.1), std::invalid_argument);
}

TEST_CASE("expected degree: hub example, isolated node, K3 enumeration") {
  ProbGraph hub = test::hub_example();
  auto ps = scaled_contributions(hub, 0.7);
  CHECK(expected_degree(hub, ps, 0) == Approx(2.8).epsilon(1e-12));

  ProbGraph iso(3, {{0, 1}}, {1.0});
  auto ps2 = scaled_contributions(iso, 1.0);
  CHECK(expected_degree(iso, ps2, 2) == 0.0);

  ProbGraph k3 = test::triangle();
  auto ps3 = scaled_contributions(k3, 0.5);
  for (NodeId u = 0; u < 3; ++u) {
    CHECK(expected_degree(k3, ps3, u) == Approx(1.0).epsilon(1e-12));
    CHECK(expected_degree(k3, ps3, u) ==
          Approx(enumerate_worlds_expectation(k3, ps3, u, Property::degree))
              .epsilon(1e-12));
  }
}

TEST_CASE("expected triangles: hub example and K3 enumeration") {
  ProbGraph hub = test::hub_example();
  auto ps = scaled_contributions(hub, 0.7);
  CHECK(expected_triangles(hub, ps, 0) == Approx(0.343).epsilon(1e-9));

  ProbGraph p3 = test::path3();
  auto ps2 = scaled_contributions(p3, 1.0);
  CHECK(expected_triangles(p3, ps2, 1) == 0.0);

  ProbGraph k3 = test::triangle();
  auto ps3 = scaled_contributions(k3, 0.5);
  for (NodeId u = 0; u < 3; ++u) {
    CHECK(expected_triangles(k3, ps3, u) == Approx(0.125).epsilon(1e-12));
    CHECK(expected_triangles(k3, ps3, u) ==
          Approx(enumerate_worlds_expectation(k3, ps3, u, Property::triangle))
              .epsilon(1e-12));
  }
}

TEST_CASE("degree_distribution_dp basics") {
  CHECK(degree_distribution_dp({}) == std::vector<double>{1.0});

  auto one = degree_distribution_dp(std::vector<double>{0.7});
  REQUIRE(one.size() == 2);
  CHECK(one[0] == Approx(0.3).epsilon(1e-12));
  CHECK(one[1] == Approx(0.7).epsilon(1e-12));

  auto two = degree_distribution_dp(std::vector<double>{0.5, 0.5});
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Approx(0.25).epsilon(1e-12));
  CHECK(two[1] == Approx(0.5).epsilon(1e-12));
  CHECK(two[2] == Approx(0.25).epsilon(1e-12));
}

TEST_CASE("degree_distribution_dp is a distribution with the right mean") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int it = 0; it < 50; ++it) {
    std::vector<double> qs(rng() % 15);
    for (double& q : qs) q = unit(rng);
    auto pr = degree_distribution_dp(qs);
    REQUIRE(pr.size() == qs.size() + 1);
    double sum = 0.0;
    double mean = 0.0;
    for (std::size_t k = 0; k < pr.size(); ++k) {
      CHECK(pr[k] >= 0.0);
      sum += pr[k];
      mean += static_cast<double>(k) * pr[k];
    }
    double expected_mean = 0.0;
    for (double q : qs) expected_mean += q;
    CHECK(sum == Approx(1.0).epsilon(1e-12));
    CHECK(mean == Approx(expected_mean).epsilon(1e-9));
  }
}

TEST_CASE("expected wedges: hub node, path center, K3") {
  ProbGraph hub = test::hub_example();
  auto ps = scaled_contributions(hub, 0.7);
  double d = expected_degree(hub, ps, 0);
  double t = expected_triangles(hub, ps, 0);
  CHECK(expected_wedges(hub, ps, 0, d, t) == Approx(2.597).epsilon(1e-9));
  CHECK(expected_wedges(hub, ps, 0, d, t) ==
        Approx(enumerate_worlds_expectation(hub, ps, 0, Property::wedge))
            .epsilon(1e-9));

  ProbGraph p3 = test::path3();
  auto ps2 = scaled_contributions(p3, 1.0);
  CHECK(expected_wedges(p3, ps2, 1, 2.0, 0.0) == Approx(1.0).epsilon(1e-12));

  ProbGraph k3 = test::triangle();
  auto ps3 = scaled_contributions(k3, 0.5);
  for (NodeId u = 0; u < 3; ++u) {
    double du = expected_degree(k3, ps3, u);
    double tu = expected_triangles(k3, ps3, u);
    CHECK(expected_wedges(k3, ps3, u, du, tu) == Approx(0.125).epsilon(1e-9));
  }
}

TEST_CASE("structural caps") {
  ProbGraph k3 = test::triangle();
  StructuralCaps c = structural_caps(k3, 0);
  CHECK(c.deg == 2);
  CHECK(c.tri == 1);
  CHECK(c.wedge == 1);

  ProbGraph s4 = test::star(4);
  c = structural_caps(s4, 0);
  CHECK(c.deg == 4);
  CHECK(c.tri == 0);
  CHECK(c.wedge == 6);

  ProbGraph iso(3, {{0, 1}}, {1.0});
  c = structural_caps(iso, 2);
  CHECK(c.deg == 0);
  CHECK(c.tri == 0);
  CHECK(c.wedge == 0);
}

TEST_CASE("compute_all: worked example, zero scaling, certainty") {
  ProbGraph hub = test::hub_example();
  ScaledExpectations ex = compute_all(hub, 0.7);
  CHECK(ex.exp_deg[0] == Approx(2.8).epsilon(1e-12));
  CHECK(ex.exp_tri[0] == Approx(0.343).epsilon(1e-9));

  ProbGraph g = test::erdos_renyi(20, 0.3, 5);
  ScaledExpectations zero = compute_all(g, 0.0);
  ScaledExpectations full = compute_all(g, 1.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    CHECK(zero.exp_deg[u] == 0.0);
    CHECK(zero.exp_tri[u] == 0.0);
    CHECK(zero.exp_wedge[u] == 0.0);
    CHECK(zero.cap_deg[u] == full.cap_deg[u]);
    // p == 1, S == 1: expectations coincide with the structural counts
    CHECK(full.exp_deg[u] == static_cast<double>(full.cap_deg[u]));
    CHECK(full.exp_tri[u] == static_cast<double>(full.cap_tri[u]));
    CHECK(std::abs(full.exp_wedge[u] -
                   static_cast<double>(full.cap_wedge[u] - full.cap_tri[u])) <=
          1e-9);
  }
}

TEST_CASE("compute_all is deterministic across thread counts") {
  ProbGraph g = test::erdos_renyi(60, 0.15, 21, /*random_confidence=*/true);
  ScaledExpectations a = compute_all(g, 0.6, 1);
  ScaledExpectations b = compute_all(g, 0.6, 4);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    CHECK(a.exp_deg[u] == b.exp_deg[u]);
    CHECK(a.exp_tri[u] == b.exp_tri[u]);
    CHECK(a.exp_wedge[u] == b.exp_wedge[u]);
  }
}

TEST_CASE("expected degree is linear in S; triangles cubic for equal p") {
  ProbGraph g = test::erdos_renyi(15, 0.4, 3);
  auto ps1 = scaled_contributions(g, 1.0);
  for (double s : {0.2, 0.5, 1.0}) {
    auto ps = scaled_contributions(g, s);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      CHECK(expected_degree(g, ps, u) ==
            Approx(s * expected_degree(g, ps1, u)).epsilon(1e-12));
      CHECK(expected_triangles(g, ps, u) ==
            Approx(s * s * s * expected_triangles(g, ps1, u)).epsilon(1e-9));
    }
  }
}

TEST_CASE("possible-world oracle equivalence on small random graphs") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> s_dist(0.0, 1.0);
  int checked = 0;
  for (int it = 0; it < 25; ++it) {
    ProbGraph g = test::erdos_renyi(8, 0.35, rng(), /*random_confidence=*/true);
    double s = s_dist(rng);
    ScaledExpectations ex = compute_all(g, s);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (Property l : {Property::degree, Property::triangle, Property::wedge}) {
        double world;
        try {
          world = enumerate_worlds_expectation(g, ex.scaled_p, u, l);
        } catch (const std::runtime_error&) {
          continue; // over the world budget
        }
        double fast = l == Property::degree  ? ex.exp_deg[u]
                      : l == Property::triangle ? ex.exp_tri[u]
                                                : ex.exp_wedge[u];
        CHECK(std::abs(fast - world) <= 1e-9);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}
