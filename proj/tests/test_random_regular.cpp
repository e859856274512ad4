#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>

#include "doctest.h"
#include "normal/graph.hpp"
#include "normal/random_regular.hpp"

using namespace normal;

TEST_CASE("uniform_below rejects zero and stays in range") {
  Rng rng(1);
  CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 7) < 7);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 1) == 0);
}

TEST_CASE("configuration is a perfect matching") {
  Rng rng(42);
  Configuration cfg = sample_configuration(4, 3, rng);
  CHECK(cfg.pairs.size() == 6);
  std::vector<int> seen(12, 0);
  for (auto [a, b] : cfg.pairs) {
    ++seen[a];
    ++seen[b];
  }
  for (int s : seen) CHECK(s == 1);

  CHECK_THROWS_AS(sample_configuration(5, 3, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_configuration(0, 2, rng), std::invalid_argument);
}

TEST_CASE("degenerate configurations") {
  Rng rng(0);
  Configuration c1 = sample_configuration(2, 1, rng);
  REQUIRE(c1.pairs.size() == 1);
  MultiGraph m1 = project(c1);
  CHECK(m1.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(is_simple(m1));

  Configuration c2 = sample_configuration(1, 2, rng);
  MultiGraph m2 = project(c2);
  CHECK(m2.edges == std::vector<std::pair<int, int>>{{0, 0}});  // loop
  CHECK_FALSE(is_simple(m2));
  CHECK(m2.degree(0) == 2);  // loops count twice
}

TEST_CASE("projection preserves degrees") {
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    Configuration cfg = sample_configuration(6, 3, rng);
    MultiGraph m = project(cfg);
    CHECK(m.edges.size() == 9);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 3);
  }
}

TEST_CASE("is_simple flags doubled edges") {
  MultiGraph m{3, {{0, 1}, {0, 1}, {1, 2}}};
  CHECK_FALSE(is_simple(m));
  MultiGraph s{3, {{0, 1}, {0, 2}, {1, 2}}};
  CHECK(is_simple(s));
}

TEST_CASE("n=2 d=2 matchings are uniform") {
  // The 4 half-edges admit 3 matchings; each should appear 10000 +- 3 sigma
  // times over 30000 draws (sigma = sqrt(30000 * 1/3 * 2/3) ~ 81.6).
  std::map<std::vector<std::pair<int, int>>, int> freq;
  Rng rng(2024);
  for (int i = 0; i < 30000; ++i) {
    Configuration cfg = sample_configuration(2, 2, rng);
    freq[cfg.pairs]++;
  }
  REQUIRE(freq.size() == 3);
  double sigma = std::sqrt(30000.0 / 3 * 2 / 3);
  for (auto& [pairs, count] : freq)
    CHECK(std::abs(count - 10000.0) <= 3 * sigma);
}

TEST_CASE("sample_simple_regular basics") {
  SampleResult s = sample_simple_regular(4, 3, 0);
  CHECK(s.graph.m() == 6);  // the unique 3-regular graph on 4 vertices: K4
  for (int v = 0; v < 4; ++v) CHECK(s.graph.degree(v) == 3);

  CHECK_THROWS_AS(sample_simple_regular(5, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_simple_regular(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_simple_regular(4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_simple_regular(2, 2, 0, 10), std::invalid_argument);

  // rejection limit: find a seed that needs at least one retry, then cap
  // the retries below that
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    SampleResult s = sample_simple_regular(8, 3, seed);
    if (s.rejects > 0) {
      CHECK_THROWS_AS(sample_simple_regular(8, 3, seed, s.rejects - 1),
                      std::runtime_error);
      break;
    }
  }
}

TEST_CASE("samples are d-regular and simple") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SampleResult s = sample_simple_regular(20, 3, seed);
    CHECK(s.graph.n() == 20);
    CHECK(s.graph.m() == 30);
    for (int v = 0; v < 20; ++v) CHECK(s.graph.degree(v) == 3);
  }
}

TEST_CASE("determinism across calls") {
  for (std::uint64_t seed : {0, 1, 99}) {
    Graph a = sample_simple_regular(30, 4, seed).graph;
    Graph b = sample_simple_regular(30, 4, seed).graph;
    CHECK(a.edges() == b.edges());
  }
  Graph a = sample_simple_regular(30, 4, 0).graph;
  Graph b = sample_simple_regular(30, 4, 1).graph;
  CHECK(a.edges() != b.edges());
}
