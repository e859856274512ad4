#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include "doctest.h"
#include "normal/cycles.hpp"
#include "normal/graph.hpp"

using namespace normal;

namespace {

constexpr long long kUnbounded = std::numeric_limits<long long>::max();

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer C5
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
        g.add_edge(i, j);
  return g;
}

// Independent oracle: all distinct cycles of length <= L by checking every
// vertex permutation that is already in canonical form. Exponential; for
// tiny graphs only.
std::set<Cycle> cycles_bruteforce(const Graph& g, int L) {
  std::set<Cycle> out;
  std::vector<int> verts(g.n());
  for (int i = 0; i < g.n(); ++i) verts[i] = i;
  std::vector<int> pick;
  std::vector<char> used(g.n(), 0);

  // Enumerate sequences starting at their minimum with second < last.
  std::function<void(int)> rec = [&](int start) {
    int len = static_cast<int>(pick.size());
    if (len >= 3 && g.has_edge(pick.back(), start) && pick[1] < pick.back())
      out.insert(Cycle{pick});
    if (len == L) return;
    for (int v = start + 1; v < g.n(); ++v) {
      if (used[v] || !g.has_edge(pick.back(), v)) continue;
      used[v] = 1;
      pick.push_back(v);
      rec(start);
      pick.pop_back();
      used[v] = 0;
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    pick.assign(1, s);
    used.assign(g.n(), 0);
    used[s] = 1;
    rec(s);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical form") {
  Cycle c = canonical_cycle({4, 2, 7, 3});
  // starts at 2; of its two cycle neighbors 4 and 7, the smaller comes second
  CHECK(c.vertices == std::vector<int>{2, 4, 3, 7});
  CHECK(canonical_cycle({3, 7, 2, 4}) == c);  // reflected rotation, same cycle
  CHECK_THROWS_AS(canonical_cycle({0, 1}), std::invalid_argument);
}

TEST_CASE("is_cycle_of") {
  Graph g = cycle_graph(5);
  CHECK(is_cycle_of(g, canonical_cycle({0, 1, 2, 3, 4})));
  CHECK_FALSE(is_cycle_of(g, canonical_cycle({0, 1, 3, 2, 4})));
  CHECK_FALSE(is_cycle_of(g, Cycle{{0, 1, 2, 1, 4}}));  // repeated vertex
}

TEST_CASE("girth basics") {
  CHECK(girth(cycle_graph(4)) == 4);
  Graph tree(4);
  tree.add_edge(0, 1);
  tree.add_edge(0, 2);
  tree.add_edge(0, 3);
  CHECK_FALSE(girth(tree).has_value());
  CHECK(girth(complete_graph(4)) == 3);
}

TEST_CASE("odd girth basics") {
  CHECK(odd_girth(cycle_graph(5)) == 5);
  Graph k33(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  CHECK_FALSE(odd_girth(k33).has_value());
}

TEST_CASE("petersen girth and odd girth equal 5") {
  // Derived from the brute-force permutation oracle.
  Graph g = petersen();
  std::set<Cycle> upto5 = cycles_bruteforce(g, 5);
  int shortest = 99;
  for (const Cycle& c : upto5) shortest = std::min(shortest, c.length());
  REQUIRE(shortest == 5);
  CHECK(girth(g) == 5);
  CHECK(odd_girth(g) == 5);
}

TEST_CASE("cycle enumeration agrees with brute force") {
  CHECK(enumerate_cycles_up_to(cycle_graph(5), 5, kUnbounded).cycles.size() == 1);

  Graph k4 = complete_graph(4);
  std::set<Cycle> oracle = cycles_bruteforce(k4, 4);
  int tri = 0, quad = 0;
  for (const Cycle& c : oracle) (c.length() == 3 ? tri : quad)++;
  REQUIRE(tri == 4);
  REQUIRE(quad == 3);
  CycleList got = enumerate_cycles_up_to(k4, 4, kUnbounded);
  CHECK_FALSE(got.truncated);
  CHECK(std::set<Cycle>(got.cycles.begin(), got.cycles.end()) == oracle);

  CHECK(enumerate_cycles_up_to(cycle_graph(6), 3, kUnbounded).cycles.empty());
  CHECK_THROWS_AS(enumerate_cycles_up_to(k4, 2, kUnbounded),
                  std::invalid_argument);
}

TEST_CASE("cycle enumeration randomized cross-check") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(8, 0.4, rng);
    CycleList got = enumerate_cycles_up_to(g, 8, kUnbounded);
    REQUIRE_FALSE(got.truncated);
    std::set<Cycle> canon(got.cycles.begin(), got.cycles.end());
    CHECK(canon.size() == got.cycles.size());  // no duplicates
    for (const Cycle& c : got.cycles) CHECK(is_cycle_of(g, c));
    CHECK(canon == cycles_bruteforce(g, 8));
  }
}

TEST_CASE("enumeration budget truncates") {
  CycleList r = enumerate_cycles_up_to(complete_graph(8), 8, 10);
  CHECK(r.truncated);
}

TEST_CASE("list_four_cycles") {
  CHECK(list_four_cycles(cycle_graph(4)).size() == 1);
  CHECK(list_four_cycles(complete_graph(4)).size() == 3);
  CHECK(list_four_cycles(cycle_graph(5)).empty());
}

TEST_CASE("shortest odd cycle through edge") {
  Graph c5 = cycle_graph(5);
  auto r = shortest_odd_cycle_through_edge(c5, {0, 1});
  REQUIRE(r.has_value());
  CHECK(r->length == 5);
  CHECK(r->realizing == canonical_cycle({0, 1, 2, 3, 4}));

  CHECK_FALSE(shortest_odd_cycle_through_edge(cycle_graph(6), {0, 1}).has_value());
  CHECK_THROWS_AS(shortest_odd_cycle_through_edge(c5, {0, 2}),
                  std::invalid_argument);

  Graph p = petersen();
  for (const Edge& e : p.edges()) {
    auto s = shortest_odd_cycle_through_edge(p, e);
    REQUIRE(s.has_value());
    CHECK(s->length == 5);  // every Petersen edge lies on a 5-cycle
    CHECK(is_cycle_of(p, s->realizing));
    CHECK(s->realizing.length() <= s->length);
  }
}

TEST_CASE("odd girth equals oracle minimum on random graphs") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(9, 0.35, rng);
    auto all = cycles_bruteforce(g, 9);
    int min_odd = 0;
    for (const Cycle& c : all)
      if (c.length() % 2 == 1 && (min_odd == 0 || c.length() < min_odd))
        min_odd = c.length();
    auto og = odd_girth(g);
    if (min_odd == 0) {
      CHECK_FALSE(og.has_value());
    } else {
      CHECK(og == min_odd);
    }
    // per-edge minimum equals the odd girth
    int edge_min = 0;
    for (const Edge& e : g.edges()) {
      auto s = shortest_odd_cycle_through_edge(g, e);
      if (s && (edge_min == 0 || s->length < edge_min)) edge_min = s->length;
    }
    CHECK(edge_min == min_odd);
  }
}

TEST_CASE("induced forbidden subgraphs") {
  auto r5 = find_induced_forbidden(cycle_graph(5));
  REQUIRE(r5.size() == 1);
  CHECK(r5[0].kind == ForbiddenKind::C5);
  CHECK(r5[0].vertices == std::vector<int>{0, 1, 2, 3, 4});

  CHECK(find_induced_forbidden(cycle_graph(9)).empty());

  Graph co_c7 = complement(cycle_graph(7));
  auto r7 = find_induced_forbidden(co_c7);
  REQUIRE(r7.size() == 1);
  CHECK(r7[0].kind == ForbiddenKind::CoC7);

  auto rc7 = find_induced_forbidden(cycle_graph(7));
  REQUIRE(rc7.size() == 1);
  CHECK(rc7[0].kind == ForbiddenKind::C7);

  // C6 plus a chord creates no induced C5/C7/co-C7
  Graph g = cycle_graph(6);
  g.add_edge(0, 3);
  CHECK(find_induced_forbidden(g).empty());
}
