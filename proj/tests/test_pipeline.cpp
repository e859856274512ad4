#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "normal/cycles.hpp"
#include "normal/graph.hpp"
#include "normal/pipeline.hpp"
#include "normal/random_regular.hpp"

using namespace normal;

namespace {

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(a.n() + e.u, a.n() + e.v);
  return g;
}

const CheckResult* find_check(const PipelineReport& r, const std::string& n) {
  for (const CheckResult& c : r.checks)
    if (c.name == n) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("find_short_odd_cycles") {
  CHECK_THROWS_AS(find_short_odd_cycles(cycle_graph(5), 4),
                  std::invalid_argument);

  // bipartite -> empty, complete
  FindCyclesResult r = find_short_odd_cycles(cycle_graph(6), 29);
  CHECK(r.cycles.empty());
  CHECK(r.complete);

  // disjoint C5 and C7, B = 7 -> both found, complete
  Graph g = disjoint_union(cycle_graph(5), cycle_graph(7));
  FindCyclesResult r2 = find_short_odd_cycles(g, 7);
  CHECK(r2.cycles.size() == 2);
  CHECK(r2.complete);

  // two C5s sharing one edge -> overlap, incomplete
  Graph shared(8);
  for (int i = 0; i < 5; ++i) shared.add_edge(i, (i + 1) % 5);
  shared.add_edge(1, 5);
  shared.add_edge(5, 6);
  shared.add_edge(6, 7);
  shared.add_edge(7, 0);  // second C5: 0-1-5-6-7
  FindCyclesResult r3 = find_short_odd_cycles(shared, 9);
  CHECK_FALSE(r3.complete);
}

TEST_CASE("surgery on C5") {
  auto [gp, rec] = surgery(cycle_graph(5), 3);  // B = 29
  REQUIRE(rec.short_odd_cycles.size() == 1);
  CHECK(rec.bound == 29);
  CHECK(rec.discovery_complete);
  CHECK(gp.m() == 2);  // 5 edges minus 3 consecutive ones
  // the removed edges are consecutive on the cycle
  const auto& entry = rec.short_odd_cycles[0];
  CHECK(entry.removed[0] == entry.cycle.edge(0));
  CHECK(entry.removed[1] == entry.cycle.edge(1));
  CHECK(entry.removed[2] == entry.cycle.edge(2));
  CHECK_FALSE(odd_girth(gp).has_value());
}

TEST_CASE("surgery is a no-op on bipartite C4-free graphs") {
  Graph g = cycle_graph(6);
  auto [gp, rec] = surgery(g, 5);
  CHECK(gp.edges() == g.edges());
  CHECK(rec.short_odd_cycles.empty());
  CHECK(rec.removed_c4_edges.empty());
  CHECK(rec.dispersion_ok);
  CHECK(rec.notes.empty());
}

TEST_CASE("surgery removes 4-cycles after odd cycles") {
  Graph g = cycle_graph(4);
  auto [gp, rec] = surgery(g, 3);
  CHECK(rec.short_odd_cycles.empty());
  REQUIRE(rec.removed_c4_edges.size() == 1);
  CHECK(rec.removed_c4_edges[0].removed == Edge{0, 1});  // lexicographic min
  CHECK(gp.m() == 3);
  CHECK(list_four_cycles(gp).empty());
}

TEST_CASE("surgered graph edge accounting") {
  Graph g = sample_simple_regular(200, 3, 1).graph;
  auto [gp, rec] = surgery(g, 3);
  // E(g) \ E(gp) is exactly the recorded removal set
  std::set<Edge> removed;
  for (const auto& e : rec.short_odd_cycles)
    for (const Edge& x : e.removed) removed.insert(x);
  for (const auto& e : rec.removed_c4_edges) removed.insert(e.removed);
  std::set<Edge> diff;
  for (const Edge& e : g.edges())
    if (!gp.has_edge(e.u, e.v)) diff.insert(e);
  CHECK(diff == removed);
  for (const Edge& e : gp.edges()) CHECK(g.has_edge(e.u, e.v));
  // triangle- and C4-freeness of gp (girth >= 5 or forest)
  auto gi = girth(gp);
  CHECK((!gi || *gi >= 5));
}

TEST_CASE("certify_graph on bipartite C4-free input is CertifiedNice") {
  TrialArtifacts art = certify_graph(cycle_graph(6), 5);
  CHECK(art.report.verdict.kind == PipelineVerdict::Kind::CertifiedNice);
  CHECK(art.cover_built);
  for (const CheckResult& c : art.report.checks)
    CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("certify_trial validates parameters") {
  CHECK_THROWS_AS(certify_trial(10, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(certify_trial(5, 3, 0), std::invalid_argument);
}

TEST_CASE("certify_trial on K4 is coherent") {
  PipelineReport rep = certify_trial(4, 3, 0);
  // K4's triangles overlap, so discovery is incomplete and the verdict is
  // Inconclusive; the report must still be well-formed.
  CHECK(rep.verdict.kind == PipelineVerdict::Kind::Inconclusive);
  CHECK_FALSE(rep.surgery.discovery_complete);
  CHECK(find_check(rep, "sample") != nullptr);
  CHECK(find_check(rep, "surgery") != nullptr);
  nlohmann::json j = to_json(rep);
  CHECK(j["params"]["n"] == 4);
  CHECK(j["verdict"]["kind"] == "Inconclusive");
}

TEST_CASE("report JSON schema") {
  PipelineReport rep = certify_trial(20, 3, 5);
  nlohmann::json j = to_json(rep);
  for (const char* key : {"params", "surgery", "checks", "verdict"})
    CHECK(j.contains(key));
  CHECK(j["params"].contains("seed"));
  CHECK(j["surgery"].contains("short_odd_cycles"));
  CHECK(j["surgery"].contains("removed_c4_edges"));
  CHECK(j["surgery"].contains("dispersion_ok"));
}

TEST_CASE("recheck reproduces certificate checks") {
  // Use a graph whose trial certifies (bipartite C4-free), then re-run the
  // checks from the artifacts alone.
  Graph g = cycle_graph(6);
  TrialArtifacts art = certify_graph(g, 5);
  REQUIRE(art.cover_built);
  auto rechecks = recheck_certificate(g, art.cover, art.report.surgery, 5);
  for (const CheckResult& c : rechecks) {
    const CheckResult* orig = find_check(art.report, c.name);
    REQUIRE(orig != nullptr);
    CHECK(c.status == orig->status);
  }

  // Same exercise on a sampled instance, whatever its verdict: the three
  // certificate checks must be reproducible from (g, cover, record).
  Graph h = sample_simple_regular(60, 3, 3).graph;
  TrialArtifacts art2 = certify_graph(h, 3);
  if (art2.cover_built) {
    auto again = recheck_certificate(h, art2.cover, art2.report.surgery, 3);
    for (const CheckResult& c : again) {
      const CheckResult* orig = find_check(art2.report, c.name);
      REQUIRE(orig != nullptr);
      CHECK(c.status == orig->status);
    }
  }
}

TEST_CASE("experiment aggregates") {
  CHECK(experiment({}, {}, 5, 0).empty());
  auto rows = experiment({20}, {3}, 4, 0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].certified + rows[0].failed + rows[0].inconclusive == 4);
  std::ostringstream os;
  write_experiment_csv(os, rows);
  CHECK(os.str().find("n,d,trials") == 0);
  nlohmann::json j = experiment_to_json(rows);
  CHECK(j.size() == 1);
  CHECK(j[0]["trials"] == 4);
}
