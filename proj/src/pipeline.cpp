#include "normal/pipeline.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>

#include "normal/random_regular.hpp"

namespace normal {

namespace {

std::set<Edge> cycle_edge_set(const Cycle& q) {
  std::set<Edge> out;
  for (int i = 0; i < q.length(); ++i) out.insert(q.edge(i));
  return out;
}

// Smallest graph distance between the vertex sets of two cycles.
int cycle_distance(const Graph& g, const Cycle& a, const Cycle& b) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  for (int v : a.vertices) {
    dist[v] = 0;
    q.push(v);
  }
  std::vector<char> target(g.n(), 0);
  for (int v : b.vertices) target[v] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (target[u]) return dist[u];
    for (int w : g.neighbors(u))
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return -1;  // different components
}

}  // namespace

FindCyclesResult find_short_odd_cycles(const Graph& g, int B) {
  if (B < 3 || B % 2 == 0)
    throw std::invalid_argument("bound must be an odd integer >= 3");
  std::set<Cycle> found;
  std::vector<Edge> short_edges;
  for (const Edge& e : g.edges()) {
    auto r = shortest_odd_cycle_through_edge(g, e);
    if (!r || r->length > B) continue;
    short_edges.push_back(e);
    found.insert(r->realizing);
  }
  FindCyclesResult out;
  out.cycles.assign(found.begin(), found.end());

  // Completeness: pairwise vertex-disjoint cycles, and every short edge on
  // a collected cycle. Then any odd cycle <= B would have to live inside a
  // single collected cycle, so the list is exhaustive.
  std::vector<char> used(g.n(), 0);
  bool disjoint = true;
  std::set<Edge> covered;
  for (const Cycle& c : out.cycles) {
    for (int v : c.vertices) {
      if (used[v]) disjoint = false;
      used[v] = 1;
    }
    auto es = cycle_edge_set(c);
    covered.insert(es.begin(), es.end());
  }
  bool edges_ok = std::all_of(short_edges.begin(), short_edges.end(),
                              [&](const Edge& e) { return covered.count(e); });
  out.complete = disjoint && edges_ok;
  return out;
}

std::pair<Graph, SurgeryRecord> surgery(const Graph& g, int d,
                                        std::optional<int> bound) {
  SurgeryRecord rec;
  rec.bound = bound.value_or(16 * d - 19);
  FindCyclesResult fc = find_short_odd_cycles(g, rec.bound);
  rec.discovery_complete = fc.complete;
  if (!fc.complete)
    rec.notes.push_back("short odd cycle discovery incomplete or overlapping");

  std::vector<Edge> removed;
  for (const Cycle& c : fc.cycles) {
    SurgeryRecord::OddEntry entry{c, {c.edge(0), c.edge(1), c.edge(2)}};
    for (const Edge& e : entry.removed) removed.push_back(e);
    rec.short_odd_cycles.push_back(std::move(entry));
  }
  Graph g1 = remove_edges(g, removed);

  std::set<Edge> c4_removed;
  for (const Cycle& q : list_four_cycles(g1)) {
    Edge mn = q.edge(0);
    for (int i = 1; i < 4; ++i) mn = std::min(mn, q.edge(i));
    rec.removed_c4_edges.push_back({q, mn});
    c4_removed.insert(mn);
  }
  std::vector<Edge> c4_vec(c4_removed.begin(), c4_removed.end());
  Graph g2 = remove_edges(g1, c4_vec);

  // Dispersion diagnostics: vertex-disjointness plus pairwise distance
  // >= 32d between the short odd cycles.
  int k = static_cast<int>(fc.cycles.size());
  std::vector<char> used(g.n(), 0);
  for (const Cycle& c : fc.cycles)
    for (int v : c.vertices) {
      if (used[v]) rec.dispersion_ok = false;
      used[v] = 1;
    }
  for (int i = 0; i < k && rec.dispersion_ok; ++i)
    for (int j = i + 1; j < k; ++j) {
      int dist = cycle_distance(g, fc.cycles[i], fc.cycles[j]);
      if (dist != -1 && dist < 32 * d) {
        rec.dispersion_ok = false;
        break;
      }
    }
  if (!rec.dispersion_ok)
    rec.notes.push_back("dispersion condition violated");

  if (fc.complete) {
    // Exact polynomial invariants guaranteed by complete surgery.
    auto og = odd_girth(g2);
    if (og && *og <= rec.bound)
      throw std::logic_error("surgery left a short odd cycle");
    if (!list_four_cycles(g2).empty())
      throw std::logic_error("surgery left a 4-cycle");
  }
  return {std::move(g2), std::move(rec)};
}

namespace {

CheckResult alt_path_check(const Graph& g, const StarCover& c, int d,
                           long long budget) {
  AltPathResult r = max_alternating_path_bounded(g, c, 16 * d - 24, budget);
  switch (r.kind) {
    case AltPathResult::Kind::MaxLen:
      return {"alt_path_bound", CheckStatus::Pass,
              "max alternating path has " + std::to_string(r.max_len) +
                  " vertices (cap " + std::to_string(16 * d - 24) + ")"};
    case AltPathResult::Kind::Exceeds:
      return {"alt_path_bound", CheckStatus::Fail,
              "alternating path with " + std::to_string(r.witness.size()) +
                  " vertices exceeds cap"};
    default:
      return {"alt_path_bound", CheckStatus::Inconclusive,
              "path search budget exhausted"};
  }
}

CheckResult surgered_good_check(const Graph& g, const StarCover& c,
                                const SurgeryRecord& rec) {
  for (const auto& entry : rec.short_odd_cycles) {
    if (!is_cycle_of(g, entry.cycle))
      return {"surgered_cycles_good", CheckStatus::Fail,
              "recorded cycle is not a cycle of g"};
    if (good_vertices(entry.cycle, c).size() < 2)
      return {"surgered_cycles_good", CheckStatus::Fail,
              "surgered odd cycle has fewer than 2 good vertices"};
  }
  return {"surgered_cycles_good", CheckStatus::Pass,
          std::to_string(rec.short_odd_cycles.size()) + " cycles checked"};
}

CheckResult residual_check(const Graph& g, const SurgeryRecord& rec) {
  std::set<Edge> covered;
  for (const auto& entry : rec.short_odd_cycles) {
    auto es = cycle_edge_set(entry.cycle);
    covered.insert(es.begin(), es.end());
  }
  for (const Edge& e : g.edges()) {
    auto r = shortest_odd_cycle_through_edge(g, e);
    if (r && r->length <= rec.bound && !covered.count(e))
      return {"short_cycles_covered", CheckStatus::Fail,
              "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " lies on an unrecorded short odd cycle"};
  }
  return {"short_cycles_covered", CheckStatus::Pass, ""};
}

PipelineVerdict settle(const PipelineReport& r) {
  for (const std::string& note : r.surgery.notes)
    return {PipelineVerdict::Kind::Inconclusive, note};
  for (const CheckResult& c : r.checks)
    if (c.status == CheckStatus::Inconclusive)
      return {PipelineVerdict::Kind::Inconclusive, c.name + ": " + c.detail};
  for (const CheckResult& c : r.checks)
    if (c.status == CheckStatus::Fail)
      return {PipelineVerdict::Kind::Failed, c.name + ": " + c.detail};
  return {PipelineVerdict::Kind::CertifiedNice, ""};
}

}  // namespace

TrialArtifacts certify_graph(const Graph& g, int d, const Budgets& budgets,
                             std::optional<int> bound) {
  TrialArtifacts art;
  PipelineReport& rep = art.report;
  rep.n = g.n();
  rep.d = d;
  rep.bound = bound.value_or(16 * d - 19);

  auto [gp, rec] = surgery(g, d, rep.bound);
  rep.surgery = rec;
  art.gprime = std::move(gp);
  const Graph& g2 = art.gprime;
  rep.checks.push_back(
      {"surgery", CheckStatus::Pass,
       std::to_string(rec.short_odd_cycles.size()) + " short odd cycles, " +
           std::to_string(rec.removed_c4_edges.size()) + " four-cycles"});
  rep.checks.push_back({"discovery_complete",
                        rec.discovery_complete ? CheckStatus::Pass
                                               : CheckStatus::Fail,
                        ""});
  rep.checks.push_back({"dispersion",
                        rec.dispersion_ok ? CheckStatus::Pass
                                          : CheckStatus::Fail,
                        ""});

  rep.checks.push_back({"gprime_connected",
                        is_connected(g2) ? CheckStatus::Pass : CheckStatus::Fail,
                        ""});
  auto gi = girth(g2);
  rep.checks.push_back({"gprime_triangle_free",
                        (!gi || *gi > 3) ? CheckStatus::Pass : CheckStatus::Fail,
                        ""});
  rep.checks.push_back({"gprime_c4_free",
                        list_four_cycles(g2).empty() ? CheckStatus::Pass
                                                     : CheckStatus::Fail,
                        ""});
  auto og = odd_girth(g2);
  rep.checks.push_back(
      {"gprime_odd_girth", (!og || *og >= rep.bound) ? CheckStatus::Pass
                                                     : CheckStatus::Fail,
       og ? "odd girth " + std::to_string(*og) : "bipartite"});
  rep.checks.push_back({"gprime_max_degree",
                        max_degree(g2) <= d ? CheckStatus::Pass
                                            : CheckStatus::Fail,
                        ""});

  // Build the cover on the positive-degree part of g2 (the construction
  // requires no isolated vertices) and map it back to the original ids.
  std::vector<int> old_of;
  std::vector<int> new_of(g2.n(), -1);
  for (int v = 0; v < g2.n(); ++v)
    if (g2.degree(v) > 0) {
      new_of[v] = static_cast<int>(old_of.size());
      old_of.push_back(v);
    }
  Graph host(static_cast<int>(old_of.size()));
  for (const Edge& e : g2.edges()) host.add_edge(new_of[e.u], new_of[e.v]);

  try {
    auto [cov, tr] = build_star_cover(host);
    art.trace = std::move(tr);
    for (const Edge& e : cov.edges)
      art.cover.edges.insert(make_edge(old_of[e.u], old_of[e.v]));
    art.cover_built = true;
    rep.checks.push_back({"cover_build", CheckStatus::Pass,
                          std::to_string(art.cover.edges.size()) + " edges"});
  } catch (const CoverBuildError& err) {
    rep.checks.push_back({"cover_build", CheckStatus::Fail, err.what()});
  }

  if (art.cover_built) {
    CoverValidation val = validate_star_cover(g2, art.cover);
    rep.checks.push_back({"cover_valid",
                          val.ok ? CheckStatus::Pass : CheckStatus::Fail,
                          val.detail});
    bool covers_g = true;
    std::vector<int> cdeg(g.n(), 0);
    for (const Edge& e : art.cover.edges) {
      ++cdeg[e.u];
      ++cdeg[e.v];
    }
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) > 0 && cdeg[v] == 0) covers_g = false;
    rep.checks.push_back({"cover_covers_host",
                          covers_g ? CheckStatus::Pass : CheckStatus::Fail,
                          covers_g ? "" : "surgery isolated covered vertices"});
    rep.checks.push_back(alt_path_check(g, art.cover, d, budgets.alt_budget));
    rep.checks.push_back(surgered_good_check(g, art.cover, rec));
  }
  rep.checks.push_back(residual_check(g, rec));

  rep.verdict = settle(rep);
  return art;
}

PipelineReport certify_trial(int n, int d, std::uint64_t seed,
                             const Budgets& budgets, std::optional<int> bound) {
  if (d < 3) throw std::invalid_argument("d must be at least 3");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("dn must be even");
  SampleResult s = sample_simple_regular(n, d, seed, budgets.max_rejects);
  TrialArtifacts art = certify_graph(s.graph, d, budgets, bound);
  art.report.seed = seed;
  art.report.checks.insert(
      art.report.checks.begin(),
      CheckResult{"sample", CheckStatus::Pass,
                  std::to_string(s.rejects) + " rejections"});
  return std::move(art.report);
}

std::vector<CheckResult> recheck_certificate(const Graph& g,
                                             const StarCover& c,
                                             const SurgeryRecord& rec, int d,
                                             const Budgets& budgets) {
  std::vector<CheckResult> out;
  out.push_back(alt_path_check(g, c, d, budgets.alt_budget));
  out.push_back(surgered_good_check(g, c, rec));
  out.push_back(residual_check(g, rec));
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "inconclusive";
  }
}

std::string to_string(PipelineVerdict::Kind k) {
  switch (k) {
    case PipelineVerdict::Kind::CertifiedNice: return "CertifiedNice";
    case PipelineVerdict::Kind::Failed: return "Failed";
    default: return "Inconclusive";
  }
}

nlohmann::json to_json(const PipelineReport& r) {
  nlohmann::json j;
  j["params"] = {{"n", r.n}, {"d", r.d}, {"seed", r.seed}, {"bound", r.bound}};
  nlohmann::json surg;
  surg["bound"] = r.surgery.bound;
  surg["discovery_complete"] = r.surgery.discovery_complete;
  surg["dispersion_ok"] = r.surgery.dispersion_ok;
  surg["notes"] = r.surgery.notes;
  nlohmann::json odd = nlohmann::json::array();
  for (const auto& e : r.surgery.short_odd_cycles) {
    nlohmann::json rm = nlohmann::json::array();
    for (const Edge& x : e.removed) rm.push_back({x.u, x.v});
    odd.push_back({{"cycle", e.cycle.vertices}, {"removed", rm}});
  }
  surg["short_odd_cycles"] = std::move(odd);
  nlohmann::json c4 = nlohmann::json::array();
  for (const auto& e : r.surgery.removed_c4_edges)
    c4.push_back({{"cycle", e.cycle.vertices},
                  {"removed", {e.removed.u, e.removed.v}}});
  surg["removed_c4_edges"] = std::move(c4);
  j["surgery"] = std::move(surg);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["verdict"] = {{"kind", to_string(r.verdict.kind)},
                  {"reason", r.verdict.reason}};
  return j;
}

std::vector<ExperimentRow> experiment(const std::vector<int>& n_list,
                                      const std::vector<int>& d_list,
                                      int trials, std::uint64_t master_seed,
                                      const Budgets& budgets) {
  std::vector<ExperimentRow> rows;
  for (int d : d_list)
    for (int n : n_list) {
      ExperimentRow row;
      row.n = n;
      row.d = d;
      row.trials = trials;
      long long odd_total = 0, c4_total = 0;
      int dispersion_fails = 0;
      for (int t = 0; t < trials; ++t) {
        PipelineReport rep = certify_trial(n, d, master_seed + t, budgets);
        switch (rep.verdict.kind) {
          case PipelineVerdict::Kind::CertifiedNice: ++row.certified; break;
          case PipelineVerdict::Kind::Failed: ++row.failed; break;
          default: ++row.inconclusive; break;
        }
        odd_total += static_cast<long long>(rep.surgery.short_odd_cycles.size());
        c4_total += static_cast<long long>(rep.surgery.removed_c4_edges.size());
        if (!rep.surgery.dispersion_ok) ++dispersion_fails;
      }
      if (trials > 0) {
        row.mean_short_odd_cycles = static_cast<double>(odd_total) / trials;
        row.mean_four_cycles = static_cast<double>(c4_total) / trials;
        row.dispersion_fail_rate = static_cast<double>(dispersion_fails) / trials;
      }
      rows.push_back(row);
    }
  return rows;
}

void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRow>& rows) {
  out << "n,d,trials,certified,failed,inconclusive,frac_certified,"
         "frac_failed,frac_inconclusive,mean_short_odd_cycles,"
         "mean_four_cycles,dispersion_fail_rate\n";
  for (const ExperimentRow& r : rows) {
    double t = r.trials > 0 ? r.trials : 1;
    out << r.n << ',' << r.d << ',' << r.trials << ',' << r.certified << ','
        << r.failed << ',' << r.inconclusive << ',' << r.certified / t << ','
        << r.failed / t << ',' << r.inconclusive / t << ','
        << r.mean_short_odd_cycles << ',' << r.mean_four_cycles << ','
        << r.dispersion_fail_rate << '\n';
  }
}

nlohmann::json experiment_to_json(const std::vector<ExperimentRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ExperimentRow& r : rows) {
    double t = r.trials > 0 ? r.trials : 1;
    arr.push_back({{"n", r.n},
                   {"d", r.d},
                   {"trials", r.trials},
                   {"certified", r.certified},
                   {"failed", r.failed},
                   {"inconclusive", r.inconclusive},
                   {"frac_certified", r.certified / t},
                   {"frac_failed", r.failed / t},
                   {"frac_inconclusive", r.inconclusive / t},
                   {"mean_short_odd_cycles", r.mean_short_odd_cycles},
                   {"mean_four_cycles", r.mean_four_cycles},
                   {"dispersion_fail_rate", r.dispersion_fail_rate}});
  }
  return arr;
}

}  // namespace normal
