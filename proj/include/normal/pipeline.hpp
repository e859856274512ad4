#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "normal/cycles.hpp"
#include "normal/graph.hpp"
#include "normal/star_cover.hpp"

namespace normal {

/// What the surgery removed and why.
struct SurgeryRecord {
  struct OddEntry {
    Cycle cycle;
    std::array<Edge, 3> removed;  // consecutive on the cycle
  };
  struct C4Entry {
    Cycle cycle;
    Edge removed;  // lexicographically smallest edge of the 4-cycle
  };
  std::vector<OddEntry> short_odd_cycles;
  std::vector<C4Entry> removed_c4_edges;
  int bound = 0;                 // odd-cycle length bound B
  bool discovery_complete = true;
  bool dispersion_ok = true;     // disjoint and pairwise distance >= 32d
  std::vector<std::string> notes;  // anomalies; non-empty forces Inconclusive
};

struct FindCyclesResult {
  std::vector<Cycle> cycles;
  bool complete = false;
};

/// All odd cycles of length <= B discoverable through per-edge shortest
/// odd cycles (polynomial). The complete flag certifies that the list is
/// ALL odd cycles of length <= B: it requires the collected cycles to be
/// pairwise vertex-disjoint and every edge whose shortest odd cycle is
/// <= B to lie on a collected cycle. B must be odd and >= 3.
FindCyclesResult find_short_odd_cycles(const Graph& g, int B);

/// Removes three consecutive edges (starting at the canonical first
/// vertex) from each short odd cycle, then the lexicographically smallest
/// edge of each 4-cycle of the intermediate graph. Default B = 16d-19.
std::pair<Graph, SurgeryRecord> surgery(const Graph& g, int d,
                                        std::optional<int> bound = std::nullopt);

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct PipelineVerdict {
  enum class Kind { CertifiedNice, Failed, Inconclusive } kind;
  std::string reason;
};

struct PipelineReport {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  SurgeryRecord surgery;
  std::vector<CheckResult> checks;
  PipelineVerdict verdict{PipelineVerdict::Kind::Inconclusive, "not run"};
};

struct Budgets {
  long long alt_budget = 50'000'000;  // alternating-path DFS extensions
  int max_rejects = 10000;
};

/// certify_trial with the sampling step factored out, so a fixed graph can
/// be certified and its artifacts (surgered graph, cover) inspected.
struct TrialArtifacts {
  PipelineReport report;
  Graph gprime;
  bool cover_built = false;
  StarCover cover;  // on the vertex ids of g
  CoverTrace trace; // on the stripped, relabeled host; kept for diagnostics
};

TrialArtifacts certify_graph(const Graph& g, int d, const Budgets& budgets = {},
                             std::optional<int> bound = std::nullopt);

/// One full trial: sample a d-regular graph, surger it, build the cover,
/// and verify the niceness certificate for the ORIGINAL graph. All checks
/// are named in the report; CertifiedNice requires every check to pass
/// and no anomaly. Requires dn even and d >= 3.
PipelineReport certify_trial(int n, int d, std::uint64_t seed,
                             const Budgets& budgets = {},
                             std::optional<int> bound = std::nullopt);

/// Re-runs the certificate checks (alternating-path bound, good vertices
/// on surgered cycles, residual short-cycle coverage) from serialized
/// artifacts, independently of the construction.
std::vector<CheckResult> recheck_certificate(const Graph& g,
                                             const StarCover& c,
                                             const SurgeryRecord& rec, int d,
                                             const Budgets& budgets = {});

nlohmann::json to_json(const PipelineReport& r);
std::string to_string(CheckStatus s);
std::string to_string(PipelineVerdict::Kind k);

struct ExperimentRow {
  int n = 0;
  int d = 0;
  int trials = 0;
  int certified = 0;
  int failed = 0;
  int inconclusive = 0;
  double mean_short_odd_cycles = 0.0;
  double mean_four_cycles = 0.0;
  double dispersion_fail_rate = 0.0;
};

/// One row per (n, d); trial t uses seed master_seed + t.
std::vector<ExperimentRow> experiment(const std::vector<int>& n_list,
                                      const std::vector<int>& d_list,
                                      int trials, std::uint64_t master_seed,
                                      const Budgets& budgets = {});

void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRow>& rows);
nlohmann::json experiment_to_json(const std::vector<ExperimentRow>& rows);

}  // namespace normal
