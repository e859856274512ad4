#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "normal/cycles.hpp"
#include "normal/graph.hpp"

namespace normal {

/// Edge set whose components are stars and which touches every vertex of
/// positive degree in the host graph.
struct StarCover {
  std::set<Edge> edges;

  bool contains(Edge e) const { return edges.count(make_edge(e.u, e.v)) > 0; }
  bool contains(int u, int v) const { return contains(Edge{u, v}); }
};

enum class VertexRole { None, FCenter, FLeaf, UPrime, UDoublePrime, V2, PathCycle };

struct VertexLabel {
  VertexRole role = VertexRole::None;
  int phase = 0;  // s for FCenter/FLeaf/UPrime/UDoublePrime, 0 otherwise
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

enum class EdgeStep { StarEdge, UEdge, V2Edge, PathCycleEdge, RewriteEdge };

struct EdgeTag {
  EdgeStep step = EdgeStep::StarEdge;
  int phase = 0;          // s where applicable, 0 for PathCycleEdge
  bool fallback = false;  // V2 attachment that had no U_s'' neighbor
  friend bool operator==(const EdgeTag&, const EdgeTag&) = default;
};

/// Per-vertex and per-edge provenance of the construction phases.
struct CoverTrace {
  int k = 0;  // maximum degree of the host at construction time
  std::vector<VertexLabel> vertex_label;
  std::map<Edge, EdgeTag> edge_step;
  std::vector<int> fallback_v2;  // V2 vertices attached via the fallback rule
};

/// Construction defect or precondition violation; never silently ignored.
struct CoverBuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Star cover construction: peel maximum-degree stars phase by phase, sweep
/// up degree-1 remnants, attach isolated leftovers, and cover the final
/// paths and cycles with 2-stars. Deterministic; throws CoverBuildError on
/// isolated vertices or if an internal phase invariant fails.
std::pair<StarCover, CoverTrace> build_star_cover(const Graph& g);

struct CoverValidation {
  bool ok = true;
  std::string detail;
};

/// Independent validator: cover edges exist in g, components are stars,
/// every positive-degree vertex is covered.
CoverValidation validate_star_cover(const Graph& g, const StarCover& c);

/// Vertices of q whose two incident cycle edges are both in c or both out.
std::vector<int> good_vertices(const Cycle& q, const StarCover& c);

/// Number of maximal runs of consecutive cover edges along q bounded by
/// non-cover edges (0 when the cycle is all-in or all-out), so that
/// |good_vertices| == |q| - 2h.
int count_components_on_cycle(const Cycle& q, const StarCover& c);

struct NiceVerdict {
  enum class Kind { Nice, NotNice, Inconclusive } kind;
  std::optional<Cycle> witness;  // odd cycle with <= 1 good vertex
  std::string detail;
};

/// Checks every odd cycle up to L directly, then certifies all longer odd
/// cycles through the alternating-path length bound when L reaches the
/// threshold 16k-20 (or the enumeration is already complete at L >= n).
NiceVerdict is_nice_exhaustive(const Graph& g, const StarCover& c, int L,
                               long long budget);

struct AltPathResult {
  enum class Kind { MaxLen, Exceeds, Inconclusive } kind;
  int max_len = 0;           // attained maximum (MaxLen)
  std::vector<int> witness;  // path with cap+1 vertices (Exceeds)
};

/// Depth-limited DFS over paths whose consecutive edges alternate cover
/// membership. cap >= 2 is the vertex-count cap.
AltPathResult max_alternating_path_bounded(const Graph& g, const StarCover& c,
                                           int cap, long long budget);

enum class EdgeClassKind { T1, T2, T3, Other };

struct EdgeClass {
  EdgeClassKind kind = EdgeClassKind::Other;
  int phase = 0;
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// T1(s): star edges of F_s; T2(s): U_s''-U_s' edges; T3(s): U_s''-V2
/// attachments. Step-(6), rewrite and fallback edges classify as Other.
EdgeClass classify_cover_edge(Edge e, const CoverTrace& t);

struct LemmaResult {
  enum class Kind { Holds, Counterexample, Inconclusive } kind;
  std::vector<int> path;  // counterexample path when found
};

/// Checks the phase-propagation property: along every 10-vertex alternating
/// path starting with a T1/T2/T3(s) cover edge, one of the cover edges at
/// positions 2-3, 4-5, 6-7, 8-9 belongs to a strictly earlier phase t > s.
LemmaResult verify_lemma_propagation(const Graph& g, const StarCover& c,
                                     const CoverTrace& t, long long budget);

std::string to_string(const VertexLabel& l);
std::string to_string(const EdgeTag& t);

/// Cover/trace text+JSON serialization used by the CLI.
void write_cover_file(const std::string& path, const Graph& g,
                      const StarCover& c);
StarCover read_cover_file(const std::string& path);
void write_trace_file(const std::string& path, const CoverTrace& t);
CoverTrace read_trace_file(const std::string& path, int n);

}  // namespace normal
