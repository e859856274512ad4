#pragma once

#include <optional>
#include <vector>

#include "normal/graph.hpp"

namespace normal {

/// Cycle in canonical form: starts at its minimum vertex, and the second
/// element is smaller than the last (fixes rotation and reflection).
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Edge edge(int i) const {
    int L = length();
    return make_edge(vertices[i % L], vertices[(i + 1) % L]);
  }
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Rotates/reflects a vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<int> vs);

/// True if consecutive vertices (and last-first) are adjacent in g and all
/// vertices are distinct.
bool is_cycle_of(const Graph& g, const Cycle& c);

/// Girth and odd girth; std::nullopt stands for infinity (forests resp.
/// bipartite graphs).
std::optional<int> girth(const Graph& g);
std::optional<int> odd_girth(const Graph& g);

struct CycleList {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

/// Every cycle of length <= L, each once in canonical form. Rooted DFS over
/// paths whose interior vertices exceed the root; `budget` caps the number
/// of path extensions, and exhaustion sets the truncated flag.
CycleList enumerate_cycles_up_to(const Graph& g, int L, long long budget);

std::vector<Cycle> list_four_cycles(const Graph& g);

/// Length of the shortest odd closed walk through e (layered parity search
/// on g minus e, plus the edge), together with a simple odd cycle of at most
/// that length extracted from the walk. nullopt if no odd walk exists.
struct OddWalkThroughEdge {
  int length = 0;
  Cycle realizing;  // simple odd cycle, length <= walk length
};
std::optional<OddWalkThroughEdge> shortest_odd_cycle_through_edge(
    const Graph& g, Edge e);

enum class ForbiddenKind { C5, C7, CoC7 };

struct ForbiddenSubgraph {
  ForbiddenKind kind;
  std::vector<int> vertices;  // sorted
  friend auto operator<=>(const ForbiddenSubgraph&,
                          const ForbiddenSubgraph&) = default;
};

/// All induced C5, C7 and complement-of-C7 occurrences, each vertex set
/// once. Intended for graphs up to a few hundred vertices.
std::vector<ForbiddenSubgraph> find_induced_forbidden(const Graph& g);

}  // namespace normal
