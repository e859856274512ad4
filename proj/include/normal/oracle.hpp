#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normal/graph.hpp"
#include "normal/star_cover.hpp"

namespace normal {

/// Certificate of normality: a clique cover and a stable-set cover such
/// that every clique meets every stable set.
struct NormalityWitness {
  std::vector<std::vector<int>> cliques;
  std::vector<std::vector<int>> stables;
};

struct WitnessValidation {
  bool ok = true;
  std::string detail;
};

/// Independent validator: each clique is a clique, each stable set is
/// stable, both families cover all vertices, and they cross-intersect.
WitnessValidation validate_witness(const Graph& g, const NormalityWitness& w);

/// All maximal cliques (Bron-Kerbosch with pivoting). Intended for desk
/// scale (n up to ~20 when used by the oracle below).
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct NormalVerdict {
  enum class Kind { Normal, NotNormal, Inconclusive } kind;
  std::optional<NormalityWitness> witness;  // present iff Normal
};

/// Exhaustive normality check. Both covers are drawn from maximal sets
/// only: lifting any clique (stable set) of a witness to a maximal
/// superset preserves the covering and cross-intersection properties, so
/// the restriction loses no generality. Clique covers are searched by
/// iterative deepening on cover size, branching on the lowest uncovered
/// vertex; a candidate stable set is pruned the moment it misses a
/// committed clique, and a branch is pruned when the surviving stable
/// sets no longer cover all vertices. NotNormal is exhaustive within this
/// reduction; `budget` caps search nodes and exhaustion yields
/// Inconclusive. Recommended n <= 12.
NormalVerdict is_normal_bruteforce(const Graph& g,
                                   long long budget = 5'000'000);

struct NiceCoverVerdict {
  enum class Kind { Yes, No, Inconclusive } kind;
  std::optional<StarCover> cover;  // present iff Yes
};

/// Exhaustive search over all edge subsets for a nice star cover. Odd
/// cycles are precomputed exhaustively. Throws std::invalid_argument if g
/// has a triangle. `budget` caps examined subsets. Recommended m <= 20.
NiceCoverVerdict has_nice_star_cover_bruteforce(const Graph& g,
                                                long long budget = 5'000'000);

enum class Consistency { Consistent, Violation, Inconclusive };

/// Normality of g and of its complement must agree.
Consistency check_complement_closure(const Graph& g,
                                     long long budget = 5'000'000);

/// For triangle-free g without isolated vertices: normality must agree
/// with nice-star-cover existence. Throws std::invalid_argument when the
/// hypotheses fail.
Consistency check_theorem1_equivalence(const Graph& g,
                                       long long budget = 5'000'000);

std::string witness_to_json(const NormalityWitness& w);

}  // namespace normal
