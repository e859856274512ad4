#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "normal/graph.hpp"

namespace normal {

/// All randomness in this library flows through std::mt19937_64, whose
/// output sequence is fixed by the standard, so seeded runs are identical
/// across platforms.
using Rng = std::mt19937_64;

/// Uniform draw from {0, ..., bound-1} by rejection (the standard
/// distribution objects are not portable across implementations).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Perfect matching on the half-edge set W = {0..n-1} x {0..d-1};
/// half-edge (i, k) is encoded as i*d + k.
struct Configuration {
  int n = 0;
  int d = 0;
  std::vector<std::pair<int, int>> pairs;
};

/// Multigraph on n vertices; loops stored as (v, v), multiplicities by
/// repetition. Edge list kept sorted.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int degree(int v) const;  // loops count twice
};

/// Uniformly random configuration: repeatedly pair the smallest unmatched
/// half-edge with a uniformly chosen other unmatched half-edge. Requires
/// dn even, n >= 1, d >= 1.
Configuration sample_configuration(int n, int d, Rng& rng);

/// Projection (i,k)-(j,l) -> edge {i,j}.
MultiGraph project(const Configuration& p);

/// No loops and no repeated edges.
bool is_simple(const MultiGraph& m);

struct SampleResult {
  Graph graph;
  int rejects = 0;  // non-simple configurations discarded
};

/// Rejection-samples configurations until one projects to a simple graph;
/// the result is uniform over d-regular graphs on n vertices. Requires dn
/// even and d < n; throws std::runtime_error after max_rejects rejections.
SampleResult sample_simple_regular(int n, int d, std::uint64_t seed,
                                   int max_rejects = 10000);

}  // namespace normal
