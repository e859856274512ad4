#include "normal/random_regular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace normal {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

Configuration sample_configuration(int n, int d, Rng& rng) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("dn must be even");
  std::vector<int> rem(static_cast<size_t>(n) * d);
  std::iota(rem.begin(), rem.end(), 0);
  Configuration cfg{n, d, {}};
  cfg.pairs.reserve(rem.size() / 2);
  while (!rem.empty()) {
    size_t j = 1 + uniform_below(rng, rem.size() - 1);
    cfg.pairs.emplace_back(rem[0], rem[j]);
    rem.erase(rem.begin() + j);
    rem.erase(rem.begin());
  }
  return cfg;
}

int MultiGraph::degree(int v) const {
  int deg = 0;
  for (auto [a, b] : edges) {
    if (a == v) ++deg;
    if (b == v) ++deg;
  }
  return deg;
}

MultiGraph project(const Configuration& p) {
  MultiGraph m{p.n, {}};
  m.edges.reserve(p.pairs.size());
  for (auto [x, y] : p.pairs) {
    int i = x / p.d, j = y / p.d;
    m.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool is_simple(const MultiGraph& m) {
  for (auto [a, b] : m.edges)
    if (a == b) return false;
  return std::adjacent_find(m.edges.begin(), m.edges.end()) == m.edges.end();
}

SampleResult sample_simple_regular(int n, int d, std::uint64_t seed,
                                   int max_rejects) {
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("dn must be even");
  if (d >= n) throw std::invalid_argument("d must be less than n");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  Rng rng(seed);
  int rejects = 0;
  for (;;) {
    MultiGraph m = project(sample_configuration(n, d, rng));
    if (is_simple(m)) {
      Graph g(n);
      for (auto [a, b] : m.edges) g.add_edge(a, b);
      return {std::move(g), rejects};
    }
    if (++rejects > max_rejects)
      throw std::runtime_error("rejection limit reached after " +
                               std::to_string(rejects) + " non-simple draws");
  }
}

}  // namespace normal
