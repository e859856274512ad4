#include "normal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "normal/cycles.hpp"

namespace normal {

namespace {

std::vector<int> bits_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

struct BronKerbosch {
  const Graph& g;
  std::vector<std::uint64_t> nbr;
  std::vector<std::uint64_t> out;

  explicit BronKerbosch(const Graph& g) : g(g), nbr(g.n(), 0) {
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.neighbors(v)) nbr[v] |= std::uint64_t(1) << w;
  }

  void run() {
    std::uint64_t all = g.n() == 64 ? ~std::uint64_t(0)
                                    : (std::uint64_t(1) << g.n()) - 1;
    expand(0, all, 0);
  }

  void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    // Pivot: vertex of P∪X with the most neighbors in P.
    int pivot = -1, best = -1;
    for (std::uint64_t px = p | x; px;) {
      int u = std::countr_zero(px);
      px &= px - 1;
      int cnt = std::popcount(p & nbr[u]);
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    std::uint64_t cand = p & ~nbr[pivot];
    while (cand) {
      int v = std::countr_zero(cand);
      std::uint64_t bit = std::uint64_t(1) << v;
      cand &= ~bit;
      expand(r | bit, p & nbr[v], x & nbr[v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

std::vector<std::uint64_t> maximal_clique_masks(const Graph& g) {
  if (g.n() == 0) return {};
  if (g.n() > 64) throw std::invalid_argument("oracle limited to n <= 64");
  BronKerbosch bk(g);
  bk.run();
  std::sort(bk.out.begin(), bk.out.end());
  return bk.out;
}

// Exhaustive clique-cover search over maximal cliques with iterative
// deepening; `stables` are maximal stable sets as masks.
struct NormalSearch {
  int n;
  std::uint64_t all;
  const std::vector<std::uint64_t>& cliques;
  const std::vector<std::uint64_t>& stables;
  long long budget;
  bool exhausted = false;
  bool depth_cut = false;
  std::vector<int> chosen;            // clique indices
  std::vector<int> solution_cliques;  // set on success
  std::vector<std::uint64_t> solution_stables;

  NormalSearch(int n, const std::vector<std::uint64_t>& cliques,
               const std::vector<std::uint64_t>& stables, long long budget)
      : n(n),
        all(n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1),
        cliques(cliques), stables(stables), budget(budget) {}

  bool dfs(std::uint64_t covered, const std::vector<std::uint64_t>& compat,
           int depth_left) {
    if (--budget < 0) {
      exhausted = true;
      return false;
    }
    if (covered == all) {
      std::uint64_t u = 0;
      for (std::uint64_t s : compat) u |= s;
      if (u != all) return false;
      solution_cliques = chosen;
      solution_stables = compat;
      return true;
    }
    if (depth_left == 0) {
      depth_cut = true;
      return false;
    }
    int v = std::countr_zero(~covered & all);
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
      if (!(cliques[i] >> v & 1)) continue;
      // Keep only stable sets meeting the new clique; prune when the
      // survivors cannot cover all vertices.
      std::vector<std::uint64_t> next;
      std::uint64_t u = 0;
      for (std::uint64_t s : compat)
        if (s & cliques[i]) {
          next.push_back(s);
          u |= s;
        }
      if (u != all) continue;
      chosen.push_back(i);
      bool hit = dfs(covered | cliques[i], next, depth_left - 1);
      chosen.pop_back();
      if (hit || exhausted) return hit;
    }
    return false;
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t m : maximal_clique_masks(g)) out.push_back(bits_of(m));
  return out;
}

WitnessValidation validate_witness(const Graph& g,
                                   const NormalityWitness& w) {
  auto covered = std::vector<char>(g.n(), 0);
  for (const auto& q : w.cliques) {
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] < 0 || q[i] >= g.n()) return {false, "vertex out of range"};
      covered[q[i]] = 1;
      for (size_t j = i + 1; j < q.size(); ++j)
        if (!g.has_edge(q[i], q[j])) return {false, "clique is not a clique"};
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v]) return {false, "cliques do not cover all vertices"};

  std::fill(covered.begin(), covered.end(), 0);
  for (const auto& s : w.stables) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= g.n()) return {false, "vertex out of range"};
      covered[s[i]] = 1;
      for (size_t j = i + 1; j < s.size(); ++j)
        if (g.has_edge(s[i], s[j])) return {false, "stable set is not stable"};
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v]) return {false, "stable sets do not cover all vertices"};

  for (const auto& q : w.cliques)
    for (const auto& s : w.stables) {
      bool meet = false;
      for (int a : q) {
        if (std::find(s.begin(), s.end(), a) != s.end()) {
          meet = true;
          break;
        }
      }
      if (!meet) return {false, "a clique and a stable set are disjoint"};
    }
  return {};
}

NormalVerdict is_normal_bruteforce(const Graph& g, long long budget) {
  if (g.n() == 0)
    return {NormalVerdict::Kind::Normal, NormalityWitness{}};
  auto cliques = maximal_clique_masks(g);
  auto stables = maximal_clique_masks(complement(g));

  for (int depth = 1; depth <= g.n(); ++depth) {
    NormalSearch search(g.n(), cliques, stables, budget);
    if (search.dfs(0, stables, depth)) {
      NormalityWitness w;
      for (int i : search.solution_cliques) w.cliques.push_back(bits_of(cliques[i]));
      for (std::uint64_t s : search.solution_stables) w.stables.push_back(bits_of(s));
      return {NormalVerdict::Kind::Normal, std::move(w)};
    }
    if (search.exhausted)
      return {NormalVerdict::Kind::Inconclusive, std::nullopt};
    budget = search.budget;
    if (!search.depth_cut) break;  // whole space explored below this depth
  }
  return {NormalVerdict::Kind::NotNormal, std::nullopt};
}

NiceCoverVerdict has_nice_star_cover_bruteforce(const Graph& g,
                                                long long budget) {
  if (girth(g) == 3) throw std::invalid_argument("graph has a triangle");
  std::vector<Edge> edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > 62) throw std::invalid_argument("too many edges for subset search");

  std::vector<Cycle> odd;
  if (g.n() >= 3) {
    CycleList all = enumerate_cycles_up_to(
        g, g.n(), std::numeric_limits<long long>::max());
    for (Cycle& c : all.cycles)
      if (c.length() % 2 == 1) odd.push_back(std::move(c));
  }

  std::uint64_t need = 0;  // positive-degree vertices as a mask (n <= 62)
  if (g.n() > 62) throw std::invalid_argument("too many vertices");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) need |= std::uint64_t(1) << v;
  std::vector<std::uint64_t> emask(m);
  for (int i = 0; i < m; ++i)
    emask[i] = (std::uint64_t(1) << edges[i].u) | (std::uint64_t(1) << edges[i].v);

  std::vector<int> cdeg(g.n());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    if (--budget < 0) return {NiceCoverVerdict::Kind::Inconclusive, std::nullopt};
    std::uint64_t touched = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) touched |= emask[i];
    if (touched != need) continue;

    StarCover c;
    std::fill(cdeg.begin(), cdeg.end(), 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) {
        c.edges.insert(edges[i]);
        ++cdeg[edges[i].u];
        ++cdeg[edges[i].v];
      }
    bool star = true;
    for (const Edge& e : c.edges)
      if (cdeg[e.u] > 1 && cdeg[e.v] > 1) {
        star = false;
        break;
      }
    if (!star) continue;

    bool nice = true;
    for (const Cycle& q : odd)
      if (good_vertices(q, c).size() < 2) {
        nice = false;
        break;
      }
    if (nice) return {NiceCoverVerdict::Kind::Yes, std::move(c)};
  }
  return {NiceCoverVerdict::Kind::No, std::nullopt};
}

Consistency check_complement_closure(const Graph& g, long long budget) {
  NormalVerdict a = is_normal_bruteforce(g, budget);
  NormalVerdict b = is_normal_bruteforce(complement(g), budget);
  if (a.kind == NormalVerdict::Kind::Inconclusive ||
      b.kind == NormalVerdict::Kind::Inconclusive)
    return Consistency::Inconclusive;
  return a.kind == b.kind ? Consistency::Consistent : Consistency::Violation;
}

Consistency check_theorem1_equivalence(const Graph& g, long long budget) {
  if (girth(g) == 3) throw std::invalid_argument("graph has a triangle");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("graph has an isolated vertex");
  NormalVerdict nv = is_normal_bruteforce(g, budget);
  NiceCoverVerdict sc = has_nice_star_cover_bruteforce(g, budget);
  if (nv.kind == NormalVerdict::Kind::Inconclusive ||
      sc.kind == NiceCoverVerdict::Kind::Inconclusive)
    return Consistency::Inconclusive;
  bool normal = nv.kind == NormalVerdict::Kind::Normal;
  bool nice = sc.kind == NiceCoverVerdict::Kind::Yes;
  return normal == nice ? Consistency::Consistent : Consistency::Violation;
}

std::string witness_to_json(const NormalityWitness& w) {
  nlohmann::json j;
  j["cliques"] = w.cliques;
  j["stables"] = w.stables;
  return j.dump();
}

}  // namespace normal
