#include "normal/cycles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace normal {

Cycle canonical_cycle(std::vector<int> vs) {
  if (vs.size() < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  auto mn = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), mn, vs.end());
  if (vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
  return Cycle{std::move(vs)};
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  int L = c.length();
  if (L < 3) return false;
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int i = 0; i < L; ++i)
    if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % L])) return false;
  return true;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge seen from root r closes a walk
  // of length dist[a]+dist[b]+1 >= girth, with equality for some root on a
  // shortest cycle.
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.n()), parent(g.n());
  for (int r = 0; r < g.n(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;  // cannot improve
      for (int v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u] && u != parent[v]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<int> odd_girth(const Graph& g) {
  // Layered parity BFS from every vertex: the distance from (r, even) to
  // (r, odd) is the shortest odd closed walk through r, which contains an
  // odd cycle of at most that length; the minimum over r is the odd girth.
  int best = std::numeric_limits<int>::max();
  int n = g.n();
  std::vector<int> dist(2 * n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[2 * r] = 0;
    std::queue<int> q;
    q.push(2 * r);
    while (!q.empty()) {
      int s = q.front();
      q.pop();
      int u = s / 2, p = s % 2;
      if (dist[s] >= best) break;
      for (int v : g.neighbors(u)) {
        int t = 2 * v + (p ^ 1);
        if (dist[t] == -1) {
          dist[t] = dist[s] + 1;
          q.push(t);
        }
      }
    }
    if (dist[2 * r + 1] != -1) best = std::min(best, dist[2 * r + 1]);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

struct CycleDfs {
  const Graph& g;
  int L;
  long long budget;
  bool truncated = false;
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> on_path;

  CycleDfs(const Graph& g, int L, long long budget)
      : g(g), L(L), budget(budget), on_path(g.n(), 0) {}

  void run() {
    for (int r = 0; r < g.n() && !truncated; ++r) {
      path.assign(1, r);
      on_path[r] = 1;
      extend(r);
      on_path[r] = 0;
    }
  }

  // Interior vertices exceed the root; a cycle is reported when the path
  // closes back to the root with the reflection fixed by path[1] < back().
  void extend(int r) {
    int u = path.back();
    for (int v : g.neighbors(u)) {
      if (truncated) return;
      if (v == r && path.size() >= 3) {
        if (path[1] < path.back()) out.push_back(Cycle{path});
        continue;
      }
      if (v <= r || on_path[v]) continue;
      if (static_cast<int>(path.size()) >= L) continue;
      if (--budget < 0) {
        truncated = true;
        return;
      }
      path.push_back(v);
      on_path[v] = 1;
      extend(r);
      on_path[v] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

CycleList enumerate_cycles_up_to(const Graph& g, int L, long long budget) {
  if (L < 3) throw std::invalid_argument("cycle length cap must be >= 3");
  CycleDfs dfs(g, L, budget);
  dfs.run();
  return CycleList{std::move(dfs.out), dfs.truncated};
}

std::vector<Cycle> list_four_cycles(const Graph& g) {
  auto all = enumerate_cycles_up_to(g, 4, std::numeric_limits<long long>::max());
  std::vector<Cycle> out;
  for (Cycle& c : all.cycles)
    if (c.length() == 4) out.push_back(std::move(c));
  return out;
}

namespace {

// Splits a closed odd walk (v0..v_{L-1}, back to v0) at repeated vertices
// until a simple odd cycle remains.
std::vector<int> extract_odd_cycle(std::vector<int> walk) {
  for (;;) {
    std::unordered_map<int, int> pos;
    int i = 0, j = -1, first = -1;
    for (; i < static_cast<int>(walk.size()); ++i) {
      auto [it, fresh] = pos.emplace(walk[i], i);
      if (!fresh) {
        first = it->second;
        j = i;
        break;
      }
    }
    if (j == -1) return walk;  // simple
    std::vector<int> inner(walk.begin() + first, walk.begin() + j);
    if (inner.size() % 2 == 1) {
      walk = std::move(inner);
    } else {
      walk.erase(walk.begin() + first, walk.begin() + j);
    }
  }
}

}  // namespace

std::optional<OddWalkThroughEdge> shortest_odd_cycle_through_edge(
    const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("edge not present in graph");
  int n = g.n();
  std::vector<int> dist(2 * n, -1), par(2 * n, -1);
  int src = 2 * e.u;  // (u, even)
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    int x = s / 2, p = s % 2;
    for (int y : g.neighbors(x)) {
      if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
      int t = 2 * y + (p ^ 1);
      if (dist[t] == -1) {
        dist[t] = dist[s] + 1;
        par[t] = s;
        q.push(t);
      }
    }
  }
  int target = 2 * e.v;  // (v, even)
  if (dist[target] == -1) return std::nullopt;

  std::vector<int> walk;  // u ... v, even length, then edge closes it
  for (int s = target; s != -1; s = par[s]) walk.push_back(s / 2);
  std::reverse(walk.begin(), walk.end());
  std::vector<int> cyc = extract_odd_cycle(std::move(walk));
  return OddWalkThroughEdge{dist[target] + 1, canonical_cycle(std::move(cyc))};
}

namespace {

// Connected-induced-subgraph enumeration (ESU): each connected vertex set of
// the target size is visited exactly once.
struct Esu {
  const Graph& g;
  int target;
  std::function<void(const std::vector<int>&)> report;
  std::vector<int> sub;
  std::vector<char> in_sub, in_ext_ever;

  Esu(const Graph& g, int target) : g(g), target(target),
      in_sub(g.n(), 0), in_ext_ever(g.n(), 0) {}

  void run() {
    for (int r = 0; r < g.n(); ++r) {
      sub.assign(1, r);
      in_sub.assign(g.n(), 0);
      in_ext_ever.assign(g.n(), 0);
      in_sub[r] = 1;
      in_ext_ever[r] = 1;
      std::vector<int> ext;
      for (int w : g.neighbors(r))
        if (w > r) {
          ext.push_back(w);
          in_ext_ever[w] = 1;
        }
      extend(r, ext);
    }
  }

  void extend(int r, std::vector<int> ext) {
    if (static_cast<int>(sub.size()) == target) {
      report(sub);
      return;
    }
    while (!ext.empty()) {
      int w = ext.back();
      ext.pop_back();
      std::vector<int> next = ext;
      std::vector<int> added;
      for (int u : g.neighbors(w))
        if (u > r && !in_sub[u] && !in_ext_ever[u]) {
          next.push_back(u);
          in_ext_ever[u] = 1;
          added.push_back(u);
        }
      sub.push_back(w);
      in_sub[w] = 1;
      extend(r, std::move(next));
      in_sub[w] = 0;
      sub.pop_back();
      for (int u : added) in_ext_ever[u] = 0;
    }
  }
};

// G[S] is an induced |S|-cycle iff every vertex has exactly 2 neighbors in S
// (connectivity is guaranteed by the enumeration).
bool induced_is_cycle(const Graph& g, const std::vector<int>& s) {
  for (int v : s) {
    int d = 0;
    for (int u : s)
      if (u != v && g.has_edge(u, v)) ++d;
    if (d != 2) return false;
  }
  return true;
}

// Complement of G[S] is a connected 2-regular graph on 7 vertices, i.e. C7.
bool induced_is_co_c7(const Graph& g, const std::vector<int>& s) {
  Graph h(static_cast<int>(s.size()));
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (!g.has_edge(s[i], s[j])) h.add_edge(i, j);
  for (int i = 0; i < 7; ++i)
    if (h.degree(i) != 2) return false;
  return is_connected(h);
}

}  // namespace

std::vector<ForbiddenSubgraph> find_induced_forbidden(const Graph& g) {
  std::vector<ForbiddenSubgraph> out;
  auto add = [&](ForbiddenKind k, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    out.push_back(ForbiddenSubgraph{k, std::move(s)});
  };

  Esu five(g, 5);
  five.report = [&](const std::vector<int>& s) {
    if (induced_is_cycle(g, s)) add(ForbiddenKind::C5, s);
  };
  five.run();

  Esu seven(g, 7);
  seven.report = [&](const std::vector<int>& s) {
    if (induced_is_cycle(g, s)) add(ForbiddenKind::C7, s);
    if (induced_is_co_c7(g, s)) add(ForbiddenKind::CoC7, s);
  };
  seven.run();

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace normal
