#include "normal/star_cover.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace normal {

namespace {

// Mutable residual graph used by the construction phases.
struct Residual {
  std::vector<std::set<int>> adj;
  std::vector<char> alive;

  explicit Residual(const Graph& g) : adj(g.n()), alive(g.n(), 1) {
    for (int v = 0; v < g.n(); ++v)
      adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  int deg(int v) const { return static_cast<int>(adj[v].size()); }
  void remove_vertex(int v) {
    for (int w : adj[v]) adj[w].erase(v);
    adj[v].clear();
    alive[v] = 0;
  }
};

struct Builder {
  const Graph& g;
  Residual res;
  StarCover cover;
  CoverTrace trace;
  std::vector<int> cover_deg;

  explicit Builder(const Graph& g)
      : g(g), res(g), cover_deg(g.n(), 0) {
    trace.vertex_label.assign(g.n(), VertexLabel{});
  }

  void add_cover_edge(int u, int v, EdgeTag tag) {
    Edge e = make_edge(u, v);
    if (cover.edges.insert(e).second) {
      ++cover_deg[u];
      ++cover_deg[v];
    }
    trace.edge_step[e] = tag;
  }

  void drop_cover_edge(int u, int v) {
    Edge e = make_edge(u, v);
    if (cover.edges.erase(e)) {
      --cover_deg[u];
      --cover_deg[v];
    }
    trace.edge_step.erase(e);
  }

  void set_label(int v, VertexRole role, int phase) {
    trace.vertex_label[v] = VertexLabel{role, phase};
  }

  // Phase step (2): inclusion-maximal greedy set of vertex-disjoint s-stars
  // whose removal isolates no previously non-isolated vertex.
  void pick_stars(int s) {
    for (int v = 0; v < g.n(); ++v) {
      if (!res.alive[v] || res.deg(v) < s) continue;
      std::vector<int> eligible(res.adj[v].begin(), res.adj[v].end());
      std::set<int> excluded;
      for (;;) {
        std::vector<int> leaves;
        for (int w : eligible) {
          if (excluded.count(w)) continue;
          leaves.push_back(w);
          if (static_cast<int>(leaves.size()) == s) break;
        }
        if (static_cast<int>(leaves.size()) < s) break;  // skip this center

        std::set<int> star(leaves.begin(), leaves.end());
        star.insert(v);
        int bad = would_isolate(star);
        if (bad == -1) {
          commit_star(v, leaves, s);
          break;
        }
        // Keep the smallest leaf adjacent to the threatened vertex alive.
        int save = -1;
        for (int w : leaves)
          if (res.adj[bad].count(w)) {
            save = w;
            break;
          }
        if (save == -1) break;  // threatened vertex hangs off the center only
        excluded.insert(save);
      }
    }
  }

  // Smallest vertex outside `star` whose entire residual neighborhood lies
  // inside it (and which is not isolated already), or -1.
  int would_isolate(const std::set<int>& star) const {
    int best = -1;
    for (int u : star)
      for (int w : res.adj[u]) {
        if (star.count(w)) continue;
        if (best != -1 && w >= best) continue;
        bool trapped = true;
        for (int x : res.adj[w])
          if (!star.count(x)) {
            trapped = false;
            break;
          }
        if (trapped) best = w;
      }
    return best;
  }

  void commit_star(int center, const std::vector<int>& leaves, int s) {
    set_label(center, VertexRole::FCenter, s);
    for (int l : leaves) {
      set_label(l, VertexRole::FLeaf, s);
      add_cover_edge(center, l, EdgeTag{EdgeStep::StarEdge, s, false});
    }
    for (int l : leaves) res.remove_vertex(l);
    res.remove_vertex(center);
  }

  // Phase step (3): sweep degree-1 vertices hanging off degree-s vertices.
  void sweep_degree_one(int s) {
    std::vector<std::pair<int, int>> pairs;  // (U', its U'' neighbor)
    for (int v = 0; v < g.n(); ++v) {
      if (!res.alive[v] || res.deg(v) != 1) continue;
      int w = *res.adj[v].begin();
      if (res.deg(w) == s) pairs.emplace_back(v, w);
    }
    std::set<int> removed;
    for (auto [v, w] : pairs) {
      set_label(v, VertexRole::UPrime, s);
      set_label(w, VertexRole::UDoublePrime, s);
      add_cover_edge(v, w, EdgeTag{EdgeStep::UEdge, s, false});
      removed.insert(v);
      removed.insert(w);
    }
    for (int v : removed) res.remove_vertex(v);
  }

  // The no-isolation constraint can strand a degree-s vertex whose every
  // s-leaf choice isolates somebody, and that has no degree-1 neighbor (so
  // the step-(3) sweep misses it too). Retire such a vertex as a standalone
  // cover edge with one neighbor, preferring a partner whose removal
  // isolates nobody; that keeps the phase invariant without manufacturing
  // isolated vertices.
  void force_remaining_pairs(int s) {
    for (;;) {
      int v = -1;
      for (int u = 0; u < g.n(); ++u)
        if (res.alive[u] && res.deg(u) >= s) {
          v = u;
          break;
        }
      if (v == -1) break;
      int partner = -1, best_stranded = g.n() + 1;
      for (int l : res.adj[v]) {
        int stranded = 0;
        for (int w = 0; w < g.n(); ++w) {
          if (!res.alive[w] || w == v || w == l || res.deg(w) == 0) continue;
          bool stuck = true;
          for (int x : res.adj[w])
            if (x != v && x != l) {
              stuck = false;
              break;
            }
          if (stuck) ++stranded;
        }
        if (stranded < best_stranded) {
          partner = l;
          best_stranded = stranded;
        }
        if (stranded == 0) break;
      }
      set_label(v, VertexRole::PathCycle, 0);
      set_label(partner, VertexRole::PathCycle, 0);
      add_cover_edge(v, partner, EdgeTag{EdgeStep::PathCycleEdge, 0, false});
      res.remove_vertex(v);
      res.remove_vertex(partner);
      sweep_degree_one(s);
    }
  }

  void assert_degree_drop(int s) {
    for (int v = 0; v < g.n(); ++v)
      if (res.alive[v] && res.deg(v) > s - 1)
        throw CoverBuildError("construction defect: degree " +
                              std::to_string(res.deg(v)) + " survives phase " +
                              std::to_string(s));
  }

  // Step (5): attach vertices isolated in G_2 to a previously removed
  // neighbor, preferring U_s'' with s as small as possible.
  void attach_isolated() {
    for (int v = 0; v < g.n(); ++v) {
      if (!res.alive[v] || res.deg(v) != 0) continue;
      // Precondition guarantees positive degree in g.
      set_label(v, VertexRole::V2, 0);
      if (attach_to_u2(v)) continue;
      trace.fallback_v2.push_back(v);
      if (attach_to_role(v, VertexRole::FCenter)) continue;
      if (attach_to_role(v, VertexRole::PathCycle)) continue;
      if (attach_to_role(v, VertexRole::FLeaf)) continue;
      throw CoverBuildError("construction defect: no attachment for vertex " +
                            std::to_string(v));
    }
  }

  bool attach_to_u2(int v) {
    int best = -1, best_phase = 0;
    for (int w : g.neighbors(v)) {
      const VertexLabel& l = trace.vertex_label[w];
      if (l.role != VertexRole::UDoublePrime) continue;
      if (best == -1 || l.phase < best_phase) {
        best = w;
        best_phase = l.phase;
      }
    }
    if (best == -1) return false;
    add_cover_edge(v, best, EdgeTag{EdgeStep::V2Edge, best_phase, false});
    return true;
  }

  // Fallback attachment to a removed neighbor carrying the given role,
  // preferring the largest phase, then the smallest index. Star components
  // are preserved case by case: a vertex with two or more cover edges is a
  // center and simply gains a leaf; a leaf whose center can spare the edge
  // is detached first so the new pair stands alone; otherwise the leaf keeps
  // its single cover edge and becomes the center of a 2-star.
  bool attach_to_role(int v, VertexRole role) {
    int best = -1, best_phase = -1;
    for (int w : g.neighbors(v)) {
      const VertexLabel& l = trace.vertex_label[w];
      if (l.role != role) continue;
      if (l.phase > best_phase || (l.phase == best_phase && w < best)) {
        best = w;
        best_phase = l.phase;
      }
    }
    if (best == -1) return false;
    if (cover_deg[best] == 1) {
      int partner = -1;
      for (int w : g.neighbors(best))
        if (cover.contains(make_edge(best, w))) {
          partner = w;
          break;
        }
      if (partner != -1 && cover_deg[partner] >= 2)
        drop_cover_edge(best, partner);
    }
    add_cover_edge(v, best, EdgeTag{EdgeStep::V2Edge, best_phase, true});
    return true;
  }

  // Cover partner of a V2 vertex, if it is a U'' vertex: (partner, phase).
  std::optional<std::pair<int, int>> u2_attachment(int v) const {
    for (int w : g.neighbors(v)) {
      Edge e = make_edge(v, w);
      if (!cover.contains(e)) continue;
      const VertexLabel& l = trace.vertex_label[w];
      if (l.role == VertexRole::UDoublePrime) return std::make_pair(w, l.phase);
    }
    return std::nullopt;
  }

  // Forbidden pattern: three same-phase U''-V2 attachments chained into one
  // alternating path  w1-v1 / v1-w2 / w2-v2 / v2-w3 / w3-v3.  Returns the
  // middle V2 vertex, or -1.
  int find_chain_middle() const {
    struct Att { int v, w, s; };
    std::vector<Att> atts;
    for (int v = 0; v < g.n(); ++v) {
      if (trace.vertex_label[v].role != VertexRole::V2) continue;
      if (auto a = u2_attachment(v)) atts.push_back({v, a->first, a->second});
    }
    for (const Att& b : atts)
      for (const Att& a : atts) {
        if (a.v == b.v || a.s != b.s || a.w == b.w) continue;
        if (!g.has_edge(a.v, b.w)) continue;
        for (const Att& c : atts) {
          if (c.v == a.v || c.v == b.v || c.s != b.s) continue;
          if (c.w == a.w || c.w == b.w) continue;
          if (g.has_edge(b.v, c.w)) return b.v;
        }
      }
    return -1;
  }

  // Chain rewrite: move the middle attachment to another eligible
  // U'' neighbor until no chain remains.
  void rewrite_chains() {
    std::map<int, std::set<int>> tried;
    int guard = 10 * g.n() + 100;
    for (;;) {
      int mid = find_chain_middle();
      if (mid == -1) break;
      if (--guard < 0)
        throw CoverBuildError("construction defect: chain rewrite loop");
      auto cur = u2_attachment(mid);
      assert(cur.has_value());
      tried[mid].insert(cur->first);
      int best = -1, best_phase = 0;
      for (int w : g.neighbors(mid)) {
        const VertexLabel& l = trace.vertex_label[w];
        if (l.role != VertexRole::UDoublePrime) continue;
        if (tried[mid].count(w)) continue;
        if (best == -1 || l.phase < best_phase) {
          best = w;
          best_phase = l.phase;
        }
      }
      if (best == -1)
        throw CoverBuildError(
            "construction defect: no alternative attachment for vertex " +
            std::to_string(mid));
      drop_cover_edge(mid, cur->first);
      add_cover_edge(mid, best, EdgeTag{EdgeStep::RewriteEdge, best_phase, false});
    }
  }

  // Step (6): cover the remaining paths and cycles with 2-stars plus at
  // most two single edges each.
  void cover_paths_and_cycles() {
    std::vector<char> done(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
      if (!res.alive[v] || res.deg(v) == 0 || done[v]) continue;
      if (res.deg(v) > 2)
        throw CoverBuildError("construction defect: G_2 has degree > 2");
      // Collect the component.
      std::vector<int> comp;
      std::vector<int> stack{v};
      std::set<int> seen{v};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : res.adj[u])
          if (seen.insert(w).second) stack.push_back(w);
      }
      bool cycle = true;
      for (int u : comp)
        if (res.deg(u) != 2) cycle = false;

      std::vector<int> seq = order_component(comp, cycle);
      cover_sequence(seq);
      for (int u : comp) done[u] = 1;
    }
  }

  std::vector<int> order_component(const std::vector<int>& comp, bool cycle) {
    int start;
    if (cycle) {
      start = *std::min_element(comp.begin(), comp.end());
    } else {
      start = -1;
      for (int u : comp)
        if (res.deg(u) == 1 && (start == -1 || u < start)) start = u;
      if (start == -1)
        throw CoverBuildError("construction defect: path without endpoint");
    }
    std::vector<int> seq{start};
    int prev = -1, cur = start;
    while (static_cast<int>(seq.size()) < static_cast<int>(comp.size())) {
      int next = -1;
      for (int w : res.adj[cur])
        if (w != prev && (next == -1 || w < next)) next = w;
      if (next == -1)
        throw CoverBuildError("construction defect: broken component walk");
      seq.push_back(next);
      prev = cur;
      cur = next;
    }
    return seq;
  }

  void cover_sequence(const std::vector<int>& seq) {
    int p = static_cast<int>(seq.size());
    if (p < 2)
      throw CoverBuildError("construction defect: trivial component in G''");
    std::vector<int> blocks;
    int q = p / 3, r = p % 3;
    if (r == 0) {
      blocks.assign(q, 3);
    } else if (r == 1) {
      blocks.assign(q - 1, 3);
      blocks.push_back(2);
      blocks.push_back(2);
    } else {
      blocks.assign(q, 3);
      blocks.push_back(2);
    }
    int at = 0;
    for (int b : blocks) {
      if (b == 3) {
        add_cover_edge(seq[at], seq[at + 1], EdgeTag{EdgeStep::PathCycleEdge, 0, false});
        add_cover_edge(seq[at + 1], seq[at + 2], EdgeTag{EdgeStep::PathCycleEdge, 0, false});
      } else {
        add_cover_edge(seq[at], seq[at + 1], EdgeTag{EdgeStep::PathCycleEdge, 0, false});
      }
      at += b;
    }
    for (int u : seq) set_label(u, VertexRole::PathCycle, 0);
  }

  std::pair<StarCover, CoverTrace> build() {
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) == 0)
        throw CoverBuildError("isolated vertex " + std::to_string(v));

    int k = max_degree(g);
    trace.k = k;
    for (int s = k; s >= 3; --s) {
      pick_stars(s);
      sweep_degree_one(s);
      force_remaining_pairs(s);
      assert_degree_drop(s);
    }
    attach_isolated();
    rewrite_chains();
    if (find_chain_middle() != -1)
      throw CoverBuildError("construction defect: chain pattern survives rewrite");
    cover_paths_and_cycles();

    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) > 0 && trace.vertex_label[v].role == VertexRole::None)
        throw CoverBuildError("construction defect: unlabeled vertex " +
                              std::to_string(v));
    CoverValidation val = validate_star_cover(g, cover);
    if (!val.ok)
      throw CoverBuildError("construction defect: " + val.detail);
    return {std::move(cover), std::move(trace)};
  }
};

}  // namespace

std::pair<StarCover, CoverTrace> build_star_cover(const Graph& g) {
  return Builder(g).build();
}

CoverValidation validate_star_cover(const Graph& g, const StarCover& c) {
  std::vector<int> cdeg(g.n(), 0);
  for (const Edge& e : c.edges) {
    if (e.u < 0 || e.v >= g.n() || !g.has_edge(e.u, e.v))
      return {false, "cover edge not in graph"};
    ++cdeg[e.u];
    ++cdeg[e.v];
  }
  // Components are stars iff every cover edge has an endpoint of cover
  // degree 1.
  for (const Edge& e : c.edges)
    if (cdeg[e.u] > 1 && cdeg[e.v] > 1)
      return {false, "cover component is not a star at edge " +
                         std::to_string(e.u) + "-" + std::to_string(e.v)};
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && cdeg[v] == 0)
      return {false, "vertex " + std::to_string(v) + " uncovered"};
  return {};
}

std::vector<int> good_vertices(const Cycle& q, const StarCover& c) {
  int L = q.length();
  std::vector<int> out;
  for (int i = 0; i < L; ++i) {
    bool before = c.contains(q.edge((i + L - 1) % L));
    bool after = c.contains(q.edge(i));
    if (before == after) out.push_back(q.vertices[i]);
  }
  return out;
}

int count_components_on_cycle(const Cycle& q, const StarCover& c) {
  int L = q.length();
  int runs = 0;
  bool any_out = false;
  for (int i = 0; i < L; ++i) {
    bool prev = c.contains(q.edge((i + L - 1) % L));
    bool cur = c.contains(q.edge(i));
    if (!prev && cur) ++runs;
    if (!cur) any_out = true;
  }
  return any_out ? runs : 0;
}

NiceVerdict is_nice_exhaustive(const Graph& g, const StarCover& c, int L,
                               long long budget) {
  CycleList found = enumerate_cycles_up_to(g, L, budget);
  for (const Cycle& q : found.cycles) {
    if (q.length() % 2 == 0) continue;
    if (good_vertices(q, c).size() <= 1)
      return {NiceVerdict::Kind::NotNice, q, "odd cycle with <= 1 good vertex"};
  }
  if (found.truncated)
    return {NiceVerdict::Kind::Inconclusive, std::nullopt,
            "cycle enumeration budget exhausted"};
  if (is_bipartite(g))
    return {NiceVerdict::Kind::Nice, std::nullopt, "no odd cycles"};
  if (L >= g.n())
    return {NiceVerdict::Kind::Nice, std::nullopt, "complete enumeration"};

  int k = max_degree(g);
  if (k >= 3 && L >= 16 * k - 20) {
    AltPathResult r = max_alternating_path_bounded(g, c, 16 * k - 24, budget);
    switch (r.kind) {
      case AltPathResult::Kind::MaxLen:
        return {NiceVerdict::Kind::Nice, std::nullopt,
                "longer odd cycles certified by alternating-path bound"};
      case AltPathResult::Kind::Exceeds:
        return {NiceVerdict::Kind::Inconclusive, std::nullopt,
                "alternating-path bound exceeded; longer cycles uncertified"};
      case AltPathResult::Kind::Inconclusive:
        return {NiceVerdict::Kind::Inconclusive, std::nullopt,
                "alternating-path budget exhausted"};
    }
  }
  return {NiceVerdict::Kind::Inconclusive, std::nullopt,
          "length cap below certification threshold"};
}

namespace {

struct AltDfs {
  const Graph& g;
  const StarCover& c;
  int cap;
  long long budget;
  bool exhausted = false;
  int best = 0;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<int> witness;

  AltDfs(const Graph& g, const StarCover& c, int cap, long long budget)
      : g(g), c(c), cap(cap), budget(budget), on_path(g.n(), 0) {}

  bool run() {  // true when a cap+1 path was found
    if (g.n() > 0) best = 1;
    for (int v = 0; v < g.n(); ++v) {
      for (int w : g.neighbors(v)) {
        path = {v, w};
        on_path[v] = on_path[w] = 1;
        bool hit = extend(c.contains(v, w));
        on_path[v] = on_path[w] = 0;
        if (hit || exhausted) return hit;
      }
    }
    return false;
  }

  bool extend(bool last_in_cover) {
    best = std::max(best, static_cast<int>(path.size()));
    if (static_cast<int>(path.size()) >= cap + 1) {
      witness = path;
      return true;
    }
    int u = path.back();
    for (int x : g.neighbors(u)) {
      if (on_path[x]) continue;
      if (c.contains(u, x) == last_in_cover) continue;
      if (--budget < 0) {
        exhausted = true;
        return false;
      }
      path.push_back(x);
      on_path[x] = 1;
      bool hit = extend(!last_in_cover);
      on_path[x] = 0;
      path.pop_back();
      if (hit || exhausted) return hit;
    }
    return false;
  }
};

}  // namespace

AltPathResult max_alternating_path_bounded(const Graph& g, const StarCover& c,
                                           int cap, long long budget) {
  if (cap < 2) throw std::invalid_argument("cap must be >= 2");
  AltDfs dfs(g, c, cap, budget);
  if (dfs.run()) return {AltPathResult::Kind::Exceeds, 0, dfs.witness};
  if (dfs.exhausted) return {AltPathResult::Kind::Inconclusive, 0, {}};
  return {AltPathResult::Kind::MaxLen, dfs.best, {}};
}

EdgeClass classify_cover_edge(Edge e, const CoverTrace& t) {
  auto it = t.edge_step.find(make_edge(e.u, e.v));
  if (it == t.edge_step.end()) return {EdgeClassKind::Other, 0};
  const EdgeTag& tag = it->second;
  if (tag.fallback) return {EdgeClassKind::Other, 0};
  switch (tag.step) {
    case EdgeStep::StarEdge:
      return {EdgeClassKind::T1, tag.phase};
    case EdgeStep::UEdge:
      return {EdgeClassKind::T2, tag.phase};
    case EdgeStep::V2Edge:
      return {EdgeClassKind::T3, tag.phase};
    default:
      return {EdgeClassKind::Other, 0};
  }
}

namespace {

// Directed label-based T classification of a cover edge a->b along a path:
// T1(s) enters an F_s center, T2(s) runs U_s''->U_s', T3(s) runs
// U_s''->V2.  Fallback attachments never qualify (their target carries an
// F label, not U'').
std::optional<int> directed_phase(const CoverTrace& t, int a, int b) {
  const VertexLabel& la = t.vertex_label[a];
  const VertexLabel& lb = t.vertex_label[b];
  if (lb.role == VertexRole::FCenter && la.role == VertexRole::FLeaf &&
      la.phase == lb.phase)
    return lb.phase;
  if (la.role == VertexRole::UDoublePrime && lb.role == VertexRole::UPrime &&
      la.phase == lb.phase)
    return la.phase;
  if (la.role == VertexRole::UDoublePrime && lb.role == VertexRole::V2)
    return la.phase;
  return std::nullopt;
}

struct LemmaDfs {
  const Graph& g;
  const StarCover& c;
  const CoverTrace& t;
  long long budget;
  bool exhausted = false;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<int> counterexample;
  int start_phase = 0;

  LemmaDfs(const Graph& g, const StarCover& c, const CoverTrace& t,
           long long budget)
      : g(g), c(c), t(t), budget(budget), on_path(g.n(), 0) {}

  bool run() {  // true when a counterexample was found
    for (int a = 0; a < g.n(); ++a) {
      for (int b : g.neighbors(a)) {
        if (!c.contains(a, b)) continue;
        auto s = directed_phase(t, a, b);
        if (!s) continue;
        start_phase = *s;
        path = {a, b};
        on_path[a] = on_path[b] = 1;
        bool hit = extend(true);
        on_path[a] = on_path[b] = 0;
        if (hit || exhausted) return hit;
      }
    }
    return false;
  }

  bool extend(bool last_in_cover) {
    if (path.size() == 10) {
      for (int j : {2, 4, 6, 8}) {
        auto ph = directed_phase(t, path[j], path[j + 1]);
        if (ph && *ph > start_phase) return false;  // propagated
      }
      counterexample = path;
      return true;
    }
    int u = path.back();
    for (int x : g.neighbors(u)) {
      if (on_path[x]) continue;
      if (c.contains(u, x) == last_in_cover) continue;
      if (--budget < 0) {
        exhausted = true;
        return false;
      }
      path.push_back(x);
      on_path[x] = 1;
      bool hit = extend(!last_in_cover);
      on_path[x] = 0;
      path.pop_back();
      if (hit || exhausted) return hit;
    }
    return false;
  }
};

}  // namespace

LemmaResult verify_lemma_propagation(const Graph& g, const StarCover& c,
                                     const CoverTrace& t, long long budget) {
  LemmaDfs dfs(g, c, t, budget);
  if (dfs.run()) return {LemmaResult::Kind::Counterexample, dfs.counterexample};
  if (dfs.exhausted) return {LemmaResult::Kind::Inconclusive, {}};
  return {LemmaResult::Kind::Holds, {}};
}

std::string to_string(const VertexLabel& l) {
  switch (l.role) {
    case VertexRole::None: return "None";
    case VertexRole::FCenter: return "FCenter(" + std::to_string(l.phase) + ")";
    case VertexRole::FLeaf: return "FLeaf(" + std::to_string(l.phase) + ")";
    case VertexRole::UPrime: return "UPrime(" + std::to_string(l.phase) + ")";
    case VertexRole::UDoublePrime:
      return "UDoublePrime(" + std::to_string(l.phase) + ")";
    case VertexRole::V2: return "V2";
    case VertexRole::PathCycle: return "PathCycle";
  }
  return "None";
}

std::string to_string(const EdgeTag& t) {
  std::string base;
  switch (t.step) {
    case EdgeStep::StarEdge: base = "StarEdge(" + std::to_string(t.phase) + ")"; break;
    case EdgeStep::UEdge: base = "UEdge(" + std::to_string(t.phase) + ")"; break;
    case EdgeStep::V2Edge: base = "V2Edge(" + std::to_string(t.phase) + ")"; break;
    case EdgeStep::PathCycleEdge: base = "PathCycleEdge"; break;
    case EdgeStep::RewriteEdge: base = "RewriteEdge(" + std::to_string(t.phase) + ")"; break;
  }
  if (t.fallback) base += "!fallback";
  return base;
}

namespace {

VertexLabel parse_vertex_label(const std::string& s) {
  auto phase_of = [&](size_t at) {
    return std::stoi(s.substr(at, s.find(')') - at));
  };
  if (s.rfind("FCenter(", 0) == 0) return {VertexRole::FCenter, phase_of(8)};
  if (s.rfind("FLeaf(", 0) == 0) return {VertexRole::FLeaf, phase_of(6)};
  if (s.rfind("UPrime(", 0) == 0) return {VertexRole::UPrime, phase_of(7)};
  if (s.rfind("UDoublePrime(", 0) == 0)
    return {VertexRole::UDoublePrime, phase_of(13)};
  if (s == "V2") return {VertexRole::V2, 0};
  if (s == "PathCycle") return {VertexRole::PathCycle, 0};
  return {};
}

EdgeTag parse_edge_tag(std::string s) {
  EdgeTag t;
  if (auto pos = s.find("!fallback"); pos != std::string::npos) {
    t.fallback = true;
    s.resize(pos);
  }
  auto phase_of = [&](size_t at) {
    return std::stoi(s.substr(at, s.find(')') - at));
  };
  if (s.rfind("StarEdge(", 0) == 0) {
    t.step = EdgeStep::StarEdge;
    t.phase = phase_of(9);
  } else if (s.rfind("UEdge(", 0) == 0) {
    t.step = EdgeStep::UEdge;
    t.phase = phase_of(6);
  } else if (s.rfind("V2Edge(", 0) == 0) {
    t.step = EdgeStep::V2Edge;
    t.phase = phase_of(7);
  } else if (s.rfind("RewriteEdge(", 0) == 0) {
    t.step = EdgeStep::RewriteEdge;
    t.phase = phase_of(12);
  } else {
    t.step = EdgeStep::PathCycleEdge;
    t.phase = 0;
  }
  return t;
}

}  // namespace

void write_cover_file(const std::string& path, const Graph& g,
                      const StarCover& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "cover k=" << max_degree(g) << '\n';
  for (const Edge& e : c.edges) out << e.u << ' ' << e.v << '\n';
}

StarCover read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("cover k=", 0) != 0)
    throw std::runtime_error("bad cover header in " + path);
  StarCover c;
  int u, v;
  while (in >> u >> v) c.edges.insert(make_edge(u, v));
  return c;
}

void write_trace_file(const std::string& path, const CoverTrace& t) {
  nlohmann::json j;
  j["k"] = t.k;
  nlohmann::json verts = nlohmann::json::object();
  for (size_t v = 0; v < t.vertex_label.size(); ++v)
    if (t.vertex_label[v].role != VertexRole::None)
      verts[std::to_string(v)] = to_string(t.vertex_label[v]);
  j["vertices"] = std::move(verts);
  nlohmann::json edges = nlohmann::json::object();
  for (const auto& [e, tag] : t.edge_step)
    edges[std::to_string(e.u) + " " + std::to_string(e.v)] = to_string(tag);
  j["edges"] = std::move(edges);
  j["fallback_v2"] = t.fallback_v2;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << '\n';
}

CoverTrace read_trace_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  CoverTrace t;
  t.k = j.at("k").get<int>();
  t.vertex_label.assign(n, VertexLabel{});
  for (const auto& [key, val] : j.at("vertices").items()) {
    int v = std::stoi(key);
    if (v < 0 || v >= n) throw std::runtime_error("trace vertex out of range");
    t.vertex_label[v] = parse_vertex_label(val.get<std::string>());
  }
  for (const auto& [key, val] : j.at("edges").items()) {
    std::istringstream ks(key);
    int u, v;
    ks >> u >> v;
    t.edge_step[make_edge(u, v)] = parse_edge_tag(val.get<std::string>());
  }
  t.fallback_v2 = j.value("fallback_v2", std::vector<int>{});
  return t;
}

}  // namespace normal
