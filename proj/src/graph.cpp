#include "normal/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace normal {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (u < 0 || v < 0 || u >= n() || v >= n())
    throw std::invalid_argument("vertex out of range");
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;  // set semantics
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n() || u == v) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = (&a == &adj_[u]) ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges, int* missing) {
  std::vector<Edge> drop(edges.begin(), edges.end());
  for (Edge& e : drop) e = make_edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());

  int skipped = 0;
  for (const Edge& e : drop)
    if (!g.has_edge(e.u, e.v)) ++skipped;
  if (missing) *missing = skipped;

  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (u < v && !std::binary_search(drop.begin(), drop.end(), Edge{u, v}))
        out.add_edge(u, v);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.n();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw std::runtime_error("edge list: empty input");
  std::istringstream hs(header);
  int n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("edge list: bad header, expected \"n m\"");

  Graph g(n);
  for (int i = 0; i < m; ++i) {
    std::string ln;
    if (!next_data_line(ln))
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    std::istringstream es(ln);
    int u = 0, v = 0;
    if (!(es >> u >> v))
      throw std::runtime_error("edge list: bad edge line: " + ln);
    if (u >= v)
      throw std::runtime_error("edge list: edges must satisfy u < v: " + ln);
    if (g.has_edge(u, v))
      throw std::runtime_error("edge list: duplicate edge: " + ln);
    g.add_edge(u, v);  // range-checks
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_edge_list(out, g);
}

}  // namespace normal
