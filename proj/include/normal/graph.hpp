#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace normal {

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// No self-loops, no parallel edges. Immutable once built; all algorithms
/// in this library treat it as read-only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  /// Inserts the edge if absent. Throws std::invalid_argument on
  /// self-loops or out-of-range endpoints.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

int max_degree(const Graph& g);

Graph complement(const Graph& g);

/// Returns g minus the given edges. Absent edges are skipped; if
/// `missing` is non-null it receives how many were skipped.
Graph remove_edges(const Graph& g, std::span<const Edge> edges,
                   int* missing = nullptr);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Edge-list text format: "n m" on the first line, then m lines "u v"
/// with 0 <= u < v < n. Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace normal
