#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace polycx {

/// Small undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;

  /// Adds {u, w}; loops and duplicates are ignored.
  void add_edge(int u, int w);
  bool has_edge(int u, int w) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
};

constexpr int kUnreachable = std::numeric_limits<int>::max();

std::vector<int> bfs_distances(const Graph& g, int source);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Component label per vertex, labels dense in order of smallest member.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced on `keep` (vertex i of the result is keep[i]).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
/// Whether the subgraph induced on the marked vertices is connected (empty counts as connected).
bool induced_connected(const Graph& g, const std::vector<bool>& mark);

/// Backtracking isomorphism test for small graphs.
bool isomorphic(const Graph& a, const Graph& b);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);

/// Union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint32_t> rank_;
};

}  // namespace polycx
