#include "polycx/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace polycx {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

void Graph::add_edge(int u, int w) {
  if (u == w) return;
  auto insert = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[static_cast<std::size_t>(u)], w);
  insert(adj_[static_cast<std::size_t>(w)], u);
}

bool Graph::has_edge(int u, int w) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), w);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int w : neighbors(u))
      if (u < w) out.emplace_back(u, w);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.size()), -1);
  int next = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<int> queue{s};
    label[static_cast<std::size_t>(s)] = next;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] >= 0) continue;
        label[static_cast<std::size_t>(w)] = next;
        queue.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int w : g.neighbors(keep[i]))
      if (int j = local[static_cast<std::size_t>(w)]; j >= 0) out.add_edge(static_cast<int>(i), j);
  return out;
}

bool induced_connected(const Graph& g, const std::vector<bool>& mark) {
  std::vector<int> keep;
  for (int v = 0; v < g.size(); ++v)
    if (mark[static_cast<std::size_t>(v)]) keep.push_back(v);
  return is_connected(induced_subgraph(g, keep));
}

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return false;
  auto sorted_degrees = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (sorted_degrees(a) != sorted_degrees(b)) return false;

  // Map a's vertices in BFS order so each new vertex has a mapped neighbour when possible.
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : a.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
    }
  }

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || a.degree(v) != b.degree(c)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int u = order[k];
        ok = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], c);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (extend(depth + 1)) return true;
      used[static_cast<std::size_t>(c)] = false;
    }
    return false;
  };
  return extend(0);
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
    }
  return g;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

}  // namespace polycx
