#include "polycx/curvature.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

namespace polycx {

namespace {

using Mask = std::uint64_t;

bool has(const ArcSet& s, ArcId a) { return std::binary_search(s.begin(), s.end(), a); }
Mask bit(int i) { return Mask{1} << i; }

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

FatGraph dual_fat_graph(const CombTriangulation& t, const ArcSet& keep) {
  const auto d = regions_keeping(t, keep);
  FatGraph g;
  g.vertex_count = static_cast<int>(d.regions.size());
  g.rotation.resize(d.regions.size());
  std::vector<int> fat_of_edge(at(t.edge_count()), -1);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!has(keep, t.arc(e))) continue;
    const auto& slots = t.edge_slots(e);
    fat_of_edge[at(e)] = static_cast<int>(g.edges.size());
    g.edges.push_back({t.arc(e), d.region_of(slots[0]), d.region_of(slots[1])});
  }
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    for (const auto& cycle : d.regions[r].boundary_cycles)
      for (const auto& side : cycle)
        if (!is_boundary_code(side.code)) g.rotation[r].push_back(fat_of_edge[at(side.code)]);
  return g;
}

FatGraph dual_fat_graph(const Enumeration& en, int v) {
  return dual_fat_graph(en.ctx->node(en.witness[at(v)]).tri, en.complex.vertices[at(v)].arcs);
}

bool vertex_certified(const PolComplex& cx, int v) {
  return cx.mode == Mode::full || cx.distance[at(v)] + cx.complexity <= cx.radius;
}

bool edge_certified(const PolComplex& cx, int e) {
  if (cx.mode == Mode::full) return true;
  const auto& edge = cx.edges[at(e)];
  const int d = std::max(cx.distance[at(edge.v)], cx.distance[at(edge.w)]);
  return d + cx.complexity + 2 <= cx.radius;
}

std::vector<PositiveCurvatureSystem> find_pcs_cubewise(const PolComplex& cx, int v) {
  if (!vertex_certified(cx, v)) throw FrontierVertex("vertex " + std::to_string(v) + " is too close to the frontier");
  const Graph& g = cx.graph();
  const auto& edges = cx.incident(v);
  const int m = static_cast<int>(edges.size());
  if (m > 64) throw Error("vertex degree above 64");
  std::vector<PositiveCurvatureSystem> out;

  // corner[S]: the vertex of the cube spanned by S opposite v.
  std::map<Mask, int> corner{{0, v}};
  std::vector<Mask> level;
  for (int i = 0; i < m; ++i) {
    corner[bit(i)] = cx.edges[at(edges[at(i)])].other(v);
    level.push_back(bit(i));
  }
  const int cap = std::min(m, std::max(cx.complexity, 0));
  for (int k = 2; k <= cap && !level.empty(); ++k) {
    std::vector<Mask> next;
    for (Mask x : level) {
      const int highest = 63 - __builtin_clzll(x);
      for (int i = highest + 1; i < m; ++i) {
        const Mask y = x | bit(i);
        std::vector<int> faces;
        bool spanned = true;
        for (int j = 0; j < m && spanned; ++j) {
          if (!((y >> j) & 1U)) continue;
          auto it = corner.find(y & ~bit(j));
          if (it == corner.end()) spanned = false;
          else faces.push_back(it->second);
        }
        if (!spanned) continue;
        // Completions: common neighbours of all faces other than the corner two steps back.
        const int lo = 63 - __builtin_clzll(y & ~bit(i));
        const int back = corner.at(y & ~bit(i) & ~bit(lo));
        std::vector<int> candidates;
        for (int c : g.neighbors(faces.front())) {
          if (c == back) continue;
          bool all = true;
          for (std::size_t f = 1; f < faces.size() && all; ++f) all = g.has_edge(c, faces[f]);
          if (all) candidates.push_back(c);
        }
        if (candidates.size() > 1) throw Error("ambiguous cube completion at vertex " + std::to_string(v));
        if (candidates.size() == 1) {
          corner[y] = candidates.front();
          next.push_back(y);
        } else if (k >= 3) {
          PositiveCurvatureSystem pcs;
          pcs.base = v;
          for (int j = 0; j < m; ++j) {
            if (!((y >> j) & 1U)) continue;
            const auto& e = cx.edges[at(edges[at(j)])];
            pcs.edges.push_back(edges[at(j)]);
            pcs.arcs.push_back(e.arc);
            pcs.downward = pcs.downward && e.upper == v;
          }
          std::sort(pcs.arcs.begin(), pcs.arcs.end());
          out.push_back(std::move(pcs));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<PositiveCurvatureSystem> find_pcs_curvewise(const Enumeration& en, int v) {
  const FatGraph g = dual_fat_graph(en, v);
  std::vector<std::vector<std::pair<int, int>>> adj(at(g.vertex_count));  // (edge, far end)
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& fe = g.edges[e];
    if (fe.u == fe.w) continue;
    adj[at(fe.u)].push_back({static_cast<int>(e), fe.w});
    adj[at(fe.w)].push_back({static_cast<int>(e), fe.u});
  }
  std::set<std::vector<int>> seen;
  std::vector<PositiveCurvatureSystem> out;
  std::vector<int> path_regions, path_edges;
  std::vector<bool> on_path(at(g.vertex_count), false);

  // Simple cycles through `start` using only larger regions otherwise.
  auto search = [&](auto&& self, int start, int u) -> void {
    for (auto [e, w] : adj[at(u)]) {
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (w == start && path_edges.size() >= 2) {
        std::vector<int> key = path_edges;
        key.push_back(e);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        PositiveCurvatureSystem pcs;
        pcs.base = v;
        pcs.cycle_regions = path_regions;
        for (int pe : path_edges) pcs.cycle_arcs.push_back(g.edges[at(pe)].arc);
        pcs.cycle_arcs.push_back(g.edges[at(e)].arc);
        pcs.arcs = pcs.cycle_arcs;
        std::sort(pcs.arcs.begin(), pcs.arcs.end());
        out.push_back(std::move(pcs));
        continue;
      }
      if (w <= start || on_path[at(w)]) continue;
      on_path[at(w)] = true;
      path_regions.push_back(w);
      path_edges.push_back(e);
      self(self, start, w);
      path_edges.pop_back();
      path_regions.pop_back();
      on_path[at(w)] = false;
    }
  };
  for (int s = 0; s < g.vertex_count; ++s) {
    on_path[at(s)] = true;
    path_regions = {s};
    search(search, s, s);
    on_path[at(s)] = false;
  }
  return out;
}

OrientationSolver::OrientationSolver(const PolComplex& cx)
    : cx_(cx),
      squares_at_edge_(cx.edges.size()),
      squares_(squares(cx)),
      pcs_edges_(at(cx.vertex_count())),
      known_(at(cx.vertex_count()), 0) {
  for (std::size_t s = 0; s < squares_.size(); ++s)
    for (int e : squares_[s].edges) squares_at_edge_[at(e)].push_back(static_cast<int>(s));
}

namespace {

// Edge ids lying in some system at v, with the smallest such system's size.
std::vector<std::pair<int, int>> system_edges(const PolComplex& cx, int v) {
  std::map<int, int> size_of;
  for (const auto& pcs : find_pcs_cubewise(cx, v))
    for (int e : pcs.edges) {
      const int k = static_cast<int>(pcs.edges.size());
      auto [it, fresh] = size_of.try_emplace(e, k);
      if (!fresh) it->second = std::min(it->second, k);
    }
  return {size_of.begin(), size_of.end()};
}

}  // namespace

void OrientationSolver::precompute(Execution execution) {
  const int n = cx_.vertex_count();
#pragma omp parallel for schedule(dynamic, 4) if (execution == Execution::parallel)
  for (int v = 0; v < n; ++v) {
    if (!vertex_certified(cx_, v)) continue;
    pcs_edges_[at(v)] = system_edges(cx_, v);
    known_[at(v)] = 1;
  }
}

int OrientationSolver::system_size(int v, int e) {
  if (!known_[at(v)]) {
    pcs_edges_[at(v)] = system_edges(cx_, v);
    known_[at(v)] = 1;
  }
  const auto& list = pcs_edges_[at(v)];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, int>{e, 0});
  return it != list.end() && it->first == e ? it->second : 0;
}

Orientation OrientationSolver::recover(int e) {
  if (!edge_certified(cx_, e)) throw FrontierVertex("edge " + std::to_string(e) + " is too close to the frontier");
  const auto& edge = cx_.edges[at(e)];
  const int x = edge.v;
  const int y = edge.w;
  // States: a parallel edge and the image of x on it.
  std::set<std::pair<int, int>> visited{{e, x}};
  std::vector<std::pair<int, int>> layer{{e, x}};
  for (int steps = 0; steps <= 2; ++steps) {
    int x_reach = 0, y_reach = 0;  // smallest system size seen on each side
    for (auto [f, fx] : layer) {
      const int fy = cx_.edges[at(f)].other(fx);
      if (const int k = system_size(fx, f); k > 0) x_reach = x_reach ? std::min(x_reach, k) : k;
      if (const int k = system_size(fy, f); k > 0) y_reach = y_reach ? std::min(y_reach, k) : k;
    }
    if (x_reach && y_reach) throw Undecidable("conflicting curvature evidence at edge " + std::to_string(e));
    if (x_reach || y_reach) {
      Orientation o;
      o.upper = x_reach ? x : y;
      o.via = steps == 0 ? Evidence::curvature : Evidence::parallel_curvature;
      o.squares = steps;
      o.radius = steps + std::max(x_reach, y_reach);
      return o;
    }
    if (steps == 2) break;
    std::vector<std::pair<int, int>> next;
    for (auto [f, fx] : layer)
      for (int s : squares_at_edge_[at(f)]) {
        const auto& sq = squares_[at(s)];
        int k = 0;
        while (sq.edges[at(k)] != f) ++k;
        const int opposite = sq.edges[at((k + 2) % 4)];
        const int image = sq.vertices[at(k)] == fx ? sq.vertices[at((k + 3) % 4)] : sq.vertices[at((k + 2) % 4)];
        if (visited.insert({opposite, image}).second) next.push_back({opposite, image});
      }
    layer = std::move(next);
  }
  const auto dx = cx_.graph().degree(x);
  const auto dy = cx_.graph().degree(y);
  if (dx == dy) throw Undecidable("equal degrees and no curvature evidence at edge " + std::to_string(e));
  Orientation o;
  o.upper = dx < dy ? x : y;
  o.via = Evidence::degree;
  o.squares = 0;
  o.radius = 1;
  return o;
}

Orientation recover_orientation(const PolComplex& cx, int e) {
  OrientationSolver solver(cx);
  return solver.recover(e);
}

std::vector<Orientation> recover_orientations(const PolComplex& cx, Execution execution) {
  OrientationSolver solver(cx);
  solver.precompute(execution);
  std::vector<Orientation> out(cx.edges.size());
  for (std::size_t e = 0; e < cx.edges.size(); ++e)
    if (edge_certified(cx, static_cast<int>(e))) out[e] = solver.recover(static_cast<int>(e));
  return out;
}

namespace {

std::vector<int> chain_lengths(const PolComplex& cx, const std::vector<Orientation>& orient) {
  const int n = cx.vertex_count();
  std::vector<int> longest(at(n), -1);
  // Longest ascending chain, by memoised search over recovered orientations.
  auto up = [&](auto&& self, int v) -> int {
    int& best = longest[at(v)];
    if (best >= 0) return best;
    best = 0;
    for (int e : cx.incident(v))
      if (orient[at(e)].upper != v) best = std::max(best, 1 + self(self, cx.edges[at(e)].other(v)));
    return best;
  };
  for (int v = 0; v < n; ++v) up(up, v);
  return longest;
}

}  // namespace

int classify_deficiency(const PolComplex& cx, int v) { return classify_all(cx, Execution::parallel)[at(v)]; }

std::vector<int> classify_all(const PolComplex& cx, Execution execution) {
  if (cx.mode != Mode::full) throw ModeError("deficiency classification needs a full enumeration");
  const auto orient = recover_orientations(cx, execution);
  const auto chains = chain_lengths(cx, orient);
  std::vector<int> out(chains.size());
  for (std::size_t v = 0; v < chains.size(); ++v) out[v] = cx.complexity - chains[v];
  return out;
}

bool is_nonpositively_curved(const PolComplex& cx, Execution execution) {
  if (cx.mode != Mode::full) throw ModeError("curvature of the whole complex needs a full enumeration");
  const int n = cx.vertex_count();
  bool flat = true;
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : flat) if (execution == Execution::parallel)
  for (int v = 0; v < n; ++v) flat = flat && find_pcs_cubewise(cx, v).empty();
  return flat;
}

}  // namespace polycx
