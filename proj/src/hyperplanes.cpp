#include "polycx/hyperplanes.hpp"

#include <algorithm>
#include <map>

namespace polycx {

namespace {

bool has(const ArcSet& s, ArcId a) { return std::binary_search(s.begin(), s.end(), a); }

std::string pair_text(int p, int q) { return "(" + std::to_string(p) + ", " + std::to_string(q) + ")"; }

}  // namespace

int HyperplaneSet::plane_of(ArcId a) const {
  for (std::size_t h = 0; h < planes.size(); ++h)
    if (planes[h].arc == a) return static_cast<int>(h);
  return -1;
}

HyperplaneSet hyperplanes(const PolComplex& cx) {
  HyperplaneSet hs;
  hs.squares = squares(cx);
  const std::size_t ne = cx.edges.size();
  DisjointSets sets(ne);
  for (const auto& s : hs.squares) {
    sets.unite(static_cast<std::size_t>(s.edges[0]), static_cast<std::size_t>(s.edges[2]));
    sets.unite(static_cast<std::size_t>(s.edges[1]), static_cast<std::size_t>(s.edges[3]));
  }
  std::map<std::size_t, int> plane_of_root;
  hs.class_of_edge.assign(ne, -1);
  for (std::size_t e = 0; e < ne; ++e) {
    auto [it, fresh] = plane_of_root.try_emplace(sets.find(e), static_cast<int>(hs.planes.size()));
    if (fresh) hs.planes.push_back({cx.edges[e].arc, {}, {}});
    auto& plane = hs.planes[static_cast<std::size_t>(it->second)];
    plane.edges.push_back(static_cast<int>(e));
    hs.class_of_edge[e] = it->second;
    if (cx.edges[e].arc != plane.arc && hs.label_conflict < 0) hs.label_conflict = static_cast<int>(e);
  }
  std::vector<int> position(ne, -1);
  for (auto& plane : hs.planes) {
    for (std::size_t i = 0; i < plane.edges.size(); ++i) position[static_cast<std::size_t>(plane.edges[i])] = static_cast<int>(i);
    plane.carrier = Graph(static_cast<int>(plane.edges.size()));
  }
  for (const auto& s : hs.squares)
    for (int k = 0; k < 2; ++k) {
      const auto e = static_cast<std::size_t>(s.edges[static_cast<std::size_t>(k)]);
      const auto f = static_cast<std::size_t>(s.edges[static_cast<std::size_t>(k + 2)]);
      hs.planes[static_cast<std::size_t>(hs.class_of_edge[e])].carrier.add_edge(position[e], position[f]);
    }
  return hs;
}

Graph hyperplane_graph(const PolComplex& cx, ArcId a) {
  const auto hs = hyperplanes(cx);
  const int h = hs.plane_of(a);
  if (h < 0) throw UnknownArc("no hyperplane for arc " + std::to_string(index(a)));
  return hs.planes[static_cast<std::size_t>(h)].carrier;
}

std::vector<int> halfspace_labels(const PolComplex& cx, const Hyperplane& h) {
  std::vector<bool> cut(cx.edges.size(), false);
  for (int e : h.edges) cut[static_cast<std::size_t>(e)] = true;
  Graph g(cx.vertex_count());
  for (std::size_t e = 0; e < cx.edges.size(); ++e)
    if (!cut[e]) g.add_edge(cx.edges[e].v, cx.edges[e].w);
  return component_labels(g);
}

Report separation_check(const PolComplex& cx, ArcId a) {
  if (cx.mode != Mode::full) throw ModeError("separation needs a full enumeration");
  Report report;
  report.suite = "sageev";
  report.instance = to_string(cx.signature);
  const auto hs = hyperplanes(cx);
  const int h = hs.plane_of(a);
  if (h < 0) throw UnknownArc("no hyperplane for arc " + std::to_string(index(a)));
  const auto labels = halfspace_labels(cx, hs.planes[static_cast<std::size_t>(h)]);
  const int parts = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::string failure;
  if (parts != 2) failure = std::to_string(parts) + " components";
  int side_label[2] = {-1, -1};  // [in complement, in pol]
  for (int v = 0; v < cx.vertex_count() && failure.empty(); ++v) {
    const bool in_pol = has(cx.vertices[static_cast<std::size_t>(v)].arcs, a);
    int& expected = side_label[in_pol];
    if (expected < 0) expected = labels[static_cast<std::size_t>(v)];
    if (labels[static_cast<std::size_t>(v)] != expected) failure = "vertex " + std::to_string(v) + " on the wrong side";
  }
  if (failure.empty() && side_label[0] == side_label[1]) failure = "strata share a component";
  report.add("deletion leaves the two strata", "hyperplanes separate", static_cast<std::size_t>(cx.vertex_count()), failure);

  const auto st = stratum(cx, a);
  auto connected = [&](const std::vector<int>& part) {
    std::vector<bool> mark(static_cast<std::size_t>(cx.vertex_count()), false);
    for (int v : part) mark[static_cast<std::size_t>(v)] = true;
    return induced_connected(cx.graph(), mark);
  };
  report.add("strata connected", "strata are connected", 2,
             connected(st.pol) && connected(st.complement) ? "" : "a stratum is disconnected");
  report.add("stratum boundaries connected", "boundary of a stratum is connected", 2,
             connected(st.boundary_pol) && connected(st.boundary_complement) ? "" : "a stratum boundary is disconnected");
  return report;
}

CensusResult separation_census(const PolComplex& cx, const HyperplaneSet& hs, Execution execution) {
  const int n = cx.vertex_count();
  const std::size_t np = hs.planes.size();
  std::vector<std::vector<int>> labels(np);
  for (std::size_t h = 0; h < np; ++h) labels[h] = halfspace_labels(cx, hs.planes[h]);
  // membership[v][h]: the arc of plane h lies in vertex v.
  std::vector<std::vector<bool>> membership(static_cast<std::size_t>(n), std::vector<bool>(np));
  for (int v = 0; v < n; ++v)
    for (std::size_t h = 0; h < np; ++h)
      membership[static_cast<std::size_t>(v)][h] = has(cx.vertices[static_cast<std::size_t>(v)].arcs, hs.planes[h].arc);

  const auto bound = static_cast<std::size_t>(2 * std::max(cx.complexity, 0));
  std::size_t violations = 0;
  std::size_t max_sep = 0;
  long long first_bad = -1;
  const bool parallel = execution == Execution::parallel;
#pragma omp parallel if (parallel)
  {
    std::size_t local_violations = 0;
    std::size_t local_max = 0;
    long long local_first = -1;
#pragma omp for schedule(dynamic, 8) nowait
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        std::size_t separating = 0;
        bool ok = true;
        for (std::size_t h = 0; h < np; ++h) {
          const bool sep = labels[h][static_cast<std::size_t>(p)] != labels[h][static_cast<std::size_t>(q)];
          const bool differ = membership[static_cast<std::size_t>(p)][h] != membership[static_cast<std::size_t>(q)][h];
          separating += sep;
          ok = ok && sep == differ;
        }
        local_max = std::max(local_max, separating);
        if (!ok || separating > bound) {
          ++local_violations;
          const long long key = static_cast<long long>(p) * n + q;
          if (local_first < 0 || key < local_first) local_first = key;
        }
      }
#pragma omp critical
    {
      violations += local_violations;
      max_sep = std::max(max_sep, local_max);
      if (local_first >= 0 && (first_bad < 0 || local_first < first_bad)) first_bad = local_first;
    }
  }
  CensusResult out;
  out.pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  out.violations = violations;
  out.max_separating = max_sep;
  if (first_bad >= 0) out.counterexample = "pair " + pair_text(static_cast<int>(first_bad / n), static_cast<int>(first_bad % n));
  return out;
}

bool crossing_quadrant(const PolComplex& cx, ArcId a, ArcId b) {
  if (cx.mode != Mode::full) throw ModeError("quadrant crossing needs a full enumeration");
  bool seen[2][2] = {{false, false}, {false, false}};
  for (const auto& v : cx.vertices) seen[has(v.arcs, a)][has(v.arcs, b)] = true;
  return seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1];
}

bool crossing_combinatorial(const SurfaceContext& ctx, ArcId a, ArcId b) {
  return a != b && ctx.intersection_number(a, b) == 0 && !ctx.is_folded_pair(a, b);
}

bool crossing_by_triangulation(const SurfaceContext& ctx, ArcId a, ArcId b) {
  if (a == b) return false;
  for (int n = 0; n < ctx.triangulation_count(); ++n) {
    const auto& t = ctx.node(n).tri;
    if (!t.contains(a) || !t.contains(b)) continue;
    ArcSet keep;
    for (ArcId x : t.arc_set())
      if (x != a && x != b) keep.push_back(x);
    if (is_polygonalisation(t, keep)) return true;
  }
  return false;
}

int CrossingGraph::vertex_of(ArcId a) const {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
  return it != arcs.end() && *it == a ? static_cast<int>(it - arcs.begin()) : -1;
}

CrossingGraph crossing_graph(const SurfaceContext& ctx, const std::vector<ArcId>& arcs) {
  CrossingGraph cr{arcs, Graph(static_cast<int>(arcs.size()))};
  std::sort(cr.arcs.begin(), cr.arcs.end());
  for (std::size_t i = 0; i < cr.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < cr.arcs.size(); ++j)
      if (crossing_combinatorial(ctx, cr.arcs[i], cr.arcs[j])) cr.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return cr;
}

CrossingGraph quadrant_crossing_graph(const PolComplex& cx) {
  CrossingGraph cr{cx.arcs(), Graph(static_cast<int>(cx.arcs().size()))};
  for (std::size_t i = 0; i < cr.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < cr.arcs.size(); ++j)
      if (crossing_quadrant(cx, cr.arcs[i], cr.arcs[j])) cr.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return cr;
}

const std::vector<int>& link(const CrossingGraph& cr, int h) { return cr.graph.neighbors(h); }

bool folded_via_links(const CrossingGraph& cr, int ha, int hb) {
  const auto& la = link(cr, ha);
  const auto& lb = link(cr, hb);
  return la.size() < lb.size() && std::includes(lb.begin(), lb.end(), la.begin(), la.end());
}

Graph reconstruct_arc_graph(const CrossingGraph& cr) {
  Graph g = cr.graph;
  for (int h = 0; h < cr.graph.size(); ++h)
    for (int k = 0; k < cr.graph.size(); ++k)
      if (h != k && folded_via_links(cr, h, k)) g.add_edge(h, k);
  return g;
}

Graph arc_graph(const SurfaceContext& ctx, const std::vector<ArcId>& arcs) {
  std::vector<ArcId> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  Graph g(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (ctx.intersection_number(sorted[i], sorted[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

bool fold_free_geodesic_exists(const Graph& g, int a, int b, const std::function<bool(int, int)>& folded) {
  const auto from_a = bfs_distances(g, a);
  const auto from_b = bfs_distances(g, b);
  const int d = from_a[static_cast<std::size_t>(b)];
  if (d == kUnreachable) return false;
  // Forward search along geodesic steps that avoid folded pairs.
  std::vector<bool> reach(static_cast<std::size_t>(g.size()), false);
  reach[static_cast<std::size_t>(a)] = true;
  std::vector<int> layer{a};
  for (int step = 0; step < d; ++step) {
    std::vector<int> next;
    for (int v : layer)
      for (int w : g.neighbors(v)) {
        const auto wi = static_cast<std::size_t>(w);
        if (from_a[wi] != step + 1 || from_b[wi] != d - step - 1 || reach[wi] || folded(v, w)) continue;
        reach[wi] = true;
        next.push_back(w);
      }
    layer = std::move(next);
  }
  return reach[static_cast<std::size_t>(b)];
}

Report distance_comparison(const Enumeration& en) {
  const PolComplex& cx = en.complex;
  if (cx.mode != Mode::full) throw ModeError("distance comparison refuses ball enumerations");
  Report report;
  report.suite = "crossing";
  report.instance = to_string(cx.signature);
  const auto arcs = cx.arcs();
  const Graph ag = arc_graph(*en.ctx, arcs);
  const CrossingGraph cr = crossing_graph(*en.ctx, arcs);
  const auto da = all_pairs_distances(ag);
  const auto dc = all_pairs_distances(cr.graph);

  std::size_t finite = 0, exempt = 0;
  std::string qi, near, second;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const int a = da[i][j];
      const int c = dc[i][j];
      if (a == kUnreachable || c == kUnreachable) {
        ++exempt;
        continue;
      }
      ++finite;
      const std::string where = "arcs " + pair_text(index(arcs[i]), index(arcs[j])) + " d_A=" +
                                std::to_string(a) + " d_Cr=" + std::to_string(c);
      if ((c < a || c > a + 2) && qi.empty()) qi = where;
      if (a == 1 && c > 2 && near.empty()) near = where;
      if (a == 2 && c > 4 && second.empty()) second = where;
    }
  auto add = [&](const std::string& name, const std::string& anchor, const std::string& failure) {
    auto& check = report.add(name, anchor, finite, failure);
    if (finite == 0) check.status = Status::no_qualifying_instances;
    if (exempt > 0 && failure.empty()) check.counterexample = std::to_string(exempt) + " pairs exempt (infinite distance)";
  };
  add("d_A <= d_Cr <= d_A + 2", "quasi-isometry", qi);
  add("d_A = 1 implies d_Cr <= 2", "disjoint arcs are close", near);
  add("d_A = 2 implies d_Cr <= 4", "distance two bound", second);

  std::size_t qualifying = 0;
  std::string geodesic;
  auto folded = [&](int u, int w) { return en.ctx->is_folded_pair(arcs[static_cast<std::size_t>(u)], arcs[static_cast<std::size_t>(w)]); };
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (da[i][j] == kUnreachable || da[i][j] < 3) continue;
      ++qualifying;
      if (!fold_free_geodesic_exists(ag, static_cast<int>(i), static_cast<int>(j), folded) && geodesic.empty())
        geodesic = "arcs " + pair_text(index(arcs[i]), index(arcs[j]));
    }
  auto& check = report.add("fold-free geodesics", "geodesics without folds", qualifying, geodesic);
  if (qualifying == 0) check.status = Status::no_qualifying_instances;
  return report;
}

}  // namespace polycx
