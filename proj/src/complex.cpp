#include "polycx/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace polycx {

namespace {

ArcSet without(const ArcSet& s, ArcId a) {
  ArcSet out;
  out.reserve(s.size());
  for (ArcId x : s)
    if (x != a) out.push_back(x);
  return out;
}

ArcSet with(const ArcSet& s, ArcId a) {
  ArcSet out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), a), a);
  return out;
}

bool contains(const ArcSet& s, ArcId a) { return std::binary_search(s.begin(), s.end(), a); }

}  // namespace

void PolComplex::build(std::vector<ArcSet> vertex_sets) {
  std::sort(vertex_sets.begin(), vertex_sets.end());
  vertex_sets.erase(std::unique(vertex_sets.begin(), vertex_sets.end()), vertex_sets.end());
  vertices.clear();
  for (auto& s : vertex_sets) {
    const int deficiency = complexity - static_cast<int>(s.size());
    vertices.push_back({std::move(s), deficiency});
  }
  index_.clear();
  for (int v = 0; v < vertex_count(); ++v) index_.emplace(vertices[static_cast<std::size_t>(v)].arcs, v);

  edges.clear();
  for (int p = 0; p < vertex_count(); ++p)
    for (ArcId a : vertices[static_cast<std::size_t>(p)].arcs) {
      const int q = vertex_of(without(vertices[static_cast<std::size_t>(p)].arcs, a));
      if (q >= 0) edges.push_back({std::min(p, q), std::max(p, q), a, p});
    }
  std::sort(edges.begin(), edges.end(),
            [](const ComplexEdge& x, const ComplexEdge& y) { return std::pair(x.v, x.w) < std::pair(y.v, y.w); });
  index();
}

void PolComplex::index() {
  index_.clear();
  for (int v = 0; v < vertex_count(); ++v) index_.emplace(vertices[static_cast<std::size_t>(v)].arcs, v);
  edge_index_.clear();
  incident_.assign(vertices.size(), {});
  graph_ = Graph(vertex_count());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& ed = edges[static_cast<std::size_t>(e)];
    edge_index_.emplace(std::pair(ed.v, ed.w), e);
    incident_[static_cast<std::size_t>(ed.v)].push_back(e);
    incident_[static_cast<std::size_t>(ed.w)].push_back(e);
    graph_.add_edge(ed.v, ed.w);
  }
  if (frontier.size() != vertices.size()) frontier.assign(vertices.size(), false);
}

int PolComplex::vertex_of(const ArcSet& arcs) const {
  auto it = index_.find(arcs);
  return it == index_.end() ? -1 : it->second;
}

int PolComplex::edge_between(int u, int w) const {
  auto it = edge_index_.find(std::pair(std::min(u, w), std::max(u, w)));
  return it == edge_index_.end() ? -1 : it->second;
}

std::vector<ArcId> PolComplex::arcs() const {
  std::set<ArcId> seen;
  for (const auto& v : vertices) seen.insert(v.arcs.begin(), v.arcs.end());
  return {seen.begin(), seen.end()};
}

bool is_polygonalisation(const CombTriangulation& t, const ArcSet& keep) {
  return is_polygonal(regions_keeping(t, keep));
}

ArcSet removable_in(const CombTriangulation& t, const ArcSet& keep) {
  const auto regions = regions_keeping(t, keep);
  ArcSet out;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!contains(keep, t.arc(e))) continue;
    const auto& [s, r] = t.edge_slots(e);
    if (regions.region_of(s) != regions.region_of(r)) out.push_back(t.arc(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> pinned_flip_closure(SurfaceContext& ctx, int start, const ArcSet& pinned) {
  std::vector<int> order{start};
  std::set<int> seen{start};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const CombTriangulation t = ctx.node(order[i]).tri;
    for (int e = 0; e < t.edge_count(); ++e) {
      if (contains(pinned, t.arc(e)) || !t.is_flippable(e)) continue;
      const int id = ctx.add_triangulation(ctx.flip(t, e), order[i], e);
      if (seen.insert(id).second) order.push_back(id);
    }
  }
  return order;
}

ArcSet removable_arcs(const Enumeration& en, int v) {
  const auto& p = en.complex.vertices[static_cast<std::size_t>(v)].arcs;
  return removable_in(en.ctx->node(en.witness[static_cast<std::size_t>(v)]).tri, p);
}

ArcSet addable_arcs(const Enumeration& en, int v) {
  const auto& p = en.complex.vertices[static_cast<std::size_t>(v)].arcs;
  std::set<ArcId> found;
  for (int node : pinned_flip_closure(*en.ctx, en.witness[static_cast<std::size_t>(v)], p))
    for (ArcId a : en.ctx->node(node).tri.arc_set())
      if (!contains(p, a)) found.insert(a);
  return {found.begin(), found.end()};
}

void explore_flip_graph(SurfaceContext& ctx, std::size_t cap, Execution execution) {
  struct Job {
    int node;
    int edge;
  };
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<Job> jobs;
    for (int n : frontier) {
      const auto& t = ctx.node(n).tri;
      for (int e = 0; e < t.edge_count(); ++e)
        if (t.is_flippable(e)) jobs.push_back({n, e});
    }
    std::vector<Coords> coords(jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());
    const bool parallel = execution == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      const Job& job = jobs[static_cast<std::size_t>(j)];
      coords[static_cast<std::size_t>(j)] = ctx.flipped_coords(ctx.node(job.node).tri, job.edge);
    }

    std::vector<int> next;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const ArcId fresh = ctx.registry().intern(coords[j]);
      CombTriangulation t = ctx.node(jobs[j].node).tri.flipped(jobs[j].edge, fresh);
      const int before = ctx.triangulation_count();
      const int id = ctx.add_triangulation(std::move(t), jobs[j].node, jobs[j].edge);
      if (id == before) next.push_back(id);
      if (static_cast<std::size_t>(ctx.triangulation_count()) > cap)
        throw EnumerationDiverged("flip graph of " + to_string(ctx.signature()) + " exceeds " +
                                  std::to_string(cap) + " triangulations");
    }
    frontier = std::move(next);
  }
}

namespace {

void fill_arc_coords(Enumeration& en) {
  for (ArcId a : en.complex.arcs()) en.complex.arc_coords.emplace(a, en.ctx->registry().coords(a));
}

std::vector<int> reorder(const PolComplex& cx, const std::vector<ArcSet>& sets, const std::vector<int>& values) {
  std::vector<int> out(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) out[static_cast<std::size_t>(cx.vertex_of(sets[i]))] = values[i];
  return out;
}

}  // namespace

Enumeration enumerate_full(const SurfaceSignature& sig, const EnumerationOptions& options) {
  Enumeration en;
  en.ctx = std::make_shared<SurfaceContext>(sig);
  SurfaceContext& ctx = *en.ctx;
  explore_flip_graph(ctx, options.vertex_cap, options.execution);

  // Sub-polygonalisations of each triangulation, by successive removals. Removability
  // depends only on the arc set, so a set seen before has been fully explored.
  std::map<ArcSet, int> found;
  for (int n = 0; n < ctx.triangulation_count(); ++n) {
    const auto& t = ctx.node(n).tri;
    std::vector<ArcSet> stack{t.arc_set()};
    if (!found.emplace(stack.back(), n).second) continue;
    while (!stack.empty()) {
      const ArcSet p = std::move(stack.back());
      stack.pop_back();
      for (ArcId a : removable_in(t, p)) {
        ArcSet q = without(p, a);
        if (!found.emplace(q, n).second) continue;
        if (found.size() > options.vertex_cap)
          throw EnumerationDiverged("complex of " + to_string(sig) + " exceeds " +
                                    std::to_string(options.vertex_cap) + " vertices");
        stack.push_back(std::move(q));
      }
    }
  }

  en.complex.signature = sig;
  en.complex.complexity = complexity_E(sig);
  en.complex.mode = Mode::full;
  std::vector<ArcSet> sets;
  std::vector<int> witnesses;
  for (const auto& [s, n] : found) {
    sets.push_back(s);
    witnesses.push_back(n);
  }
  en.complex.build(sets);
  en.witness = reorder(en.complex, sets, witnesses);
  en.complex.center = en.complex.vertex_of(ctx.base().arc_set());
  fill_arc_coords(en);
  return en;
}

Enumeration enumerate_ball(const SurfaceSignature& sig, int radius, std::optional<ArcSet> center,
                           const EnumerationOptions& options) {
  if (radius < 0) throw Error("radius must be nonnegative");
  Enumeration en;
  en.ctx = std::make_shared<SurfaceContext>(sig);
  SurfaceContext& ctx = *en.ctx;
  const ArcSet start = center.value_or(ctx.base().arc_set());
  for (ArcId a : start)
    if (!ctx.base().contains(a)) throw Error("ball center must consist of base arcs");
  if (!is_polygonalisation(ctx.base(), start)) throw Error("ball center is not a polygonalisation");

  std::vector<ArcSet> sets{start};
  std::vector<int> witnesses{0};
  std::vector<int> dist{0};
  std::map<ArcSet, int> seen{{start, 0}};
  auto visit = [&](ArcSet s, int witness, int d) {
    if (seen.emplace(s, static_cast<int>(sets.size())).second) {
      sets.push_back(std::move(s));
      witnesses.push_back(witness);
      dist.push_back(d);
      if (sets.size() > options.vertex_cap)
        throw EnumerationDiverged("ball exceeds " + std::to_string(options.vertex_cap) + " vertices");
    }
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (dist[i] >= radius) continue;
    const ArcSet p = sets[i];
    const int w = witnesses[i];
    const int d = dist[i] + 1;
    for (ArcId a : removable_in(ctx.node(w).tri, p)) visit(without(p, a), w, d);
    for (int node : pinned_flip_closure(ctx, w, p))
      for (ArcId a : ctx.node(node).tri.arc_set())
        if (!contains(p, a)) visit(with(p, a), node, d);
  }

  PolComplex& cx = en.complex;
  cx.signature = sig;
  cx.complexity = complexity_E(sig);
  cx.mode = Mode::ball;
  cx.radius = radius;
  cx.build(sets);
  en.witness = reorder(cx, sets, witnesses);
  cx.distance = reorder(cx, sets, dist);
  cx.frontier.assign(sets.size(), false);
  for (int v = 0; v < cx.vertex_count(); ++v) cx.frontier[static_cast<std::size_t>(v)] = cx.distance[static_cast<std::size_t>(v)] == radius;
  cx.center = cx.vertex_of(start);
  fill_arc_coords(en);
  return en;
}

std::vector<Cube> cubes(const PolComplex& cx, int min_dimension) {
  std::vector<Cube> out;
  for (int top = 0; top < cx.vertex_count(); ++top) {
    const auto& arcs = cx.vertices[static_cast<std::size_t>(top)].arcs;
    const int m = static_cast<int>(arcs.size());
    // Removal sets X (bitmasks over the top's arcs) with every P - Y, Y ⊆ X, a vertex.
    std::vector<std::uint64_t> level{0};
    std::set<std::uint64_t> valid{0};
    for (int dim = 1; dim <= m && !level.empty(); ++dim) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t x : level) {
        const int highest = x == 0 ? -1 : 63 - __builtin_clzll(x);
        for (int i = highest + 1; i < m; ++i) {
          const std::uint64_t y = x | (std::uint64_t{1} << i);
          bool faces = true;
          for (int j = 0; j < m && faces; ++j)
            if ((y >> j) & 1U) faces = valid.count(y & ~(std::uint64_t{1} << j)) > 0;
          if (!faces) continue;
          ArcSet bottom;
          for (int j = 0; j < m; ++j)
            if (!((y >> j) & 1U)) bottom.push_back(arcs[static_cast<std::size_t>(j)]);
          const int b = cx.vertex_of(bottom);
          if (b < 0) continue;
          valid.insert(y);
          next.push_back(y);
          if (dim >= min_dimension) out.push_back({b, top, dim});
        }
      }
      level = std::move(next);
    }
  }
  return out;
}

std::vector<std::size_t> cube_counts(const PolComplex& cx) {
  std::vector<std::size_t> counts{static_cast<std::size_t>(cx.vertex_count())};
  for (const auto& c : cubes(cx, 1)) {
    if (counts.size() <= static_cast<std::size_t>(c.dimension)) counts.resize(static_cast<std::size_t>(c.dimension) + 1, 0);
    ++counts[static_cast<std::size_t>(c.dimension)];
  }
  return counts;
}

std::vector<Square> squares(const PolComplex& cx) {
  std::vector<Square> out;
  const Graph& g = cx.graph();
  for (int a = 0; a < g.size(); ++a) {
    const auto& nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const int b = nb[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int c = nb[j];
        if (c < a) continue;
        for (int d : g.neighbors(b)) {
          if (d <= a || d == c || !g.has_edge(d, c)) continue;
          Square s;
          s.vertices = {a, b, d, c};
          for (int k = 0; k < 4; ++k)
            s.edges[static_cast<std::size_t>(k)] =
                cx.edge_between(s.vertices[static_cast<std::size_t>(k)], s.vertices[static_cast<std::size_t>((k + 1) % 4)]);
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

Report verify_square_lemma(const PolComplex& cx) {
  Report report;
  report.suite = "cubes";
  report.instance = to_string(cx.signature);
  std::string label_failure;
  std::string interval_failure;
  const auto sq = squares(cx);
  for (const auto& s : sq) {
    for (int k = 0; k < 2 && label_failure.empty(); ++k) {
      const auto& e = cx.edges[static_cast<std::size_t>(s.edges[static_cast<std::size_t>(k)])];
      const auto& f = cx.edges[static_cast<std::size_t>(s.edges[static_cast<std::size_t>(k + 2)])];
      // e runs v_k -> v_{k+1}; its opposite runs v_{k+3} -> v_{k+2}.
      const bool e_up = e.upper == s.vertices[static_cast<std::size_t>(k + 1)];
      const bool f_up = f.upper == s.vertices[static_cast<std::size_t>(k + 2)];
      if (e.arc != f.arc || e_up != f_up)
        label_failure = "square " + std::to_string(s.vertices[0]) + "-" + std::to_string(s.vertices[1]) + "-" +
                        std::to_string(s.vertices[2]) + "-" + std::to_string(s.vertices[3]);
    }
    if (interval_failure.empty()) {
      std::set<ArcId> all;
      std::size_t smallest = SIZE_MAX;
      for (int v : s.vertices) {
        const auto& arcs = cx.vertices[static_cast<std::size_t>(v)].arcs;
        all.insert(arcs.begin(), arcs.end());
        smallest = std::min(smallest, arcs.size());
      }
      if (all.size() != smallest + 2) interval_failure = "4-cycle at vertex " + std::to_string(s.vertices[0]);
    }
  }
  report.add("opposite edges of squares are parallel", "square lemma", sq.size(), label_failure);
  report.add("4-cycles span interval squares", "cube characterisation", sq.size(), interval_failure);
  return report;
}

Stratum stratum(const PolComplex& cx, ArcId a) {
  if (!cx.arc_coords.count(a)) throw UnknownArc("no arc " + std::to_string(index(a)) + " in the complex");
  Stratum s;
  for (int v = 0; v < cx.vertex_count(); ++v) {
    const auto& arcs = cx.vertices[static_cast<std::size_t>(v)].arcs;
    if (contains(arcs, a)) {
      s.pol.push_back(v);
      if (cx.vertex_of(without(arcs, a)) >= 0) s.boundary_pol.push_back(v);
    } else {
      s.complement.push_back(v);
      if (cx.vertex_of(with(arcs, a)) >= 0) s.boundary_complement.push_back(v);
    }
  }
  return s;
}

Graph flip_subcomplex(const PolComplex& cx) {
  if (cx.mode != Mode::full) throw ModeError("flip subcomplex needs a full enumeration");
  std::vector<int> keep;
  for (int v = 0; v < cx.vertex_count(); ++v)
    if (cx.vertices[static_cast<std::size_t>(v)].deficiency <= 1) keep.push_back(v);
  return induced_subgraph(cx.graph(), keep);
}

Graph flip_graph(const PolComplex& cx) {
  std::vector<int> local(static_cast<std::size_t>(cx.vertex_count()), -1);
  int n = 0;
  for (int v = 0; v < cx.vertex_count(); ++v)
    if (cx.vertices[static_cast<std::size_t>(v)].deficiency == 0) local[static_cast<std::size_t>(v)] = n++;
  Graph g(n);
  for (int v = 0; v < cx.vertex_count(); ++v) {
    if (cx.vertices[static_cast<std::size_t>(v)].deficiency != 1) continue;
    std::vector<int> ups;
    for (int w : cx.graph().neighbors(v))
      if (local[static_cast<std::size_t>(w)] >= 0) ups.push_back(local[static_cast<std::size_t>(w)]);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) g.add_edge(ups[i], ups[j]);
  }
  return g;
}

Graph barycentric_subdivision(const Graph& g) {
  const auto es = g.edges();
  Graph out(g.size() + static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    const int mid = g.size() + static_cast<int>(i);
    out.add_edge(es[i].first, mid);
    out.add_edge(es[i].second, mid);
  }
  return out;
}

}  // namespace polycx
