#include "polycx/verify.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <unordered_set>

#include "polycx/curvature.hpp"
#include "polycx/hyperplanes.hpp"
#include "polycx/polygon_oracle.hpp"

namespace polycx {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

ArcSet without(const ArcSet& s, ArcId a) {
  ArcSet out;
  for (ArcId x : s)
    if (x != a) out.push_back(x);
  return out;
}

std::string set_text(const ArcSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(index(s[i]));
  return out + "}";
}

bool is_disk(const SurfaceSignature& sig) {
  return sig.genus == 0 && sig.interior_marked == 0 && sig.boundary_count() == 1;
}

Report start(const char* suite, const PolComplex& cx) {
  Report r;
  r.suite = suite;
  r.instance = to_string(cx.signature);
  return r;
}

void skip_for_balls(Report& r, const char* what) {
  r.add(what, "full enumeration", 0).status = Status::no_qualifying_instances;
}

// ---- engine ----

std::pair<int, int> tris(const CombTriangulation& t, int e) {
  const auto& s = t.edge_slots(e);
  return {s[0].tri, s[1].tri};
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  for (Suite s : {Suite::cubes, Suite::sageev, Suite::crossing, Suite::curvature, Suite::all})
    if (to_string(s) == name) return s;
  throw Error("unknown suite '" + name + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::cubes: return "cubes";
    case Suite::sageev: return "sageev";
    case Suite::crossing: return "crossing";
    case Suite::curvature: return "curvature";
    case Suite::all: return "all";
  }
  return "all";
}

Report verify_engine(SurfaceContext& ctx) {
  Report r;
  r.suite = "engine";
  r.instance = to_string(ctx.signature());
  const auto base_report = euler_verify(ctx.base());
  r.add("base triangulation is valid", "triangulation counts", 1,
        base_report.passed() ? "" : "base triangulation fails its Euler checks");

  const int nodes = ctx.triangulation_count();
  std::size_t inv_n = 0, pent_n = 0, comm_n = 0, path_n = 0, trans_n = 0;
  std::string inv_bad, pent_bad, comm_bad, path_bad, trans_bad;
  const std::size_t registered = ctx.registry().size();

  for (int n = 0; n < nodes; ++n) {
    const CombTriangulation t = ctx.node(n).tri;
    const ArcSet original = t.arc_set();
    const int ne = t.edge_count();
    std::vector<std::vector<int>> rows;
    for (std::size_t a = 0; a < registered; ++a)
      rows.push_back(ctx.transport_row(ctx.registry().coords(arc_id(static_cast<std::int64_t>(a))), n));

    for (int e = 0; e < ne; ++e) {
      if (!t.is_flippable(e)) continue;
      const std::string where = "triangulation " + std::to_string(n) + " edge " + std::to_string(e);
      const CombTriangulation once = ctx.flip(t, e);
      ++inv_n;
      if (ctx.flip(once, e).arc_set() != original && inv_bad.empty()) inv_bad = where;

      if (auto m = ctx.find_triangulation(once.arc_set())) {
        ++path_n;
        const CombTriangulation stored = ctx.node(*m).tri;
        const int back = stored.edge_of(once.arc(e));
        if ((back < 0 || ctx.flip(stored, back).arc_set() != original) && path_bad.empty()) path_bad = where;
      }

      for (const auto& row : rows) {
        ++trans_n;
        auto moved = row;
        transport_flip(t, e, moved);
        transport_flip(once, e, moved);
        if (moved != row && trans_bad.empty()) trans_bad = where;
      }

      for (int f = e + 1; f < ne; ++f) {
        if (!t.is_flippable(f)) continue;
        const auto [e1, e2] = tris(t, e);
        const auto [f1, f2] = tris(t, f);
        const std::set<int> touched{e1, e2, f1, f2};
        const std::string pair_where = where + "," + std::to_string(f);
        if (touched.size() == 4) {
          ++comm_n;
          const auto ef = ctx.flip(ctx.flip(t, e), f).arc_set();
          const auto fe = ctx.flip(ctx.flip(t, f), e).arc_set();
          if (ef != fe && comm_bad.empty()) comm_bad = pair_where;
        } else if (touched.size() == 3) {
          CombTriangulation cur = t;
          bool valid = true;
          for (int step = 0; step < 5 && valid; ++step) {
            const int g = step % 2 == 0 ? e : f;
            if (!cur.is_flippable(g)) valid = false;
            else cur = ctx.flip(cur, g);
          }
          if (!valid) continue;
          ++pent_n;
          if (cur.arc_set() != original && pent_bad.empty()) pent_bad = pair_where;
        }
      }
    }
  }
  r.add("flip involution", "flips", inv_n, inv_bad);
  r.add("pentagon relation", "overlapping flips", pent_n, pent_bad);
  r.add("commuting squares", "disjoint flips", comm_n, comm_bad);
  r.add("path independence", "arc identity", path_n, path_bad);
  r.add("transport involution", "coordinate transport", trans_n, trans_bad);

  std::vector<ArcId> witnessed;
  for (std::size_t a = 0; a < ctx.registry().size(); ++a)
    if (ctx.witness(arc_id(static_cast<std::int64_t>(a))) >= 0) witnessed.push_back(arc_id(static_cast<std::int64_t>(a)));
  std::size_t sym_n = 0;
  std::string sym_bad;
  for (std::size_t i = 0; i < witnessed.size(); ++i)
    for (std::size_t j = i + 1; j < witnessed.size(); ++j) {
      ++sym_n;
      if (ctx.intersection_number(witnessed[i], witnessed[j]) != ctx.intersection_number(witnessed[j], witnessed[i]) &&
          sym_bad.empty())
        sym_bad = "arcs " + std::to_string(index(witnessed[i])) + "," + std::to_string(index(witnessed[j]));
    }
  r.add("intersection symmetry", "intersection number", sym_n, sym_bad);

  if (is_disk(ctx.signature())) {
    std::size_t n_pairs = 0;
    std::string bad;
    for (std::size_t i = 0; i < witnessed.size(); ++i)
      for (std::size_t j = i + 1; j < witnessed.size(); ++j) {
        ++n_pairs;
        const Chord ci = engine_chord(ctx, witnessed[i]);
        const Chord cj = engine_chord(ctx, witnessed[j]);
        const int expected = chord_cross(ci, cj) ? 1 : 0;
        if ((ci == cj || ctx.intersection_number(witnessed[i], witnessed[j]) != expected) && bad.empty())
          bad = "arcs " + std::to_string(index(witnessed[i])) + "," + std::to_string(index(witnessed[j]));
      }
    r.add("chord oracle agreement", "disk arcs", n_pairs, bad);
  }
  return r;
}

namespace {

// ---- cubes ----

using Bits = std::bitset<256>;

std::string closure_check(const PolComplex& cx, Execution execution) {
  const auto arcs = cx.arcs();
  if (arcs.size() > Bits().size()) throw Error("closure check supports at most 256 arcs");
  std::map<ArcId, std::size_t> bit;
  for (std::size_t i = 0; i < arcs.size(); ++i) bit[arcs[i]] = i;
  const int n = cx.vertex_count();
  std::vector<Bits> sets(at(n));
  for (int v = 0; v < n; ++v)
    for (ArcId a : cx.vertices[at(v)].arcs) sets[at(v)].set(bit.at(a));
  std::vector<Bits> maximal, minimal;
  for (int v = 0; v < n; ++v) {
    bool up = false, down = false;
    for (int e : cx.incident(v)) (cx.edges[at(e)].upper == v ? down : up) = true;
    if (!up) maximal.push_back(sets[at(v)]);
    if (!down) minimal.push_back(sets[at(v)]);
  }
  std::unordered_set<Bits> known;
  for (const auto& s : sets) known.insert(s);

  long long first_bad = -1;
#pragma omp parallel for schedule(dynamic, 16) if (execution == Execution::parallel)
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const Bits u = sets[at(p)] | sets[at(q)];
      const Bits x = sets[at(p)] & sets[at(q)];
      bool bad = false;
      if (!known.count(u))
        bad = std::any_of(maximal.begin(), maximal.end(), [&](const Bits& m) { return (u & ~m).none(); });
      if (!bad && !known.count(x))
        bad = std::any_of(minimal.begin(), minimal.end(), [&](const Bits& m) { return (m & ~x).none(); });
      if (bad) {
        const long long key = static_cast<long long>(p) * n + q;
#pragma omp critical
        if (first_bad < 0 || key < first_bad) first_bad = key;
      }
    }
  if (first_bad < 0) return {};
  return "vertices " + std::to_string(first_bad / n) + " and " + std::to_string(first_bad % n);
}

// Rank over Z/2 of the square boundaries equals the cycle rank of the 1-skeleton.
std::string square_homology_check(const PolComplex& cx) {
  const std::size_t ne = cx.edges.size();
  const std::size_t words = (ne + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;  // reduced rows, pivot = lowest set bit
  std::vector<std::size_t> pivots;
  for (const auto& s : squares(cx)) {
    std::vector<std::uint64_t> row(words, 0);
    for (int e : s.edges) row[at(e) / 64] ^= std::uint64_t{1} << (at(e) % 64);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((row[pivots[b] / 64] >> (pivots[b] % 64)) & 1U)
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
    std::size_t pivot = ne;
    for (std::size_t w = 0; w < words && pivot == ne; ++w)
      if (row[w]) pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
    if (pivot == ne) continue;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((basis[b][pivot / 64] >> (pivot % 64)) & 1U)
        for (std::size_t w = 0; w < words; ++w) basis[b][w] ^= row[w];
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
  }
  const long long cycle_rank =
      static_cast<long long>(ne) - cx.vertex_count() + component_count(cx.graph());
  if (static_cast<long long>(basis.size()) == cycle_rank) return {};
  return "square rank " + std::to_string(basis.size()) + " below cycle rank " + std::to_string(cycle_rank);
}

std::string subdivision_check(const PolComplex& cx) {
  const Graph sub = flip_subcomplex(cx);
  const Graph fg = flip_graph(cx);
  std::vector<int> kept, tri_index(at(cx.vertex_count()), -1);
  for (int v = 0; v < cx.vertex_count(); ++v)
    if (cx.vertices[at(v)].deficiency <= 1) kept.push_back(v);
  int t = 0;
  for (int v = 0; v < cx.vertex_count(); ++v)
    if (cx.vertices[at(v)].deficiency == 0) tri_index[at(v)] = t++;
  const auto fe = fg.edges();
  std::map<std::pair<int, int>, int> midpoint;
  for (std::size_t i = 0; i < fe.size(); ++i) midpoint[fe[i]] = fg.size() + static_cast<int>(i);
  // Explicit bijection from the subcomplex onto the subdivision.
  std::vector<int> image(kept.size(), -1);
  std::set<int> used;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const int v = kept[i];
    if (cx.vertices[at(v)].deficiency == 0) {
      image[i] = tri_index[at(v)];
    } else {
      std::vector<int> ups;
      for (int w : cx.graph().neighbors(v))
        if (tri_index[at(w)] >= 0) ups.push_back(tri_index[at(w)]);
      if (ups.size() != 2) return "vertex " + std::to_string(v) + " lies under " + std::to_string(ups.size()) + " triangulations";
      image[i] = midpoint.at({std::min(ups[0], ups[1]), std::max(ups[0], ups[1])});
    }
    if (!used.insert(image[i]).second) return "two vertices map to one subdivision vertex";
  }
  const Graph bary = barycentric_subdivision(fg);
  if (static_cast<int>(kept.size()) != bary.size() || sub.edge_count() != bary.edge_count())
    return "sizes differ: " + std::to_string(kept.size()) + "/" + std::to_string(sub.edge_count()) + " vs " +
           std::to_string(bary.size()) + "/" + std::to_string(bary.edge_count());
  for (auto [u, w] : sub.edges())
    if (!bary.has_edge(image[at(u)], image[at(w)])) return "edge at vertex " + std::to_string(kept[at(u)]) + " not preserved";
  return {};
}

std::string flip_graph_check(const PolComplex& cx, Enumeration& en) {
  SurfaceContext& ctx = *en.ctx;
  const Graph fg = flip_graph(cx);
  std::vector<int> tri_index(at(cx.vertex_count()), -1);
  int count = 0;
  for (int v = 0; v < cx.vertex_count(); ++v)
    if (cx.vertices[at(v)].deficiency == 0) tri_index[at(v)] = count++;
  Graph direct(count);
  const int nodes = ctx.triangulation_count();
  for (int n = 0; n < nodes; ++n) {
    const CombTriangulation t = ctx.node(n).tri;
    const int v = cx.vertex_of(t.arc_set());
    if (v < 0) return "triangulation " + set_text(t.arc_set()) + " missing from the complex";
    for (int e = 0; e < t.edge_count(); ++e) {
      if (!t.is_flippable(e)) continue;
      const int w = cx.vertex_of(ctx.flip(t, e).arc_set());
      if (w < 0) continue;  // beyond a ball
      direct.add_edge(tri_index[at(v)], tri_index[at(w)]);
    }
  }
  if (direct.edges() != fg.edges()) return "complex flip graph differs from direct flips";
  return {};
}

// In a ball only flips whose detours stay well inside are examined.
std::string pentagon_detour_check(const PolComplex& cx, std::size_t& instances) {
  instances = 0;
  auto inner = [&](int v) { return cx.mode == Mode::full || cx.distance[at(v)] + 3 <= cx.radius; };
  auto vertex_without = [&](int v, ArcId a) { return cx.vertex_of(without(cx.vertices[at(v)].arcs, a)) >= 0; };
  // Triangulation adjacency through deficiency-one vertices.
  std::map<int, std::vector<std::pair<int, int>>> flips;  // triangulation -> (neighbour, shared vertex)
  for (int q = 0; q < cx.vertex_count(); ++q) {
    if (cx.vertices[at(q)].deficiency != 1) continue;
    std::vector<int> ups;
    for (int w : cx.graph().neighbors(q))
      if (cx.vertices[at(w)].deficiency == 0) ups.push_back(w);
    if (ups.size() != 2) continue;
    flips[ups[0]].push_back({ups[1], q});
    flips[ups[1]].push_back({ups[0], q});
  }
  for (const auto& [t, list] : flips)
    for (auto [t2, q] : list) {
      if (t2 < t || !inner(t) || !inner(t2)) continue;
      for (ArcId a : cx.vertices[at(q)].arcs) {
        if (!vertex_without(t, a) || !vertex_without(t2, a) || vertex_without(q, a)) continue;
        ++instances;
        // Paths t = T0, ..., T4 = t2 of distinct triangulations, a removable throughout.
        std::vector<int> path{t};
        auto search = [&](auto&& self) -> bool {
          const int cur = path.back();
          if (path.size() == 5) return cur == t2;
          for (auto [next, shared] : flips[cur]) {
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            if (path.size() < 4 && next == t2) continue;
            if (!vertex_without(next, a) || !vertex_without(shared, a)) continue;
            path.push_back(next);
            if (self(self)) return true;
            path.pop_back();
          }
          return false;
        };
        if (!search(search))
          return "arc " + std::to_string(index(a)) + " at triangulations " + std::to_string(t) + "," + std::to_string(t2);
      }
    }
  return {};
}

}  // namespace

std::string compare_complexes(const PolComplex& a, const PolComplex& b) {
  if (a.vertex_count() != b.vertex_count()) return "vertex counts differ";
  for (int v = 0; v < a.vertex_count(); ++v) {
    const auto& pa = a.vertices[at(v)];
    const auto& pb = b.vertices[at(v)];
    if (pa.arcs != pb.arcs || pa.deficiency != pb.deficiency) return "vertex " + std::to_string(v) + " differs";
  }
  if (a.edges.size() != b.edges.size()) return "edge counts differ";
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    const auto& ea = a.edges[e];
    const auto& eb = b.edges[e];
    if (ea.v != eb.v || ea.w != eb.w || ea.arc != eb.arc || ea.upper != eb.upper)
      return "edge " + std::to_string(e) + " (" + std::to_string(ea.v) + "," + std::to_string(ea.w) + ") differs";
  }
  return {};
}

Report verify_cubes(const PolComplex& cx, Enumeration& en, Execution execution) {
  Report r = start("cubes", cx);
  if (&cx != &en.complex) r.add("document matches enumeration", "canonical output", 1, compare_complexes(cx, en.complex));

  std::size_t tri_n = 0;
  std::string tri_bad;
  const int F = face_count_F(cx.signature);
  for (int v = 0; v < cx.vertex_count(); ++v) {
    const auto& p = cx.vertices[at(v)];
    if (p.deficiency != 0) continue;
    ++tri_n;
    const int ev = en.complex.vertex_of(p.arcs);
    std::string bad;
    if (static_cast<int>(p.arcs.size()) != cx.complexity) {
      bad = "wrong arc count";
    } else if (ev < 0) {
      bad = "not enumerated";
    } else {
      const auto d = regions_keeping(en.ctx->node(en.witness[at(ev)]).tri, p.arcs);
      int triangles = 0;
      for (const auto& reg : d.regions) triangles += reg.is_disk && reg.side_count == 3 && reg.interior_marked_count == 0;
      if (triangles != F || static_cast<int>(d.regions.size()) != F) bad = std::to_string(triangles) + " triangular regions";
    }
    if (!bad.empty() && tri_bad.empty()) tri_bad = "vertex " + std::to_string(v) + ": " + bad;
  }
  if (cx.mode == Mode::full)
    for (int v = 0; v < cx.vertex_count() && tri_bad.empty(); ++v) {
      bool up = false;
      for (int e : cx.incident(v)) up = up || cx.edges[at(e)].upper != v;
      if (!up && cx.vertices[at(v)].deficiency != 0) tri_bad = "maximal vertex " + std::to_string(v) + " is not a triangulation";
    }
  r.add("triangulation vertices have E arcs and F triangles", "triangulation counts", tri_n, tri_bad);

  r.append(verify_square_lemma(cx));
  std::size_t detours = 0;
  const auto detour_bad = pentagon_detour_check(cx, detours);
  auto& detour = r.add("pentagon detours exist", "pentagon detour", detours, detour_bad);
  if (detours == 0) detour.status = Status::no_qualifying_instances;
  if (cx.mode != Mode::full) {
    skip_for_balls(r, "closure, connectivity and flip subcomplex");
    return r;
  }
  r.add("complex is connected", "connectivity", 1, is_connected(cx.graph()) ? "" : "disconnected");
  r.add("union and intersection closure", "polygonalisation containment", static_cast<std::size_t>(cx.vertex_count()),
        closure_check(cx, execution));
  r.add("deficiency <= 1 is the subdivided flip graph", "flip subcomplex", 1, subdivision_check(cx));
  r.add("flip graph matches direct flips", "flip subcomplex", static_cast<std::size_t>(en.ctx->triangulation_count()),
        flip_graph_check(cx, en));
  r.add("squares span all cycles mod 2", "simple connectivity (partial)", cx.edges.size(), square_homology_check(cx));
  if (is_disk(cx.signature) && cx.signature.boundary_marked.front() <= kDefaultOracleLimit)
    r.add("engine matches the dissection oracle", "disk complexes", static_cast<std::size_t>(cx.vertex_count()),
          compare_with_oracle(en, cx.signature.boundary_marked.front()));
  return r;
}

Report verify_sageev(const PolComplex& cx, Execution execution) {
  Report r = start("sageev", cx);
  if (cx.mode != Mode::full) {
    skip_for_balls(r, "hyperplane checks");
    return r;
  }
  const auto hs = hyperplanes(cx);
  const auto arcs = cx.arcs();
  std::string bij;
  if (hs.label_conflict >= 0) bij = "edge " + std::to_string(hs.label_conflict) + " carries a foreign label";
  else if (hs.planes.size() != arcs.size())
    bij = std::to_string(hs.planes.size()) + " hyperplanes for " + std::to_string(arcs.size()) + " arcs";
  else
    for (ArcId a : arcs)
      if (hs.plane_of(a) < 0 && bij.empty()) bij = "arc " + std::to_string(index(a)) + " has no hyperplane";
  r.add("arcs and hyperplanes correspond", "hyperplane bijection", arcs.size(), bij);

  std::string emb;
  for (const auto& s : hs.squares)
    if (hs.class_of_edge[at(s.edges[0])] == hs.class_of_edge[at(s.edges[1])] && emb.empty())
      emb = "square at vertex " + std::to_string(s.vertices[0]);
  r.add("hyperplanes are embedded", "embedded hyperplanes", hs.squares.size(), emb);

  std::map<std::string, std::pair<std::string, std::string>> merged;  // name -> (anchor, first failure)
  std::vector<std::string> order;
  for (ArcId a : arcs) {
    if (hs.plane_of(a) < 0) continue;
    for (const auto& c : separation_check(cx, a).checks) {
      auto [it, fresh] = merged.try_emplace(c.name, c.anchor, "");
      if (fresh) order.push_back(c.name);
      if (c.status == Status::fail && it->second.second.empty())
        it->second.second = "arc " + std::to_string(index(a)) + ": " + c.counterexample;
    }
  }
  for (const auto& name : order) r.add(name, merged[name].first, arcs.size(), merged[name].second);

  const auto census = separation_census(cx, hs, execution);
  r.add("separating hyperplanes are P delta Q, at most 2E", "separation census", census.pairs, census.counterexample);
  return r;
}

Report verify_crossing(const PolComplex& cx, const Enumeration& en) {
  Report r = start("crossing", cx);
  if (cx.mode != Mode::full) {
    skip_for_balls(r, "crossing checks");
    return r;
  }
  const SurfaceContext& ctx = *en.ctx;
  const auto arcs = cx.arcs();
  std::size_t pairs = 0;
  std::string agree;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      ++pairs;
      const bool q = crossing_quadrant(cx, arcs[i], arcs[j]);
      const bool c = crossing_combinatorial(ctx, arcs[i], arcs[j]);
      const bool t = crossing_by_triangulation(ctx, arcs[i], arcs[j]);
      if ((q != c || c != t) && agree.empty())
        agree = "arcs " + std::to_string(index(arcs[i])) + "," + std::to_string(index(arcs[j])) + " quadrant=" +
                std::to_string(q) + " disjoint-unfolded=" + std::to_string(c) + " triangulation=" + std::to_string(t);
    }
  r.add("three crossing conditions agree", "equivalent crossing", pairs, agree);
  r.append(distance_comparison(en));

  const auto cr = crossing_graph(ctx, arcs);
  std::size_t folded = 0;
  std::string links;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (i == j) continue;
      const auto roles = ctx.folded_roles(arcs[i], arcs[j]);
      const bool truth = roles && roles->outer == arcs[i];
      folded += truth;
      if (truth != folded_via_links(cr, static_cast<int>(i), static_cast<int>(j)) && links.empty())
        links = "arcs " + std::to_string(index(arcs[i])) + "," + std::to_string(index(arcs[j]));
    }
  r.add("link inclusion characterises folded pairs", "folded pairs", folded, links);
  const Graph rebuilt = reconstruct_arc_graph(cr);
  const Graph ag = arc_graph(ctx, arcs);
  r.add("crossing graph plus link edges is the arc graph", "arc graph reconstruction", ag.edge_count(),
        rebuilt.edges() == ag.edges() ? "" : "edge sets differ");
  return r;
}

Report verify_curvature(const PolComplex& cx, const Enumeration& en, Execution execution) {
  Report r = start("curvature", cx);
  const int n = cx.vertex_count();
  std::size_t certified = 0, systems = 0;
  std::string agree, down, flat;
  std::vector<std::string> agree_v(at(n)), down_v(at(n));
  std::vector<std::size_t> count_v(at(n), 0);
  std::vector<char> cert_v(at(n), 0);
#pragma omp parallel for schedule(dynamic, 4) if (execution == Execution::parallel)
  for (int v = 0; v < n; ++v) {
    if (!vertex_certified(cx, v)) continue;
    cert_v[at(v)] = 1;
    const auto cube = find_pcs_cubewise(cx, v);
    count_v[at(v)] = cube.size();
    std::set<ArcSet> a, b;
    for (const auto& p : cube) {
      a.insert(p.arcs);
      if (!p.downward && down_v[at(v)].empty()) down_v[at(v)] = "vertex " + std::to_string(v);
    }
    const int ev = en.complex.vertex_of(cx.vertices[at(v)].arcs);
    if (ev < 0) {
      agree_v[at(v)] = "vertex " + std::to_string(v) + " not enumerated";
      continue;
    }
    for (const auto& p : find_pcs_curvewise(en, ev)) b.insert(p.arcs);
    if (a != b) agree_v[at(v)] = "vertex " + std::to_string(v) + " " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  }
  for (int v = 0; v < n; ++v) {
    certified += cert_v[at(v)];
    systems += count_v[at(v)];
    if (agree.empty()) agree = agree_v[at(v)];
    if (down.empty()) down = down_v[at(v)];
  }
  auto& c1 = r.add("cube and curve systems agree", "positive curvature criterion", certified, agree);
  c1.counterexample = agree.empty() ? std::to_string(systems) + " systems found" : agree;
  r.add("system edges lead down", "systems are downward", systems, down);
  if (is_disk(cx.signature)) r.add("disk complexes carry no systems", "disk flatness", certified, systems ? "systems found" : "");

  std::size_t edges = 0;
  for (std::size_t e = 0; e < cx.edges.size(); ++e) edges += edge_certified(cx, static_cast<int>(e));
  std::string orient;
  std::map<int, std::size_t> radius_histogram;
  try {
    const auto rec = recover_orientations(cx, execution);
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
      if (!edge_certified(cx, static_cast<int>(e))) continue;
      ++radius_histogram[rec[e].radius];
      if (rec[e].upper != cx.edges[e].upper && orient.empty()) orient = "edge " + std::to_string(e);
    }
  } catch (const Undecidable& ex) {
    orient = ex.what();
  }
  auto& c2 = r.add("recovered orientation matches", "orientation from combinatorics", edges, orient);
  if (orient.empty()) {
    std::string h = "radius used:";
    for (auto [rad, k] : radius_histogram) h += " " + std::to_string(rad) + "x" + std::to_string(k);
    c2.counterexample = h;
  }
  if (edges == 0) c2.status = Status::no_qualifying_instances;

  if (cx.mode == Mode::full) {
    std::string cls;
    try {
      const auto k = classify_all(cx, execution);
      for (int v = 0; v < n && cls.empty(); ++v)
        if (k[at(v)] != cx.complexity - cx.vertices[at(v)].deficiency) cls = "vertex " + std::to_string(v);
    } catch (const Undecidable& ex) {
      cls = ex.what();
    }
    r.add("recovered arc counts match", "deficiency from combinatorics", static_cast<std::size_t>(n), cls);
  }
  return r;
}

Report verify(const PolComplex& cx, Enumeration& en, Suite suite, Execution execution) {
  Report r;
  r.suite = to_string(suite);
  r.instance = to_string(cx.signature);
  Report theorems;
  if (suite == Suite::cubes || suite == Suite::all) {
    r.append(verify_engine(*en.ctx));
    theorems.append(verify_cubes(cx, en, execution));
  }
  if (suite == Suite::sageev || suite == Suite::all) theorems.append(verify_sageev(cx, execution));
  if (suite == Suite::crossing || suite == Suite::all) theorems.append(verify_crossing(cx, en));
  if (suite == Suite::curvature || suite == Suite::all) theorems.append(verify_curvature(cx, en, execution));
  if (is_exceptional(cx.signature))
    for (auto& c : theorems.checks)
      if (c.status == Status::fail && c.name != "document matches enumeration") c.status = Status::skipped_out_of_assumption;
  r.append(theorems);
  return r;
}

}  // namespace polycx
