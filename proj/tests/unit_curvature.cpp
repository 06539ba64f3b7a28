#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "polycx/curvature.hpp"

using namespace polycx;

namespace {

Enumeration full(const std::string& text) { return enumerate_full(parse_signature(text)); }

// Whether the edges at v given by `mask` span a cube, read from arc sets.
bool spans_cube(const PolComplex& cx, int v, const std::vector<int>& at, unsigned mask) {
  const auto& arcs = cx.vertices[static_cast<std::size_t>(v)].arcs;
  std::vector<ArcId> chosen;
  for (std::size_t i = 0; i < at.size(); ++i)
    if ((mask >> i) & 1) chosen.push_back(cx.edges[static_cast<std::size_t>(at[i])].arc);
  for (unsigned sub = 0; sub < (1u << chosen.size()); ++sub) {
    ArcSet s = arcs;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (!((sub >> i) & 1)) continue;
      auto it = std::lower_bound(s.begin(), s.end(), chosen[i]);
      if (it != s.end() && *it == chosen[i]) s.erase(it);
      else s.insert(it, chosen[i]);
    }
    if (cx.vertex_of(s) < 0) return false;
  }
  return true;
}

// Edge sets of size >= 3 at v whose maximal proper subsets span cubes but which do not.
std::set<std::vector<int>> brute_force_systems(const PolComplex& cx, int v) {
  const auto& at = cx.incident(v);
  std::set<std::vector<int>> out;
  const unsigned full_mask = 1u << at.size();
  for (unsigned mask = 0; mask < full_mask; ++mask) {
    if (std::popcount(mask) < 3 || spans_cube(cx, v, at, mask)) continue;
    bool faces = true;
    for (std::size_t i = 0; i < at.size() && faces; ++i)
      if ((mask >> i) & 1) faces = spans_cube(cx, v, at, mask & ~(1u << i));
    if (!faces) continue;
    std::vector<int> edges;
    for (std::size_t i = 0; i < at.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(at[i]);
    out.insert(edges);
  }
  return out;
}

std::set<std::vector<int>> edge_sets(const std::vector<PositiveCurvatureSystem>& systems) {
  std::set<std::vector<int>> out;
  for (auto s : systems) {
    std::sort(s.edges.begin(), s.edges.end());
    out.insert(s.edges);
  }
  return out;
}

std::set<ArcSet> arc_sets(const std::vector<PositiveCurvatureSystem>& systems) {
  std::set<ArcSet> out;
  for (const auto& s : systems) out.insert(s.arcs);
  return out;
}

}  // namespace

TEST_CASE("dual fat graph of a disk polygonalisation is a tree") {
  const auto t = base_triangulation(parse_signature("0,0:7"));
  const auto all = dual_fat_graph(t, t.arc_set());
  CHECK(all.vertex_count == 5);
  CHECK(all.edges.size() == 4);
  std::size_t slots = 0;
  for (const auto& r : all.rotation) slots += r.size();
  CHECK(slots == 8);
  Graph g(all.vertex_count);
  for (const auto& e : all.edges) g.add_edge(e.u, e.w);
  CHECK(is_connected(g));
  const auto none = dual_fat_graph(t, {});
  CHECK(none.vertex_count == 1);
  CHECK(none.edges.empty());
}

TEST_CASE("fat graph of the once-punctured monogon has one vertex") {
  const auto t = base_triangulation(parse_signature("0,1:1"));
  const auto g = dual_fat_graph(t, t.arc_set());
  CHECK(g.vertex_count == 1);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.is_loop(0));
  CHECK(g.rotation[0].size() == 2);
}

TEST_CASE("cube search matches brute force on arc sets") {
  for (const char* text : {"0,0:7", "0,1:3", "0,1:4", "0,3:"}) {
    CAPTURE(text);
    const auto en = full(text);
    const auto& cx = en.complex;
    for (int v = 0; v < cx.vertex_count(); ++v) {
      const auto found = find_pcs_cubewise(cx, v);
      CHECK(edge_sets(found) == brute_force_systems(cx, v));
      for (const auto& s : found) {
        CHECK(s.base == v);
        CHECK(s.downward);
        CHECK(s.edges.size() >= 3);
      }
    }
  }
}

TEST_CASE("cube and curve searches agree") {
  for (const char* text : {"0,0:6", "0,1:3", "0,1:4", "0,3:"}) {
    CAPTURE(text);
    const auto en = full(text);
    for (int v = 0; v < en.complex.vertex_count(); ++v)
      CHECK(arc_sets(find_pcs_cubewise(en.complex, v)) == arc_sets(find_pcs_curvewise(en, v)));
  }
}

TEST_CASE("disks are non-positively curved") {
  for (int n = 4; n <= 8; ++n) {
    const auto en = full("0,0:" + std::to_string(n));
    CHECK(is_nonpositively_curved(en.complex, Execution::serial));
    CHECK(is_nonpositively_curved(en.complex, Execution::parallel));
  }
}

TEST_CASE("punctured triangle carries one system") {
  const auto en = full("0,1:3");
  std::size_t total = 0;
  for (int v = 0; v < en.complex.vertex_count(); ++v) {
    const auto systems = find_pcs_curvewise(en, v);
    for (const auto& s : systems) {
      CHECK(s.arcs.size() == 3);
      CHECK(s.cycle_regions.size() == 3);
      CHECK(s.cycle_arcs.size() == 3);
    }
    total += systems.size();
  }
  CHECK(total == 1);
  CHECK_FALSE(is_nonpositively_curved(en.complex));
}

TEST_CASE("orientation and deficiency recovery") {
  for (const char* text : {"0,0:7", "0,1:3", "0,1:4"}) {
    CAPTURE(text);
    const auto en = full(text);
    const auto& cx = en.complex;
    const auto serial = recover_orientations(cx, Execution::serial);
    const auto parallel = recover_orientations(cx, Execution::parallel);
    REQUIRE(serial.size() == cx.edges.size());
    for (std::size_t e = 0; e < cx.edges.size(); ++e) {
      CHECK(serial[e].upper == cx.edges[e].upper);
      CHECK(parallel[e].upper == serial[e].upper);
      CHECK(parallel[e].radius == serial[e].radius);
    }
    const auto k = classify_all(cx, Execution::parallel);
    for (int v = 0; v < cx.vertex_count(); ++v) {
      const int expect = cx.complexity - cx.vertices[static_cast<std::size_t>(v)].deficiency;
      CHECK(k[static_cast<std::size_t>(v)] == expect);
      CHECK(classify_deficiency(cx, v) == expect);
    }
  }
}

TEST_CASE("orientation is undecidable on the annulus") {
  const auto en = enumerate_ball(parse_signature("0,0:1+1"), 6);
  bool undecidable = false;
  for (int e = 0; e < static_cast<int>(en.complex.edges.size()); ++e) {
    if (!edge_certified(en.complex, e)) continue;
    try {
      recover_orientation(en.complex, e);
    } catch (const Undecidable&) {
      undecidable = true;
    }
  }
  CHECK(undecidable);
}

TEST_CASE("ball certification") {
  const auto en = enumerate_ball(parse_signature("0,0:2+1"), 6);
  const auto& cx = en.complex;
  int certified = 0, systems = 0, triangles = 0;
  for (int v = 0; v < cx.vertex_count(); ++v) {
    const bool ok = cx.distance[static_cast<std::size_t>(v)] + cx.complexity <= cx.radius;
    CHECK(vertex_certified(cx, v) == ok);
    if (!ok) {
      CHECK_THROWS_AS(find_pcs_cubewise(cx, v), FrontierVertex);
      continue;
    }
    ++certified;
    const auto cube = find_pcs_cubewise(cx, v);
    CHECK(arc_sets(cube) == arc_sets(find_pcs_curvewise(en, v)));
    systems += static_cast<int>(cube.size());
    for (const auto& s : cube) triangles += s.edges.size() == 3;
  }
  CHECK(certified > 0);
  CHECK(systems >= 1);
  CHECK(triangles >= 1);
  CHECK_THROWS_AS(classify_all(cx, Execution::serial), ModeError);
  CHECK_THROWS_AS(is_nonpositively_curved(cx), ModeError);
}

TEST_CASE("ball orientations match where certified") {
  const auto en = enumerate_ball(parse_signature("0,0:2+1"), 8);
  const auto& cx = en.complex;
  OrientationSolver solver(cx);
  solver.precompute(Execution::parallel);
  int checked = 0;
  for (int e = 0; e < static_cast<int>(cx.edges.size()); ++e) {
    if (!edge_certified(cx, e)) continue;
    CHECK(solver.recover(e).upper == cx.edges[static_cast<std::size_t>(e)].upper);
    ++checked;
  }
  CHECK(checked > 0);
}
