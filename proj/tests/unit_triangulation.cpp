#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "polycx/complex.hpp"
#include "polycx/triangulation.hpp"

using namespace polycx;

namespace {

using Face = std::tuple<int, int, int, int, int, int>;

// Triangles up to rotation, as corner and side triples.
std::multiset<Face> faces(const CombTriangulation& t) {
  std::multiset<Face> out;
  for (const auto& tr : t.triangles()) {
    std::vector<Face> rotations;
    for (int r = 0; r < 3; ++r)
      rotations.emplace_back(tr.corners[r], tr.corners[(r + 1) % 3], tr.corners[(r + 2) % 3], tr.sides[r],
                             tr.sides[(r + 1) % 3], tr.sides[(r + 2) % 3]);
    out.insert(*std::min_element(rotations.begin(), rotations.end()));
  }
  return out;
}

std::vector<int> flippable_edges(const CombTriangulation& t) {
  std::vector<int> out;
  for (int e = 0; e < t.edge_count(); ++e)
    if (t.is_flippable(e)) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("pentagon fan") {
  const auto t = base_triangulation(parse_signature("0,0:5"));
  REQUIRE(t.edge_count() == 2);
  CHECK(t.endpoints(0) == std::pair{0, 2});
  CHECK(t.endpoints(1) == std::pair{0, 3});
  CHECK(t.boundary_slot_count() == 5);
  CHECK(t.marked_point_count() == 5);
  for (int e = 0; e < 2; ++e) {
    const auto slots = t.edge_slots(e);
    CHECK(t.partner(slots[0]) == slots[1]);
    CHECK(t.partner(slots[1]) == slots[0]);
  }
}

TEST_CASE("flip in a convex polygon replaces the diagonal of its quadrilateral") {
  const auto t = base_triangulation(parse_signature("0,0:7"));
  for (int e = 0; e < t.edge_count(); ++e) {
    // The two triangles holding both endpoints; the new diagonal joins their third corners.
    const auto [u, w] = t.endpoints(e);
    std::vector<int> apex;
    for (const auto& tr : t.triangles()) {
      const auto& c = tr.corners;
      if (std::count(c.begin(), c.end(), u) && std::count(c.begin(), c.end(), w))
        for (int x : c)
          if (x != u && x != w) apex.push_back(x);
    }
    REQUIRE(apex.size() == 2);
    const auto f = t.flipped(e, arc_id(99));
    CHECK(f.endpoints(e) == std::pair{std::min(apex[0], apex[1]), std::max(apex[0], apex[1])});
    CHECK(f.arc(e) == arc_id(99));
    CHECK(euler_verify(f).passed());
  }
}

TEST_CASE("flip is an involution on random walks") {
  std::mt19937 rng(7);
  for (const char* text : {"0,0:8", "0,1:4", "0,3:", "0,4:", "1,1:", "0,0:2+1", "0,0:1+1"}) {
    CAPTURE(text);
    auto t = base_triangulation(parse_signature(text));
    for (int step = 0; step < 40; ++step) {
      const auto es = flippable_edges(t);
      REQUIRE_FALSE(es.empty());
      const int e = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];
      const ArcId old = t.arc(e);
      const auto f = t.flipped(e, arc_id(1000 + step));
      CHECK(euler_verify(f).passed());
      const auto back = f.flipped(e, old);
      CHECK(back.edge_arcs() == t.edge_arcs());
      CHECK(faces(back) == faces(t));
      t = f;
    }
  }
}

TEST_CASE("folded triangle of the once-punctured monogon") {
  const auto t = base_triangulation(parse_signature("0,1:1"));
  REQUIRE(t.edge_count() == 1);
  REQUIRE(t.triangle_count() == 1);
  CHECK_FALSE(t.is_flippable(0));
  CHECK_THROWS_AS(t.flipped(0, arc_id(5)), NotFlippable);
  const auto folded = folded_triangles(t);
  REQUIRE(folded.size() == 1);
  CHECK(folded[0].outer == kNoArc);
  CHECK(folded[0].doubled == t.arc(0));
}

TEST_CASE("unknown edges") {
  const auto t = base_triangulation(parse_signature("0,0:5"));
  CHECK_THROWS_AS(t.arc(2), UnknownEdge);
  CHECK_THROWS_AS(t.arc(-1), UnknownEdge);
  CHECK_THROWS_AS(t.flipped(7, arc_id(1)), UnknownEdge);
}

TEST_CASE("regions after removing edges") {
  const auto t = base_triangulation(parse_signature("0,0:6"));
  const auto all = regions_keeping(t, t.arc_set());
  CHECK(all.regions.size() == 4);
  CHECK(is_polygonal(all));
  for (const auto& r : all.regions) CHECK(r.side_count == 3);

  const auto none = regions_keeping(t, {});
  REQUIRE(none.regions.size() == 1);
  CHECK(none.regions[0].is_disk);
  CHECK(none.regions[0].side_count == 6);
  CHECK(none.regions[0].euler_characteristic == 1);
  CHECK(is_polygonal(none));

  // The middle diagonal {0,3} alone splits the hexagon into two quadrilaterals.
  const auto mid = regions_keeping(t, {t.arc(1)});
  REQUIRE(mid.regions.size() == 2);
  for (const auto& r : mid.regions) CHECK(r.side_count == 4);
}

TEST_CASE("regions with interior points or topology are not polygons") {
  const auto mono = base_triangulation(parse_signature("0,1:1"));
  const auto d = regions_keeping(mono, {});
  REQUIRE(d.regions.size() == 1);
  CHECK(d.regions[0].interior_marked_count == 1);
  CHECK_FALSE(is_polygonal(d));
  CHECK(is_polygonal(regions_keeping(mono, mono.arc_set())));

  const auto torus = base_triangulation(parse_signature("1,1:"));
  const auto whole = regions_keeping(torus, {});
  REQUIRE(whole.regions.size() == 1);
  CHECK_FALSE(whole.regions[0].is_disk);
  CHECK(is_polygonal(regions_keeping(torus, torus.arc_set())));
}

TEST_CASE("euler characteristic of the complement") {
  // Removing k edges from a triangulated disk with F faces leaves F - k faces glued
  // into regions; with no cycle in the dual tree, every region is a disk.
  const auto t = base_triangulation(parse_signature("0,0:8"));
  for (int mask = 0; mask < (1 << t.edge_count()); ++mask) {
    std::vector<bool> removed(static_cast<std::size_t>(t.edge_count()));
    int kept = 0;
    for (int e = 0; e < t.edge_count(); ++e) {
      removed[static_cast<std::size_t>(e)] = (mask >> e) & 1;
      kept += !removed[static_cast<std::size_t>(e)];
    }
    const auto d = regions_after_removal(t, removed);
    CHECK(static_cast<int>(d.regions.size()) == kept + 1);
    int sides = 0;
    for (const auto& r : d.regions) {
      CHECK(r.is_disk);
      sides += r.side_count;
    }
    CHECK(sides == 8 + 2 * kept);
  }
}
