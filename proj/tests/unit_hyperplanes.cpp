#include <doctest.h>

#include <algorithm>

#include "polycx/hyperplanes.hpp"
#include "polycx/polygon_oracle.hpp"

using namespace polycx;

namespace {

Enumeration full(const std::string& text) { return enumerate_full(parse_signature(text)); }

}  // namespace

TEST_CASE("one hyperplane per diagonal") {
  const std::vector<std::size_t> diagonals = {2, 5, 9, 14, 20};
  for (int n = 4; n <= 8; ++n) {
    const auto en = full("0,0:" + std::to_string(n));
    const auto hs = hyperplanes(en.complex);
    CHECK(hs.planes.size() == diagonals[static_cast<std::size_t>(n - 4)]);
    CHECK(hs.label_conflict == -1);
  }
}

TEST_CASE("hyperplane edges are the dissections containing the diagonal") {
  const auto en = full("0,0:7");
  const auto hs = hyperplanes(en.complex);
  const auto dissections = enumerate_dissections(7);
  for (const auto& h : hs.planes) {
    const Chord c = engine_chord(*en.ctx, h.arc);
    const auto holding = std::count_if(dissections.begin(), dissections.end(), [&](const Dissection& d) {
      return std::find(d.begin(), d.end(), c) != d.end();
    });
    CHECK(static_cast<long>(h.edges.size()) == holding);
    CHECK(is_connected(h.carrier));
    for (int e : h.edges) CHECK(en.complex.edges[static_cast<std::size_t>(e)].arc == h.arc);
  }
}

TEST_CASE("hexagon carriers") {
  const auto en = full("0,0:6");
  const auto hs = hyperplanes(en.complex);
  int short_diagonals = 0, long_diagonals = 0;
  for (const auto& h : hs.planes) {
    const Chord c = engine_chord(*en.ctx, h.arc);
    const int span = std::min(c.j - c.i, 6 - (c.j - c.i));
    if (span == 2) {
      ++short_diagonals;
      CHECK(h.edges.size() == 11);
      CHECK(h.carrier.edge_count() == 15);
    } else {
      ++long_diagonals;
      CHECK(isomorphic(h.carrier, grid_graph(3, 3)));
    }
  }
  CHECK(short_diagonals == 6);
  CHECK(long_diagonals == 3);
}

TEST_CASE("deleting a hyperplane leaves its two strata") {
  for (const char* text : {"0,0:6", "0,1:3", "0,3:"}) {
    CAPTURE(text);
    const auto en = full(text);
    const auto& cx = en.complex;
    const auto hs = hyperplanes(cx);
    for (const auto& h : hs.planes) {
      const auto labels = halfspace_labels(cx, h);
      const auto s = stratum(cx, h.arc);
      REQUIRE_FALSE(s.pol.empty());
      REQUIRE_FALSE(s.complement.empty());
      for (int v : s.pol) CHECK(labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(s.pol[0])]);
      for (int v : s.complement)
        CHECK(labels[static_cast<std::size_t>(v)] == labels[static_cast<std::size_t>(s.complement[0])]);
      CHECK(labels[static_cast<std::size_t>(s.pol[0])] != labels[static_cast<std::size_t>(s.complement[0])]);
      CHECK(separation_check(cx, h.arc).passed());
    }
  }
}

TEST_CASE("separation census") {
  for (const char* text : {"0,0:7", "0,1:4", "0,3:"}) {
    CAPTURE(text);
    const auto en = full(text);
    const auto hs = hyperplanes(en.complex);
    const auto serial = separation_census(en.complex, hs, Execution::serial);
    const auto parallel = separation_census(en.complex, hs, Execution::parallel);
    const auto n = static_cast<std::size_t>(en.complex.vertex_count());
    CHECK(serial.pairs == n * (n - 1) / 2);
    CHECK(serial.violations == 0);
    CHECK(serial.max_separating <= static_cast<std::size_t>(2 * en.complex.complexity));
    CHECK(parallel.pairs == serial.pairs);
    CHECK(parallel.violations == serial.violations);
    CHECK(parallel.max_separating == serial.max_separating);
  }
}

TEST_CASE("hyperplanes of disjoint diagonals cross") {
  const auto en = full("0,0:7");
  const auto arcs = en.complex.arcs();
  for (ArcId a : arcs)
    for (ArcId b : arcs) {
      if (a == b) continue;
      const bool cross = !chord_cross(engine_chord(*en.ctx, a), engine_chord(*en.ctx, b));
      CHECK(crossing_quadrant(en.complex, a, b) == cross);
      CHECK(crossing_combinatorial(*en.ctx, a, b) == cross);
      CHECK(crossing_by_triangulation(*en.ctx, a, b) == cross);
    }
}

TEST_CASE("three crossing conditions agree on punctured surfaces") {
  for (const char* text : {"0,1:3", "0,1:4"}) {
    CAPTURE(text);
    const auto en = full(text);
    const auto arcs = en.complex.arcs();
    for (ArcId a : arcs)
      for (ArcId b : arcs) {
        if (a == b) continue;
        const bool q = crossing_quadrant(en.complex, a, b);
        CHECK(crossing_combinatorial(*en.ctx, a, b) == q);
        CHECK(crossing_by_triangulation(*en.ctx, a, b) == q);
      }
  }
}

TEST_CASE("quadrant crossing graph matches the surface crossing graph") {
  const auto en = full("0,1:4");
  const auto a = crossing_graph(*en.ctx, en.complex.arcs());
  const auto b = quadrant_crossing_graph(en.complex);
  REQUIRE(a.arcs == b.arcs);
  CHECK(a.graph.edges() == b.graph.edges());
}

TEST_CASE("link inclusion characterises folded pairs") {
  for (const char* text : {"0,1:3", "0,1:4"}) {
    CAPTURE(text);
    const auto en = full(text);
    const auto arcs = en.complex.arcs();
    const auto cr = crossing_graph(*en.ctx, arcs);
    int folded = 0;
    for (ArcId a : arcs)
      for (ArcId b : arcs) {
        if (a == b) continue;
        const auto roles = en.ctx->folded_roles(a, b);
        const bool a_outer = roles && roles->outer == a;
        folded += a_outer;
        CHECK(folded_via_links(cr, cr.vertex_of(a), cr.vertex_of(b)) == a_outer);
      }
    CHECK(folded > 0);
    const Graph ag = arc_graph(*en.ctx, arcs);
    CHECK(reconstruct_arc_graph(cr).edges() == ag.edges());
  }
}

TEST_CASE("arc graph in a disk joins disjoint diagonals") {
  const auto en = full("0,0:6");
  const auto arcs = en.complex.arcs();
  const Graph g = arc_graph(*en.ctx, arcs);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      CHECK(g.has_edge(static_cast<int>(i), static_cast<int>(j)) ==
            !chord_cross(engine_chord(*en.ctx, arcs[i]), engine_chord(*en.ctx, arcs[j])));
}

TEST_CASE("fold-free geodesics") {
  // Square 0-1-2-3: both geodesics 0..2 pass through 1 or 3.
  Graph g = cycle_graph(4);
  auto folded_01 = [](int u, int w) { return (u == 0 && w == 1) || (u == 1 && w == 0); };
  CHECK(fold_free_geodesic_exists(g, 0, 2, folded_01));
  auto both = [](int u, int w) { return std::min(u, w) == 0; };
  CHECK_FALSE(fold_free_geodesic_exists(g, 0, 2, both));
}

TEST_CASE("distance comparison") {
  for (const char* text : {"0,0:7", "0,1:4"}) {
    CAPTURE(text);
    CHECK(distance_comparison(full(text)).passed());
  }
}

TEST_CASE("unknown hyperplane") {
  const auto en = full("0,0:5");
  CHECK_THROWS_AS(hyperplane_graph(en.complex, arc_id(40)), UnknownArc);
  CHECK(hyperplanes(en.complex).plane_of(arc_id(40)) == -1);
}
