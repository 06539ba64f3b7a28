#include <doctest.h>

#include "polycx/signature.hpp"
#include "polycx/triangulation.hpp"

using namespace polycx;

namespace {

SurfaceSignature sig(int g, int s, std::vector<int> p) { return SurfaceSignature{g, s, std::move(p)}; }

}  // namespace

TEST_CASE("complexity and face count on hand-computed surfaces") {
  struct Row {
    SurfaceSignature s;
    int E, F;
  };
  // Worked by hand from the Euler characteristic of a triangulated surface.
  const std::vector<Row> rows = {
      {sig(0, 0, {5}), 2, 3},    {sig(0, 0, {6}), 3, 4},    {sig(1, 1, {}), 3, 2},
      {sig(0, 3, {}), 3, 2},     {sig(0, 2, {}), 0, 0},     {sig(0, 0, {2, 1}), 3, 3},
      {sig(0, 1, {1}), 1, 1},    {sig(0, 1, {4}), 4, 4},    {sig(0, 4, {}), 6, 4},
      {sig(2, 1, {}), 9, 6},     {sig(1, 0, {1}), 4, 3},    {sig(0, 0, {1, 1, 1}), 6, 5},
  };
  for (const auto& r : rows) {
    CAPTURE(to_string(r.s));
    CHECK(complexity_E(r.s) == r.E);
    CHECK(face_count_F(r.s) == r.F);
  }
}

TEST_CASE("side count identity 3F = 2E + p") {
  for (int g = 0; g <= 2; ++g)
    for (int s = 0; s <= 3; ++s)
      for (const auto& p : std::vector<std::vector<int>>{{}, {1}, {3}, {2, 1}, {1, 1, 2}}) {
        const auto x = sig(g, s, p);
        if (x.marked_points() < 1) continue;
        CHECK(3 * face_count_F(x) == 2 * complexity_E(x) + x.boundary_points());
      }
}

TEST_CASE("exceptional surfaces are those with fewer than three faces") {
  const std::vector<SurfaceSignature> table = {sig(1, 1, {}), sig(0, 3, {}),    sig(0, 1, {2}),
                                               sig(0, 0, {4}), sig(0, 0, {1, 1}), sig(0, 1, {1})};
  for (const auto& x : table) CHECK(is_exceptional(x));
  CHECK_FALSE(is_exceptional(sig(0, 0, {5})));
  CHECK_FALSE(is_exceptional(sig(0, 1, {3})));
  CHECK_FALSE(is_exceptional(sig(0, 0, {2, 1})));
  CHECK_FALSE(is_exceptional(sig(0, 4, {})));
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0,0:5", "0,3:", "1,1:", "0,0:2+1", "2,0:1+1+3"}) {
    const auto s = parse_signature(text);
    CHECK(to_string(s) == text);
    CHECK(parse_signature(to_string(s)) == s);
  }
  const auto h = parse_signature("0,0:2+1");
  CHECK(h.boundary_marked == std::vector<int>{2, 1});
  CHECK(h.boundary_count() == 2);
  CHECK(h.boundary_points() == 3);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_signature("0,0:5+");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_signature(""), ParseError);
  CHECK_THROWS_AS(parse_signature("0;0:5"), ParseError);
  CHECK_THROWS_AS(parse_signature("0,0:5x"), ParseError);
}

TEST_CASE("invalid signatures") {
  CHECK_THROWS_AS(parse_signature("0,0:0"), InvalidSignature);
  CHECK_THROWS_AS(parse_signature("0,0:"), InvalidSignature);
  CHECK_THROWS_AS(sig(-1, 1, {}).validate(), InvalidSignature);
  CHECK_THROWS_AS(sig(0, 1, {2, 0}).validate(), InvalidSignature);
}

TEST_CASE("base triangulation realises E and F") {
  for (const char* text : {"0,0:3", "0,0:5", "0,0:8", "0,1:1", "0,1:4", "0,3:", "0,4:", "1,1:", "0,0:2+1",
                           "0,0:1+1", "1,0:2", "2,1:"}) {
    CAPTURE(text);
    const auto s = parse_signature(text);
    const auto t = base_triangulation(s);
    CHECK(t.edge_count() == complexity_E(s));
    CHECK(t.triangle_count() == face_count_F(s));
    CHECK(euler_verify(t).passed());
    const auto again = base_triangulation(s);
    CHECK(again.edge_arcs() == t.edge_arcs());
    for (int k = 0; k < t.triangle_count(); ++k) CHECK(again.triangle(k).sides == t.triangle(k).sides);
  }
}

TEST_CASE("unsupported signatures") {
  CHECK_THROWS_AS(base_triangulation(sig(0, 1, {})), UnsupportedSignature);
  CHECK_THROWS_AS(base_triangulation(sig(0, 2, {})), UnsupportedSignature);
  CHECK_THROWS_AS(base_triangulation(sig(0, 0, {2})), UnsupportedSignature);
}
