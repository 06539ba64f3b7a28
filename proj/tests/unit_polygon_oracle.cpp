#include <doctest.h>

#include <set>

#include "polycx/polygon_oracle.hpp"

using namespace polycx;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("diagonal count") {
  for (int n = 3; n <= 10; ++n) CHECK(chords(n).size() == static_cast<std::size_t>(n * (n - 3) / 2));
  const auto c = chords(5);
  CHECK(c.front() == Chord{0, 2});
  CHECK(c.back() == Chord{2, 4});
  CHECK(make_chord(3, 1) == Chord{1, 3});
}

TEST_CASE("chord crossing") {
  CHECK(chord_cross({0, 2}, {1, 3}));
  CHECK(chord_cross({1, 3}, {0, 2}));
  CHECK_FALSE(chord_cross({0, 2}, {0, 3}));
  CHECK_FALSE(chord_cross({0, 2}, {3, 5}));
  CHECK_FALSE(chord_cross({1, 4}, {2, 3}));
  CHECK(chord_cross({0, 3}, {2, 5}));
}

TEST_CASE("dissection counts are little Schroeder numbers") {
  const std::vector<std::size_t> expect = {1, 3, 11, 45, 197, 903, 4279, 20793};
  for (int n = 3; n <= 10; ++n) CHECK(enumerate_dissections(n).size() == expect[static_cast<std::size_t>(n - 3)]);
  CHECK_THROWS_AS(enumerate_dissections(11), Error);
  CHECK_THROWS_AS(enumerate_dissections(2), Error);
  CHECK(enumerate_dissections(11, 11).size() == 103049);
}

TEST_CASE("dissections are pairwise non-crossing and sorted") {
  const auto all = enumerate_dissections(7);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::set<Dissection> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  for (const auto& d : all)
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) CHECK_FALSE(chord_cross(d[i], d[j]));
}

TEST_CASE("oracle complex cube counts") {
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    const auto dissections = enumerate_dissections(n);
    const auto cx = oracle_complex(n);
    CHECK(cx.source == Source::oracle);
    CHECK(cx.complexity == n - 3);
    const auto counts = cube_counts(cx);
    for (int d = 0; d <= n - 3; ++d) {
      long long expect = 0;
      // A d-cube is a dissection together with d of its chords to drop.
      for (const auto& diss : dissections) expect += binomial(static_cast<int>(diss.size()), d);
      REQUIRE(counts.size() > static_cast<std::size_t>(d));
      CHECK(counts[static_cast<std::size_t>(d)] == static_cast<std::size_t>(expect));
    }
  }
}

TEST_CASE("hexagon oracle") {
  const auto counts = cube_counts(oracle_complex(6));
  CHECK(counts == std::vector<std::size_t>{45, 93, 63, 14});
}

TEST_CASE("engine agrees with oracle arc for arc") {
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    const auto en = enumerate_full(parse_signature("0,0:" + std::to_string(n)));
    CHECK(compare_with_oracle(en, n).empty());
    std::set<Chord> seen;
    for (ArcId a : en.complex.arcs()) seen.insert(engine_chord(*en.ctx, a));
    CHECK(seen.size() == chords(n).size());
  }
}

TEST_CASE("oracle comparison detects a changed complex") {
  auto en = enumerate_full(parse_signature("0,0:6"));
  std::vector<ArcSet> sets;
  for (const auto& v : en.complex.vertices) sets.push_back(v.arcs);
  sets.pop_back();
  en.complex.build(sets);
  CHECK_FALSE(compare_with_oracle(en, 6).empty());
}
