#include "polycx/polygon_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace polycx {

Chord make_chord(int u, int w) { return u < w ? Chord{u, w} : Chord{w, u}; }

std::vector<Chord> chords(int n) {
  std::vector<Chord> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) out.push_back({i, j});
  return out;
}

bool chord_cross(const Chord& c1, const Chord& c2) {
  auto inside = [&](int x) { return c1.i < x && x < c1.j; };
  const bool a = inside(c2.i);
  const bool b = inside(c2.j);
  const bool shared = c2.i == c1.i || c2.i == c1.j || c2.j == c1.i || c2.j == c1.j;
  return !shared && a != b;
}

std::vector<Dissection> enumerate_dissections(int n, int limit) {
  if (n < 3) throw Error("a polygon needs at least 3 vertices");
  if (n > limit) throw Error("oracle limited to n <= " + std::to_string(limit));
  const auto all = chords(n);
  std::vector<Dissection> out;
  Dissection current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.push_back(current);
    for (std::size_t k = from; k < all.size(); ++k) {
      if (std::any_of(current.begin(), current.end(), [&](const Chord& c) { return chord_cross(c, all[k]); }))
        continue;
      current.push_back(all[k]);
      grow(k + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

PolComplex oracle_complex(int n, int limit) {
  const auto all = chords(n);
  PolComplex cx;
  cx.signature = SurfaceSignature{0, 0, {n}};
  cx.complexity = n - 3;
  cx.source = Source::oracle;
  for (std::size_t k = 0; k < all.size(); ++k) cx.arc_coords.emplace(arc_id(static_cast<std::int64_t>(k)), Coords{all[k].i, all[k].j});
  std::vector<ArcSet> sets;
  for (const auto& d : enumerate_dissections(n, limit)) {
    ArcSet s;
    for (const auto& c : d)
      s.push_back(arc_id(std::lower_bound(all.begin(), all.end(), c) - all.begin()));
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  cx.build(std::move(sets));
  cx.center = cx.vertex_count() - 1;
  return cx;
}

Chord engine_chord(const SurfaceContext& ctx, ArcId a) {
  const auto [u, w] = ctx.endpoints(a);
  return make_chord(u, w);
}

std::string compare_with_oracle(const Enumeration& en, int n) {
  const PolComplex oracle = oracle_complex(n);
  const PolComplex& cx = en.complex;
  const auto all = chords(n);
  std::map<ArcId, ArcId> to_oracle;
  for (ArcId a : cx.arcs()) {
    const Chord c = engine_chord(*en.ctx, a);
    auto it = std::lower_bound(all.begin(), all.end(), c);
    if (it == all.end() || *it != c) return "arc " + std::to_string(index(a)) + " is not a diagonal";
    to_oracle.emplace(a, arc_id(it - all.begin()));
  }
  if (cx.vertex_count() != oracle.vertex_count())
    return "vertex count " + std::to_string(cx.vertex_count()) + " vs " + std::to_string(oracle.vertex_count());
  if (cx.edges.size() != oracle.edges.size())
    return "edge count " + std::to_string(cx.edges.size()) + " vs " + std::to_string(oracle.edges.size());
  std::vector<int> image(static_cast<std::size_t>(cx.vertex_count()));
  for (int v = 0; v < cx.vertex_count(); ++v) {
    ArcSet s;
    for (ArcId a : cx.vertices[static_cast<std::size_t>(v)].arcs) s.push_back(to_oracle.at(a));
    std::sort(s.begin(), s.end());
    const int w = oracle.vertex_of(s);
    if (w < 0) return "engine vertex " + std::to_string(v) + " is not a dissection";
    image[static_cast<std::size_t>(v)] = w;
  }
  for (const auto& e : cx.edges) {
    const int f = oracle.edge_between(image[static_cast<std::size_t>(e.v)], image[static_cast<std::size_t>(e.w)]);
    if (f < 0) return "engine edge " + std::to_string(e.v) + "-" + std::to_string(e.w) + " missing in oracle";
    const auto& oe = oracle.edges[static_cast<std::size_t>(f)];
    if (oe.arc != to_oracle.at(e.arc) || oe.upper != image[static_cast<std::size_t>(e.upper)])
      return "engine edge " + std::to_string(e.v) + "-" + std::to_string(e.w) + " label or orientation differs";
  }
  return {};
}

}  // namespace polycx
