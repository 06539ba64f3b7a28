#include "polycx/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polycx/graph.hpp"

namespace polycx {

CombTriangulation CombTriangulation::from_parts(SurfaceSignature sig, std::vector<Triangle> triangles,
                                                std::vector<ArcId> edge_arcs, int boundary_slots,
                                                int marked_points) {
  CombTriangulation t;
  t.sig_ = std::move(sig);
  t.triangles_ = std::move(triangles);
  t.arcs_ = std::move(edge_arcs);
  t.boundary_slots_ = boundary_slots;
  t.marked_points_ = marked_points;
  t.index_slots();
  return t;
}

void CombTriangulation::index_slots() {
  const Slot none{};
  slots_.assign(arcs_.size(), {none, none});
  for (int t = 0; t < triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) {
      const int code = triangle(t).sides[static_cast<std::size_t>(k)];
      if (code < 0 || code >= edge_count()) continue;
      auto& pair = slots_[static_cast<std::size_t>(code)];
      if (pair[0].tri < 0)
        pair[0] = {t, k};
      else if (pair[1].tri < 0)
        pair[1] = {t, k};
    }
}

void CombTriangulation::check_edge(int e) const {
  if (e < 0 || e >= edge_count()) throw UnknownEdge("no interior edge " + std::to_string(e));
}

ArcId CombTriangulation::arc(int e) const {
  check_edge(e);
  return arcs_[static_cast<std::size_t>(e)];
}

int CombTriangulation::edge_of(ArcId a) const {
  auto it = std::find(arcs_.begin(), arcs_.end(), a);
  return it == arcs_.end() ? -1 : static_cast<int>(it - arcs_.begin());
}

ArcSet CombTriangulation::arc_set() const {
  ArcSet out = arcs_;
  std::sort(out.begin(), out.end());
  return out;
}

const std::array<Slot, 2>& CombTriangulation::edge_slots(int e) const {
  check_edge(e);
  return slots_[static_cast<std::size_t>(e)];
}

Slot CombTriangulation::partner(Slot s) const {
  const auto& pair = edge_slots(side(s));
  return pair[0] == s ? pair[1] : pair[0];
}

std::pair<int, int> CombTriangulation::endpoints(int e) const {
  const Slot s = edge_slots(e)[0];
  int u = corner(s.tri, s.side);
  int w = corner(s.tri, next3(s.side));
  if (u > w) std::swap(u, w);
  return {u, w};
}

bool CombTriangulation::is_flippable(int e) const {
  const auto& pair = edge_slots(e);
  return pair[0].tri >= 0 && pair[1].tri >= 0 && pair[0].tri != pair[1].tri;
}

Quad CombTriangulation::quad(int e) const {
  if (!is_flippable(e)) throw NotFlippable("edge " + std::to_string(e) + " is not flippable");
  const auto& pair = edge_slots(e);
  Quad q;
  q.s1 = pair[0];
  q.s2 = pair[1];
  const int t1 = q.s1.tri;
  const int k1 = q.s1.side;
  const int t2 = q.s2.tri;
  const int k2 = q.s2.side;
  q.a_pt = corner(t1, k1);
  q.b_pt = corner(t1, next3(k1));
  q.c_pt = corner(t1, prev3(k1));
  q.d_pt = corner(t2, prev3(k2));
  q.bc = side({t1, next3(k1)});
  q.ca = side({t1, prev3(k1)});
  q.ad = side({t2, next3(k2)});
  q.db = side({t2, prev3(k2)});
  return q;
}

CombTriangulation CombTriangulation::flipped(int e, ArcId new_arc) const {
  const Quad q = quad(e);
  CombTriangulation out = *this;
  out.triangles_[static_cast<std::size_t>(q.s1.tri)] = Triangle{{q.ca, q.ad, e}, {q.c_pt, q.a_pt, q.d_pt}};
  out.triangles_[static_cast<std::size_t>(q.s2.tri)] = Triangle{{q.db, q.bc, e}, {q.d_pt, q.b_pt, q.c_pt}};
  out.arcs_[static_cast<std::size_t>(e)] = new_arc;
  out.index_slots();
  return out;
}

namespace {

// One side of the fundamental polygon: glued to its partner (pair >= 0) or a boundary segment.
struct PolygonSide {
  int pair = -1;
  bool inverse = false;
};

std::vector<PolygonSide> polygon_word(const SurfaceSignature& sig) {
  std::vector<PolygonSide> word;
  int next_pair = 0;
  auto letter = [&](int pair, bool inverse) { word.push_back({pair, inverse}); };
  for (int h = 0; h < sig.genus; ++h) {
    const int a = next_pair++;
    const int b = next_pair++;
    letter(a, false);
    letter(b, false);
    letter(a, true);
    letter(b, true);
  }
  // Without boundary the polygon's corner class becomes the last puncture.
  const int folds = sig.boundary_count() > 0 ? sig.interior_marked : sig.interior_marked - 1;
  for (int i = 0; i < folds; ++i) {
    const int c = next_pair++;
    letter(c, false);
    letter(c, true);
  }
  for (int j = 1; j < sig.boundary_count(); ++j) {
    const int d = next_pair++;
    letter(d, false);
    for (int i = 0; i < sig.boundary_marked[static_cast<std::size_t>(j)]; ++i) word.push_back({});
    letter(d, true);
  }
  if (sig.boundary_count() > 0)
    for (int i = 0; i < sig.boundary_marked.front(); ++i) word.push_back({});
  return word;
}

}  // namespace

CombTriangulation base_triangulation(const SurfaceSignature& sig) {
  sig.validate();
  const std::string name = to_string(sig);
  if (face_count_F(sig) < 1 || complexity_E(sig) < 0)
    throw UnsupportedSignature("no ideal triangulation of " + name);
  const auto word = polygon_word(sig);
  const int n = static_cast<int>(word.size());
  if (n < 3 || n != face_count_F(sig) + 2) throw UnsupportedSignature("no polygon model for " + name);

  // Polygon side i runs from vertex i to vertex i+1.
  std::map<int, std::vector<int>> pair_sides;
  for (int i = 0; i < n; ++i)
    if (word[static_cast<std::size_t>(i)].pair >= 0) pair_sides[word[static_cast<std::size_t>(i)].pair].push_back(i);

  DisjointSets vertex_sets(static_cast<std::size_t>(n));
  for (const auto& [pair, sides] : pair_sides) {
    const int i = sides[0];
    const int j = sides[1];
    vertex_sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>((j + 1) % n));
    vertex_sets.unite(static_cast<std::size_t>((i + 1) % n), static_cast<std::size_t>(j));
  }
  std::map<std::size_t, int> label_of_root;
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto root = vertex_sets.find(static_cast<std::size_t>(v));
    auto [it, fresh] = label_of_root.try_emplace(root, static_cast<int>(label_of_root.size()));
    label[static_cast<std::size_t>(v)] = it->second;
  }

  const int diagonals = n - 3;
  std::vector<int> side_code(static_cast<std::size_t>(n));
  int boundary = 0;
  for (int i = 0; i < n; ++i) {
    const auto& s = word[static_cast<std::size_t>(i)];
    side_code[static_cast<std::size_t>(i)] = s.pair >= 0 ? diagonals + s.pair : boundary_code(boundary++);
  }
  const int edges = diagonals + static_cast<int>(pair_sides.size());

  std::vector<Triangle> triangles;
  for (int i = 1; i <= n - 2; ++i) {
    Triangle t;
    t.corners = {label[0], label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(i + 1)]};
    t.sides[0] = i == 1 ? side_code[0] : i - 2;
    t.sides[1] = side_code[static_cast<std::size_t>(i)];
    t.sides[2] = i == n - 2 ? side_code[static_cast<std::size_t>(n - 1)] : i - 1;
    triangles.push_back(t);
  }
  std::vector<ArcId> arcs;
  for (int e = 0; e < edges; ++e) arcs.push_back(arc_id(e));

  auto t = CombTriangulation::from_parts(sig, std::move(triangles), std::move(arcs), boundary,
                                         static_cast<int>(label_of_root.size()));
  if (!euler_verify(t).passed()) throw UnsupportedSignature("polygon model does not realise " + name);
  return t;
}

RegionDecomposition regions_after_removal(const CombTriangulation& t, const std::vector<bool>& removed) {
  const int nt = t.triangle_count();
  auto is_removed = [&](int code) { return code >= 0 && removed[static_cast<std::size_t>(code)]; };
  auto corner_index = [](int tri, int k) { return static_cast<std::size_t>(3 * tri + k); };

  DisjointSets tri_sets(static_cast<std::size_t>(nt));
  DisjointSets corner_sets(static_cast<std::size_t>(3 * nt));
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!removed[static_cast<std::size_t>(e)]) continue;
    const auto& [s, r] = t.edge_slots(e);
    tri_sets.unite(static_cast<std::size_t>(s.tri), static_cast<std::size_t>(r.tri));
    corner_sets.unite(corner_index(s.tri, s.side), corner_index(r.tri, next3(r.side)));
    corner_sets.unite(corner_index(s.tri, next3(s.side)), corner_index(r.tri, r.side));
  }

  std::vector<bool> corner_interior(static_cast<std::size_t>(3 * nt), true);
  for (int tri = 0; tri < nt; ++tri)
    for (int k = 0; k < 3; ++k)
      if (!is_removed(t.triangle(tri).sides[static_cast<std::size_t>(k)])) {
        corner_interior[corner_sets.find(corner_index(tri, k))] = false;
        corner_interior[corner_sets.find(corner_index(tri, next3(k)))] = false;
      }

  RegionDecomposition out;
  out.triangle_region.assign(static_cast<std::size_t>(nt), -1);
  std::map<std::size_t, int> region_of_root;
  for (int tri = 0; tri < nt; ++tri) {
    auto [it, fresh] = region_of_root.try_emplace(tri_sets.find(static_cast<std::size_t>(tri)),
                                                  static_cast<int>(region_of_root.size()));
    if (fresh) out.regions.emplace_back();
    out.triangle_region[static_cast<std::size_t>(tri)] = it->second;
    out.regions[static_cast<std::size_t>(it->second)].triangles.push_back(tri);
  }

  std::vector<bool> visited(static_cast<std::size_t>(3 * nt), false);
  for (auto& region : out.regions) {
    std::set<std::size_t> vertex_roots;
    int removed_edges = 0;
    int kept_slots = 0;
    for (int tri : region.triangles)
      for (int k = 0; k < 3; ++k) {
        vertex_roots.insert(corner_sets.find(corner_index(tri, k)));
        const int code = t.triangle(tri).sides[static_cast<std::size_t>(k)];
        if (is_removed(code))
          ++removed_edges;  // once per slot
        else
          ++kept_slots;
      }
    removed_edges /= 2;

    for (int tri : region.triangles)
      for (int k = 0; k < 3; ++k) {
        if (visited[corner_index(tri, k)] || is_removed(t.triangle(tri).sides[static_cast<std::size_t>(k)])) continue;
        std::vector<RegionSide> cycle;
        Slot cur{tri, k};
        while (!visited[corner_index(cur.tri, cur.side)]) {
          visited[corner_index(cur.tri, cur.side)] = true;
          cycle.push_back({t.side(cur), cur});
          Slot next{cur.tri, next3(cur.side)};
          while (is_removed(t.side(next))) {
            const Slot across = t.partner(next);
            next = {across.tri, next3(across.side)};
          }
          cur = next;
        }
        region.boundary_cycles.push_back(std::move(cycle));
      }

    region.interior_marked_count = static_cast<int>(
        std::count_if(vertex_roots.begin(), vertex_roots.end(), [&](std::size_t r) { return corner_interior[r]; }));
    region.side_count = kept_slots;
    region.euler_characteristic = static_cast<int>(vertex_roots.size()) - (removed_edges + kept_slots) +
                                  static_cast<int>(region.triangles.size());
    region.is_disk = region.euler_characteristic == 1 && region.boundary_cycles.size() == 1;
  }
  return out;
}

RegionDecomposition regions_keeping(const CombTriangulation& t, const ArcSet& keep) {
  std::vector<bool> removed(static_cast<std::size_t>(t.edge_count()));
  for (int e = 0; e < t.edge_count(); ++e)
    removed[static_cast<std::size_t>(e)] = !std::binary_search(keep.begin(), keep.end(), t.arc(e));
  return regions_after_removal(t, removed);
}

bool is_polygonal(const RegionDecomposition& d) {
  return std::all_of(d.regions.begin(), d.regions.end(), [](const Region& r) {
    return r.is_disk && r.side_count >= 3 && r.interior_marked_count == 0;
  });
}

std::vector<FoldedTriangle> folded_triangles(const CombTriangulation& t) {
  std::vector<FoldedTriangle> out;
  for (int tri = 0; tri < t.triangle_count(); ++tri) {
    const auto& s = t.triangle(tri).sides;
    for (int k = 0; k < 3; ++k) {
      const int code = s[static_cast<std::size_t>(k)];
      if (code < 0 || code != s[static_cast<std::size_t>(next3(k))]) continue;
      const int outer = s[static_cast<std::size_t>(prev3(k))];
      out.push_back({outer >= 0 ? t.arc(outer) : kNoArc, t.arc(code), tri});
    }
  }
  return out;
}

Report euler_verify(const CombTriangulation& t) {
  Report report;
  report.suite = "triangulation";
  report.instance = to_string(t.signature());
  const auto& sig = t.signature();
  const int nt = t.triangle_count();
  const int ne = t.edge_count();

  auto expect = [&](const std::string& name, bool ok, const std::string& detail) {
    report.add(name, "triangulation invariants", 1, ok ? std::string{} : detail);
  };

  expect("face count", nt == face_count_F(sig),
         "have " + std::to_string(nt) + " triangles, want " + std::to_string(face_count_F(sig)));
  expect("edge count", ne == complexity_E(sig),
         "have " + std::to_string(ne) + " edges, want " + std::to_string(complexity_E(sig)));

  std::vector<int> edge_uses(static_cast<std::size_t>(std::max(ne, 0)), 0);
  std::vector<int> boundary_uses(static_cast<std::size_t>(std::max(t.boundary_slot_count(), 0)), 0);
  std::ostringstream slot_problems;
  for (int tri = 0; tri < nt; ++tri)
    for (int code : t.triangle(tri).sides) {
      if (code >= ne) {
        slot_problems << "side code " << code << " out of range; ";
      } else if (code >= 0) {
        ++edge_uses[static_cast<std::size_t>(code)];
      } else if (boundary_index(code) >= t.boundary_slot_count()) {
        slot_problems << "boundary index " << boundary_index(code) << " out of range; ";
      } else {
        ++boundary_uses[static_cast<std::size_t>(boundary_index(code))];
      }
    }
  for (int e = 0; e < ne; ++e)
    if (edge_uses[static_cast<std::size_t>(e)] != 2)
      slot_problems << "edge " << e << " has " << edge_uses[static_cast<std::size_t>(e)] << " slots; ";
  for (std::size_t j = 0; j < boundary_uses.size(); ++j)
    if (boundary_uses[j] != 1) slot_problems << "boundary slot " << j << " used " << boundary_uses[j] << " times; ";
  expect("boundary slot count", t.boundary_slot_count() == sig.boundary_points(),
         "have " + std::to_string(t.boundary_slot_count()) + ", want " + std::to_string(sig.boundary_points()));
  const std::string gluing = slot_problems.str();
  expect("gluing is a fixed-point-free involution", gluing.empty(), gluing);
  if (!gluing.empty()) return report;

  DisjointSets corners(static_cast<std::size_t>(3 * nt));
  std::ostringstream label_problems;
  for (int e = 0; e < ne; ++e) {
    const auto& [s, r] = t.edge_slots(e);
    const int pairs[2][2] = {{s.side, next3(r.side)}, {next3(s.side), r.side}};
    for (const auto& p : pairs) {
      corners.unite(static_cast<std::size_t>(3 * s.tri + p[0]), static_cast<std::size_t>(3 * r.tri + p[1]));
      if (t.corner(s.tri, p[0]) != t.corner(r.tri, p[1])) label_problems << "edge " << e << " joins distinct labels; ";
    }
  }
  std::map<std::size_t, int> class_label;
  std::set<std::size_t> boundary_classes;
  for (int tri = 0; tri < nt; ++tri)
    for (int k = 0; k < 3; ++k) {
      const auto root = corners.find(static_cast<std::size_t>(3 * tri + k));
      class_label.try_emplace(root, t.corner(tri, k));
      if (is_boundary_code(t.triangle(tri).sides[static_cast<std::size_t>(k)])) {
        boundary_classes.insert(root);
        boundary_classes.insert(corners.find(static_cast<std::size_t>(3 * tri + next3(k))));
      }
    }
  std::set<int> labels;
  for (const auto& [root, l] : class_label) labels.insert(l);
  if (labels.size() != class_label.size()) label_problems << "two vertex classes share a label; ";
  if (static_cast<int>(labels.size()) != t.marked_point_count()) label_problems << "label count mismatch; ";
  const std::string label_text = label_problems.str();
  expect("corner labels consistent", label_text.empty(), label_text);

  const int v = static_cast<int>(class_label.size());
  const int v_bnd = static_cast<int>(boundary_classes.size());
  expect("marked point count", v == sig.marked_points() && v_bnd == sig.boundary_points(),
         "have V=" + std::to_string(v) + " (boundary " + std::to_string(v_bnd) + "), want " +
             std::to_string(sig.marked_points()));
  const int chi = v - (ne + t.boundary_slot_count()) + nt;
  expect("euler characteristic", chi == 2 - 2 * sig.genus - sig.boundary_count(),
         "V - E + F = " + std::to_string(chi));

  const auto whole = regions_after_removal(t, std::vector<bool>(static_cast<std::size_t>(ne), true));
  expect("connected", whole.regions.size() == 1, std::to_string(whole.regions.size()) + " components");
  std::vector<int> have;
  for (const auto& region : whole.regions)
    for (const auto& cycle : region.boundary_cycles) have.push_back(static_cast<int>(cycle.size()));
  std::vector<int> want = sig.boundary_marked;
  std::sort(have.begin(), have.end());
  std::sort(want.begin(), want.end());
  expect("boundary components", have == want, "boundary cycle lengths do not match the signature");
  return report;
}

}  // namespace polycx
