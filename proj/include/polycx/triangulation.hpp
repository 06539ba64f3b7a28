#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "polycx/report.hpp"
#include "polycx/signature.hpp"
#include "polycx/types.hpp"

namespace polycx {

/// A side slot: side `side` of triangle `tri`. Side k runs from corner k to corner k+1.
struct Slot {
  int tri = -1;
  int side = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Side codes: an interior edge index (>= 0) or a boundary segment -(j+1).
constexpr bool is_boundary_code(int code) { return code < 0; }
constexpr int boundary_code(int j) { return -(j + 1); }
constexpr int boundary_index(int code) { return -code - 1; }

struct Triangle {
  std::array<int, 3> sides{};
  std::array<int, 3> corners{};  // marked-point labels
};

constexpr int next3(int k) { return (k + 1) % 3; }
constexpr int prev3(int k) { return (k + 2) % 3; }

/// The quadrilateral around a flippable edge. With slots (t1,k1) and (t2,k2):
/// A, B, C are corners k1, k1+1, k1+2 of t1 and D is corner k2+2 of t2.
/// The sides are bc, ca (in t1) and ad, db (in t2), as side codes.
struct Quad {
  Slot s1, s2;
  int a_pt = 0, b_pt = 0, c_pt = 0, d_pt = 0;
  int bc = 0, ca = 0, ad = 0, db = 0;
};

/// Oriented triangles glued along interior edges. Gluing reverses orientation:
/// if (t,k) is glued to (t',k') then corner k of t is corner k'+1 of t'.
class CombTriangulation {
 public:
  /// Assembles a triangulation without validating it (see euler_verify).
  static CombTriangulation from_parts(SurfaceSignature sig, std::vector<Triangle> triangles,
                                      std::vector<ArcId> edge_arcs, int boundary_slots, int marked_points);

  const SurfaceSignature& signature() const { return sig_; }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  int edge_count() const { return static_cast<int>(arcs_.size()); }
  int boundary_slot_count() const { return boundary_slots_; }
  int marked_point_count() const { return marked_points_; }

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }
  int side(Slot s) const { return triangle(s.tri).sides[static_cast<std::size_t>(s.side)]; }
  int corner(int t, int k) const { return triangle(t).corners[static_cast<std::size_t>(k)]; }

  ArcId arc(int e) const;
  const std::vector<ArcId>& edge_arcs() const { return arcs_; }
  /// Edge carrying `a`, or -1.
  int edge_of(ArcId a) const;
  bool contains(ArcId a) const { return edge_of(a) >= 0; }
  /// Sorted arc ids of all interior edges.
  ArcSet arc_set() const;

  /// The two slots of interior edge e; entries are {-1,-1} when malformed.
  const std::array<Slot, 2>& edge_slots(int e) const;
  /// Slot glued to `s`; s must be an interior slot.
  Slot partner(Slot s) const;
  /// Marked-point labels of e's endpoints, smaller first.
  std::pair<int, int> endpoints(int e) const;

  bool is_flippable(int e) const;
  Quad quad(int e) const;
  /// Replaces e by the other diagonal of its quadrilateral; the new edge keeps index e
  /// and carries `new_arc`. The new slots are (t1,2) and (t2,2).
  CombTriangulation flipped(int e, ArcId new_arc) const;

 private:
  void index_slots();
  void check_edge(int e) const;

  SurfaceSignature sig_;
  std::vector<Triangle> triangles_;
  std::vector<ArcId> arcs_;
  std::vector<std::array<Slot, 2>> slots_;
  int boundary_slots_ = 0;
  int marked_points_ = 0;
};

/// Deterministic triangulation of a fundamental polygon, fanned from vertex 0.
/// For a disk with n marked points, polygon vertex i carries label i and edge j
/// is the diagonal {0, j+2}.
CombTriangulation base_triangulation(const SurfaceSignature& sig);

Report euler_verify(const CombTriangulation& t);

struct FoldedTriangle {
  ArcId outer = kNoArc;  // α, or kNoArc when the outer side is a boundary segment
  ArcId doubled = kNoArc;  // β
  int triangle = -1;
};
std::vector<FoldedTriangle> folded_triangles(const CombTriangulation& t);

struct RegionSide {
  int code = 0;  // side code; an edge index means a kept arc
  Slot slot;
};

struct Region {
  std::vector<int> triangles;
  std::vector<std::vector<RegionSide>> boundary_cycles;
  int interior_marked_count = 0;
  int euler_characteristic = 0;
  bool is_disk = false;
  int side_count = 0;
};

struct RegionDecomposition {
  std::vector<Region> regions;
  std::vector<int> triangle_region;

  int region_of(Slot s) const { return triangle_region[static_cast<std::size_t>(s.tri)]; }
};

/// Cuts the surface along the kept edges; `removed[e]` marks edges that are erased.
RegionDecomposition regions_after_removal(const CombTriangulation& t, const std::vector<bool>& removed);
/// Convenience: keeps exactly the edges whose arcs are in `keep` (sorted).
RegionDecomposition regions_keeping(const CombTriangulation& t, const ArcSet& keep);

/// Every region a disk with at least three sides and no interior marked point.
bool is_polygonal(const RegionDecomposition& d);

}  // namespace polycx
