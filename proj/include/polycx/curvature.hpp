#pragma once

#include <utility>
#include <vector>

#include "polycx/complex.hpp"

namespace polycx {

struct FatEdge {
  ArcId arc = kNoArc;
  int u = 0;
  int w = 0;
};

/// Vertex per polygon, edge per arc joining the polygons on its two sides.
struct FatGraph {
  int vertex_count = 0;
  std::vector<FatEdge> edges;
  /// Edge ids met while walking each polygon's boundary; a loop shows up twice.
  std::vector<std::vector<int>> rotation;

  bool is_loop(int e) const { return edges[static_cast<std::size_t>(e)].u == edges[static_cast<std::size_t>(e)].w; }
};

FatGraph dual_fat_graph(const CombTriangulation& t, const ArcSet& keep);
FatGraph dual_fat_graph(const Enumeration& en, int v);

struct PositiveCurvatureSystem {
  int base = -1;
  ArcSet arcs;
  std::vector<int> edges;  // cube search: the complex edges at the base
  bool downward = true;  // cube search: every edge leads to a smaller vertex
  // Curve search: polygon i, then arc i into polygon i + 1 (cyclically).
  std::vector<int> cycle_regions;
  std::vector<ArcId> cycle_arcs;
};

/// Ball mode: the vertex's cubes all lie inside the ball (distance + E <= radius).
bool vertex_certified(const PolComplex& cx, int v);
/// Ball mode: the (E + 2)-neighbourhood of the edge lies inside the ball.
bool edge_certified(const PolComplex& cx, int e);

/// Edge sets at v whose proper subsets span cubes but which span none themselves.
/// Uses only the graph of the complex. Throws FrontierVertex if v is not certified.
std::vector<PositiveCurvatureSystem> find_pcs_cubewise(const PolComplex& cx, int v);
/// One system per embedded cycle of length >= 3 in the dual fat graph.
std::vector<PositiveCurvatureSystem> find_pcs_curvewise(const Enumeration& en, int v);

enum class Evidence { curvature, parallel_curvature, degree };

struct Orientation {
  int upper = -1;
  Evidence via = Evidence::degree;
  int squares = 0;  // square steps to the parallel edge carrying the evidence
  int radius = 0;  // neighbourhood radius holding the deciding evidence
};

/// Decides the direction of edges from unlabeled complex combinatorics.
/// Systems are computed per vertex on first use.
class OrientationSolver {
 public:
  explicit OrientationSolver(const PolComplex& cx);

  /// Fills the per-vertex cache for every certified vertex.
  void precompute(Execution execution);
  /// Throws FrontierVertex for uncertified edges, Undecidable on conflicting or missing evidence.
  Orientation recover(int e);

 private:
  /// Size of the smallest system at v containing edge e, or 0.
  int system_size(int v, int e);

  const PolComplex& cx_;
  std::vector<std::vector<int>> squares_at_edge_;
  std::vector<Square> squares_;
  std::vector<std::vector<std::pair<int, int>>> pcs_edges_;
  std::vector<char> known_;
};

Orientation recover_orientation(const PolComplex& cx, int e);
std::vector<Orientation> recover_orientations(const PolComplex& cx, Execution execution);

/// |P| from the longest ascending chain of recovered orientations. Full mode only.
int classify_deficiency(const PolComplex& cx, int v);
std::vector<int> classify_all(const PolComplex& cx, Execution execution);

/// No vertex carries a positive curvature system. Full mode only.
bool is_nonpositively_curved(const PolComplex& cx, Execution execution = Execution::parallel);

}  // namespace polycx
