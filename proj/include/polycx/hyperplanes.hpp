#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polycx/complex.hpp"

namespace polycx {

/// Parallel class of edges; carrier vertex i is edges[i], adjacent when opposite in a square.
struct Hyperplane {
  ArcId arc = kNoArc;
  std::vector<int> edges;
  Graph carrier;
};

struct HyperplaneSet {
  std::vector<Hyperplane> planes;
  std::vector<int> class_of_edge;
  std::vector<Square> squares;
  /// First edge whose label differs from its class label, or -1.
  int label_conflict = -1;

  /// Index of the hyperplane whose class carries `a`, or -1.
  int plane_of(ArcId a) const;
};

HyperplaneSet hyperplanes(const PolComplex& cx);
Graph hyperplane_graph(const PolComplex& cx, ArcId a);

/// Component label of every vertex once the class edges are deleted.
std::vector<int> halfspace_labels(const PolComplex& cx, const Hyperplane& h);

/// Deleting H_a leaves exactly the two strata of a, and both are connected.
Report separation_check(const PolComplex& cx, ArcId a);

struct CensusResult {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::size_t max_separating = 0;
  std::string counterexample;
};
/// For every vertex pair, the separating hyperplanes are exactly those of P Δ Q.
CensusResult separation_census(const PolComplex& cx, const HyperplaneSet& hs, Execution execution);

bool crossing_quadrant(const PolComplex& cx, ArcId a, ArcId b);
bool crossing_combinatorial(const SurfaceContext& ctx, ArcId a, ArcId b);
/// Some recorded triangulation T contains both arcs and T - {a, b} is a polygonalisation.
bool crossing_by_triangulation(const SurfaceContext& ctx, ArcId a, ArcId b);

struct CrossingGraph {
  std::vector<ArcId> arcs;  // vertex i is the hyperplane of arcs[i]
  Graph graph;

  int vertex_of(ArcId a) const;
};

CrossingGraph crossing_graph(const SurfaceContext& ctx, const std::vector<ArcId>& arcs);
CrossingGraph quadrant_crossing_graph(const PolComplex& cx);
const std::vector<int>& link(const CrossingGraph& cr, int h);
/// lnk(Ha) is a proper subset of lnk(Hb).
bool folded_via_links(const CrossingGraph& cr, int ha, int hb);
/// The crossing graph plus {H, H'} whenever lnk(H) is a proper subset of lnk(H').
Graph reconstruct_arc_graph(const CrossingGraph& cr);
/// Arcs joined when distinct and disjoint.
Graph arc_graph(const SurfaceContext& ctx, const std::vector<ArcId>& arcs);

/// Some geodesic from a to b in g has no consecutive pair with folded(u, w).
bool fold_free_geodesic_exists(const Graph& g, int a, int b, const std::function<bool(int, int)>& folded);

/// Distance bounds between the arc graph and the crossing graph over all arc pairs.
Report distance_comparison(const Enumeration& en);

}  // namespace polycx
