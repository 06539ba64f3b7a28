#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycx/arc_tracking.hpp"
#include "polycx/graph.hpp"
#include "polycx/parallel.hpp"
#include "polycx/report.hpp"

namespace polycx {

struct Polygonalisation {
  ArcSet arcs;
  int deficiency = 0;
};

/// Edge {v, w} with v < w; `upper` is the endpoint with one more arc.
struct ComplexEdge {
  int v = 0;
  int w = 0;
  ArcId arc = kNoArc;
  int upper = 0;

  int lower() const { return upper == v ? w : v; }
  int other(int x) const { return x == v ? w : v; }
};

/// Interval [bottom, top] all of whose intermediate arc sets are vertices.
struct Cube {
  int bottom = 0;
  int top = 0;
  int dimension = 0;
};

enum class Mode { full, ball };
enum class Source { engine, oracle };

/// A 4-cycle v0 v1 v2 v3 given by vertices and the edge ids e_i = {v_i, v_{i+1}}.
struct Square {
  std::array<int, 4> vertices{};
  std::array<int, 4> edges{};
};

class PolComplex {
 public:
  SurfaceSignature signature;
  int complexity = 0;  // E(S)
  Mode mode = Mode::full;
  Source source = Source::engine;
  int radius = 0;
  int center = -1;
  /// Arc id -> base coordinates, for arcs that occur in vertices.
  std::map<ArcId, Coords> arc_coords;
  std::vector<Polygonalisation> vertices;
  std::vector<ComplexEdge> edges;
  std::vector<bool> frontier;
  std::vector<int> distance;  // ball mode: distance from the center

  /// Sorts vertices by arc set, derives edges from the vertex set and builds the indexes.
  void build(std::vector<ArcSet> vertex_sets);
  /// Rebuilds the indexes after vertices and edges were filled in directly.
  void index();

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int vertex_of(const ArcSet& arcs) const;
  /// Edge id joining u and w, or -1.
  int edge_between(int u, int w) const;
  const Graph& graph() const { return graph_; }
  /// Edge ids at v.
  const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  std::vector<ArcId> arcs() const;
  bool is_frontier(int v) const { return !frontier.empty() && frontier[static_cast<std::size_t>(v)]; }

 private:
  std::map<ArcSet, int> index_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<std::vector<int>> incident_;
  Graph graph_;
};

struct EnumerationOptions {
  std::size_t vertex_cap = 200000;
  Execution execution = Execution::parallel;
};

struct Enumeration {
  std::shared_ptr<SurfaceContext> ctx;
  PolComplex complex;
  std::vector<int> witness;  // per vertex: a triangulation node containing it
};

/// Whether the arcs of T in `keep` cut the surface into polygons.
bool is_polygonalisation(const CombTriangulation& t, const ArcSet& keep);
/// Arcs of `keep` whose two sides lie in different regions.
ArcSet removable_in(const CombTriangulation& t, const ArcSet& keep);

ArcSet removable_arcs(const Enumeration& en, int v);
ArcSet addable_arcs(const Enumeration& en, int v);

/// Node indices of every triangulation containing `pinned`, reached by flipping only
/// edges outside it from node `start`. New triangulations are recorded in ctx.
std::vector<int> pinned_flip_closure(SurfaceContext& ctx, int start, const ArcSet& pinned);

/// Flip-graph BFS, level by level; each level's flips are evaluated in parallel
/// (or serially) and merged in frontier order so arc ids are reproducible.
void explore_flip_graph(SurfaceContext& ctx, std::size_t cap, Execution execution);

Enumeration enumerate_full(const SurfaceSignature& sig, const EnumerationOptions& options = {});
/// Exact ball: neighbourhoods of all vertices closer than `radius` are complete.
/// The default center is the base triangulation.
Enumeration enumerate_ball(const SurfaceSignature& sig, int radius, std::optional<ArcSet> center = std::nullopt,
                           const EnumerationOptions& options = {});

/// Cubes of dimension >= min_dimension.
std::vector<Cube> cubes(const PolComplex& cx, int min_dimension = 1);
/// counts[d] = number of d-cubes (index 0 counts vertices).
std::vector<std::size_t> cube_counts(const PolComplex& cx);
std::vector<Square> squares(const PolComplex& cx);

Report verify_square_lemma(const PolComplex& cx);

struct Stratum {
  std::vector<int> pol;  // vertices containing the arc
  std::vector<int> complement;
  std::vector<int> boundary_pol;  // ... from which it is removable
  std::vector<int> boundary_complement;  // ... to which it is addable
};
Stratum stratum(const PolComplex& cx, ArcId a);

/// Induced subgraph on vertices of deficiency <= 1 (vertex i is the i-th such vertex).
Graph flip_subcomplex(const PolComplex& cx);
/// The triangulation graph: one vertex per deficiency-0 vertex, one edge per flip.
Graph flip_graph(const PolComplex& cx);
Graph barycentric_subdivision(const Graph& g);

}  // namespace polycx
