#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "polycx/triangulation.hpp"

namespace polycx {

/// Coordinates of an arc against the base triangulation: entry f is the
/// intersection number with base edge f, or -1 when the arc is that edge.
using Coords = std::vector<int>;

/// Append-only map from coordinate vectors to dense arc ids. Base edge f is
/// registered first with id f. Insert-or-get is safe from several threads.
class ArcRegistry {
 public:
  explicit ArcRegistry(int base_edges);

  ArcId intern(const Coords& coords);
  std::optional<ArcId> find(const Coords& coords) const;
  /// The returned reference stays valid for the registry's lifetime.
  const Coords& coords(ArcId a) const;
  std::size_t size() const;
  int base_edges() const { return base_edges_; }

 private:
  int base_edges_;
  mutable std::shared_mutex mutex_;
  std::map<Coords, ArcId> ids_;
  std::vector<std::unique_ptr<const Coords>> records_;
};

/// Counts of one lamination on the quadrilateral of a flip.
struct QuadValues {
  int x = 0;  // old diagonal
  int a = 0, b = 0, c = 0, d = 0;  // sides bc, ca, ad, db
};

/// Value of a lamination on the new diagonal after a flip. `row_is_other_edge` marks
/// a lamination that is itself an edge of the triangulation other than the diagonal.
/// Returns -1 when the lamination is the new diagonal.
int flip_value(const QuadValues& v, bool row_is_other_edge);

/// Values of a row at the quadrilateral of edge e; boundary sides read as 0.
QuadValues quad_values(const Quad& q, int e, const std::vector<int>& row);

/// Replaces row[e] by its value after flipping e in t.
void transport_flip(const CombTriangulation& t, int e, std::vector<int>& row);

struct TriangulationNode {
  CombTriangulation tri;
  int parent = -1;  // node index
  int via_edge = -1;  // edge of the parent that was flipped
  int depth = 0;
};

/// Shared state for one surface: registry, every triangulation reached so far
/// with its flip-path parent, and a witness triangulation per arc.
class SurfaceContext {
 public:
  explicit SurfaceContext(const SurfaceSignature& sig);

  const SurfaceSignature& signature() const { return sig_; }
  ArcRegistry& registry() { return registry_; }
  const ArcRegistry& registry() const { return registry_; }
  const CombTriangulation& base() const { return nodes_.front().tri; }

  /// Flips e, identifying the new edge through the registry. Thread-safe.
  CombTriangulation flip(const CombTriangulation& t, int e);
  /// Column of the new diagonal, computed from the quadrilateral of t.
  Coords flipped_coords(const CombTriangulation& t, int e) const;

  /// Records t (if new) and returns its node index. Not thread-safe.
  int add_triangulation(CombTriangulation t, int parent, int via_edge);
  std::optional<int> find_triangulation(const ArcSet& arcs) const;
  const TriangulationNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  int triangulation_count() const { return static_cast<int>(nodes_.size()); }

  /// First recorded triangulation containing a, or -1.
  int witness(ArcId a) const;
  const CombTriangulation& witness_triangulation(ArcId a) const;
  /// Node indices from the base to `node`, inclusive.
  std::vector<int> path_to(int node) const;

  /// Row of a lamination given at the base, carried along the flip path to `node`.
  std::vector<int> transport_row(std::vector<int> row, int node) const;

  int intersection_number(ArcId a, ArcId b) const;
  std::pair<int, int> endpoints(ArcId a) const;

  struct FoldRoles {
    ArcId outer;  // the loop α
    ArcId doubled;  // β
  };
  /// Roles of a folded pair in either order, or nullopt.
  std::optional<FoldRoles> folded_roles(ArcId a, ArcId b) const;
  bool is_folded_pair(ArcId a, ArcId b) const { return folded_roles(a, b).has_value(); }
  bool cuts_off_once_marked_monogon(ArcId a) const;

 private:
  void check_arc(ArcId a) const;

  SurfaceSignature sig_;
  ArcRegistry registry_;
  std::vector<TriangulationNode> nodes_;
  std::map<ArcSet, int> node_of_;
  std::vector<int> witness_;
};

}  // namespace polycx
