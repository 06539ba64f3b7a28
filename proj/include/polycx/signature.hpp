#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace polycx {

/// Topological type of a marked surface: genus, interior marked points, and
/// the number of marked points on each boundary component.
struct SurfaceSignature {
  int genus = 0;
  int interior_marked = 0;
  std::vector<int> boundary_marked;

  int boundary_count() const { return static_cast<int>(boundary_marked.size()); }
  int boundary_points() const;
  int marked_points() const { return interior_marked + boundary_points(); }

  /// Throws InvalidSignature when an invariant fails.
  void validate() const;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

int complexity_E(const SurfaceSignature& sig);
int face_count_F(const SurfaceSignature& sig);
bool is_exceptional(const SurfaceSignature& sig);

/// Parses "g,s:p1+p2+...". Throws ParseError (with the offending position) or InvalidSignature.
SurfaceSignature parse_signature(std::string_view text);
std::string to_string(const SurfaceSignature& sig);

}  // namespace polycx
