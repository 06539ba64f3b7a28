#include "polycx/arc_tracking.hpp"

#include <algorithm>
#include <mutex>

namespace polycx {

ArcRegistry::ArcRegistry(int base_edges) : base_edges_(base_edges) {
  for (int f = 0; f < base_edges; ++f) {
    Coords c(static_cast<std::size_t>(base_edges), 0);
    c[static_cast<std::size_t>(f)] = -1;
    intern(c);
  }
}

ArcId ArcRegistry::intern(const Coords& coords) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = ids_.find(coords); it != ids_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto [it, fresh] = ids_.try_emplace(coords, arc_id(static_cast<std::int64_t>(records_.size())));
  if (fresh) records_.push_back(std::make_unique<const Coords>(coords));
  return it->second;
}

std::optional<ArcId> ArcRegistry::find(const Coords& coords) const {
  std::shared_lock lock(mutex_);
  if (auto it = ids_.find(coords); it != ids_.end()) return it->second;
  return std::nullopt;
}

const Coords& ArcRegistry::coords(ArcId a) const {
  std::shared_lock lock(mutex_);
  if (index(a) < 0 || static_cast<std::size_t>(index(a)) >= records_.size())
    throw UnknownArc("no arc " + std::to_string(index(a)));
  return *records_[static_cast<std::size_t>(index(a))];
}

std::size_t ArcRegistry::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

namespace {

// Pieces of a minimal arc inside one triangle with corners q0, q1, q2, where
// side_count[i] is the number of crossings with the side opposite q_i.
struct Pieces {
  std::array<int, 3> normal{};  // arcs cutting off each corner
  std::array<int, 3> terminal{};  // arc ends at each corner
};

Pieces decompose(int x0, int x1, int x2) {
  const std::array<int, 3> x{x0, x1, x2};
  Pieces p;
  for (int k = 0; k < 3; ++k) {
    const int i = next3(k);
    const int j = prev3(k);
    const int excess = x[static_cast<std::size_t>(k)] - x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
    if (excess == 1 || excess == 2) {
      p.terminal[static_cast<std::size_t>(k)] = excess;
      p.normal[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(j)];
      p.normal[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(i)];
      return p;
    }
    if (excess > 2) throw Error("coordinates are not normal in a triangle");
  }
  if ((x0 + x1 + x2) % 2 != 0) throw Error("coordinates are not normal in a triangle");
  for (int k = 0; k < 3; ++k)
    p.normal[static_cast<std::size_t>(k)] =
        (x[static_cast<std::size_t>(next3(k))] + x[static_cast<std::size_t>(prev3(k))] - x[static_cast<std::size_t>(k)]) / 2;
  return p;
}

struct Interval {
  int lo = 0;
  int hi = 0;
};

int overlap(Interval u, Interval w) { return std::max(0, std::min(u.hi, w.hi) - std::max(u.lo, w.lo)); }

}  // namespace

int flip_value(const QuadValues& v, bool row_is_other_edge) {
  if (v.x == -1) return 1;
  if (row_is_other_edge) return 0;
  // Quadrilateral p0 p1 p2 p3 = B C A D; the old diagonal joins p0 and p2.
  // First triangle (p0, p1, p2), second (p0, p2, p3).
  const Pieces t1 = decompose(v.b, v.x, v.a);
  const Pieces t2 = decompose(v.c, v.d, v.x);
  const int n_p0 = t1.normal[0], n_p1 = t1.normal[1];
  const int m_p0 = t2.normal[0], m_p3 = t2.normal[2];
  const int t_p1 = t1.terminal[1], u_p3 = t2.terminal[2];

  // Strands across the old diagonal, counted from p0.
  const Interval side_a{0, n_p0};
  const Interval corner_p1{n_p0, n_p0 + t_p1};
  const Interval side_b{n_p0 + t_p1, v.x};
  const Interval side_d{0, m_p0};
  const Interval corner_p3{m_p0, m_p0 + u_p3};
  const Interval side_c{m_p0 + u_p3, v.x};
  if (overlap(corner_p1, corner_p3) > 0) return -1;

  return overlap(side_a, side_c) + overlap(side_b, side_d) + n_p1 + m_p3 + t1.terminal[0] + t1.terminal[2] +
         t2.terminal[0] + t2.terminal[1];
}

QuadValues quad_values(const Quad& q, int e, const std::vector<int>& row) {
  auto at = [&](int code) { return code >= 0 ? row[static_cast<std::size_t>(code)] : 0; };
  return QuadValues{at(e), at(q.bc), at(q.ca), at(q.ad), at(q.db)};
}

void transport_flip(const CombTriangulation& t, int e, std::vector<int>& row) {
  const Quad q = t.quad(e);
  bool other_edge = false;
  for (int f = 0; f < static_cast<int>(row.size()); ++f)
    if (f != e && row[static_cast<std::size_t>(f)] == -1) other_edge = true;
  row[static_cast<std::size_t>(e)] = flip_value(quad_values(q, e, row), other_edge);
}

SurfaceContext::SurfaceContext(const SurfaceSignature& sig)
    : sig_(sig), registry_(complexity_E(sig) > 0 ? complexity_E(sig) : 0) {
  add_triangulation(base_triangulation(sig), -1, -1);
}

Coords SurfaceContext::flipped_coords(const CombTriangulation& t, int e) const {
  const Quad q = t.quad(e);
  const int n = registry_.base_edges();
  auto coords_of = [&](int code) -> const Coords* {
    return code >= 0 ? &registry_.coords(t.arc(code)) : nullptr;
  };
  const Coords* cx = coords_of(e);
  const Coords* side[4] = {coords_of(q.bc), coords_of(q.ca), coords_of(q.ad), coords_of(q.db)};
  Coords out(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const auto rr = static_cast<std::size_t>(r);
    auto at = [&](const Coords* c) { return c ? (*c)[rr] : 0; };
    const QuadValues v{(*cx)[rr], at(side[0]), at(side[1]), at(side[2]), at(side[3])};
    // Base arc r is an edge of t other than e.
    const int host = t.edge_of(arc_id(r));
    out[rr] = flip_value(v, host >= 0 && host != e);
  }
  return out;
}

CombTriangulation SurfaceContext::flip(const CombTriangulation& t, int e) {
  return t.flipped(e, registry_.intern(flipped_coords(t, e)));
}

int SurfaceContext::add_triangulation(CombTriangulation t, int parent, int via_edge) {
  auto arcs = t.arc_set();
  if (auto it = node_of_.find(arcs); it != node_of_.end()) return it->second;
  const int id = static_cast<int>(nodes_.size());
  const int depth = parent >= 0 ? node(parent).depth + 1 : 0;
  for (ArcId a : arcs) {
    if (static_cast<std::size_t>(index(a)) >= witness_.size()) witness_.resize(static_cast<std::size_t>(index(a)) + 1, -1);
    if (witness_[static_cast<std::size_t>(index(a))] < 0) witness_[static_cast<std::size_t>(index(a))] = id;
  }
  node_of_.emplace(std::move(arcs), id);
  nodes_.push_back({std::move(t), parent, via_edge, depth});
  return id;
}

std::optional<int> SurfaceContext::find_triangulation(const ArcSet& arcs) const {
  if (auto it = node_of_.find(arcs); it != node_of_.end()) return it->second;
  return std::nullopt;
}

void SurfaceContext::check_arc(ArcId a) const {
  if (index(a) < 0 || static_cast<std::size_t>(index(a)) >= registry_.size())
    throw UnknownArc("no arc " + std::to_string(index(a)));
}

int SurfaceContext::witness(ArcId a) const {
  check_arc(a);
  const auto i = static_cast<std::size_t>(index(a));
  return i < witness_.size() ? witness_[i] : -1;
}

const CombTriangulation& SurfaceContext::witness_triangulation(ArcId a) const {
  const int w = witness(a);
  if (w < 0) throw ArcNotWitnessed("arc " + std::to_string(index(a)) + " lies in no recorded triangulation");
  return node(w).tri;
}

std::vector<int> SurfaceContext::path_to(int n) const {
  std::vector<int> path;
  for (int v = n; v >= 0; v = node(v).parent) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> SurfaceContext::transport_row(std::vector<int> row, int n) const {
  const auto path = path_to(n);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto& step = node(path[i]);
    transport_flip(node(path[i - 1]).tri, step.via_edge, row);
  }
  return row;
}

int SurfaceContext::intersection_number(ArcId a, ArcId b) const {
  check_arc(a);
  check_arc(b);
  if (a == b) return 0;
  if (witness(b) < 0) std::swap(a, b);
  const int host = witness(b);
  if (host < 0) throw ArcNotWitnessed("neither arc lies in a recorded triangulation");
  const auto row = transport_row(registry_.coords(a), host);
  const int value = row[static_cast<std::size_t>(node(host).tri.edge_of(b))];
  if (value < 0) throw Error("distinct arcs transported to the same edge");
  return value;
}

std::pair<int, int> SurfaceContext::endpoints(ArcId a) const {
  const auto& t = witness_triangulation(a);
  return t.endpoints(t.edge_of(a));
}

std::optional<SurfaceContext::FoldRoles> SurfaceContext::folded_roles(ArcId a, ArcId b) const {
  if (a == b) return std::nullopt;
  if (witness(a) < 0 && witness(b) < 0) throw ArcNotWitnessed("neither arc lies in a recorded triangulation");
  // A triangulation containing the loop of a folded pair also contains its partner.
  for (ArcId host_arc : {a, b}) {
    if (witness(host_arc) < 0) continue;
    const auto& t = witness_triangulation(host_arc);
    if (!t.contains(a) || !t.contains(b)) continue;
    ArcSet keep{std::min(a, b), std::max(a, b)};
    const auto regions = regions_keeping(t, keep);
    for (const auto& r : regions.regions) {
      if (!r.is_disk || r.side_count != 3 || r.interior_marked_count != 0) continue;
      int count_a = 0, count_b = 0;
      for (const auto& s : r.boundary_cycles.front()) {
        if (s.code < 0) continue;
        count_a += t.arc(s.code) == a;
        count_b += t.arc(s.code) == b;
      }
      if (count_a == 1 && count_b == 2) return FoldRoles{a, b};
      if (count_a == 2 && count_b == 1) return FoldRoles{b, a};
    }
  }
  return std::nullopt;
}

bool SurfaceContext::cuts_off_once_marked_monogon(ArcId a) const {
  const auto& t = witness_triangulation(a);
  const auto [u, w] = t.endpoints(t.edge_of(a));
  if (u != w) return false;
  const auto regions = regions_keeping(t, ArcSet{a});
  return std::any_of(regions.regions.begin(), regions.regions.end(), [](const Region& r) {
    return r.is_disk && r.side_count == 1 && r.interior_marked_count == 1;
  });
}

}  // namespace polycx
