#pragma once

#include <string>
#include <vector>

#include "polycx/complex.hpp"

namespace polycx {

/// Diagonal {i, j} of a convex n-gon, i < j, not a side.
struct Chord {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

constexpr int kDefaultOracleLimit = 10;

/// All diagonals of the n-gon in lexicographic order; chord k has arc id k in the oracle.
std::vector<Chord> chords(int n);
Chord make_chord(int u, int w);
/// Endpoints strictly interleave around the polygon.
bool chord_cross(const Chord& c1, const Chord& c2);

using Dissection = std::vector<Chord>;
/// Pairwise non-crossing chord sets, the empty set included, sorted lexicographically.
std::vector<Dissection> enumerate_dissections(int n, int limit = kDefaultOracleLimit);
PolComplex oracle_complex(int n, int limit = kDefaultOracleLimit);

/// Chord carried by an engine arc of S_{0,0}^n, read from its endpoint labels.
Chord engine_chord(const SurfaceContext& ctx, ArcId a);
/// Empty when the engine complex matches the oracle complex arc-for-arc;
/// otherwise a description of the first difference.
std::string compare_with_oracle(const Enumeration& en, int n);

}  // namespace polycx
