#pragma once

#include <string>

#include "polycx/complex.hpp"
#include "polycx/parallel.hpp"
#include "polycx/report.hpp"

namespace polycx {

enum class Suite { cubes, sageev, crossing, curvature, all };

/// Throws Error on an unknown name.
Suite suite_from_string(const std::string& name);
std::string to_string(Suite s);

/// Flip involution, pentagon relation, commuting squares, path independence,
/// transport involution, intersection symmetry and, for disks, the chord oracle.
/// May record new triangulations and arcs in the context.
Report verify_engine(SurfaceContext& ctx);

/// Each suite reads the complex `cx` and uses `en` for anything needing surface data.
/// `cx` is usually en.complex; a loaded document can be checked against a fresh enumeration.
Report verify_cubes(const PolComplex& cx, Enumeration& en, Execution execution);
Report verify_sageev(const PolComplex& cx, Execution execution);
Report verify_crossing(const PolComplex& cx, const Enumeration& en);
Report verify_curvature(const PolComplex& cx, const Enumeration& en, Execution execution);

/// Runs the suite; on exceptional surfaces, failing theorem checks are reported
/// as skipped-out-of-assumption.
Report verify(const PolComplex& cx, Enumeration& en, Suite suite, Execution execution);

/// Empty when the two complexes agree on vertices, edges, labels and orientation.
std::string compare_complexes(const PolComplex& a, const PolComplex& b);

}  // namespace polycx
