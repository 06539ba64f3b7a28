#pragma once

namespace polycx {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both paths produce identical, canonically ordered output.
enum class Execution { serial, parallel };

int max_threads();
void set_threads(int n);

}  // namespace polycx
