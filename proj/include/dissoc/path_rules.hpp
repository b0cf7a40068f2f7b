#pragma once

#include <vector>

namespace dissoc {

/// Dissociation number of the path P_n: (2n + n mod 3) / 3 for n >= 3,
/// and n itself for n in {1, 2}.
int psi_path(int n);

/// Structural flavors of a canonical maximum dissociation set of P_n.
/// Each mode is realizable exactly for one residue of n mod 3.
enum class WitnessMode {
  EXCLUDE_FIRST_LEAF,  // n % 3 == 0: first position absent
  ISOLATE_FIRST_LEAF,  // n % 3 == 1: first position present, no selected neighbor
  UNIQUE,              // n % 3 == 2: the unique maximum dissociation set
};

/// Canonical maximum dissociation set of P_n realizing the given mode,
/// as 1-based positions along the path, ascending. Throws
/// std::invalid_argument when the mode does not match n mod 3.
std::vector<int> path_witness(int n, WitnessMode mode);

}  // namespace dissoc
