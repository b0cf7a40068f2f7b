#pragma once

#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// Membership constraint on one vertex for the constrained dissociation DP.
enum class ConstraintMode { FREE, FORCE_IN, FORCE_OUT };

/// Dissociation number psi(tree) via the standard 3-state post-order DP.
/// Iterative; safe for degenerate (path-shaped) trees of 10^6 vertices.
long long dissociation_number(const Tree& tree);

/// Maximum dissociation set size subject to v's membership constraint.
/// FREE reproduces dissociation_number.
long long constrained_psi(const Tree& tree, int v, ConstraintMode mode);

/// Classifies v by comparing constrained DP values against psi:
/// forcing v in loses size iff v is in no maximum set; forcing v out
/// loses size iff v is in all of them. Independent of the pruning path.
VertexClass oracle_classify_via_dp(const Tree& tree, int v);

/// The pruning-based recognition algorithm: root at v, prune, classify
/// the root from the residue classes of its children in the pruned tree.
VertexClass classify_vertex(const Tree& tree, int v);

/// classify_vertex for every vertex (n independent runs). threads = 0
/// uses the available hardware parallelism; 1 runs serially.
std::vector<VertexClass> classify_all(const Tree& tree, int threads = 1);

}  // namespace dissoc
