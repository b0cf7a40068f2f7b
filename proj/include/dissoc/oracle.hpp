#pragma once

#include <cstdint>
#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// True iff the vertex subset (bitmask over labels, n <= 64) induces a
/// subgraph of maximum degree <= 1.
bool is_dissociation_set(const Tree& tree, std::uint64_t members);

/// True iff the subset intersects every path on 3 vertices of the tree
/// (i.e. is a 3-path vertex cover).
bool covers_all_three_paths(const Tree& tree, std::uint64_t members);

/// All maximum dissociation sets, as bitmasks, sorted ascending.
/// Full 2^n scan for n <= 20; an edge-separator split handles
/// 20 < n <= 24. Throws std::invalid_argument above 24 (TooLarge).
std::vector<std::uint64_t> enumerate_max_diss_sets(const Tree& tree);

/// Definition-level classification: membership of each vertex across all
/// enumerated maximum dissociation sets. Same size guard as enumeration.
std::vector<VertexClass> oracle_classify_all(const Tree& tree);

/// Number of labeled trees on n vertices (Cayley: n^(n-2)); n in [1, 9].
std::uint64_t labeled_tree_count(int n);

/// The index-th labeled tree on n vertices, by decoding the index-th
/// Pruefer sequence (little-endian base-n digits); n in [1, 9].
Tree labeled_tree_from_index(int n, std::uint64_t index);

/// Visits every labeled tree on n vertices exactly once; n in [1, 9].
template <typename F>
void enumerate_labeled_trees(int n, F&& fn) {
  std::uint64_t count = labeled_tree_count(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    fn(labeled_tree_from_index(n, i));
  }
}

namespace detail {
// Both enumeration routes, exposed so tests can check them against each
// other; enumerate_max_diss_sets picks between them by size.
std::vector<std::uint64_t> enumerate_by_scan(const Tree& tree);
std::vector<std::uint64_t> enumerate_by_split(const Tree& tree);
}  // namespace detail

}  // namespace dissoc
