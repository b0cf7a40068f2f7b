#pragma once

#include <vector>

#include "dissoc/tree.hpp"

namespace dissoc {

/// Residue classes of the children of a vertex whose child subtrees are
/// paths: a child heading a path of order L falls into class L mod 3.
/// c1_member is the class-1 child when there is exactly one, else -1.
struct ChildClassCounts {
  int c0 = 0;
  int c1 = 0;
  int c2 = 0;
  int c1_member = -1;

  int total() const { return c0 + c1 + c2; }
};

/// Mutable pruning state over a rooted tree. Holds only a reference to
/// the RootedTree, which must outlive it.
///
/// Deletion is marking: `alive` flags plus per-vertex surviving child
/// counts; subtrees are never rescanned. pathlen(u) is the order of the
/// path hanging at u once u's whole subtree is a path, maintained
/// incrementally so the total work over a full prune stays linear.
class PrunedTree {
 public:
  explicit PrunedTree(const RootedTree& rooted);

  const RootedTree& rooted() const { return *rooted_; }
  int root() const { return rooted_->root(); }

  bool alive(int v) const { return alive_[v] != 0; }
  int surviving_count() const { return alive_count_; }
  int surviving_children(int v) const { return child_count_[v]; }
  std::vector<int> surviving_child_list(int v) const;

  bool has_pathlen(int v) const { return pathlen_[v] >= 0; }
  /// Order of the path T_v in the surviving tree; -1 while v still has
  /// a non-path subtree below it.
  int pathlen(int v) const { return pathlen_[v]; }

  friend ChildClassCounts child_classes(const PrunedTree& state, int u);
  friend PrunedTree& prune_step(PrunedTree& state, int u);

 private:
  void kill_subtree(int top);
  void bubble_up_pathlen(int from);
  void on_child_removed(int parent);

  const RootedTree* rooted_;
  std::vector<char> alive_;
  std::vector<int> pathlen_;
  std::vector<int> child_count_;
  int alive_count_;
};

/// Residue class counts of u's surviving children. Every surviving child
/// must already head a path (throws std::logic_error otherwise).
ChildClassCounts child_classes(const PrunedTree& state, int u);

/// One pruning step at a surviving non-root branch vertex u, all of whose
/// proper descendants have degree <= 2 in the surviving tree:
///   - c2 >= 1 or c1 >= 2: delete u and its whole subtree;
///   - otherwise keep one child z (the class-1 child if unique, else the
///     smallest-label survivor) and delete the other child subtrees;
///     afterwards pathlen(u) = pathlen(z) + 1.
/// Returns the state for chaining. Throws std::invalid_argument when u is
/// the root, not a surviving branch vertex, or has a non-path descendant.
PrunedTree& prune_step(PrunedTree& state, int u);

/// Full pruning process: repeatedly prunes at a surviving non-root branch
/// vertex of maximum depth (ties by smallest label) until every surviving
/// non-root vertex has degree <= 2. The result references `rooted`.
PrunedTree prune(const RootedTree& rooted);

/// Surviving tree compacted to dense labels 0..k-1 (ascending by original
/// label), with the new root and the original label of each new vertex.
struct MaterializedPruning {
  Tree tree;
  int root;
  std::vector<int> original_label;
};

MaterializedPruning materialize(const PrunedTree& state);

/// Dissociation number of a rooted tree in which every non-root vertex has
/// degree <= 2 (all child subtrees are paths): sum of the child-path psi
/// values, plus one iff c2 == 0 and c1 <= 1. Throws std::invalid_argument
/// when some non-root vertex has degree >= 3.
long long psi_spider(const RootedTree& rooted);

}  // namespace dissoc
