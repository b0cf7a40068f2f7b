#include "dissoc/pruning.hpp"

#include <algorithm>
#include <cassert>

#include "dissoc/path_rules.hpp"

namespace dissoc {

PrunedTree::PrunedTree(const RootedTree& rooted)
    : rooted_(&rooted),
      alive_(rooted.order(), 1),
      pathlen_(rooted.order(), -1),
      child_count_(rooted.order()),
      alive_count_(rooted.order()) {
  int n = rooted.order();
  for (int v = 0; v < n; ++v) {
    child_count_[v] = static_cast<int>(rooted.children(v).size());
  }
  // Seed pathlen bottom-up for every vertex whose subtree is already a
  // path. Reverse BFS order visits children before parents.
  const auto& order = rooted.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (child_count_[v] == 0) {
      pathlen_[v] = 1;
    } else if (child_count_[v] == 1) {
      int c = rooted.children(v)[0];
      if (pathlen_[c] >= 0) pathlen_[v] = pathlen_[c] + 1;
    }
  }
}

std::vector<int> PrunedTree::surviving_child_list(int v) const {
  std::vector<int> out;
  for (int w : rooted_->children(v)) {
    if (alive_[w]) out.push_back(w);
  }
  return out;
}

void PrunedTree::kill_subtree(int top) {
  std::vector<int> stack{top};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    alive_[v] = 0;
    --alive_count_;
    for (int w : rooted_->children(v)) {
      if (alive_[w]) stack.push_back(w);
    }
  }
}

// pathlen(from) was just set; extend it upward through the chain of
// single-child ancestors. Each vertex gets its pathlen exactly once over
// the whole pruning process, so total bubbling work is O(n).
void PrunedTree::bubble_up_pathlen(int from) {
  int cur = from;
  while (true) {
    int p = rooted_->parent(cur);
    if (p < 0) break;
    if (child_count_[p] != 1) break;
    assert(pathlen_[p] < 0);
    pathlen_[p] = pathlen_[cur] + 1;
    cur = p;
  }
}

// A direct child of `parent` was just deleted (the child's own subtree is
// already dead). Restore the path bookkeeping around `parent`.
void PrunedTree::on_child_removed(int parent) {
  if (--child_count_[parent] == 0) {
    assert(pathlen_[parent] < 0);
    pathlen_[parent] = 1;
    bubble_up_pathlen(parent);
  } else if (child_count_[parent] == 1) {
    int c = -1;
    for (int w : rooted_->children(parent)) {
      if (alive_[w]) {
        c = w;
        break;
      }
    }
    assert(c >= 0);
    if (pathlen_[c] >= 0) {
      assert(pathlen_[parent] < 0);
      pathlen_[parent] = pathlen_[c] + 1;
      bubble_up_pathlen(parent);
    }
    // Otherwise c's subtree still holds an unprocessed branch vertex;
    // the bubble from its last prune will pass through here.
  }
}

ChildClassCounts child_classes(const PrunedTree& state, int u) {
  if (u < 0 || u >= state.rooted_->order()) {
    throw std::out_of_range("child_classes: vertex label out of range");
  }
  ChildClassCounts counts;
  for (int w : state.rooted_->children(u)) {
    if (!state.alive_[w]) continue;
    if (state.pathlen_[w] < 0) {
      throw std::logic_error("child_classes: child " + std::to_string(w) +
                             " does not head a path (ChildNotPath)");
    }
    switch (state.pathlen_[w] % 3) {
      case 0: ++counts.c0; break;
      case 1:
        ++counts.c1;
        counts.c1_member = w;
        break;
      case 2: ++counts.c2; break;
    }
  }
  if (counts.c1 != 1) counts.c1_member = -1;
  return counts;
}

PrunedTree& prune_step(PrunedTree& state, int u) {
  const RootedTree& rt = *state.rooted_;
  if (u < 0 || u >= rt.order()) {
    throw std::out_of_range("prune_step: vertex label out of range");
  }
  if (u == rt.root()) {
    throw std::invalid_argument("prune_step: cannot prune at the root (IsRoot)");
  }
  if (!state.alive_[u] || state.child_count_[u] < 2) {
    throw std::invalid_argument(
        "prune_step: vertex " + std::to_string(u) +
        " is not a surviving branch vertex (NotABranchVertex)");
  }
  for (int w : rt.children(u)) {
    if (state.alive_[w] && state.pathlen_[w] < 0) {
      throw std::invalid_argument(
          "prune_step: subtree of child " + std::to_string(w) +
          " is not a path (DescendantDegreeViolation)");
    }
  }

  ChildClassCounts counts = child_classes(state, u);
  if (counts.c2 >= 1 || counts.c1 >= 2) {
    // Delete D[u], u included.
    state.kill_subtree(u);
    state.on_child_removed(rt.parent(u));
    return state;
  }

  // Keep z: the class-1 child when unique, else the smallest-label
  // survivor (children are stored ascending).
  int z = counts.c1_member;
  if (z < 0) {
    for (int w : rt.children(u)) {
      if (state.alive_[w]) {
        z = w;
        break;
      }
    }
  }
  for (int w : rt.children(u)) {
    if (state.alive_[w] && w != z) {
      state.kill_subtree(w);
      --state.child_count_[u];
    }
  }
  assert(state.child_count_[u] == 1);
  assert(state.pathlen_[u] < 0);
  state.pathlen_[u] = state.pathlen_[z] + 1;
  state.bubble_up_pathlen(u);
  return state;
}

PrunedTree prune(const RootedTree& rooted) {
  PrunedTree state(rooted);
  int n = rooted.order();

  // Original branch vertices, grouped by depth; pruning only ever lowers
  // degrees, so no other vertex can need a step. Buckets are sorted so
  // equal-depth ties go to the smallest label.
  int max_depth = 0;
  for (int v : rooted.bfs_order()) max_depth = std::max(max_depth, rooted.depth(v));
  std::vector<std::vector<int>> by_depth(max_depth + 1);
  for (int v = 0; v < n; ++v) {
    if (v == rooted.root()) continue;
    int degree = static_cast<int>(rooted.children(v).size()) + 1;
    if (degree >= 3) by_depth[rooted.depth(v)].push_back(v);
  }

  for (int d = max_depth; d >= 0; --d) {
    auto& bucket = by_depth[d];
    std::sort(bucket.begin(), bucket.end());
    for (int u : bucket) {
      // Deleted, or no longer a branch vertex: nothing to prune here.
      if (!state.alive(u) || state.surviving_children(u) < 2) continue;
      prune_step(state, u);
    }
  }
  return state;
}

MaterializedPruning materialize(const PrunedTree& state) {
  const RootedTree& rt = state.rooted();
  int n = rt.order();
  std::vector<int> new_label(n, -1);
  std::vector<int> original;
  original.reserve(state.surviving_count());
  for (int v = 0; v < n; ++v) {
    if (state.alive(v)) {
      new_label[v] = static_cast<int>(original.size());
      original.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(original.size() - 1);
  for (int v : original) {
    int p = rt.parent(v);
    if (p >= 0) edges.emplace_back(new_label[p], new_label[v]);
  }
  Tree tree = Tree::from_edges(static_cast<int>(original.size()), edges);
  return MaterializedPruning{std::move(tree), new_label[rt.root()],
                             std::move(original)};
}

long long psi_spider(const RootedTree& rooted) {
  long long total = 0;
  int c1 = 0, c2 = 0;
  for (int w : rooted.children(rooted.root())) {
    int len = 1;
    int cur = w;
    while (true) {
      const auto& kids = rooted.children(cur);
      if (kids.size() >= 2) {
        throw std::invalid_argument(
            "psi_spider: vertex " + std::to_string(cur) +
            " has degree >= 3 (NotASpider)");
      }
      if (kids.empty()) break;
      cur = kids[0];
      ++len;
    }
    total += psi_path(len);
    if (len % 3 == 1) ++c1;
    if (len % 3 == 2) ++c2;
  }
  if (c2 == 0 && c1 <= 1) total += 1;
  return total;
}

}  // namespace dissoc
