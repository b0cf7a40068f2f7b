#include "dissoc/classifier.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "dissoc/pruning.hpp"

namespace dissoc {

namespace {

constexpr long long kImpossible = -(1LL << 40);

struct DpTriple {
  long long out;         // v excluded
  long long in_free;     // v included, no selected child
  long long in_matched;  // v included, exactly one selected child
};

// Post-order DP over the rooted tree; reverse BFS order visits children
// first. Returns the root's triple.
DpTriple run_dp(const RootedTree& rt) {
  int n = rt.order();
  std::vector<long long> out(n), in_free(n), in_matched(n);
  const auto& order = rt.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    long long sum_best = 0;
    long long sum_out = 0;
    long long best_gain = kImpossible;
    for (int w : rt.children(v)) {
      sum_best += std::max({out[w], in_free[w], in_matched[w]});
      sum_out += out[w];
      best_gain = std::max(best_gain, in_free[w] - out[w]);
    }
    out[v] = sum_best;
    in_free[v] = 1 + sum_out;
    in_matched[v] = best_gain == kImpossible ? kImpossible
                                             : 1 + sum_out + best_gain;
  }
  int r = rt.root();
  return DpTriple{out[r], in_free[r], in_matched[r]};
}

}  // namespace

long long dissociation_number(const Tree& tree) {
  DpTriple t = run_dp(root_at(tree, 0));
  return std::max({t.out, t.in_free, t.in_matched});
}

long long constrained_psi(const Tree& tree, int v, ConstraintMode mode) {
  DpTriple t = run_dp(root_at(tree, v));
  switch (mode) {
    case ConstraintMode::FREE:
      return std::max({t.out, t.in_free, t.in_matched});
    case ConstraintMode::FORCE_IN:
      return std::max(t.in_free, t.in_matched);
    case ConstraintMode::FORCE_OUT:
      return t.out;
  }
  return kImpossible;
}

VertexClass oracle_classify_via_dp(const Tree& tree, int v) {
  DpTriple t = run_dp(root_at(tree, v));
  long long best_in = std::max(t.in_free, t.in_matched);
  long long best_out = t.out;
  long long psi = std::max(best_in, best_out);
  assert(!(best_in < psi && best_out < psi));
  if (best_in < psi) return VertexClass::NONE;
  if (best_out < psi) return VertexClass::ALL;
  return VertexClass::SOME;
}

VertexClass classify_vertex(const Tree& tree, int v) {
  RootedTree rooted = root_at(tree, v);
  PrunedTree pruned = prune(rooted);
  ChildClassCounts cc = child_classes(pruned, v);
  if (cc.c2 == 0 && cc.c1 <= 1) return VertexClass::ALL;
  if (cc.c2 == 2 || cc.c1 + cc.c2 >= 3) return VertexClass::NONE;
  return VertexClass::SOME;
}

std::vector<VertexClass> classify_all(const Tree& tree, int threads) {
  int n = tree.order();
  std::vector<VertexClass> result(n, VertexClass::SOME);
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads == 0) threads = 1;
  }
  threads = std::clamp(threads, 1, n);

  if (threads == 1) {
    for (int v = 0; v < n; ++v) result[v] = classify_vertex(tree, v);
    return result;
  }

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    int begin = static_cast<int>(static_cast<long long>(n) * t / threads);
    int end = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
    pool.emplace_back([&tree, &result, begin, end] {
      for (int v = begin; v < end; ++v) result[v] = classify_vertex(tree, v);
    });
  }
  for (auto& th : pool) th.join();
  return result;
}

}  // namespace dissoc
