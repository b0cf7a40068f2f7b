#include "dissoc/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace dissoc {

namespace {

std::vector<std::uint64_t> neighbor_masks(const Tree& tree) {
  std::vector<std::uint64_t> nb(tree.order(), 0);
  for (int v = 0; v < tree.order(); ++v) {
    for (int w : tree.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
  }
  return nb;
}

void check_mask_range(const Tree& tree, std::uint64_t members) {
  int n = tree.order();
  if (n > 64) {
    throw std::invalid_argument("bitmask sets support n <= 64");
  }
  if (n < 64 && (members >> n) != 0) {
    throw std::out_of_range("subset contains labels outside 0..n-1");
  }
}

}  // namespace

bool is_dissociation_set(const Tree& tree, std::uint64_t members) {
  check_mask_range(tree, members);
  for (std::uint64_t rest = members; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    std::uint64_t nb = 0;
    for (int w : tree.neighbors(v)) nb |= std::uint64_t{1} << w;
    if (std::popcount(nb & members) > 1) return false;
  }
  return true;
}

bool covers_all_three_paths(const Tree& tree, std::uint64_t members) {
  check_mask_range(tree, members);
  for (int m = 0; m < tree.order(); ++m) {
    const auto& nbs = tree.neighbors(m);
    for (std::size_t i = 0; i < nbs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbs.size(); ++j) {
        std::uint64_t path = (std::uint64_t{1} << nbs[i]) |
                             (std::uint64_t{1} << m) |
                             (std::uint64_t{1} << nbs[j]);
        if ((path & members) == 0) return false;
      }
    }
  }
  return true;
}

namespace detail {

std::vector<std::uint64_t> enumerate_by_scan(const Tree& tree) {
  int n = tree.order();
  auto nb = neighbor_masks(tree);
  int best = -1;
  std::vector<std::uint64_t> result;
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (size < best) continue;
    bool ok = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (std::popcount(nb[v] & mask) > 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (size > best) {
      best = size;
      result.clear();
    }
    result.push_back(mask);
  }
  return result;
}

namespace {

// Endpoint state of one half of an edge split: the cut endpoint excluded,
// or included with 0 or 1 selected neighbors inside the half.
enum SideType { OUT = 0, IN0 = 1, IN1 = 2 };

struct SideSets {
  std::array<int, 3> best{-1, -1, -1};
  std::array<std::vector<std::uint64_t>, 3> masks;  // local bit positions
  std::vector<int> vertices;                        // local -> global
};

SideSets enumerate_side(const Tree& tree, const std::vector<int>& vertices,
                        int endpoint_global) {
  int k = static_cast<int>(vertices.size());
  std::vector<int> local_of(tree.order(), -1);
  for (int i = 0; i < k; ++i) local_of[vertices[i]] = i;
  int e = local_of[endpoint_global];

  std::vector<std::uint64_t> nb(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int w : tree.neighbors(vertices[i])) {
      if (local_of[w] >= 0) nb[i] |= std::uint64_t{1} << local_of[w];
    }
  }

  SideSets sets;
  sets.vertices = vertices;
  std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    int size = std::popcount(mask);
    if (size < std::min({sets.best[0], sets.best[1], sets.best[2]})) continue;
    bool ok = true;
    int endpoint_deg = -1;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int deg = std::popcount(nb[v] & mask);
      if (deg > 1) {
        ok = false;
        break;
      }
      if (v == e) endpoint_deg = deg;
    }
    if (!ok) continue;
    SideType type = endpoint_deg < 0 ? OUT : (endpoint_deg == 0 ? IN0 : IN1);
    if (size > sets.best[type]) {
      sets.best[type] = size;
      sets.masks[type].clear();
    }
    if (size == sets.best[type]) sets.masks[type].push_back(mask);
  }
  return sets;
}

std::uint64_t expand_mask(const SideSets& side, std::uint64_t local_mask) {
  std::uint64_t global = 0;
  for (std::uint64_t rest = local_mask; rest != 0; rest &= rest - 1) {
    global |= std::uint64_t{1} << side.vertices[std::countr_zero(rest)];
  }
  return global;
}

}  // namespace

std::vector<std::uint64_t> enumerate_by_split(const Tree& tree) {
  int n = tree.order();
  if (n < 2) return enumerate_by_scan(tree);

  // Cut the edge whose removal balances the two halves best.
  RootedTree rt = root_at(tree, 0);
  std::vector<int> subtree_size(n, 1);
  const auto& order = rt.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (rt.parent(v) >= 0) subtree_size[rt.parent(v)] += subtree_size[v];
  }
  int cut_child = -1, best_larger = n + 1;
  for (int v = 0; v < n; ++v) {
    if (rt.parent(v) < 0) continue;
    int larger = std::max(subtree_size[v], n - subtree_size[v]);
    if (larger < best_larger) {
      best_larger = larger;
      cut_child = v;
    }
  }

  std::vector<int> below, above;
  std::vector<char> in_below(n, 0);
  std::vector<int> stack{cut_child};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    in_below[v] = 1;
    for (int w : rt.children(v)) stack.push_back(w);
  }
  for (int v = 0; v < n; ++v) (in_below[v] ? below : above).push_back(v);

  SideSets a = enumerate_side(tree, below, cut_child);
  SideSets b = enumerate_side(tree, above, rt.parent(cut_child));

  // If both cut endpoints are selected, the cut edge joins them, so each
  // needs degree 0 inside its own half.
  constexpr std::pair<SideType, SideType> kValid[] = {
      {OUT, OUT}, {OUT, IN0}, {OUT, IN1}, {IN0, OUT}, {IN1, OUT}, {IN0, IN0}};

  int psi = -1;
  for (auto [ta, tb] : kValid) {
    if (a.best[ta] < 0 || b.best[tb] < 0) continue;
    psi = std::max(psi, a.best[ta] + b.best[tb]);
  }
  std::vector<std::uint64_t> result;
  for (auto [ta, tb] : kValid) {
    if (a.best[ta] < 0 || b.best[tb] < 0) continue;
    if (a.best[ta] + b.best[tb] != psi) continue;
    for (std::uint64_t ma : a.masks[ta]) {
      std::uint64_t ga = expand_mask(a, ma);
      for (std::uint64_t mb : b.masks[tb]) {
        result.push_back(ga | expand_mask(b, mb));
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace detail

std::vector<std::uint64_t> enumerate_max_diss_sets(const Tree& tree) {
  int n = tree.order();
  if (n > 24) {
    throw std::invalid_argument(
        "enumerate_max_diss_sets: n > 24 unsupported (TooLarge)");
  }
  return n <= 20 ? detail::enumerate_by_scan(tree)
                 : detail::enumerate_by_split(tree);
}

std::vector<VertexClass> oracle_classify_all(const Tree& tree) {
  auto sets = enumerate_max_diss_sets(tree);
  assert(!sets.empty());
  std::uint64_t in_all = ~std::uint64_t{0};
  std::uint64_t in_any = 0;
  for (std::uint64_t s : sets) {
    in_all &= s;
    in_any |= s;
  }
  std::vector<VertexClass> out(tree.order());
  for (int v = 0; v < tree.order(); ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    if (in_all & bit) {
      out[v] = VertexClass::ALL;
    } else if (in_any & bit) {
      out[v] = VertexClass::SOME;
    } else {
      out[v] = VertexClass::NONE;
    }
  }
  return out;
}

std::uint64_t labeled_tree_count(int n) {
  if (n < 1 || n > 9) {
    throw std::invalid_argument(
        "labeled tree enumeration supports 1 <= n <= 9 (OutOfSupportedRange)");
  }
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

Tree labeled_tree_from_index(int n, std::uint64_t index) {
  std::uint64_t count = labeled_tree_count(n);
  if (index >= count) {
    throw std::out_of_range("labeled_tree_from_index: index out of range");
  }
  std::vector<int> code(std::max(0, n - 2));
  for (int& digit : code) {
    digit = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return decode_pruefer(n, code);
}

}  // namespace dissoc
