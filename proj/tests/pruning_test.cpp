#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "dissoc/classifier.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/pruning.hpp"
#include "dissoc/tree.hpp"
#include "test_util.hpp"

using dissoc::PrunedTree;
using dissoc::RootedTree;
using dissoc::Tree;

namespace {

template <typename Fn>
void expect_invalid(Fn&& fn, const std::string& needle) {
  try {
    fn();
    FAIL(("expected std::invalid_argument: " + needle));
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("child_classes counts residues of child paths") {
  Tree star = testutil::make_star(3);
  RootedTree at_center = dissoc::root_at(star, 0);
  PrunedTree st(at_center);
  auto cc = child_classes(st, 0);
  CHECK(cc.c0 == 0);
  CHECK(cc.c1 == 3);
  CHECK(cc.c2 == 0);
  CHECK(cc.c1_member == -1);
  CHECK(cc.total() == 3);

  Tree p5 = testutil::make_path(5);
  RootedTree at_mid = dissoc::root_at(p5, 2);
  PrunedTree st5(at_mid);
  auto cc5 = child_classes(st5, 2);
  CHECK(cc5.c0 == 0);
  CHECK(cc5.c1 == 0);
  CHECK(cc5.c2 == 2);

  // Chains of orders 3 and 1 below the root.
  Tree mixed = Tree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
  RootedTree rm = dissoc::root_at(mixed, 0);
  PrunedTree stm(rm);
  auto ccm = child_classes(stm, 0);
  CHECK(ccm.c0 == 1);
  CHECK(ccm.c1 == 1);
  CHECK(ccm.c2 == 0);
  CHECK(ccm.c1_member == 4);
}

TEST_CASE("child_classes rejects non-path children") {
  Tree star = testutil::make_star(3);
  RootedTree at_leaf = dissoc::root_at(star, 1);
  PrunedTree st(at_leaf);
  CHECK_THROWS_AS(child_classes(st, 1), std::logic_error);
}

TEST_CASE("initial pathlen state") {
  Tree p4 = testutil::make_path(4);
  RootedTree r = dissoc::root_at(p4, 0);
  PrunedTree st(r);
  CHECK(st.pathlen(3) == 1);
  CHECK(st.pathlen(2) == 2);
  CHECK(st.pathlen(1) == 3);
  CHECK(st.pathlen(0) == 4);

  Tree star = testutil::make_star(3);
  RootedTree rc = dissoc::root_at(star, 0);
  PrunedTree stc(rc);
  CHECK_FALSE(stc.has_pathlen(0));
  for (int leaf = 1; leaf <= 3; ++leaf) CHECK(stc.pathlen(leaf) == 1);
}

TEST_CASE("prune_step deletes the whole subtree on a class-2 child") {
  // Root 0; branch 1 carries two chains of order 2.
  Tree t = Tree::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
  RootedTree r = dissoc::root_at(t, 0);
  PrunedTree st(r);
  auto cc = child_classes(st, 1);
  CHECK(cc.c2 == 2);

  prune_step(st, 1);
  CHECK(st.surviving_count() == 1);
  CHECK(st.alive(0));
  for (int v = 1; v < 6; ++v) CHECK_FALSE(st.alive(v));
  CHECK(st.surviving_children(0) == 0);
  CHECK(st.pathlen(0) == 1);

  // A deleted vertex is no longer a valid pruning site.
  expect_invalid([&] { prune_step(st, 1); }, "NotABranchVertex");
}

TEST_CASE("prune_step keeps the class-1 child") {
  // Branch 1 carries chains of orders 3 (head 2), 3 (head 5), 1 (head 8).
  Tree t = Tree::from_edges(
      9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 7}, {1, 8}});
  RootedTree r = dissoc::root_at(t, 0);
  PrunedTree st(r);
  auto cc = child_classes(st, 1);
  CHECK(cc.c0 == 2);
  CHECK(cc.c1 == 1);
  CHECK(cc.c1_member == 8);

  prune_step(st, 1);
  CHECK(st.alive(8));
  CHECK_FALSE(st.alive(2));
  CHECK_FALSE(st.alive(5));
  CHECK(st.surviving_child_list(1) == std::vector<int>{8});
  CHECK(st.pathlen(1) == 2);
  CHECK(st.pathlen(0) == 3);
  CHECK(st.surviving_count() == 3);
}

TEST_CASE("prune_step breaks class-0 ties by smallest label") {
  // Branch 1 carries chains of orders 3 (head 2) and 6 (head 5).
  Tree t = Tree::from_edges(11, {{0, 1},
                                 {1, 2},
                                 {2, 3},
                                 {3, 4},
                                 {1, 5},
                                 {5, 6},
                                 {6, 7},
                                 {7, 8},
                                 {8, 9},
                                 {9, 10}});
  RootedTree r = dissoc::root_at(t, 0);
  PrunedTree st(r);
  auto cc = child_classes(st, 1);
  CHECK(cc.c0 == 2);

  prune_step(st, 1);
  CHECK(st.alive(2));
  CHECK(st.alive(4));
  CHECK_FALSE(st.alive(5));
  CHECK_FALSE(st.alive(10));
  CHECK(st.pathlen(1) == 4);
  CHECK(st.pathlen(0) == 5);
}

TEST_CASE("prune_step argument guards") {
  // Branch 1 (children 2, 3) above branch 2 (chains of orders 3 and 1).
  Tree t = Tree::from_edges(
      8, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {4, 5}, {5, 6}, {2, 7}});
  RootedTree r = dissoc::root_at(t, 0);
  PrunedTree st(r);

  expect_invalid([&] { prune_step(st, 0); }, "IsRoot");
  expect_invalid([&] { prune_step(st, 3); }, "NotABranchVertex");
  // Vertex 2, a branch below vertex 1, has not been pruned yet.
  expect_invalid([&] { prune_step(st, 1); }, "DescendantDegreeViolation");
  CHECK_THROWS_AS(prune_step(st, 17), std::out_of_range);

  // Pruning bottom-up succeeds: first 2 (keeps its class-1 child, so
  // pathlen(2) = 2), then 1 (now sees a class-2 child and deletes D[1]).
  prune_step(st, 2);
  CHECK(st.pathlen(2) == 2);
  CHECK(st.surviving_child_list(2) == std::vector<int>{7});
  prune_step(st, 1);
  CHECK(st.surviving_count() == 1);
  CHECK(child_classes(st, 0).total() == 0);
}

TEST_CASE("prune leaves paths untouched") {
  Tree p6 = testutil::make_path(6);
  RootedTree r = dissoc::root_at(p6, 2);
  PrunedTree st = dissoc::prune(r);
  CHECK(st.surviving_count() == 6);
  auto m = dissoc::materialize(st);
  CHECK(m.tree == p6);
  CHECK(m.root == 2);
  CHECK(m.original_label == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("prune collapses a star seen from a leaf to a single vertex") {
  Tree star = testutil::make_star(3);
  RootedTree r = dissoc::root_at(star, 1);
  PrunedTree st = dissoc::prune(r);
  CHECK(st.surviving_count() == 1);
  CHECK(st.alive(1));
  auto m = dissoc::materialize(st);
  CHECK(m.tree.order() == 1);
  CHECK(m.root == 0);
  CHECK(m.original_label == std::vector<int>{1});
}

TEST_CASE("prune reduces the double broom to an edge") {
  Tree t = Tree::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  RootedTree r = dissoc::root_at(t, 0);
  PrunedTree st = dissoc::prune(r);
  auto m = dissoc::materialize(st);
  CHECK(m.tree == testutil::make_path(2));
  CHECK(m.root == 0);
  CHECK(m.original_label == std::vector<int>{0, 1});
}

TEST_CASE("prune handles stacked branch vertices") {
  // Two depth-2 branch vertices (2 and 5) under a depth-1 branch vertex 1;
  // both get deleted, vertex 1 then has no surviving children and is skipped.
  Tree t = Tree::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {1, 5}, {5, 6}, {5, 7}});
  RootedTree r = dissoc::root_at(t, 0);
  PrunedTree st = dissoc::prune(r);
  CHECK(st.surviving_count() == 2);
  CHECK(st.alive(0));
  CHECK(st.alive(1));
  CHECK(st.pathlen(0) == 2);
  auto m = dissoc::materialize(st);
  CHECK(m.tree == testutil::make_path(2));
}

TEST_CASE("after prune the root's children all head paths") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(rng() % 40);
    Tree t = dissoc::random_tree(n, rng());
    int root = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    RootedTree r = dissoc::root_at(t, root);
    PrunedTree st = dissoc::prune(r);
    CHECK(st.alive(root));
    for (int w : st.surviving_child_list(root)) CHECK(st.has_pathlen(w));
    CHECK_NOTHROW(child_classes(st, root));
    // Final state: no surviving non-root vertex keeps two children.
    for (int v = 0; v < n; ++v) {
      if (v != root && st.alive(v)) CHECK(st.surviving_children(v) <= 1);
    }
  }
}

TEST_CASE("pruning preserves the root's oracle class (exhaustive small trees)") {
  for (int n = 2; n <= 7; ++n) {
    dissoc::enumerate_labeled_trees(n, [&](const Tree& t) {
      auto base = dissoc::oracle_classify_all(t);
      for (int v = 0; v < n; ++v) {
        RootedTree r = dissoc::root_at(t, v);
        PrunedTree st = dissoc::prune(r);
        auto m = dissoc::materialize(st);
        auto pruned = dissoc::oracle_classify_all(m.tree);
        auto it = std::lower_bound(m.original_label.begin(),
                                   m.original_label.end(), v);
        REQUIRE(it != m.original_label.end());
        REQUIRE(*it == v);
        int nv = static_cast<int>(it - m.original_label.begin());
        CHECK(nv == m.root);
        if (base[v] != pruned[nv]) {
          CAPTURE(n);
          CAPTURE(v);
          CAPTURE(dissoc::serialize_edge_list(t));
          CHECK(base[v] == pruned[nv]);
        }
      }
    });
  }
}

TEST_CASE("psi_spider closed form") {
  Tree p4 = testutil::make_path(4);
  CHECK(dissoc::psi_spider(dissoc::root_at(p4, 0)) == 3);

  Tree star = testutil::make_star(3);
  CHECK(dissoc::psi_spider(dissoc::root_at(star, 0)) == 3);

  Tree k1 = testutil::make_path(1);
  CHECK(dissoc::psi_spider(dissoc::root_at(k1, 0)) == 1);

  expect_invalid([&] { dissoc::psi_spider(dissoc::root_at(star, 1)); },
                 "NotASpider");
}

TEST_CASE("psi_spider agrees with the DP on random spiders") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    int legs = 1 + static_cast<int>(rng() % 8);
    std::vector<int> lengths;
    for (int j = 0; j < legs; ++j) {
      lengths.push_back(1 + static_cast<int>(rng() % 12));
    }
    Tree t = testutil::make_spider(lengths);
    CAPTURE(i);
    CHECK(dissoc::psi_spider(dissoc::root_at(t, 0)) ==
          dissoc::dissociation_number(t));
  }
}
