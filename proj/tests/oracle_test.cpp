#include <bit>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "dissoc/classifier.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/tree.hpp"
#include "test_util.hpp"

using dissoc::Tree;
using dissoc::VertexClass;
using testutil::mask_of;

TEST_CASE("is_dissociation_set checks induced degrees") {
  Tree p3 = testutil::make_path(3);
  CHECK(dissoc::is_dissociation_set(p3, mask_of({0, 2})));
  CHECK(dissoc::is_dissociation_set(p3, mask_of({0, 1})));
  CHECK_FALSE(dissoc::is_dissociation_set(p3, mask_of({0, 1, 2})));
  CHECK(dissoc::is_dissociation_set(p3, 0));

  Tree star = testutil::make_star(3);
  CHECK(dissoc::is_dissociation_set(star, mask_of({1, 2, 3})));
  CHECK_FALSE(dissoc::is_dissociation_set(star, mask_of({0, 1, 2})));

  CHECK_THROWS_AS(dissoc::is_dissociation_set(p3, mask_of({0, 3})),
                  std::out_of_range);
  CHECK_THROWS_AS(dissoc::is_dissociation_set(dissoc::random_tree(65, 1), 0),
                  std::invalid_argument);
}

TEST_CASE("covers_all_three_paths") {
  Tree p3 = testutil::make_path(3);
  CHECK(dissoc::covers_all_three_paths(p3, mask_of({1})));
  CHECK(dissoc::covers_all_three_paths(p3, mask_of({0})));
  CHECK_FALSE(dissoc::covers_all_three_paths(p3, 0));

  Tree p4 = testutil::make_path(4);
  CHECK_FALSE(dissoc::covers_all_three_paths(p4, mask_of({0})));
  CHECK(dissoc::covers_all_three_paths(p4, mask_of({1})));
  CHECK(dissoc::covers_all_three_paths(p4, mask_of({0, 3})));

  // A path on two vertices has no 3-vertex path at all.
  CHECK(dissoc::covers_all_three_paths(testutil::make_path(2), 0));
}

TEST_CASE("enumerate_max_diss_sets frozen small cases") {
  CHECK(dissoc::enumerate_max_diss_sets(testutil::make_path(2)) ==
        std::vector<std::uint64_t>{mask_of({0, 1})});
  CHECK(dissoc::enumerate_max_diss_sets(testutil::make_path(3)) ==
        std::vector<std::uint64_t>{mask_of({0, 1}), mask_of({0, 2}),
                                   mask_of({1, 2})});
  CHECK(dissoc::enumerate_max_diss_sets(testutil::make_path(5)) ==
        std::vector<std::uint64_t>{mask_of({0, 1, 3, 4})});
  CHECK(dissoc::enumerate_max_diss_sets(testutil::make_star(3)) ==
        std::vector<std::uint64_t>{mask_of({1, 2, 3})});
}

TEST_CASE("every enumerated set is maximum and valid") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 500; ++i) {
    int n = 1 + static_cast<int>(rng() % 14);
    Tree t = dissoc::random_tree(n, rng());
    long long psi = dissoc::dissociation_number(t);
    auto sets = dissoc::enumerate_max_diss_sets(t);
    REQUIRE_FALSE(sets.empty());
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    for (std::uint64_t s : sets) {
      CHECK(std::popcount(s) == psi);
      CHECK(dissoc::is_dissociation_set(t, s));
    }
  }
}

TEST_CASE("oracle_classify_all named cases") {
  CHECK(dissoc::oracle_classify_all(testutil::make_path(2)) ==
        std::vector<VertexClass>{VertexClass::ALL, VertexClass::ALL});
  CHECK(dissoc::oracle_classify_all(testutil::make_star(3)) ==
        std::vector<VertexClass>{VertexClass::NONE, VertexClass::ALL,
                                 VertexClass::ALL, VertexClass::ALL});
  auto p6 = dissoc::oracle_classify_all(testutil::make_path(6));
  CHECK(p6[0] == VertexClass::SOME);
  CHECK(p6[5] == VertexClass::SOME);
}

TEST_CASE("size guards") {
  Tree big = dissoc::random_tree(25, 3);
  CHECK_THROWS_AS(dissoc::enumerate_max_diss_sets(big), std::invalid_argument);
  CHECK_THROWS_AS(dissoc::oracle_classify_all(big), std::invalid_argument);
}

TEST_CASE("labeled tree enumeration counts and distinctness") {
  CHECK(dissoc::labeled_tree_count(1) == 1);
  CHECK(dissoc::labeled_tree_count(2) == 1);
  CHECK(dissoc::labeled_tree_count(3) == 3);
  CHECK(dissoc::labeled_tree_count(4) == 16);
  CHECK(dissoc::labeled_tree_count(9) == 4782969);
  CHECK_THROWS_AS(dissoc::labeled_tree_count(0), std::invalid_argument);
  CHECK_THROWS_AS(dissoc::labeled_tree_count(10), std::invalid_argument);
  CHECK_THROWS_AS(dissoc::labeled_tree_from_index(4, 16), std::out_of_range);

  for (int n = 3; n <= 8; ++n) {
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t visited = 0;
    dissoc::enumerate_labeled_trees(n, [&](const Tree& t) {
      ++visited;
      REQUIRE(t.order() == n);
      // Edges fit in 6 bits each for n <= 8; the sorted edge list packs
      // into one 64-bit key.
      std::uint64_t key = 0;
      for (auto [u, v] : t.edges()) {
        key = key << 8 | static_cast<std::uint64_t>(u << 3 | v);
      }
      seen.insert(key);
    });
    CHECK(visited == dissoc::labeled_tree_count(n));
    CHECK(seen.size() == dissoc::labeled_tree_count(n));
  }
}

TEST_CASE("labeled_tree_from_index decodes base-n digit sequences") {
  std::vector<int> zeros{0, 0};
  CHECK(dissoc::labeled_tree_from_index(4, 0) ==
        dissoc::decode_pruefer(4, zeros));
  std::vector<int> ones{1, 1};
  CHECK(dissoc::labeled_tree_from_index(4, 5) ==
        dissoc::decode_pruefer(4, ones));
  std::vector<int> mixed{3, 2};  // little-endian digits of 11 in base 4
  CHECK(dissoc::labeled_tree_from_index(4, 11) ==
        dissoc::decode_pruefer(4, mixed));
}

TEST_CASE("split enumeration agrees with the plain scan") {
  std::mt19937_64 rng(53);
  for (int n : {21, 21, 22, 23}) {
    Tree t = dissoc::random_tree(n, rng());
    CAPTURE(n);
    CHECK(dissoc::detail::enumerate_by_split(t) ==
          dissoc::detail::enumerate_by_scan(t));
  }
}

TEST_CASE("dispatch above 20 vertices still finds maximum sets") {
  Tree p24 = testutil::make_path(24);
  auto sets = dissoc::enumerate_max_diss_sets(p24);
  REQUIRE_FALSE(sets.empty());
  for (std::uint64_t s : sets) {
    CHECK(std::popcount(s) == 16);  // psi of a path on 24 vertices
    CHECK(dissoc::is_dissociation_set(p24, s));
  }
}
