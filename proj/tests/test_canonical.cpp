#include "support/oracles.hpp"
#include "treeprof/canonical.hpp"
#include "treeprof/enumerate.hpp"
#include "treeprof/errors.hpp"
#include "treeprof/random_tree.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <unordered_set>

using namespace treeprof;

TEST_CASE("canonical code ignores labels") {
  const Tree a = Tree::path(5);
  const Tree b = Tree::from_edges(5, std::vector<Edge>{{3, 0}, {0, 4}, {4, 1}, {1, 2}});
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK(canonicalize(a) != canonicalize(Tree::star(4)));
}

TEST_CASE("canonical code is invariant under random relabeling") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 40;
    Tree t = random_tree(n, rng());
    Tree u = oracle::permuted(t, oracle::random_permutation(n, rng));
    REQUIRE(canonicalize(t) == canonicalize(u));
  }
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + rng() % 8;
    Tree a = random_tree(n, rng());
    Tree b = random_tree(n, rng());
    REQUIRE((canonicalize(a) == canonicalize(b)) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("centers of paths and stars") {
  CHECK(centers(Tree::path(5)) == std::vector<Vertex>{2});
  CHECK(centers(Tree::path(6)) == std::vector<Vertex>{2, 3});
  CHECK(centers(Tree::star(7)) == std::vector<Vertex>{0});
  CHECK(centers(Tree::single_vertex()) == std::vector<Vertex>{0});
  CHECK(centers(Tree::path(2)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("automorphism count matches brute force") {
  std::vector<std::size_t> wye_legs{2, 1, 1};
  CHECK(automorphism_count(Tree::path(5)) == 2);
  CHECK(automorphism_count(Tree::star(4)) == 24);
  CHECK(automorphism_count(Tree::spider(wye_legs)) == 2);
  CHECK(automorphism_count(Tree::single_vertex()) == 1);
  for (std::size_t k = 1; k <= 8; ++k)
    for (const auto& t : enumerate_trees(k))
      REQUIRE(automorphism_count(t) == oracle::brute_automorphisms(t));
}

TEST_CASE("enumerate_trees counts match Otter's formula") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(4).size() == 2);
  CHECK(enumerate_trees(5).size() == 3);
  for (std::size_t k = 1; k <= 12; ++k) {
    INFO("k = " << k);
    CHECK(enumerate_trees(k).size() == oracle::free_tree_count(k));
  }
  CHECK(oracle::free_tree_count(10) == 106);
}

TEST_CASE("enumerated types are pairwise non-isomorphic") {
  for (std::size_t k = 1; k <= 8; ++k) {
    auto types = enumerate_trees(k);
    for (std::size_t i = 0; i < types.size(); ++i)
      for (std::size_t j = i + 1; j < types.size(); ++j) REQUIRE_FALSE(oracle::brute_isomorphic(types[i], types[j]));
  }
  for (std::size_t k = 9; k <= 12; ++k) {
    std::set<CanonicalCode> codes;
    for (const auto& t : enumerate_trees(k)) codes.insert(canonicalize(t));
    CHECK(codes.size() == enumerate_trees(k).size());
  }
}

TEST_CASE("every random tree's type appears in the enumeration") {
  std::mt19937_64 rng(17);
  for (std::size_t k = 1; k <= 10; ++k) {
    std::unordered_set<CanonicalCode> codes;
    for (const auto& t : enumerate_trees(k)) codes.insert(canonicalize(t));
    for (int i = 0; i < 50; ++i) REQUIRE(codes.contains(canonicalize(random_tree(k, rng()))));
  }
}

TEST_CASE("enumeration order puts path, star, wye first") {
  auto five = enumerate_trees(5);
  REQUIRE(five.size() == 3);
  std::vector<std::size_t> wye_legs{2, 1, 1};
  CHECK(isomorphic(five[0], Tree::path(5)));
  CHECK(isomorphic(five[1], Tree::star(4)));
  CHECK(isomorphic(five[2], Tree::spider(wye_legs)));
  for (std::size_t k = 4; k <= 9; ++k) {
    auto types = enumerate_trees(k);
    CHECK(isomorphic(types[0], Tree::path(k)));
    CHECK(isomorphic(types[1], Tree::star(k - 1)));
  }
  CHECK(enumerate_trees(7) == enumerate_trees(7));
}

TEST_CASE("enumeration above the limit is a capability error") {
  CHECK_THROWS_AS(enumerate_trees(13), CapabilityError);
  CHECK_NOTHROW(enumerate_trees(13, 13));
  CHECK_THROWS_AS(enumerate_trees(5, kMaxEnumerationLimit + 1), CapabilityError);
  CHECK_THROWS_AS(enumerate_trees(0), PreconditionError);
}

TEST_CASE("type catalog lookup") {
  TypeCatalog cat(5);
  CHECK(cat.size() == 3);
  CHECK(cat.index_of(canonicalize(Tree::star(4))) == 1u);
  CHECK_FALSE(cat.index_of(canonicalize(Tree::path(4))).has_value());
  CHECK(cat.star_index() == 1);
  CHECK(TypeCatalog(3).star_index() == 0);
}
