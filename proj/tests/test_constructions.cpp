#include "support/oracles.hpp"
#include "treeprof/canonical.hpp"
#include "treeprof/constructions.hpp"
#include "treeprof/errors.hpp"
#include "treeprof/random_tree.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace treeprof;

TEST_CASE("millipede with one spine vertex is a cherry") {
  Tree t = millipede({{0}, 1});
  CHECK(isomorphic(t, Tree::star(2)));
}

TEST_CASE("the (0,0,3,4,4,3)-millipede of length 6 has 32 vertices") {
  MillipedeSpec spec{{0, 0, 3, 4, 4, 3}, 6};
  CHECK(spec.vertex_count() == 32);
  CHECK(millipede(spec).size() == 32);
}

TEST_CASE("millipede spine degrees") {
  Tree t = millipede({{1}, 3});
  CHECK(t.degree(0) == 4);
  CHECK(t.degree(1) == 5);
  CHECK(t.degree(2) == 4);
  CHECK(max_degree(millipede({{3}, 5})) == 7);

  // Offset 0: every spine vertex carries exactly d_i leaves.
  Tree classic = millipede({{0, 2}, 4, 0});
  CHECK(classic.degree(0) == 1);
  CHECK(classic.degree(1) == 4);
  CHECK(classic.degree(2) == 2);
  CHECK(classic.degree(3) == 3);
  CHECK(isomorphic(millipede({{0}, 7, 0}), Tree::path(7)));
}

TEST_CASE("millipede vertex count matches the closed form") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    MillipedeSpec spec;
    spec.pendants.resize(1 + rng() % 6);
    for (auto& d : spec.pendants) d = rng() % 6;
    spec.length = 1 + rng() % 30;
    spec.extra_pendants = rng() % 3;
    std::size_t expected = spec.length;
    for (std::size_t j = 0; j < spec.length; ++j) expected += spec.pendants[j % spec.pendants.size()] + spec.extra_pendants;
    Tree t = millipede(spec);
    REQUIRE(t.size() == expected);
    for (std::size_t j = 0; j < spec.length; ++j) {
      std::size_t spine = (j > 0) + (j + 1 < spec.length);
      REQUIRE(t.degree(static_cast<Vertex>(j)) == spine + spec.pendants_at(j));
    }
  }
}

TEST_CASE("millipede spec validation") {
  CHECK_THROWS_AS(millipede({{}, 3}), PreconditionError);
  CHECK_THROWS_AS(millipede({{1}, 0}), PreconditionError);
}

TEST_CASE("glue examples") {
  Tree p = glue(Tree::path(2), Tree::path(2), 2);
  CHECK(isomorphic(p, Tree::path(5)));

  Tree stars = glue(Tree::star(4), Tree::star(4), 5);
  CHECK(stars.size() == 14);
  auto d = distances_from(stars, 1);  // lowest leaf of the first star
  CHECK(d[5 + 1] == 5);               // lowest leaf of the second star, shifted by |s| = 5

  Tree singles = glue(Tree::single_vertex(), Tree::single_vertex(), 3);
  CHECK(isomorphic(singles, Tree::path(4)));
}

TEST_CASE("glue distance and size contract on random trees") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Tree s = random_tree(1 + rng() % 20, rng());
    Tree t = random_tree(1 + rng() % 20, rng());
    const std::size_t k = 2 + rng() % 7;
    std::vector<Vertex> ls, lt;
    for (Vertex v = 0; v < s.size(); ++v)
      if (s.is_leaf(v)) ls.push_back(v);
    for (Vertex v = 0; v < t.size(); ++v)
      if (t.is_leaf(v)) lt.push_back(v);
    Vertex a = ls[rng() % ls.size()], b = lt[rng() % lt.size()];
    Tree g = glue(s, t, k, a, b);
    REQUIRE(g.size() == s.size() + t.size() + k - 1);
    REQUIRE(distances_from(g, a)[b + s.size()] == k);
  }
}

TEST_CASE("glue rejects non-leaves") {
  CHECK_THROWS_AS(glue(Tree::star(3), Tree::path(2), 4, 0, 0), PreconditionError);
  CHECK_THROWS_AS(glue(Tree::path(3), Tree::path(3), 4, 0, 1), PreconditionError);
  CHECK_THROWS_AS(glue(Tree::path(3), Tree::path(3), 1), PreconditionError);
}

TEST_CASE("cut examples") {
  auto halves = cut(Tree::path(5), 1, 2, 0, 0);
  CHECK(isomorphic(halves.first.tree, Tree::path(2)));
  CHECK(isomorphic(halves.second.tree, Tree::path(3)));

  auto doubled = cut(Tree::path(2), 0, 1, 1, 1);
  CHECK(isomorphic(doubled.first.tree, Tree::path(2)));
  CHECK(isomorphic(doubled.second.tree, Tree::path(2)));

  CHECK_THROWS_AS(cut(Tree::path(5), 0, 2, 0, 0), PreconditionError);
}

TEST_CASE("(2,1)-cut keeps the degree of u") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    Tree t = random_tree(2 + rng() % 30, rng());
    auto edges = t.edges();
    Edge e = edges[rng() % edges.size()];
    auto parts = cut(t, e.u, e.v, 2, 1);
    REQUIRE(parts.first.tree.degree(parts.first.endpoint) == t.degree(e.u));
    REQUIRE(parts.second.tree.degree(parts.second.endpoint) == t.degree(e.v));
  }
}

TEST_CASE("cut conserves edges") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    Tree t = random_tree(2 + rng() % 30, rng());
    auto edges = t.edges();
    Edge e = edges[rng() % edges.size()];
    const std::size_t ci = rng() % 4, cj = rng() % 4;
    auto parts = cut(t, e.u, e.v, ci, cj);
    REQUIRE(parts.first.tree.size() + parts.second.tree.size() == t.size() + ci + cj);

    std::vector<Edge> original_edges, new_edges;
    std::size_t fresh = 0;
    for (const auto* part : {&parts.first, &parts.second}) {
      for (const auto& pe : part->tree.edges()) {
        Vertex a = part->origin[pe.u], b = part->origin[pe.v];
        if (a == kNewVertex || b == kNewVertex) {
          ++fresh;
        } else {
          original_edges.push_back({std::min(a, b), std::max(a, b)});
        }
      }
    }
    std::sort(original_edges.begin(), original_edges.end());
    std::vector<Edge> expected;
    for (const auto& x : edges)
      if (!(x == e)) expected.push_back(x);
    REQUIRE(original_edges == expected);
    REQUIRE(fresh == ci + cj);
    REQUIRE(parts.first.origin[parts.first.endpoint] == e.u);
    REQUIRE(parts.second.origin[parts.second.endpoint] == e.v);
  }
}

TEST_CASE("depth-two tree and caterpillar shapes") {
  Tree t = depth_two_tree(3, 4);
  CHECK(t.size() == 1 + 3 + 3 * 3);
  CHECK(t.degree(0) == 3);
  CHECK(t.degree(1) == 4);
  Tree c = caterpillar({0, 2, 0});
  CHECK(isomorphic(c, Tree::star(4)));
}
