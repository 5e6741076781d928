#include "support/oracles.hpp"
#include "treeprof/errors.hpp"
#include "treeprof/random_tree.hpp"
#include "treeprof/tree.hpp"
#include "treeprof/tree_io.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace treeprof;

TEST_CASE("degree and max_degree on small trees") {
  const Tree star = Tree::star(4);
  CHECK(degree(star, 0) == 4);
  CHECK(max_degree(star) == 4);

  const Tree p5 = Tree::path(5);
  CHECK(degree(p5, 0) == 1);
  CHECK(degree(p5, 4) == 1);
  CHECK(max_degree(Tree::path(2)) == 1);

  const Tree single = Tree::single_vertex();
  CHECK(single.size() == 1);
  CHECK(degree(single, 0) == 0);
  CHECK(max_degree(single) == 0);
  CHECK(single.is_leaf(0));
}

TEST_CASE("degree rejects out-of-range vertices") {
  CHECK_THROWS_AS(Tree::path(3).degree(3), IndexError);
  CHECK_THROWS_AS(Tree::single_vertex().neighbors(1), IndexError);
}

TEST_CASE("from_edges validates the tree invariants") {
  std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(Tree::from_edges(4, cycle), PreconditionError);  // 3 edges, vertex 3 isolated
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Tree::from_edges(2, loop), PreconditionError);
  std::vector<Edge> parallel{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Tree::from_edges(3, parallel), PreconditionError);
  std::vector<Edge> too_few{{0, 1}};
  CHECK_THROWS_AS(Tree::from_edges(3, too_few), PreconditionError);
  CHECK_THROWS_AS(Tree::from_edges(0, {}), PreconditionError);

  std::vector<Edge> shuffled{{3, 1}, {0, 1}, {2, 1}};
  Tree t = Tree::from_edges(4, shuffled);
  auto nb = t.neighbors(1);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 2, 3});
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("adjacency lists are sorted and consistent with degrees") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Tree t = random_tree(1 + seed % 40, seed);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < t.size(); ++v) {
      auto nb = t.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(nb.size() == t.degree(v));
      degree_sum += nb.size();
    }
    CHECK(degree_sum == 2 * (t.size() - 1));
  }
}

TEST_CASE("random_tree edge cases and determinism") {
  CHECK(random_tree(1, 7).size() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(random_tree(2, seed) == Tree::path(2));
  CHECK(random_tree(30, 99) == random_tree(30, 99));
  CHECK(random_tree(30, 99) != random_tree(30, 100));
}

TEST_CASE("random_tree is uniform over labeled trees on 4 vertices") {
  // Cayley: 16 labeled trees, 4 of them stars.
  constexpr int kSamples = 10'000;
  int stars = 0;
  std::map<std::vector<Edge>, int> seen;
  for (int s = 0; s < kSamples; ++s) {
    Tree t = random_tree(4, static_cast<std::uint64_t>(s));
    stars += t.max_degree() == 3;
    ++seen[t.edges()];
  }
  CHECK(seen.size() == 16);
  CHECK(static_cast<double>(stars) / kSamples == Catch::Approx(4.0 / 16).margin(0.02));
}

TEST_CASE("Pruefer decoding matches a known sequence") {
  // Sequence (3,3,3,4) on 6 vertices: leaves 0,1,2 hang on 3, then 3-4, 4-5.
  std::vector<Vertex> seq{3, 3, 3, 4};
  Tree t = from_pruefer(6, seq);
  CHECK(t.edges() == std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
  std::vector<Vertex> bad{6};
  CHECK_THROWS_AS(from_pruefer(3, bad), PreconditionError);
}

TEST_CASE("tree text format is bit-exact") {
  Tree t = Tree::from_edges(4, std::vector<Edge>{{2, 3}, {0, 2}, {1, 2}});
  CHECK(format_tree(t) == "4\n0 2\n1 2\n2 3\n");
  CHECK(format_tree(Tree::single_vertex()) == "1\n");
  CHECK(parse_tree("4\n0 2\n1 2\n2 3\n") == t);
}

TEST_CASE("reader rejects malformed input") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 2"), ParseError);            // unterminated
  CHECK_THROWS_AS(parse_tree("3\n0 1\n"), ParseError);               // missing edge
  CHECK_THROWS_AS(parse_tree("4\n0 1\n1 2\n0 2\n"), ParseError);     // cycle + isolated vertex
  CHECK_THROWS_AS(parse_tree("3\n1 0\n1 2\n"), ParseError);          // u > v
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 3\n"), ParseError);          // out of range
  CHECK_THROWS_AS(parse_tree("3\n0  1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("0\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("2\n0 1\n0 1\n"), ParseError);
  CHECK_NOTHROW(parse_tree("2\n0 1\n\n"));
}

TEST_CASE("write/read round trip preserves random trees exactly") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Tree t = random_tree(1 + seed * 3, seed);
    CHECK(parse_tree(format_tree(t)) == t);
  }
}
