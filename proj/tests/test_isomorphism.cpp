#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dihedra/cayley.hpp"
#include "dihedra/isomorphism.hpp"

using namespace dihedra;

namespace {

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST(BruteForceIsomorphism, FindsRelabelings) {
  std::mt19937 rng(1);
  for (const auto& s : enumerate_typed_cubic_sets(8)) {
    const Graph g = build_graph(s).graph();
    const Graph h = g.relabeled(shuffled(g.vertex_count(), rng));
    const auto perm = brute_force_isomorphism(g, h);
    ASSERT_TRUE(perm);
    EXPECT_TRUE(is_isomorphism(g, h, *perm));
  }
}

TEST(BruteForceIsomorphism, SeparatesPrismFromMoebiusLadder) {
  // Both are cubic on 2n vertices; the Moebius ladder has a twisted rung.
  for (std::size_t n = 3; n <= 9; ++n) {
    Graph moebius(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) moebius.add_edge(i, (i + 1) % (2 * n));
    for (std::size_t i = 0; i < n; ++i) moebius.add_edge(i, i + n);
    EXPECT_FALSE(brute_force_isomorphism(build_prism(static_cast<std::int64_t>(n)), moebius));
  }
}

TEST(BruteForceIsomorphism, VertexTransitiveGraphs) {
  std::mt19937 rng(2);
  const Graph p = petersen();
  const auto perm = brute_force_isomorphism(p, p.relabeled(shuffled(10, rng)));
  ASSERT_TRUE(perm);
  // Petersen vs the pentagonal prism: same degree sequence, not isomorphic.
  EXPECT_FALSE(brute_force_isomorphism(p, build_prism(5)));
}

TEST(BruteForceIsomorphism, TrivialCases) {
  EXPECT_TRUE(brute_force_isomorphism(Graph(0), Graph(0)));
  EXPECT_TRUE(brute_force_isomorphism(Graph(3), Graph(3)));
  EXPECT_FALSE(brute_force_isomorphism(Graph(3), Graph(4)));
  Graph a(4), b(4);
  a.add_edge(0, 1);
  b.add_edge(0, 1);
  b.add_edge(2, 3);
  EXPECT_FALSE(brute_force_isomorphism(a, b));
}

TEST(BruteForceIsomorphism, DisconnectedGraphs) {
  Graph two_k4(8);
  for (std::size_t base : {0u, 4u}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) two_k4.add_edge(base + i, base + j);
    }
  }
  std::mt19937 rng(3);
  EXPECT_TRUE(brute_force_isomorphism(two_k4, two_k4.relabeled(shuffled(8, rng))));
  EXPECT_FALSE(brute_force_isomorphism(two_k4, build_prism(4)));

  // {a^2, a^6, b} on D_16 splits into two prisms over C_4.
  const Graph twice = build_graph(ConnectionSet::type_i(8, 2, 0)).graph();
  EXPECT_EQ(component_count(twice), 2u);
  const auto perm = brute_force_isomorphism(twice, twice.relabeled(shuffled(16, rng)));
  ASSERT_TRUE(perm);
  EXPECT_FALSE(brute_force_isomorphism(twice, build_prism(8)));
}

TEST(BruteForceIsomorphism, IsIsomorphismRejectsBadPermutations) {
  const Graph g = build_prism(4);
  std::vector<std::size_t> id(8);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(is_isomorphism(g, g, id));
  std::vector<std::size_t> dup = id;
  dup[1] = 0;
  EXPECT_FALSE(is_isomorphism(g, g, dup));
  std::swap(id[0], id[1]);
  EXPECT_FALSE(is_isomorphism(g, g, id));
}

TEST(BruteForceIsomorphism, Deterministic) {
  const Graph a = build_graph(ConnectionSet::type_ii(7, 0, 1, 3)).graph();
  const Graph b = build_graph(ConnectionSet::type_ii(7, 0, 2, 6)).graph();
  EXPECT_EQ(brute_force_isomorphism(a, b), brute_force_isomorphism(a, b));
}
