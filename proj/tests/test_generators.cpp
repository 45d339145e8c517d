#include <catch_amalgamated.hpp>

#include "grundy/generators.hpp"
#include "grundy/structure.hpp"

using namespace grundy;

TEST_CASE("bounded draws stay in range and cover it") {
  gen::Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    auto x = gen::uniform_below(rng, 7);
    REQUIRE(x < 7);
    ++hits[x];
  }
  for (int h : hits) CHECK(h > 800);
  for (int i = 0; i < 100; ++i) {
    int x = gen::uniform_int(rng, -3, 3);
    REQUIRE(x >= -3);
    REQUIRE(x <= 3);
  }
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(gen::random_tree(6, 1) == gen::random_tree(6, 1));
  CHECK(gen::random_block_graph(20, 4, 9) == gen::random_block_graph(20, 4, 9));
  CHECK(gen::random_connected_graph(12, 5, 3) == gen::random_connected_graph(12, 5, 3));
  CHECK(gen::subdivided_tree(10, 2) == gen::subdivided_tree(10, 2));
  bool differs = false;
  for (std::uint64_t s = 2; s < 10; ++s) differs |= !(gen::random_tree(10, 1) == gen::random_tree(10, s));
  CHECK(differs);
}

TEST_CASE("random trees are trees") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    int n = 1 + static_cast<int>(s % 30);
    auto t = gen::random_tree(n, s);
    REQUIRE(t.num_vertices() == n);
    REQUIRE(t.num_edges() == n - 1);
    REQUIRE(is_connected(t));
  }
}

TEST_CASE("random block graphs") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    auto g = gen::random_block_graph(9, 4, s);
    REQUIRE(g.num_vertices() == 9);
    REQUIRE(is_connected(g));
    REQUIRE(is_block_graph(g));
    REQUIRE(block_decomposition(g).max_block_size() <= 4);
  }
  CHECK_THROWS_AS(gen::random_block_graph(5, 1, 0), InvalidArgument);
}

TEST_CASE("subdivided trees reach the girth threshold") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto g = gen::subdivided_tree(8, s);
    REQUIRE(is_connected(g));
    REQUIRE(girth(g).has_value());
    REQUIRE(*girth(g) >= 2 * degree_profile(g).delta2 + 1);
  }
}

TEST_CASE("fixed shapes") {
  CHECK(gen::petersen().num_edges() == 15);
  for (int v = 0; v < 10; ++v) CHECK(gen::petersen().degree(v) == 3);
  CHECK(gen::spider(3, 2).num_vertices() == 7);
  CHECK(gen::perfect_binary_tree(2).num_vertices() == 7);
  CHECK(gen::star(4).degree(0) == 4);
  CHECK(gen::figure2_fixture().num_edges() == 19);
  CHECK_THROWS_AS(gen::cycle(2), InvalidArgument);
}
