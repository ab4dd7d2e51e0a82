#include <doctest.h>

#include <gmpxx.h>

#include <set>

#include "padic/cayley_tree.hpp"

using namespace padic;
using tree::Configuration;
using tree::Vertex;

TEST_CASE("tree counts on the order-2 tree") {
  auto c1 = tree::tree_counts(2, 1);
  CHECK(c1.level_size == 2);
  CHECK(c1.volume == 2);
  CHECK(c1.edges == 0);

  auto c3 = tree::tree_counts(2, 3);
  CHECK(c3.level_size == 8);
  CHECK(c3.volume == 14);
  CHECK(c3.edges == 12);

  // |W_n| - |V_{n-1}| = 2 for every n on the order-2 tree.
  for (int n = 2; n <= 10; ++n)
    CHECK(tree::tree_counts(2, n).level_size -
              tree::tree_counts(2, n - 1).volume ==
          2);
}

TEST_CASE("direct successors extend the path in index order") {
  Vertex root;
  auto s = tree::direct_successors(root, 2);
  REQUIRE(s.size() == 2);
  CHECK(s[0].path == std::vector<int>{1});
  CHECK(s[1].path == std::vector<int>{2});

  Vertex x = Vertex::parse("1.2");
  auto sx = tree::direct_successors(x, 2);
  CHECK(sx[0].to_string() == "1.2.1");
  CHECK(sx[1].to_string() == "1.2.2");
  for (const auto& y : sx) CHECK(y.level() == x.level() + 1);
}

TEST_CASE("vertex parsing round trips") {
  for (const char* s : {"1", "2", "1.1", "2.1.2"})
    CHECK(Vertex::parse(s).to_string() == s);
  CHECK(Vertex::parse("(0)").is_root());
}

TEST_CASE("enumeration counts and order") {
  tree::ConfigurationRange r1(1, 1, 2, Configuration::Domain::Volume);
  CHECK(r1.count() == 4);

  tree::ConfigurationRange r2(2, 1, 2, Configuration::Domain::Level);
  CHECK(r2.count() == 16);

  tree::ConfigurationRange r3(2, 2, 2, Configuration::Domain::Volume);
  CHECK(r3.count() == 729);

  // Lexicographic: first all zeros, last all q, every one distinct.
  std::set<std::vector<int>> seen;
  std::vector<int> prev;
  bool first = true;
  for (const auto& sigma : r3) {
    if (first) {
      CHECK(sigma.spins() == std::vector<int>(6, 0));
      first = false;
    } else {
      CHECK(prev < sigma.spins());
    }
    prev = sigma.spins();
    seen.insert(sigma.spins());
  }
  CHECK(prev == std::vector<int>(6, 2));
  CHECK(seen.size() == 729);

  CHECK_THROWS_AS(tree::ConfigurationRange(10, 9, 2, Configuration::Domain::Volume),
                  EnumerationTooLarge);
  try {
    tree::ConfigurationRange(10, 9, 2, Configuration::Domain::Volume);
  } catch (const EnumerationTooLarge& e) {
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 10, 2046);  // 10^(2+4+...+2^10)
    CHECK(e.count == expect.get_str());
  }
}

TEST_CASE("volume space factors as lower volume times boundary level") {
  for (int q : {1, 2}) {
    tree::ConfigurationRange volumes(2, q, 2, Configuration::Domain::Volume);
    tree::ConfigurationRange lower(1, q, 2, Configuration::Domain::Volume);
    tree::ConfigurationRange boundary(2, q, 2, Configuration::Domain::Level);
    CHECK(volumes.count() == lower.count() * boundary.count());

    std::set<std::vector<int>> joined;
    for (const auto& sigma : lower)
      for (const auto& omega : boundary)
        joined.insert(tree::concat(sigma, omega).spins());
    CHECK(joined.size() == volumes.count());
    for (const auto& sigma : volumes) CHECK(joined.count(sigma.spins()) == 1);
  }
}

TEST_CASE("every non-root vertex has one parent edge") {
  int depth = 4;
  std::vector<int> parent_count(static_cast<std::size_t>(
                                    tree::tree_counts(2, depth).volume),
                                0);
  tree::for_each_edge(depth, 2, [&](std::size_t, std::size_t child) {
    ++parent_count[child];
  });
  auto counts = tree::tree_counts(2, depth);
  // Level-1 vertices have the (excluded) root as parent; the rest exactly one.
  for (std::size_t i = 0; i < 2; ++i) CHECK(parent_count[i] == 0);
  for (std::size_t i = 2; i < static_cast<std::size_t>(counts.volume); ++i)
    CHECK(parent_count[i] == 1);
}

TEST_CASE("spin accessors agree with the flat layout") {
  Configuration sigma(3, 2, 2, Configuration::Domain::Volume);
  sigma.set_spin(Vertex::parse("2.1.2"), 2);
  sigma.set_spin(Vertex::parse("1"), 1);
  CHECK(sigma.spin(Vertex::parse("2.1.2")) == 2);
  CHECK(sigma.spin_at(0) == 1);
  CHECK(sigma.boundary_count(2) == 1);
  CHECK(sigma.boundary_count(0) == 7);
  auto [b, e] = sigma.level_range(3);
  CHECK(e - b == 8);
  CHECK_THROWS_AS(sigma.set_spin(Vertex::parse("2.1.2"), 3), Error);
  CHECK_THROWS_AS((void)sigma.spin(Vertex{}), Error);
}
