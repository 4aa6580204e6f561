#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zagreb/domination.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"

using namespace zagreb;

using Set = std::vector<Vertex>;

TEST_CASE("is_k_dominating examples") {
  CHECK(is_k_dominating(path(5), Set{2}, 2));
  CHECK_FALSE(is_k_dominating(path(5), Set{0}, 2));
  // Center 0 and the first vertex of the first long branch (id 3: ids 1..2 form the short branch).
  Tree t = t_nks(9, 2, 2);
  REQUIRE(t.adjacent(0, 3));
  CHECK(t.degree(3) == 2);
  CHECK(is_k_dominating(t, Set{0, 3}, 2));
}

TEST_CASE("is_k_dominating rejects bad arguments") {
  CHECK_THROWS_AS(is_k_dominating(path(3), Set{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_k_dominating(path(3), Set{5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_k_dominating(path(3), Set{0}, 0), std::invalid_argument);
}

TEST_CASE("gamma_k examples") {
  for (int n = 2; n <= 12; ++n) CHECK(gamma_k(star(n), 1).gamma == 1);
  CHECK(gamma_k(path(6), 2).gamma == 2);
  CHECK(gamma_k(t_nks(9, 2, 3), 2).gamma == 3);
  CHECK(gamma_k(path(1), 3).gamma == 1);
  CHECK_THROWS_AS(gamma_k(path(4), 0), std::invalid_argument);
}

TEST_CASE("brute-force oracle examples and cap") {
  CHECK(gamma_k_bruteforce(path(5), 2) == 1);
  CHECK(gamma_k_bruteforce(path(7), 1) == 3);
  CHECK(gamma_k_bruteforce(star(6), 3) == 1);
  CHECK_THROWS_AS(gamma_k_bruteforce(path(17), 1), std::invalid_argument);
  CHECK(gamma_k_bruteforce(path(17), 1, 20) == 6);
}

TEST_CASE("library brute force agrees with plain subset search, n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    auto stream = free_trees(n);
    for (std::size_t i = 0; i < stream.size(); ++i) {
      Tree t = stream.at(i);
      for (int k = 1; k <= 3; ++k) CHECK(gamma_k_bruteforce(t, k) == oracle::gamma_by_subsets(t, k));
    }
  }
}

TEST_CASE("greedy gamma_k matches the oracle and returns valid witnesses, n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    auto stream = free_trees(n);
    for (std::size_t i = 0; i < stream.size(); ++i) {
      Tree t = stream.at(i);
      int previous = n + 1;
      for (int k = 1; k <= 4; ++k) {
        auto r = gamma_k(t, k);
        CHECK(r.gamma == gamma_k_bruteforce(t, k));
        CHECK(static_cast<int>(r.witness.size()) == r.gamma);
        CHECK(is_k_dominating(t, r.witness, k));
        CHECK(r.gamma <= previous);
        if (n >= k + 1) CHECK(r.gamma <= n / (k + 1));
        previous = r.gamma;
      }
    }
  }
}

TEST_CASE("gamma_k witness is deterministic and label-driven") {
  auto a = gamma_k(path(7), 1);
  auto b = gamma_k(path(7), 1);
  CHECK(a.witness == b.witness);
  CHECK(a.gamma == 3);
}

TEST_CASE("gamma_k is invariant under relabeling") {
  std::mt19937 rng(7);
  auto stream = free_trees(11);
  for (std::size_t i = 0; i < stream.size(); i += 5) {
    Tree t = stream.at(i);
    std::vector<Vertex> perm(t.order());
    for (int v = 0; v < t.order(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Tree u = relabel(t, perm);
    for (int k = 1; k <= 3; ++k) CHECK(gamma_k(u, k).gamma == gamma_k(t, k).gamma);
    CHECK(pi1(u) == pi1(t));
    CHECK(pi2(u) == pi2(t));
  }
}

TEST_CASE("removable pendants") {
  auto s = removable_pendants(star(5), 1);
  CHECK(s.pendants == Set{1, 2, 3, 4});
  CHECK(s.neighbors == Set{0});
  CHECK(removable_pendants(path(6), 2).pendants.empty());
  CHECK(removable_pendants(path(4), 1).pendants.empty());
  CHECK_THROWS(removable_pendants(path(1), 1));
}

TEST_CASE("private k-neighbors") {
  CHECK(private_k_neighbors(path(6), Set{1, 4}, 2, 1) == Set{0, 1});
  CHECK(private_k_neighbors(path(6), Set{1, 4}, 2, 4) == Set{4, 5});
  CHECK(private_k_neighbors(star(5), Set{0}, 1, 0) == Set{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(private_k_neighbors(path(6), Set{1, 4}, 2, 2), std::invalid_argument);
}
