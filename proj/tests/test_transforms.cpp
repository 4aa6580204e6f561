#include <doctest.h>

#include "zagreb/canonical.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/transforms.hpp"

using namespace zagreb;

namespace {

// u = 0 with pendants 2, 3; v = 1 with pendants 4, 5, 6.
Tree double_star() { return Tree::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}}); }

}  // namespace

TEST_CASE("contract_pend on P4") {
  Tree c = contract_pend(path(4), 1, 2);
  CHECK(is_isomorphic(c, star(4)));
  CHECK(c.degree(1) == 3);
  CHECK(c.degree(2) == 1);  // reused id becomes the new pendant
  CHECK(pi1(c) == ExactNat(9));
  CHECK(pi1(path(4)) == ExactNat(16));
  CHECK(pi2(c) == ExactNat(27));
  CHECK(pi2(path(4)) == ExactNat(16));
}

TEST_CASE("contract_pend rejects pendant and absent edges") {
  CHECK_THROWS_AS(contract_pend(path(4), 0, 1), TransformError);
  CHECK_THROWS_AS(contract_pend(path(4), 0, 2), TransformError);
}

TEST_CASE("move_pendants on a double star") {
  Tree g = double_star();
  auto moved = move_pendants(g, 0, 1);
  CHECK(is_isomorphic(moved.to_u, star(7)));
  CHECK(is_isomorphic(moved.to_v, star(7)));
  CHECK(pi1(g) == ExactNat(144));
  CHECK(pi1(moved.to_u) == ExactNat(36));
  CHECK(pi2(g) == ExactNat(6912));
  CHECK(pi2(moved.to_u) == ExactNat(46656));
}

TEST_CASE("move_pendants argument checks") {
  CHECK_THROWS_AS(move_pendants(path(5), 1, 2), TransformError);  // 2 has no pendant neighbour
  CHECK_THROWS_AS(move_pendants(double_star(), 0, 0), TransformError);
  CHECK_THROWS_AS(move_pendants(double_star(), 0, 2), TransformError);
  CHECK(pendant_neighbors(double_star(), 0) == std::vector<Vertex>{2, 3});
  CHECK(pendant_neighbors(path(2), 0, 1).empty());
}

TEST_CASE("move_pendants may leave v as a pendant when u, v are adjacent") {
  Tree g = Tree::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
  auto moved = move_pendants(g, 0, 1);
  CHECK(moved.to_u.degree(1) == 1);
  CHECK(moved.to_u.order() == 5);
}

TEST_CASE("contract_pend is index-monotone on every tree n <= 10") {
  for (int n = 4; n <= 10; ++n) {
    auto stream = free_trees(n);
    for (std::size_t i = 0; i < stream.size(); ++i) {
      Tree t = stream.at(i);
      for (auto [u, v] : t.edges()) {
        if (t.degree(u) < 2 || t.degree(v) < 2) continue;
        Tree c = contract_pend(t, u, v);
        CHECK(c.order() == n);
        CHECK(pi1(c) < pi1(t));
        CHECK(pi2(c) > pi2(t));
      }
    }
  }
}

TEST_CASE("pendant moves: at least one of G', G'' improves both indices, n <= 10") {
  for (int n = 4; n <= 10; ++n) {
    auto stream = free_trees(n);
    for (std::size_t i = 0; i < stream.size(); ++i) {
      Tree t = stream.at(i);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u == v || pendant_neighbors(t, u, v).empty() || pendant_neighbors(t, v, u).empty()) continue;
          auto moved = move_pendants(t, u, v);
          CHECK(moved.to_u.order() == n);
          CHECK(moved.to_v.order() == n);
          CHECK(std::min(pi1(moved.to_u), pi1(moved.to_v)) < pi1(t));
          CHECK(std::max(pi2(moved.to_u), pi2(moved.to_v)) > pi2(t));
        }
      }
    }
  }
}

TEST_CASE("the 'both moves improve' reading has counterexamples") {
  // u = 0 (pendant 5), v = 1 (pendant 2); moving 5 onto 1 leaves Pi1 unchanged.
  Tree g = Tree::from_edges(6, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}});
  auto moved = move_pendants(g, 0, 1);
  CHECK(pi1(moved.to_v) == pi1(g));
  CHECK(pi2(moved.to_v) == pi2(g));
  CHECK(pi1(moved.to_u) < pi1(g));
}
