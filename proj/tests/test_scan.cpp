#include <doctest.h>

#include "zagreb/scan.hpp"

using namespace zagreb;

namespace {

bool same_cells(const CellMap& a, const CellMap& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [gamma, cell] : a) {
    auto it = b.find(gamma);
    if (it == b.end()) return false;
    const auto& other = it->second;
    if (cell.class_count != other.class_count || cell.min_pi1 != other.min_pi1 ||
        cell.max_pi2 != other.max_pi2 || cell.min_pi1_trees != other.min_pi1_trees ||
        cell.max_pi2_trees != other.max_pi2_trees) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("parallel evaluation equals the serial reference") {
  auto stream = free_trees(12);
  auto reference = serial::evaluate(stream, 4);
  for (int jobs : {1, 3, 8}) {
    auto got = parallel::evaluate(stream, 4, jobs);
    CHECK(got.codes == reference.codes);
    CHECK(got.pi1 == reference.pi1);
    CHECK(got.pi2 == reference.pi2);
    CHECK(got.max_degree == reference.max_degree);
    CHECK(got.gamma == reference.gamma);
  }
}

TEST_CASE("sharded extremal reduction equals the serial reference") {
  auto stream = free_trees(13);
  auto trees = serial::evaluate(stream, 3);
  for (int k = 1; k <= 3; ++k) {
    auto reference = serial::extremal_cells(trees, k);
    for (int shards : {1, 2, 7, 64, 100000}) {
      for (int jobs : {1, 4}) CHECK(same_cells(parallel::extremal_cells(trees, k, jobs, shards), reference));
    }
  }
}

TEST_CASE("merge_cell keeps ties sorted and counts classes") {
  CellExtrema a{2, 1, ExactNat(5), {7}, ExactNat(9), {7}};
  CellExtrema b{2, 2, ExactNat(5), {3}, ExactNat(11), {4}};
  CellExtrema left = a, right = b;
  merge_cell(left, b);
  merge_cell(right, a);
  CHECK(left.class_count == 3);
  CHECK(left.min_pi1_trees == std::vector<std::size_t>{3, 7});
  CHECK(left.max_pi2 == ExactNat(11));
  CHECK(left.max_pi2_trees == std::vector<std::size_t>{4});
  CHECK(right.min_pi1_trees == left.min_pi1_trees);
  CHECK(right.max_pi2_trees == left.max_pi2_trees);

  CellExtrema empty;
  merge_cell(empty, a);
  CHECK(empty.gamma == 2);
}

TEST_CASE("for_each_index visits every index once and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel::for_each_index(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel::for_each_index(10, 2,
                                           [](std::size_t i) {
                                             if (i == 5) throw std::runtime_error("boom");
                                           }),
                  std::runtime_error);
  std::vector<int> serial_hits(5, 0);
  serial::for_each_index(serial_hits.size(), [&](std::size_t i) { serial_hits[i] = 1; });
  CHECK(serial_hits == std::vector<int>(5, 1));
}
