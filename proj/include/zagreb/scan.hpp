#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "zagreb/canonical.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/exact.hpp"

namespace zagreb {

/// Per-tree invariants of a whole TreeStream, stored column-wise by stream
/// index. gamma[k - 1][i] is gamma_k of tree i for k = 1..k_max.
struct EvaluatedTrees {
  int n = 0;
  int k_max = 0;
  std::vector<CanonicalCode> codes;
  std::vector<ExactNat> pi1;  // left at zero when n == 1
  std::vector<ExactNat> pi2;
  std::vector<int> max_degree;
  std::vector<std::vector<int>> gamma;

  std::size_t size() const { return codes.size(); }
  int gamma_of(std::size_t i, int k) const { return gamma[k - 1][i]; }
};

/// Extrema over the trees of one gamma_k value. Achiever lists hold stream
/// indices in ascending order.
struct CellExtrema {
  int gamma = 0;
  std::size_t class_count = 0;
  ExactNat min_pi1;
  std::vector<std::size_t> min_pi1_trees;
  ExactNat max_pi2;
  std::vector<std::size_t> max_pi2_trees;
};

/// Folds `from` into `into`; associative and order-insensitive because the
/// achiever lists are kept sorted.
void merge_cell(CellExtrema& into, const CellExtrema& from);

using CellMap = std::map<int, CellExtrema>;  // keyed by gamma

// Serial reference kernels; the parallel ones must agree with these exactly.
namespace serial {

EvaluatedTrees evaluate(const TreeStream& stream, int k_max);
CellMap extremal_cells(const EvaluatedTrees& trees, int k);
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace serial

// OpenMP kernels. Results are identical for every `jobs` and `shards`.
namespace parallel {

EvaluatedTrees evaluate(const TreeStream& stream, int k_max, int jobs);
CellMap extremal_cells(const EvaluatedTrees& trees, int k, int jobs, int shards);

/// Runs body(i) for i in [0, count) on `jobs` threads. Bodies must only write
/// to per-index state.
void for_each_index(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace parallel

}  // namespace zagreb
