#include <algorithm>

#include "zagreb/domination.hpp"
#include "zagreb/indices.hpp"
#include "scan_detail.hpp"

namespace zagreb {

void merge_cell(CellExtrema& into, const CellExtrema& from) {
  if (from.class_count == 0) return;
  if (into.class_count == 0) {
    into = from;
    return;
  }
  into.class_count += from.class_count;

  auto absorb = [](std::vector<std::size_t>& dst, const std::vector<std::size_t>& src) {
    std::vector<std::size_t> merged;
    merged.reserve(dst.size() + src.size());
    std::merge(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(merged));
    dst = std::move(merged);
  };
  if (from.min_pi1 < into.min_pi1) {
    into.min_pi1 = from.min_pi1;
    into.min_pi1_trees = from.min_pi1_trees;
  } else if (from.min_pi1 == into.min_pi1) {
    absorb(into.min_pi1_trees, from.min_pi1_trees);
  }
  if (from.max_pi2 > into.max_pi2) {
    into.max_pi2 = from.max_pi2;
    into.max_pi2_trees = from.max_pi2_trees;
  } else if (from.max_pi2 == into.max_pi2) {
    absorb(into.max_pi2_trees, from.max_pi2_trees);
  }
}

namespace detail {

void evaluate_one(const TreeStream& stream, std::size_t i, EvaluatedTrees& out) {
  Tree t = stream.at(i);
  out.codes[i] = canonical_code(t);
  out.max_degree[i] = t.max_degree();
  if (t.order() >= 2) {
    out.pi1[i] = pi1(t);
    out.pi2[i] = pi2(t);
  }
  for (int k = 1; k <= out.k_max; ++k) out.gamma[k - 1][i] = gamma_k(t, k).gamma;
}

EvaluatedTrees allocate(const TreeStream& stream, int k_max) {
  EvaluatedTrees out;
  out.n = stream.order();
  out.k_max = k_max;
  out.codes.resize(stream.size());
  out.pi1.resize(stream.size());
  out.pi2.resize(stream.size());
  out.max_degree.resize(stream.size());
  out.gamma.assign(k_max, std::vector<int>(stream.size()));
  return out;
}

void accumulate(const EvaluatedTrees& trees, int k, std::size_t begin, std::size_t end, CellMap& cells) {
  for (std::size_t i = begin; i < end; ++i) {
    CellExtrema single;
    single.gamma = trees.gamma_of(i, k);
    single.class_count = 1;
    single.min_pi1 = trees.pi1[i];
    single.min_pi1_trees = {i};
    single.max_pi2 = trees.pi2[i];
    single.max_pi2_trees = {i};
    merge_cell(cells[single.gamma], single);
  }
}

}  // namespace detail

namespace serial {

EvaluatedTrees evaluate(const TreeStream& stream, int k_max) {
  auto out = detail::allocate(stream, k_max);
  for (std::size_t i = 0; i < stream.size(); ++i) detail::evaluate_one(stream, i, out);
  return out;
}

CellMap extremal_cells(const EvaluatedTrees& trees, int k) {
  CellMap cells;
  detail::accumulate(trees, k, 0, trees.size(), cells);
  return cells;
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace serial
}  // namespace zagreb
