#include <algorithm>
#include <exception>

#include "scan_detail.hpp"

namespace zagreb {
namespace parallel {

void for_each_index(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const auto total = static_cast<long long>(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, jobs))
  for (long long i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(zagreb_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

EvaluatedTrees evaluate(const TreeStream& stream, int k_max, int jobs) {
  auto out = detail::allocate(stream, k_max);
  for_each_index(stream.size(), jobs, [&](std::size_t i) { detail::evaluate_one(stream, i, out); });
  return out;
}

CellMap extremal_cells(const EvaluatedTrees& trees, int k, int jobs, int shards) {
  const std::size_t count = trees.size();
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(shards, std::max<std::size_t>(count, 1)));
  std::vector<CellMap> partial(parts);
  for_each_index(parts, jobs, [&](std::size_t s) {
    std::size_t begin = count * s / parts;
    std::size_t end = count * (s + 1) / parts;
    detail::accumulate(trees, k, begin, end, partial[s]);
  });
  CellMap cells;
  for (const auto& part : partial) {
    for (const auto& [gamma, cell] : part) merge_cell(cells[gamma], cell);
  }
  return cells;
}

}  // namespace parallel
}  // namespace zagreb
