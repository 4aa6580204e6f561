#pragma once

#include "zagreb/scan.hpp"

namespace zagreb::detail {

void evaluate_one(const TreeStream& stream, std::size_t i, EvaluatedTrees& out);
EvaluatedTrees allocate(const TreeStream& stream, int k_max);
void accumulate(const EvaluatedTrees& trees, int k, std::size_t begin, std::size_t end, CellMap& cells);

}  // namespace zagreb::detail
