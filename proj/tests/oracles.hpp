#pragma once

// Independent reference computations used only by the test suites.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb::oracle {

/// Tries every vertex permutation. Only for small n (<= 8).
bool isomorphic_by_permutation(const Tree& a, const Tree& b);

/// Isomorphism classes of order n grown from K1 by attaching leaves in every
/// possible position, deduplicated by canonical code.
std::set<std::string> leaf_extension_classes(int n);

/// Distinct canonical codes among all n^(n-2) Prüfer-decoded labeled trees.
std::size_t prufer_class_count(int n);

/// Longest shortest-path length from the all-pairs distance matrix.
int diameter_all_pairs(const Tree& t);

/// Minimum dominating-set size by trying every subset (bitmask), checked with
/// is_k_dominating. n <= 16.
int gamma_by_subsets(const Tree& t, int k);

}  // namespace zagreb::oracle
