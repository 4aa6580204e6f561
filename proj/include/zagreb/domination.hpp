#pragma once

#include <span>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

struct DominationResult {
  int gamma = 0;
  std::vector<Vertex> witness;  // ascending
};

/// True iff every vertex lies within distance k of some member of `dominators`.
/// Throws std::invalid_argument for an empty set, bad ids, or k < 1.
bool is_k_dominating(const Tree& t, std::span<const Vertex> dominators, int k);

/// Minimum distance-k dominating set by a single leaves-to-root greedy pass.
DominationResult gamma_k(const Tree& t, int k);

inline constexpr int kBruteForceCap = 16;

/// Increasing-cardinality subset search; independent of gamma_k.
/// Refuses trees larger than `cap` (default kBruteForceCap).
int gamma_k_bruteforce(const Tree& t, int k, int cap = kBruteForceCap);

struct RemovablePendants {
  std::vector<Vertex> pendants;   // B_T: leaves w with gamma_k(T - w) == gamma_k(T)
  std::vector<Vertex> neighbors;  // N_T(B_T)
};

RemovablePendants removable_pendants(const Tree& t, int k);

/// Vertices within k of u and farther than k from every other member of D.
std::vector<Vertex> private_k_neighbors(const Tree& t, std::span<const Vertex> dominators, int k,
                                        Vertex u);

}  // namespace zagreb
