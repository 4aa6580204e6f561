#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

inline constexpr int kEnumerationCap = 18;
inline constexpr int kPruferCap = 9;

/// One representative per isomorphism class of free trees on n vertices,
/// held compactly as parent arrays and materialised on demand. Index order
/// is the generation order and is identical on every run.
class TreeStream {
 public:
  TreeStream(int n, std::vector<std::uint8_t> parents);

  int order() const { return n_; }
  std::size_t size() const { return count_; }
  Tree at(std::size_t index) const;

 private:
  int n_;
  std::size_t count_;
  std::vector<std::uint8_t> parents_;  // parent of vertex 1..n-1, per tree
};

/// Throws std::invalid_argument if n < 1 or n > cap.
TreeStream free_trees(int n, int cap = kEnumerationCap);

/// All n^(n-2) labeled trees on n vertices, in Prüfer-sequence order.
class PruferStream {
 public:
  explicit PruferStream(int n);

  int order() const { return n_; }
  std::size_t size() const { return count_; }
  Tree at(std::size_t index) const;

 private:
  int n_;
  std::size_t count_;
};

/// Decodes a Prüfer sequence of length n-2 over 0..n-1.
Tree prufer_decode(int n, const std::vector<int>& sequence);

/// Requires 2 <= n <= kPruferCap.
PruferStream labeled_trees_prufer(int n);

}  // namespace zagreb
