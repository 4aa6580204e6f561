#include "zagreb/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zagreb/canonical.hpp"

namespace zagreb {
namespace {

Tree from_parents(int n, const std::uint8_t* parents) {
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) edges.emplace_back(parents[v - 1], v);
  return Tree::from_edges(n, edges);
}

// Accepts a rooted level sequence iff the root is a centroid and, for a
// bicentroidal tree, the root's half is not smaller than the other half.
// Exactly one rooting of each free tree passes.
bool centroid_canonical(int n, const std::vector<int>& parent, std::vector<int>& size) {
  std::fill(size.begin(), size.end(), 1);
  for (int v = n - 1; v >= 1; --v) size[parent[v]] += size[v];
  int heavy_child = -1;
  for (int v = 1; v < n; ++v) {
    if (parent[v] != 0) continue;
    if (2 * size[v] > n) return false;
    if (2 * size[v] == n) heavy_child = v;
  }
  if (heavy_child < 0) return true;

  std::vector<std::uint8_t> packed(n - 1);
  for (int v = 1; v < n; ++v) packed[v - 1] = static_cast<std::uint8_t>(parent[v]);
  Tree t = from_parents(n, packed.data());
  return rooted_code(t, 0, heavy_child) >= rooted_code(t, heavy_child, 0);
}

}  // namespace

TreeStream::TreeStream(int n, std::vector<std::uint8_t> parents)
    : n_(n), count_(n > 1 ? parents.size() / (n - 1) : 1), parents_(std::move(parents)) {}

Tree TreeStream::at(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("tree index " + std::to_string(index) + " out of range");
  if (n_ == 1) return Tree::from_edges(1, std::vector<Edge>{});
  return from_parents(n_, parents_.data() + index * (n_ - 1));
}

TreeStream free_trees(int n, int cap) {
  if (n < 1) throw std::invalid_argument("free_trees requires n >= 1");
  if (n > cap) {
    throw std::invalid_argument("enumeration cap exceeded: n=" + std::to_string(n) +
                                " > cap=" + std::to_string(cap));
  }
  if (n > 255) throw std::invalid_argument("free_trees supports n <= 255");
  std::vector<std::uint8_t> out;
  if (n == 1) return TreeStream(1, std::move(out));

  // Beyer-Hedetniemi successor over level sequences, root at level 0,
  // starting from the path and ending at the star.
  std::vector<int> level(n), parent(n, -1), size(n), last_at_level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  while (true) {
    for (int v = 1; v < n; ++v) {
      last_at_level[level[v - 1]] = v - 1;
      parent[v] = last_at_level[level[v] - 1];
    }
    if (centroid_canonical(n, parent, size)) {
      for (int v = 1; v < n; ++v) out.push_back(static_cast<std::uint8_t>(parent[v]));
    }
    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return TreeStream(n, std::move(out));
}

Tree prufer_decode(int n, const std::vector<int>& sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
    throw std::invalid_argument("Prüfer sequence must have length n-2");
  }
  std::vector<int> degree(n, 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw std::invalid_argument("Prüfer label out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return Tree::from_edges(n, edges);
}

PruferStream::PruferStream(int n) : n_(n), count_(1) {
  for (int i = 0; i < n - 2; ++i) count_ *= static_cast<std::size_t>(n);
}

Tree PruferStream::at(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("Prüfer index out of range");
  std::vector<int> seq(n_ - 2);
  for (int i = n_ - 3; i >= 0; --i) {
    seq[i] = static_cast<int>(index % n_);
    index /= n_;
  }
  return prufer_decode(n_, seq);
}

PruferStream labeled_trees_prufer(int n) {
  if (n < 2 || n > kPruferCap) {
    throw std::invalid_argument("labeled_trees_prufer requires 2 <= n <= " +
                                std::to_string(kPruferCap) + ", got n=" + std::to_string(n));
  }
  return PruferStream(n);
}

}  // namespace zagreb
