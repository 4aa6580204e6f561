#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zagreb {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed tree input (cycles, disconnection, bad ids).
class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable tree on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction validates that the edge list describes a tree, so every
/// instance satisfies: n-1 edges, connected, symmetric adjacency, no loops
/// and no parallel edges. A single vertex with no edges is a valid tree.
class Tree {
 public:
  static Tree from_edges(int n, std::span<const Edge> edges);
  static Tree from_edges(int n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }

  int order() const { return static_cast<int>(adjacency_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const;

  /// Edges as (min, max) pairs in increasing order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::vector<std::vector<Vertex>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<Vertex>> adjacency_;
};

std::vector<int> distances_from(const Tree& t, Vertex v);
std::vector<std::vector<int>> distance_matrix(const Tree& t);

int diameter(const Tree& t);

/// A longest path; among all of them the lexicographically smallest vertex
/// sequence.
std::vector<Vertex> diametral_path(const Tree& t);

std::vector<Vertex> pendant_vertices(const Tree& t);

/// Applies a vertex permutation: vertex v of `t` becomes perm[v].
Tree relabel(const Tree& t, std::span<const Vertex> perm);

/// Removes vertex v (which must be a leaf, or the only vertex of a two-vertex
/// tree) and compacts ids: ids above v shift down by one.
Tree remove_leaf(const Tree& t, Vertex v);

/// Vertex subset induced subgraph, relabelled in increasing id order.
/// Throws TreeError if the induced subgraph is not a tree.
Tree induced_subtree(const Tree& t, std::span<const Vertex> keep);

}  // namespace zagreb
