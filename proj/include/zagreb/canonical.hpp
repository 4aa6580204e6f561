#pragma once

#include <compare>
#include <string>

#include "zagreb/tree.hpp"

namespace zagreb {

/// Isomorphism-class key for free trees.
///
/// The code is an AHU parenthesis word over {1,0} ('1' opens a vertex, '0'
/// closes it) rooted at the centroid. A bicentroidal tree is cut at the
/// centroid edge and its two rooted halves are concatenated in sorted order.
/// Every code of an n-vertex tree has length exactly 2n.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bits) : bits_(std::move(bits)) {}

  const std::string& bits() const { return bits_; }
  std::size_t vertex_count() const { return bits_.size() / 2; }

  /// Bits packed four per hex digit, most significant first, zero-padded.
  std::string to_hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a,
                                          const CanonicalCode& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::string bits_;
};

CanonicalCode canonical_code(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);

/// One or two centroid vertices, ascending.
std::vector<Vertex> centroids(const Tree& t);

/// AHU word of the subtree at `root`, entered from `parent` (-1 for none).
std::string rooted_code(const Tree& t, Vertex root, Vertex parent);

}  // namespace zagreb
