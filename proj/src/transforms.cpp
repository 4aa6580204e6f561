#include "zagreb/transforms.hpp"

#include <algorithm>
#include <string>

namespace zagreb {
namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

Tree reattach(const Tree& t, const std::vector<Vertex>& moved, Vertex from, Vertex to) {
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) {
    bool hit = (a == from && std::binary_search(moved.begin(), moved.end(), b)) ||
               (b == from && std::binary_search(moved.begin(), moved.end(), a));
    if (hit) {
      edges.emplace_back(to, a == from ? b : a);
    } else {
      edges.emplace_back(a, b);
    }
  }
  return Tree::from_edges(t.order(), edges);
}

}  // namespace

Tree contract_pend(const Tree& t, Vertex u, Vertex v) {
  if (!t.adjacent(u, v)) throw TransformError("no edge " + pair_text(u, v));
  if (t.degree(u) < 2 || t.degree(v) < 2) {
    throw TransformError("edge " + pair_text(u, v) + " is a pendant edge");
  }
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) {
      edges.emplace_back(u, v);  // becomes the new pendant edge u-w, w = v
    } else if (a == v) {
      edges.emplace_back(u, b);
    } else if (b == v) {
      edges.emplace_back(a, u);
    } else {
      edges.emplace_back(a, b);
    }
  }
  return Tree::from_edges(t.order(), edges);
}

std::vector<Vertex> pendant_neighbors(const Tree& t, Vertex v, Vertex other) {
  std::vector<Vertex> out;
  for (Vertex y : t.neighbors(v)) {
    if (y != other && t.degree(y) == 1) out.push_back(y);
  }
  return out;
}

PendantMove move_pendants(const Tree& t, Vertex u, Vertex v) {
  if (!t.contains(u) || !t.contains(v)) throw TransformError("vertex out of range " + pair_text(u, v));
  if (u == v) throw TransformError("move_pendants needs two distinct vertices");
  auto at_u = pendant_neighbors(t, u, v);
  auto at_v = pendant_neighbors(t, v, u);
  if (at_u.empty()) throw TransformError("vertex " + std::to_string(u) + " has no pendant neighbor");
  if (at_v.empty()) throw TransformError("vertex " + std::to_string(v) + " has no pendant neighbor");
  return PendantMove{reattach(t, at_v, v, u), reattach(t, at_u, u, v)};
}

}  // namespace zagreb
