#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Contracts the non-pendant edge uv into u and hangs a new pendant, which
/// reuses id v, off the merged vertex. Vertex count is unchanged.
Tree contract_pend(const Tree& t, Vertex u, Vertex v);

/// Pendant neighbours of `v`, excluding `other`.
std::vector<Vertex> pendant_neighbors(const Tree& t, Vertex v, Vertex other = -1);

struct PendantMove {
  Tree to_u;  // all of v's pendant neighbours re-attached to u
  Tree to_v;  // all of u's pendant neighbours re-attached to v
};

/// Moves every pendant neighbour of v onto u, and separately every pendant
/// neighbour of u onto v. Both u and v need at least one pendant neighbour
/// other than each other.
PendantMove move_pendants(const Tree& t, Vertex u, Vertex v);

}  // namespace zagreb
