#pragma once

#include <optional>
#include <stdexcept>

#include "zagreb/exact.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

/// Bad constructor parameters for a named family.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Path v0 - v1 - ... - v(n-1). n >= 1.
Tree path(int n);

/// Star with center 0. n >= 2.
Tree star(int n);

/// Starlike tree with center 0 of degree n-ks: one branch of k vertices,
/// s-1 branches of k+1 vertices and n-(k+1)s pendant edges. Returns path(n)
/// when n-ks < 3. Requires k >= 1, s >= 1, n >= (k+1)s.
Tree t_nks(int n, int k, int s);

/// Path v0..v(2k+1) (ids 0..2k+1) with n-2(k+1) extra pendants on v_a.
/// Requires n >= 2k+2 and 1 <= a <= k.
Tree t_a_nk2(int n, int k, int a);

/// Attaches to every vertex i of `base` one end of its own path on k vertices.
/// Base vertices keep ids 0..m-1; copy i occupies m+ik .. m+ik+k-1.
Tree corona(const Tree& base, int k);

/// Inverse of corona: the base tree R with corona(R, k) isomorphic to `t`,
/// or nullopt when no such R exists. Every positive answer is verified by
/// reconstruction.
std::optional<Tree> corona_decompose(const Tree& t, int k);

ExactNat closed_form_pi1(int n, int k, int s);
ExactNat closed_form_pi2(int n, int k, int s);

}  // namespace zagreb
