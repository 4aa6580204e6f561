#pragma once

#include <stdexcept>

#include "zagreb/exact.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

/// Thrown when an index is requested outside its domain (e.g. Π1 of K1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Classical Zagreb indices: sum of squared degrees, sum over edges of d(u)d(v).
ExactNat first_zagreb(const Tree& t);
ExactNat second_zagreb(const Tree& t);

/// Product of squared degrees. Requires n >= 2.
ExactNat pi1(const Tree& t);

/// Product over edges of d(u)d(v). Requires n >= 2.
ExactNat pi2(const Tree& t);

/// Product over vertices of d(u)^d(u); equal to pi2 on every graph.
ExactNat pi2_vertex_form(const Tree& t);

/// Product of (d(w)+1). Defined for n >= 1.
ExactNat f_aux(const Tree& t);

/// Product of (d(w)+1)^(d(w)+1). Defined for n >= 1.
ExactNat h_aux(const Tree& t);

/// x^x / (x-1)^(x-1) for x >= 2.
ExactRatio g_ratio(int x);

}  // namespace zagreb
