#include "zagreb/indices.hpp"

#include <string>

namespace zagreb {
namespace {

void require_edge(const Tree& t, const char* what) {
  if (t.order() < 2) throw DomainError(std::string(what) + " is undefined for a single vertex");
}

ExactNat self_power(int x) { return ExactNat::pow(ExactNat(static_cast<std::uint64_t>(x)), x); }

}  // namespace

ExactNat first_zagreb(const Tree& t) {
  ExactNat sum;
  for (int d : t.degrees()) sum += ExactNat(static_cast<std::uint64_t>(d) * d);
  return sum;
}

ExactNat second_zagreb(const Tree& t) {
  ExactNat sum;
  for (auto [u, v] : t.edges()) {
    sum += ExactNat(static_cast<std::uint64_t>(t.degree(u)) * t.degree(v));
  }
  return sum;
}

ExactNat pi1(const Tree& t) {
  require_edge(t, "pi1");
  ExactNat product(1);
  for (int d : t.degrees()) {
    if (d > 1) product *= ExactNat(static_cast<std::uint64_t>(d) * d);
  }
  return product;
}

ExactNat pi2(const Tree& t) {
  require_edge(t, "pi2");
  ExactNat product(1);
  for (auto [u, v] : t.edges()) {
    product *= ExactNat(static_cast<std::uint64_t>(t.degree(u)) * t.degree(v));
  }
  return product;
}

ExactNat pi2_vertex_form(const Tree& t) {
  require_edge(t, "pi2");
  ExactNat product(1);
  for (int d : t.degrees()) {
    if (d > 1) product *= self_power(d);
  }
  return product;
}

ExactNat f_aux(const Tree& t) {
  ExactNat product(1);
  for (int d : t.degrees()) product *= ExactNat(static_cast<std::uint64_t>(d) + 1);
  return product;
}

ExactNat h_aux(const Tree& t) {
  ExactNat product(1);
  for (int d : t.degrees()) product *= self_power(d + 1);
  return product;
}

ExactRatio g_ratio(int x) {
  if (x < 2) throw DomainError("g_ratio requires x >= 2, got " + std::to_string(x));
  return ExactRatio{self_power(x), self_power(x - 1)};
}

}  // namespace zagreb
