#include <doctest.h>

#include "zagreb/canonical.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"

using namespace zagreb;

namespace {

ExactNat N(std::uint64_t v) { return ExactNat(v); }
ExactNat P(std::uint64_t b, unsigned e) { return ExactNat::pow(N(b), e); }

}  // namespace

TEST_CASE("ExactNat arithmetic and decimal round trip") {
  auto big = P(17, 17) * P(16, 16);
  CHECK(ExactNat::from_decimal(big.to_decimal()) == big);
  CHECK(P(16, 16).to_decimal() == "18446744073709551616");
  CHECK(N(3) + N(4) == N(7));
  CHECK(N(2) < N(3));
  CHECK_THROWS(ExactNat::from_decimal("12a"));
  CHECK_THROWS(ExactNat::from_decimal(""));
}

TEST_CASE("classical Zagreb indices") {
  CHECK(first_zagreb(path(4)) == N(10));
  CHECK(second_zagreb(path(4)) == N(8));
  CHECK(first_zagreb(star(5)) == N(20));
}

TEST_CASE("pi1 and pi2 examples") {
  CHECK(pi1(star(5)) == N(16));
  CHECK(pi1(path(5)) == N(64));
  CHECK(pi1(t_nks(9, 2, 2)) == N(1600));
  CHECK(pi2(star(5)) == N(256));
  CHECK(pi2(path(5)) == N(64));
  CHECK(pi2(t_nks(9, 2, 2)) == N(200000));
}

TEST_CASE("pi1 and pi2 reject the single vertex") {
  Tree k1 = path(1);
  CHECK_THROWS_AS(pi1(k1), DomainError);
  CHECK_THROWS_AS(pi2(k1), DomainError);
  CHECK(f_aux(k1) == N(1));
  CHECK(h_aux(k1) == N(1));
}

TEST_CASE("f and h examples") {
  CHECK(f_aux(star(4)) == N(32));
  CHECK(f_aux(path(4)) == N(36));
  CHECK(h_aux(star(4)) == N(16384));
}

TEST_CASE("path and star closed forms for n = 2..20") {
  for (unsigned n = 2; n <= 20; ++n) {
    CHECK(pi1(path(n)) == P(4, n - 2));
    CHECK(pi2(path(n)) == P(4, n - 2));
    CHECK(pi1(star(n)) == P(n - 1, 2));
    CHECK(pi2(star(n)) == P(n - 1, n - 1));
  }
  // Pi2 of the 17-vertex star already exceeds 64 bits.
  CHECK(pi2(star(17)) > N(~std::uint64_t{0}));
}

TEST_CASE("edge and vertex forms of pi2 agree on all trees n <= 12") {
  for (int n = 2; n <= 12; ++n) {
    auto stream = free_trees(n);
    for (std::size_t i = 0; i < stream.size(); ++i) {
      Tree t = stream.at(i);
      CHECK(pi2(t) == pi2_vertex_form(t));
    }
  }
}

TEST_CASE("product lemmas with equality exactly at the star, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    auto stream = free_trees(n);
    auto star_code = canonical_code(n == 1 ? path(1) : star(n));
    auto f_bound = P(2, n - 1) * N(n);
    auto h_bound = P(4, n - 1) * P(n, n);
    for (std::size_t i = 0; i < stream.size(); ++i) {
      Tree t = stream.at(i);
      bool is_star = canonical_code(t) == star_code;
      CHECK(f_aux(t) >= f_bound);
      CHECK(h_aux(t) <= h_bound);
      CHECK((f_aux(t) == f_bound) == is_star);
      CHECK((h_aux(t) == h_bound) == is_star);
    }
  }
}

TEST_CASE("g_ratio") {
  CHECK(g_ratio(2).numerator == N(4));
  CHECK(g_ratio(2).denominator == N(1));
  CHECK(g_ratio(3).numerator == N(27));
  CHECK(g_ratio(3).denominator == N(4));
  // 27 * 1 > 4 * 4
  CHECK(g_ratio(3) > g_ratio(2));
  for (int x = 2; x <= 64; ++x) CHECK(g_ratio(x + 1) > g_ratio(x));
  CHECK_THROWS_AS(g_ratio(1), DomainError);
}
