#include "doctest.h"

#include <stdexcept>

#include "fgv/ledger.hpp"

using namespace fgv::ledger;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto t = DivisorPolynomial::theta(2);
  auto e = DivisorPolynomial::exceptional(-4);
  auto s = t + e;
  CHECK(s.is_linear());
  CHECK_FALSE((s * s).is_linear());

  // cancellation removes terms
  auto z = DivisorPolynomial::theta(1) + DivisorPolynomial::theta(-1);
  CHECK(z.terms().empty());

  CHECK_THROWS_AS(DivisorPolynomial::monomial(3, 2, 1), std::invalid_argument);
}

TEST_CASE("expand_power matches the binomial theorem") {
  auto base = DivisorPolynomial::theta(2) + DivisorPolynomial::exceptional(-4);
  auto p = expand_power(base, 4);
  REQUIRE(p.terms().size() == 5);
  for (int i = 0; i <= 4; ++i) {
    auto it = p.terms().find({4 - i, i});
    REQUIRE(it != p.terms().end());
    CHECK(it->second == binomial(4, i) * ipow(2, 4 - i) * ipow(-4, i));
  }
  // spot values: 16, -128, 384, -512, 256
  CHECK(p.terms().at({4, 0}) == 16);
  CHECK(p.terms().at({3, 1}) == -128);
  CHECK(p.terms().at({2, 2}) == 384);
  CHECK(p.terms().at({1, 3}) == -512);
  CHECK(p.terms().at({0, 4}) == 256);

  // repeated multiplication agrees
  CHECK(p == base * base * base * base);

  CHECK_THROWS_AS(expand_power(base * base, 2), std::invalid_argument);
  CHECK_THROWS_AS(expand_power(base, -1), std::invalid_argument);
}

TEST_CASE("intersection evaluation") {
  auto rules = IntersectionRules::defaults();
  CHECK(rules.top_values.at({4, 0}) == 24);
  CHECK(rules.top_values.at({0, 4}) == -1);

  auto base = DivisorPolynomial::theta(2) + DivisorPolynomial::exceptional(-4);
  // 16*24 + 256*(-1) = 384 - 256 = 128, mixed terms contribute nothing
  CHECK(evaluate_intersection(expand_power(base, 4), rules) == 128);

  CHECK_THROWS_AS(evaluate_intersection(base, rules), std::invalid_argument);
}

TEST_CASE("boundary degree and rule sensitivity") {
  CHECK(gamma00_degree() == 64);

  // dropping the exceptional self-intersection shifts the value: the -1 matters
  auto rules = IntersectionRules::defaults();
  rules.top_values[{0, 4}] = 0;
  CHECK(gamma00_degree(rules) == 192);
}

TEST_CASE("degree ledger") {
  auto l = schottky_degree_ledger();
  REQUIRE(l.entries.size() == 3);
  CHECK(l.entries[0].degree == 1);
  CHECK(l.entries[1].degree == 54);
  CHECK(l.entries[2].degree == 64);
  CHECK(l.total == 119);
  CHECK(l.q8_point_count == 119);
  CHECK(l.formula_count == 119);
  CHECK(l.cross_checks_ok);

  // bad rules break the cross-check loudly
  auto rules = IntersectionRules::defaults();
  rules.top_values[{0, 4}] = 0;
  CHECK_THROWS_AS(schottky_degree_ledger(rules), std::logic_error);
}
