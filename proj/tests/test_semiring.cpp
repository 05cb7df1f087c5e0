#include <catch_amalgamated.hpp>

#include "eulercalc/semiring.hpp"

using namespace eulercalc;

TEST_CASE("A: sums take the larger dimension, products add them", "[semiring]") {
  const EulerDim p(1, 0);
  const EulerDim open(-1, 1);
  CHECK(p + open == EulerDim(0, 1));
  CHECK(open * open == EulerDim(1, 2));
  CHECK(EulerDim(3, 2) + EulerDim(-5, 1) == EulerDim(-2, 2));
}

TEST_CASE("A: bottom is the zero and absorbs products", "[semiring]") {
  const EulerDim z = EulerDim::zero();
  CHECK(z.is_zero());
  CHECK(z + EulerDim(4, 3) == EulerDim(4, 3));
  CHECK(z * EulerDim(4, 3) == z);
  CHECK(EulerDim::one() * EulerDim(4, 3) == EulerDim(4, 3));
  CHECK(EulerDim::count(0) == z);
  CHECK(EulerDim::count(7) == EulerDim(7, 0));
}

TEST_CASE("A: a bottom dimension forces a zero Euler part", "[semiring]") {
  CHECK_THROWS_AS(EulerDim(BigInt(2), Dim::bottom()), RejectedInput);
  CHECK_NOTHROW(EulerDim(BigInt(0), Dim::bottom()));
}

TEST_CASE("A: a zero Euler part with a real dimension is not zero", "[semiring]") {
  const EulerDim circle(0, 1);
  CHECK_FALSE(circle.is_zero());
  CHECK(circle + EulerDim::zero() == circle);
  CHECK(circle * EulerDim(1, 0) == circle);
}

TEST_CASE("A: printing and parsing round-trip", "[semiring]") {
  CHECK(to_string(EulerDim::zero()) == "(0, ⊥)");
  CHECK(to_string(EulerDim(-1, 1)) == "(-1, 1)");
  CHECK(parse_euler_dim("(-1, 1)") == EulerDim(-1, 1));
  CHECK(parse_euler_dim("(0, bot)") == EulerDim::zero());
  CHECK(parse_euler_dim(to_string(EulerDim::zero())) == EulerDim::zero());
  CHECK_THROWS_AS(parse_euler_dim("(1, 2"), RejectedInput);
}

TEST_CASE("Dim: bottom orders below every natural number", "[semiring]") {
  CHECK(Dim::bottom() < Dim(0));
  CHECK(join(Dim::bottom(), Dim(2)) == Dim(2));
  CHECK((Dim::bottom() + Dim(2)).is_bottom());
  CHECK(Dim(1) + Dim(2) == Dim(3));
}

TEST_CASE("E: x^2 = -x and chi recovers the Euler characteristic", "[semiring]") {
  const auto x = EulerRingE::x();
  CHECK(x * x == EulerRingE{BigInt(0), BigInt(-1)});
  CHECK(e_eval_chi(x) == -1);
  CHECK(e_eval_chi(EulerRingE::one() + x + x) == -1);
  const EulerRingE a{BigInt(3), BigInt(-2)};
  const EulerRingE b{BigInt(-1), BigInt(5)};
  CHECK(e_eval_chi(a * b) == e_eval_chi(a) * e_eval_chi(b));
}

TEST_CASE("D: antichain normalization and arithmetic", "[semiring]") {
  CHECK(d_prec(Monomial(0, 0), Monomial(1, 1)));
  CHECK_FALSE(d_prec(Monomial(0, 1), Monomial(1, 1)));
  const auto d = DimElement::normalize({Monomial(0, 0), Monomial(1, 1), Monomial(0, 2), Monomial(1, 1)});
  CHECK(d.monomials() == std::vector<Monomial>{Monomial(0, 2), Monomial(1, 1)});
  CHECK(is_antichain(d));
  CHECK(DimElement::one() * d == d);
  CHECK(DimElement::zero() * d == DimElement::zero());
  CHECK(parse_dim_element(to_string(d)) == d);
  CHECK_THROWS(Monomial(2, 1));
}

TEST_CASE("Axiom kit: the genuine semirings pass", "[semiring]") {
  CHECK(axiom_suite<EulerDim>(
      [](std::mt19937_64& r) { return random_euler_dim(r); }, 2000, 3));
  CHECK(axiom_suite<EulerRingE>(
      [](std::mt19937_64& r) { return random_ring_e(r); }, 2000, 3));
  CHECK(axiom_suite<DimElement>(
      [](std::mt19937_64& r) { return random_dim_element(r); }, 2000, 3));
  CHECK(axiom_suite<ProductED>(
      [](std::mt19937_64& r) { return ProductED{random_ring_e(r), random_dim_element(r)}; }, 2000, 3));
}

TEST_CASE("Axiom kit: Z x N with unit (0,0) fails 0x = 0", "[semiring]") {
  const auto report = axiom_suite<NaivePair>(
      [](std::mt19937_64& r) { return random_naive_pair(r); }, 2000, 3);
  REQUIRE_FALSE(report.passed);
  CHECK(report.law == "0x = 0");
  CHECK_FALSE(report.witness.empty());
  // The concrete witness: (0,0)(1,1) = (0,1).
  CHECK(NaivePair::zero() * NaivePair{BigInt(1), 1} == NaivePair{BigInt(0), 1});
}
