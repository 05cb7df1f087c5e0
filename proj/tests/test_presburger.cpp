#include <catch_amalgamated.hpp>

#include "eulercalc/models.hpp"

using namespace eulercalc;

namespace {

Progression all(std::int64_t r, std::int64_t d) { return Progression{r, d, std::nullopt, std::nullopt}; }

}  // namespace

TEST_CASE("Canonical forms of simple sets", "[presburger]") {
  CHECK(to_string(pres_normalize({}, {9, 1, 5, 5})) == "{1, 5, 9}");
  CHECK(to_string(pres_normalize({all(0, 2), all(1, 2)})) == "0 mod 1 on [-inf, +inf]");
  CHECK(to_string(pres_normalize({all(0, 2), all(0, 4)})) == "0 mod 2 on [-inf, +inf]");
  CHECK(pres_normalize({}).empty());
  CHECK(to_string(pres_normalize({Progression{1, 3, -8, std::nullopt}, Progression{1, 3, -2, std::nullopt}})) ==
        "1 mod 3 on [-8, +inf]");
}

TEST_CASE("Equal sets written differently normalize identically", "[presburger]") {
  const auto a = pres_normalize({all(1, 3), Progression{0, 6, std::nullopt, 11}}, {3});
  const auto b = pres_normalize({all(4, 6), all(1, 6), Progression{0, 6, std::nullopt, 5}, Progression{0, 6, 6, 6}});
  // 3 is not in b, so add it: 6k with k <= 1 plus 3.
  const auto b3 = pres_ops(b, pres_normalize({}, {3}), SetOp::Union);
  CHECK(a == b3);
}

TEST_CASE("Set operations", "[presburger]") {
  const auto even = pres_normalize({all(0, 2)});
  const auto thirds = pres_normalize({all(0, 3)});
  CHECK(to_string(pres_ops(even, thirds, SetOp::Intersect)) == "0 mod 6 on [-inf, +inf]");
  CHECK(to_string(pres_ops(even, pres_normalize({all(0, 4)}), SetOp::Difference)) == "2 mod 4 on [-inf, +inf]");
  const auto u = pres_ops(even, thirds, SetOp::Union);
  for (std::int64_t x = -30; x <= 30; ++x) CHECK(u.contains(x) == (x % 2 == 0 || x % 3 == 0));
}

TEST_CASE("Classes: finite sets count, infinite sets are lines", "[presburger]") {
  CHECK(pres_class(pres_normalize({}, {1, 5, 9})) == EulerDim(3, 0));
  CHECK(pres_class(pres_normalize({all(0, 7)})) == EulerDim(0, 1));
  CHECK(pres_class(pres_normalize({Progression{0, 1, 0, std::nullopt}})) == EulerDim(0, 1));
  CHECK(pres_class(PresburgerSet{}) == EulerDim::zero());
  // A bounded progression is finite.
  CHECK(pres_class(pres_normalize({Progression{1, 2, 0, 9}})) == EulerDim(5, 0));
}

TEST_CASE("Translation and reflection", "[presburger]") {
  const auto s = pres_normalize({Progression{1, 3, -8, std::nullopt}}, {-20});
  const auto t = pres_translate(s, 5);
  CHECK(t.contains(-15));
  CHECK(t.contains(2 + 5 - 1));
  CHECK_FALSE(t.contains(-20));
  const auto r = pres_reflect(s);
  CHECK(r.contains(20));
  CHECK(r.contains(-1));
  CHECK_FALSE(r.contains(1));
  CHECK(pres_class(t) == pres_class(s));
  CHECK(pres_class(r) == pres_class(s));
  CHECK(pres_reflect(r) == s);
}

TEST_CASE("Out-of-range inputs are rejected", "[presburger]") {
  CHECK_THROWS_AS(pres_normalize({}, {2'000'000}), RejectedInput);
  CHECK_THROWS_AS(pres_normalize({all(0, 0)}), RejectedInput);
}
