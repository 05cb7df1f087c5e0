#include <catch_amalgamated.hpp>

#include "eulercalc/builtins.hpp"
#include "eulercalc/constructible.hpp"

using namespace eulercalc;

namespace {

Rat q(const char* s) { return parse_rat(s); }

ConstructibleFn line_fn(std::vector<std::pair<LinePiece, EulerDim>> parts) { return ConstructibleFn(LineFn{std::move(parts)}); }

ConstructibleFn finite_fn(std::set<std::string> domain, std::map<std::string, EulerDim> values) {
  return ConstructibleFn(FiniteFn{std::move(domain), std::move(values)});
}

}  // namespace

TEST_CASE("Integral of a weighted half-open interval", "[constructible]") {
  // 2 on (0,1) and 1 at 0: (2,0)(-1,1) + (1,0)(1,0) = (-1, 1).
  const auto f = line_fn({{LinePiece::at(Rat(0)), EulerDim(1, 0)}, {LinePiece::open(Rat(0), Rat(1)), EulerDim(2, 0)}});
  CHECK(cf_integrate(f) == EulerDim(-1, 1));
}

TEST_CASE("Evaluation off the support is zero", "[constructible]") {
  const auto f = line_fn({{LinePiece::open(Rat(0), Rat(1)), EulerDim(2, 0)}});
  CHECK(cf_eval(f, q("1/2")) == EulerDim(2, 0));
  CHECK(cf_eval(f, Rat(1)) == EulerDim::zero());
  CHECK(cf_eval(finite_fn({"a", "b"}, {{"a", EulerDim(1, 3)}}), std::string("b")) == EulerDim::zero());
  CHECK(cf_integrate(ConstructibleFn()) == EulerDim::zero());
}

TEST_CASE("Sums and products refine partitions", "[constructible]") {
  const auto f = line_fn({{LinePiece::open(Rat(0), Rat(2)), EulerDim(1, 0)}});
  const auto g = line_fn({{LinePiece::open(Rat(1), Rat(3)), EulerDim(1, 1)}});
  const auto s = cf_add(f, g);
  CHECK(cf_eval(s, q("1/2")) == EulerDim(1, 0));
  CHECK(cf_eval(s, q("3/2")) == EulerDim(2, 1));
  CHECK(cf_eval(s, Rat(1)) == EulerDim(1, 0));
  const auto p = cf_mul(f, g);
  CHECK(cf_eval(p, q("3/2")) == EulerDim(1, 1));
  CHECK(cf_eval(p, q("1/2")) == EulerDim::zero());
  CHECK(cf_integrate(p) == EulerDim(-1, 2));
}

TEST_CASE("Mismatched carriers are rejected", "[constructible]") {
  const auto f = line_fn({{LinePiece::at(Rat(0)), EulerDim(1, 0)}});
  const auto g = ConstructibleFn::indicator(CircleSet::full());
  CHECK_THROWS_AS(cf_add(f, g), RejectedInput);
}

TEST_CASE("Overlapping pieces are rejected", "[constructible]") {
  CHECK_THROWS_AS(line_fn({{LinePiece::open(Rat(0), Rat(2)), EulerDim(1, 0)}, {LinePiece::at(Rat(1)), EulerDim(1, 0)}}),
                  RejectedInput);
}

TEST_CASE("Canonical form merges equal runs", "[constructible]") {
  const auto f = line_fn({{LinePiece::open(Rat(0), Rat(1)), EulerDim(1, 0)},
                          {LinePiece::at(Rat(1)), EulerDim(1, 0)},
                          {LinePiece::open(Rat(1), Rat(2)), EulerDim(1, 0)},
                          {LinePiece::at(Rat(5)), EulerDim::zero()}});
  const auto c = cf_canonical(f);
  REQUIRE(c.get<LineFn>());
  CHECK(c.get<LineFn>()->parts.size() == 1);
  CHECK(cf_equal(c, f));
  CHECK(cf_integrate(c) == cf_integrate(f));
}

TEST_CASE("Finite pushforward sums over fibers", "[constructible]") {
  const FiniteMap m{{{"a", "u"}, {"b", "u"}, {"c", "v"}}, {"u", "v", "w"}};
  const auto g = finite_fn({"a", "b", "c"}, {{"a", EulerDim(1, 0)}, {"b", EulerDim(2, 1)}, {"c", EulerDim(5, 0)}});
  const auto p = cf_pushforward(m, g);
  CHECK(cf_eval(p, std::string("u")) == EulerDim(3, 1));
  CHECK(cf_eval(p, std::string("v")) == EulerDim(5, 0));
  CHECK(cf_eval(p, std::string("w")) == EulerDim::zero());
  CHECK(fubini_check(m, g).ok);
}

TEST_CASE("Projection to the x-axis of the square", "[constructible]") {
  const auto f = ConstructibleFn::indicator(unit_square().Z);
  const auto p = cf_pushforward(ProjX{}, f, {true});
  REQUIRE(p.carrier() == Carrier::Line);
  CHECK(cf_eval(p, Rat(0)) == EulerDim(1, 1));
  CHECK(cf_eval(p, q("1/3")) == EulerDim(1, 1));
  CHECK(cf_eval(p, Rat(1)) == EulerDim(1, 1));
  CHECK(cf_eval(p, Rat(2)) == EulerDim::zero());
  CHECK(cf_integrate(p) == EulerDim(1, 2));
}

TEST_CASE("Pullback along the projection is constant on verticals", "[constructible]") {
  const auto h = line_fn({{LinePiece::open(Rat(0), Rat(1)), EulerDim(1, 0)}});
  const auto up = cf_pullback(ProjX{}, h);
  CHECK(up.get<LiftedFn>());
  CHECK(cf_eval(up, Point2{q("1/2"), Rat(1000)}) == EulerDim(1, 0));
  CHECK(cf_eval(up, Point2{Rat(2), Rat(0)}) == EulerDim::zero());
  // Not compactly supported, so only products with compact functions integrate.
  const auto sq = ConstructibleFn::indicator(unit_square().Z);
  // The open strip (0,1) x [0,1]: (-1,1)(1,1).
  CHECK(cf_integrate(cf_mul(up, sq)) == EulerDim(-1, 2));
  CHECK_THROWS_AS(cf_add(up, sq), Unsupported);
}

TEST_CASE("Line inclusion and constant maps", "[constructible]") {
  const auto sq = ConstructibleFn::indicator(unit_square().Z);
  const LineInclusion diag{Line2D::through(Point2{Rat(0), Rat(0)}, Point2{Rat(1), Rat(1)})};
  const auto restricted = cf_pullback(diag, sq);
  CHECK(cf_integrate(restricted) == EulerDim(1, 1));
  const auto seg = line_fn({{LinePiece::open(Rat(0), Rat(1)), EulerDim(1, 0)}});
  CHECK(cf_integrate(cf_pushforward(diag, seg)) == EulerDim(-1, 1));
  const auto total = cf_pushforward(ConstMap{}, sq);
  CHECK(cf_eval(total, kPointLabel) == EulerDim(1, 2));
}

TEST_CASE("Unsupported combinations name the supported list", "[constructible]") {
  const auto seg = line_fn({{LinePiece::open(Rat(0), Rat(1)), EulerDim(1, 0)}});
  CHECK_THROWS_AS(cf_pushforward(ProjX{}, seg), Unsupported);
  CHECK_THROWS_WITH(cf_pushforward(ProjX{}, seg), Catch::Matchers::ContainsSubstring("supported maps"));
}

TEST_CASE("Projection formula on a planar instance", "[constructible]") {
  const auto g = ConstructibleFn::indicator(convex_pentagon().Z);
  const auto h = line_fn({{LinePiece::open(Rat(0), Rat(3)), EulerDim(2, 0)}, {LinePiece::at(Rat(4)), EulerDim(1, 1)}});
  const auto r = projection_formula_check(ProjX{}, g, h);
  CHECK(r.ok);
  CHECK(cf_equal(r.lhs, r.rhs));
}
