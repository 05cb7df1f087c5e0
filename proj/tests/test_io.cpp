#include <catch_amalgamated.hpp>

#include "eulercalc/builtins.hpp"
#include "eulercalc/io.hpp"
#include "eulercalc/random.hpp"

using namespace eulercalc;

TEST_CASE("A-values encode as [e, d]", "[io]") {
  CHECK(to_json(EulerDim(-1, 1)) == Json::parse("[-1, 1]"));
  CHECK(to_json(EulerDim::zero()) == Json::parse("[0, \"bot\"]"));
  CHECK(euler_dim_from_json(Json::parse("[0, \"⊥\"]")) == EulerDim::zero());
  CHECK_THROWS_AS(euler_dim_from_json(Json::parse("[1, -2]")), RejectedInput);
  CHECK_THROWS_AS(euler_dim_from_json(Json::parse("[3, \"bot\"]")), RejectedInput);
}

TEST_CASE("Rationals accept strings and integers", "[io]") {
  CHECK(rat_from_json(Json("4/6")) == parse_rat("2/3"));
  CHECK(rat_from_json(Json(5)) == Rat(5));
  CHECK(to_json(parse_rat("-1/2")) == Json("-1/2"));
}

TEST_CASE("Round trips", "[io]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto f = ConstructibleFn(random_plane_fn(rng));
    CHECK(cf_equal(fn_from_json(to_json(f)), f));
    const auto g = random_line_fn(rng);
    CHECK(cf_equal(fn_from_json(to_json(g)), g));
    const auto h = random_circle_fn(rng);
    CHECK(cf_equal(fn_from_json(to_json(h)), h));
  }
  const auto sq = unit_square().Z;
  CHECK(complex_from_json(to_json(sq)) == sq);
  const auto inc = fano();
  const auto back = incidence_from_json(to_json(inc));
  CHECK(back.S == inc.S);
  const auto p = pres_normalize({Progression{1, 3, -8, std::nullopt}}, {-20, 4});
  CHECK(presburger_from_json(to_json(p)) == p);
  const MapDesc m = FiniteMap{{{"a", "u"}}, {"u", "v"}};
  CHECK(describe(map_from_json(to_json(m))) == describe(m));
}

TEST_CASE("Input errors are reported, not crashed on", "[io]") {
  CHECK_THROWS_WITH(parse_json_text("{ \"a\": "), Catch::Matchers::ContainsSubstring("malformed JSON"));
  CHECK_THROWS_AS(fn_from_json(Json::parse(R"({"carrier": "torus", "parts": []})")), RejectedInput);
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"kind": "rotate"})")), Unsupported);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": []})")), RejectedInput);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), RejectedInput);
}

TEST_CASE("Text rendering", "[io]") {
  CHECK(to_text(ConstructibleFn()) == "0\n");
  const auto f = ConstructibleFn(LineFn{{{LinePiece::open(Rat(0), Rat(1)), EulerDim(1, 1)}}});
  CHECK_THAT(to_text(f), Catch::Matchers::ContainsSubstring("(1, 1)"));
}
