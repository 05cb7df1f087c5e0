#include <catch_amalgamated.hpp>

#include "eulercalc/models.hpp"

using namespace eulercalc;

namespace {

FiniteModel sample_model() {
  FiniteModel m;
  m.universe = {"a", "b", "c", "d"};
  m.subsets["A"] = {"a", "b", "c"};
  m.subsets["T"] = {"c", "d"};
  m.subsets["P"] = {"a,b", "b,a", "c,c"};
  m.maps["f"] = ModelMap{"A", "T", {{"a", "c"}, {"b", "c"}, {"c", "d"}}};
  m.maps["g"] = ModelMap{"T", "universe", {{"c", "a"}, {"d", "a"}}};
  return m;
}

}  // namespace

TEST_CASE("Classes of definable subsets count elements", "[models]") {
  const auto m = sample_model();
  m.validate();
  CHECK(sk0_class(m, "A") == EulerDim(3, 0));
  CHECK(sk0_class(m, "P") == EulerDim(3, 0));
  CHECK(sk0_class(m, "universe") == EulerDim(4, 0));
  CHECK_THROWS_AS(sk0_class(m, "missing"), RejectedInput);
}

TEST_CASE("Pushforward and pullback along a model map", "[models]") {
  const auto m = sample_model();
  const auto one = ConstructibleFn::indicator(m.subset("A"), m.subset("A"));
  const auto p = model_pushforward(m, "f", one);
  CHECK(cf_eval(p, std::string("c")) == EulerDim(2, 0));
  CHECK(cf_eval(p, std::string("d")) == EulerDim(1, 0));
  const auto h = ConstructibleFn::indicator(m.subset("T"), {"c"});
  const auto back = model_pullback(m, "f", h);
  CHECK(cf_eval(back, std::string("a")) == EulerDim(1, 0));
  CHECK(cf_eval(back, std::string("c")) == EulerDim::zero());
}

TEST_CASE("Pushforward is functorial under composition", "[models]") {
  const auto m = sample_model();
  const auto f = m.finite_map("f");
  const auto g = m.finite_map("g");
  const auto gf = compose(g, f);
  const auto one = ConstructibleFn::indicator(m.subset("A"), m.subset("A"));
  CHECK(cf_equal(cf_pushforward(gf, one), cf_pushforward(g, cf_pushforward(f, one))));
}

TEST_CASE("Malformed models are rejected", "[models]") {
  auto m = sample_model();
  m.universe = {"a"};
  CHECK_THROWS_AS(m.validate(), RejectedInput);
  m = sample_model();
  m.subsets["Bad"] = {"a,b", "c"};
  CHECK_THROWS_AS(m.validate(), RejectedInput);
  m = sample_model();
  m.maps["f"].table.erase("a");
  CHECK_THROWS_AS(m.validate(), RejectedInput);
  m = sample_model();
  m.maps["f"].table["a"] = "b";
  CHECK_THROWS_AS(m.validate(), RejectedInput);
}
