#include <catch_amalgamated.hpp>

#include "eulercalc/builtins.hpp"
#include "eulercalc/radon.hpp"

using namespace eulercalc;

namespace {

PolygonScene scene_of(const BuiltinScene& b) {
  PolygonScene s;
  s.Z = b.Z;
  return s;
}

Point2 pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }

}  // namespace

TEST_CASE("Fano plane: every point on 3 lines, every pair on 1", "[radon]") {
  const auto inc = fano();
  CHECK(inc.X.size() == 7);
  CHECK(inc.S.size() == 21);
  const auto table = fiber_classes(inc, transpose(inc));
  for (const auto& [pair, cls] : table) CHECK(cls == EulerDim((pair.first == pair.second) ? 3 : 1, 0));
}

TEST_CASE("Finite inversion constants for PG(2,q)", "[radon]") {
  for (unsigned q : {2u, 3u}) {
    const auto inc = projective_plane(q);
    CHECK(inc.X.size() == q * q + q + 1);
    const auto fit = fit_lambda_theta(inc, transpose(inc));
    CHECK(fit.status == InversionStatus::Ok);
    CHECK(fit.lambda == EulerDim(1, 0));
    CHECK(fit.theta == EulerDim(static_cast<long long>(q), 0));
    const auto run = inversion_trials_finite(inc, transpose(inc), 25, q);
    CHECK(run.status == InversionStatus::Ok);
    CHECK(run.trials == 25);
  }
  CHECK_THROWS_AS(projective_plane(4), RejectedInput);
}

TEST_CASE("Radon transform of a point indicator on the Fano plane", "[radon]") {
  const auto inc = fano();
  const auto g = ConstructibleFn::indicator(inc.x_set(), {"p0"});
  const auto r = radon_finite(inc, g);
  std::size_t lines = 0;
  for (const auto& y : inc.Y)
    if (!cf_eval(r, y).is_zero()) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("Complete bipartite incidence has theta = 0", "[radon]") {
  FiniteIncidence inc;
  inc.X = {"a", "b"};
  inc.Y = {"u", "v"};
  for (const auto& x : inc.X)
    for (const auto& y : inc.Y) inc.S.emplace(x, y);
  const auto fit = fit_lambda_theta(inc, transpose(inc));
  CHECK(fit.status == InversionStatus::HypothesesViolated);
  CHECK_THAT(fit.witness, Catch::Matchers::ContainsSubstring("θ = 0"));
}

TEST_CASE("Incidences outside X x Y are rejected", "[radon]") {
  FiniteIncidence inc;
  inc.X = {"a"};
  inc.Y = {"u"};
  inc.S.emplace("a", "w");
  CHECK_THROWS_AS(inc.validate(), RejectedInput);
}

TEST_CASE("Lines against the square", "[radon]") {
  const auto s = scene_of(unit_square());
  CHECK(sigma_Z(Line2D::vertical(parse_rat("1/2")), s) == EulerDim(1, 1));
  CHECK(sigma_Z(Line2D::vertical(Rat(2)), s) == EulerDim::zero());
  // x + y = 0 touches the square only at the origin.
  CHECK(sigma_Z(Line2D{Point2{Rat(0), Rat(0)}, Direction(BigInt(-1), BigInt(1))}, s) == EulerDim(1, 0));
}

TEST_CASE("Double transform values on the square", "[radon]") {
  const auto s = scene_of(unit_square());
  CHECK(double_radon_at(pt("1/2", "1/2"), s, true) == EulerDim(0, 2));
  CHECK(double_radon_at(pt("2", "2"), s, true) == EulerDim(1, 2));
  CHECK(double_radon_at(pt("0", "0"), s, true) == EulerDim(0, 2));
  CHECK(double_radon_at(pt("1/2", "0"), s, true) == EulerDim(0, 2));
  CHECK(double_radon_at(pt("-3", "1/2"), s, true) == EulerDim(1, 2));
}

TEST_CASE("Planar inversion at generated samples", "[radon]") {
  std::mt19937_64 rng(11);
  for (const auto& b : {unit_square(), unit_triangle(), convex_pentagon()}) {
    const auto s = scene_of(b);
    auto samples = interior_samples(b.polygon, 4, rng);
    const auto ext = exterior_samples(b.Z, 4, rng);
    samples.insert(samples.end(), ext.begin(), ext.end());
    const auto r = inversion_check_plane(s, samples, true);
    CHECK(r.ok());
    CHECK(r.rows.size() == 8);
  }
}

TEST_CASE("Symbolic inversion and projective classes", "[radon]") {
  CHECK(projective_class(0) == EulerDim(1, 0));
  CHECK(projective_class(1) == EulerDim(0, 1));
  CHECK(projective_class(2) == EulerDim(1, 2));
  CHECK(projective_class(5) == EulerDim(0, 5));
  // n = 2 with g = 1_Z at an interior point of a closed disc-like Z.
  CHECK(symbolic_inversion(2, EulerDim(1, 0), EulerDim(1, 2)) == EulerDim(0, 2));
  CHECK(symbolic_inversion(2, EulerDim::zero(), EulerDim(1, 2)) == EulerDim(1, 2));
  // (1,2) + (0,1)(1,2) = (1,2) + (0,3) = (1,3).
  CHECK(symbolic_inversion(3, EulerDim(1, 0), EulerDim(1, 2)) == EulerDim(1, 3));
  CHECK_THROWS_AS(symbolic_inversion(1, EulerDim(1, 0), EulerDim(1, 1)), RejectedInput);
}
