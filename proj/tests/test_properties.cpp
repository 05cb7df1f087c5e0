// Randomized invariants, each also run at larger scale by the selftest.

#include <catch_amalgamated.hpp>

#include "eulercalc/builtins.hpp"
#include "eulercalc/models.hpp"
#include "eulercalc/random.hpp"
#include "eulercalc/selftest.hpp"

using namespace eulercalc;

TEST_CASE("Property: integrals survive refinement", "[property]") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 15; ++i) {
    const ConstructibleFn fs[] = {ConstructibleFn(random_plane_fn(rng)), random_line_fn(rng), random_circle_fn(rng)};
    for (const auto& f : fs) {
      const auto r = random_refinement(f, rng);
      CHECK(cf_integrate(r) == cf_integrate(f));
      CHECK(cf_equal(r, f));
    }
  }
}

TEST_CASE("Property: addition and multiplication are pointwise", "[property]") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_line_fn(rng);
    const auto g = random_line_fn(rng);
    const auto s = cf_add(f, g);
    const auto p = cf_mul(f, g);
    for (int k = 0; k < 20; ++k) {
      const Rat t = random_rat(rng, 8, 4);
      CHECK(cf_eval(s, t) == cf_eval(f, t) + cf_eval(g, t));
      CHECK(cf_eval(p, t) == cf_eval(f, t) * cf_eval(g, t));
    }
    CHECK(cf_integrate(s) == cf_integrate(f) + cf_integrate(g));
  }
}

TEST_CASE("Property: Fubini for the x-projection", "[property]") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    const ConstructibleFn f(random_plane_fn(rng));
    const auto r = fubini_check(ProjX{}, f);
    CHECK(r.ok);
    CHECK(r.direct == r.pushed);
  }
}

TEST_CASE("Property: mu is invariant under affine bijections", "[property]") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 10; ++i) {
    const auto c = random_complex(rng);
    AffineMap m{random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng)};
    if (m.det() == 0) continue;
    CHECK(mu_complex(affine_image(c, m)) == mu_complex(c));
  }
}

TEST_CASE("Property: Presburger operations agree with a window oracle", "[property]") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_presburger(rng);
    const auto b = random_presburger(rng);
    const auto u = pres_ops(a, b, SetOp::Union);
    const auto n = pres_ops(a, b, SetOp::Intersect);
    const auto d = pres_ops(a, b, SetOp::Difference);
    for (std::int64_t x = -200; x <= 200; ++x) {
      CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(n.contains(x) == (a.contains(x) && b.contains(x)));
      CHECK(d.contains(x) == (a.contains(x) && !b.contains(x)));
    }
  }
}

TEST_CASE("Selftest suites pass at small scale", "[property]") {
  CHECK(suite_semiring(200, 2).passed);
  CHECK(suite_projective_classes().passed);
  CHECK(suite_planar_inversion(2, 2).passed);
  CHECK(suite_finite_inversion(5, 2).passed);
  CHECK(suite_fubini(2, 2).passed);
  CHECK(suite_partition_independence(5, 2).passed);
  CHECK(suite_presburger(5, 2).passed);
  CHECK(suite_inversion_algebra(20, 2).passed);
}

TEST_CASE("Selftest surfaces an injected fault", "[property]") {
  SelftestOptions opts;
  opts.trials = 20;
  opts.samples = 2;
  opts.inject_fault = "presburger";
  bool saw = false;
  for (const auto& row : run_selftest(opts)) {
    if (row.suite == "presburger") {
      saw = true;
      CHECK_FALSE(row.passed);
    } else {
      CHECK(row.passed);
    }
  }
  CHECK(saw);
  opts.inject_fault = "nonsense";
  CHECK_THROWS_AS(run_selftest(opts), RejectedInput);
}
