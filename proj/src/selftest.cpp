#include "eulercalc/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "eulercalc/builtins.hpp"
#include "eulercalc/models.hpp"
#include "eulercalc/radon.hpp"
#include "eulercalc/random.hpp"

namespace eulercalc {

namespace {

// Suite whose first check gets inverted; set by run_selftest only.
std::string g_fault;

class Checker {
 public:
  explicit Checker(SuiteRow& row) : row_(row), corrupt_(g_fault == row.suite) {}

  bool check(bool ok, const std::function<std::string()>& witness) {
    ++row_.checks;
    std::string prefix;
    if (corrupt_) {
      corrupt_ = false;
      ok = !ok;
      prefix = "injected fault: ";
    }
    if (!ok && row_.passed) {
      row_.passed = false;
      row_.detail = prefix + witness();
    }
    return ok;
  }

 private:
  SuiteRow& row_;
  bool corrupt_;
};

template <class Body>
SuiteRow timed(const char* name, Body body) {
  SuiteRow row;
  row.suite = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(row);
  } catch (const std::exception& e) {
    row.passed = false;
    row.detail = std::string("exception: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (row.passed && row.detail.empty()) row.detail = std::to_string(row.checks) + " checks";
  return row;
}

std::vector<std::string> labels(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Calls visit(table) for every map from `dom` to `cod`.
void for_each_map(const std::vector<std::string>& dom, const std::vector<std::string>& cod,
                  const std::function<void(const std::map<std::string, std::string>&)>& visit) {
  std::vector<std::size_t> digits(dom.size(), 0);
  while (true) {
    std::map<std::string, std::string> table;
    for (std::size_t i = 0; i < dom.size(); ++i) table.emplace(dom[i], cod[digits[i]]);
    visit(table);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == cod.size()) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

// Every function from `dom` to `values`.
std::vector<ConstructibleFn> all_functions(const std::vector<std::string>& dom, const std::vector<EulerDim>& values) {
  std::vector<ConstructibleFn> out;
  std::vector<std::size_t> digits(dom.size(), 0);
  while (true) {
    FiniteFn f;
    f.domain = {dom.begin(), dom.end()};
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!values[digits[i]].is_zero()) f.values.emplace(dom[i], values[digits[i]]);
    }
    out.emplace_back(std::move(f));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == values.size()) digits[i++] = 0;
    if (i == digits.size()) return out;
  }
}

FiniteMap finite_map(std::map<std::string, std::string> table, const std::vector<std::string>& cod) {
  return FiniteMap{std::move(table), {cod.begin(), cod.end()}};
}

std::size_t scaled(std::size_t trials, std::size_t divisor) {
  if (trials == 0) return 0;
  return std::max<std::size_t>(1, trials / divisor);
}

}  // namespace

SuiteRow suite_semiring(std::size_t trials, std::uint64_t seed) {
  return timed("semiring", [&](SuiteRow& row) {
    Checker c(row);
    auto report = [&](const char* name, const AxiomReport& r) {
      row.checks += r.trials - (r.trials ? 1 : 0);
      c.check(r.passed, [&] { return std::string(name) + ": " + r.law + " fails at " + r.witness; });
    };
    report("A", axiom_suite<EulerDim>([](auto& g) { return random_euler_dim(g); }, trials, seed));
    report("E", axiom_suite<EulerRingE>([](auto& g) { return random_ring_e(g); }, trials, seed + 1));
    report("D", axiom_suite<DimElement>([](auto& g) { return random_dim_element(g); }, trials, seed + 2));
    report("ExD", axiom_suite<ProductED>([](auto& g) { return ProductED{random_ring_e(g), random_dim_element(g)}; },
                                         trials, seed + 3));
    if (trials > 0) {
      const auto naive = axiom_suite<NaivePair>([](auto& g) { return random_naive_pair(g); }, trials, seed + 4);
      c.check(!naive.passed && naive.law == "0x = 0",
              [&] { return std::string("the (0,0)-unit pair was expected to violate 0x = 0"); });
      if (!naive.passed) row.detail = "naive pair fails " + naive.law + " at " + naive.witness;
    }
  });
}

SuiteRow suite_projective_classes() {
  return timed("projective-classes", [&](SuiteRow& row) {
    Checker c(row);
    for (unsigned n = 0; n <= 6; ++n) {
      // P^n is a disjoint union of affine cells A^0, ..., A^n.
      EulerDim cells;
      for (unsigned k = 0; k <= n; ++k) cells += EulerDim(k % 2 == 0 ? 1 : -1, k);
      c.check(projective_class(n) == cells, [&] {
        return "[P^" + std::to_string(n) + "] = " + to_string(projective_class(n)) + " but cells give " +
               to_string(cells);
      });
    }
    c.check(mu_circle(CircleSet::full()) == projective_class(1),
            [&] { return "mu(RP^1) = " + to_string(mu_circle(CircleSet::full())); });
  });
}

SuiteRow suite_planar_inversion(std::size_t samples, std::uint64_t seed) {
  return timed("planar-inversion", [&](SuiteRow& row) {
    Checker c(row);
    std::mt19937_64 rng(seed);
    for (const auto& scene : {unit_square(), unit_triangle(), convex_pentagon()}) {
      const PolygonScene s{scene.Z, std::nullopt, {}};
      auto inside = interior_samples(scene.polygon, samples, rng);
      auto outside = exterior_samples(scene.Z, samples, rng);
      std::vector<Point2> points = inside;
      points.insert(points.end(), outside.begin(), outside.end());
      points.insert(points.end(), scene.polygon.begin(), scene.polygon.end());
      const auto report = inversion_check_plane(s, points, true);
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        c.check(r.ok, [&] {
          return scene.name + " at " + to_string(r.point) + ": " + to_string(r.lhs) + " vs " + to_string(r.rhs);
        });
        if (i < inside.size()) {
          c.check(r.lhs == EulerDim(0, 2), [&] { return scene.name + " interior value " + to_string(r.lhs); });
        } else if (i < inside.size() + outside.size()) {
          c.check(r.lhs == EulerDim(1, 2), [&] { return scene.name + " exterior value " + to_string(r.lhs); });
        }
      }
    }
  });
}

SuiteRow suite_finite_inversion(std::size_t trials, std::uint64_t seed) {
  return timed("finite-inversion", [&](SuiteRow& row) {
    Checker c(row);
    for (unsigned q : {2u, 3u}) {
      const auto inc = projective_plane(q);
      const auto r = inversion_trials_finite(inc, transpose(inc), trials, seed + q);
      row.checks += r.trials;
      const std::string name = "PG(2," + std::to_string(q) + ")";
      c.check(r.status == InversionStatus::Ok, [&] { return name + ": " + r.witness; });
      c.check(r.lambda == EulerDim(1, 0) && r.theta == EulerDim(q, 0),
              [&] { return name + ": lambda=" + to_string(r.lambda) + " theta=" + to_string(r.theta); });
    }
  });
}

SuiteRow suite_fubini(std::size_t scenes, std::uint64_t seed) {
  return timed("fubini", [&](SuiteRow& row) {
    Checker c(row);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < scenes; ++i) {
      const ConstructibleFn f(random_plane_fn(rng));
      const auto r = fubini_check(ProjX{}, f);
      c.check(r.ok, [&] { return "scene " + std::to_string(i) + ": " + to_string(r.direct) + " vs " + to_string(r.pushed); });
      // plane -> line -> point agrees with plane -> point.
      const auto line = cf_pushforward(ProjX{}, f);
      const auto two_step = cf_pushforward(ConstMap{}, line);
      const auto one_step = cf_pushforward(ConstMap{}, f);
      c.check(cf_equal(two_step, one_step), [&] { return "scene " + std::to_string(i) + ": chain to the point differs"; });
    }

    // (h o f)_! = h_! f_! and (h o f)^* = f^* h^* on all small finite maps.
    const auto zs = labels("z", 2);
    for (std::size_t nx = 1; nx <= 5; ++nx) {
      const auto xs = labels("x", nx);
      for (std::size_t ny = 1; ny <= 3; ++ny) {
        const auto ys = labels("y", ny);
        for_each_map(xs, ys, [&](const auto& ft) {
          const FiniteMap f = finite_map(ft, ys);
          const ConstructibleFn g = random_finite_fn({xs.begin(), xs.end()}, rng);
          const ConstructibleFn k = random_finite_fn({zs.begin(), zs.end()}, rng);
          const auto fg = cf_pushforward(f, g);
          for_each_map(ys, zs, [&](const auto& ht) {
            const FiniteMap h = finite_map(ht, zs);
            const FiniteMap hf = compose(h, f);
            c.check(cf_equal(cf_pushforward(hf, g), cf_pushforward(h, fg)), [&] { return "pushforward not functorial"; });
            c.check(cf_equal(cf_pullback(hf, k), cf_pullback(f, cf_pullback(h, k))),
                    [&] { return "pullback not contra-functorial"; });
          });
          c.check(cf_integrate(g) == cf_integrate(fg), [&] { return "finite Fubini fails"; });
        });
      }
    }
  });
}

SuiteRow suite_projection_formula(std::size_t instances, std::uint64_t seed) {
  return timed("projection-formula", [&](SuiteRow& row) {
    Checker c(row);
    const std::vector<EulerDim> values{EulerDim::zero(), EulerDim(1, 0), EulerDim(2, 0), EulerDim(1, 1)};
    for (std::size_t nx = 1; nx <= 4; ++nx) {
      const auto xs = labels("x", nx);
      const auto gs = all_functions(xs, values);
      for (std::size_t ny = 1; ny <= 3; ++ny) {
        const auto ys = labels("y", ny);
        const auto hs = all_functions(ys, values);
        for_each_map(xs, ys, [&](const auto& ft) {
          const FiniteMap f = finite_map(ft, ys);
          for (const auto& g : gs) {
            for (const auto& h : hs) {
              const auto r = projection_formula_check(f, g, h);
              c.check(r.ok, [&] { return "finite map: " + r.witness; });
            }
          }
        });
      }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < instances; ++i) {
      const ConstructibleFn g(random_plane_fn(rng));
      const ConstructibleFn h = random_line_fn(rng);
      const auto r = projection_formula_check(ProjX{}, g, h);
      c.check(r.ok, [&] { return "planar instance " + std::to_string(i) + ": " + r.witness; });
    }
  });
}

SuiteRow suite_partition_independence(std::size_t count, std::uint64_t seed) {
  return timed("partition-independence", [&](SuiteRow& row) {
    Checker c(row);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      ConstructibleFn f;
      switch (i % 4) {
        case 0: f = random_line_fn(rng); break;
        case 1: f = random_circle_fn(rng); break;
        case 2: f = ConstructibleFn(random_plane_fn(rng)); break;
        default: f = ConstructibleFn(LiftedFn{*random_line_fn(rng).get<LineFn>()}); break;
      }
      const ConstructibleFn r = random_refinement(f, rng);
      c.check(cf_integrate(f) == cf_integrate(r), [&] {
        return to_string(f.carrier()) + " function: " + to_string(cf_integrate(f)) + " vs refined " +
               to_string(cf_integrate(r));
      });
      c.check(cf_equal(f, r), [&] { return "refinement changed the function: " + *cf_difference(f, r); });
    }
  });
}

SuiteRow suite_presburger(std::size_t pairs, std::uint64_t seed) {
  return timed("presburger", [&](SuiteRow& row) {
    Checker c(row);
    constexpr std::int64_t kLo = -10'000, kHi = 10'000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> shift(-500, 500);
    for (std::size_t i = 0; i < pairs; ++i) {
      const PresburgerSet a = random_presburger(rng);
      const PresburgerSet b = random_presburger(rng);
      const auto wa = pres_window(a, kLo, kHi);
      const auto wb = pres_window(b, kLo, kHi);
      for (SetOp op : {SetOp::Union, SetOp::Intersect, SetOp::Difference}) {
        const PresburgerSet r = pres_ops(a, b, op);
        const auto wr = pres_window(r, kLo, kHi);
        std::size_t mismatch = wr.size();
        std::size_t members = 0;
        for (std::size_t k = 0; k < wr.size(); ++k) {
          const bool want = op == SetOp::Union ? (wa[k] || wb[k]) : op == SetOp::Intersect ? (wa[k] && wb[k]) : (wa[k] && !wb[k]);
          if (want != wr[k] && mismatch == wr.size()) mismatch = k;
          members += wr[k];
        }
        c.check(mismatch == wr.size(), [&] {
          return to_string(a) + " op " + to_string(b) + " wrong at " + std::to_string(kLo + std::int64_t(mismatch));
        });
        c.check(pres_normalize(r.progs, {r.finite_part.begin(), r.finite_part.end()}) == r,
                [&] { return "canonical form not idempotent: " + to_string(r); });

        // Finite sets count their members; infinite ones reach the window's edge.
        const EulerDim cls = pres_class(r);
        if (r.progs.empty()) {
          c.check(cls == EulerDim::count(members), [&] { return "class of " + to_string(r) + " is " + to_string(cls); });
        } else {
          bool far = false;
          for (std::size_t k = 0; k < 2'000 && !far; ++k) far = wr[k] || wr[wr.size() - 1 - k];
          c.check(cls == EulerDim(0, 1) && far, [&] { return "infinite set " + to_string(r) + " misclassified"; });
        }

        const std::int64_t t = shift(rng);
        const PresburgerSet moved = pres_translate(r, t);
        const PresburgerSet mirrored = pres_reflect(r);
        c.check(pres_class(moved) == cls && pres_class(mirrored) == cls,
                [&] { return "class of " + to_string(r) + " not invariant"; });
        bool same = true;
        for (std::int64_t x = -1'000; x <= 1'000 && same; ++x) {
          same = moved.contains(x) == r.contains(x - t) && mirrored.contains(x) == r.contains(-x);
        }
        c.check(same, [&] { return "translation or reflection of " + to_string(r) + " has wrong members"; });
        c.check(pres_reflect(mirrored) == r, [&] { return "reflection is not an involution on " + to_string(r); });
      }
    }
  });
}

SuiteRow suite_inversion_algebra(std::size_t trials, std::uint64_t seed) {
  return timed("inversion-algebra", [&](SuiteRow& row) {
    Checker c(row);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> small(0, 3);
    for (std::size_t i = 0; i < trials; ++i) {
      // Two thetas with the same theta + lambda: they may differ only in a
      // dimension not exceeding lambda's.
      EulerDim lambda;
      while (lambda.is_zero()) lambda = random_euler_dim(rng);
      const EulerDim theta = random_euler_dim(rng);
      EulerDim other = theta;
      if (theta.dim() <= lambda.dim()) {
        const std::uint32_t d = std::min(small(rng), lambda.dim().value());
        other = theta.euler() == 0 && small(rng) == 0 ? EulerDim::zero() : EulerDim(theta.euler(), Dim(d));
      }
      if (!(theta + lambda == other + lambda)) continue;
      const EulerDim g = random_euler_dim(rng);
      const EulerDim integral = g + random_euler_dim(rng);  // the integral dominates every value
      c.check(theta * g + lambda * integral == other * g + lambda * integral, [&] {
        return "theta=" + to_string(theta) + " theta'=" + to_string(other) + " lambda=" + to_string(lambda) +
               " g=" + to_string(g) + " integral=" + to_string(integral);
      });
    }

    const auto inc = fano();
    const std::set<std::string> xs = inc.x_set();
    for (std::size_t i = 0; i < trials / 10; ++i) {
      const auto g1 = random_finite_fn(xs, rng);
      const auto g2 = random_finite_fn(xs, rng);
      c.check(cf_equal(radon_finite(inc, cf_add(g1, g2)), cf_add(radon_finite(inc, g1), radon_finite(inc, g2))),
              [&] { return std::string("R(g1 + g2) != R(g1) + R(g2)"); });
      const EulerDim k = random_euler_dim(rng);
      FiniteFn scalar;
      scalar.domain = xs;
      if (!k.is_zero()) {
        for (const auto& x : xs) scalar.values.emplace(x, k);
      }
      FiniteFn scalar_y;
      scalar_y.domain = inc.y_set();
      if (!k.is_zero()) {
        for (const auto& y : inc.Y) scalar_y.values.emplace(y, k);
      }
      c.check(cf_equal(radon_finite(inc, cf_mul(ConstructibleFn(scalar), g1)),
                       cf_mul(ConstructibleFn(scalar_y), radon_finite(inc, g1))),
              [&] { return "R(c g) != c R(g) for c = " + to_string(k); });
    }
  });
}

std::vector<SuiteRow> run_selftest(const SelftestOptions& opts) {
  static const std::vector<std::string> names{
      "semiring",       "projective-classes",     "planar-inversion", "finite-inversion", "fubini",
      "projection-formula", "partition-independence", "presburger",       "inversion-algebra"};
  if (!opts.inject_fault.empty() && std::find(names.begin(), names.end(), opts.inject_fault) == names.end()) {
    std::string all;
    for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
    throw RejectedInput("unknown suite \"" + opts.inject_fault + "\" (suites: " + all + ")");
  }
  g_fault = opts.inject_fault;
  const std::size_t t = opts.trials;
  const std::uint64_t s = opts.seed;
  std::vector<SuiteRow> rows;
  rows.push_back(suite_semiring(10 * t, s));
  rows.push_back(suite_projective_classes());
  rows.push_back(suite_planar_inversion(opts.samples, s));
  rows.push_back(suite_finite_inversion(scaled(t, 10), s));
  rows.push_back(suite_fubini(scaled(t, 50), s));
  rows.push_back(suite_projection_formula(scaled(t, 50), s));
  rows.push_back(suite_partition_independence(scaled(t, 10), s));
  rows.push_back(suite_presburger(scaled(t, 2), s));
  rows.push_back(suite_inversion_algebra(t, s));
  g_fault.clear();
  return rows;
}

}  // namespace eulercalc
