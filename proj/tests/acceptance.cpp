// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "eulercalc/builtins.hpp"
#include "eulercalc/selftest.hpp"

using namespace eulercalc;

namespace {

constexpr double kSemiringLimit = 5.0;
constexpr double kPlanarLimit = 10.0;
constexpr double kSelftestLimit = 60.0;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs > limit) {
    out.ok = false;
    out.detail += " (over the " + std::to_string(static_cast<int>(limit)) + " s limit)";
  }
  if (!out.ok) ++failures;
  std::printf("%s %d %s: %s [%.2f s]\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome from_row(const SuiteRow& r) {
  const std::string count = std::to_string(r.checks) + " checks";
  return {r.passed, r.detail == count ? count : count + ", " + r.detail};
}

Outcome both(const Outcome& a, const Outcome& b) { return {a.ok && b.ok, a.detail + "; " + b.detail}; }

}  // namespace

int main() {
  criterion(1, "semiring axioms", kSemiringLimit, [] { return from_row(suite_semiring(10000, kSeed)); });

  criterion(2, "projective classes", 0, [] {
    Outcome o = from_row(suite_projective_classes());
    const bool circle = mu_circle(CircleSet::full()) == EulerDim(0, 1) && projective_class(1) == EulerDim(0, 1);
    return both(o, {circle, "mu(RP^1) = " + to_string(mu_circle(CircleSet::full()))});
  });

  criterion(3, "planar inversion", kPlanarLimit, [] { return from_row(suite_planar_inversion(10, kSeed)); });

  criterion(4, "finite inversion", 0, [] {
    Outcome o{true, ""};
    for (unsigned q : {2u, 3u}) {
      const auto inc = projective_plane(q);
      const auto run = inversion_trials_finite(inc, transpose(inc), 100, kSeed + q);
      const bool ok = run.status == InversionStatus::Ok && run.trials == 100 && run.lambda == EulerDim(1, 0) &&
                      run.theta == EulerDim(static_cast<long long>(q), 0);
      o.ok = o.ok && ok;
      o.detail += "q=" + std::to_string(q) + " lambda=" + to_string(run.lambda) + " theta=" + to_string(run.theta) +
                  " over " + std::to_string(run.trials) + " g" + (ok ? "" : " " + run.witness) + "; ";
      if (q == 3) o.detail.resize(o.detail.size() - 2);
    }
    return both(o, from_row(suite_finite_inversion(100, kSeed)));
  });

  criterion(5, "fubini", 0, [] { return from_row(suite_fubini(20, kSeed)); });
  criterion(6, "projection formula", 0, [] { return from_row(suite_projection_formula(20, kSeed)); });
  criterion(7, "partition independence", 0, [] { return from_row(suite_partition_independence(100, kSeed)); });
  criterion(8, "presburger", 0, [] { return from_row(suite_presburger(500, kSeed)); });

  criterion(9, "full selftest", kSelftestLimit, [] {
    Outcome o{true, ""};
    std::size_t checks = 0;
    for (const auto& row : run_selftest(SelftestOptions{})) {
      checks += row.checks;
      if (!row.passed) {
        o.ok = false;
        o.detail += row.suite + " failed: " + row.detail + "; ";
      }
    }
    if (o.ok) o.detail = std::to_string(checks) + " checks";
    return o;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "FAILURES");
  return failures == 0 ? 0 : 1;
}
