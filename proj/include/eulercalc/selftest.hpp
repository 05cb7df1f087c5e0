#pragma once

// Property suites shared by the `selftest` command and the test binaries.
// Each suite is deterministic given its seed and reports one row.

#include <cstdint>
#include <string>
#include <vector>

namespace eulercalc {

struct SuiteRow {
  std::string suite;
  bool passed = true;
  std::size_t checks = 0;  // individual identities verified
  std::string detail;      // witness on failure, summary otherwise
  double seconds = 0;
};

/// Axioms for A, E, D and E x D; the naive Z x N pair must fail 0x = 0.
SuiteRow suite_semiring(std::size_t trials, std::uint64_t seed);
/// [P^n] for n = 0..6 against a cell count A^0 + ... + A^n; n = 1 against RP^1.
SuiteRow suite_projective_classes();
/// Square, triangle and pentagon at `samples` interior and exterior points
/// each, plus every polygon vertex.
SuiteRow suite_planar_inversion(std::size_t samples, std::uint64_t seed);
/// PG(2,2) and PG(2,3) with `trials` random g each.
SuiteRow suite_finite_inversion(std::size_t trials, std::uint64_t seed);
/// Fubini on `scenes` random weighted scenes; functoriality of finite
/// pushforward on every map with |X| <= 5, |Y| <= 3.
SuiteRow suite_fubini(std::size_t scenes, std::uint64_t seed);
/// Exhaustive finite projection formula (|X| <= 4) and `instances` planar
/// projection instances.
SuiteRow suite_projection_formula(std::size_t instances, std::uint64_t seed);
/// Integrals unchanged under `count` random refinements.
SuiteRow suite_partition_independence(std::size_t count, std::uint64_t seed);
/// Set operations against a window oracle on `pairs` random pairs; class
/// dichotomy and invariance under translation and reflection.
SuiteRow suite_presburger(std::size_t pairs, std::uint64_t seed);
/// Inversion right-hand side independent of theta; Radon linearity over A.
SuiteRow suite_inversion_algebra(std::size_t trials, std::uint64_t seed);

struct SelftestOptions {
  std::size_t trials = 1000;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  /// Name of a suite whose result is deliberately corrupted, to check that
  /// failures surface.
  std::string inject_fault;
};

std::vector<SuiteRow> run_selftest(const SelftestOptions& opts);

}  // namespace eulercalc
