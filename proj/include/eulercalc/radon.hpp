#pragma once

// Radon transform R_S = q_Y! o q_X^* on finite incidence structures and,
// pointwise through the pencil of lines, in the plane.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eulercalc/constructible.hpp"

namespace eulercalc {

struct FiniteIncidence {
  std::vector<std::string> X;
  std::vector<std::string> Y;
  std::set<std::pair<std::string, std::string>> S;

  /// Labels unique and S inside X x Y.
  void validate() const;
  std::set<std::string> x_set() const { return {X.begin(), X.end()}; }
  std::set<std::string> y_set() const { return {Y.begin(), Y.end()}; }
};

/// S' = {(y, x) : (x, y) in S}.
FiniteIncidence transpose(const FiniteIncidence& inc);

/// R(g)(y) = sum over (x, y) in S of g(x), computed as a pullback to S
/// followed by a pushforward to Y.
ConstructibleFn radon_finite(const FiniteIncidence& inc, const ConstructibleFn& g);

/// Class of {y : (x, y) in S, (y, x') in S'} for every pair (x, x').
/// `inc2` relates Y to X.
std::map<std::pair<std::string, std::string>, EulerDim> fiber_classes(const FiniteIncidence& inc,
                                                                     const FiniteIncidence& inc2);

enum class InversionStatus { Ok, HypothesesViolated, IdentityFailed };

struct FiniteInversion {
  InversionStatus status = InversionStatus::Ok;
  EulerDim lambda;
  EulerDim theta;
  std::size_t trials = 0;  // functions g checked
  std::string witness;
};

/// Reads lambda (off-diagonal class) and theta (with theta + lambda the
/// diagonal class) from the fiber table. theta is the least such element;
/// none exists, or it is zero, -> HypothesesViolated.
FiniteInversion fit_lambda_theta(const FiniteIncidence& inc, const FiniteIncidence& inc2);

/// Checks R_S'(R_S(g)) = theta g + lambda * integral(g) pointwise.
FiniteInversion inversion_check_finite(const FiniteIncidence& inc, const FiniteIncidence& inc2,
                                       const ConstructibleFn& g);
/// Same, for `trials` random A-valued g.
FiniteInversion inversion_trials_finite(const FiniteIncidence& inc, const FiniteIncidence& inc2, std::size_t trials,
                                        std::uint64_t seed);

/// Random function on `domain` with values from random_euler_dim.
ConstructibleFn random_finite_fn(const std::set<std::string>& domain, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// The plane

struct PolygonScene {
  PlaneComplex Z;
  std::optional<PlaneFn> weights;  // defaults to 1_Z
  std::vector<Point2> samples;

  /// The weighted function the transform acts on.
  PlaneFn function() const;
};

/// Class of l meeting the (weighted) scene.
EulerDim sigma_Z(const Line2D& l, const PolygonScene& scene);

/// Direction d -> sigma_Z of the line through p with direction d, on the
/// partition of RP^1 cut at the critical directions of p. With `verify`,
/// each open arc is evaluated at a second sample and must agree.
ConstructibleFn pencil_profile(const Point2& p, const PolygonScene& scene, bool verify = false);

/// R_S'(R_S(g))(p) as the integral of the pencil profile.
EulerDim double_radon_at(const Point2& p, const PolygonScene& scene, bool verify = false);

struct PlaneVerdict {
  Point2 point;
  EulerDim lhs;  // double transform
  EulerDim rhs;  // (-1,1) 1_Z(p) + (1,0) [Z]
  bool ok = false;
};

struct PlaneInversion {
  std::vector<PlaneVerdict> rows;
  std::size_t passed = 0;
  bool ok() const { return passed == rows.size(); }
};

/// Requires the scene weights to be 1_Z.
PlaneInversion inversion_check_plane(const PolygonScene& scene, const std::vector<Point2>& samples,
                                     bool verify = false);

/// [P^n] = ((1 + (-1)^n) / 2, n).
EulerDim projective_class(unsigned n);

/// ((-1)^(n+1), n-1) g + ((1 + (-1)^n) / 2, n-2) integral(g); n >= 2.
EulerDim symbolic_inversion(unsigned n, const EulerDim& g_value, const EulerDim& g_integral);

// ---------------------------------------------------------------------------
// Sample generation for convex scenes

/// Exact points strictly inside the convex polygon with the given vertices.
std::vector<Point2> interior_samples(const std::vector<Point2>& polygon, std::size_t count, std::mt19937_64& rng);
/// Exact points off the closed set covered by `c`, within a box around it.
std::vector<Point2> exterior_samples(const PlaneComplex& c, std::size_t count, std::mt19937_64& rng);

}  // namespace eulercalc
