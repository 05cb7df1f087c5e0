#pragma once

// Positive constructible functions: finite-image functions valued in A,
// stored as a finite partition of the carrier with one value per piece.
// Off-support points evaluate to zero; zero-valued pieces may be dropped
// without changing the function.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "eulercalc/geometry.hpp"
#include "eulercalc/semiring.hpp"

namespace eulercalc {

enum class Carrier { Finite, Line, Circle, Plane };

std::string to_string(Carrier c);

/// Function on a finite label set. `values` holds the nonzero entries only.
struct FiniteFn {
  std::set<std::string> domain;
  std::map<std::string, EulerDim> values;

  EulerDim at(const std::string& label) const;
};

struct LineFn {
  std::vector<std::pair<LinePiece, EulerDim>> parts;  // disjoint, sorted
};

struct CircleFn {
  std::vector<std::pair<CirclePiece, EulerDim>> parts;  // disjoint
};

/// One value per cell of a compactly supported complex.
struct PlaneFn {
  PlaneComplex complex;
  std::vector<EulerDim> values;
};

/// Planar function constant along vertical lines: (x, y) -> base(x).
/// This is how pullbacks along the first-coordinate projection are stored,
/// since they are not compactly supported.
struct LiftedFn {
  LineFn base;
};

/// Label of the one-point carrier (target of constant maps).
inline const std::string kPointLabel = "pt";

class ConstructibleFn {
 public:
  using Repr = std::variant<FiniteFn, LineFn, CircleFn, PlaneFn, LiftedFn>;

  ConstructibleFn() : repr_(FiniteFn{}) {}
  /// Validates disjointness of the pieces; rejects malformed input.
  ConstructibleFn(Repr repr);

  Carrier carrier() const;
  const Repr& repr() const { return repr_; }

  template <class T>
  const T* get() const { return std::get_if<T>(&repr_); }

  // Indicator functions.
  static ConstructibleFn indicator(const LineSet1D& s);
  static ConstructibleFn indicator(const CircleSet& s);
  static ConstructibleFn indicator(const PlaneComplex& c);
  static ConstructibleFn indicator(const std::set<std::string>& domain, const std::set<std::string>& subset);
  /// Value at the one point of the point carrier.
  static ConstructibleFn point_value(const EulerDim& v);

 private:
  Repr repr_;
};

using CarrierPoint = std::variant<std::string, Rat, Direction, Point2>;

EulerDim cf_eval(const ConstructibleFn& f, const CarrierPoint& p);

/// Pointwise operations through a common refinement; rejects mismatched
/// carriers (and planar sums mixing lifted and compact functions).
ConstructibleFn cf_add(const ConstructibleFn& f, const ConstructibleFn& g);
ConstructibleFn cf_mul(const ConstructibleFn& f, const ConstructibleFn& g);

/// Sum over parts of value * mu(piece).
EulerDim cf_integrate(const ConstructibleFn& f);

/// Drops zero parts; on the line also merges runs "(a,b) {b} (b,c)" with a
/// common value.
ConstructibleFn cf_canonical(const ConstructibleFn& f);

/// Compares on a common refinement. Returns a description of a point where
/// the functions differ, or nullopt when they are equal.
std::optional<std::string> cf_difference(const ConstructibleFn& f, const ConstructibleFn& g);
inline bool cf_equal(const ConstructibleFn& f, const ConstructibleFn& g) { return !cf_difference(f, g); }

// ---------------------------------------------------------------------------
// Maps

struct FiniteMap {
  std::map<std::string, std::string> table;  // total on its key set
  std::set<std::string> codomain;            // defaults to the image when empty

  std::set<std::string> domain() const;
  std::set<std::string> target() const;
};

/// Plane -> line, (x, y) -> x.
struct ProjX {};

/// Line -> plane, t -> base + t * dir.
struct LineInclusion {
  Line2D line;
};

/// Carrier -> point. `domain` is needed only to pull back.
struct ConstMap {
  std::optional<Carrier> domain;
  std::set<std::string> labels;  // for a finite domain
};

using MapDesc = std::variant<FiniteMap, ProjX, LineInclusion, ConstMap>;

std::string describe(const MapDesc& m);

struct PushOptions {
  /// Evaluate each fiber class at a second exact sample and throw
  /// std::logic_error if it differs.
  bool verify_constancy = false;
};

/// f_!(g)(y) = integral of g over the fiber f^-1(y).
ConstructibleFn cf_pushforward(const MapDesc& m, const ConstructibleFn& f, PushOptions opts = {});
/// f^*(h) = h o f.
ConstructibleFn cf_pullback(const MapDesc& m, const ConstructibleFn& h);

struct FubiniReport {
  bool ok = false;
  EulerDim direct;  // integral of f
  EulerDim pushed;  // integral of the pushforward
};

FubiniReport fubini_check(const MapDesc& m, const ConstructibleFn& f);

struct ProjectionReport {
  bool ok = false;
  ConstructibleFn lhs;  // f_!(g f^*(h))
  ConstructibleFn rhs;  // f_!(g) h
  std::string witness;
};

ProjectionReport projection_formula_check(const MapDesc& m, const ConstructibleFn& g, const ConstructibleFn& h);

// ---------------------------------------------------------------------------
// Line helpers shared with the radon and cli modules.

/// Points and open intervals between the sorted distinct breakpoints,
/// covering the whole line.
std::vector<LinePiece> line_atoms(std::vector<Rat> breakpoints);
/// All finite endpoints of the parts.
std::vector<Rat> breakpoints(const LineFn& f);
EulerDim line_value(const LineFn& f, const Rat& t);

}  // namespace eulercalc
