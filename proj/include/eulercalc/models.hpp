#pragma once

// Finite first-order models and one-variable Presburger sets.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eulercalc/constructible.hpp"

namespace eulercalc {

struct ModelMap {
  std::string dom;  // subset name
  std::string cod;  // subset name
  std::map<std::string, std::string> table;
};

/// Subset elements are tuples written "a,b,c" over the universe. The name
/// "universe" always denotes the whole universe.
struct FiniteModel {
  std::vector<std::string> universe;
  std::map<std::string, std::set<std::string>> subsets;
  std::map<std::string, ModelMap> maps;

  /// At least two distinct elements, tuple components in the universe, maps
  /// total on their domain with values in their codomain.
  void validate() const;
  std::set<std::string> subset(const std::string& name) const;
  FiniteMap finite_map(const std::string& name) const;
};

EulerDim sk0_class(const FiniteModel& m, const std::string& subset);
ConstructibleFn model_pushforward(const FiniteModel& m, const std::string& map, const ConstructibleFn& g);
ConstructibleFn model_pullback(const FiniteModel& m, const std::string& map, const ConstructibleFn& h);

/// The map x -> outer(inner(x)); inner's codomain must be outer's domain.
FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner);

// ---------------------------------------------------------------------------
// Presburger sets

/// {x : x = r mod d, lo <= x <= hi}; absent bounds are infinite.
struct Progression {
  std::int64_t r = 0;
  std::int64_t d = 1;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;

  bool contains(std::int64_t x) const;
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Canonical form: infinite progressions with r in [0, d), pairwise
/// disjoint and disjoint from the finite part. Progressions unbounded
/// above come first (each maximally extended downward, by residue), then
/// those bounded above. Equal sets have equal canonical forms.
struct PresburgerSet {
  std::set<std::int64_t> finite_part;
  std::vector<Progression> progs;

  bool contains(std::int64_t x) const;
  bool empty() const { return finite_part.empty() && progs.empty(); }
  friend bool operator==(const PresburgerSet&, const PresburgerSet&) = default;
};

std::string to_string(const PresburgerSet& s);

/// Canonical form of the union of the points and progressions.
PresburgerSet pres_normalize(const std::vector<Progression>& progs, const std::vector<std::int64_t>& points = {});

enum class SetOp { Union, Intersect, Difference };

PresburgerSet pres_ops(const PresburgerSet& a, const PresburgerSet& b, SetOp op);
/// (#X, 0) if finite, (0, 1) if infinite, zero if empty.
EulerDim pres_class(const PresburgerSet& a);

PresburgerSet pres_translate(const PresburgerSet& a, std::int64_t c);
PresburgerSet pres_reflect(const PresburgerSet& a);

/// Membership bitmap over [lo, hi].
std::vector<bool> pres_window(const PresburgerSet& a, std::int64_t lo, std::int64_t hi);

/// Random raw input: a few progressions with moduli up to `max_modulus` and
/// bounds within [-span, span] (or infinite), plus a few points.
PresburgerSet random_presburger(std::mt19937_64& rng, std::int64_t max_modulus = 6, std::int64_t span = 60);

}  // namespace eulercalc
