#pragma once

// Random inputs for the property suites. Everything is driven by an
// explicit mt19937_64 so runs are reproducible from a seed.

#include <random>

#include "eulercalc/constructible.hpp"

namespace eulercalc {

/// A sheared grid of triangulated unit squares with a random subset of its
/// cells kept; some triangles barycentrically subdivided.
PlaneComplex random_complex(std::mt19937_64& rng);
/// random_complex with a random A-value on every cell.
PlaneFn random_plane_fn(std::mt19937_64& rng);

ConstructibleFn random_line_fn(std::mt19937_64& rng);
ConstructibleFn random_circle_fn(std::mt19937_64& rng);

/// The same function on a finer partition: intervals and arcs split at
/// interior points, planar cells cut vertically and subdivided.
ConstructibleFn random_refinement(const ConstructibleFn& f, std::mt19937_64& rng);

Rat random_rat(std::mt19937_64& rng, int magnitude = 6, int max_denominator = 5);

}  // namespace eulercalc
