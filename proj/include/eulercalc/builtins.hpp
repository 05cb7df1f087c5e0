#pragma once

// Built-in test inputs: finite projective planes and small convex scenes.

#include <string>
#include <vector>

#include "eulercalc/radon.hpp"

namespace eulercalc {

/// Points and lines of PG(2, q) for prime q, "p0".. and "L0".., with
/// incidence given by a vanishing dot product over F_q.
FiniteIncidence projective_plane(unsigned q);
inline FiniteIncidence fano() { return projective_plane(2); }

/// The closed convex polygon with the given counter-clockwise vertices:
/// its vertices, sides, fan diagonals and open triangles.
PlaneComplex convex_polygon_complex(const std::vector<Point2>& polygon);

struct BuiltinScene {
  std::string name;
  std::vector<Point2> polygon;
  PlaneComplex Z;
};

BuiltinScene unit_square();
BuiltinScene unit_triangle();
BuiltinScene convex_pentagon();

/// "square", "triangle" or "pentagon".
BuiltinScene builtin_scene(const std::string& name);

}  // namespace eulercalc
