#include "eulercalc/builtins.hpp"

#include <array>

namespace eulercalc {

namespace {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Representatives of the 1-dimensional subspaces of F_q^3: the first
// nonzero coordinate is 1.
std::vector<std::array<unsigned, 3>> projective_points(unsigned q) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) out.push_back({1, a, b});
  }
  for (unsigned b = 0; b < q; ++b) out.push_back({0, 1, b});
  out.push_back({0, 0, 1});
  return out;
}

Point2 pt(long x, long y) { return {Rat(x), Rat(y)}; }

}  // namespace

FiniteIncidence projective_plane(unsigned q) {
  if (!is_prime(q)) throw RejectedInput("pg2q needs a prime order, got " + std::to_string(q));
  const auto pts = projective_points(q);
  FiniteIncidence inc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    inc.X.push_back("p" + std::to_string(i));
    inc.Y.push_back("L" + std::to_string(i));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      unsigned dot = 0;
      for (int k = 0; k < 3; ++k) dot += pts[i][k] * pts[j][k];
      if (dot % q == 0) inc.S.emplace(inc.X[i], inc.Y[j]);
    }
  }
  return inc;
}

PlaneComplex convex_polygon_complex(const std::vector<Point2>& polygon) {
  if (polygon.size() < 3) throw RejectedInput("a polygon needs at least three vertices");
  VertexPool pool;
  PlaneComplex c;
  std::vector<std::size_t> ids;
  for (const auto& p : polygon) ids.push_back(pool.add(p));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    c.cells.push_back(Cell::vertex(ids[i]));
    c.cells.push_back(Cell::edge(ids[i], ids[(i + 1) % ids.size()]));
  }
  for (const auto& cell : fan_triangulate(polygon, pool)) c.cells.push_back(cell);
  c.vertices = pool.release();
  require_valid(c);
  return c;
}

BuiltinScene unit_square() {
  std::vector<Point2> poly{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  return {"square", poly, convex_polygon_complex(poly)};
}

BuiltinScene unit_triangle() {
  std::vector<Point2> poly{pt(0, 0), pt(1, 0), pt(0, 1)};
  return {"triangle", poly, convex_polygon_complex(poly)};
}

BuiltinScene convex_pentagon() {
  std::vector<Point2> poly{pt(0, 0), pt(4, 0), pt(5, 3), pt(2, 5), pt(-1, 3)};
  return {"pentagon", poly, convex_polygon_complex(poly)};
}

BuiltinScene builtin_scene(const std::string& name) {
  if (name == "square") return unit_square();
  if (name == "triangle") return unit_triangle();
  if (name == "pentagon") return convex_pentagon();
  throw RejectedInput("unknown scene \"" + name + "\" (expected square, triangle or pentagon)");
}

}  // namespace eulercalc
