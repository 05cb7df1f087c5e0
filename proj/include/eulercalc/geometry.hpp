#pragma once

// Exact rational carriers: constructible subsets of the line, of the
// direction circle RP^1, and planar complexes of open cells. Everything is
// computed with GMP rationals; there is no floating point in this module.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "eulercalc/semiring.hpp"

namespace eulercalc {

using Rat = boost::multiprecision::mpq_rational;

/// Parses "p/q" or "p" into reduced form. Rejects a zero denominator.
Rat parse_rat(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& q);
int sign(const Rat& q);

struct Point2 {
  Rat x;
  Rat y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

std::string to_string(const Point2& p);

/// Sign of the cross product (b - a) x (c - a).
int orient(const Point2& a, const Point2& b, const Point2& c);

/// A point of RP^1: a primitive integer vector (p, q) with q > 0, or q == 0 and p > 0.
class Direction {
 public:
  Direction(BigInt p, BigInt q);
  /// Direction spanned by a nonzero rational vector.
  static Direction of(const Rat& dx, const Rat& dy);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

std::string to_string(const Direction& d);

/// Angular order on canonical representatives; angles live in [0, pi).
bool angle_less(const Direction& a, const Direction& b);
/// True iff `d` lies on the open arc swept counter-clockwise from `from` to
/// `to`. When from == to the arc is RP^1 minus that point.
bool on_open_arc(const Direction& d, const Direction& from, const Direction& to);
/// A direction strictly inside the open counter-clockwise arc (from, to);
/// `variant` selects among distinct interior samples (0, 1, 2).
Direction arc_sample(const Direction& from, const Direction& to, int variant = 0);

struct Line2D {
  Point2 base;
  Direction dir;

  Point2 at(const Rat& t) const;
  /// Parameter of a point known to lie on the line.
  Rat param_of(const Point2& p) const;
  bool contains(const Point2& p) const;

  static Line2D through(const Point2& a, const Point2& b);
  static Line2D vertical(const Rat& x);
};

// ---------------------------------------------------------------------------
// The line

/// Rational number extended by -inf and +inf.
struct ExtRat {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rat value;

  static ExtRat neg_inf() { return {Kind::NegInf, Rat(0)}; }
  static ExtRat pos_inf() { return {Kind::PosInf, Rat(0)}; }
  static ExtRat finite(Rat v) { return {Kind::Finite, std::move(v)}; }
  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b);
};

std::string to_string(const ExtRat& e);

/// A point {q} or an open interval (lo, hi) with lo < hi.
struct LinePiece {
  bool point = true;
  ExtRat lo;
  ExtRat hi;

  static LinePiece at(Rat q);
  static LinePiece open(ExtRat lo, ExtRat hi);
  static LinePiece open(Rat lo, Rat hi) { return open(ExtRat::finite(std::move(lo)), ExtRat::finite(std::move(hi))); }

  bool contains(const Rat& t) const;
  bool bounded() const { return lo.is_finite() && hi.is_finite(); }
  /// An exact point of the piece; `variant` picks distinct interior points.
  Rat sample(int variant = 0) const;

  friend bool operator==(const LinePiece&, const LinePiece&) = default;
};

std::string to_string(const LinePiece& p);
bool pieces_overlap(const LinePiece& a, const LinePiece& b);
/// Order by left end, points before intervals starting at the same value.
bool piece_less(const LinePiece& a, const LinePiece& b);

EulerDim mu_piece(const LinePiece& p);

/// Finite disjoint union of points and open intervals, sorted.
class LineSet1D {
 public:
  LineSet1D() = default;
  /// Sorts `pieces`; rejects overlapping pieces.
  explicit LineSet1D(std::vector<LinePiece> pieces);
  const std::vector<LinePiece>& pieces() const { return pieces_; }
  bool contains(const Rat& t) const;

 private:
  std::vector<LinePiece> pieces_;
};

EulerDim mu_1d(const LineSet1D& s);

// ---------------------------------------------------------------------------
// The direction circle RP^1

struct CirclePiece {
  bool point = true;
  Direction from{BigInt(1), BigInt(0)};
  Direction to{BigInt(1), BigInt(0)};

  static CirclePiece at(Direction d) { return {true, d, d}; }
  static CirclePiece arc(Direction from, Direction to) { return {false, std::move(from), std::move(to)}; }

  bool contains(const Direction& d) const;
  Direction sample(int variant = 0) const;

  friend bool operator==(const CirclePiece&, const CirclePiece&) = default;
};

std::string to_string(const CirclePiece& p);
bool circle_pieces_overlap(const CirclePiece& a, const CirclePiece& b);

EulerDim mu_circle_piece(const CirclePiece& p);

class CircleSet {
 public:
  CircleSet() = default;
  /// Rejects overlapping pieces; pieces are kept in cyclic order of their
  /// first direction.
  explicit CircleSet(std::vector<CirclePiece> pieces);
  /// All of RP^1 as the point (1,0) plus the complementary open arc.
  static CircleSet full();
  const std::vector<CirclePiece>& pieces() const { return pieces_; }
  bool contains(const Direction& d) const;

 private:
  std::vector<CirclePiece> pieces_;
};

EulerDim mu_circle(const CircleSet& s);

/// Points and open arcs partitioning RP^1 at the given (sorted, distinct)
/// critical directions. With no criticals, returns the `full()` partition.
std::vector<CirclePiece> circle_partition(const std::vector<Direction>& critical);

// ---------------------------------------------------------------------------
// Planar complexes

enum class CellKind { Vertex = 0, Edge = 1, Face = 2 };

/// Relative interior of a vertex, segment, or triangle, by vertex index.
struct Cell {
  CellKind kind = CellKind::Vertex;
  std::array<std::size_t, 3> v{0, 0, 0};

  static Cell vertex(std::size_t i) { return {CellKind::Vertex, {i, i, i}}; }
  static Cell edge(std::size_t i, std::size_t j) { return {CellKind::Edge, {i, j, j}}; }
  static Cell face(std::size_t i, std::size_t j, std::size_t k) { return {CellKind::Face, {i, j, k}}; }

  int dim() const { return static_cast<int>(kind); }
  std::size_t arity() const { return static_cast<std::size_t>(dim()) + 1; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct PlaneComplex {
  std::vector<Point2> vertices;
  std::vector<Cell> cells;

  const Point2& vertex(std::size_t i) const { return vertices.at(i); }
  friend bool operator==(const PlaneComplex&, const PlaneComplex&) = default;
};

/// Deduplicating vertex registry used while building complexes.
class VertexPool {
 public:
  VertexPool() = default;
  explicit VertexPool(std::vector<Point2> seed);
  std::size_t add(const Point2& p);
  const std::vector<Point2>& points() const { return points_; }
  std::vector<Point2> release() { index_.clear(); return std::move(points_); }

 private:
  std::vector<Point2> points_;
  std::map<Point2, std::size_t> index_;
};

/// Vertex indices in range, edge endpoints distinct, triangles non-degenerate.
/// Throws RejectedInput naming the offending cell.
void check_structure(const PlaneComplex& c);

/// True iff the relative interiors of two cells intersect.
bool cells_overlap(const PlaneComplex& c, std::size_t i, std::size_t j);
/// First pair of cells whose relative interiors intersect, if any.
std::optional<std::pair<std::size_t, std::size_t>> check_disjoint(const PlaneComplex& c);
/// check_structure plus check_disjoint; throws "cells i and j overlap".
void require_valid(const PlaneComplex& c);

bool cell_contains(const PlaneComplex& c, const Cell& cell, const Point2& p);
/// Index of the cell containing p, if any. Assumes disjoint cells.
std::optional<std::size_t> locate(const PlaneComplex& c, const Point2& p);

/// (-1)^d, d for a d-dimensional open cell.
EulerDim mu_cell(const Cell& cell);
/// Alternating cell count; validates the complex first.
EulerDim mu_complex(const PlaneComplex& c);

struct LineHit {
  std::size_t cell;
  LinePiece piece;  // in the parameter of the line
};

/// Exact intersection of a line with every cell, sorted along the line.
std::vector<LineHit> intersect_line_complex(const Line2D& l, const PlaneComplex& c);

/// Directions from p to every cell vertex, plus the directions of edges
/// (and triangle sides) whose supporting line passes through p; distinct and
/// sorted by angle.
std::vector<Direction> critical_directions(const Point2& p, const PlaneComplex& c);

/// A complex together with, for each of its cells, the index of the input
/// cell it was cut from.
struct Refinement {
  PlaneComplex complex;
  std::vector<std::size_t> origin;
};

/// Cuts every cell along the vertical lines x = xs[i]. Triangle pieces are
/// re-triangulated by a fan from their lowest-index vertex.
Refinement refine_vertical_mapped(const PlaneComplex& c, std::vector<Rat> xs);
PlaneComplex refine_vertical(const PlaneComplex& c, std::vector<Rat> xs);

/// Splits the given triangles (all when `faces` is empty) at their centroid.
Refinement barycentric_subdivide(const PlaneComplex& c, const std::vector<std::size_t>& faces = {});

/// (x, y) -> (a x + b y + e, c x + d y + f)
struct AffineMap {
  Rat a{1}, b{0}, c{0}, d{1}, e{0}, f{0};

  Rat det() const { return a * d - b * c; }
  Point2 operator()(const Point2& p) const { return {a * p.x + b * p.y + e, c * p.x + d * p.y + f}; }
};

/// Vertex-wise image under an invertible map; rejects singular maps.
PlaneComplex affine_image(const PlaneComplex& c, const AffineMap& m);

/// Concatenation of the two cell lists (vertex indices of `b` shifted).
PlaneComplex disjoint_union(const PlaneComplex& a, const PlaneComplex& b);

/// Sorted distinct x-coordinates of the vertices used by cells.
std::vector<Rat> cell_vertex_xs(const PlaneComplex& c);

/// Convex polygon (counter-clockwise, no repeated or collinear vertices)
/// triangulated as a fan from its lowest-index vertex: open triangles plus the
/// open diagonals. Returns the new cells.
std::vector<Cell> fan_triangulate(const std::vector<Point2>& polygon, VertexPool& pool);

// ---------------------------------------------------------------------------
// Overlay

/// Common refinement of several complexes. Every output cell lies inside at
/// most one cell of each input; `owner[k][i]` is that input cell for output
/// cell k and input i. Output cells lying in no input cell are omitted.
struct Overlay {
  PlaneComplex complex;
  std::vector<std::vector<std::optional<std::size_t>>> owner;
};

Overlay overlay(const std::vector<const PlaneComplex*>& inputs);

}  // namespace eulercalc
