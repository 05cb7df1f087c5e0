#include <catch_amalgamated.hpp>

#include "eulercalc/builtins.hpp"
#include "eulercalc/geometry.hpp"

using namespace eulercalc;

namespace {

Point2 pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }

}  // namespace

TEST_CASE("Rationals parse into reduced form", "[geometry]") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-7")) == "-7");
  CHECK_THROWS_AS(parse_rat("1/0"), RejectedInput);
  CHECK_THROWS_AS(parse_rat("x"), RejectedInput);
}

TEST_CASE("Directions are primitive and canonical", "[geometry]") {
  CHECK(Direction::of(Rat(-2), Rat(-4)) == Direction(BigInt(1), BigInt(2)));
  CHECK(Direction::of(Rat(-3), Rat(0)) == Direction(BigInt(1), BigInt(0)));
  const Direction h(BigInt(1), BigInt(0));
  const Direction v(BigInt(0), BigInt(1));
  CHECK(angle_less(h, v));
  CHECK(on_open_arc(Direction(BigInt(1), BigInt(1)), h, v));
  CHECK_FALSE(on_open_arc(Direction(BigInt(-1), BigInt(1)), h, v));
  CHECK(on_open_arc(Direction(BigInt(-1), BigInt(1)), v, h));
}

TEST_CASE("mu on the line", "[geometry]") {
  CHECK(mu_piece(LinePiece::at(Rat(0))) == EulerDim(1, 0));
  CHECK(mu_piece(LinePiece::open(Rat(0), Rat(1))) == EulerDim(-1, 1));
  CHECK(mu_piece(LinePiece::open(ExtRat::neg_inf(), ExtRat::pos_inf())) == EulerDim(-1, 1));
  const LineSet1D closed({LinePiece::at(Rat(0)), LinePiece::open(Rat(0), Rat(1)), LinePiece::at(Rat(1))});
  CHECK(mu_1d(closed) == EulerDim(1, 1));
  CHECK(mu_1d(LineSet1D()) == EulerDim::zero());
  CHECK_THROWS_AS(LineSet1D({LinePiece::open(Rat(0), Rat(2)), LinePiece::at(Rat(1))}), RejectedInput);
}

TEST_CASE("mu on RP^1", "[geometry]") {
  CHECK(mu_circle(CircleSet::full()) == EulerDim(0, 1));
  const std::vector<Direction> crit{Direction(BigInt(1), BigInt(0)), Direction(BigInt(1), BigInt(1)),
                                    Direction(BigInt(0), BigInt(1))};
  const auto parts = circle_partition(crit);
  CHECK(parts.size() == 6);
  CHECK(mu_circle(CircleSet(parts)) == EulerDim(0, 1));
}

TEST_CASE("mu of a closed square and of its boundary", "[geometry]") {
  const auto sq = unit_square().Z;
  CHECK(mu_complex(sq) == EulerDim(1, 2));
  PlaneComplex boundary = sq;
  boundary.cells.clear();
  for (const auto& c : sq.cells)
    if (c.kind == CellKind::Vertex) boundary.cells.push_back(c);
  for (std::size_t i = 0; i < 4; ++i) boundary.cells.push_back(Cell::edge(i, (i + 1) % 4));
  CHECK(mu_complex(boundary) == EulerDim(0, 1));
}

TEST_CASE("Overlapping cells are rejected with their indices", "[geometry]") {
  PlaneComplex c;
  c.vertices = {pt("0", "0"), pt("2", "0"), pt("0", "2"), pt("1/2", "1/2")};
  c.cells = {Cell::face(0, 1, 2), Cell::vertex(3)};
  REQUIRE(check_disjoint(c).has_value());
  CHECK(*check_disjoint(c) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_THROWS_WITH(require_valid(c), Catch::Matchers::ContainsSubstring("cells 0 and 1 overlap"));
  c.cells = {Cell::face(0, 1, 1)};
  CHECK_THROWS_AS(check_structure(c), RejectedInput);
}

TEST_CASE("Point location", "[geometry]") {
  const auto sq = unit_square().Z;
  const auto inside = locate(sq, pt("1/3", "1/5"));
  REQUIRE(inside);
  CHECK(sq.cells[*inside].kind == CellKind::Face);
  const auto corner = locate(sq, pt("1", "1"));
  REQUIRE(corner);
  CHECK(sq.cells[*corner].kind == CellKind::Vertex);
  CHECK_FALSE(locate(sq, pt("2", "1/2")));
}

TEST_CASE("Line through a complex", "[geometry]") {
  const auto sq = unit_square().Z;
  const auto hits = intersect_line_complex(Line2D::vertical(parse_rat("1/2")), sq);
  std::vector<LinePiece> pieces;
  for (const auto& h : hits) pieces.push_back(h.piece);
  CHECK(mu_1d(LineSet1D(pieces)) == EulerDim(1, 1));
  CHECK(intersect_line_complex(Line2D::vertical(Rat(3)), sq).empty());
}

TEST_CASE("Critical directions from an exterior point of the square", "[geometry]") {
  // From (2,2) the four vertices span only three directions: (0,0) and
  // (1,1) are collinear with the point.
  const auto crit = critical_directions(pt("2", "2"), unit_square().Z);
  CHECK(crit.size() == 3);
  for (std::size_t i = 1; i < crit.size(); ++i) CHECK(angle_less(crit[i - 1], crit[i]));
}

TEST_CASE("Refinements preserve mu", "[geometry]") {
  const auto pent = convex_pentagon().Z;
  const auto base = mu_complex(pent);
  CHECK(mu_complex(refine_vertical(pent, {parse_rat("1/2"), Rat(2), parse_rat("7/3")})) == base);
  CHECK(mu_complex(barycentric_subdivide(pent).complex) == base);
  const AffineMap shear{Rat(1), Rat(2), Rat(0), Rat(1), Rat(5), Rat(-1)};
  CHECK(mu_complex(affine_image(pent, shear)) == base);
  CHECK_THROWS_AS(affine_image(pent, AffineMap{Rat(1), Rat(1), Rat(1), Rat(1)}), RejectedInput);
}

TEST_CASE("Overlay of two overlapping squares", "[geometry]") {
  const auto a = unit_square().Z;
  const auto b = affine_image(a, AffineMap{Rat(1), Rat(0), Rat(0), Rat(1), parse_rat("1/2"), parse_rat("1/2")});
  const auto ov = overlay({&a, &b});
  require_valid(ov.complex);
  // Union of two unit squares overlapping in a quarter square.
  CHECK(mu_complex(ov.complex) == EulerDim(1, 2));
  std::size_t both = 0;
  for (const auto& o : ov.owner)
    if (o[0] && o[1]) ++both;
  CHECK(both > 0);
}
