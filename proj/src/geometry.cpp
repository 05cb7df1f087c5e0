#include "eulercalc/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace eulercalc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw RejectedInput("malformed rational: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
}

Rat cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) { return ax * by - ay * bx; }

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s, text));
  const BigInt num = parse_int(s.substr(0, slash), text);
  const BigInt den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw RejectedInput("zero denominator in '" + std::string(text) + "'");
  return Rat(num) / Rat(den);
}

std::string to_string(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

int sign(const Rat& q) { return q.sign(); }

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

int orient(const Point2& a, const Point2& b, const Point2& c) {
  return sign(cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y));
}

Direction::Direction(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw RejectedInput("direction vector must be nonzero");
  const BigInt g = gcd(abs(p_), abs(q_));
  p_ /= g;
  q_ /= g;
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Direction Direction::of(const Rat& dx, const Rat& dy) {
  const BigInt l = lcm(denominator(dx), denominator(dy));
  return Direction(numerator(dx) * (l / denominator(dx)), numerator(dy) * (l / denominator(dy)));
}

std::string to_string(const Direction& d) { return "[" + d.p().str() + ", " + d.q().str() + "]"; }

bool angle_less(const Direction& a, const Direction& b) { return a.p() * b.q() - a.q() * b.p() > 0; }

bool on_open_arc(const Direction& d, const Direction& from, const Direction& to) {
  if (d == from || d == to) return false;
  if (from == to) return true;
  if (angle_less(from, to)) return angle_less(from, d) && angle_less(d, to);
  return angle_less(from, d) || angle_less(d, to);
}

Direction arc_sample(const Direction& from, const Direction& to, int variant) {
  const BigInt& up = from.p();
  const BigInt& uq = from.q();
  if (from == to) {
    // Open half-turn (a, a + pi): rotate by a quarter turn and lean either way.
    const BigInt rp = -uq;
    const BigInt rq = up;
    switch (variant % 3) {
      case 0: return Direction(rp, rq);
      case 1: return Direction(rp + up, rq + uq);
      default: return Direction(rp - up, rq - uq);
    }
  }
  BigInt wp = to.p();
  BigInt wq = to.q();
  if (!angle_less(from, to)) {
    wp = -wp;
    wq = -wq;
  }
  switch (variant % 3) {
    case 0: return Direction(up + wp, uq + wq);
    case 1: return Direction(up + 2 * wp, uq + 2 * wq);
    default: return Direction(2 * up + wp, 2 * uq + wq);
  }
}

Point2 Line2D::at(const Rat& t) const {
  return {base.x + t * Rat(dir.p()), base.y + t * Rat(dir.q())};
}

Rat Line2D::param_of(const Point2& p) const {
  const Rat dp(dir.p());
  const Rat dq(dir.q());
  return ((p.x - base.x) * dp + (p.y - base.y) * dq) / (dp * dp + dq * dq);
}

bool Line2D::contains(const Point2& p) const {
  return cross(Rat(dir.p()), Rat(dir.q()), p.x - base.x, p.y - base.y) == 0;
}

Line2D Line2D::through(const Point2& a, const Point2& b) {
  if (a == b) throw RejectedInput("a line needs two distinct points");
  return {a, Direction::of(b.x - a.x, b.y - a.y)};
}

Line2D Line2D::vertical(const Rat& x) { return {{x, Rat(0)}, Direction(BigInt(0), BigInt(1))}; }

// ---------------------------------------------------------------------------

bool operator<(const ExtRat& a, const ExtRat& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.kind == ExtRat::Kind::Finite && a.value < b.value;
}

std::string to_string(const ExtRat& e) {
  switch (e.kind) {
    case ExtRat::Kind::NegInf: return "-inf";
    case ExtRat::Kind::PosInf: return "inf";
    default: return to_string(e.value);
  }
}

LinePiece LinePiece::at(Rat q) {
  LinePiece p;
  p.point = true;
  p.lo = ExtRat::finite(q);
  p.hi = ExtRat::finite(std::move(q));
  return p;
}

LinePiece LinePiece::open(ExtRat lo, ExtRat hi) {
  if (lo.kind == ExtRat::Kind::PosInf || hi.kind == ExtRat::Kind::NegInf || !(lo < hi)) {
    throw RejectedInput("open interval (" + to_string(lo) + ", " + to_string(hi) + ") is empty");
  }
  LinePiece p;
  p.point = false;
  p.lo = std::move(lo);
  p.hi = std::move(hi);
  return p;
}

bool LinePiece::contains(const Rat& t) const {
  const auto x = ExtRat::finite(t);
  if (point) return lo == x;
  return lo < x && x < hi;
}

Rat LinePiece::sample(int variant) const {
  if (point) return lo.value;
  const int v = variant % 3;
  if (bounded()) {
    static const Rat fractions[] = {Rat(1, 2), Rat(1, 3), Rat(2, 3)};
    return lo.value + (hi.value - lo.value) * fractions[v];
  }
  if (lo.is_finite()) return lo.value + 1 + v;
  if (hi.is_finite()) return hi.value - 1 - v;
  return Rat(v);
}

std::string to_string(const LinePiece& p) {
  if (p.point) return "{" + to_string(p.lo.value) + "}";
  return "(" + to_string(p.lo) + ", " + to_string(p.hi) + ")";
}

bool pieces_overlap(const LinePiece& a, const LinePiece& b) {
  if (a.point) return b.contains(a.lo.value);
  if (b.point) return a.contains(b.lo.value);
  const ExtRat& lo = a.lo < b.lo ? b.lo : a.lo;
  const ExtRat& hi = a.hi < b.hi ? a.hi : b.hi;
  return lo < hi;
}

bool piece_less(const LinePiece& a, const LinePiece& b) {
  if (a.lo == b.lo) return a.point && !b.point;
  return a.lo < b.lo;
}

EulerDim mu_piece(const LinePiece& p) { return p.point ? EulerDim(1, 0) : EulerDim(-1, 1); }

LineSet1D::LineSet1D(std::vector<LinePiece> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(), piece_less);
  // Once sorted by left end, any overlap shows up between neighbours.
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_overlap(pieces_[i - 1], pieces_[i])) {
      throw RejectedInput("pieces " + to_string(pieces_[i - 1]) + " and " + to_string(pieces_[i]) + " overlap");
    }
  }
}

bool LineSet1D::contains(const Rat& t) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const LinePiece& p) { return p.contains(t); });
}

EulerDim mu_1d(const LineSet1D& s) {
  EulerDim total;
  for (const auto& p : s.pieces()) total += mu_piece(p);
  return total;
}

// ---------------------------------------------------------------------------

bool CirclePiece::contains(const Direction& d) const {
  if (point) return d == from;
  return on_open_arc(d, from, to);
}

Direction CirclePiece::sample(int variant) const {
  if (point) return from;
  return arc_sample(from, to, variant);
}

std::string to_string(const CirclePiece& p) {
  if (p.point) return "{" + to_string(p.from) + "}";
  return "arc(" + to_string(p.from) + " -> " + to_string(p.to) + ")";
}

bool circle_pieces_overlap(const CirclePiece& a, const CirclePiece& b) {
  if (a.point) return b.contains(a.from);
  if (b.point) return a.contains(b.from);
  return a.from == b.from || a.contains(b.from) || b.contains(a.from);
}

EulerDim mu_circle_piece(const CirclePiece& p) { return p.point ? EulerDim(1, 0) : EulerDim(-1, 1); }

CircleSet::CircleSet(std::vector<CirclePiece> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      if (circle_pieces_overlap(pieces_[i], pieces_[j])) {
        throw RejectedInput("circle pieces " + to_string(pieces_[i]) + " and " + to_string(pieces_[j]) + " overlap");
      }
    }
  }
  std::stable_sort(pieces_.begin(), pieces_.end(), [](const CirclePiece& a, const CirclePiece& b) {
    if (a.from == b.from) return a.point && !b.point;
    return angle_less(a.from, b.from);
  });
}

CircleSet CircleSet::full() { return CircleSet(circle_partition({})); }

bool CircleSet::contains(const Direction& d) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const CirclePiece& p) { return p.contains(d); });
}

EulerDim mu_circle(const CircleSet& s) {
  EulerDim total;
  for (const auto& p : s.pieces()) total += mu_circle_piece(p);
  return total;
}

std::vector<CirclePiece> circle_partition(const std::vector<Direction>& critical) {
  if (critical.empty()) {
    const Direction e(BigInt(1), BigInt(0));
    return {CirclePiece::at(e), CirclePiece::arc(e, e)};
  }
  std::vector<CirclePiece> out;
  for (std::size_t i = 0; i < critical.size(); ++i) {
    out.push_back(CirclePiece::at(critical[i]));
    out.push_back(CirclePiece::arc(critical[i], critical[(i + 1) % critical.size()]));
  }
  return out;
}

// ---------------------------------------------------------------------------

VertexPool::VertexPool(std::vector<Point2> seed) : points_(std::move(seed)) {
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::size_t VertexPool::add(const Point2& p) {
  auto [it, inserted] = index_.emplace(p, points_.size());
  if (inserted) points_.push_back(p);
  return it->second;
}

namespace {

std::string cell_name(std::size_t i) { return "cell " + std::to_string(i); }

bool strictly_between(const Point2& a, const Point2& b, const Point2& p) {
  if (orient(a, b, p) != 0) return false;
  const Rat t = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  const Rat len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return t > 0 && t < len;
}

bool strictly_inside(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  const int s = orient(a, b, c);
  return orient(a, b, p) == s && orient(b, c, p) == s && orient(c, a, p) == s;
}

// Open parameter interval {t in (lo, hi) : base + t*dir lies in the open
// triangle abc}; unset bounds mean infinite.
struct OpenRange {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
  bool empty = false;
};

OpenRange clip_to_open_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& base,
                                const Rat& dx, const Rat& dy, OpenRange range) {
  const int s = orient(a, b, c);
  const Point2* tri[3] = {&a, &b, &c};
  for (int e = 0; e < 3 && !range.empty; ++e) {
    const Point2& u = *tri[e];
    const Point2& v = *tri[(e + 1) % 3];
    const Rat ex = v.x - u.x;
    const Rat ey = v.y - u.y;
    // s * cross(v - u, base + t*dir - u) > 0  <=>  alpha + beta t > 0
    Rat alpha = cross(ex, ey, base.x - u.x, base.y - u.y);
    Rat beta = cross(ex, ey, dx, dy);
    if (s < 0) {
      alpha = -alpha;
      beta = -beta;
    }
    if (beta == 0) {
      if (alpha <= 0) range.empty = true;
      continue;
    }
    const Rat root = -alpha / beta;
    if (beta > 0) {
      if (!range.lo || *range.lo < root) range.lo = root;
    } else {
      if (!range.hi || root < *range.hi) range.hi = root;
    }
  }
  if (!range.empty && range.lo && range.hi && !(*range.lo < *range.hi)) range.empty = true;
  return range;
}

bool open_segments_overlap(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  if (o1 == 0 && o2 == 0) {
    const bool use_x = a.x != b.x;
    auto coord = [&](const Point2& p) -> const Rat& { return use_x ? p.x : p.y; };
    const Rat lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
    const Rat lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
    return std::max(lo1, lo2) < std::min(hi1, hi2);
  }
  return o1 * o2 < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

bool segment_meets_open_triangle(const Point2& a, const Point2& b, const Point2& p, const Point2& q,
                                 const Point2& r) {
  OpenRange range{Rat(0), Rat(1), false};
  range = clip_to_open_triangle(p, q, r, a, b.x - a.x, b.y - a.y, range);
  return !range.empty;
}

// Closed separation by a side line of `t1`.
bool separated_by_side(const std::array<const Point2*, 3>& t1, const std::array<const Point2*, 3>& t2) {
  for (int e = 0; e < 3; ++e) {
    const Point2& u = *t1[e];
    const Point2& v = *t1[(e + 1) % 3];
    const int s = orient(u, v, *t1[(e + 2) % 3]);
    if (std::all_of(t2.begin(), t2.end(), [&](const Point2* w) { return s * orient(u, v, *w) <= 0; })) return true;
  }
  return false;
}

}  // namespace

void check_structure(const PlaneComplex& c) {
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const Cell& cell = c.cells[i];
    for (std::size_t k = 0; k < cell.arity(); ++k) {
      if (cell.v[k] >= c.vertices.size()) {
        throw RejectedInput(cell_name(i) + " references missing vertex " + std::to_string(cell.v[k]));
      }
    }
    if (cell.kind == CellKind::Edge && c.vertex(cell.v[0]) == c.vertex(cell.v[1])) {
      throw RejectedInput(cell_name(i) + " is a degenerate edge");
    }
    if (cell.kind == CellKind::Face && orient(c.vertex(cell.v[0]), c.vertex(cell.v[1]), c.vertex(cell.v[2])) == 0) {
      throw RejectedInput(cell_name(i) + " is a degenerate triangle (zero signed area)");
    }
  }
}

bool cells_overlap(const PlaneComplex& c, std::size_t i, std::size_t j) {
  const Cell* x = &c.cells.at(i);
  const Cell* y = &c.cells.at(j);
  if (x->dim() > y->dim()) std::swap(x, y);
  auto P = [&](const Cell* cell, int k) -> const Point2& { return c.vertex(cell->v[k]); };

  switch (x->kind) {
    case CellKind::Vertex:
      return cell_contains(c, *y, P(x, 0));
    case CellKind::Edge:
      if (y->kind == CellKind::Edge) return open_segments_overlap(P(x, 0), P(x, 1), P(y, 0), P(y, 1));
      return segment_meets_open_triangle(P(x, 0), P(x, 1), P(y, 0), P(y, 1), P(y, 2));
    case CellKind::Face: {
      const std::array<const Point2*, 3> t1{&P(x, 0), &P(x, 1), &P(x, 2)};
      const std::array<const Point2*, 3> t2{&P(y, 0), &P(y, 1), &P(y, 2)};
      return !separated_by_side(t1, t2) && !separated_by_side(t2, t1);
    }
  }
  return false;
}

std::optional<std::pair<std::size_t, std::size_t>> check_disjoint(const PlaneComplex& c) {
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < c.cells.size(); ++j) {
      if (cells_overlap(c, i, j)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

void require_valid(const PlaneComplex& c) {
  check_structure(c);
  if (auto bad = check_disjoint(c)) {
    throw RejectedInput("cells " + std::to_string(bad->first) + " and " + std::to_string(bad->second) + " overlap");
  }
}

bool cell_contains(const PlaneComplex& c, const Cell& cell, const Point2& p) {
  switch (cell.kind) {
    case CellKind::Vertex: return c.vertex(cell.v[0]) == p;
    case CellKind::Edge: return strictly_between(c.vertex(cell.v[0]), c.vertex(cell.v[1]), p);
    case CellKind::Face: return strictly_inside(c.vertex(cell.v[0]), c.vertex(cell.v[1]), c.vertex(cell.v[2]), p);
  }
  return false;
}

std::optional<std::size_t> locate(const PlaneComplex& c, const Point2& p) {
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    if (cell_contains(c, c.cells[i], p)) return i;
  }
  return std::nullopt;
}

EulerDim mu_cell(const Cell& cell) {
  const auto d = static_cast<std::uint32_t>(cell.dim());
  return EulerDim(d % 2 == 0 ? 1 : -1, d);
}

EulerDim mu_complex(const PlaneComplex& c) {
  require_valid(c);
  EulerDim total;
  for (const auto& cell : c.cells) total += mu_cell(cell);
  return total;
}

std::vector<LineHit> intersect_line_complex(const Line2D& l, const PlaneComplex& c) {
  const Rat dx(l.dir.p());
  const Rat dy(l.dir.q());
  const Point2 ahead{l.base.x + dx, l.base.y + dy};
  std::vector<LineHit> hits;

  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    const Cell& cell = c.cells[i];
    switch (cell.kind) {
      case CellKind::Vertex: {
        const Point2& v = c.vertex(cell.v[0]);
        if (l.contains(v)) hits.push_back({i, LinePiece::at(l.param_of(v))});
        break;
      }
      case CellKind::Edge: {
        const Point2& a = c.vertex(cell.v[0]);
        const Point2& b = c.vertex(cell.v[1]);
        const int oa = orient(l.base, ahead, a);
        const int ob = orient(l.base, ahead, b);
        if (oa == 0 && ob == 0) {
          Rat ta = l.param_of(a), tb = l.param_of(b);
          if (tb < ta) std::swap(ta, tb);
          hits.push_back({i, LinePiece::open(ta, tb)});
        } else if (oa * ob < 0) {
          const Rat ga = cross(dx, dy, a.x - l.base.x, a.y - l.base.y);
          const Rat gb = cross(dx, dy, b.x - l.base.x, b.y - l.base.y);
          const Rat s = ga / (ga - gb);
          const Point2 hit{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
          hits.push_back({i, LinePiece::at(l.param_of(hit))});
        }
        break;
      }
      case CellKind::Face: {
        const auto range = clip_to_open_triangle(c.vertex(cell.v[0]), c.vertex(cell.v[1]), c.vertex(cell.v[2]),
                                                 l.base, dx, dy, OpenRange{});
        if (range.empty) break;
        if (!range.lo || !range.hi) throw std::logic_error("unbounded line/triangle intersection");
        hits.push_back({i, LinePiece::open(*range.lo, *range.hi)});
        break;
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const LineHit& a, const LineHit& b) { return piece_less(a.piece, b.piece); });
  return hits;
}

std::vector<Direction> critical_directions(const Point2& p, const PlaneComplex& c) {
  std::vector<Direction> dirs;
  std::set<std::size_t> used;
  for (const auto& cell : c.cells) {
    for (std::size_t k = 0; k < cell.arity(); ++k) used.insert(cell.v[k]);
    const std::size_t sides = cell.kind == CellKind::Edge ? 1 : cell.kind == CellKind::Face ? 3 : 0;
    for (std::size_t e = 0; e < sides; ++e) {
      const Point2& a = c.vertex(cell.v[e]);
      const Point2& b = c.vertex(cell.v[(e + 1) % cell.arity()]);
      if (orient(a, b, p) == 0) dirs.push_back(Direction::of(b.x - a.x, b.y - a.y));
    }
  }
  for (std::size_t i : used) {
    const Point2& v = c.vertex(i);
    if (v != p) dirs.push_back(Direction::of(v.x - p.x, v.y - p.y));
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

// ---------------------------------------------------------------------------

namespace {

using Polygon = std::vector<Point2>;

// Removes repeated and collinear vertices of a convex polygon.
Polygon clean_polygon(Polygon poly) {
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point2& prev = poly[(i + poly.size() - 1) % poly.size()];
      const Point2& next = poly[(i + 1) % poly.size()];
      if (poly[i] == next || orient(prev, poly[i], next) == 0) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return poly;
}

// Keeps the part with side * (x - cut) >= 0.
Polygon clip_vertical(const Polygon& poly, const Rat& cut, int side) {
  Polygon out;
  auto inside = [&](const Point2& p) { return side * sign(p.x - cut) >= 0; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& cur = poly[i];
    const Point2& next = poly[(i + 1) % poly.size()];
    const bool ci = inside(cur), ni = inside(next);
    if (ci) out.push_back(cur);
    if (ci != ni) {
      const Rat s = (cut - cur.x) / (next.x - cur.x);
      out.push_back({cut, cur.y + s * (next.y - cur.y)});
    }
  }
  return out;
}

}  // namespace

std::vector<Cell> fan_triangulate(const std::vector<Point2>& polygon, VertexPool& pool) {
  std::vector<Cell> out;
  if (polygon.size() < 3) return out;
  std::vector<std::size_t> idx;
  idx.reserve(polygon.size());
  for (const auto& p : polygon) idx.push_back(pool.add(p));
  const auto apex = static_cast<std::size_t>(std::min_element(idx.begin(), idx.end()) - idx.begin());
  std::rotate(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(apex), idx.end());
  const std::size_t m = idx.size();
  for (std::size_t i = 1; i + 1 < m; ++i) out.push_back(Cell::face(idx[0], idx[i], idx[i + 1]));
  for (std::size_t i = 2; i + 1 < m; ++i) out.push_back(Cell::edge(idx[0], idx[i]));
  return out;
}

Refinement refine_vertical_mapped(const PlaneComplex& c, std::vector<Rat> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  VertexPool pool(c.vertices);
  Refinement out;

  auto cuts_within = [&](const Rat& lo, const Rat& hi) {
    std::vector<Rat> r;
    for (const auto& x : xs) {
      if (lo < x && x < hi) r.push_back(x);
    }
    return r;
  };

  for (std::size_t ci = 0; ci < c.cells.size(); ++ci) {
    const Cell& cell = c.cells[ci];
    auto emit = [&](Cell k) {
      out.complex.cells.push_back(k);
      out.origin.push_back(ci);
    };

    if (cell.kind == CellKind::Vertex) {
      emit(cell);
      continue;
    }

    if (cell.kind == CellKind::Edge) {
      const Point2& a = c.vertex(cell.v[0]);
      const Point2& b = c.vertex(cell.v[1]);
      auto cuts = cuts_within(std::min(a.x, b.x), std::max(a.x, b.x));
      if (cuts.empty()) {
        emit(cell);
        continue;
      }
      if (b.x < a.x) std::reverse(cuts.begin(), cuts.end());
      std::size_t prev = cell.v[0];
      for (const auto& x : cuts) {
        const Rat s = (x - a.x) / (b.x - a.x);
        const std::size_t k = pool.add({x, a.y + s * (b.y - a.y)});
        emit(Cell::edge(prev, k));
        emit(Cell::vertex(k));
        prev = k;
      }
      emit(Cell::edge(prev, cell.v[1]));
      continue;
    }

    Polygon tri{c.vertex(cell.v[0]), c.vertex(cell.v[1]), c.vertex(cell.v[2])};
    if (orient(tri[0], tri[1], tri[2]) < 0) std::swap(tri[1], tri[2]);
    Rat xmin = tri[0].x, xmax = tri[0].x;
    for (const auto& p : tri) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
    }
    const auto cuts = cuts_within(xmin, xmax);
    if (cuts.empty()) {
      emit(cell);
      continue;
    }
    std::vector<Rat> bounds;
    bounds.push_back(xmin);
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(xmax);
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
      const Polygon slab = clean_polygon(clip_vertical(clip_vertical(tri, bounds[s], +1), bounds[s + 1], -1));
      for (const auto& k : fan_triangulate(slab, pool)) emit(k);
    }
    for (const auto& x : cuts) {
      // Closed triangle meets x = cut in a segment with distinct ends.
      std::optional<Rat> ylo, yhi;
      for (int e = 0; e < 3; ++e) {
        const Point2& u = tri[e];
        const Point2& v = tri[(e + 1) % 3];
        if (std::min(u.x, v.x) <= x && x <= std::max(u.x, v.x) && u.x != v.x) {
          const Rat y = u.y + (x - u.x) / (v.x - u.x) * (v.y - u.y);
          if (!ylo || y < *ylo) ylo = y;
          if (!yhi || *yhi < y) yhi = y;
        }
      }
      emit(Cell::edge(pool.add({x, *ylo}), pool.add({x, *yhi})));
    }
  }
  out.complex.vertices = pool.release();
  return out;
}

PlaneComplex refine_vertical(const PlaneComplex& c, std::vector<Rat> xs) {
  return refine_vertical_mapped(c, std::move(xs)).complex;
}

Refinement barycentric_subdivide(const PlaneComplex& c, const std::vector<std::size_t>& faces) {
  std::set<std::size_t> chosen(faces.begin(), faces.end());
  VertexPool pool(c.vertices);
  Refinement out;
  for (std::size_t ci = 0; ci < c.cells.size(); ++ci) {
    const Cell& cell = c.cells[ci];
    auto emit = [&](Cell k) {
      out.complex.cells.push_back(k);
      out.origin.push_back(ci);
    };
    if (cell.kind != CellKind::Face || (!chosen.empty() && !chosen.count(ci))) {
      emit(cell);
      continue;
    }
    const Point2& a = c.vertex(cell.v[0]);
    const Point2& b = c.vertex(cell.v[1]);
    const Point2& d = c.vertex(cell.v[2]);
    const std::size_t g = pool.add({(a.x + b.x + d.x) / 3, (a.y + b.y + d.y) / 3});
    emit(Cell::vertex(g));
    for (int k = 0; k < 3; ++k) emit(Cell::edge(g, cell.v[k]));
    for (int k = 0; k < 3; ++k) emit(Cell::face(g, cell.v[k], cell.v[(k + 1) % 3]));
  }
  out.complex.vertices = pool.release();
  return out;
}

PlaneComplex affine_image(const PlaneComplex& c, const AffineMap& m) {
  if (m.det() == 0) throw RejectedInput("affine map is singular");
  PlaneComplex out;
  out.cells = c.cells;
  out.vertices.reserve(c.vertices.size());
  for (const auto& v : c.vertices) out.vertices.push_back(m(v));
  return out;
}

PlaneComplex disjoint_union(const PlaneComplex& a, const PlaneComplex& b) {
  PlaneComplex out = a;
  const std::size_t shift = a.vertices.size();
  out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
  for (Cell cell : b.cells) {
    for (auto& v : cell.v) v += shift;
    out.cells.push_back(cell);
  }
  return out;
}

std::vector<Rat> cell_vertex_xs(const PlaneComplex& c) {
  std::vector<Rat> xs;
  for (const auto& cell : c.cells) {
    for (std::size_t k = 0; k < cell.arity(); ++k) xs.push_back(c.vertex(cell.v[k]).x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace eulercalc
