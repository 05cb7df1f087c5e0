#include <algorithm>
#include <set>

#include "eulercalc/geometry.hpp"

// Common refinement by vertical decomposition. Cutting at every vertex
// abscissa and every pairwise crossing of supporting segments leaves, inside
// each open slab, a family of non-crossing segments spanning the slab; the
// atoms are those segments and the bands between consecutive ones. Each cut
// line is split at the points where anything meets it.

namespace eulercalc {

namespace {

struct Segment {
  Point2 a;
  Point2 b;  // a.x <= b.x
};

// y = slope * x + offset
struct SlabLine {
  Rat slope;
  Rat offset;

  Rat at(const Rat& x) const { return slope * x + offset; }
  friend bool operator<(const SlabLine& l, const SlabLine& r) {
    return l.slope < r.slope || (l.slope == r.slope && l.offset < r.offset);
  }
  friend bool operator==(const SlabLine&, const SlabLine&) = default;
};

SlabLine line_of(const Segment& s) {
  const Rat slope = (s.b.y - s.a.y) / (s.b.x - s.a.x);
  return {slope, s.a.y - slope * s.a.x};
}

void collect(const PlaneComplex& c, std::vector<Segment>& segments, std::vector<Rat>& xs,
             std::vector<Point2>& points) {
  for (const auto& cell : c.cells) {
    for (std::size_t k = 0; k < cell.arity(); ++k) {
      xs.push_back(c.vertex(cell.v[k]).x);
      points.push_back(c.vertex(cell.v[k]));
    }
    const std::size_t sides = cell.kind == CellKind::Edge ? 1 : cell.kind == CellKind::Face ? 3 : 0;
    for (std::size_t e = 0; e < sides; ++e) {
      Point2 a = c.vertex(cell.v[e]);
      Point2 b = c.vertex(cell.v[(e + 1) % cell.arity()]);
      if (b < a) std::swap(a, b);
      segments.push_back({a, b});
    }
  }
}

}  // namespace

Overlay overlay(const std::vector<const PlaneComplex*>& inputs) {
  std::vector<Segment> segments;
  std::vector<Rat> xs;
  std::vector<Point2> points;
  for (const auto* c : inputs) collect(*c, segments, xs, points);

  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.a.x == s.b.x) continue;
    const SlabLine li = line_of(s);
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const auto& t = segments[j];
      if (t.a.x == t.b.x) continue;
      const SlabLine lj = line_of(t);
      if (li.slope == lj.slope) continue;
      const Rat x = (lj.offset - li.offset) / (li.slope - lj.slope);
      if (s.a.x <= x && x <= s.b.x && t.a.x <= x && x <= t.b.x) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  Overlay out;
  VertexPool pool;

  auto owners_at = [&](const Point2& sample) {
    std::vector<std::optional<std::size_t>> owner;
    owner.reserve(inputs.size());
    bool any = false;
    for (const auto* c : inputs) {
      owner.push_back(locate(*c, sample));
      any = any || owner.back().has_value();
    }
    if (!any) owner.clear();
    return owner;
  };
  auto emit = [&](const std::vector<Cell>& cells, const std::vector<std::optional<std::size_t>>& owner) {
    for (const auto& k : cells) {
      out.complex.cells.push_back(k);
      out.owner.push_back(owner);
    }
  };

  // Cut lines.
  for (const auto& x : xs) {
    std::vector<Rat> ys;
    for (const auto& p : points) {
      if (p.x == x) ys.push_back(p.y);
    }
    for (const auto& s : segments) {
      if (s.a.x != s.b.x && s.a.x <= x && x <= s.b.x) ys.push_back(line_of(s).at(x));
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const Point2 p{x, ys[k]};
      if (auto owner = owners_at(p); !owner.empty()) emit({Cell::vertex(pool.add(p))}, owner);
      if (k + 1 < ys.size()) {
        const Point2 q{x, ys[k + 1]};
        const Point2 mid{x, (ys[k] + ys[k + 1]) / 2};
        if (auto owner = owners_at(mid); !owner.empty()) emit({Cell::edge(pool.add(p), pool.add(q))}, owner);
      }
    }
  }

  // Open slabs.
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat& x0 = xs[i];
    const Rat& x1 = xs[i + 1];
    const Rat mid = (x0 + x1) / 2;
    std::set<SlabLine> unique_lines;
    for (const auto& s : segments) {
      if (s.a.x != s.b.x && s.a.x <= x0 && x1 <= s.b.x) unique_lines.insert(line_of(s));
    }
    std::vector<SlabLine> lines(unique_lines.begin(), unique_lines.end());
    std::sort(lines.begin(), lines.end(), [&](const SlabLine& l, const SlabLine& r) { return l.at(mid) < r.at(mid); });

    for (std::size_t k = 0; k < lines.size(); ++k) {
      const SlabLine& lo = lines[k];
      if (auto owner = owners_at({mid, lo.at(mid)}); !owner.empty()) {
        emit({Cell::edge(pool.add({x0, lo.at(x0)}), pool.add({x1, lo.at(x1)}))}, owner);
      }
      if (k + 1 == lines.size()) break;
      const SlabLine& hi = lines[k + 1];
      auto owner = owners_at({mid, (lo.at(mid) + hi.at(mid)) / 2});
      if (owner.empty()) continue;
      std::vector<Point2> band{{x0, lo.at(x0)}, {x1, lo.at(x1)}, {x1, hi.at(x1)}, {x0, hi.at(x0)}};
      band.erase(std::unique(band.begin(), band.end()), band.end());
      if (band.size() > 1 && band.front() == band.back()) band.pop_back();
      emit(fan_triangulate(band, pool), owner);
    }
  }

  out.complex.vertices = pool.release();
  return out;
}

}  // namespace eulercalc
