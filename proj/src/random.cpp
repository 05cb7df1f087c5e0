#include "eulercalc/random.hpp"

#include <algorithm>
#include <set>

namespace eulercalc {

namespace {

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

EulerDim nonzero_value(std::mt19937_64& rng) {
  EulerDim v;
  while (v.is_zero()) v = random_euler_dim(rng, 3);
  return v;
}

AffineMap random_affine(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  AffineMap m;
  do {
    m.a = entry(rng);
    m.b = Rat(entry(rng), 2);
    m.c = Rat(entry(rng), 3);
    m.d = entry(rng);
  } while (m.det() == 0);
  m.e = random_rat(rng);
  m.f = random_rat(rng);
  return m;
}

LineFn refine_line(const LineFn& f, std::mt19937_64& rng) {
  LineFn out;
  for (const auto& [piece, v] : f.parts) {
    if (piece.point || !coin(rng, 0.6)) {
      out.parts.emplace_back(piece, v);
      continue;
    }
    const Rat s = piece.sample(std::uniform_int_distribution<int>(0, 2)(rng));
    out.parts.emplace_back(LinePiece::open(piece.lo, ExtRat::finite(s)), v);
    out.parts.emplace_back(LinePiece::at(s), v);
    out.parts.emplace_back(LinePiece::open(ExtRat::finite(s), piece.hi), v);
  }
  return out;
}

}  // namespace

Rat random_rat(std::mt19937_64& rng, int magnitude, int max_denominator) {
  const int d = std::uniform_int_distribution<int>(1, max_denominator)(rng);
  const int n = std::uniform_int_distribution<int>(-magnitude * d, magnitude * d)(rng);
  return Rat(n, d);
}

PlaneComplex random_complex(std::mt19937_64& rng) {
  const int w = std::uniform_int_distribution<int>(1, 3)(rng);
  const int h = std::uniform_int_distribution<int>(1, 2)(rng);
  PlaneComplex grid;
  auto id = [&](int i, int j) { return static_cast<std::size_t>(j * (w + 1) + i); };
  for (int j = 0; j <= h; ++j) {
    for (int i = 0; i <= w; ++i) {
      grid.vertices.push_back({Rat(i), Rat(j)});
      grid.cells.push_back(Cell::vertex(id(i, j)));
      if (i < w) grid.cells.push_back(Cell::edge(id(i, j), id(i + 1, j)));
      if (j < h) grid.cells.push_back(Cell::edge(id(i, j), id(i, j + 1)));
      if (i < w && j < h) {
        grid.cells.push_back(Cell::edge(id(i, j), id(i + 1, j + 1)));
        grid.cells.push_back(Cell::face(id(i, j), id(i + 1, j), id(i + 1, j + 1)));
        grid.cells.push_back(Cell::face(id(i, j), id(i + 1, j + 1), id(i, j + 1)));
      }
    }
  }
  PlaneComplex kept{grid.vertices, {}};
  for (const auto& cell : grid.cells) {
    if (coin(rng, 0.7)) kept.cells.push_back(cell);
  }
  if (kept.cells.empty()) kept.cells.push_back(grid.cells.front());

  std::vector<std::size_t> faces;
  for (std::size_t i = 0; i < kept.cells.size(); ++i) {
    if (kept.cells[i].kind == CellKind::Face && coin(rng, 0.3)) faces.push_back(i);
  }
  PlaneComplex c = faces.empty() ? kept : barycentric_subdivide(kept, faces).complex;
  return affine_image(c, random_affine(rng));
}

PlaneFn random_plane_fn(std::mt19937_64& rng) {
  PlaneFn f{random_complex(rng), {}};
  for (std::size_t i = 0; i < f.complex.cells.size(); ++i) f.values.push_back(nonzero_value(rng));
  return f;
}

ConstructibleFn random_line_fn(std::mt19937_64& rng) {
  std::vector<Rat> bps;
  for (int k = std::uniform_int_distribution<int>(0, 5)(rng); k > 0; --k) bps.push_back(random_rat(rng));
  LineFn f;
  for (auto& atom : line_atoms(bps)) {
    if (coin(rng, 0.7)) f.parts.emplace_back(std::move(atom), nonzero_value(rng));
  }
  return ConstructibleFn(std::move(f));
}

ConstructibleFn random_circle_fn(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-4, 4);
  std::vector<Direction> dirs;
  for (int k = std::uniform_int_distribution<int>(1, 5)(rng); k > 0; --k) {
    int p = 0, q = 0;
    while (p == 0 && q == 0) {
      p = coord(rng);
      q = coord(rng);
    }
    dirs.emplace_back(BigInt(p), BigInt(q));
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  CircleFn f;
  for (auto& piece : circle_partition(dirs)) {
    if (coin(rng, 0.7)) f.parts.emplace_back(std::move(piece), nonzero_value(rng));
  }
  return ConstructibleFn(std::move(f));
}

ConstructibleFn random_refinement(const ConstructibleFn& f, std::mt19937_64& rng) {
  if (f.get<FiniteFn>()) return f;
  if (auto g = f.get<LineFn>()) return ConstructibleFn(refine_line(*g, rng));
  if (auto g = f.get<LiftedFn>()) return ConstructibleFn(LiftedFn{refine_line(g->base, rng)});
  if (auto g = f.get<CircleFn>()) {
    CircleFn out;
    for (const auto& [piece, v] : g->parts) {
      if (piece.point || !coin(rng, 0.6)) {
        out.parts.emplace_back(piece, v);
        continue;
      }
      const Direction s = piece.sample(std::uniform_int_distribution<int>(0, 2)(rng));
      out.parts.emplace_back(CirclePiece::arc(piece.from, s), v);
      out.parts.emplace_back(CirclePiece::at(s), v);
      out.parts.emplace_back(CirclePiece::arc(s, piece.to), v);
    }
    return ConstructibleFn(std::move(out));
  }

  const auto& g = *f.get<PlaneFn>();
  std::vector<Rat> xs;
  for (const auto& v : g.complex.vertices) {
    if (coin(rng, 0.3)) xs.push_back(v.x + random_rat(rng, 1, 4));
  }
  const Refinement cut = refine_vertical_mapped(g.complex, xs);
  std::vector<std::size_t> faces;
  for (std::size_t i = 0; i < cut.complex.cells.size(); ++i) {
    if (cut.complex.cells[i].kind == CellKind::Face && coin(rng, 0.3)) faces.push_back(i);
  }
  const Refinement sub = barycentric_subdivide(cut.complex, faces);
  PlaneFn out{sub.complex, {}};
  for (std::size_t i = 0; i < sub.complex.cells.size(); ++i) out.values.push_back(g.values[cut.origin[sub.origin[i]]]);
  return ConstructibleFn(std::move(out));
}

}  // namespace eulercalc
