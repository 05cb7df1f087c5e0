#include "eulercalc/constructible.hpp"

#include <algorithm>
#include <sstream>

namespace eulercalc {

std::string to_string(Carrier c) {
  switch (c) {
    case Carrier::Finite: return "finite";
    case Carrier::Line: return "line";
    case Carrier::Circle: return "circle";
    case Carrier::Plane: return "plane";
  }
  return "?";
}

EulerDim FiniteFn::at(const std::string& label) const {
  auto it = values.find(label);
  return it == values.end() ? EulerDim::zero() : it->second;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const char* kSupported =
    "supported maps: finite (finite -> finite), proj-x (plane -> line), line-incl (line -> plane), "
    "const (any carrier -> point)";

Point2 cell_sample(const PlaneComplex& c, const Cell& cell) {
  Rat x = 0, y = 0;
  for (std::size_t k = 0; k < cell.arity(); ++k) {
    x += c.vertex(cell.v[k]).x;
    y += c.vertex(cell.v[k]).y;
  }
  const Rat n(static_cast<long>(cell.arity()));
  return {x / n, y / n};
}

LineFn make_line_fn(std::vector<std::pair<LinePiece, EulerDim>> parts) {
  std::erase_if(parts, [](const auto& p) { return p.second.is_zero(); });
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return piece_less(a.first, b.first); });
  return LineFn{std::move(parts)};
}

void validate(const FiniteFn& f) {
  for (const auto& [label, v] : f.values) {
    if (!f.domain.count(label)) throw RejectedInput("label '" + label + "' is outside the function's domain");
  }
}

void validate(LineFn& f) {
  std::sort(f.parts.begin(), f.parts.end(), [](const auto& a, const auto& b) { return piece_less(a.first, b.first); });
  for (std::size_t i = 1; i < f.parts.size(); ++i) {
    if (pieces_overlap(f.parts[i - 1].first, f.parts[i].first)) {
      throw RejectedInput("pieces " + to_string(f.parts[i - 1].first) + " and " + to_string(f.parts[i].first) +
                          " overlap");
    }
  }
}

void validate(CircleFn& f) {
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < f.parts.size(); ++j) {
      if (circle_pieces_overlap(f.parts[i].first, f.parts[j].first)) {
        throw RejectedInput("circle pieces " + to_string(f.parts[i].first) + " and " + to_string(f.parts[j].first) +
                            " overlap");
      }
    }
  }
}

void validate(const PlaneFn& f) {
  if (f.values.size() != f.complex.cells.size()) throw RejectedInput("planar function needs one value per cell");
  require_valid(f.complex);
}

// --- line ------------------------------------------------------------------

std::vector<Rat> merged_breakpoints(const LineFn& f, const LineFn& g) {
  auto b = breakpoints(f);
  auto c = breakpoints(g);
  b.insert(b.end(), c.begin(), c.end());
  return b;
}

template <class Op>
LineFn line_combine(const LineFn& f, const LineFn& g, Op op) {
  std::vector<std::pair<LinePiece, EulerDim>> parts;
  for (auto& atom : line_atoms(merged_breakpoints(f, g))) {
    const Rat t = atom.sample();
    EulerDim v = op(line_value(f, t), line_value(g, t));
    if (!v.is_zero()) parts.emplace_back(std::move(atom), std::move(v));
  }
  return LineFn{std::move(parts)};
}

LineFn line_canonical(const LineFn& f) {
  auto parts = make_line_fn(f.parts).parts;
  std::vector<std::pair<LinePiece, EulerDim>> out;
  for (auto& part : parts) {
    out.push_back(std::move(part));
    // Collapse "(a,b) v, {b} v, (b,c) v" into "(a,c) v".
    while (out.size() >= 3) {
      auto& left = out[out.size() - 3];
      auto& mid = out[out.size() - 2];
      auto& right = out[out.size() - 1];
      if (!left.first.point && mid.first.point && !right.first.point && left.first.hi == mid.first.lo &&
          right.first.lo == mid.first.lo && left.second == mid.second && mid.second == right.second) {
        LinePiece merged = LinePiece::open(left.first.lo, right.first.hi);
        EulerDim v = left.second;
        out.resize(out.size() - 3);
        out.emplace_back(std::move(merged), std::move(v));
      } else {
        break;
      }
    }
  }
  return LineFn{std::move(out)};
}

// --- circle ----------------------------------------------------------------

EulerDim circle_value(const CircleFn& f, const Direction& d) {
  for (const auto& [piece, v] : f.parts) {
    if (piece.contains(d)) return v;
  }
  return EulerDim::zero();
}

std::vector<Direction> circle_breakpoints(const CircleFn& f, const CircleFn& g) {
  std::vector<Direction> dirs;
  for (const auto* h : {&f, &g}) {
    for (const auto& [piece, v] : h->parts) {
      dirs.push_back(piece.from);
      dirs.push_back(piece.to);
    }
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

template <class Op>
CircleFn circle_combine(const CircleFn& f, const CircleFn& g, Op op) {
  CircleFn out;
  for (auto& atom : circle_partition(circle_breakpoints(f, g))) {
    const Direction d = atom.sample();
    EulerDim v = op(circle_value(f, d), circle_value(g, d));
    if (!v.is_zero()) out.parts.emplace_back(std::move(atom), std::move(v));
  }
  return out;
}

// --- plane -----------------------------------------------------------------

EulerDim plane_value(const PlaneFn& f, const Point2& p) {
  if (auto i = locate(f.complex, p)) return f.values[*i];
  return EulerDim::zero();
}

// Drops zero cells and vertices nothing refers to.
PlaneFn plane_compact(const PlaneFn& f) {
  PlaneFn out;
  VertexPool pool;
  for (std::size_t i = 0; i < f.complex.cells.size(); ++i) {
    if (f.values[i].is_zero()) continue;
    Cell cell = f.complex.cells[i];
    for (std::size_t k = 0; k < cell.arity(); ++k) cell.v[k] = pool.add(f.complex.vertex(cell.v[k]));
    for (std::size_t k = cell.arity(); k < 3; ++k) cell.v[k] = cell.v[cell.arity() - 1];
    out.complex.cells.push_back(cell);
    out.values.push_back(f.values[i]);
  }
  out.complex.vertices = pool.release();
  return out;
}

template <class Op>
PlaneFn plane_combine(const PlaneFn& f, const PlaneFn& g, Op op) {
  const Overlay ov = overlay({&f.complex, &g.complex});
  PlaneFn out;
  out.complex.vertices = ov.complex.vertices;
  for (std::size_t k = 0; k < ov.complex.cells.size(); ++k) {
    const auto& own = ov.owner[k];
    const EulerDim a = own[0] ? f.values[*own[0]] : EulerDim::zero();
    const EulerDim b = own[1] ? g.values[*own[1]] : EulerDim::zero();
    EulerDim v = op(a, b);
    if (v.is_zero()) continue;
    out.complex.cells.push_back(ov.complex.cells[k]);
    out.values.push_back(std::move(v));
  }
  return plane_compact(out);
}

PlaneFn lifted_times_plane(const LiftedFn& h, const PlaneFn& g) {
  const Refinement r = refine_vertical_mapped(g.complex, breakpoints(h.base));
  PlaneFn out;
  out.complex.vertices = r.complex.vertices;
  for (std::size_t k = 0; k < r.complex.cells.size(); ++k) {
    const Point2 s = cell_sample(r.complex, r.complex.cells[k]);
    EulerDim v = line_value(h.base, s.x) * g.values[r.origin[k]];
    if (v.is_zero()) continue;
    out.complex.cells.push_back(r.complex.cells[k]);
    out.values.push_back(std::move(v));
  }
  return plane_compact(out);
}

const EulerDim& real_line_class() {
  static const EulerDim c(-1, 1);
  return c;
}

// --- finite ----------------------------------------------------------------

template <class Op>
FiniteFn finite_combine(const FiniteFn& f, const FiniteFn& g, Op op) {
  if (f.domain != g.domain) throw RejectedInput("finite functions live on different domains");
  FiniteFn out;
  out.domain = f.domain;
  for (const auto& label : f.domain) {
    EulerDim v = op(f.at(label), g.at(label));
    if (!v.is_zero()) out.values.emplace(label, std::move(v));
  }
  return out;
}

template <class Op>
ConstructibleFn combine(const ConstructibleFn& f, const ConstructibleFn& g, Op op, bool is_mul) {
  if (f.carrier() != g.carrier()) {
    throw RejectedInput("carrier mismatch: " + to_string(f.carrier()) + " vs " + to_string(g.carrier()));
  }
  using R = ConstructibleFn;
  if (auto a = f.get<FiniteFn>()) return R(finite_combine(*a, *g.get<FiniteFn>(), op));
  if (auto a = f.get<LineFn>()) return R(line_combine(*a, *g.get<LineFn>(), op));
  if (auto a = f.get<CircleFn>()) return R(circle_combine(*a, *g.get<CircleFn>(), op));

  const auto* fp = f.get<PlaneFn>();
  const auto* gp = g.get<PlaneFn>();
  const auto* fl = f.get<LiftedFn>();
  const auto* gl = g.get<LiftedFn>();
  if (fp && gp) return R(plane_combine(*fp, *gp, op));
  if (fl && gl) return R(LiftedFn{line_combine(fl->base, gl->base, op)});
  if (!is_mul) throw Unsupported("sum of a lifted (non-compact) and a compactly supported planar function");
  if (fl) return R(lifted_times_plane(*fl, *gp));
  return R(lifted_times_plane(*gl, *fp));
}

}  // namespace

// ---------------------------------------------------------------------------

ConstructibleFn::ConstructibleFn(Repr repr) : repr_(std::move(repr)) {
  std::visit(Overloaded{[](FiniteFn& f) { validate(f); }, [](LineFn& f) { validate(f); },
                        [](CircleFn& f) { validate(f); }, [](PlaneFn& f) { validate(f); },
                        [](LiftedFn& f) { validate(f.base); }},
             repr_);
}

Carrier ConstructibleFn::carrier() const {
  switch (repr_.index()) {
    case 0: return Carrier::Finite;
    case 1: return Carrier::Line;
    case 2: return Carrier::Circle;
    default: return Carrier::Plane;
  }
}

ConstructibleFn ConstructibleFn::indicator(const LineSet1D& s) {
  LineFn f;
  for (const auto& p : s.pieces()) f.parts.emplace_back(p, EulerDim::one());
  return ConstructibleFn(std::move(f));
}

ConstructibleFn ConstructibleFn::indicator(const CircleSet& s) {
  CircleFn f;
  for (const auto& p : s.pieces()) f.parts.emplace_back(p, EulerDim::one());
  return ConstructibleFn(std::move(f));
}

ConstructibleFn ConstructibleFn::indicator(const PlaneComplex& c) {
  return ConstructibleFn(PlaneFn{c, std::vector<EulerDim>(c.cells.size(), EulerDim::one())});
}

ConstructibleFn ConstructibleFn::indicator(const std::set<std::string>& domain, const std::set<std::string>& subset) {
  FiniteFn f;
  f.domain = domain;
  for (const auto& s : subset) f.values.emplace(s, EulerDim::one());
  return ConstructibleFn(std::move(f));
}

ConstructibleFn ConstructibleFn::point_value(const EulerDim& v) {
  FiniteFn f;
  f.domain = {kPointLabel};
  if (!v.is_zero()) f.values.emplace(kPointLabel, v);
  return ConstructibleFn(std::move(f));
}

std::vector<LinePiece> line_atoms(std::vector<Rat> bps) {
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<LinePiece> atoms;
  if (bps.empty()) {
    atoms.push_back(LinePiece::open(ExtRat::neg_inf(), ExtRat::pos_inf()));
    return atoms;
  }
  atoms.push_back(LinePiece::open(ExtRat::neg_inf(), ExtRat::finite(bps.front())));
  for (std::size_t i = 0; i < bps.size(); ++i) {
    atoms.push_back(LinePiece::at(bps[i]));
    atoms.push_back(LinePiece::open(ExtRat::finite(bps[i]),
                                    i + 1 < bps.size() ? ExtRat::finite(bps[i + 1]) : ExtRat::pos_inf()));
  }
  return atoms;
}

std::vector<Rat> breakpoints(const LineFn& f) {
  std::vector<Rat> out;
  for (const auto& [p, v] : f.parts) {
    if (p.lo.is_finite()) out.push_back(p.lo.value);
    if (p.hi.is_finite()) out.push_back(p.hi.value);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EulerDim line_value(const LineFn& f, const Rat& t) {
  for (const auto& [p, v] : f.parts) {
    if (p.contains(t)) return v;
  }
  return EulerDim::zero();
}

EulerDim cf_eval(const ConstructibleFn& f, const CarrierPoint& p) {
  auto mismatch = [&]() -> EulerDim {
    throw RejectedInput("point does not belong to the " + to_string(f.carrier()) + " carrier");
  };
  if (auto g = f.get<FiniteFn>()) {
    auto label = std::get_if<std::string>(&p);
    if (!label) return mismatch();
    if (!g->domain.count(*label)) throw RejectedInput("label '" + *label + "' is outside the domain");
    return g->at(*label);
  }
  if (auto g = f.get<LineFn>()) {
    auto t = std::get_if<Rat>(&p);
    return t ? line_value(*g, *t) : mismatch();
  }
  if (auto g = f.get<CircleFn>()) {
    auto d = std::get_if<Direction>(&p);
    return d ? circle_value(*g, *d) : mismatch();
  }
  auto q = std::get_if<Point2>(&p);
  if (!q) return mismatch();
  if (auto g = f.get<PlaneFn>()) return plane_value(*g, *q);
  return line_value(f.get<LiftedFn>()->base, q->x);
}

ConstructibleFn cf_add(const ConstructibleFn& f, const ConstructibleFn& g) {
  return combine(f, g, [](const EulerDim& a, const EulerDim& b) { return a + b; }, false);
}

ConstructibleFn cf_mul(const ConstructibleFn& f, const ConstructibleFn& g) {
  return combine(f, g, [](const EulerDim& a, const EulerDim& b) { return a * b; }, true);
}

EulerDim cf_integrate(const ConstructibleFn& f) {
  EulerDim total;
  std::visit(Overloaded{
                 [&](const FiniteFn& g) {
                   for (const auto& [label, v] : g.values) total += v;
                 },
                 [&](const LineFn& g) {
                   for (const auto& [p, v] : g.parts) total += v * mu_piece(p);
                 },
                 [&](const CircleFn& g) {
                   for (const auto& [p, v] : g.parts) total += v * mu_circle_piece(p);
                 },
                 [&](const PlaneFn& g) {
                   for (std::size_t i = 0; i < g.values.size(); ++i) total += g.values[i] * mu_cell(g.complex.cells[i]);
                 },
                 [&](const LiftedFn& g) {
                   for (const auto& [p, v] : g.base.parts) total += v * mu_piece(p) * real_line_class();
                 },
             },
             f.repr());
  return total;
}

ConstructibleFn cf_canonical(const ConstructibleFn& f) {
  return std::visit(Overloaded{
                        [](const FiniteFn& g) { return ConstructibleFn(g); },
                        [](const LineFn& g) { return ConstructibleFn(line_canonical(g)); },
                        [](const CircleFn& g) {
                          CircleFn out;
                          for (const auto& part : g.parts) {
                            if (!part.second.is_zero()) out.parts.push_back(part);
                          }
                          return ConstructibleFn(std::move(out));
                        },
                        [](const PlaneFn& g) { return ConstructibleFn(plane_compact(g)); },
                        [](const LiftedFn& g) { return ConstructibleFn(LiftedFn{line_canonical(g.base)}); },
                    },
                    f.repr());
}

std::optional<std::string> cf_difference(const ConstructibleFn& f, const ConstructibleFn& g) {
  if (f.carrier() != g.carrier()) return "carriers differ: " + to_string(f.carrier()) + " vs " + to_string(g.carrier());
  auto report = [](const std::string& where, const EulerDim& a, const EulerDim& b) {
    return std::optional<std::string>("at " + where + ": " + to_string(a) + " vs " + to_string(b));
  };

  if (auto a = f.get<FiniteFn>()) {
    const auto* b = g.get<FiniteFn>();
    std::set<std::string> labels = a->domain;
    labels.insert(b->domain.begin(), b->domain.end());
    for (const auto& label : labels) {
      if (a->at(label) != b->at(label)) return report(label, a->at(label), b->at(label));
    }
    return std::nullopt;
  }

  auto compare_lines = [&](const LineFn& a, const LineFn& b, const char* axis) -> std::optional<std::string> {
    for (const auto& atom : line_atoms(merged_breakpoints(a, b))) {
      const Rat t = atom.sample();
      const EulerDim va = line_value(a, t), vb = line_value(b, t);
      if (va != vb) return report(std::string(axis) + "=" + to_string(t) + " on " + to_string(atom), va, vb);
    }
    return std::nullopt;
  };
  if (auto a = f.get<LineFn>()) return compare_lines(*a, *g.get<LineFn>(), "t");

  if (auto a = f.get<CircleFn>()) {
    const auto* b = g.get<CircleFn>();
    for (const auto& atom : circle_partition(circle_breakpoints(*a, *b))) {
      const Direction d = atom.sample();
      const EulerDim va = circle_value(*a, d), vb = circle_value(*b, d);
      if (va != vb) return report("direction " + to_string(d), va, vb);
    }
    return std::nullopt;
  }

  const auto* fl = f.get<LiftedFn>();
  const auto* gl = g.get<LiftedFn>();
  if (fl && gl) return compare_lines(fl->base, gl->base, "x");
  if (fl || gl) {
    // A lifted function equals a compact one only if both vanish.
    const ConstructibleFn& lifted = fl ? f : g;
    const ConstructibleFn& compact = fl ? g : f;
    if (!lifted.get<LiftedFn>()->base.parts.empty() && cf_canonical(lifted).get<LiftedFn>()->base.parts.size()) {
      return std::optional<std::string>("a lifted function is not compactly supported");
    }
    const auto compacted = plane_compact(*compact.get<PlaneFn>());
    if (!compacted.complex.cells.empty()) return std::optional<std::string>("compact function is nonzero");
    return std::nullopt;
  }

  const auto* a = f.get<PlaneFn>();
  const auto* b = g.get<PlaneFn>();
  const Overlay ov = overlay({&a->complex, &b->complex});
  for (std::size_t k = 0; k < ov.complex.cells.size(); ++k) {
    const auto& own = ov.owner[k];
    const EulerDim va = own[0] ? a->values[*own[0]] : EulerDim::zero();
    const EulerDim vb = own[1] ? b->values[*own[1]] : EulerDim::zero();
    if (va != vb) return report(to_string(cell_sample(ov.complex, ov.complex.cells[k])), va, vb);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::set<std::string> FiniteMap::domain() const {
  std::set<std::string> out;
  for (const auto& [k, v] : table) out.insert(k);
  return out;
}

std::set<std::string> FiniteMap::target() const {
  if (!codomain.empty()) return codomain;
  std::set<std::string> out;
  for (const auto& [k, v] : table) out.insert(v);
  return out;
}

std::string describe(const MapDesc& m) {
  return std::visit(Overloaded{
                        [](const FiniteMap&) { return std::string("finite"); },
                        [](const ProjX&) { return std::string("proj-x"); },
                        [](const LineInclusion&) { return std::string("line-incl"); },
                        [](const ConstMap&) { return std::string("const"); },
                    },
                    m);
}

namespace {

[[noreturn]] void unsupported(const MapDesc& m, const ConstructibleFn& f, const char* direction) {
  throw Unsupported(std::string("cannot ") + direction + " a " + to_string(f.carrier()) + " function along " +
                    describe(m) + "; " + kSupported);
}

EulerDim fiber_integral(const PlaneFn& f, const Rat& x) {
  EulerDim total;
  for (const auto& hit : intersect_line_complex(Line2D::vertical(x), f.complex)) {
    total += f.values[hit.cell] * mu_piece(hit.piece);
  }
  return total;
}

LineFn push_plane_to_line(const PlaneFn& f, PushOptions opts) {
  const PlaneFn g = plane_compact(f);
  std::vector<std::pair<LinePiece, EulerDim>> parts;
  for (auto& atom : line_atoms(cell_vertex_xs(g.complex))) {
    if (!atom.bounded() && !atom.point) continue;  // outside the support
    EulerDim v = fiber_integral(g, atom.sample(0));
    if (opts.verify_constancy && !atom.point) {
      const EulerDim w = fiber_integral(g, atom.sample(1));
      if (v != w) {
        throw std::logic_error("fiber class not constant on " + to_string(atom) + ": " + to_string(v) + " vs " +
                               to_string(w));
      }
    }
    if (!v.is_zero()) parts.emplace_back(std::move(atom), std::move(v));
  }
  return LineFn{std::move(parts)};
}

LineFn restrict_to_line(const ConstructibleFn& h, const Line2D& line) {
  std::vector<std::pair<LinePiece, EulerDim>> parts;
  if (auto p = h.get<PlaneFn>()) {
    for (auto& hit : intersect_line_complex(line, p->complex)) {
      if (!p->values[hit.cell].is_zero()) parts.emplace_back(std::move(hit.piece), p->values[hit.cell]);
    }
    return make_line_fn(std::move(parts));
  }
  const LineFn& base = h.get<LiftedFn>()->base;
  const Rat dx(line.dir.p());
  if (dx == 0) {
    EulerDim v = line_value(base, line.base.x);
    if (!v.is_zero()) parts.emplace_back(LinePiece::open(ExtRat::neg_inf(), ExtRat::pos_inf()), std::move(v));
    return LineFn{std::move(parts)};
  }
  // x = base.x + t dx  <=>  t = (x - base.x) / dx
  auto to_t = [&](const ExtRat& x) {
    if (x.is_finite()) return ExtRat::finite((x.value - line.base.x) / dx);
    const bool up = (x.kind == ExtRat::Kind::PosInf) == (dx > 0);
    return up ? ExtRat::pos_inf() : ExtRat::neg_inf();
  };
  for (const auto& [piece, v] : base.parts) {
    if (piece.point) {
      parts.emplace_back(LinePiece::at(to_t(piece.lo).value), v);
    } else {
      ExtRat a = to_t(piece.lo), b = to_t(piece.hi);
      if (b < a) std::swap(a, b);
      parts.emplace_back(LinePiece::open(a, b), v);
    }
  }
  return make_line_fn(std::move(parts));
}

}  // namespace

ConstructibleFn cf_pushforward(const MapDesc& m, const ConstructibleFn& f, PushOptions opts) {
  if (auto cm = std::get_if<ConstMap>(&m)) {
    if (cm->domain && *cm->domain != f.carrier()) unsupported(m, f, "push");
    return ConstructibleFn::point_value(cf_integrate(f));
  }
  if (auto fm = std::get_if<FiniteMap>(&m)) {
    const auto* g = f.get<FiniteFn>();
    if (!g) unsupported(m, f, "push");
    if (g->domain != fm->domain()) throw RejectedInput("function domain does not match the map's domain");
    FiniteFn out;
    out.domain = fm->target();
    for (const auto& [x, y] : fm->table) {
      if (!out.domain.count(y)) throw RejectedInput("map value '" + y + "' is outside its codomain");
      const EulerDim v = g->at(x);
      if (v.is_zero()) continue;
      auto [it, inserted] = out.values.emplace(y, v);
      if (!inserted) it->second += v;
    }
    return ConstructibleFn(std::move(out));
  }
  if (std::holds_alternative<ProjX>(m)) {
    if (auto g = f.get<PlaneFn>()) return ConstructibleFn(push_plane_to_line(*g, opts));
    if (auto g = f.get<LiftedFn>()) {
      LineFn out;
      for (const auto& [p, v] : g->base.parts) out.parts.emplace_back(p, v * real_line_class());
      return ConstructibleFn(make_line_fn(std::move(out.parts)));
    }
    unsupported(m, f, "push");
  }
  const auto& incl = std::get<LineInclusion>(m);
  const auto* g = f.get<LineFn>();
  if (!g) unsupported(m, f, "push");
  VertexPool pool;
  PlaneFn out;
  for (const auto& [p, v] : g->parts) {
    if (v.is_zero()) continue;
    if (!p.bounded()) {
      throw Unsupported("pushing an unbounded piece " + to_string(p) + " into the plane: planar carriers are compact");
    }
    if (p.point) {
      out.complex.cells.push_back(Cell::vertex(pool.add(incl.line.at(p.lo.value))));
    } else {
      out.complex.cells.push_back(Cell::edge(pool.add(incl.line.at(p.lo.value)), pool.add(incl.line.at(p.hi.value))));
    }
    out.values.push_back(v);
  }
  out.complex.vertices = pool.release();
  return ConstructibleFn(std::move(out));
}

ConstructibleFn cf_pullback(const MapDesc& m, const ConstructibleFn& h) {
  if (auto cm = std::get_if<ConstMap>(&m)) {
    const auto* g = h.get<FiniteFn>();
    if (!g || g->domain != std::set<std::string>{kPointLabel}) unsupported(m, h, "pull back");
    if (!cm->domain) throw RejectedInput("pulling back along a constant map needs its domain carrier");
    const EulerDim v = g->at(kPointLabel);
    std::vector<std::pair<LinePiece, EulerDim>> everywhere;
    if (!v.is_zero()) everywhere.emplace_back(LinePiece::open(ExtRat::neg_inf(), ExtRat::pos_inf()), v);
    switch (*cm->domain) {
      case Carrier::Finite: {
        FiniteFn out;
        out.domain = cm->labels;
        if (!v.is_zero()) {
          for (const auto& l : cm->labels) out.values.emplace(l, v);
        }
        return ConstructibleFn(std::move(out));
      }
      case Carrier::Line: return ConstructibleFn(LineFn{std::move(everywhere)});
      case Carrier::Circle: {
        CircleFn out;
        if (!v.is_zero()) {
          for (auto& p : circle_partition({})) out.parts.emplace_back(std::move(p), v);
        }
        return ConstructibleFn(std::move(out));
      }
      case Carrier::Plane: return ConstructibleFn(LiftedFn{LineFn{std::move(everywhere)}});
    }
  }
  if (auto fm = std::get_if<FiniteMap>(&m)) {
    const auto* g = h.get<FiniteFn>();
    if (!g) unsupported(m, h, "pull back");
    if (g->domain != fm->target()) throw RejectedInput("function domain does not match the map's codomain");
    FiniteFn out;
    out.domain = fm->domain();
    for (const auto& [x, y] : fm->table) {
      const EulerDim v = g->at(y);
      if (!v.is_zero()) out.values.emplace(x, v);
    }
    return ConstructibleFn(std::move(out));
  }
  if (std::holds_alternative<ProjX>(m)) {
    const auto* g = h.get<LineFn>();
    if (!g) unsupported(m, h, "pull back");
    return ConstructibleFn(LiftedFn{*g});
  }
  const auto& incl = std::get<LineInclusion>(m);
  if (h.carrier() != Carrier::Plane) unsupported(m, h, "pull back");
  return ConstructibleFn(restrict_to_line(h, incl.line));
}

FubiniReport fubini_check(const MapDesc& m, const ConstructibleFn& f) {
  FubiniReport r;
  r.direct = cf_integrate(f);
  r.pushed = cf_integrate(cf_pushforward(m, f, {true}));
  r.ok = r.direct == r.pushed;
  return r;
}

ProjectionReport projection_formula_check(const MapDesc& m, const ConstructibleFn& g, const ConstructibleFn& h) {
  ProjectionReport r;
  r.lhs = cf_pushforward(m, cf_mul(g, cf_pullback(m, h)), {true});
  r.rhs = cf_mul(cf_pushforward(m, g, {true}), h);
  auto diff = cf_difference(r.lhs, r.rhs);
  r.ok = !diff;
  if (diff) r.witness = *diff;
  return r;
}

}  // namespace eulercalc
