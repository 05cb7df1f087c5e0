#include "eulercalc/radon.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulercalc {

namespace {

std::string pair_label(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

// The projections of S onto X and onto Y as finite maps.
std::pair<FiniteMap, FiniteMap> projections(const FiniteIncidence& inc) {
  FiniteMap qx, qy;
  qx.codomain = inc.x_set();
  qy.codomain = inc.y_set();
  for (const auto& [x, y] : inc.S) {
    qx.table.emplace(pair_label(x, y), x);
    qy.table.emplace(pair_label(x, y), y);
  }
  return {std::move(qx), std::move(qy)};
}

EulerDim indicator_value(bool in) { return in ? EulerDim::one() : EulerDim::zero(); }

}  // namespace

void FiniteIncidence::validate() const {
  const auto xs = x_set();
  const auto ys = y_set();
  if (xs.size() != X.size()) throw RejectedInput("duplicate label in X");
  if (ys.size() != Y.size()) throw RejectedInput("duplicate label in Y");
  for (const auto& [x, y] : S) {
    if (!xs.count(x) || !ys.count(y)) throw RejectedInput("pair (" + x + ", " + y + ") is not in X x Y");
  }
}

FiniteIncidence transpose(const FiniteIncidence& inc) {
  FiniteIncidence t{inc.Y, inc.X, {}};
  for (const auto& [x, y] : inc.S) t.S.emplace(y, x);
  return t;
}

ConstructibleFn radon_finite(const FiniteIncidence& inc, const ConstructibleFn& g) {
  const auto* fn = g.get<FiniteFn>();
  if (!fn || fn->domain != inc.x_set()) throw RejectedInput("the function must live on X");
  auto [qx, qy] = projections(inc);
  if (inc.S.empty()) {
    FiniteFn zero;
    zero.domain = inc.y_set();
    return ConstructibleFn(std::move(zero));
  }
  return cf_pushforward(qy, cf_pullback(qx, g));
}

std::map<std::pair<std::string, std::string>, EulerDim> fiber_classes(const FiniteIncidence& inc,
                                                                     const FiniteIncidence& inc2) {
  std::map<std::string, std::set<std::string>> lines_of;  // x -> {y}
  for (const auto& [x, y] : inc.S) lines_of[x].insert(y);
  std::map<std::string, std::set<std::string>> back;  // x' -> {y : (y, x') in S'}
  for (const auto& [y, x2] : inc2.S) back[x2].insert(y);

  std::map<std::pair<std::string, std::string>, EulerDim> table;
  for (const auto& x : inc.X) {
    for (const auto& x2 : inc.X) {
      std::size_t n = 0;
      for (const auto& y : lines_of[x]) n += back[x2].count(y);
      table.emplace(std::make_pair(x, x2), EulerDim::count(n));
    }
  }
  return table;
}

FiniteInversion fit_lambda_theta(const FiniteIncidence& inc, const FiniteIncidence& inc2) {
  inc.validate();
  inc2.validate();
  FiniteInversion r;
  if (inc2.X != inc.Y && inc2.x_set() != inc.y_set()) {
    throw RejectedInput("the second incidence must relate Y to X");
  }
  if (inc.X.empty()) throw RejectedInput("X is empty");

  const auto table = fiber_classes(inc, inc2);
  std::optional<EulerDim> diag, off;
  for (const auto& [key, cls] : table) {
    const bool on_diagonal = key.first == key.second;
    auto& slot = on_diagonal ? diag : off;
    if (!slot) {
      slot = cls;
    } else if (*slot != cls) {
      r.status = InversionStatus::HypothesesViolated;
      r.witness = std::string(on_diagonal ? "diagonal" : "off-diagonal") + " fiber classes differ: " +
                  to_string(*slot) + " vs " + to_string(cls) + " at (" + key.first + ", " + key.second + ")";
      return r;
    }
  }
  // With a single point there is no off-diagonal condition.
  r.lambda = off.value_or(EulerDim::zero());
  const EulerDim& d = *diag;

  if (d.dim() < r.lambda.dim()) {
    r.status = InversionStatus::HypothesesViolated;
    r.witness = "no theta with theta + " + to_string(r.lambda) + " = " + to_string(d);
    return r;
  }
  const BigInt euler = d.euler() - r.lambda.euler();
  if (r.lambda.is_zero()) {
    r.theta = d;
  } else if (r.lambda.dim() < d.dim()) {
    r.theta = EulerDim(euler, d.dim());
  } else if (euler != 0) {
    r.theta = EulerDim(euler, Dim(0));
  } else {
    r.theta = EulerDim::zero();
  }
  if (r.theta.is_zero()) {
    r.status = InversionStatus::HypothesesViolated;
    r.witness = "θ = 0 (diagonal class " + to_string(d) + " equals off-diagonal class " + to_string(r.lambda) + ")";
  }
  return r;
}

FiniteInversion inversion_check_finite(const FiniteIncidence& inc, const FiniteIncidence& inc2,
                                       const ConstructibleFn& g) {
  FiniteInversion r = fit_lambda_theta(inc, inc2);
  if (r.status != InversionStatus::Ok) return r;
  const auto twice = radon_finite(inc2, radon_finite(inc, g));
  const EulerDim total = cf_integrate(g);
  const auto& gv = *g.get<FiniteFn>();
  const auto& lhs = *twice.get<FiniteFn>();
  for (const auto& x : inc.X) {
    const EulerDim expected = r.theta * gv.at(x) + r.lambda * total;
    if (lhs.at(x) != expected) {
      r.status = InversionStatus::IdentityFailed;
      r.witness = "at " + x + ": " + to_string(lhs.at(x)) + " vs " + to_string(expected);
      return r;
    }
  }
  r.trials = 1;
  return r;
}

ConstructibleFn random_finite_fn(const std::set<std::string>& domain, std::mt19937_64& rng) {
  FiniteFn f;
  f.domain = domain;
  for (const auto& x : domain) {
    EulerDim v = random_euler_dim(rng);
    if (!v.is_zero()) f.values.emplace(x, std::move(v));
  }
  return ConstructibleFn(std::move(f));
}

FiniteInversion inversion_trials_finite(const FiniteIncidence& inc, const FiniteIncidence& inc2, std::size_t trials,
                                        std::uint64_t seed) {
  FiniteInversion fit = fit_lambda_theta(inc, inc2);
  if (fit.status != InversionStatus::Ok) return fit;
  std::mt19937_64 rng(seed);
  const auto xs = inc.x_set();
  for (std::size_t t = 0; t < trials; ++t) {
    FiniteInversion r = inversion_check_finite(inc, inc2, random_finite_fn(xs, rng));
    if (r.status != InversionStatus::Ok) {
      r.trials = t;
      return r;
    }
  }
  fit.trials = trials;
  return fit;
}

// ---------------------------------------------------------------------------

PlaneFn PolygonScene::function() const {
  if (weights) return *weights;
  return PlaneFn{Z, std::vector<EulerDim>(Z.cells.size(), EulerDim::one())};
}

namespace {

EulerDim sigma_of(const Line2D& l, const PlaneFn& f) {
  EulerDim total;
  for (const auto& hit : intersect_line_complex(l, f.complex)) total += f.values[hit.cell] * mu_piece(hit.piece);
  return total;
}

}  // namespace

EulerDim sigma_Z(const Line2D& l, const PolygonScene& scene) { return sigma_of(l, scene.function()); }

ConstructibleFn pencil_profile(const Point2& p, const PolygonScene& scene, bool verify) {
  const PlaneFn f = scene.function();
  CircleFn out;
  for (auto& piece : circle_partition(critical_directions(p, f.complex))) {
    EulerDim v = sigma_of(Line2D{p, piece.sample(0)}, f);
    if (verify && !piece.point) {
      const EulerDim w = sigma_of(Line2D{p, piece.sample(1)}, f);
      if (v != w) {
        throw std::logic_error("pencil profile not constant on " + to_string(piece) + " at " + to_string(p) + ": " +
                               to_string(v) + " vs " + to_string(w));
      }
    }
    if (!v.is_zero()) out.parts.emplace_back(std::move(piece), std::move(v));
  }
  return ConstructibleFn(std::move(out));
}

EulerDim double_radon_at(const Point2& p, const PolygonScene& scene, bool verify) {
  return cf_integrate(pencil_profile(p, scene, verify));
}

PlaneInversion inversion_check_plane(const PolygonScene& scene, const std::vector<Point2>& samples, bool verify) {
  if (scene.weights && !cf_equal(ConstructibleFn(*scene.weights), ConstructibleFn::indicator(scene.Z))) {
    throw RejectedInput("planar inversion needs the scene weights to be the indicator of Z");
  }
  const EulerDim coeff(-1, 1);
  const EulerDim z_class = mu_complex(scene.Z);
  PlaneInversion report;
  for (const auto& p : samples) {
    PlaneVerdict row;
    row.point = p;
    row.lhs = double_radon_at(p, scene, verify);
    row.rhs = coeff * indicator_value(locate(scene.Z, p).has_value()) + EulerDim::one() * z_class;
    row.ok = row.lhs == row.rhs;
    report.passed += row.ok ? 1 : 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

EulerDim projective_class(unsigned n) { return EulerDim(n % 2 == 0 ? 1 : 0, Dim(n)); }

EulerDim symbolic_inversion(unsigned n, const EulerDim& g_value, const EulerDim& g_integral) {
  if (n < 2) throw RejectedInput("symbolic inversion needs n >= 2");
  const EulerDim a(n % 2 == 1 ? 1 : -1, Dim(n - 1));
  const EulerDim b(n % 2 == 0 ? 1 : 0, Dim(n - 2));
  return a * g_value + b * g_integral;
}

// ---------------------------------------------------------------------------

std::vector<Point2> interior_samples(const std::vector<Point2>& polygon, std::size_t count, std::mt19937_64& rng) {
  if (polygon.size() < 3) throw RejectedInput("interior samples need a polygon");
  std::uniform_int_distribution<int> weight(1, 20);
  std::set<Point2> seen;
  std::vector<Point2> out;
  while (out.size() < count) {
    Rat x = 0, y = 0, total = 0;
    for (const auto& v : polygon) {
      const Rat w(weight(rng));
      x += w * v.x;
      y += w * v.y;
      total += w;
    }
    Point2 p{x / total, y / total};
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Point2> exterior_samples(const PlaneComplex& c, std::size_t count, std::mt19937_64& rng) {
  if (c.vertices.empty()) throw RejectedInput("exterior samples need a nonempty complex");
  Rat lo_x = c.vertices[0].x, hi_x = lo_x, lo_y = c.vertices[0].y, hi_y = lo_y;
  for (const auto& v : c.vertices) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  std::uniform_int_distribution<int> denom(1, 7);
  std::uniform_int_distribution<int> unit(0, 1000);
  auto draw = [&](const Rat& lo, const Rat& hi) {
    const Rat span = hi - lo + 4;
    const Rat t = Rat(unit(rng)) / 1000;
    const Rat raw = lo - 2 + t * span;
    const long d = denom(rng);
    // Round to a coarse grid so coordinates stay readable.
    const Rat scaled = raw * d;
    const BigInt num = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    return Rat(num) / d;
  };
  std::set<Point2> seen;
  std::vector<Point2> out;
  while (out.size() < count) {
    Point2 p{draw(lo_x, hi_x), draw(lo_y, hi_y)};
    if (locate(c, p)) continue;
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace eulercalc
