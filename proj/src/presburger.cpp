#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eulercalc/models.hpp"

// Canonical forms are read off a membership oracle. Every set handled here
// is periodic, with a common period L, on (T, +inf) and on (-inf, -T).

namespace eulercalc {

namespace {

constexpr std::int64_t kMaxMagnitude = 1'000'000;
constexpr std::int64_t kMaxPeriod = 100'000;

std::int64_t floor_mod(std::int64_t x, std::int64_t d) {
  const std::int64_t m = x % d;
  return m < 0 ? m + d : m;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l > kMaxPeriod) throw RejectedInput("combined modulus exceeds " + std::to_string(kMaxPeriod));
  return l;
}

void check_magnitude(std::int64_t v) {
  if (v > kMaxMagnitude || v < -kMaxMagnitude) {
    throw RejectedInput("value " + std::to_string(v) + " is outside the supported range +-" +
                        std::to_string(kMaxMagnitude));
  }
}

struct Shape {
  std::int64_t T = 1;
  std::int64_t L = 1;

  void absorb(const Progression& p) {
    if (p.d < 1) throw RejectedInput("modulus must be at least 1");
    L = checked_lcm(L, p.d);
    for (const auto& b : {p.lo, p.hi}) {
      if (b) {
        check_magnitude(*b);
        T = std::max(T, std::abs(*b) + 1);
      }
    }
  }
  void absorb(std::int64_t x) {
    check_magnitude(x);
    T = std::max(T, std::abs(x) + 1);
  }
  void absorb(const PresburgerSet& s) {
    for (const auto& p : s.progs) absorb(p);
    for (auto x : s.finite_part) absorb(x);
  }
};

using Oracle = std::function<bool(std::int64_t)>;

// Least divisor d of L with pred(x) == pred(x + d) on one full period
// starting at `start` (the window [start, start + L + d) must lie in the
// periodic region).
std::int64_t least_period(const Oracle& pred, std::int64_t start, std::int64_t L) {
  for (std::int64_t d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    bool ok = true;
    for (std::int64_t x = start; x < start + L && ok; ++x) ok = pred(x) == pred(x + d);
    if (ok) return d;
  }
  return L;
}

bool covered(const std::vector<Progression>& progs, std::int64_t x) {
  return std::any_of(progs.begin(), progs.end(), [&](const Progression& p) { return p.contains(x); });
}

PresburgerSet canonical(const Oracle& in, Shape shape) {
  const std::int64_t T = shape.T;
  const std::int64_t L = shape.L;
  PresburgerSet out;

  // Right tail: one progression per residue of the least period, pushed
  // down as far as membership allows.
  const std::int64_t dr = least_period(in, T + 1, L);
  std::vector<Progression> right;
  for (std::int64_t r = 0; r < dr; ++r) {
    std::int64_t x = T + 1 + floor_mod(r - (T + 1), dr);
    if (!in(x)) continue;
    Progression p{r, dr, std::nullopt, std::nullopt};
    while (true) {
      const std::int64_t next = x - dr;
      if (next < -T - L) break;  // a full left period is covered: unbounded
      if (!in(next)) {
        p.lo = x;
        break;
      }
      x = next;
    }
    right.push_back(p);
  }

  // Finite lower ends of right progressions are >= -T - L, so below
  // -(T + L) what they leave uncovered is again L-periodic.
  const Oracle rest = [&](std::int64_t x) { return in(x) && !covered(right, x); };
  const std::int64_t T2 = T + L;
  const std::int64_t dl = least_period(rest, -T2 - 2 * L, L);
  std::vector<Progression> left;
  for (std::int64_t r = 0; r < dl; ++r) {
    std::int64_t x = -T2 - 1 - floor_mod(-T2 - 1 - r, dl);
    if (!rest(x)) continue;
    while (rest(x + dl)) {
      x += dl;
      if (x > T + L) throw std::logic_error("left progression escaped the right tail");
    }
    left.push_back({r, dl, std::nullopt, x});
  }

  for (std::int64_t x = -T2 - L; x <= T + L; ++x) {
    if (rest(x) && !covered(left, x)) out.finite_part.insert(x);
  }
  out.progs = std::move(right);
  out.progs.insert(out.progs.end(), left.begin(), left.end());
  return out;
}

std::string bound(const std::optional<std::int64_t>& b, const char* inf) { return b ? std::to_string(*b) : inf; }

}  // namespace

bool Progression::contains(std::int64_t x) const {
  if (lo && x < *lo) return false;
  if (hi && x > *hi) return false;
  return floor_mod(x - r, d) == 0;
}

bool PresburgerSet::contains(std::int64_t x) const { return finite_part.count(x) || covered(progs, x); }

std::string to_string(const PresburgerSet& s) {
  std::vector<std::string> items;
  if (!s.finite_part.empty() || s.progs.empty()) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto x : s.finite_part) {
      os << (first ? "" : ", ") << x;
      first = false;
    }
    os << '}';
    items.push_back(os.str());
  }
  for (const auto& p : s.progs) {
    items.push_back(std::to_string(p.r) + " mod " + std::to_string(p.d) + " on [" + bound(p.lo, "-inf") + ", " +
                    bound(p.hi, "+inf") + "]");
  }
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " | " : "") + items[i];
  return out;
}

PresburgerSet pres_normalize(const std::vector<Progression>& progs, const std::vector<std::int64_t>& points) {
  Shape shape;
  std::vector<Progression> raw;
  for (auto p : progs) {
    shape.absorb(p);
    p.r = floor_mod(p.r, p.d);
    raw.push_back(p);
  }
  for (auto x : points) shape.absorb(x);
  const std::set<std::int64_t> pts(points.begin(), points.end());
  return canonical([&](std::int64_t x) { return pts.count(x) || covered(raw, x); }, shape);
}

PresburgerSet pres_ops(const PresburgerSet& a, const PresburgerSet& b, SetOp op) {
  Shape shape;
  shape.absorb(a);
  shape.absorb(b);
  switch (op) {
    case SetOp::Union: return canonical([&](std::int64_t x) { return a.contains(x) || b.contains(x); }, shape);
    case SetOp::Intersect: return canonical([&](std::int64_t x) { return a.contains(x) && b.contains(x); }, shape);
    case SetOp::Difference: return canonical([&](std::int64_t x) { return a.contains(x) && !b.contains(x); }, shape);
  }
  throw std::logic_error("unknown set operation");
}

EulerDim pres_class(const PresburgerSet& a) {
  if (!a.progs.empty()) return EulerDim(0, 1);
  return EulerDim::count(a.finite_part.size());
}

PresburgerSet pres_translate(const PresburgerSet& a, std::int64_t c) {
  check_magnitude(c);
  std::vector<Progression> progs;
  for (const auto& p : a.progs) {
    Progression q{floor_mod(p.r + c, p.d), p.d, std::nullopt, std::nullopt};
    if (p.lo) q.lo = *p.lo + c;
    if (p.hi) q.hi = *p.hi + c;
    progs.push_back(q);
  }
  std::vector<std::int64_t> points;
  for (auto x : a.finite_part) points.push_back(x + c);
  return pres_normalize(progs, points);
}

PresburgerSet pres_reflect(const PresburgerSet& a) {
  std::vector<Progression> progs;
  for (const auto& p : a.progs) {
    Progression q{floor_mod(-p.r, p.d), p.d, std::nullopt, std::nullopt};
    if (p.hi) q.lo = -*p.hi;
    if (p.lo) q.hi = -*p.lo;
    progs.push_back(q);
  }
  std::vector<std::int64_t> points;
  for (auto x : a.finite_part) points.push_back(-x);
  return pres_normalize(progs, points);
}

std::vector<bool> pres_window(const PresburgerSet& a, std::int64_t lo, std::int64_t hi) {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, hi - lo + 1)));
  for (std::int64_t x = lo; x <= hi; ++x) bits.push_back(a.contains(x));
  return bits;
}

PresburgerSet random_presburger(std::mt19937_64& rng, std::int64_t max_modulus, std::int64_t span) {
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<std::int64_t> modulus(1, max_modulus);
  std::uniform_int_distribution<std::int64_t> value(-span, span);
  std::uniform_int_distribution<int> third(0, 2);
  std::vector<Progression> progs;
  for (int i = count(rng); i > 0; --i) {
    Progression p;
    p.d = modulus(rng);
    p.r = std::uniform_int_distribution<std::int64_t>(0, p.d - 1)(rng);
    if (third(rng)) p.lo = value(rng);
    if (third(rng)) p.hi = value(rng);
    if (p.lo && p.hi && *p.hi < *p.lo) std::swap(*p.lo, *p.hi);
    progs.push_back(p);
  }
  std::vector<std::int64_t> points;
  for (int i = count(rng); i > 0; --i) points.push_back(value(rng));
  return pres_normalize(progs, points);
}

}  // namespace eulercalc
