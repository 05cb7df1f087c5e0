#include "eulercalc/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eulercalc {

std::uint32_t Dim::value() const {
  if (!value_) throw std::logic_error("bottom dimension has no value");
  return *value_;
}

Dim join(Dim a, Dim b) { return a < b ? b : a; }

Dim operator+(Dim a, Dim b) {
  if (a.is_bottom() || b.is_bottom()) return Dim::bottom();
  return Dim(*a.value_ + *b.value_);
}

EulerDim::EulerDim(BigInt euler, Dim dim) : euler_(std::move(euler)), dim_(dim) {
  if (dim_.is_bottom() && euler_ != 0) {
    throw RejectedInput("an element with bottom dimension must have Euler component 0");
  }
}

EulerDim EulerDim::count(std::size_t n) {
  if (n == 0) return zero();
  return {BigInt(n), Dim(0)};
}

EulerDim operator+(const EulerDim& x, const EulerDim& y) {
  EulerDim r;
  r.euler_ = x.euler_ + y.euler_;
  r.dim_ = join(x.dim_, y.dim_);
  return r;
}

EulerDim operator*(const EulerDim& x, const EulerDim& y) {
  EulerDim r;
  r.dim_ = x.dim_ + y.dim_;
  if (!r.dim_.is_bottom()) r.euler_ = x.euler_ * y.euler_;
  return r;
}

bool operator<(const EulerDim& a, const EulerDim& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  return a.euler_ < b.euler_;
}

std::string to_string(const EulerDim& x) {
  std::string d = x.dim().is_bottom() ? "⊥" : std::to_string(x.dim().value());
  return "(" + x.euler().str() + ", " + d + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::uint32_t parse_u32(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      s.size() > 9) {
    throw RejectedInput("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

}  // namespace

EulerDim parse_euler_dim(std::string_view text) {
  auto s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw RejectedInput("malformed A-element: '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw RejectedInput("malformed A-element: '" + std::string(text) + "'");
  const auto e = trim(s.substr(0, comma));
  const auto d = trim(s.substr(comma + 1));
  if (!is_integer_literal(e)) throw RejectedInput("malformed Euler component: '" + std::string(e) + "'");
  BigInt euler(std::string(e.front() == '+' ? e.substr(1) : e));
  if (d == "⊥" || d == "bot") return EulerDim(std::move(euler), Dim::bottom());
  return EulerDim(std::move(euler), Dim(parse_u32(d, "dimension")));
}

NaivePair operator+(const NaivePair& x, const NaivePair& y) {
  return {x.euler + y.euler, std::max(x.dim, y.dim)};
}

NaivePair operator*(const NaivePair& x, const NaivePair& y) {
  return {x.euler * y.euler, x.dim + y.dim};
}

std::string to_string(const NaivePair& x) {
  return "(" + x.euler.str() + ", " + std::to_string(x.dim) + ")";
}

EulerRingE operator+(const EulerRingE& a, const EulerRingE& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }

// (a + bx)(c + dx) = ac + (ad + bc)x + bd x^2, and x^2 = -x.
EulerRingE operator*(const EulerRingE& a, const EulerRingE& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0 - a.c1 * b.c1};
}

BigInt e_eval_chi(const EulerRingE& e) { return e.c0 - e.c1; }

std::string to_string(const EulerRingE& e) {
  return e.c0.str() + " + " + e.c1.str() + "x";
}

Monomial::Monomial(std::uint32_t k, std::uint32_t l) : k_(k), l_(l) {
  if (k > l) {
    throw RejectedInput("monomial y^" + std::to_string(k) + " z^" + std::to_string(l) + " violates k <= l");
  }
}

bool d_prec(const Monomial& a, const Monomial& b) { return a.k() < b.k() && a.l() < b.l(); }

DimElement DimElement::normalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  DimElement out;
  for (const auto& m : ms) {
    const bool dominated = std::any_of(ms.begin(), ms.end(), [&](const Monomial& o) { return d_prec(m, o); });
    if (!dominated) out.monomials_.push_back(m);
  }
  return out;
}

DimElement operator+(const DimElement& a, const DimElement& b) {
  std::vector<Monomial> all = a.monomials_;
  all.insert(all.end(), b.monomials_.begin(), b.monomials_.end());
  return DimElement::normalize(std::move(all));
}

DimElement operator*(const DimElement& a, const DimElement& b) {
  std::vector<Monomial> all;
  all.reserve(a.monomials_.size() * b.monomials_.size());
  for (const auto& m : a.monomials_) {
    for (const auto& n : b.monomials_) all.push_back(m * n);
  }
  return DimElement::normalize(std::move(all));
}

bool is_antichain(const DimElement& d) {
  const auto& ms = d.monomials();
  if (!std::is_sorted(ms.begin(), ms.end())) return false;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].k() > ms[i].l()) return false;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (i != j && (ms[i] == ms[j] || d_prec(ms[i], ms[j]))) return false;
    }
  }
  return true;
}

std::string to_string(const DimElement& d) {
  if (d.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& m : d.monomials()) {
    if (!first) out << " + ";
    first = false;
    out << "y^" << m.k() << " z^" << m.l();
  }
  return out.str();
}

DimElement parse_dim_element(std::string_view text) {
  auto s = trim(text);
  if (s == "0") return DimElement::zero();
  std::vector<Monomial> ms;
  while (true) {
    const auto plus = s.find('+');
    auto term = trim(s.substr(0, plus));
    // term: "y^k z^l"
    if (term.size() < 7 || term.substr(0, 2) != "y^") {
      throw RejectedInput("malformed monomial: '" + std::string(term) + "'");
    }
    const auto zpos = term.find("z^");
    if (zpos == std::string_view::npos) throw RejectedInput("malformed monomial: '" + std::string(term) + "'");
    const auto k = parse_u32(term.substr(2, zpos - 2), "exponent");
    const auto l = parse_u32(term.substr(zpos + 2), "exponent");
    ms.emplace_back(k, l);
    if (plus == std::string_view::npos) break;
    s = s.substr(plus + 1);
  }
  return DimElement::normalize(std::move(ms));
}

std::string to_string(const ProductED& x) {
  return "[" + to_string(x.e) + " | " + to_string(x.d) + "]";
}

EulerDim random_euler_dim(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> coin(0, 5);
  if (coin(rng) == 0) return EulerDim::zero();
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> d(0, spread);
  return EulerDim(BigInt(e(rng)), Dim(static_cast<std::uint32_t>(d(rng))));
}

EulerRingE random_ring_e(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> c(-spread, spread);
  return {BigInt(c(rng)), BigInt(c(rng))};
}

DimElement random_dim_element(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<int> exp(0, spread);
  std::vector<Monomial> ms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    auto a = static_cast<std::uint32_t>(exp(rng));
    auto b = static_cast<std::uint32_t>(exp(rng));
    if (a > b) std::swap(a, b);
    ms.emplace_back(a, b);
  }
  return DimElement::normalize(std::move(ms));
}

NaivePair random_naive_pair(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> d(0, spread);
  return {BigInt(e(rng)), static_cast<std::uint32_t>(d(rng))};
}

}  // namespace eulercalc
