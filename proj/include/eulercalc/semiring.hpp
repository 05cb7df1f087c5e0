#pragma once

// Value semirings for Euler/dimension integration.
//
//   EulerDim     A = Z x (N u {bot}), (a,b)+(a',b') = (a+a', max(b,b')),
//                (a,b)(a',b') = (aa', b+b'). Zero is (0, bot).
//   EulerRingE   Z[x]/(x(x+1)), the universal Euler characteristic ring of
//                semilinear sets.
//   DimElement   antichains of monomials y^k z^l (k <= l) under the strict
//                product order; the abstract-dimension semiring.
//   ProductED    E x D, componentwise.
//
// Every type here is an immutable value type.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace eulercalc {

using BigInt = boost::multiprecision::mpz_int;

/// Input that violates a documented invariant or precondition.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A (carrier, map) combination outside the supported enumeration.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimension of a definable set: a natural number, or bottom for the empty set.
class Dim {
 public:
  constexpr Dim() = default;
  constexpr explicit Dim(std::uint32_t d) : value_(d) {}

  static constexpr Dim bottom() { return Dim(); }

  constexpr bool is_bottom() const { return !value_.has_value(); }
  std::uint32_t value() const;

  /// max with bottom neutral.
  friend Dim join(Dim a, Dim b);
  /// sum with bottom absorbing.
  friend Dim operator+(Dim a, Dim b);

  friend constexpr bool operator==(const Dim&, const Dim&) = default;
  // bottom compares below every natural number.
  friend constexpr auto operator<=>(const Dim& a, const Dim& b) { return a.value_ <=> b.value_; }

 private:
  std::optional<std::uint32_t> value_;
};

/// Element of A: (Euler characteristic, dimension).
///
/// A bottom dimension forces a zero Euler component, so (0, bot) is the only
/// element with bottom dimension and it is absorbing for multiplication.
class EulerDim {
 public:
  EulerDim() = default;
  EulerDim(BigInt euler, Dim dim);
  EulerDim(long long euler, std::uint32_t dim) : EulerDim(BigInt(euler), Dim(dim)) {}

  static EulerDim zero() { return {}; }
  static EulerDim one() { return {BigInt(1), Dim(0)}; }
  /// (n, 0) for n > 0, zero for n == 0: the class of an n-point set.
  static EulerDim count(std::size_t n);

  const BigInt& euler() const { return euler_; }
  Dim dim() const { return dim_; }
  bool is_zero() const { return dim_.is_bottom(); }

  friend EulerDim operator+(const EulerDim& x, const EulerDim& y);
  friend EulerDim operator*(const EulerDim& x, const EulerDim& y);
  EulerDim& operator+=(const EulerDim& y) { return *this = *this + y; }
  EulerDim& operator*=(const EulerDim& y) { return *this = *this * y; }

  friend bool operator==(const EulerDim&, const EulerDim&) = default;
  /// Lexicographic (dim, euler); only used for canonical sorting.
  friend bool operator<(const EulerDim& a, const EulerDim& b);

 private:
  BigInt euler_{0};
  Dim dim_{};
};

inline EulerDim a_add(const EulerDim& x, const EulerDim& y) { return x + y; }
inline EulerDim a_mul(const EulerDim& x, const EulerDim& y) { return x * y; }

/// Rendered as "(e, d)" with d one of "⊥", "0", "1", ...
std::string to_string(const EulerDim& x);
/// Inverse of to_string; also accepts "bot" for the bottom dimension.
EulerDim parse_euler_dim(std::string_view text);

/// The additive group completion of A is Z; this is the comparison morphism.
inline BigInt euler_part(const EulerDim& x) { return x.euler(); }

/// Z x N with the printed unit (0,0). Not a semiring: (0,0)(a,b) = (0,b).
/// Kept only so the axiom kit can exhibit the failure.
struct NaivePair {
  BigInt euler{0};
  std::uint32_t dim{0};

  static NaivePair zero() { return {}; }
  static NaivePair one() { return {BigInt(1), 0}; }
  friend NaivePair operator+(const NaivePair& x, const NaivePair& y);
  friend NaivePair operator*(const NaivePair& x, const NaivePair& y);
  friend bool operator==(const NaivePair&, const NaivePair&) = default;
};
std::string to_string(const NaivePair& x);

/// c0 + c1 x in Z[x]/(x(x+1)).
struct EulerRingE {
  BigInt c0{0};
  BigInt c1{0};

  static EulerRingE zero() { return {}; }
  static EulerRingE one() { return {BigInt(1), BigInt(0)}; }
  /// x, the class of an open interval.
  static EulerRingE x() { return {BigInt(0), BigInt(1)}; }

  friend EulerRingE operator+(const EulerRingE& a, const EulerRingE& b);
  friend EulerRingE operator*(const EulerRingE& a, const EulerRingE& b);
  friend bool operator==(const EulerRingE&, const EulerRingE&) = default;
};

/// Evaluation x -> -1; a ring homomorphism E -> Z recovering chi.
BigInt e_eval_chi(const EulerRingE& e);
std::string to_string(const EulerRingE& e);

/// y^k z^l with k <= l.
class Monomial {
 public:
  Monomial(std::uint32_t k, std::uint32_t l);
  std::uint32_t k() const { return k_; }
  std::uint32_t l() const { return l_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial(a.k_ + b.k_, a.l_ + b.l_);
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint32_t k_;
  std::uint32_t l_;
};

/// Strict product order: k < k' and l < l'.
bool d_prec(const Monomial& a, const Monomial& b);

/// Element of D: a canonically sorted antichain of monomials.
class DimElement {
 public:
  DimElement() = default;

  static DimElement zero() { return {}; }
  static DimElement one() { return DimElement::normalize({Monomial(0, 0)}); }
  /// Maximal elements of `ms`, deduplicated and sorted by (k, l).
  static DimElement normalize(std::vector<Monomial> ms);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  friend DimElement operator+(const DimElement& a, const DimElement& b);
  friend DimElement operator*(const DimElement& a, const DimElement& b);
  friend bool operator==(const DimElement&, const DimElement&) = default;

 private:
  std::vector<Monomial> monomials_;
};

inline DimElement d_normalize(std::vector<Monomial> ms) { return DimElement::normalize(std::move(ms)); }
/// True iff the members form a valid antichain of admissible monomials.
bool is_antichain(const DimElement& d);

/// "y^k z^l + ..." in canonical order; "0" for the zero element.
std::string to_string(const DimElement& d);
DimElement parse_dim_element(std::string_view text);

struct ProductED {
  EulerRingE e;
  DimElement d;

  static ProductED zero() { return {}; }
  static ProductED one() { return {EulerRingE::one(), DimElement::one()}; }
  friend ProductED operator+(const ProductED& a, const ProductED& b) { return {a.e + b.e, a.d + b.d}; }
  friend ProductED operator*(const ProductED& a, const ProductED& b) { return {a.e * b.e, a.d * b.d}; }
  friend bool operator==(const ProductED&, const ProductED&) = default;
};
std::string to_string(const ProductED& x);

// ---------------------------------------------------------------------------
// Axiom kit

/// Zero/one accessors; specialize for types without static members.
template <class T>
struct SemiringTraits {
  static T zero() { return T::zero(); }
  static T one() { return T::one(); }
};

template <>
struct SemiringTraits<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
};
inline std::string to_string(const BigInt& n) { return n.str(); }

struct AxiomReport {
  bool passed = true;
  std::size_t trials = 0;
  std::string law;      // first violated law, empty on success
  std::string witness;  // rendered counterexample triple

  explicit operator bool() const { return passed; }
};

template <class T>
using Sampler = std::function<T(std::mt19937_64&)>;

/// Checks the commutative-semiring laws on `trials` random triples drawn from
/// a generator seeded with `seed`. Stops at the first counterexample.
template <class T>
AxiomReport axiom_suite(const Sampler<T>& sample, std::size_t trials, std::uint64_t seed = 1) {
  using Tr = SemiringTraits<T>;
  std::mt19937_64 rng(seed);
  const T zero = Tr::zero();
  const T one = Tr::one();
  AxiomReport report;

  auto fail = [&](const char* law, const T& x, const T& y, const T& z) {
    report.passed = false;
    report.law = law;
    report.witness = "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z);
  };

  for (std::size_t i = 0; i < trials; ++i) {
    const T x = sample(rng);
    const T y = sample(rng);
    const T z = sample(rng);
    report.trials = i + 1;
    if (!((x + y) + z == x + (y + z))) { fail("additive associativity", x, y, z); break; }
    if (!(x + y == y + x)) { fail("additive commutativity", x, y, z); break; }
    if (!(x + zero == x)) { fail("additive unit", x, y, z); break; }
    if (!((x * y) * z == x * (y * z))) { fail("multiplicative associativity", x, y, z); break; }
    if (!(x * y == y * x)) { fail("multiplicative commutativity", x, y, z); break; }
    if (!(x * one == x)) { fail("multiplicative unit", x, y, z); break; }
    if (!(x * (y + z) == x * y + x * z)) { fail("distributivity", x, y, z); break; }
    if (!(zero * x == zero)) { fail("0x = 0", x, y, z); break; }
  }
  return report;
}

// Samplers used by the property suites; `spread` bounds Euler coefficients
// and dimensions.
EulerDim random_euler_dim(std::mt19937_64& rng, int spread = 5);
EulerRingE random_ring_e(std::mt19937_64& rng, int spread = 5);
DimElement random_dim_element(std::mt19937_64& rng, int spread = 4);
NaivePair random_naive_pair(std::mt19937_64& rng, int spread = 5);

}  // namespace eulercalc
