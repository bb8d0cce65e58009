#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "counters.hpp"

namespace pqclab::fields {

// ---------------------------------------------------------------------------
// Integers modulo q = 3329
// ---------------------------------------------------------------------------

inline constexpr std::uint16_t kQ = 3329;

/// Element of Z_q, always held in canonical form [0, q).
struct Zq {
  std::uint16_t value = 0;
  friend constexpr bool operator==(Zq, Zq) = default;
};

namespace detail {
// floor(2^32 / q)
inline constexpr std::uint64_t kBarrett = (std::uint64_t{1} << 32) / kQ;

// x in [0, 2q) -> [0, q), branch free.
constexpr std::uint16_t csubq(std::uint32_t x) {
  std::uint32_t r = x - kQ;
  r += (0u - (r >> 31)) & kQ;
  return static_cast<std::uint16_t>(r);
}
}  // namespace detail

/// Barrett reduction of any 32-bit value.
constexpr Zq zq_reduce(std::uint32_t x) {
  std::uint32_t quot = static_cast<std::uint32_t>((x * detail::kBarrett) >> 32);
  return Zq{detail::csubq(x - quot * kQ)};
}

constexpr Zq zq_from_int(std::int64_t x) {
  std::int64_t r = x % kQ;
  if (r < 0) r += kQ;
  return Zq{static_cast<std::uint16_t>(r)};
}

constexpr Zq zq_add(Zq a, Zq b) { return Zq{detail::csubq(std::uint32_t{a.value} + b.value)}; }
constexpr Zq zq_sub(Zq a, Zq b) { return Zq{detail::csubq(std::uint32_t{a.value} + kQ - b.value)}; }
constexpr Zq zq_neg(Zq a) { return zq_sub(Zq{0}, a); }
constexpr Zq zq_mul(Zq a, Zq b) { return zq_reduce(std::uint32_t{a.value} * b.value); }

constexpr Zq zq_pow(Zq base, std::uint32_t e) {
  Zq r{1};
  while (e != 0) {
    if (e & 1) r = zq_mul(r, base);
    base = zq_mul(base, base);
    e >>= 1;
  }
  return r;
}

/// Centered representative in (-q/2, q/2].
constexpr int zq_centered(Zq a) { return a.value > kQ / 2 ? int{a.value} - kQ : int{a.value}; }

// ---------------------------------------------------------------------------
// GF(2^m)
// ---------------------------------------------------------------------------

using Gf2mElement = std::uint16_t;

inline constexpr unsigned kMinFieldDegree = 2;
inline constexpr unsigned kMaxFieldDegree = 16;

/// Lexicographically least irreducible binary polynomial of degree m
/// (bit i = coefficient of x^i). m = 12 -> x^12+x^3+1, m = 13 ->
/// x^13+x^4+x^3+x+1.
std::uint32_t reduction_polynomial(unsigned m);

/// The binary extension field GF(2^m), polynomial basis.
///
/// Scalar multiplication is a branch-free shift-and-add carry-less product
/// followed by masked reduction; its running time depends on m only.
class Gf2mField {
 public:
  explicit Gf2mField(unsigned m);

  /// Shared immutable instance for m in [2, 16].
  static const Gf2mField& get(unsigned m);

  unsigned degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }
  bool contains(std::uint32_t a) const noexcept { return a < size(); }

  Gf2mElement mul(Gf2mElement a, Gf2mElement b) const;
  Gf2mElement square(Gf2mElement a) const { return mul(a, a); }
  /// a^(2^m - 2); throws DivisionByZero for a = 0.
  Gf2mElement inv(Gf2mElement a) const;
  /// a^(2^(m-1)), the unique square root in characteristic 2.
  Gf2mElement sqrt(Gf2mElement a) const;
  Gf2mElement pow(Gf2mElement a, std::uint64_t e) const;

  /// Multiplications spent by inv() / sqrt(), for operation counting.
  std::uint64_t inv_cost() const noexcept { return 2 * m_ - 3; }
  std::uint64_t sqrt_cost() const noexcept { return m_ - 1; }

 private:
  unsigned m_;
  std::uint32_t modulus_;
};

// ---------------------------------------------------------------------------
// Polynomials over GF(2^m)
// ---------------------------------------------------------------------------

/// Polynomial with coefficients lowest degree first. Always normalized: no
/// zero leading coefficient, the zero polynomial has no coefficients.
class Gf2mPoly {
 public:
  Gf2mPoly() = default;
  explicit Gf2mPoly(std::vector<Gf2mElement> coeffs);

  static Gf2mPoly constant(Gf2mElement c);
  static Gf2mPoly monomial(std::size_t degree, Gf2mElement c = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Gf2mElement coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Gf2mElement leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  void set_coeff(std::size_t i, Gf2mElement v);
  std::span<const Gf2mElement> coeffs() const noexcept { return c_; }

  friend bool operator==(const Gf2mPoly&, const Gf2mPoly&) = default;

 private:
  void normalize();
  std::vector<Gf2mElement> c_;
};

Gf2mPoly poly_add(const Gf2mPoly& a, const Gf2mPoly& b);
Gf2mPoly poly_scale(const Gf2mField& f, const Gf2mPoly& a, Gf2mElement c, OpCounters* ctr = nullptr);
Gf2mPoly poly_mul(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b, OpCounters* ctr = nullptr);
/// a(x)^2 without reduction: coefficient squares at even positions.
Gf2mPoly poly_square(const Gf2mField& f, const Gf2mPoly& a, OpCounters* ctr = nullptr);
/// (quotient, remainder); b must be nonzero.
std::pair<Gf2mPoly, Gf2mPoly> poly_divmod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b,
                                          OpCounters* ctr = nullptr);
Gf2mPoly poly_mod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b, OpCounters* ctr = nullptr);
Gf2mPoly poly_mulmod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b, const Gf2mPoly& g,
                     OpCounters* ctr = nullptr);
Gf2mPoly poly_sqmod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& g, OpCounters* ctr = nullptr);
/// Monic gcd (zero only if both inputs are zero).
Gf2mPoly poly_gcd(const Gf2mField& f, Gf2mPoly a, Gf2mPoly b, OpCounters* ctr = nullptr);

/// Horner evaluation.
Gf2mElement poly_eval(const Gf2mField& f, const Gf2mPoly& p, Gf2mElement x, OpCounters* ctr = nullptr);

/// Distinct-degree irreducibility test: p is irreducible iff
/// gcd(p, x^(2^(m d)) - x) = 1 for every d <= deg(p)/2. p must be monic with
/// degree >= 1.
bool poly_is_irreducible(const Gf2mField& f, const Gf2mPoly& p, OpCounters* ctr = nullptr);

/// Extended Euclid on (g, a) halted as soon as the remainder degree drops to
/// stop_deg or below. Returns (u, v) with u = v * a (mod g).
std::pair<Gf2mPoly, Gf2mPoly> poly_partial_ea(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& g,
                                              int stop_deg, OpCounters* ctr = nullptr);

/// a^-1 mod g; throws DivisionByZero if gcd(a, g) != 1.
Gf2mPoly poly_inv_mod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& g, OpCounters* ctr = nullptr);

/// sqrt(x) mod g for irreducible g of degree t: x^(2^(m t - 1)) mod g.
Gf2mPoly poly_sqrt_x_mod(const Gf2mField& f, const Gf2mPoly& g, OpCounters* ctr = nullptr);

/// r with r^2 = p (mod g). Splits p into even and odd parts,
/// p = E(x)^2 + x O(x)^2, so sqrt(p) = E + sqrt(x) O.
Gf2mPoly poly_sqrt_mod_g(const Gf2mField& f, const Gf2mPoly& p, const Gf2mPoly& g, const Gf2mPoly& sqrt_x,
                         OpCounters* ctr = nullptr);

}  // namespace pqclab::fields
