#include "fields.hpp"

#include <array>
#include <string>

#include "error.hpp"

namespace pqclab::fields {

std::uint32_t reduction_polynomial(unsigned m) {
  static constexpr std::array<std::uint32_t, 17> kPolys = {
      0,       0,
      0x7,     // x^2+x+1
      0xb,     // x^3+x+1
      0x13,    // x^4+x+1
      0x25,    // x^5+x^2+1
      0x43,    // x^6+x+1
      0x83,    // x^7+x+1
      0x11b,   // x^8+x^4+x^3+x+1
      0x203,   // x^9+x+1
      0x409,   // x^10+x^3+1
      0x805,   // x^11+x^2+1
      0x1009,  // x^12+x^3+1
      0x201b,  // x^13+x^4+x^3+x+1
      0x4021,  // x^14+x^5+1
      0x8003,  // x^15+x+1
      0x1002b, // x^16+x^5+x^3+x+1
  };
  if (m < kMinFieldDegree || m > kMaxFieldDegree) {
    throw_error(ErrorCode::InvalidArgument, "field degree m must be in [2, 16], got " + std::to_string(m));
  }
  return kPolys[m];
}

Gf2mField::Gf2mField(unsigned m) : m_(m), modulus_(reduction_polynomial(m)) {}

const Gf2mField& Gf2mField::get(unsigned m) {
  static const std::array<Gf2mField, 15> kFields = {
      Gf2mField(2),  Gf2mField(3),  Gf2mField(4),  Gf2mField(5),  Gf2mField(6),
      Gf2mField(7),  Gf2mField(8),  Gf2mField(9),  Gf2mField(10), Gf2mField(11),
      Gf2mField(12), Gf2mField(13), Gf2mField(14), Gf2mField(15), Gf2mField(16),
  };
  reduction_polynomial(m);  // range check
  return kFields[m - kMinFieldDegree];
}

Gf2mElement Gf2mField::mul(Gf2mElement a, Gf2mElement b) const {
  PQCLAB_EXPECTS(contains(a) && contains(b), "GF(2^m) operand outside the field");
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r ^= (std::uint32_t{a} << i) & (0u - ((std::uint32_t{b} >> i) & 1u));
  }
  for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
    r ^= (modulus_ << (i - m_)) & (0u - ((r >> i) & 1u));
  }
  return static_cast<Gf2mElement>(r);
}

Gf2mElement Gf2mField::inv(Gf2mElement a) const {
  if (a == 0) throw_error(ErrorCode::DivisionByZero, "inverse of zero in GF(2^m)");
  // a^(2^m - 2) = prod_{i=1}^{m-1} a^(2^i)
  Gf2mElement sq = square(a);
  Gf2mElement r = sq;
  for (unsigned i = 2; i < m_; ++i) {
    sq = square(sq);
    r = mul(r, sq);
  }
  return r;
}

Gf2mElement Gf2mField::sqrt(Gf2mElement a) const {
  for (unsigned i = 1; i < m_; ++i) a = square(a);
  return a;
}

Gf2mElement Gf2mField::pow(Gf2mElement a, std::uint64_t e) const {
  Gf2mElement r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = square(a);
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------

Gf2mPoly::Gf2mPoly(std::vector<Gf2mElement> coeffs) : c_(std::move(coeffs)) { normalize(); }

Gf2mPoly Gf2mPoly::constant(Gf2mElement c) { return Gf2mPoly(std::vector<Gf2mElement>{c}); }

Gf2mPoly Gf2mPoly::monomial(std::size_t degree, Gf2mElement c) {
  std::vector<Gf2mElement> v(degree + 1, 0);
  v[degree] = c;
  return Gf2mPoly(std::move(v));
}

void Gf2mPoly::set_coeff(std::size_t i, Gf2mElement v) {
  if (i >= c_.size()) {
    if (v == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = v;
  normalize();
}

void Gf2mPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {

using Coeffs = std::vector<Gf2mElement>;

void trim(Coeffs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// In-place remainder of r modulo g (g nonzero). Returns quotient if asked.
void reduce_in_place(const Gf2mField& f, Coeffs& r, std::span<const Gf2mElement> g, OpCounters* ctr,
                     Coeffs* quotient) {
  const std::size_t dg = g.size() - 1;
  const Gf2mElement lead = g[dg];
  const bool monic = lead == 1;
  const Gf2mElement lead_inv = monic ? 1 : f.inv(lead);
  if (!monic) tally(ctr, &OpCounters::gf2m_mults, f.inv_cost());
  trim(r);
  if (quotient != nullptr) {
    quotient->assign(r.size() >= g.size() ? r.size() - dg : 0, 0);
  }
  std::uint64_t mults = 0;
  while (r.size() >= g.size()) {
    const std::size_t shift = r.size() - 1 - dg;
    Gf2mElement c = r.back();
    if (!monic) {
      c = f.mul(c, lead_inv);
      ++mults;
    }
    if (quotient != nullptr) (*quotient)[shift] = c;
    for (std::size_t i = 0; i < dg; ++i) {
      if (g[i] != 0) r[shift + i] ^= f.mul(c, g[i]);
    }
    mults += dg;
    r.pop_back();
    trim(r);
  }
  tally(ctr, &OpCounters::gf2m_mults, mults);
}

}  // namespace

Gf2mPoly poly_add(const Gf2mPoly& a, const Gf2mPoly& b) {
  const auto& big = a.degree() >= b.degree() ? a : b;
  const auto& small = a.degree() >= b.degree() ? b : a;
  Coeffs r(big.coeffs().begin(), big.coeffs().end());
  for (std::size_t i = 0; i < small.coeffs().size(); ++i) r[i] ^= small.coeffs()[i];
  return Gf2mPoly(std::move(r));
}

Gf2mPoly poly_scale(const Gf2mField& f, const Gf2mPoly& a, Gf2mElement c, OpCounters* ctr) {
  Coeffs r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.mul(a.coeffs()[i], c);
  tally(ctr, &OpCounters::gf2m_mults, r.size());
  return Gf2mPoly(std::move(r));
}

Gf2mPoly poly_mul(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b, OpCounters* ctr) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  Coeffs r(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[i + j] ^= f.mul(ac[i], bc[j]);
  }
  tally(ctr, &OpCounters::gf2m_mults, ac.size() * bc.size());
  return Gf2mPoly(std::move(r));
}

Gf2mPoly poly_square(const Gf2mField& f, const Gf2mPoly& a, OpCounters* ctr) {
  if (a.is_zero()) return {};
  auto ac = a.coeffs();
  Coeffs r(2 * ac.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) r[2 * i] = f.square(ac[i]);
  tally(ctr, &OpCounters::gf2m_mults, ac.size());
  return Gf2mPoly(std::move(r));
}

std::pair<Gf2mPoly, Gf2mPoly> poly_divmod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b,
                                          OpCounters* ctr) {
  if (b.is_zero()) throw_error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Coeffs r(a.coeffs().begin(), a.coeffs().end());
  Coeffs q;
  reduce_in_place(f, r, b.coeffs(), ctr, &q);
  return {Gf2mPoly(std::move(q)), Gf2mPoly(std::move(r))};
}

Gf2mPoly poly_mod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b, OpCounters* ctr) {
  if (b.is_zero()) throw_error(ErrorCode::DivisionByZero, "polynomial reduction by zero");
  Coeffs r(a.coeffs().begin(), a.coeffs().end());
  reduce_in_place(f, r, b.coeffs(), ctr, nullptr);
  return Gf2mPoly(std::move(r));
}

Gf2mPoly poly_mulmod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& b, const Gf2mPoly& g,
                     OpCounters* ctr) {
  return poly_mod(f, poly_mul(f, a, b, ctr), g, ctr);
}

Gf2mPoly poly_sqmod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& g, OpCounters* ctr) {
  return poly_mod(f, poly_square(f, a, ctr), g, ctr);
}

Gf2mPoly poly_gcd(const Gf2mField& f, Gf2mPoly a, Gf2mPoly b, OpCounters* ctr) {
  while (!b.is_zero()) {
    Gf2mPoly r = poly_mod(f, a, b, ctr);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero() || a.leading() == 1) return a;
  tally(ctr, &OpCounters::gf2m_mults, f.inv_cost());
  return poly_scale(f, a, f.inv(a.leading()), ctr);
}

Gf2mElement poly_eval(const Gf2mField& f, const Gf2mPoly& p, Gf2mElement x, OpCounters* ctr) {
  auto c = p.coeffs();
  Gf2mElement acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = f.mul(acc, x) ^ c[i];
  tally(ctr, &OpCounters::gf2m_mults, c.size());
  return acc;
}

bool poly_is_irreducible(const Gf2mField& f, const Gf2mPoly& p, OpCounters* ctr) {
  PQCLAB_EXPECTS(p.degree() >= 1 && p.leading() == 1, "irreducibility test needs a monic polynomial of degree >= 1");
  const Gf2mPoly x = Gf2mPoly::monomial(1);
  Gf2mPoly h = poly_mod(f, x, p, ctr);
  for (int d = 1; d <= p.degree() / 2; ++d) {
    for (unsigned i = 0; i < f.degree(); ++i) h = poly_sqmod(f, h, p, ctr);
    Gf2mPoly g = poly_gcd(f, p, poly_add(h, x), ctr);
    if (g.degree() > 0) return false;
  }
  return true;
}

std::pair<Gf2mPoly, Gf2mPoly> poly_partial_ea(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& g,
                                              int stop_deg, OpCounters* ctr) {
  PQCLAB_EXPECTS(a.degree() < g.degree(), "partial Euclid needs deg(a) < deg(g)");
  Gf2mPoly r0 = g, r1 = a;
  Gf2mPoly v0, v1 = Gf2mPoly::constant(1);
  while (r1.degree() > stop_deg) {
    auto [quot, rem] = poly_divmod(f, r0, r1, ctr);
    Gf2mPoly v2 = poly_add(v0, poly_mul(f, quot, v1, ctr));
    r0 = std::move(r1);
    r1 = std::move(rem);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {std::move(r1), std::move(v1)};
}

Gf2mPoly poly_inv_mod(const Gf2mField& f, const Gf2mPoly& a, const Gf2mPoly& g, OpCounters* ctr) {
  Gf2mPoly ar = poly_mod(f, a, g, ctr);
  if (ar.is_zero()) throw_error(ErrorCode::DivisionByZero, "polynomial is not invertible modulo g");
  auto [u, v] = poly_partial_ea(f, ar, g, 0, ctr);
  if (u.is_zero()) throw_error(ErrorCode::DivisionByZero, "polynomial is not invertible modulo g");
  tally(ctr, &OpCounters::gf2m_mults, f.inv_cost());
  return poly_mod(f, poly_scale(f, v, f.inv(u.coeff(0)), ctr), g, ctr);
}

Gf2mPoly poly_sqrt_x_mod(const Gf2mField& f, const Gf2mPoly& g, OpCounters* ctr) {
  PQCLAB_EXPECTS(g.degree() >= 1, "modulus must have positive degree");
  Gf2mPoly r = poly_mod(f, Gf2mPoly::monomial(1), g, ctr);
  const std::size_t squarings = std::size_t{f.degree()} * static_cast<std::size_t>(g.degree()) - 1;
  for (std::size_t i = 0; i < squarings; ++i) r = poly_sqmod(f, r, g, ctr);
  return r;
}

Gf2mPoly poly_sqrt_mod_g(const Gf2mField& f, const Gf2mPoly& p, const Gf2mPoly& g, const Gf2mPoly& sqrt_x,
                         OpCounters* ctr) {
  Gf2mPoly pr = poly_mod(f, p, g, ctr);
  auto c = pr.coeffs();
  Coeffs even((c.size() + 1) / 2, 0), odd(c.size() / 2, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Gf2mElement s = f.sqrt(c[i]);
    (i % 2 == 0 ? even[i / 2] : odd[i / 2]) = s;
  }
  tally(ctr, &OpCounters::gf2m_mults, c.size() * f.sqrt_cost());
  Gf2mPoly r = poly_add(Gf2mPoly(std::move(even)), poly_mul(f, Gf2mPoly(std::move(odd)), sqrt_x, ctr));
  return poly_mod(f, r, g, ctr);
}

}  // namespace pqclab::fields
