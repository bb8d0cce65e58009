#include <doctest.h>

#include <random>
#include <set>

#include "error.hpp"
#include "fields.hpp"

using namespace pqclab;
using namespace pqclab::fields;

namespace {

// Carry-less product followed by bitwise long division.
std::uint32_t naive_gf2m_mul(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t mod) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < m; ++i)
    if ((b >> i) & 1u) prod ^= std::uint64_t{a} << i;
  for (int bit = 2 * static_cast<int>(m) - 2; bit >= static_cast<int>(m); --bit)
    if ((prod >> bit) & 1u) prod ^= std::uint64_t{mod} << (bit - m);
  return static_cast<std::uint32_t>(prod);
}

// Remainder of binary polynomial division.
std::uint64_t gf2_poly_rem(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - __builtin_clzll(b);
  while (a && 63 - __builtin_clzll(a) >= db) a ^= b << ((63 - __builtin_clzll(a)) - db);
  return a;
}

bool binary_irreducible(std::uint64_t p) {
  const int deg = 63 - __builtin_clzll(p);
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (deg / 2 + 1)); ++d) {
    if (63 - __builtin_clzll(d) > deg / 2) break;
    if (gf2_poly_rem(p, d) == 0) return false;
  }
  return true;
}

Gf2mPoly random_poly(std::mt19937& rng, const Gf2mField& f, int degree, bool monic = false) {
  std::vector<Gf2mElement> c(degree + 1);
  for (auto& x : c) x = static_cast<Gf2mElement>(rng() % f.size());
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = static_cast<Gf2mElement>(rng() % f.size());
  return Gf2mPoly(c);
}

Gf2mElement naive_eval(const Gf2mField& f, const Gf2mPoly& p, Gf2mElement x) {
  Gf2mElement acc = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    Gf2mElement power = 1;
    for (std::size_t j = 0; j < i; ++j) power = f.mul(power, x);
    acc ^= f.mul(p.coeff(i), power);
  }
  return acc;
}

}  // namespace

TEST_SUITE("fields") {
  TEST_CASE("zq arithmetic") {
    CHECK(zq_mul(Zq{0}, Zq{1234}) == Zq{0});
    CHECK(zq_mul(Zq{1}, Zq{1234}) == Zq{1234});
    CHECK(zq_mul(Zq{3328}, Zq{3328}) == Zq{1});
    std::mt19937 rng(1);
    for (int i = 0; i < 100000; ++i) {
      const std::uint32_t a = rng() % kQ, b = rng() % kQ;
      REQUIRE(zq_mul(Zq{std::uint16_t(a)}, Zq{std::uint16_t(b)}).value == a * b % kQ);
      REQUIRE(zq_add(Zq{std::uint16_t(a)}, Zq{std::uint16_t(b)}).value == (a + b) % kQ);
      REQUIRE(zq_sub(Zq{std::uint16_t(a)}, Zq{std::uint16_t(b)}).value == (a + kQ - b) % kQ);
      const std::uint32_t x = rng();
      REQUIRE(zq_reduce(x).value == x % kQ);
    }
    CHECK(zq_reduce(0xffffffffu).value == 0xffffffffu % kQ);
    CHECK(zq_from_int(-1) == Zq{3328});
    CHECK(zq_centered(Zq{3328}) == -1);
    CHECK(zq_centered(Zq{1664}) == 1664);
    CHECK(zq_centered(Zq{1665}) == -1664);
    CHECK(zq_pow(Zq{17}, 128) == Zq{3328});
    CHECK(zq_pow(Zq{17}, 256) == Zq{1});
  }

  TEST_CASE("reduction polynomials are the least irreducibles") {
    CHECK(reduction_polynomial(12) == 0x1009);
    CHECK(reduction_polynomial(13) == 0x201b);
    CHECK(reduction_polynomial(4) == 0x13);
    for (unsigned m = kMinFieldDegree; m <= kMaxFieldDegree; ++m) {
      const std::uint32_t p = reduction_polynomial(m);
      CAPTURE(m);
      REQUIRE((p >> m) == 1u);
      CHECK(binary_irreducible(p));
      for (std::uint32_t smaller = (1u << m); smaller < p; ++smaller) CHECK_FALSE(binary_irreducible(smaller));
    }
    CHECK_THROWS_AS(Gf2mField::get(1), Error);
    CHECK_THROWS_AS(Gf2mField::get(17), Error);
  }

  TEST_CASE("gf2m multiplication matches the bitwise oracle") {
    const auto& f4 = Gf2mField::get(4);
    CHECK(f4.mul(0, 7) == 0);
    CHECK(f4.mul(0b10, 0b1000) == 0b11);
    std::mt19937 rng(2);
    for (unsigned m = 2; m <= 16; ++m) {
      const auto& f = Gf2mField::get(m);
      for (int i = 0; i < 3000; ++i) {
        const auto a = static_cast<Gf2mElement>(rng() % f.size()), b = static_cast<Gf2mElement>(rng() % f.size());
        REQUIRE(f.mul(a, b) == naive_gf2m_mul(a, b, m, f.modulus()));
      }
    }
  }

  TEST_CASE("gf2m inverse and square root, exhaustive") {
    const auto& f4 = Gf2mField::get(4);
    CHECK(f4.inv(1) == 1);
    CHECK(f4.inv(0b10) == 0b1001);
    CHECK_THROWS_AS(f4.inv(0), Error);
    for (unsigned m : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 12u, 13u}) {
      const auto& f = Gf2mField::get(m);
      for (std::uint32_t a = 1; a < f.size(); ++a) {
        const auto e = static_cast<Gf2mElement>(a);
        REQUIRE(f.mul(e, f.inv(e)) == 1);
        REQUIRE(f.square(f.sqrt(e)) == e);
      }
      CHECK(f.sqrt(0) == 0);
    }
  }

  TEST_CASE("multiplicative group is cyclic of order 2^m - 1") {
    for (unsigned m : {4u, 8u, 12u}) {
      const auto& f = Gf2mField::get(m);
      std::set<Gf2mElement> seen;
      // Any element of maximal order generates; find one and walk it.
      for (Gf2mElement g = 2; g < f.size(); ++g) {
        seen.clear();
        Gf2mElement x = 1;
        do {
          seen.insert(x);
          x = f.mul(x, g);
        } while (x != 1);
        if (seen.size() == f.size() - 1) break;
      }
      CHECK(seen.size() == f.size() - 1);
      CHECK(f.pow(2, f.size() - 1) == 1);
    }
  }

  TEST_CASE("polynomial evaluation") {
    const auto& f = Gf2mField::get(4);
    CHECK(poly_eval(f, Gf2mPoly::constant(9), 5) == 9);
    for (unsigned m : {4u, 12u, 13u}) {
      const auto& g = Gf2mField::get(m);
      CHECK(poly_eval(g, Gf2mPoly({1, 0, 1}), 1) == 0);
    }
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = random_poly(rng, f, 3);
      for (Gf2mElement x = 0; x < 16; ++x) REQUIRE(poly_eval(f, p, x) == naive_eval(f, p, x));
    }
  }

  TEST_CASE("polynomial division and gcd") {
    const auto& f = Gf2mField::get(8);
    std::mt19937 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_poly(rng, f, 3 + trial % 9), b = random_poly(rng, f, 1 + trial % 5);
      const auto [q, r] = poly_divmod(f, a, b);
      CHECK(r.degree() < b.degree());
      CHECK(poly_add(poly_mul(f, q, b), r) == a);
      const auto g = poly_gcd(f, a, b);
      CHECK(g.leading() == 1);
      CHECK(poly_mod(f, a, g).is_zero());
      CHECK(poly_mod(f, b, g).is_zero());
    }
    CHECK_THROWS_AS(poly_divmod(f, Gf2mPoly({1, 2}), Gf2mPoly()), Error);
    CHECK(poly_square(f, Gf2mPoly({3, 5})) == poly_mul(f, Gf2mPoly({3, 5}), Gf2mPoly({3, 5})));
  }

  TEST_CASE("irreducibility against exhaustive factor search") {
    const auto& f = Gf2mField::get(4);
    for (Gf2mElement c = 0; c < 16; ++c) CHECK(poly_is_irreducible(f, Gf2mPoly({c, 1})));
    CHECK_FALSE(poly_is_irreducible(f, Gf2mPoly({1, 0, 1})));
    // Degree 2 and 3 monic polynomials are reducible iff they have a root.
    std::set<std::pair<Gf2mElement, Gf2mElement>> products;
    for (Gf2mElement r1 = 0; r1 < 16; ++r1)
      for (Gf2mElement r2 = 0; r2 < 16; ++r2) products.insert({f.mul(r1, r2), static_cast<Gf2mElement>(r1 ^ r2)});
    int irreducible = 0;
    for (Gf2mElement b = 0; b < 16; ++b) {
      for (Gf2mElement a = 0; a < 16; ++a) {
        const bool reducible = products.count({b, a}) > 0;
        CHECK(poly_is_irreducible(f, Gf2mPoly({b, a, 1})) == !reducible);
        irreducible += !reducible;
      }
    }
    CHECK(irreducible == (16 * 16 - 16) / 2);  // monic irreducible quadratics over GF(16)
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = random_poly(rng, f, 3, true);
      bool has_root = false;
      for (Gf2mElement x = 0; x < 16; ++x) has_root |= poly_eval(f, p, x) == 0;
      CHECK(poly_is_irreducible(f, p) == !has_root);
    }
  }

  TEST_CASE("partial extended Euclid") {
    const auto& f = Gf2mField::get(4);
    Gf2mPoly g({0, 1, 1});
    for (Gf2mElement c = 1; !poly_is_irreducible(f, g); ++c) g = Gf2mPoly({c, 1, 1});
    auto [u0, v0] = poly_partial_ea(f, Gf2mPoly(), g, 1);
    CHECK(u0.is_zero());
    CHECK(v0 == Gf2mPoly::constant(1));
    auto [u1, v1] = poly_partial_ea(f, Gf2mPoly({7}), g, 1);
    CHECK(u1 == Gf2mPoly({7}));
    CHECK(v1 == Gf2mPoly::constant(1));

    std::mt19937 rng(6);
    for (const int t : {2, 5, 8}) {
      Gf2mPoly gt;
      do gt = random_poly(rng, f, t, true);
      while (!poly_is_irreducible(f, gt));
      for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng, f, t - 1);
        const int stop = t / 2;
        const auto [u, v] = poly_partial_ea(f, a, gt, stop);
        CHECK(u.degree() <= stop);
        CHECK(v.degree() <= t - 1 - stop);
        CHECK(poly_mulmod(f, v, a, gt) == poly_mod(f, u, gt));
      }
    }
  }

  TEST_CASE("inverse and square root modulo g") {
    const auto& f = Gf2mField::get(4);
    std::mt19937 rng(7);
    for (const int t : {2, 3, 6}) {
      Gf2mPoly g;
      do g = random_poly(rng, f, t, true);
      while (!poly_is_irreducible(f, g));
      const auto sx = poly_sqrt_x_mod(f, g);
      CHECK(poly_sqmod(f, sx, g) == Gf2mPoly::monomial(1));
      CHECK(poly_sqrt_mod_g(f, Gf2mPoly::constant(1), g, sx) == Gf2mPoly::constant(1));
      if (t > 2) CHECK(poly_sqrt_mod_g(f, Gf2mPoly::monomial(2), g, sx) == Gf2mPoly::monomial(1));
      for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, f, t - 1);
        const auto r = poly_sqrt_mod_g(f, p, g, sx);
        CHECK(poly_sqmod(f, r, g) == p);
        const auto inv = poly_inv_mod(f, p, g);
        CHECK(poly_mulmod(f, inv, p, g) == Gf2mPoly::constant(1));
      }
    }
    CHECK_THROWS_AS(poly_inv_mod(f, Gf2mPoly({1, 1}), Gf2mPoly({1, 0, 1})), Error);
  }

  TEST_CASE("operation counts") {
    const auto& f = Gf2mField::get(12);
    OpCounters c;
    poly_mul(f, Gf2mPoly({1, 2, 3}), Gf2mPoly({4, 5}), &c);
    CHECK(c.gf2m_mults == 6);
    CHECK(c.zq_mults == 0);
    CHECK(f.inv_cost() == 21);
    CHECK(f.sqrt_cost() == 11);
  }
}
