// Binary Goppa codes: parameter sets, code construction and Patterson
// decoding.

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "error.hpp"
#include "mceliece.hpp"

namespace pqclab::mceliece {

using namespace fields;

namespace {

constexpr std::array<McElieceParams, 6> kParams = {{
    {"mceliece348864", 0, 12, 3488, 64, true},
    {"mceliece460896", 1, 13, 4608, 96, true},
    {"mceliece6688128", 2, 13, 6688, 128, true},
    {"toy16", 3, 4, 16, 2, false},
    {"toy32", 4, 5, 32, 3, false},
    {"toy64", 5, 6, 64, 5, false},
}};

static_assert(kParams[0].k() == 2720 && kParams[1].k() == 3360 && kParams[2].k() == 5024);
static_assert(kParams[3].k() == 8 && kParams[4].k() == 17 && kParams[5].k() == 34);

constexpr std::size_t kMaxCodeAttempts = 1000;

}  // namespace

std::span<const McElieceParams> all_params() { return kParams; }

const McElieceParams& params_by_index(std::size_t index) {
  PQCLAB_EXPECTS(index < kParams.size(), "unknown McEliece parameter index");
  return kParams[index];
}

std::optional<McElieceParams> find_params(std::string_view level) {
  std::string s;
  for (char c : level) {
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s.rfind("mceliece", 0) == 0) s.erase(0, 8);
  for (const auto& p : kParams) {
    std::string_view name = p.name;
    if (name.rfind("mceliece", 0) == 0) name.remove_prefix(8);
    if (s == name) return p;
  }
  return std::nullopt;
}

void validate(const McElieceParams& p) {
  if (p.m < kMinFieldDegree || p.m > kMaxFieldDegree) throw_error(ErrorCode::InvalidArgument, "m out of range");
  if (p.n > (std::size_t{1} << p.m)) throw_error(ErrorCode::InvalidArgument, "code length n exceeds 2^m");
  if (p.t < 1 || p.m * p.t >= p.n) throw_error(ErrorCode::InvalidArgument, "dimension k = n - m t must be positive");
}

std::string_view to_string(Variant v) { return v == Variant::Textbook ? "textbook" : "systematic"; }

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "textbook") return Variant::Textbook;
  if (s == "systematic") return Variant::Systematic;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GoppaPrivateData GoppaPrivateData::from_polynomial(unsigned m, Gf2mPoly g, std::vector<Gf2mElement> support,
                                                   OpCounters* ctr) {
  const Gf2mField& f = Gf2mField::get(m);
  if (g.degree() < 1 || g.leading() != 1) throw_error(ErrorCode::InvalidArgument, "Goppa polynomial must be monic");
  std::vector<bool> seen(f.size(), false);
  GoppaPrivateData d;
  d.m = m;
  d.g_inv_at.reserve(support.size());
  for (Gf2mElement a : support) {
    if (!f.contains(a) || seen[a]) throw_error(ErrorCode::InvalidArgument, "support elements must be distinct field elements");
    seen[a] = true;
    const Gf2mElement ga = poly_eval(f, g, a, ctr);
    if (ga == 0) throw_error(ErrorCode::InvalidArgument, "Goppa polynomial vanishes on the support");
    d.g_inv_at.push_back(f.inv(ga));
  }
  tally(ctr, &OpCounters::gf2m_mults, support.size() * f.inv_cost());
  d.sqrt_x = poly_sqrt_x_mod(f, g, ctr);
  d.g = std::move(g);
  d.support = std::move(support);
  return d;
}

BitMatrix parity_check_matrix(const GoppaPrivateData& goppa, OpCounters* ctr) {
  const Gf2mField& f = goppa.field();
  const std::size_t n = goppa.support.size(), t = goppa.t(), m = goppa.m;
  BitMatrix h(m * t, n);
  for (std::size_t i = 0; i < n; ++i) {
    Gf2mElement v = goppa.g_inv_at[i];
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t b = 0; b < m; ++b)
        if ((v >> b) & 1u) h.set(j * m + b, i, true);
      v = f.mul(v, goppa.support[i]);
    }
  }
  tally(ctr, &OpCounters::gf2m_mults, n * t);
  return h;
}

GoppaCode goppa_generate(const McElieceParams& params, SeededRng& rng, OpCounters* ctr) {
  validate(params);
  const Gf2mField& f = Gf2mField::get(params.m);
  for (std::size_t attempt = 0; attempt < kMaxCodeAttempts; ++attempt) {
    std::vector<Gf2mElement> coeffs(params.t + 1);
    for (std::size_t i = 0; i < params.t; ++i) coeffs[i] = static_cast<Gf2mElement>(rng.uniform(f.size()));
    coeffs[params.t] = 1;
    Gf2mPoly g(std::move(coeffs));
    if (!poly_is_irreducible(f, g, ctr)) continue;

    const auto order = Permutation::random(f.size(), rng);
    std::vector<Gf2mElement> support;
    support.reserve(params.n);
    for (std::size_t i = 0; i < f.size() && support.size() < params.n; ++i) {
      const auto a = static_cast<Gf2mElement>(order[i]);
      if (poly_eval(f, g, a, ctr) != 0) support.push_back(a);
    }
    if (support.size() < params.n) continue;

    GoppaCode code{GoppaPrivateData::from_polynomial(params.m, std::move(g), std::move(support), ctr), {}, {}};
    code.h = parity_check_matrix(code.goppa, ctr);
    code.g = gf2::bm_null_space(code.h, ctr);
    if (code.g.rows() != params.k()) continue;  // rank(H) < m t
    return code;
  }
  throw_error(ErrorCode::Internal, "goppa_generate: no usable code found");
}

Gf2mPoly syndrome_polynomial(const GoppaPrivateData& goppa, const BitVector& y, OpCounters* ctr) {
  const Gf2mField& f = goppa.field();
  const std::size_t n = goppa.support.size(), t = goppa.t();
  PQCLAB_EXPECTS(y.size() == n, "received word length must equal n");
  // s_r = sum_i y_i a_i^r / g(a_i); then S_j = sum_r g_{r+j+1} s_r, which is
  // sum_i y_i (g(x) - g(a_i)) / ((x - a_i) g(a_i)).
  std::vector<Gf2mElement> s(t, 0);
  std::uint64_t mults = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!y.get(i)) continue;
    Gf2mElement w = goppa.g_inv_at[i];
    for (std::size_t r = 0; r < t; ++r) {
      s[r] ^= w;
      w = f.mul(w, goppa.support[i]);
    }
    mults += t;
  }
  std::vector<Gf2mElement> out(t, 0);
  for (std::size_t j = 0; j < t; ++j) {
    Gf2mElement acc = 0;
    for (std::size_t r = 0; r + j + 1 <= t; ++r) acc ^= f.mul(goppa.g.coeff(r + j + 1), s[r]);
    mults += t - j;
    out[j] = acc;
  }
  tally(ctr, &OpCounters::gf2m_mults, mults);
  return Gf2mPoly(std::move(out));
}

DecodeResult patterson_decode(const GoppaPrivateData& goppa, const BitVector& y, OpCounters* ctr) {
  const Gf2mField& f = goppa.field();
  const std::size_t n = goppa.support.size();
  const int t = goppa.g.degree();

  const Gf2mPoly syn = syndrome_polynomial(goppa, y, ctr);
  if (syn.is_zero()) return {y, BitVector(n)};

  const Gf2mPoly inv = poly_inv_mod(f, syn, goppa.g, ctr);
  const Gf2mPoly tau = poly_sqrt_mod_g(f, poly_add(inv, Gf2mPoly::monomial(1)), goppa.g, goppa.sqrt_x, ctr);
  const auto [a, b] = poly_partial_ea(f, tau, goppa.g, t / 2, ctr);
  const Gf2mPoly sigma =
      poly_add(poly_square(f, a, ctr), poly_mul(f, Gf2mPoly::monomial(1), poly_square(f, b, ctr), ctr));
  if (sigma.degree() < 1 || sigma.degree() > t) {
    throw_error(ErrorCode::DecodingFailure, "error locator has invalid degree");
  }

  BitVector error(n);
  for (std::size_t i = 0; i < n; ++i)
    if (poly_eval(f, sigma, goppa.support[i], ctr) == 0) error.set(i, true);
  if (error.weight() != static_cast<std::size_t>(sigma.degree())) {
    throw_error(ErrorCode::DecodingFailure, "error locator does not split over the support");
  }
  BitVector codeword = y ^ error;
  if (!syndrome_polynomial(goppa, codeword, ctr).is_zero()) {
    throw_error(ErrorCode::DecodingFailure, "corrected word is not a codeword");
  }
  return {std::move(codeword), std::move(error)};
}

}  // namespace pqclab::mceliece
