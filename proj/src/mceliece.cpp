#include "mceliece.hpp"

#include <string>

#include "error.hpp"

namespace pqclab::mceliece {

namespace {

constexpr std::size_t kMaxSystematicAttempts = 100;

void put_u16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> b) : b_(b) {}
  std::uint16_t u16() {
    auto s = take(2);
    return static_cast<std::uint16_t>(s[0] | s[1] << 8);
  }
  std::span<const std::uint8_t> take(std::size_t n) {
    if (n > b_.size() - pos_) throw_error(ErrorCode::Format, "McEliece secret key is truncated");
    auto s = b_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == b_.size(); }

 private:
  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

std::size_t McEliecePublicKey::serialized_bytes(const McElieceParams& params, Variant variant) {
  const std::size_t cols = variant == Variant::Textbook ? params.n : params.n - params.k();
  return params.k() * gf2::words_for(cols);
}

std::size_t McEliecePublicKey::serialized_bytes() const { return serialized_bytes(*params, variant); }

std::vector<std::uint8_t> McEliecePublicKey::serialize() const {
  return {matrix.bytes().begin(), matrix.bytes().end()};
}

McEliecePublicKey McEliecePublicKey::deserialize(const McElieceParams& params, Variant variant,
                                                 std::span<const std::uint8_t> bytes) {
  const std::size_t cols = variant == Variant::Textbook ? params.n : params.n - params.k();
  McEliecePublicKey pk;
  pk.params = &params_by_index(params.index);
  pk.variant = variant;
  pk.matrix = BitMatrix::from_bytes(params.k(), cols, bytes);
  return pk;
}

std::size_t McElieceSecretKey::serialized_bytes(const McElieceParams& params) {
  const std::size_t k = params.k(), kw = gf2::words_for(k);
  return 2 * params.t + 4 * params.n + k * kw + params.n * kw;
}

std::vector<std::uint8_t> McElieceSecretKey::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(serialized_bytes(*params));
  for (std::size_t i = 0; i < goppa.t(); ++i) put_u16(out, goppa.g.coeff(i));
  for (auto a : goppa.support) put_u16(out, a);
  for (auto v : p.map()) put_u16(out, v);
  out.insert(out.end(), s_inv.bytes().begin(), s_inv.bytes().end());
  out.insert(out.end(), g_right_inv.bytes().begin(), g_right_inv.bytes().end());
  return out;
}

McElieceSecretKey McElieceSecretKey::deserialize(const McElieceParams& params, Variant variant,
                                                 std::span<const std::uint8_t> bytes) {
  if (bytes.size() != serialized_bytes(params)) {
    throw_error(ErrorCode::Format, "McEliece secret key: expected " + std::to_string(serialized_bytes(params)) +
                                       " bytes, got " + std::to_string(bytes.size()));
  }
  const std::size_t k = params.k(), kw = gf2::words_for(k);
  const auto& field = Gf2mField::get(params.m);
  Reader in(bytes);
  try {
    std::vector<Gf2mElement> g(params.t + 1);
    for (std::size_t i = 0; i < params.t; ++i) g[i] = in.u16();
    g[params.t] = 1;
    std::vector<Gf2mElement> support(params.n);
    for (auto& a : support) {
      a = in.u16();
      if (!field.contains(a)) throw_error(ErrorCode::Format, "support element outside the field");
    }
    for (auto c : g)
      if (!field.contains(c)) throw_error(ErrorCode::Format, "Goppa coefficient outside the field");
    std::vector<std::uint32_t> map(params.n);
    for (auto& v : map) v = in.u16();

    McElieceSecretKey sk;
    sk.params = &params_by_index(params.index);
    sk.variant = variant;
    sk.p = Permutation(std::move(map));
    sk.s_inv = BitMatrix::from_bytes(k, k, in.take(k * kw));
    sk.g_right_inv = BitMatrix::from_bytes(params.n, k, in.take(params.n * kw));
    sk.goppa = GoppaPrivateData::from_polynomial(params.m, Gf2mPoly(std::move(g)), std::move(support));
    return sk;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw_error(ErrorCode::Format, e.what());
    throw;
  }
}

// ---------------------------------------------------------------------------

McElieceKeyPair keygen(const McElieceParams& params, Variant variant, SeededRng& rng, OpCounters* ctr,
                       unsigned threads) {
  GoppaCode code = goppa_generate(params, rng, ctr);
  const std::size_t k = params.k(), n = params.n;

  McElieceKeyPair kp;
  kp.pk.params = kp.sk.params = &params_by_index(params.index);
  kp.pk.variant = kp.sk.variant = variant;
  kp.sk.g_right_inv = gf2::bm_right_inverse(code.g, ctr);

  if (variant == Variant::Textbook) {
    BitMatrix s = gf2::random_invertible(k, rng, ctr);
    kp.sk.p = Permutation::random(n, rng);
    kp.pk.matrix = gf2::permute_columns(gf2::bm_mul(s, code.g, ctr, threads), kp.sk.p);
    kp.sk.s_inv = gf2::bm_invert(s, ctr);
  } else {
    std::size_t attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxSystematicAttempts) {
        throw_error(ErrorCode::Singular, "keygen: no permutation gave an invertible leading block");
      }
      Permutation p = Permutation::random(n, rng);
      BitMatrix gp = gf2::permute_columns(code.g, p);
      auto red = gf2::bm_rref(gp, ctr);
      if (red.rank < k || red.pivots[k - 1] != k - 1) continue;
      // red = E (G P) = [I | T], so S = E and S^-1 is the leading block of G P.
      kp.pk.matrix = red.matrix.column_block(k, n - k);
      kp.sk.s_inv = gp.column_block(0, k);
      kp.sk.p = std::move(p);
      break;
    }
  }
  kp.sk.goppa = std::move(code.goppa);
  return kp;
}

BitVector encode(const McEliecePublicKey& pk, const BitVector& m, OpCounters* ctr) {
  const std::size_t k = pk.params->k(), n = pk.params->n;
  if (m.size() != k) throw_error(ErrorCode::InvalidArgument, "message must have exactly k bits");
  if (pk.variant == Variant::Textbook) return gf2::bm_vec_mul(m, pk.matrix, ctr);
  BitVector c(n);
  for (std::size_t i = 0; i < k; ++i)
    if (m.get(i)) c.set(i, true);
  const BitVector tail = gf2::bm_vec_mul(m, pk.matrix, ctr);
  for (std::size_t j = 0; j < n - k; ++j)
    if (tail.get(j)) c.set(k + j, true);
  return c;
}

BitVector random_error(std::size_t n, std::size_t t, SeededRng& rng) {
  PQCLAB_EXPECTS(t <= n, "error weight exceeds length");
  auto order = Permutation::random(n, rng);
  BitVector e(n);
  for (std::size_t i = 0; i < t; ++i) e.set(order[i], true);
  return e;
}

BitVector encrypt_with_error(const McEliecePublicKey& pk, const BitVector& m, const BitVector& e, OpCounters* ctr) {
  if (e.size() != pk.params->n) throw_error(ErrorCode::InvalidArgument, "error vector must have n bits");
  return encode(pk, m, ctr) ^ e;
}

BitVector encrypt(const McEliecePublicKey& pk, const BitVector& m, SeededRng& rng, OpCounters* ctr) {
  return encrypt_with_error(pk, m, random_error(pk.params->n, pk.params->t, rng), ctr);
}

BitVector decrypt(const McElieceSecretKey& sk, const BitVector& y, OpCounters* ctr, std::optional<RecoveryPath> path) {
  const std::size_t k = sk.params->k();
  if (y.size() != sk.params->n) throw_error(ErrorCode::InvalidArgument, "ciphertext must have exactly n bits");
  const BitVector y_prime = gf2::perm_apply(y, sk.p, true);
  const DecodeResult dec = patterson_decode(sk.goppa, y_prime, ctr);

  const RecoveryPath how =
      path.value_or(sk.variant == Variant::Systematic ? RecoveryPath::SystematicPrefix : RecoveryPath::Inverse);
  if (how == RecoveryPath::SystematicPrefix) {
    if (sk.variant != Variant::Systematic) {
      throw_error(ErrorCode::InvalidArgument, "prefix recovery needs a systematic key");
    }
    const BitVector c = gf2::perm_apply(dec.codeword, sk.p, false);
    BitVector m(k);
    for (std::size_t i = 0; i < k; ++i)
      if (c.get(i)) m.set(i, true);
    return m;
  }
  const BitVector scrambled = gf2::bm_vec_mul(dec.codeword, sk.g_right_inv, ctr);
  return gf2::bm_vec_mul(scrambled, sk.s_inv, ctr);
}

}  // namespace pqclab::mceliece
