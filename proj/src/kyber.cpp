#include "kyber.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "error.hpp"

namespace pqclab::kyber {

using ring::Domain;

namespace {

constexpr std::array<KyberParams, 3> kParams = {{
    {"kyber512", 512, 0, 2, 3, 2, 10, 4},
    {"kyber768", 768, 1, 3, 2, 2, 10, 4},
    {"kyber1024", 1024, 2, 4, 2, 2, 11, 5},
}};

static_assert(kParams[0].public_key_bytes() == 800 && kParams[0].ciphertext_bytes() == 768);
static_assert(kParams[1].public_key_bytes() == 1184 && kParams[1].ciphertext_bytes() == 1088);
static_assert(kParams[2].public_key_bytes() == 1568 && kParams[2].ciphertext_bytes() == 1568);

void check_vec(const PolyVec& v, std::size_t k, const char* what) {
  if (v.size() != k) throw_error(ErrorCode::InvalidArgument, std::string(what) + ": vector length must equal k");
}

RingElement inner_product_ntt(const PolyVec& a, const PolyVec& b, OpCounters* ctr) {
  RingElement acc = ring::poly_mul(a[0], b[0], ctr);
  for (std::size_t j = 1; j < a.size(); ++j) acc = ring::poly_add(acc, ring::poly_mul(a[j], b[j], ctr), ctr);
  return acc;
}

PolyVec to_ntt(const PolyVec& v, OpCounters* ctr) {
  PolyVec out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(ring::ntt_forward(p, ctr));
  return out;
}

void encode12(const PolyVec& v, std::vector<std::uint8_t>& out) {
  for (const auto& p : v) {
    auto bytes = ring::pack_bits(p, 12);
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
}

PolyVec decode12(std::span<const std::uint8_t> bytes, std::size_t k) {
  PolyVec v(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto raw = ring::unpack_bits(bytes.subspan(384 * i, 384), 12);
    v[i].domain = Domain::Ntt;
    for (std::size_t j = 0; j < ring::kN; ++j) {
      if (raw[j] >= fields::kQ) throw_error(ErrorCode::Format, "non-canonical coefficient in key encoding");
      v[i].coeffs[j] = fields::Zq{raw[j]};
    }
  }
  return v;
}

void expect_size(std::span<const std::uint8_t> bytes, std::size_t want, const char* what) {
  if (bytes.size() != want) {
    throw_error(ErrorCode::Format, std::string(what) + ": expected " + std::to_string(want) + " bytes, got " +
                                       std::to_string(bytes.size()));
  }
}

}  // namespace

std::span<const KyberParams> all_params() { return kParams; }

const KyberParams& params_by_index(std::size_t index) {
  PQCLAB_EXPECTS(index < kParams.size(), "unknown Kyber parameter index");
  return kParams[index];
}

std::optional<KyberParams> find_params(std::string_view level) {
  std::string s;
  for (char c : level) {
    if (c != '-' && c != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s.rfind("kyber", 0) == 0) s.erase(0, 5);
  for (const auto& p : kParams) {
    if (s == std::to_string(p.level)) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<std::uint8_t> KyberPublicKey::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(params->public_key_bytes());
  encode12(t_hat, out);
  out.insert(out.end(), rho.begin(), rho.end());
  return out;
}

KyberPublicKey KyberPublicKey::deserialize(const KyberParams& params, std::span<const std::uint8_t> bytes) {
  expect_size(bytes, params.public_key_bytes(), "Kyber public key");
  KyberPublicKey pk;
  pk.params = &params_by_index(params.index);
  pk.t_hat = decode12(bytes.first(384 * params.k), params.k);
  std::copy(bytes.end() - kSeedBytes, bytes.end(), pk.rho.begin());
  return pk;
}

std::vector<std::uint8_t> KyberSecretKey::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(params->secret_key_bytes());
  encode12(s_hat, out);
  return out;
}

KyberSecretKey KyberSecretKey::deserialize(const KyberParams& params, std::span<const std::uint8_t> bytes) {
  expect_size(bytes, params.secret_key_bytes(), "Kyber secret key");
  return KyberSecretKey{&params_by_index(params.index), decode12(bytes, params.k)};
}

std::vector<std::uint8_t> KyberCiphertext::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(params->ciphertext_bytes());
  for (const auto& u : u_packed) out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v_packed.begin(), v_packed.end());
  return out;
}

KyberCiphertext KyberCiphertext::deserialize(const KyberParams& params, std::span<const std::uint8_t> bytes) {
  expect_size(bytes, params.ciphertext_bytes(), "Kyber ciphertext");
  KyberCiphertext ct;
  ct.params = &params_by_index(params.index);
  const std::size_t ulen = 32 * params.du;
  for (std::size_t i = 0; i < params.k; ++i) {
    auto chunk = bytes.subspan(i * ulen, ulen);
    ct.u_packed.emplace_back(chunk.begin(), chunk.end());
  }
  auto vchunk = bytes.subspan(params.k * ulen);
  ct.v_packed.assign(vchunk.begin(), vchunk.end());
  return ct;
}

// ---------------------------------------------------------------------------

KyberKeyPair keygen_from_parts(const KyberParams& params, const Seed& rho, const PolyVec& s, const PolyVec& e,
                               OpCounters* ctr) {
  check_vec(s, params.k, "keygen");
  check_vec(e, params.k, "keygen");
  const auto a_hat = ring::expand_matrix(rho, params.k);
  const PolyVec s_hat = to_ntt(s, ctr);
  const PolyVec e_hat = to_ntt(e, ctr);

  KyberKeyPair kp;
  kp.pk.params = kp.sk.params = &params_by_index(params.index);
  kp.pk.rho = rho;
  for (std::size_t i = 0; i < params.k; ++i) {
    RingElement acc = ring::poly_mul(a_hat.at(i, 0), s_hat[0], ctr);
    for (std::size_t j = 1; j < params.k; ++j)
      acc = ring::poly_add(acc, ring::poly_mul(a_hat.at(i, j), s_hat[j], ctr), ctr);
    kp.pk.t_hat.push_back(ring::poly_add(acc, e_hat[i], ctr));
  }
  kp.sk.s_hat = s_hat;
  return kp;
}

KyberKeyPair keygen(const KyberParams& params, const Seed& seed, OpCounters* ctr) {
  std::array<std::uint8_t, kSeedBytes + 1> input{};
  std::copy(seed.begin(), seed.end(), input.begin());
  input[kSeedBytes] = static_cast<std::uint8_t>(params.k);
  const auto g = sha3_512(input);
  Seed rho{}, sigma{};
  std::copy(g.begin(), g.begin() + 32, rho.begin());
  std::copy(g.begin() + 32, g.end(), sigma.begin());

  PolyVec s, e;
  std::uint8_t nonce = 0;
  for (std::size_t i = 0; i < params.k; ++i) s.push_back(ring::sample_noise(sigma, nonce++, params.eta1));
  for (std::size_t i = 0; i < params.k; ++i) e.push_back(ring::sample_noise(sigma, nonce++, params.eta1));
  return keygen_from_parts(params, rho, s, e, ctr);
}

RawCiphertext encrypt_raw(const KyberPublicKey& pk, const Message& m, const PolyVec& r, const PolyVec& e1,
                          const RingElement& e2, OpCounters* ctr) {
  const KyberParams& params = *pk.params;
  check_vec(r, params.k, "encrypt");
  check_vec(e1, params.k, "encrypt");
  const auto a_hat = ring::expand_matrix(pk.rho, params.k);
  const PolyVec r_hat = to_ntt(r, ctr);

  RawCiphertext ct;
  for (std::size_t i = 0; i < params.k; ++i) {
    // (A^T r)_i = sum_j A[j][i] r_j
    RingElement acc = ring::poly_mul(a_hat.at(0, i), r_hat[0], ctr);
    for (std::size_t j = 1; j < params.k; ++j)
      acc = ring::poly_add(acc, ring::poly_mul(a_hat.at(j, i), r_hat[j], ctr), ctr);
    ct.u.push_back(ring::poly_add(ring::ntt_inverse(acc, ctr), e1[i], ctr));
  }
  RingElement v = ring::ntt_inverse(inner_product_ntt(pk.t_hat, r_hat, ctr), ctr);
  v = ring::poly_add(v, e2, ctr);
  ct.v = ring::poly_add(v, ring::encode_msg(m), ctr);
  return ct;
}

RingElement decrypt_raw(const KyberSecretKey& sk, const PolyVec& u, const RingElement& v, OpCounters* ctr) {
  check_vec(u, sk.params->k, "decrypt");
  const PolyVec u_hat = to_ntt(u, ctr);
  const RingElement su = ring::ntt_inverse(inner_product_ntt(sk.s_hat, u_hat, ctr), ctr);
  return ring::poly_sub(v, su, ctr);
}

KyberCiphertext encrypt(const KyberPublicKey& pk, const Message& m, const Seed& coins, OpCounters* ctr) {
  const KyberParams& params = *pk.params;
  PolyVec r, e1;
  std::uint8_t nonce = 0;
  for (std::size_t i = 0; i < params.k; ++i) r.push_back(ring::sample_noise(coins, nonce++, params.eta1));
  for (std::size_t i = 0; i < params.k; ++i) e1.push_back(ring::sample_noise(coins, nonce++, params.eta2));
  const RingElement e2 = ring::sample_noise(coins, nonce, params.eta2);

  const RawCiphertext raw = encrypt_raw(pk, m, r, e1, e2, ctr);
  KyberCiphertext ct;
  ct.params = pk.params;
  for (const auto& u : raw.u) ct.u_packed.push_back(ring::compress(u, params.du));
  ct.v_packed = ring::compress(raw.v, params.dv);
  return ct;
}

Message decrypt(const KyberSecretKey& sk, const KyberCiphertext& ct, OpCounters* ctr) {
  const KyberParams& params = *sk.params;
  if (ct.params == nullptr || ct.params->index != params.index || ct.u_packed.size() != params.k) {
    throw_error(ErrorCode::InvalidArgument, "ciphertext does not match the secret key's parameter set");
  }
  PolyVec u;
  for (const auto& packed : ct.u_packed) u.push_back(ring::decompress(packed, params.du));
  const RingElement v = ring::decompress(ct.v_packed, params.dv);
  return ring::decode_msg(decrypt_raw(sk, u, v, ctr));
}

}  // namespace pqclab::kyber
