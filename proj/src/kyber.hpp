#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "counters.hpp"
#include "ring.hpp"
#include "xof.hpp"

namespace pqclab::kyber {

using ring::Message;
using ring::PolyVec;
using ring::RingElement;

struct KyberParams {
  std::string_view name;  // "kyber512", ...
  unsigned level;          // 512, 768, 1024
  std::uint8_t index;      // position in all_params(), used by file headers
  std::size_t k;
  unsigned eta1;
  unsigned eta2;
  unsigned du;
  unsigned dv;

  constexpr std::size_t n() const noexcept { return ring::kN; }
  constexpr std::uint16_t q() const noexcept { return fields::kQ; }
  constexpr std::size_t public_key_bytes() const noexcept { return 384 * k + kSeedBytes; }
  constexpr std::size_t secret_key_bytes() const noexcept { return 384 * k; }
  constexpr std::size_t ciphertext_bytes() const noexcept { return 32 * k * du + 32 * dv; }
};

std::span<const KyberParams> all_params();
const KyberParams& params_by_index(std::size_t index);
/// Accepts "512", "kyber512", "Kyber512", "kyber-512" (and likewise for the
/// other levels).
std::optional<KyberParams> find_params(std::string_view level);

struct KyberPublicKey {
  const KyberParams* params = nullptr;
  PolyVec t_hat;  // NTT domain
  Seed rho{};

  /// 12-bit packed t_hat || rho, 384 k + 32 bytes.
  std::vector<std::uint8_t> serialize() const;
  /// Throws Format on a size mismatch or a non-canonical coefficient.
  static KyberPublicKey deserialize(const KyberParams& params, std::span<const std::uint8_t> bytes);

  friend bool operator==(const KyberPublicKey& a, const KyberPublicKey& b) {
    return a.params == b.params && a.t_hat == b.t_hat && a.rho == b.rho;
  }
};

struct KyberSecretKey {
  const KyberParams* params = nullptr;
  PolyVec s_hat;  // NTT domain

  std::vector<std::uint8_t> serialize() const;
  static KyberSecretKey deserialize(const KyberParams& params, std::span<const std::uint8_t> bytes);

  friend bool operator==(const KyberSecretKey& a, const KyberSecretKey& b) {
    return a.params == b.params && a.s_hat == b.s_hat;
  }
};

/// Compressed ciphertext: u holds d_u-bit values, v holds d_v-bit values.
struct KyberCiphertext {
  const KyberParams* params = nullptr;
  std::vector<std::vector<std::uint8_t>> u_packed;
  std::vector<std::uint8_t> v_packed;

  std::vector<std::uint8_t> serialize() const;
  static KyberCiphertext deserialize(const KyberParams& params, std::span<const std::uint8_t> bytes);

  friend bool operator==(const KyberCiphertext& a, const KyberCiphertext& b) {
    return a.params == b.params && a.u_packed == b.u_packed && a.v_packed == b.v_packed;
  }
};

struct KyberKeyPair {
  KyberPublicKey pk;
  KyberSecretKey sk;
};

/// t_hat = A_hat o s_hat + e_hat for explicit coefficient-domain s and e.
KyberKeyPair keygen_from_parts(const KyberParams& params, const Seed& rho, const PolyVec& s, const PolyVec& e,
                               OpCounters* ctr = nullptr);

/// (rho, sigma) = SHA3-512(seed || k); s, e sampled with eta1 from sigma.
KyberKeyPair keygen(const KyberParams& params, const Seed& seed, OpCounters* ctr = nullptr);

/// Uncompressed (u, v), coefficient domain.
struct RawCiphertext {
  PolyVec u;
  RingElement v;
};

/// u = A^T r + e1, v = t^T r + e2 + encode(m) with explicit noise.
RawCiphertext encrypt_raw(const KyberPublicKey& pk, const Message& m, const PolyVec& r, const PolyVec& e1,
                          const RingElement& e2, OpCounters* ctr = nullptr);

/// v - s^T u, before message decoding.
RingElement decrypt_raw(const KyberSecretKey& sk, const PolyVec& u, const RingElement& v,
                        OpCounters* ctr = nullptr);

/// Samples r (eta1), e1 and e2 (eta2) from `coins` and compresses.
KyberCiphertext encrypt(const KyberPublicKey& pk, const Message& m, const Seed& coins, OpCounters* ctr = nullptr);

Message decrypt(const KyberSecretKey& sk, const KyberCiphertext& ct, OpCounters* ctr = nullptr);

}  // namespace pqclab::kyber
