#include <doctest.h>

#include <openssl/evp.h>

#include <cstdio>
#include <random>
#include <string>

#include "error.hpp"
#include "kyber.hpp"

using namespace pqclab;
using namespace pqclab::kyber;
using ring::Message;
using ring::RingElement;

namespace {

std::string sha3_256_hex(std::span<const std::uint8_t> data) {
  unsigned char md[32];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha3_256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

const KyberParams& level(const char* name) { return params_by_index(find_params(name)->index); }

Seed seed_of(std::uint8_t base) {
  Seed s;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint8_t>(base + i);
  return s;
}

struct Kat {
  const char* level;
  const char* pk;
  const char* sk;
  const char* ct;
};

// SHA3-256 of the K-PKE encryption key, decryption key and ciphertext produced
// by an independent FIPS 203 implementation for d = 00..1f,
// m[i] = 7 i mod 256, r[i] = 255 - i.
constexpr Kat kKats[] = {
    {"kyber512", "82f101ff648063b376e2bb6c5b7455f655a50c2feadade150efa0e0e6f365aea",
     "4e5de230bd4cb8ee7f775fdd80bd39d9f725eea7dcd9d829f0e7c2e0829ab07d",
     "2e986190a45846d6f6714a8206127d99556401cad34f23b910ed06551597258d"},
    {"kyber768", "a24e16d8f8f9383a95b77050f4d9fd2f5733eec1d63ef3c23ebf9918173669a7",
     "4c6954b8b0e3268ef19ae0eb25efdacdd504d6fa2afa6bb6f49f4a951716c96a",
     "fec26678d5171c588eb57366a8fd6ced86a4a51159a20314adc74f26cd865b5b"},
    {"kyber1024", "61349e5c131a7e116a0463861d7d18663c5627c38c7147ddaadfd48acd7a4535",
     "14ed40042cf38f0642595bbed9eef6a0d1b1460386e8e4cceb1153c1cf0724bc",
     "03741804d5997e085e783a9fc1d9f73689293b649cf6deb6ba6b508a5c4b092a"},
};

}  // namespace

TEST_SUITE("kyber") {
  TEST_CASE("parameter sets and sizes") {
    CHECK(all_params().size() == 3);
    CHECK(level("512").public_key_bytes() == 800);
    CHECK(level("kyber512").ciphertext_bytes() == 768);
    CHECK(level("768").public_key_bytes() == 1184);
    CHECK(level("768").ciphertext_bytes() == 1088);
    CHECK(level("1024").public_key_bytes() == 1568);
    CHECK(level("1024").ciphertext_bytes() == 1568);
    CHECK(level("512").eta1 == 3);
    CHECK(level("1024").du == 11);
    CHECK_FALSE(find_params("256").has_value());
    for (const auto& p : all_params()) {
      auto kp = keygen(p, seed_of(1));
      CHECK(kp.pk.serialize().size() == p.public_key_bytes());
      CHECK(kp.sk.serialize().size() == p.secret_key_bytes());
      CHECK(encrypt(kp.pk, Message{}, seed_of(2)).serialize().size() == p.ciphertext_bytes());
    }
  }

  TEST_CASE("matches the reference digests") {
    Message m;
    Seed r;
    for (std::size_t i = 0; i < 32; ++i) {
      m[i] = static_cast<std::uint8_t>(7 * i);
      r[i] = static_cast<std::uint8_t>(255 - i);
    }
    for (const auto& kat : kKats) {
      CAPTURE(kat.level);
      const auto kp = keygen(level(kat.level), seed_of(0));
      CHECK(sha3_256_hex(kp.pk.serialize()) == kat.pk);
      CHECK(sha3_256_hex(kp.sk.serialize()) == kat.sk);
      const auto ct = encrypt(kp.pk, m, r);
      CHECK(sha3_256_hex(ct.serialize()) == kat.ct);
      CHECK(decrypt(kp.sk, ct) == m);
    }
  }

  TEST_CASE("unit secret extracts a matrix column") {
    const auto& p = level("768");
    const Seed rho = seed_of(9);
    const auto a = ring::expand_matrix(rho, p.k);
    for (std::size_t j = 0; j < p.k; ++j) {
      PolyVec s(p.k), e(p.k);
      s[j].coeffs[0] = fields::Zq{1};
      const auto kp = keygen_from_parts(p, rho, s, e);
      for (std::size_t i = 0; i < p.k; ++i) CHECK(kp.pk.t_hat[i] == a.at(i, j));
    }
  }

  TEST_CASE("noise-free encryption is exact") {
    std::mt19937 rng(31);
    for (const auto& p : all_params()) {
      PolyVec s(p.k), e(p.k), r(p.k), e1(p.k);
      for (std::size_t i = 0; i < p.k; ++i) {
        s[i] = ring::sample_noise(seed_of(3), static_cast<std::uint8_t>(i), p.eta1);
        r[i] = ring::sample_noise(seed_of(4), static_cast<std::uint8_t>(i), p.eta1);
      }
      const auto kp = keygen_from_parts(p, seed_of(5), s, e);
      Message m;
      for (auto& b : m) b = static_cast<std::uint8_t>(rng());
      const auto raw = encrypt_raw(kp.pk, m, r, e1, RingElement{});
      CHECK(decrypt_raw(kp.sk, raw.u, raw.v) == ring::encode_msg(m));
    }
  }

  TEST_CASE("encryption is deterministic in the coins") {
    const auto kp = keygen(level("512"), seed_of(6));
    Message m{};
    m[3] = 0x55;
    CHECK(encrypt(kp.pk, m, seed_of(7)) == encrypt(kp.pk, m, seed_of(7)));
    CHECK_FALSE(encrypt(kp.pk, m, seed_of(7)) == encrypt(kp.pk, m, seed_of(8)));
    CHECK(keygen(level("512"), seed_of(6)).pk == kp.pk);
  }

  TEST_CASE("round trips") {
    std::mt19937 rng(32);
    SeededRng coins(seed_of(10), "kyber-test");
    for (const auto& p : all_params()) {
      const auto kp = keygen(p, coins.next_seed());
      CHECK(decrypt(kp.sk, encrypt(kp.pk, Message{}, coins.next_seed())) == Message{});
      for (int trial = 0; trial < 100; ++trial) {
        Message m;
        for (auto& b : m) b = static_cast<std::uint8_t>(rng());
        REQUIRE(decrypt(kp.sk, encrypt(kp.pk, m, coins.next_seed())) == m);
      }
    }
  }

  TEST_CASE("serialization") {
    for (const auto& p : all_params()) {
      const auto kp = keygen(p, seed_of(11));
      const auto pk_bytes = kp.pk.serialize();
      CHECK(KyberPublicKey::deserialize(p, pk_bytes) == kp.pk);
      CHECK(KyberSecretKey::deserialize(p, kp.sk.serialize()) == kp.sk);
      const auto ct = encrypt(kp.pk, Message{}, seed_of(12));
      CHECK(KyberCiphertext::deserialize(p, ct.serialize()) == ct);

      auto bad = pk_bytes;
      bad[0] = 0xff;
      bad[1] |= 0x0f;  // first coefficient 4095 >= q
      CHECK_THROWS_AS(KyberPublicKey::deserialize(p, bad), Error);
      CHECK_THROWS_AS(KyberPublicKey::deserialize(p, std::span(pk_bytes).first(pk_bytes.size() - 1)), Error);
      const auto ct_bytes = ct.serialize();
      try {
        KyberCiphertext::deserialize(p, std::span(ct_bytes).first(100));
        FAIL("truncated ciphertext accepted");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Format);
      }
    }
  }

  TEST_CASE("operation counts") {
    for (const auto& p : all_params()) {
      OpCounters c;
      keygen(p, seed_of(13), &c);
      CHECK(c.zq_mults == 640 * p.k * p.k);
      CHECK(c.gf2_word_ops == 0);
      CHECK(c.ntt_transforms == 2 * p.k);
    }
  }
}
