#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "pqclab/pqclab.h"

namespace {

std::vector<uint8_t> seed_bytes(uint8_t v) { return std::vector<uint8_t>(PQCLAB_SEED_BYTES, v); }

struct Keys {
  pqclab_public_key* pk = nullptr;
  pqclab_secret_key* sk = nullptr;
  ~Keys() {
    pqclab_public_key_free(pk);
    pqclab_secret_key_free(sk);
  }
};

std::vector<uint8_t> export_pk(const pqclab_public_key* pk, int header) {
  size_t len = 0;
  REQUIRE(pqclab_public_key_export(pk, header, nullptr, &len) == PQCLAB_OK);
  std::vector<uint8_t> out(len);
  REQUIRE(pqclab_public_key_export(pk, header, out.data(), &len) == PQCLAB_OK);
  return out;
}

std::vector<uint8_t> export_sk(const pqclab_secret_key* sk, int header) {
  size_t len = 0;
  REQUIRE(pqclab_secret_key_export(sk, header, nullptr, &len) == PQCLAB_OK);
  std::vector<uint8_t> out(len);
  REQUIRE(pqclab_secret_key_export(sk, header, out.data(), &len) == PQCLAB_OK);
  return out;
}

std::vector<uint8_t> encrypt(const pqclab_public_key* pk, const std::vector<uint8_t>& m, const uint8_t* coins,
                             int header) {
  size_t len = 0;
  REQUIRE(pqclab_encrypt(pk, m.data(), m.size(), coins, header, nullptr, &len) == PQCLAB_OK);
  std::vector<uint8_t> out(len);
  REQUIRE(pqclab_encrypt(pk, m.data(), m.size(), coins, header, out.data(), &len) == PQCLAB_OK);
  return out;
}

pqclab_status decrypt(const pqclab_secret_key* sk, const std::vector<uint8_t>& ct, std::vector<uint8_t>& m) {
  size_t len = 0;
  const auto s = pqclab_decrypt(sk, ct.data(), ct.size(), nullptr, &len);
  if (s != PQCLAB_OK) return s;
  m.resize(len);
  return pqclab_decrypt(sk, ct.data(), ct.size(), m.data(), &len);
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("kyber lifecycle") {
    const auto seed = seed_bytes(1);
    Keys k;
    REQUIRE(pqclab_keygen(PQCLAB_SCHEME_KYBER, "512", PQCLAB_VARIANT_SYSTEMATIC, seed.data(), 1, &k.pk, &k.sk) ==
            PQCLAB_OK);
    pqclab_key_info info;
    REQUIRE(pqclab_public_key_info(k.pk, &info) == PQCLAB_OK);
    CHECK(std::string(info.level) == "kyber512");
    CHECK(info.public_key_bytes == 800);
    CHECK(info.ciphertext_bytes == 768);
    CHECK(info.message_bytes == 32);

    const auto raw = export_pk(k.pk, 0);
    const auto framed = export_pk(k.pk, 1);
    CHECK(raw.size() == 800);
    CHECK(framed.size() == 808);
    CHECK(std::memcmp(framed.data(), "PQCLAB\0", 7) == 0);

    std::vector<uint8_t> msg(32);
    for (size_t i = 0; i < msg.size(); ++i) msg[i] = static_cast<uint8_t>(i * 3);
    const auto coins = seed_bytes(2);
    const auto ct = encrypt(k.pk, msg, coins.data(), 0);
    CHECK(ct.size() == 768);
    CHECK(encrypt(k.pk, msg, coins.data(), 1).size() == 776);
    CHECK(encrypt(k.pk, msg, coins.data(), 0) == ct);
    std::vector<uint8_t> back;
    REQUIRE(decrypt(k.sk, ct, back) == PQCLAB_OK);
    CHECK(back == msg);

    // Raw import needs hints; framed import does not.
    pqclab_public_key* pk2 = nullptr;
    CHECK(pqclab_public_key_import(raw.data(), raw.size(), PQCLAB_SCHEME_ANY, nullptr, PQCLAB_VARIANT_SYSTEMATIC,
                                   &pk2) == PQCLAB_FORMAT);
    CHECK(std::string(pqclab_last_error()).find("raw") != std::string::npos);
    REQUIRE(pqclab_public_key_import(raw.data(), raw.size(), PQCLAB_SCHEME_KYBER, "512", PQCLAB_VARIANT_SYSTEMATIC,
                                     &pk2) == PQCLAB_OK);
    CHECK(export_pk(pk2, 1) == framed);
    pqclab_public_key_free(pk2);
    pk2 = nullptr;
    REQUIRE(pqclab_public_key_import(framed.data(), framed.size(), PQCLAB_SCHEME_ANY, nullptr,
                                     PQCLAB_VARIANT_SYSTEMATIC, &pk2) == PQCLAB_OK);
    pqclab_public_key_free(pk2);
    CHECK(pqclab_public_key_import(framed.data(), framed.size(), PQCLAB_SCHEME_KYBER, "768",
                                   PQCLAB_VARIANT_SYSTEMATIC, &pk2) == PQCLAB_FORMAT);

    const auto sk_framed = export_sk(k.sk, 1);
    pqclab_secret_key* sk2 = nullptr;
    REQUIRE(pqclab_secret_key_import(sk_framed.data(), sk_framed.size(), PQCLAB_SCHEME_ANY, nullptr,
                                     PQCLAB_VARIANT_SYSTEMATIC, &sk2) == PQCLAB_OK);
    std::vector<uint8_t> back2;
    CHECK(decrypt(sk2, ct, back2) == PQCLAB_OK);
    CHECK(back2 == msg);
    pqclab_secret_key_free(sk2);
  }

  TEST_CASE("argument and buffer errors") {
    Keys k;
    CHECK(pqclab_keygen(PQCLAB_SCHEME_KYBER, "999", PQCLAB_VARIANT_TEXTBOOK, nullptr, 1, &k.pk, &k.sk) ==
          PQCLAB_INVALID_ARGUMENT);
    CHECK(std::string(pqclab_last_error()).find("999") != std::string::npos);
    CHECK(k.pk == nullptr);
    CHECK(pqclab_keygen(PQCLAB_SCHEME_MCELIECE, "512", PQCLAB_VARIANT_TEXTBOOK, nullptr, 1, &k.pk, &k.sk) ==
          PQCLAB_INVALID_ARGUMENT);
    REQUIRE(pqclab_keygen(PQCLAB_SCHEME_ANY, "kyber768", PQCLAB_VARIANT_TEXTBOOK, nullptr, 1, &k.pk, &k.sk) ==
            PQCLAB_OK);
    size_t len = 10;
    uint8_t small[10];
    CHECK(pqclab_public_key_export(k.pk, 0, small, &len) == PQCLAB_BUFFER_TOO_SMALL);
    CHECK(len == 1184);
    std::vector<uint8_t> m(31);
    CHECK(pqclab_encrypt(k.pk, m.data(), m.size(), nullptr, 0, nullptr, &len) == PQCLAB_INVALID_ARGUMENT);
    std::vector<uint8_t> ct(100), out;
    CHECK(decrypt(k.sk, ct, out) == PQCLAB_FORMAT);
    CHECK(pqclab_public_key_info(nullptr, nullptr) == PQCLAB_INVALID_ARGUMENT);
    uint8_t seed[32];
    CHECK(pqclab_seed_from_hex("abc", seed) == PQCLAB_INVALID_ARGUMENT);
    CHECK(pqclab_seed_from_hex(std::string(64, 'f').c_str(), seed) == PQCLAB_OK);
    CHECK(seed[31] == 0xff);
    CHECK(std::string(pqclab_status_string(PQCLAB_DECODING_FAILURE)) == "decoding failure");
  }

  TEST_CASE("mceliece lifecycle") {
    const auto seed = seed_bytes(3);
    for (auto variant : {PQCLAB_VARIANT_TEXTBOOK, PQCLAB_VARIANT_SYSTEMATIC}) {
      Keys k;
      REQUIRE(pqclab_keygen(PQCLAB_SCHEME_MCELIECE, "toy32", variant, seed.data(), 2, &k.pk, &k.sk) == PQCLAB_OK);
      pqclab_key_info info;
      REQUIRE(pqclab_secret_key_info(k.sk, &info) == PQCLAB_OK);
      CHECK(info.variant == variant);
      CHECK(info.message_bits == 17);
      CHECK(info.message_bytes == 3);
      CHECK(info.ciphertext_bytes == 4);
      std::vector<uint8_t> msg = {0xa5, 0x5a, 0x01};
      const auto ct = encrypt(k.pk, msg, seed.data(), 1);
      CHECK(ct.size() == 12);
      std::vector<uint8_t> back;
      REQUIRE(decrypt(k.sk, ct, back) == PQCLAB_OK);
      CHECK(back == msg);
      std::vector<uint8_t> padded = {0xa5, 0x5a, 0x03};  // bit 17 set
      size_t len = 0;
      CHECK(pqclab_encrypt(k.pk, padded.data(), padded.size(), nullptr, 0, nullptr, &len) ==
            PQCLAB_INVALID_ARGUMENT);

      const auto raw_sk = export_sk(k.sk, 0);
      pqclab_secret_key* sk2 = nullptr;
      REQUIRE(pqclab_secret_key_import(raw_sk.data(), raw_sk.size(), PQCLAB_SCHEME_MCELIECE, "toy32", variant,
                                       &sk2) == PQCLAB_OK);
      std::vector<uint8_t> back2;
      CHECK(decrypt(sk2, ct, back2) == PQCLAB_OK);
      CHECK(back2 == msg);
      pqclab_secret_key_free(sk2);
    }
  }

  TEST_CASE("decoding failure status") {
    const auto seed = seed_bytes(4);
    Keys k;
    REQUIRE(pqclab_keygen(PQCLAB_SCHEME_MCELIECE, "toy16", PQCLAB_VARIANT_TEXTBOOK, seed.data(), 1, &k.pk, &k.sk) ==
            PQCLAB_OK);
    int failures = 0;
    for (unsigned pattern = 0; pattern < 1u << 16; pattern += 97) {
      std::vector<uint8_t> ct = {static_cast<uint8_t>(pattern), static_cast<uint8_t>(pattern >> 8)};
      std::vector<uint8_t> out;
      const auto s = decrypt(k.sk, ct, out);
      REQUIRE((s == PQCLAB_OK || s == PQCLAB_DECODING_FAILURE));
      failures += s == PQCLAB_DECODING_FAILURE;
    }
    CHECK(failures > 0);
  }

  TEST_CASE("reports") {
    pqclab_analyze_options opt;
    pqclab_analyze_options_init(&opt);
    pqclab_report* report = nullptr;
    REQUIRE(pqclab_analyze(&opt, &report) == PQCLAB_OK);
    size_t len = 0;
    REQUIRE(pqclab_report_render(report, PQCLAB_REPORT_FIGURE3, nullptr, &len) == PQCLAB_OK);
    std::string text(len, '\0');
    REQUIRE(pqclab_report_render(report, PQCLAB_REPORT_FIGURE3, text.data(), &len) == PQCLAB_OK);
    CHECK(text.find("kyber512,keygen,2048") != std::string::npos);
    CHECK(text.back() == '\0');
    CHECK(pqclab_report_error_count(report) == 0);
    pqclab_report_free(report);

    opt.levels = "toy16,nope";
    CHECK(pqclab_analyze(&opt, &report) == PQCLAB_INVALID_ARGUMENT);
  }

  TEST_CASE("selftest and bench") {
    size_t len = 0;
    CHECK(pqclab_selftest(1, 0, nullptr, &len) == PQCLAB_OK);
    CHECK(len > 1);
    CHECK(pqclab_selftest(1, 1, nullptr, &len) == PQCLAB_SELFTEST_FAILED);
    std::string text(len, '\0');
    CHECK(pqclab_selftest(1, 1, text.data(), &len) == PQCLAB_SELFTEST_FAILED);
    CHECK(text.find("FAIL") != std::string::npos);

    pqclab_bench_result r;
    REQUIRE(pqclab_bench_gf2_mul(64, 64, 64, 4, 2, nullptr, &r) == PQCLAB_OK);
    CHECK(r.identical == 1);
    CHECK(r.word_ops > 0);
    CHECK(pqclab_bench_gf2_mul(0, 64, 64, 4, 2, nullptr, &r) == PQCLAB_INVALID_ARGUMENT);
  }
}
