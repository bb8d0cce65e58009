#include "selftest.hpp"

#include <algorithm>
#include <functional>

#include "costmodel.hpp"
#include "fields.hpp"
#include "kyber.hpp"
#include "mceliece.hpp"
#include "ring.hpp"
#include "xof.hpp"

namespace pqclab::selftest {

namespace {

using fields::Gf2mField;

Check guarded(std::string name, const std::function<std::string()>& body) {
  Check c{std::move(name), false, {}};
  try {
    c.detail = body();
    c.passed = c.detail.empty();
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  return c;
}

std::string expect_eq(std::uint64_t got, std::uint64_t want, const std::string& what) {
  if (got == want) return {};
  return what + ": got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

std::vector<Check> run(const Options& opt) {
  const std::uint64_t bias = opt.inject_fault ? 1 : 0;
  std::vector<Check> out;

  out.push_back(guarded("gf2m-inverse", [&]() -> std::string {
    for (unsigned m : {4u, 8u, 12u, 13u}) {
      const auto& f = Gf2mField::get(m);
      const unsigned limit = opt.quick ? std::min<unsigned>(f.size(), 512) : f.size();
      for (unsigned a = 1; a < limit; ++a) {
        const auto e = static_cast<fields::Gf2mElement>(a);
        if (f.mul(e, f.inv(e)) != 1) return "a * inv(a) != 1 in GF(2^" + std::to_string(m) + ")";
        if (f.square(f.sqrt(e)) != e) return "sqrt(a)^2 != a in GF(2^" + std::to_string(m) + ")";
      }
    }
    return expect_eq(fields::reduction_polynomial(12), 0x1009 + bias, "GF(2^12) modulus");
  }));

  out.push_back(guarded("ntt-zetas", [&] { return expect_eq(ring::ntt_zetas()[1].value, 1729 + bias, "zetas[1]"); }));

  out.push_back(guarded("ntt-product", [&]() -> std::string {
    SeededRng rng(Seed{}, "selftest/ntt");
    ring::RingElement a, b;
    for (std::size_t i = 0; i < ring::kN; ++i) {
      a.coeffs[i] = fields::zq_from_int(rng.uniform(fields::kQ));
      b.coeffs[i] = fields::zq_from_int(rng.uniform(fields::kQ));
    }
    const auto slow = ring::poly_mul_schoolbook(a, b);
    auto fast = ring::ntt_inverse(ring::poly_mul(ring::ntt_forward(a), ring::ntt_forward(b)));
    return fast.coeffs == slow.coeffs ? "" : "NTT product differs from schoolbook";
  }));

  out.push_back(guarded("kyber-sizes", [&]() -> std::string {
    const auto& p = kyber::params_by_index(0);
    if (auto e = expect_eq(p.public_key_bytes(), 800 + bias, "kyber512 public key"); !e.empty()) return e;
    return expect_eq(p.ciphertext_bytes(), 768, "kyber512 ciphertext");
  }));

  for (const auto& p : kyber::all_params()) {
    out.push_back(guarded("kyber-roundtrip-" + std::string(p.name), [&]() -> std::string {
      Seed seed{};
      seed[0] = static_cast<std::uint8_t>(p.k);
      auto kp = kyber::keygen(p, seed);
      ring::Message msg{};
      for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = static_cast<std::uint8_t>(i * 37 + 1);
      auto ct = kyber::encrypt(kp.pk, msg, seed);
      return kyber::decrypt(kp.sk, ct) == msg ? "" : "decrypted message differs";
    }));
  }

  std::vector<std::string> mc_sets = {"toy16", "toy32", "toy64"};
  if (!opt.quick) mc_sets.push_back("mceliece348864");
  for (const auto& name : mc_sets) {
    const auto& p = mceliece::params_by_index(mceliece::find_params(name)->index);
    for (auto variant : {mceliece::Variant::Textbook, mceliece::Variant::Systematic}) {
      if (p.standard_set && variant == mceliece::Variant::Textbook) continue;
      out.push_back(guarded("mceliece-roundtrip-" + name + "-" + std::string(mceliece::to_string(variant)),
                            [&]() -> std::string {
                              SeededRng rng(Seed{}, "selftest/" + name);
                              auto kp = mceliece::keygen(p, variant, rng);
                              gf2::BitVector msg(p.k());
                              for (std::size_t i = 0; i < p.k(); i += 3) msg.set(i, true);
                              auto ct = mceliece::encrypt(kp.pk, msg, rng);
                              return mceliece::decrypt(kp.sk, ct) == msg ? "" : "decrypted message differs";
                            }));
    }
  }

  out.push_back(guarded("cost-model", [&]() -> std::string {
    const auto ky = costmodel::kyber_model_flops(2, 256);
    if (ky != costmodel::FlopTriple{2048, 4096, 1024}) return "Kyber-512 model FLOPs";
    const auto mc = costmodel::mceliece_model_flops(3488);
    if (auto e = expect_eq(mc.keygen, 84871020544ull, "McEliece-348864 keygen FLOPs"); !e.empty()) return e;
    return expect_eq(costmodel::discrepancies().size(), 3, "discrepancy count");
  }));
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace pqclab::selftest
