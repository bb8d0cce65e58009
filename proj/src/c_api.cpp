#include "pqclab/pqclab.h"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "costmodel.hpp"
#include "error.hpp"
#include "gf2linalg.hpp"
#include "kyber.hpp"
#include "mceliece.hpp"
#include "selftest.hpp"
#include "wire.hpp"
#include "xof.hpp"

using namespace pqclab;

struct pqclab_public_key {
  std::variant<kyber::KyberPublicKey, mceliece::McEliecePublicKey> key;
};

struct pqclab_secret_key {
  std::variant<kyber::KyberSecretKey, mceliece::McElieceSecretKey> key;
};

struct pqclab_report {
  costmodel::CostReport report;
};

namespace {

thread_local std::string g_last_error;

pqclab_status fail(pqclab_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

pqclab_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PQCLAB_INVALID_ARGUMENT;
    case ErrorCode::DecodingFailure: return PQCLAB_DECODING_FAILURE;
    case ErrorCode::Singular: return PQCLAB_SINGULAR;
    case ErrorCode::Format: return PQCLAB_FORMAT;
    case ErrorCode::Io: return PQCLAB_IO;
    default: return PQCLAB_INTERNAL;
  }
}

template <typename Fn>
pqclab_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PQCLAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PQCLAB_INTERNAL, e.what());
  }
}

pqclab_status copy_out(std::span<const std::uint8_t> data, std::uint8_t* out, std::size_t* len) {
  if (!len) return fail(PQCLAB_INVALID_ARGUMENT, "length pointer is NULL");
  const std::size_t cap = *len;
  *len = data.size();
  if (!out) return PQCLAB_OK;
  if (cap < data.size()) {
    return fail(PQCLAB_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap) + " bytes, " +
                                             std::to_string(data.size()) + " needed");
  }
  std::copy(data.begin(), data.end(), out);
  return PQCLAB_OK;
}

pqclab_status copy_text(const std::string& text, char* out, std::size_t* len) {
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  bytes.push_back(0);
  return copy_out(bytes, reinterpret_cast<std::uint8_t*>(out), len);
}

struct Level {
  const kyber::KyberParams* kyber = nullptr;
  const mceliece::McElieceParams* mceliece = nullptr;
};

Level resolve(pqclab_scheme scheme, const char* level) {
  if (!level || !*level) throw_error(ErrorCode::InvalidArgument, "level is required");
  Level out;
  if (scheme == PQCLAB_SCHEME_ANY || scheme == PQCLAB_SCHEME_KYBER) {
    if (auto p = kyber::find_params(level)) out.kyber = &kyber::params_by_index(p->index);
  }
  if (!out.kyber && (scheme == PQCLAB_SCHEME_ANY || scheme == PQCLAB_SCHEME_MCELIECE)) {
    if (auto p = mceliece::find_params(level)) out.mceliece = &mceliece::params_by_index(p->index);
  }
  if (!out.kyber && !out.mceliece) {
    std::string which = scheme == PQCLAB_SCHEME_KYBER      ? "Kyber "
                        : scheme == PQCLAB_SCHEME_MCELIECE ? "McEliece "
                                                           : "";
    throw_error(ErrorCode::InvalidArgument, "unknown " + which + "level '" + std::string(level) + "'");
  }
  return out;
}

Level from_descriptor(const wire::Descriptor& d) {
  Level out;
  try {
    if (d.scheme == wire::Scheme::Kyber) {
      out.kyber = &kyber::params_by_index(d.level_index);
    } else {
      out.mceliece = &mceliece::params_by_index(d.level_index);
    }
  } catch (const Error&) {
    throw_error(ErrorCode::Format, "unknown parameter set in file header");
  }
  return out;
}

mceliece::Variant to_variant(pqclab_variant v) {
  return v == PQCLAB_VARIANT_TEXTBOOK ? mceliece::Variant::Textbook : mceliece::Variant::Systematic;
}

Seed seed_or_random(const std::uint8_t* seed) {
  if (!seed) return random_seed();
  Seed s;
  std::copy_n(seed, s.size(), s.begin());
  return s;
}

wire::Descriptor descriptor_of(const pqclab_public_key& pk) {
  if (auto* k = std::get_if<kyber::KyberPublicKey>(&pk.key)) return {wire::Scheme::Kyber, k->params->index, false};
  const auto& m = std::get<mceliece::McEliecePublicKey>(pk.key);
  return {wire::Scheme::McEliece, m.params->index, m.variant == mceliece::Variant::Systematic};
}

wire::Descriptor descriptor_of(const pqclab_secret_key& sk) {
  if (auto* k = std::get_if<kyber::KyberSecretKey>(&sk.key)) return {wire::Scheme::Kyber, k->params->index, false};
  const auto& m = std::get<mceliece::McElieceSecretKey>(sk.key);
  return {wire::Scheme::McEliece, m.params->index, m.variant == mceliece::Variant::Systematic};
}

void fill_info(const Level& level, pqclab_variant variant, pqclab_key_info* info) {
  std::memset(info, 0, sizeof *info);
  std::string_view name;
  if (level.kyber) {
    const auto& p = *level.kyber;
    info->scheme = PQCLAB_SCHEME_KYBER;
    info->variant = PQCLAB_VARIANT_TEXTBOOK;
    name = p.name;
    info->public_key_bytes = p.public_key_bytes();
    info->secret_key_bytes = p.secret_key_bytes();
    info->message_bytes = ring::kMessageBytes;
    info->message_bits = 8 * ring::kMessageBytes;
    info->ciphertext_bytes = p.ciphertext_bytes();
  } else {
    const auto& p = *level.mceliece;
    info->scheme = PQCLAB_SCHEME_MCELIECE;
    info->variant = variant;
    name = p.name;
    info->public_key_bytes = mceliece::McEliecePublicKey::serialized_bytes(p, to_variant(variant));
    info->secret_key_bytes = mceliece::McElieceSecretKey::serialized_bytes(p);
    info->message_bytes = gf2::words_for(p.k());
    info->message_bits = p.k();
    info->ciphertext_bytes = gf2::words_for(p.n);
  }
  std::copy_n(name.data(), std::min(name.size(), sizeof info->level - 1), info->level);
}

// Splits an optional header off `data` and reconciles it with the hints.
struct Resolved {
  Level level;
  mceliece::Variant variant;
  std::span<const std::uint8_t> payload;
};

Resolved resolve_import(std::span<const std::uint8_t> data, pqclab_scheme scheme_hint, const char* level_hint,
                        pqclab_variant variant_hint) {
  if (wire::has_header(data)) {
    const auto framed = wire::unframe(data);
    Resolved r{from_descriptor(framed.descriptor),
               framed.descriptor.systematic ? mceliece::Variant::Systematic : mceliece::Variant::Textbook,
               framed.payload};
    if (level_hint && *level_hint) {
      const Level hinted = resolve(scheme_hint, level_hint);
      if (hinted.kyber != r.level.kyber || hinted.mceliece != r.level.mceliece) {
        throw_error(ErrorCode::Format, "file header names a different parameter set");
      }
    }
    return r;
  }
  if (!level_hint || !*level_hint) {
    throw_error(ErrorCode::Format, "no PQCLAB header; a raw encoding needs the scheme and level");
  }
  return {resolve(scheme_hint, level_hint), to_variant(variant_hint), data};
}

bool same_params(const wire::Descriptor& a, const wire::Descriptor& b) {
  return a.scheme == b.scheme && a.level_index == b.level_index;
}

}  // namespace

extern "C" {

const char* pqclab_version(void) { return "0.1.0"; }

const char* pqclab_status_string(pqclab_status status) {
  switch (status) {
    case PQCLAB_OK: return "ok";
    case PQCLAB_INVALID_ARGUMENT: return "invalid argument";
    case PQCLAB_USAGE: return "usage error";
    case PQCLAB_DECODING_FAILURE: return "decoding failure";
    case PQCLAB_IO: return "I/O error";
    case PQCLAB_FORMAT: return "malformed input";
    case PQCLAB_BUFFER_TOO_SMALL: return "buffer too small";
    case PQCLAB_SINGULAR: return "singular matrix";
    case PQCLAB_SELFTEST_FAILED: return "self-test failed";
    case PQCLAB_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pqclab_last_error(void) { return g_last_error.c_str(); }

pqclab_status pqclab_seed_from_hex(const char* hex, uint8_t seed[PQCLAB_SEED_BYTES]) {
  return guarded([&] {
    if (!hex || !seed) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    const Seed s = seed_from_hex(hex);
    std::copy(s.begin(), s.end(), seed);
    return PQCLAB_OK;
  });
}

pqclab_status pqclab_keygen(pqclab_scheme scheme, const char* level, pqclab_variant variant, const uint8_t* seed,
                            unsigned threads, pqclab_public_key** pk, pqclab_secret_key** sk) {
  return guarded([&] {
    if (!pk || !sk) return fail(PQCLAB_INVALID_ARGUMENT, "NULL key output");
    *pk = nullptr;
    *sk = nullptr;
    const Level lv = resolve(scheme, level);
    const Seed s = seed_or_random(seed);
    auto pub = std::make_unique<pqclab_public_key>();
    auto sec = std::make_unique<pqclab_secret_key>();
    if (lv.kyber) {
      auto kp = kyber::keygen(*lv.kyber, s);
      pub->key = std::move(kp.pk);
      sec->key = std::move(kp.sk);
    } else {
      SeededRng rng(s, "mceliece/keygen");
      auto kp = mceliece::keygen(*lv.mceliece, to_variant(variant), rng, nullptr, std::max(1u, threads));
      pub->key = std::move(kp.pk);
      sec->key = std::move(kp.sk);
    }
    *pk = pub.release();
    *sk = sec.release();
    return PQCLAB_OK;
  });
}

void pqclab_public_key_free(pqclab_public_key* pk) { delete pk; }
void pqclab_secret_key_free(pqclab_secret_key* sk) { delete sk; }

pqclab_status pqclab_public_key_info(const pqclab_public_key* pk, pqclab_key_info* info) {
  return guarded([&] {
    if (!pk || !info) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    const auto d = descriptor_of(*pk);
    fill_info(from_descriptor(d), d.systematic ? PQCLAB_VARIANT_SYSTEMATIC : PQCLAB_VARIANT_TEXTBOOK, info);
    return PQCLAB_OK;
  });
}

pqclab_status pqclab_secret_key_info(const pqclab_secret_key* sk, pqclab_key_info* info) {
  return guarded([&] {
    if (!sk || !info) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    const auto d = descriptor_of(*sk);
    fill_info(from_descriptor(d), d.systematic ? PQCLAB_VARIANT_SYSTEMATIC : PQCLAB_VARIANT_TEXTBOOK, info);
    return PQCLAB_OK;
  });
}

pqclab_status pqclab_public_key_export(const pqclab_public_key* pk, int with_header, uint8_t* out, size_t* len) {
  return guarded([&] {
    if (!pk) return fail(PQCLAB_INVALID_ARGUMENT, "NULL key");
    auto raw = std::visit([](const auto& k) { return k.serialize(); }, pk->key);
    if (with_header) raw = wire::frame(descriptor_of(*pk), raw);
    return copy_out(raw, out, len);
  });
}

pqclab_status pqclab_secret_key_export(const pqclab_secret_key* sk, int with_header, uint8_t* out, size_t* len) {
  return guarded([&] {
    if (!sk) return fail(PQCLAB_INVALID_ARGUMENT, "NULL key");
    auto raw = std::visit([](const auto& k) { return k.serialize(); }, sk->key);
    if (with_header) raw = wire::frame(descriptor_of(*sk), raw);
    return copy_out(raw, out, len);
  });
}

pqclab_status pqclab_public_key_import(const uint8_t* data, size_t len, pqclab_scheme scheme_hint,
                                       const char* level_hint, pqclab_variant variant_hint, pqclab_public_key** pk) {
  return guarded([&] {
    if (!pk || (!data && len)) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    *pk = nullptr;
    const auto r = resolve_import({data, len}, scheme_hint, level_hint, variant_hint);
    auto out = std::make_unique<pqclab_public_key>();
    if (r.level.kyber) {
      out->key = kyber::KyberPublicKey::deserialize(*r.level.kyber, r.payload);
    } else {
      out->key = mceliece::McEliecePublicKey::deserialize(*r.level.mceliece, r.variant, r.payload);
    }
    *pk = out.release();
    return PQCLAB_OK;
  });
}

pqclab_status pqclab_secret_key_import(const uint8_t* data, size_t len, pqclab_scheme scheme_hint,
                                       const char* level_hint, pqclab_variant variant_hint, pqclab_secret_key** sk) {
  return guarded([&] {
    if (!sk || (!data && len)) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    *sk = nullptr;
    const auto r = resolve_import({data, len}, scheme_hint, level_hint, variant_hint);
    auto out = std::make_unique<pqclab_secret_key>();
    if (r.level.kyber) {
      out->key = kyber::KyberSecretKey::deserialize(*r.level.kyber, r.payload);
    } else {
      out->key = mceliece::McElieceSecretKey::deserialize(*r.level.mceliece, r.variant, r.payload);
    }
    *sk = out.release();
    return PQCLAB_OK;
  });
}

pqclab_status pqclab_encrypt(const pqclab_public_key* pk, const uint8_t* message, size_t message_len,
                             const uint8_t* coins, int with_header, uint8_t* ct, size_t* ct_len) {
  return guarded([&] {
    if (!pk || (!message && message_len)) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    const Seed c = seed_or_random(coins);
    std::vector<std::uint8_t> raw;
    if (auto* k = std::get_if<kyber::KyberPublicKey>(&pk->key)) {
      if (message_len != ring::kMessageBytes) {
        return fail(PQCLAB_INVALID_ARGUMENT, "Kyber messages are exactly 32 bytes, got " + std::to_string(message_len));
      }
      ring::Message m;
      std::copy_n(message, m.size(), m.begin());
      raw = kyber::encrypt(*k, m, c).serialize();
    } else {
      const auto& mk = std::get<mceliece::McEliecePublicKey>(pk->key);
      const std::size_t bits = mk.params->k();
      if (message_len != gf2::words_for(bits)) {
        return fail(PQCLAB_INVALID_ARGUMENT, "McEliece " + std::string(mk.params->name) + " messages are " +
                                                 std::to_string(gf2::words_for(bits)) + " bytes (" +
                                                 std::to_string(bits) + " bits), got " + std::to_string(message_len));
      }
      gf2::BitVector m;
      try {
        m = gf2::BitVector::from_bytes(bits, {message, message_len});
      } catch (const Error& e) {
        return fail(PQCLAB_INVALID_ARGUMENT, std::string("message: ") + e.what());
      }
      SeededRng rng(c, "mceliece/encrypt");
      const auto y = mceliece::encrypt(mk, m, rng);
      raw.assign(y.words().begin(), y.words().end());
    }
    if (with_header) raw = wire::frame(descriptor_of(*pk), raw);
    return copy_out(raw, ct, ct_len);
  });
}

pqclab_status pqclab_decrypt(const pqclab_secret_key* sk, const uint8_t* ct, size_t ct_len, uint8_t* message,
                             size_t* message_len) {
  return guarded([&] {
    if (!sk || (!ct && ct_len)) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    std::span<const std::uint8_t> payload(ct, ct_len);
    if (wire::has_header(payload)) {
      const auto framed = wire::unframe(payload);
      if (!same_params(framed.descriptor, descriptor_of(*sk))) {
        return fail(PQCLAB_FORMAT, "ciphertext header names a different parameter set than the key");
      }
      payload = framed.payload;
    }
    std::vector<std::uint8_t> out;
    if (auto* k = std::get_if<kyber::KyberSecretKey>(&sk->key)) {
      const auto m = kyber::decrypt(*k, kyber::KyberCiphertext::deserialize(*k->params, payload));
      out.assign(m.begin(), m.end());
    } else {
      const auto& mk = std::get<mceliece::McElieceSecretKey>(sk->key);
      const std::size_t n = mk.params->n;
      if (payload.size() != gf2::words_for(n)) {
        return fail(PQCLAB_FORMAT, "McEliece ciphertext: expected " + std::to_string(gf2::words_for(n)) +
                                       " bytes, got " + std::to_string(payload.size()));
      }
      const auto m = mceliece::decrypt(mk, gf2::BitVector::from_bytes(n, payload));
      out.assign(m.words().begin(), m.words().end());
    }
    return copy_out(out, message, message_len);
  });
}

void pqclab_analyze_options_init(pqclab_analyze_options* options) {
  if (!options) return;
  *options = pqclab_analyze_options{};
  options->scheme = PQCLAB_SCHEME_ANY;
  options->trials = 1;
  options->threads = 1;
  options->variant = PQCLAB_VARIANT_SYSTEMATIC;
}

pqclab_status pqclab_analyze(const pqclab_analyze_options* options, pqclab_report** report) {
  return guarded([&] {
    if (!options || !report) return fail(PQCLAB_INVALID_ARGUMENT, "NULL argument");
    *report = nullptr;
    costmodel::ReportOptions opt;
    if (options->scheme == PQCLAB_SCHEME_KYBER) opt.schemes = {wire::Scheme::Kyber};
    if (options->scheme == PQCLAB_SCHEME_MCELIECE) opt.schemes = {wire::Scheme::McEliece};
    if (options->levels) {
      std::string_view rest = options->levels;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        if (!item.empty()) opt.levels.emplace_back(item);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
    opt.measured = options->measured != 0;
    opt.trials = options->trials;
    if (options->seed) std::copy_n(options->seed, opt.seed.size(), opt.seed.begin());
    opt.threads = std::max(1u, options->threads);
    opt.mceliece_variant = to_variant(options->variant);
    auto out = std::make_unique<pqclab_report>();
    out->report = costmodel::build_report(opt);
    *report = out.release();
    return PQCLAB_OK;
  });
}

void pqclab_report_free(pqclab_report* report) { delete report; }

size_t pqclab_report_error_count(const pqclab_report* report) {
  if (!report) return 0;
  return static_cast<size_t>(std::count_if(report->report.rows.begin(), report->report.rows.end(),
                                           [](const costmodel::CostRow& r) { return !r.error.empty(); }));
}

pqclab_status pqclab_report_render(const pqclab_report* report, pqclab_report_format format, char* out,
                                   size_t* len) {
  return guarded([&] {
    if (!report) return fail(PQCLAB_INVALID_ARGUMENT, "NULL report");
    std::string text;
    switch (format) {
      case PQCLAB_REPORT_CSV: text = costmodel::to_csv(report->report); break;
      case PQCLAB_REPORT_JSON: text = costmodel::to_json(report->report); break;
      case PQCLAB_REPORT_MARKDOWN: text = costmodel::to_markdown(report->report); break;
      case PQCLAB_REPORT_FIGURE2: text = costmodel::figure_csv(report->report, 2); break;
      case PQCLAB_REPORT_FIGURE3: text = costmodel::figure_csv(report->report, 3); break;
      case PQCLAB_REPORT_FIGURE4: text = costmodel::figure_csv(report->report, 4); break;
      default: return fail(PQCLAB_INVALID_ARGUMENT, "unknown report format");
    }
    return copy_text(text, out, len);
  });
}

pqclab_status pqclab_selftest(int quick, int inject_fault, char* out, size_t* len) {
  return guarded([&] {
    const auto checks = selftest::run({quick != 0, inject_fault != 0});
    std::string text;
    for (const auto& c : checks) {
      text += c.passed ? "PASS " : "FAIL ";
      text += c.name;
      if (!c.passed) text += ": " + c.detail;
      text += '\n';
    }
    const pqclab_status copied = copy_text(text, out, len);
    if (copied != PQCLAB_OK) return copied;
    if (!selftest::all_passed(checks)) return fail(PQCLAB_SELFTEST_FAILED, "one or more self-test checks failed");
    return PQCLAB_OK;
  });
}

pqclab_status pqclab_bench_gf2_mul(size_t rows, size_t inner, size_t cols, unsigned threads, unsigned repetitions,
                                   const uint8_t* seed, pqclab_bench_result* result) {
  return guarded([&] {
    if (!result) return fail(PQCLAB_INVALID_ARGUMENT, "NULL result");
    if (!rows || !inner || !cols || !repetitions) return fail(PQCLAB_INVALID_ARGUMENT, "dimensions must be positive");
    threads = std::max(1u, threads);
    Seed s{};
    if (seed) std::copy_n(seed, s.size(), s.begin());
    SeededRng rng(s, "bench/gf2");
    const auto a = gf2::random_matrix(rows, inner, rng);
    const auto b = gf2::random_matrix(inner, cols, rng);

    using Clock = std::chrono::steady_clock;
    auto time_it = [&](unsigned workers, gf2::BitMatrix& product, OpCounters& ctr) {
      std::vector<double> samples;
      for (unsigned i = 0; i < repetitions; ++i) {
        OpCounters local;
        const auto t0 = Clock::now();
        product = gf2::bm_mul(a, b, &local, workers);
        samples.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count());
        ctr = local;
      }
      std::sort(samples.begin(), samples.end());
      return samples[samples.size() / 2];
    };

    gf2::BitMatrix seq, par;
    OpCounters seq_ctr, par_ctr;
    *result = pqclab_bench_result{};
    result->rows = rows;
    result->inner = inner;
    result->cols = cols;
    result->threads = threads;
    result->sequential_ns = time_it(1, seq, seq_ctr);
    result->parallel_ns = time_it(threads, par, par_ctr);
    result->speedup = result->parallel_ns > 0 ? result->sequential_ns / result->parallel_ns : 0;
    result->word_ops = seq_ctr.gf2_word_ops;
    result->identical = seq == par && seq_ctr == par_ctr;
    return PQCLAB_OK;
  });
}

}  // extern "C"
