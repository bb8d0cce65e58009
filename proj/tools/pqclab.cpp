// pqclab: key generation, file encryption, cost reports and benchmarks.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqclab/pqclab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCrypto = 3;
constexpr int kExitIo = 4;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(pqclab_status s) {
  switch (s) {
    case PQCLAB_OK: return kExitOk;
    case PQCLAB_INVALID_ARGUMENT:
    case PQCLAB_USAGE: return kExitUsage;
    case PQCLAB_DECODING_FAILURE: return kExitCrypto;
    case PQCLAB_IO:
    case PQCLAB_FORMAT: return kExitIo;
    default: return kExitFailure;
  }
}

void check(pqclab_status s, const std::string& what) {
  if (s == PQCLAB_OK) return;
  std::string msg = what + ": " + pqclab_status_string(s);
  if (*pqclab_last_error()) msg += ": " + std::string(pqclab_last_error());
  throw CliError{exit_code_for(s), msg};
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitIo, "cannot open '" + path + "'"};
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw CliError{kExitIo, "error reading '" + path + "'"};
  return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{kExitIo, "cannot create '" + path + "'"};
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw CliError{kExitIo, "error writing '" + path + "'"};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  write_file(path, std::vector<uint8_t>(text.begin(), text.end()));
}

template <typename Fn>
std::vector<uint8_t> two_call(Fn&& fn, const std::string& what) {
  size_t len = 0;
  check(fn(nullptr, &len), what);
  std::vector<uint8_t> buf(len);
  check(fn(buf.data(), &len), what);
  buf.resize(len);
  return buf;
}

struct SeedOption {
  std::string hex;

  // --seed wins; PQCLAB_SEED is the fallback; otherwise fresh randomness.
  std::optional<std::vector<uint8_t>> resolve() const {
    std::string source = hex;
    if (source.empty()) {
      if (const char* env = std::getenv("PQCLAB_SEED")) source = env;
    }
    if (source.empty()) return std::nullopt;
    std::vector<uint8_t> seed(PQCLAB_SEED_BYTES);
    if (pqclab_seed_from_hex(source.c_str(), seed.data()) != PQCLAB_OK) {
      throw CliError{kExitUsage, "seed must be exactly 64 hex digits (32 bytes)"};
    }
    return seed;
  }
};

const uint8_t* ptr(const std::optional<std::vector<uint8_t>>& v) { return v ? v->data() : nullptr; }

pqclab_scheme parse_scheme(const std::string& s) {
  if (s == "kyber") return PQCLAB_SCHEME_KYBER;
  if (s == "mceliece") return PQCLAB_SCHEME_MCELIECE;
  return PQCLAB_SCHEME_ANY;
}

pqclab_variant parse_variant(const std::string& s) {
  return s == "textbook" ? PQCLAB_VARIANT_TEXTBOOK : PQCLAB_VARIANT_SYSTEMATIC;
}

struct KeyHints {
  std::string scheme;
  std::string level;
  std::string variant = "systematic";
};

void add_hint_options(CLI::App* cmd, KeyHints& hints) {
  cmd->add_option("--scheme", hints.scheme, "Scheme of a raw (headerless) file")
      ->check(CLI::IsMember({"kyber", "mceliece"}));
  cmd->add_option("--level", hints.level, "Parameter set of a raw (headerless) file");
  cmd->add_option("--variant", hints.variant, "McEliece public key form of a raw file")
      ->check(CLI::IsMember({"textbook", "systematic"}));
}

// ---------------------------------------------------------------------------

struct KeygenArgs {
  std::string scheme;
  std::string level;
  std::string variant = "systematic";
  std::string out = "key";
  SeedOption seed;
  bool raw = false;
  unsigned threads = 1;
};

int cmd_keygen(const KeygenArgs& a) {
  const auto seed = a.seed.resolve();
  pqclab_public_key* pk = nullptr;
  pqclab_secret_key* sk = nullptr;
  check(pqclab_keygen(parse_scheme(a.scheme), a.level.c_str(), parse_variant(a.variant), ptr(seed), a.threads, &pk,
                      &sk),
        "keygen");
  std::unique_ptr<pqclab_public_key, decltype(&pqclab_public_key_free)> pk_guard(pk, pqclab_public_key_free);
  std::unique_ptr<pqclab_secret_key, decltype(&pqclab_secret_key_free)> sk_guard(sk, pqclab_secret_key_free);

  pqclab_key_info info;
  check(pqclab_public_key_info(pk, &info), "keygen");
  const int header = a.raw ? 0 : 1;
  const auto pk_bytes =
      two_call([&](uint8_t* o, size_t* n) { return pqclab_public_key_export(pk, header, o, n); }, "export");
  const auto sk_bytes =
      two_call([&](uint8_t* o, size_t* n) { return pqclab_secret_key_export(sk, header, o, n); }, "export");
  write_file(a.out + ".pk", pk_bytes);
  write_file(a.out + ".sk", sk_bytes);
  std::cout << "level: " << info.level << '\n'
            << "pk: " << info.public_key_bytes << " bytes\n"
            << "sk: " << info.secret_key_bytes << " bytes\n"
            << "ct: " << info.ciphertext_bytes << " bytes\n"
            << "message: " << info.message_bytes << " bytes (" << info.message_bits << " bits)\n";
  return kExitOk;
}

struct EncryptArgs {
  std::string key;
  std::string in;
  std::string out;
  KeyHints hints;
  SeedOption seed;
  bool raw = false;
};

int cmd_encrypt(const EncryptArgs& a) {
  const auto key_bytes = read_file(a.key);
  const auto msg = read_file(a.in);
  const auto seed = a.seed.resolve();
  pqclab_public_key* pk = nullptr;
  check(pqclab_public_key_import(key_bytes.data(), key_bytes.size(), parse_scheme(a.hints.scheme),
                                 a.hints.level.c_str(), parse_variant(a.hints.variant), &pk),
        "reading public key '" + a.key + "'");
  std::unique_ptr<pqclab_public_key, decltype(&pqclab_public_key_free)> guard(pk, pqclab_public_key_free);
  const auto ct = two_call(
      [&](uint8_t* o, size_t* n) { return pqclab_encrypt(pk, msg.data(), msg.size(), ptr(seed), a.raw ? 0 : 1, o, n); },
      "encrypt");
  write_file(a.out, ct);
  std::cout << "ct: " << ct.size() << " bytes\n";
  return kExitOk;
}

struct DecryptArgs {
  std::string key;
  std::string in;
  std::string out;
  KeyHints hints;
};

int cmd_decrypt(const DecryptArgs& a) {
  const auto key_bytes = read_file(a.key);
  const auto ct = read_file(a.in);
  pqclab_secret_key* sk = nullptr;
  check(pqclab_secret_key_import(key_bytes.data(), key_bytes.size(), parse_scheme(a.hints.scheme),
                                 a.hints.level.c_str(), parse_variant(a.hints.variant), &sk),
        "reading secret key '" + a.key + "'");
  std::unique_ptr<pqclab_secret_key, decltype(&pqclab_secret_key_free)> guard(sk, pqclab_secret_key_free);
  const auto msg =
      two_call([&](uint8_t* o, size_t* n) { return pqclab_decrypt(sk, ct.data(), ct.size(), o, n); }, "decrypt");
  write_file(a.out, msg);
  std::cout << "message: " << msg.size() << " bytes\n";
  return kExitOk;
}

struct AnalyzeArgs {
  std::string scheme;
  std::vector<std::string> levels;
  std::string format = "csv";
  int figure = 0;
  bool measured = false;
  unsigned trials = 1;
  SeedOption seed;
  unsigned threads = 1;
  std::string variant = "systematic";
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const auto seed = a.seed.resolve();
  std::string levels;
  for (const auto& l : a.levels) levels += (levels.empty() ? "" : ",") + l;

  pqclab_analyze_options opt;
  pqclab_analyze_options_init(&opt);
  opt.scheme = parse_scheme(a.scheme);
  opt.levels = levels.c_str();
  opt.measured = a.measured ? 1 : 0;
  opt.trials = a.trials;
  opt.seed = ptr(seed);
  opt.threads = a.threads;
  opt.variant = parse_variant(a.variant);

  pqclab_report* report = nullptr;
  check(pqclab_analyze(&opt, &report), "analyze");
  std::unique_ptr<pqclab_report, decltype(&pqclab_report_free)> guard(report, pqclab_report_free);

  pqclab_report_format fmt = PQCLAB_REPORT_CSV;
  if (a.figure == 2) fmt = PQCLAB_REPORT_FIGURE2;
  else if (a.figure == 3) fmt = PQCLAB_REPORT_FIGURE3;
  else if (a.figure == 4) fmt = PQCLAB_REPORT_FIGURE4;
  else if (a.format == "json") fmt = PQCLAB_REPORT_JSON;
  else if (a.format == "md") fmt = PQCLAB_REPORT_MARKDOWN;

  auto text = two_call(
      [&](uint8_t* o, size_t* n) { return pqclab_report_render(report, fmt, reinterpret_cast<char*>(o), n); },
      "render");
  if (!text.empty()) text.pop_back();  // NUL
  write_text(a.out, std::string(text.begin(), text.end()));
  if (const size_t errors = pqclab_report_error_count(report)) {
    std::cerr << "warning: " << errors << " report rows carry measurement errors\n";
  }
  return kExitOk;
}

struct BenchArgs {
  size_t dim = 512;
  size_t rows = 0;
  size_t inner = 0;
  size_t cols = 0;
  unsigned threads = 4;
  unsigned reps = 5;
  SeedOption seed;
};

int cmd_bench(const BenchArgs& a) {
  const auto seed = a.seed.resolve();
  const size_t rows = a.rows ? a.rows : a.dim, inner = a.inner ? a.inner : a.dim, cols = a.cols ? a.cols : a.dim;
  pqclab_bench_result r;
  check(pqclab_bench_gf2_mul(rows, inner, cols, a.threads, a.reps, ptr(seed), &r), "bench");
  std::printf("gf2 product %zux%zu * %zux%zu\n", r.rows, r.inner, r.inner, r.cols);
  std::printf("word ops: %llu\n", static_cast<unsigned long long>(r.word_ops));
  std::printf("sequential: %.0f ns\n", r.sequential_ns);
  std::printf("threads=%u: %.0f ns\n", r.threads, r.parallel_ns);
  std::printf("speedup: %.2f\n", r.speedup);
  std::printf("identical: %s\n", r.identical ? "yes" : "no");
  return r.identical ? kExitOk : kExitFailure;
}

struct SelftestArgs {
  bool quick = false;
  bool inject_fault = false;
};

int cmd_selftest(const SelftestArgs& a) {
  size_t len = 0;
  pqclab_status s = pqclab_selftest(a.quick, a.inject_fault, nullptr, &len);
  std::string text(len, '\0');
  s = pqclab_selftest(a.quick, a.inject_fault, text.data(), &len);
  if (s != PQCLAB_OK && s != PQCLAB_SELFTEST_FAILED) check(s, "selftest");
  text.resize(text.find('\0'));
  std::cout << text;
  if (s == PQCLAB_SELFTEST_FAILED) {
    std::cerr << "selftest: FAILED\n";
    return kExitFailure;
  }
  std::cout << "selftest: all checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Post-quantum PKE toolkit: Kyber-style lattice PKE and binary Goppa McEliece", "pqclab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pqclab_version());

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair into <out>.pk and <out>.sk");
  keygen->add_option("--scheme", kg.scheme, "kyber or mceliece")
      ->required()
      ->check(CLI::IsMember({"kyber", "mceliece"}));
  keygen->add_option("--level", kg.level, "512, 768, 1024 / 348864, 460896, 6688128, toy16, toy32, toy64")
      ->required();
  keygen->add_option("--variant", kg.variant, "McEliece public key form")
      ->check(CLI::IsMember({"textbook", "systematic"}))
      ->capture_default_str();
  keygen->add_option("--out", kg.out, "Output file prefix")->capture_default_str();
  keygen->add_option("--seed", kg.seed.hex, "32-byte seed as hex (default: $PQCLAB_SEED, else random)");
  keygen->add_flag("--raw", kg.raw, "Write headerless encodings");
  keygen->add_option("--threads", kg.threads, "Worker threads for the matrix product")
      ->check(CLI::Range(1u, 256u));

  EncryptArgs enc;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message file");
  encrypt->add_option("--pk", enc.key, "Public key file")->required();
  encrypt->add_option("--in", enc.in, "Message file (32 bytes for Kyber, ceil(k/8) for McEliece)")->required();
  encrypt->add_option("--out", enc.out, "Ciphertext file")->required();
  encrypt->add_option("--seed", enc.seed.hex, "32-byte encryption coins as hex");
  encrypt->add_flag("--raw", enc.raw, "Write a headerless ciphertext");
  add_hint_options(encrypt, enc.hints);

  DecryptArgs dec;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--sk", dec.key, "Secret key file")->required();
  decrypt->add_option("--in", dec.in, "Ciphertext file")->required();
  decrypt->add_option("--out", dec.out, "Recovered message file")->required();
  add_hint_options(decrypt, dec.hints);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Emit the cost model report");
  analyze->add_option("--scheme", an.scheme, "Restrict to one scheme")->check(CLI::IsMember({"kyber", "mceliece"}));
  analyze->add_option("--level", an.levels, "Restrict to these levels (repeatable)")->delimiter(',');
  analyze->add_option("--format", an.format, "csv, json or md")
      ->check(CLI::IsMember({"csv", "json", "md"}))
      ->capture_default_str();
  analyze->add_option("--figure", an.figure, "Emit only the series of figure 2, 3 or 4 as CSV")
      ->check(CLI::IsMember({2, 3, 4}));
  analyze->add_flag("--measured", an.measured, "Run instrumented keygen/encrypt/decrypt");
  analyze->add_option("--trials", an.trials, "Measured runs per level")->check(CLI::Range(1u, 100000u));
  analyze->add_option("--seed", an.seed.hex, "32-byte seed as hex");
  analyze->add_option("--threads", an.threads, "Worker threads for McEliece keygen")->check(CLI::Range(1u, 256u));
  analyze->add_option("--variant", an.variant, "McEliece key form for measured rows")
      ->check(CLI::IsMember({"textbook", "systematic"}));
  analyze->add_option("--out", an.out, "Output file (default stdout)");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Compare sequential and row-parallel GF(2) matrix products");
  bench->add_option("--dim", bn.dim, "Square dimension")->capture_default_str()->check(CLI::Range(1, 1 << 16));
  bench->add_option("--rows", bn.rows, "Rows of the left factor")->check(CLI::Range(1, 1 << 16));
  bench->add_option("--inner", bn.inner, "Shared dimension")->check(CLI::Range(1, 1 << 16));
  bench->add_option("--cols", bn.cols, "Columns of the right factor")->check(CLI::Range(1, 1 << 16));
  bench->add_option("--threads", bn.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  bench->add_option("--reps", bn.reps, "Repetitions (median reported)")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1000u));
  bench->add_option("--seed", bn.seed.hex, "32-byte seed as hex");

  SelftestArgs st;
  auto* selftest = app.add_subcommand("selftest", "Run built-in known-answer and round-trip checks");
  selftest->add_flag("--quick", st.quick, "Skip full-parameter McEliece keygen");
  selftest->add_flag("--inject-fault", st.inject_fault, "Corrupt an expected constant")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keygen) return cmd_keygen(kg);
    if (*encrypt) return cmd_encrypt(enc);
    if (*decrypt) return cmd_decrypt(dec);
    if (*analyze) return cmd_analyze(an);
    if (*bench) return cmd_bench(bn);
    if (*selftest) return cmd_selftest(st);
  } catch (const CliError& e) {
    std::cerr << "pqclab: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "pqclab: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
