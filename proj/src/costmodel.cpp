#include "costmodel.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace pqclab::costmodel {

namespace {

constexpr std::array<CostFormula, 6> kFormulas = {{
    {Scheme::Kyber, Operation::KeyGen, 2, FormulaShape::K2N, "O(k²n)"},
    // Figure data (4096 at k = 2) wins over the prose constant 2 k^2 n.
    {Scheme::Kyber, Operation::Encrypt, 4, FormulaShape::K2N, "O(k²n)"},
    {Scheme::Kyber, Operation::Decrypt, 2, FormulaShape::KN, "O(kn)"},
    {Scheme::McEliece, Operation::KeyGen, 2, FormulaShape::N3, "O(n³)"},
    {Scheme::McEliece, Operation::Encrypt, 2, FormulaShape::N2, "O(n²)"},
    {Scheme::McEliece, Operation::Decrypt, 2, FormulaShape::N2, "O(n²)"},
}};

constexpr std::array<Operation, 3> kOperations = {Operation::KeyGen, Operation::Encrypt, Operation::Decrypt};

struct PublishedSizes {
  std::string_view level;
  std::uint64_t key_bytes;
  std::uint64_t ct_bytes;
};

constexpr std::array<PublishedSizes, 6> kPublishedSizes = {{
    {"kyber512", 800, 768},
    {"kyber768", 1184, 1088},
    {"kyber1024", 1568, 1568},
    {"mceliece348864", 261120, 128},
    {"mceliece460896", 524160, 188},
    {"mceliece6688128", 1044480, 240},
}};

struct PublishedFlops {
  std::string_view level;
  Operation operation;
  double flops;
};

constexpr std::array<PublishedFlops, 6> kPublishedFlops = {{
    {"kyber512", Operation::KeyGen, 2048},
    {"kyber512", Operation::Encrypt, 4096},
    {"kyber512", Operation::Decrypt, 1024},
    {"mceliece348864", Operation::KeyGen, 8.5e10},
    {"mceliece348864", Operation::Encrypt, 2.4e7},
    {"mceliece348864", Operation::Decrypt, 2.4e7},
}};

const PublishedSizes* published_sizes(std::string_view level) {
  for (const auto& p : kPublishedSizes)
    if (p.level == level) return &p;
  return nullptr;
}

std::optional<double> published_flops(std::string_view level, Operation op) {
  for (const auto& p : kPublishedFlops)
    if (p.level == level && p.operation == op) return p.flops;
  return std::nullopt;
}

std::string kyber_label(const kyber::KyberParams& p) { return std::string(p.name); }

std::string mceliece_label(const mceliece::McElieceParams& p) { return std::string(p.name); }

SizeRow kyber_size_row(const kyber::KyberParams& p) {
  SizeRow row;
  row.level = kyber_label(p);
  row.key_bytes = p.public_key_bytes();
  row.ct_bytes_alg1 = row.ct_bytes_table = p.ciphertext_bytes();
  if (const auto* pub = published_sizes(row.level)) {
    row.published_key_bytes = pub->key_bytes;
    row.published_ct_bytes = pub->ct_bytes;
  }
  return row;
}

SizeRow mceliece_size_row(const mceliece::McElieceParams& p) {
  SizeRow row;
  row.level = mceliece_label(p);
  const std::uint64_t k = p.k(), n = p.n;
  row.key_bytes = mceliece::McEliecePublicKey::serialized_bytes(p, mceliece::Variant::Systematic);
  row.ct_bytes_alg1 = gf2::words_for(n);
  row.ct_bytes_table = gf2::words_for(p.codimension()) + 32;
  if (const auto* pub = published_sizes(row.level)) {
    row.published_key_bytes = pub->key_bytes;
    row.published_ct_bytes = pub->ct_bytes;
    row.notes.push_back("flag:mceliece-ciphertext-convention(alg1=" + std::to_string(row.ct_bytes_alg1) +
                        ";published=" + std::to_string(pub->ct_bytes) + ")");
    if (pub->key_bytes != row.key_bytes) {
      row.notes.push_back("flag:mceliece6688128-key-size(computed=" + std::to_string(row.key_bytes) +
                          ";published=" + std::to_string(pub->key_bytes) + ")");
    }
  }
  (void)k;
  return row;
}

struct LevelRef {
  Scheme scheme;
  const kyber::KyberParams* kyber = nullptr;
  const mceliece::McElieceParams* mceliece = nullptr;
};

std::vector<LevelRef> select_levels(const ReportOptions& opt) {
  auto wants = [&](Scheme s) {
    return opt.schemes.empty() || std::find(opt.schemes.begin(), opt.schemes.end(), s) != opt.schemes.end();
  };
  std::vector<LevelRef> out;
  if (opt.levels.empty()) {
    if (wants(Scheme::Kyber))
      for (const auto& p : kyber::all_params()) out.push_back({Scheme::Kyber, &p, nullptr});
    if (wants(Scheme::McEliece))
      for (const auto& p : mceliece::all_params())
        if (p.standard_set) out.push_back({Scheme::McEliece, nullptr, &p});
    return out;
  }
  for (const auto& name : opt.levels) {
    auto kp = kyber::find_params(name);
    auto mp = mceliece::find_params(name);
    if (kp && wants(Scheme::Kyber)) {
      out.push_back({Scheme::Kyber, &kyber::params_by_index(kp->index), nullptr});
    } else if (mp && wants(Scheme::McEliece)) {
      out.push_back({Scheme::McEliece, nullptr, &mceliece::params_by_index(mp->index)});
    } else if (!kp && !mp) {
      throw_error(ErrorCode::InvalidArgument, "unknown level '" + name + "'");
    }
  }
  return out;
}

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

std::uint64_t median(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

struct Measurement {
  std::array<OpCounters, 3> counters{};
  std::array<std::vector<std::uint64_t>, 3> wall;
};

OpCounters mean(const OpCounters& sum, unsigned trials) {
  return {sum.zq_mults / trials, sum.zq_adds / trials, sum.gf2m_mults / trials, sum.gf2_word_ops / trials,
          sum.ntt_transforms / trials};
}

Measurement measure_kyber(const kyber::KyberParams& p, const ReportOptions& opt) {
  Measurement out;
  SeededRng rng(opt.seed, "report/" + std::string(p.name));
  for (unsigned trial = 0; trial < opt.trials; ++trial) {
    const Seed key_seed = rng.next_seed(), coins = rng.next_seed();
    ring::Message msg{};
    rng.fill(msg);

    auto t0 = Clock::now();
    kyber::KyberKeyPair kp;
    out.counters[0] += measure([&](OpCounters& c) { kp = kyber::keygen(p, key_seed, &c); });
    out.wall[0].push_back(elapsed_ns(t0));

    t0 = Clock::now();
    kyber::KyberCiphertext ct;
    out.counters[1] += measure([&](OpCounters& c) { ct = kyber::encrypt(kp.pk, msg, coins, &c); });
    out.wall[1].push_back(elapsed_ns(t0));

    t0 = Clock::now();
    ring::Message back{};
    out.counters[2] += measure([&](OpCounters& c) { back = kyber::decrypt(kp.sk, ct, &c); });
    out.wall[2].push_back(elapsed_ns(t0));
    if (back != msg) throw_error(ErrorCode::DecodingFailure, "Kyber round trip failed");
  }
  return out;
}

Measurement measure_mceliece(const mceliece::McElieceParams& p, const ReportOptions& opt) {
  Measurement out;
  SeededRng rng(opt.seed, "report/" + std::string(p.name));
  for (unsigned trial = 0; trial < opt.trials; ++trial) {
    SeededRng key_rng(rng.next_seed(), "keygen");
    SeededRng enc_rng(rng.next_seed(), "encrypt");
    gf2::BitVector msg(p.k());
    for (std::size_t i = 0; i < p.k(); ++i) msg.set(i, enc_rng.next_u32() & 1u);

    auto t0 = Clock::now();
    mceliece::McElieceKeyPair kp;
    out.counters[0] += measure(
        [&](OpCounters& c) { kp = mceliece::keygen(p, opt.mceliece_variant, key_rng, &c, opt.threads); });
    out.wall[0].push_back(elapsed_ns(t0));

    t0 = Clock::now();
    gf2::BitVector ct;
    out.counters[1] += measure([&](OpCounters& c) { ct = mceliece::encrypt(kp.pk, msg, enc_rng, &c); });
    out.wall[1].push_back(elapsed_ns(t0));

    t0 = Clock::now();
    gf2::BitVector back;
    out.counters[2] += measure([&](OpCounters& c) { back = mceliece::decrypt(kp.sk, ct, &c); });
    out.wall[2].push_back(elapsed_ns(t0));
    if (back != msg) throw_error(ErrorCode::DecodingFailure, "McEliece round trip failed");
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n;") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

std::string_view to_string(Operation op) {
  switch (op) {
    case Operation::KeyGen: return "keygen";
    case Operation::Encrypt: return "encrypt";
    case Operation::Decrypt: return "decrypt";
  }
  return "?";
}

std::uint64_t CostFormula::evaluate(std::uint64_t k, std::uint64_t n) const {
  switch (shape) {
    case FormulaShape::K2N: return coefficient * k * k * n;
    case FormulaShape::KN: return coefficient * k * n;
    case FormulaShape::N3: return coefficient * n * n * n;
    case FormulaShape::N2: return coefficient * n * n;
  }
  return 0;
}

std::span<const CostFormula> formulas() { return kFormulas; }

const CostFormula& formula(Scheme scheme, Operation op) {
  for (const auto& f : kFormulas)
    if (f.scheme == scheme && f.operation == op) return f;
  throw_error(ErrorCode::Internal, "missing cost formula");
}

FlopTriple kyber_model_flops(std::uint64_t k, std::uint64_t n) {
  return {formula(Scheme::Kyber, Operation::KeyGen).evaluate(k, n),
          formula(Scheme::Kyber, Operation::Encrypt).evaluate(k, n),
          formula(Scheme::Kyber, Operation::Decrypt).evaluate(k, n)};
}

FlopTriple kyber_model_flops(const kyber::KyberParams& p) { return kyber_model_flops(p.k, p.n()); }

FlopTriple mceliece_model_flops(std::uint64_t n) {
  return {formula(Scheme::McEliece, Operation::KeyGen).evaluate(0, n),
          formula(Scheme::McEliece, Operation::Encrypt).evaluate(0, n),
          formula(Scheme::McEliece, Operation::Decrypt).evaluate(0, n)};
}

FlopTriple mceliece_model_flops(const mceliece::McElieceParams& p) { return mceliece_model_flops(p.n); }

std::vector<SizeRow> size_table(Scheme scheme) {
  std::vector<SizeRow> rows;
  if (scheme == Scheme::Kyber) {
    for (const auto& p : kyber::all_params()) rows.push_back(kyber_size_row(p));
  } else {
    for (const auto& p : mceliece::all_params())
      if (p.standard_set) rows.push_back(mceliece_size_row(p));
  }
  return rows;
}

std::vector<Discrepancy> discrepancies() {
  return {
      {"mceliece-ciphertext-convention", "inconsistency",
       "published McEliece ciphertext sizes equal m*t/8 + 32 bytes (a syndrome-form encoding); the codeword "
       "ciphertext y = m*G' + e produced here is n/8 bytes",
       "128/188/240", "436/576/836"},
      {"mceliece6688128-key-size", "inconsistency",
       "published McEliece-6688128 public key size differs from k*(n-k)/8 with k=5024, n-k=1664 (0.049%)",
       "1044480", "1044992"},
      {"kyber-encryption-flops", "resolved_conflict",
       "Kyber encryption FLOP constant: the FLOP-count figure gives 4096 at k=2 (4k^2n) while the prose gives "
       "2k^2n; the model uses 4k^2n",
       "2k^2n (2048 at k=2)", "4k^2n (4096 at k=2)"},
  };
}

CostReport build_report(const ReportOptions& opt) {
  PQCLAB_EXPECTS(opt.trials >= 1, "report needs at least one trial");
  CostReport report;
  report.measured = opt.measured;
  report.discrepancies = discrepancies();

  for (const LevelRef& ref : select_levels(opt)) {
    SizeRow size = ref.kyber ? kyber_size_row(*ref.kyber) : mceliece_size_row(*ref.mceliece);
    const FlopTriple flops = ref.kyber ? kyber_model_flops(*ref.kyber) : mceliece_model_flops(*ref.mceliece);

    std::optional<Measurement> measured;
    std::string error;
    if (opt.measured) {
      try {
        measured = ref.kyber ? measure_kyber(*ref.kyber, opt) : measure_mceliece(*ref.mceliece, opt);
      } catch (const std::exception& e) {
        error = e.what();
      }
    }

    for (std::size_t i = 0; i < kOperations.size(); ++i) {
      CostRow row;
      row.scheme = ref.scheme;
      row.level = size.level;
      row.operation = kOperations[i];
      row.model_flops = i == 0 ? flops.keygen : i == 1 ? flops.encrypt : flops.decrypt;
      row.key_bytes = size.key_bytes;
      row.ct_bytes_alg1 = size.ct_bytes_alg1;
      row.ct_bytes_table = size.ct_bytes_table;
      row.notes = size.notes;
      if (ref.kyber && row.operation == Operation::Encrypt) {
        const auto k = ref.kyber->k, n = ref.kyber->n();
        row.notes.push_back("resolved:kyber-encryption-flops(model=4k^2n=" + std::to_string(4 * k * k * n) +
                            ";prose=2k^2n=" + std::to_string(2 * k * k * n) + ")");
      }
      if (measured) {
        row.measured = mean(measured->counters[i], opt.trials);
        row.wall_ns = median(measured->wall[i]);
        if (ref.mceliece) row.notes.push_back("variant=" + std::string(mceliece::to_string(opt.mceliece_variant)));
      }
      row.error = error;
      report.rows.push_back(std::move(row));
    }
    report.sizes.push_back(std::move(size));
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string to_csv(const CostReport& report) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    std::vector<std::string> notes = r.notes;
    if (!r.error.empty()) notes.push_back("error:" + r.error);
    os << wire::to_string(r.scheme) << ',' << r.level << ',' << to_string(r.operation) << ',' << r.model_flops << ',';
    if (r.measured) {
      const auto& m = *r.measured;
      const auto mults = r.scheme == Scheme::Kyber ? m.zq_mults : m.gf2m_mults;
      const auto adds = r.scheme == Scheme::Kyber ? m.zq_adds : 0;
      os << mults << ',' << adds << ',' << m.gf2_word_ops << ',';
    } else {
      os << ",,,";
    }
    os << r.key_bytes << ',' << r.ct_bytes_alg1 << ',' << r.ct_bytes_table << ',';
    if (r.wall_ns) os << *r.wall_ns;
    os << ',' << csv_quote(join(notes, "; ")) << '\n';
  }
  return os.str();
}

std::string to_json(const CostReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["measured"] = report.measured;
  ordered_json formulas_json = ordered_json::array();
  for (const auto& f : kFormulas) {
    formulas_json.push_back({{"scheme", wire::to_string(f.scheme)},
                             {"operation", to_string(f.operation)},
                             {"coefficient", f.coefficient},
                             {"big_o", f.big_o}});
  }
  j["formulas"] = formulas_json;

  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row;
    row["scheme"] = wire::to_string(r.scheme);
    row["level"] = r.level;
    row["operation"] = to_string(r.operation);
    row["model_flops"] = r.model_flops;
    if (r.measured) {
      const auto& m = *r.measured;
      row["measured_mults"] = r.scheme == Scheme::Kyber ? m.zq_mults : m.gf2m_mults;
      row["measured_adds"] = r.scheme == Scheme::Kyber ? m.zq_adds : 0;
      row["measured_word_ops"] = m.gf2_word_ops;
      row["measured_ntt_transforms"] = m.ntt_transforms;
    } else {
      row["measured_mults"] = nullptr;
      row["measured_adds"] = nullptr;
      row["measured_word_ops"] = nullptr;
    }
    row["key_bytes"] = r.key_bytes;
    row["ct_bytes_alg1"] = r.ct_bytes_alg1;
    row["ct_bytes_table"] = r.ct_bytes_table;
    row["wall_ns"] = r.wall_ns ? ordered_json(*r.wall_ns) : ordered_json(nullptr);
    row["notes"] = r.notes;
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;

  ordered_json disc = ordered_json::array();
  for (const auto& d : report.discrepancies) {
    disc.push_back({{"id", d.id},
                    {"kind", d.kind},
                    {"description", d.description},
                    {"published_value", d.published_value},
                    {"computed_value", d.computed_value}});
  }
  j["discrepancies"] = disc;
  return j.dump(2) + "\n";
}

std::string to_markdown(const CostReport& report) {
  std::ostringstream os;
  os << "## Complexity\n\n"
     << "| Operation | CRYSTALS-Kyber | McEliece |\n|---|---|---|\n";
  const char* names[] = {"Key Generation", "Encryption", "Decryption"};
  for (std::size_t i = 0; i < 3; ++i) {
    os << "| " << names[i] << " | " << formula(Scheme::Kyber, kOperations[i]).big_o << " | "
       << formula(Scheme::McEliece, kOperations[i]).big_o << " |\n";
  }

  auto has_scheme = [&](Scheme s) {
    return std::any_of(report.rows.begin(), report.rows.end(), [&](const CostRow& r) { return r.scheme == s; });
  };
  if (has_scheme(Scheme::Kyber)) {
    os << "\n## Kyber sizes\n\n| Level | k | n | Public key (bytes) | Ciphertext (bytes) |\n|---|---|---|---|---|\n";
    for (const auto& s : report.sizes) {
      auto p = kyber::find_params(s.level);
      if (!p) continue;
      os << "| " << s.level << " | " << p->k << " | " << p->n() << " | " << s.key_bytes << " | " << s.ct_bytes_alg1
         << " |\n";
    }
  }
  if (has_scheme(Scheme::McEliece)) {
    os << "\n## McEliece sizes\n\n"
       << "| Level | n | t | Public key (bytes, systematic) | Published key | Ciphertext n/8 | "
          "Ciphertext m*t/8+32 |\n|---|---|---|---|---|---|---|\n";
    for (const auto& s : report.sizes) {
      auto p = mceliece::find_params(s.level);
      if (!p) continue;
      os << "| " << s.level << " | " << p->n << " | " << p->t << " | " << s.key_bytes << " | "
         << (s.published_key_bytes ? std::to_string(*s.published_key_bytes) : "-") << " | " << s.ct_bytes_alg1
         << " | " << s.ct_bytes_table << " |\n";
    }
  }

  os << "\n## FLOP model\n\n| Level | Operation | Model FLOPs |";
  if (report.measured) os << " Measured mults | Measured word ops | Wall (ns) |";
  os << "\n|---|---|---|";
  if (report.measured) os << "---|---|---|";
  os << '\n';
  for (const auto& r : report.rows) {
    os << "| " << r.level << " | " << to_string(r.operation) << " | " << r.model_flops << " |";
    if (report.measured) {
      if (r.measured) {
        const auto mults = r.scheme == Scheme::Kyber ? r.measured->zq_mults : r.measured->gf2m_mults;
        os << ' ' << mults << " | " << r.measured->gf2_word_ops << " | " << (r.wall_ns ? *r.wall_ns : 0) << " |";
      } else {
        os << " error: " << r.error << " | | |";
      }
    }
    os << '\n';
  }

  os << "\n## Discrepancies\n\n| Id | Kind | Published | Computed | Description |\n|---|---|---|---|---|\n";
  for (const auto& d : report.discrepancies) {
    os << "| " << d.id << " | " << d.kind << " | " << d.published_value << " | " << d.computed_value << " | "
       << d.description << " |\n";
  }
  return os.str();
}

std::string figure_csv(const CostReport& report, int figure) {
  std::ostringstream os;
  auto opt_str = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  switch (figure) {
    case 2:
      os << "level,key_bytes,published_key_bytes\n";
      for (const auto& s : report.sizes) os << s.level << ',' << s.key_bytes << ',' << opt_str(s.published_key_bytes) << '\n';
      break;
    case 3:
      os << "level,operation,model_flops,published_flops\n";
      for (const auto& r : report.rows) {
        os << r.level << ',' << to_string(r.operation) << ',' << r.model_flops << ',';
        if (auto p = published_flops(r.level, r.operation)) os << format_double(*p);
        os << '\n';
      }
      break;
    case 4:
      os << "level,ct_bytes_alg1,ct_bytes_table,published_ct_bytes\n";
      for (const auto& s : report.sizes) {
        os << s.level << ',' << s.ct_bytes_alg1 << ',' << s.ct_bytes_table << ',' << opt_str(s.published_ct_bytes)
           << '\n';
      }
      break;
    default:
      throw_error(ErrorCode::InvalidArgument, "figure must be 2, 3 or 4");
  }
  return os.str();
}

// ---------------------------------------------------------------------------

double fit_power_exponent(std::span<const double> x, std::span<const double> y) {
  PQCLAB_EXPECTS(x.size() == y.size() && x.size() >= 2, "power fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    PQCLAB_EXPECTS(x[i] > 0 && y[i] > 0, "power fit needs positive data");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ProportionalFit fit_proportional(std::span<const double> model, std::span<const double> measured) {
  PQCLAB_EXPECTS(model.size() == measured.size() && !model.empty(), "proportional fit needs matching data");
  double num = 0, den = 0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    num += model[i] * measured[i];
    den += model[i] * model[i];
  }
  ProportionalFit fit;
  fit.coefficient = num / den;
  for (std::size_t i = 0; i < model.size(); ++i) {
    fit.max_ratio_error = std::max(fit.max_ratio_error, std::abs(measured[i] / (fit.coefficient * model[i]) - 1.0));
  }
  return fit;
}

ScalingSummary scaling_checks(const Seed& seed, unsigned trials) {
  PQCLAB_EXPECTS(trials >= 1, "scaling check needs at least one trial");
  ScalingSummary out;
  SeededRng rng(seed, "scaling");
  std::vector<double> model;
  for (const auto& p : kyber::all_params()) {
    std::uint64_t total = 0;
    for (unsigned i = 0; i < trials; ++i) {
      const Seed s = rng.next_seed();
      total += measure([&](OpCounters& c) { kyber::keygen(p, s, &c); }).zq_mults;
    }
    out.kyber_k.push_back(static_cast<double>(p.k));
    out.kyber_keygen_mults.push_back(static_cast<double>(total) / trials);
    model.push_back(static_cast<double>(p.k * p.k * p.n()));
  }
  out.kyber_fit = fit_proportional(model, out.kyber_keygen_mults);

  for (const char* name : {"toy16", "toy32", "toy64"}) {
    const auto& p = mceliece::params_by_index(mceliece::find_params(name)->index);
    std::uint64_t total = 0;
    for (unsigned i = 0; i < trials; ++i) {
      SeededRng key_rng(rng.next_seed(), "keygen");
      total += measure([&](OpCounters& c) { mceliece::keygen(p, mceliece::Variant::Textbook, key_rng, &c); })
                   .gf2_word_ops;
    }
    out.mceliece_n.push_back(static_cast<double>(p.n));
    out.mceliece_keygen_word_ops.push_back(static_cast<double>(total) / trials);
  }
  out.mceliece_exponent = fit_power_exponent(out.mceliece_n, out.mceliece_keygen_word_ops);
  return out;
}

}  // namespace pqclab::costmodel
