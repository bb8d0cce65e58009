#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "counters.hpp"
#include "kyber.hpp"
#include "mceliece.hpp"
#include "wire.hpp"
#include "xof.hpp"

namespace pqclab::costmodel {

using wire::Scheme;

enum class Operation { KeyGen, Encrypt, Decrypt };
std::string_view to_string(Operation op);

enum class FormulaShape { K2N, KN, N3, N2 };

/// One cell of the complexity comparison: coefficient * shape(k, n).
struct CostFormula {
  Scheme scheme;
  Operation operation;
  std::uint64_t coefficient;
  FormulaShape shape;
  std::string_view big_o;

  std::uint64_t evaluate(std::uint64_t k, std::uint64_t n) const;
};

/// Kyber keygen/enc/dec then McEliece keygen/enc/dec.
std::span<const CostFormula> formulas();
const CostFormula& formula(Scheme scheme, Operation op);

struct FlopTriple {
  std::uint64_t keygen = 0;
  std::uint64_t encrypt = 0;
  std::uint64_t decrypt = 0;
  friend bool operator==(const FlopTriple&, const FlopTriple&) = default;
};

/// (2 k^2 n, 4 k^2 n, 2 k n)
FlopTriple kyber_model_flops(std::uint64_t k, std::uint64_t n);
FlopTriple kyber_model_flops(const kyber::KyberParams& p);
/// (2 n^3, 2 n^2, 2 n^2)
FlopTriple mceliece_model_flops(std::uint64_t n);
FlopTriple mceliece_model_flops(const mceliece::McElieceParams& p);

struct SizeRow {
  std::string level;  // "kyber512", "mceliece348864", ...
  std::uint64_t key_bytes = 0;
  std::uint64_t ct_bytes_alg1 = 0;   // ciphertext this library emits
  std::uint64_t ct_bytes_table = 0;  // published convention (m t / 8 + 32 for McEliece)
  std::optional<std::uint64_t> published_key_bytes;
  std::optional<std::uint64_t> published_ct_bytes;
  std::vector<std::string> notes;
};

/// Kyber: key 384 k + 32, ct 32 k d_u + 32 d_v. McEliece: key k (n - k) / 8
/// (systematic), ct reported as n / 8 and as m t / 8 + 32.
std::vector<SizeRow> size_table(Scheme scheme);

struct Discrepancy {
  std::string id;
  std::string kind;  // "inconsistency" or "resolved_conflict"
  std::string description;
  std::string published_value;
  std::string computed_value;
};

/// The fixed ledger of known inconsistencies in the published figures.
std::vector<Discrepancy> discrepancies();

struct CostRow {
  Scheme scheme = Scheme::Kyber;
  std::string level;
  Operation operation = Operation::KeyGen;
  std::uint64_t model_flops = 0;
  std::optional<OpCounters> measured;
  std::uint64_t key_bytes = 0;
  std::uint64_t ct_bytes_alg1 = 0;
  std::uint64_t ct_bytes_table = 0;
  std::optional<std::uint64_t> wall_ns;
  std::vector<std::string> notes;
  std::string error;
};

struct CostReport {
  std::vector<CostRow> rows;
  std::vector<SizeRow> sizes;
  std::vector<Discrepancy> discrepancies;
  bool measured = false;
};

struct ReportOptions {
  std::vector<Scheme> schemes;      // empty: both
  std::vector<std::string> levels;  // empty: the three standard levels per scheme
  bool measured = false;
  unsigned trials = 1;
  Seed seed{};
  unsigned threads = 1;
  mceliece::Variant mceliece_variant = mceliece::Variant::Systematic;
};

/// Model rows for every (scheme, level, operation); with `measured`, runs
/// keygen/encrypt/decrypt under counters and wall-clock timing. A failing
/// level records its error in the row instead of aborting.
CostReport build_report(const ReportOptions& options);

inline constexpr std::string_view kCsvHeader =
    "scheme,level,operation,model_flops,measured_mults,measured_adds,measured_word_ops,key_bytes,"
    "ct_bytes_alg1,ct_bytes_table,wall_ns,notes";

std::string to_csv(const CostReport& report);
std::string to_json(const CostReport& report);
std::string to_markdown(const CostReport& report);
/// Series behind figure 2 (key size), 3 (FLOP count) or 4 (ciphertext size).
std::string figure_csv(const CostReport& report, int figure);

// ---------------------------------------------------------------------------
// Scaling-law fits
// ---------------------------------------------------------------------------

/// Least-squares slope of log(y) against log(x).
double fit_power_exponent(std::span<const double> x, std::span<const double> y);

struct ProportionalFit {
  double coefficient = 0;      // c minimizing sum (y - c f)^2
  double max_ratio_error = 0;  // max |y / (c f) - 1|
};
ProportionalFit fit_proportional(std::span<const double> model, std::span<const double> measured);

struct ScalingSummary {
  std::vector<double> kyber_k;            // 2, 3, 4
  std::vector<double> kyber_keygen_mults;
  ProportionalFit kyber_fit;              // against k^2 n
  std::vector<double> mceliece_n;         // 16, 32, 64
  std::vector<double> mceliece_keygen_word_ops;
  double mceliece_exponent = 0;
};

/// Measured Kyber keygen multiplications across k and textbook McEliece
/// keygen word operations across the toy codes (mean of `trials` seeds).
ScalingSummary scaling_checks(const Seed& seed, unsigned trials);

}  // namespace pqclab::costmodel
