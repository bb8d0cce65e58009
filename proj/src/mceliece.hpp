#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "counters.hpp"
#include "fields.hpp"
#include "gf2linalg.hpp"
#include "xof.hpp"

namespace pqclab::mceliece {

using fields::Gf2mElement;
using fields::Gf2mField;
using fields::Gf2mPoly;
using gf2::BitMatrix;
using gf2::BitVector;
using gf2::Permutation;

struct McElieceParams {
  std::string_view name;  // "mceliece348864", "toy16", ...
  std::uint8_t index;      // position in all_params(), used by file headers
  unsigned m;
  std::size_t n;
  std::size_t t;
  bool standard_set;

  constexpr std::size_t k() const noexcept { return n - m * t; }
  constexpr std::size_t codimension() const noexcept { return m * t; }
};

/// The three standard parameter sets followed by the toy sets toy16 (m=4, t=2),
/// toy32 (m=5, t=3) and toy64 (m=6, t=5).
std::span<const McElieceParams> all_params();
const McElieceParams& params_by_index(std::size_t index);
/// Accepts "348864", "mceliece348864", "toy16", ...
std::optional<McElieceParams> find_params(std::string_view level);
/// Throws InvalidArgument unless n <= 2^m and k > 0.
void validate(const McElieceParams& p);

enum class Variant { Textbook, Systematic };
std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

/// Secret description of a binary Goppa code plus decoding tables.
struct GoppaPrivateData {
  unsigned m = 0;
  Gf2mPoly g;                            // monic irreducible, degree t
  std::vector<Gf2mElement> support;      // n distinct elements, g(a_i) != 0
  Gf2mPoly sqrt_x;                       // sqrt(x) mod g
  std::vector<Gf2mElement> g_inv_at;     // 1 / g(a_i)

  const Gf2mField& field() const { return Gf2mField::get(m); }
  std::size_t t() const { return static_cast<std::size_t>(g.degree()); }

  /// Rebuilds sqrt_x and g_inv_at from (m, g, support).
  static GoppaPrivateData from_polynomial(unsigned m, Gf2mPoly g, std::vector<Gf2mElement> support,
                                          OpCounters* ctr = nullptr);
};

struct GoppaCode {
  GoppaPrivateData goppa;
  BitMatrix h;  // m t x n parity check
  BitMatrix g;  // k x n generator, rows span the null space of h
};

/// m t x n binary parity-check matrix: column i is the bit expansion of
/// (a_i^j / g(a_i)) for j < t.
BitMatrix parity_check_matrix(const GoppaPrivateData& goppa, OpCounters* ctr = nullptr);

/// Samples g and a support, builds H and G; retries while rank(H) < m t.
GoppaCode goppa_generate(const McElieceParams& params, SeededRng& rng, OpCounters* ctr = nullptr);

/// S(x) = sum_i y_i / (x - a_i) mod g.
Gf2mPoly syndrome_polynomial(const GoppaPrivateData& goppa, const BitVector& y, OpCounters* ctr = nullptr);

struct DecodeResult {
  BitVector codeword;
  BitVector error;
};

/// Patterson decoding; throws DecodingFailure when the error locator does
/// not split into distinct support roots or the corrected word is not a
/// codeword.
DecodeResult patterson_decode(const GoppaPrivateData& goppa, const BitVector& y, OpCounters* ctr = nullptr);

struct McEliecePublicKey {
  const McElieceParams* params = nullptr;
  Variant variant = Variant::Systematic;
  /// Textbook: G' = S G P (k x n). Systematic: T with S G P = [I | T]
  /// (k x (n - k)).
  BitMatrix matrix;

  std::size_t serialized_bytes() const;
  std::vector<std::uint8_t> serialize() const;
  static McEliecePublicKey deserialize(const McElieceParams& params, Variant variant,
                                       std::span<const std::uint8_t> bytes);
  static std::size_t serialized_bytes(const McElieceParams& params, Variant variant);

  friend bool operator==(const McEliecePublicKey&, const McEliecePublicKey&) = default;
};

struct McElieceSecretKey {
  const McElieceParams* params = nullptr;
  Variant variant = Variant::Systematic;
  GoppaPrivateData goppa;
  BitMatrix s_inv;        // k x k
  Permutation p;          // n
  BitMatrix g_right_inv;  // n x k, G g_right_inv = I

  /// g (t low coefficients), support, P as u16 little-endian, then S^-1
  /// and G^-1 as row-padded bit matrices.
  std::vector<std::uint8_t> serialize() const;
  static McElieceSecretKey deserialize(const McElieceParams& params, Variant variant,
                                       std::span<const std::uint8_t> bytes);
  static std::size_t serialized_bytes(const McElieceParams& params);
};

struct McElieceKeyPair {
  McEliecePublicKey pk;
  McElieceSecretKey sk;
};

/// Textbook: G' = S G P with random invertible S and random P.
/// Systematic: random P until S G P = [I | T] for some S, publish T.
McElieceKeyPair keygen(const McElieceParams& params, Variant variant, SeededRng& rng, OpCounters* ctr = nullptr,
                       unsigned threads = 1);

/// m G' (the error-free codeword).
BitVector encode(const McEliecePublicKey& pk, const BitVector& m, OpCounters* ctr = nullptr);

/// Uniform error vector of Hamming weight exactly t.
BitVector random_error(std::size_t n, std::size_t t, SeededRng& rng);

/// y = m G' + e with wt(e) = t.
BitVector encrypt(const McEliecePublicKey& pk, const BitVector& m, SeededRng& rng, OpCounters* ctr = nullptr);
BitVector encrypt_with_error(const McEliecePublicKey& pk, const BitVector& m, const BitVector& e,
                             OpCounters* ctr = nullptr);

enum class RecoveryPath { Inverse, SystematicPrefix };

/// Undo P, decode, then m = c' G^-1 S^-1. Systematic keys may instead read
/// m off the first k coordinates of c' P.
BitVector decrypt(const McElieceSecretKey& sk, const BitVector& y, OpCounters* ctr = nullptr,
                  std::optional<RecoveryPath> path = std::nullopt);

}  // namespace pqclab::mceliece
