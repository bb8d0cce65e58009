#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "counters.hpp"
#include "fields.hpp"
#include "xof.hpp"

namespace pqclab::ring {

using fields::Zq;

inline constexpr std::size_t kN = 256;

enum class Domain { Coefficient, Ntt };

/// Element of R_q = Z_q[X]/(X^256 + 1).
///
/// In the Ntt domain the coefficient array holds 128 degree-1 residues
/// (a[2i] + a[2i+1] X) modulo X^2 - zeta^(2 bitrev7(i) + 1).
struct RingElement {
  std::array<Zq, kN> coeffs{};
  Domain domain = Domain::Coefficient;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

using PolyVec = std::vector<RingElement>;

/// Square k x k matrix of ring elements, row-major.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t k) : k_(k), entries_(k * k) {}

  std::size_t rank() const noexcept { return k_; }
  RingElement& at(std::size_t row, std::size_t col) { return entries_[row * k_ + col]; }
  const RingElement& at(std::size_t row, std::size_t col) const { return entries_[row * k_ + col]; }

  PolyMatrix transposed() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t k_;
  std::vector<RingElement> entries_;
};

/// zeta^bitrev7(i) for the primitive 256th root of unity zeta = 17.
const std::array<Zq, 128>& ntt_zetas();

RingElement ntt_forward(const RingElement& p, OpCounters* ctr = nullptr);
RingElement ntt_inverse(const RingElement& p, OpCounters* ctr = nullptr);

RingElement poly_add(const RingElement& a, const RingElement& b, OpCounters* ctr = nullptr);
RingElement poly_sub(const RingElement& a, const RingElement& b, OpCounters* ctr = nullptr);
/// Ntt domain: 128 base multiplications. Coefficient domain: schoolbook
/// negacyclic convolution.
RingElement poly_mul(const RingElement& a, const RingElement& b, OpCounters* ctr = nullptr);
/// Explicit schoolbook product, regardless of tag (coefficient domain only).
RingElement poly_mul_schoolbook(const RingElement& a, const RingElement& b, OpCounters* ctr = nullptr);

/// Sequential reader over a byte string; taking past the end throws
/// StreamExhausted.
class ByteCursor {
 public:
  explicit ByteCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
  std::span<const std::uint8_t> take(std::size_t n);
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

/// Centered binomial sample; consumes exactly 64 * eta bytes. eta in {2, 3}.
RingElement cbd_sample(ByteCursor& stream, unsigned eta);

/// SHAKE-256(seed || nonce), 64 * eta bytes, fed to cbd_sample.
RingElement sample_noise(const Seed& seed, std::uint8_t nonce, unsigned eta);

/// Rejection-samples one NTT-domain element from SHAKE-128(rho || col || row).
RingElement sample_ntt(const Seed& rho, std::uint8_t row, std::uint8_t col);

/// A in NTT domain, entry (i, j) drawn from SHAKE-128(rho || j || i).
PolyMatrix expand_matrix(const Seed& rho, std::size_t k);

inline constexpr std::size_t kMessageBytes = 32;
using Message = std::array<std::uint8_t, kMessageBytes>;

RingElement encode_msg(const Message& m);
Message decode_msg(const RingElement& p);

std::uint16_t compress_coeff(Zq c, unsigned d);
Zq decompress_coeff(std::uint16_t x, unsigned d);

/// Packed little-endian d-bit fields, 32 * d bytes.
std::vector<std::uint8_t> pack_bits(const RingElement& p, unsigned d);
/// Inverse of pack_bits. Values are raw d-bit fields, not reduced mod q.
std::array<std::uint16_t, kN> unpack_bits(std::span<const std::uint8_t> bytes, unsigned d);

/// round(2^d c / q) mod 2^d per coefficient, packed. d in {1,4,5,10,11,12};
/// d = 12 is lossless.
std::vector<std::uint8_t> compress(const RingElement& p, unsigned d);
RingElement decompress(std::span<const std::uint8_t> bytes, unsigned d);

}  // namespace pqclab::ring
