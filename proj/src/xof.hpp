#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace pqclab {

inline constexpr std::size_t kSeedBytes = 32;
using Seed = std::array<std::uint8_t, kSeedBytes>;

/// Fresh seed from the operating system CSPRNG.
Seed random_seed();

/// Parses exactly 64 hex digits. Throws InvalidArgument otherwise.
Seed seed_from_hex(std::string_view hex);
std::string seed_to_hex(const Seed& seed);

/// SHAKE-128 / SHAKE-256 output stream over a fixed input.
///
/// OpenSSL 3.0 can only finalize a XOF once, so the stream keeps the
/// absorbed context and re-finalizes a copy with a longer output length
/// whenever the buffered output runs out. The prefix property of SHAKE
/// makes the concatenated output identical to a single long squeeze.
class ShakeStream {
 public:
  enum class Variant { Shake128, Shake256 };

  ShakeStream(Variant variant, std::span<const std::uint8_t> input,
              std::size_t initial_bytes = 504);
  ~ShakeStream();
  ShakeStream(ShakeStream&&) noexcept;
  ShakeStream& operator=(ShakeStream&&) noexcept;
  ShakeStream(const ShakeStream&) = delete;
  ShakeStream& operator=(const ShakeStream&) = delete;

  void squeeze(std::span<std::uint8_t> out);

 private:
  void grow(std::size_t min_total);

  struct Ctx;
  std::unique_ptr<Ctx> ctx_;
  std::vector<std::uint8_t> buffer_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input, std::size_t out_len);
std::array<std::uint8_t, 64> sha3_512(std::span<const std::uint8_t> input);

/// Deterministic randomness for key generation and encryption.
///
/// Output block i is SHAKE-256(seed || label || le64(i)), 4 KiB each. Two
/// generators built from the same (seed, label) produce identical streams.
class SeededRng {
 public:
  SeededRng(const Seed& seed, std::string_view label);

  void fill(std::span<std::uint8_t> out);
  std::uint32_t next_u32();
  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint32_t uniform(std::uint32_t bound);
  Seed next_seed();

 private:
  void refill();

  std::vector<std::uint8_t> prefix_;
  std::uint64_t block_ = 0;
  std::array<std::uint8_t, 4096> buf_{};
  std::size_t pos_ = buf_.size();
};

}  // namespace pqclab
