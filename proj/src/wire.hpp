#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pqclab::wire {

// File framing for keys and ciphertexts:
//
//   bytes 0..6  "PQCLAB\0"
//   byte  7     descriptor: bits 7-6 scheme (01 Kyber, 10 McEliece),
//               bit 5 systematic public-key variant (McEliece only),
//               bits 4-0 parameter-set index
//   bytes 8..   raw encoding
//
// Raw (headerless) files carry only the encoding and are exactly the sizes
// the schemes define.

inline constexpr std::array<std::uint8_t, 7> kMagic = {'P', 'Q', 'C', 'L', 'A', 'B', '\0'};
inline constexpr std::size_t kHeaderBytes = 8;

enum class Scheme : std::uint8_t { Kyber = 1, McEliece = 2 };

std::string_view to_string(Scheme s);

struct Descriptor {
  Scheme scheme = Scheme::Kyber;
  std::uint8_t level_index = 0;
  bool systematic = false;

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

std::uint8_t encode_descriptor(const Descriptor& d);
/// Throws Format for an unknown scheme code.
Descriptor decode_descriptor(std::uint8_t byte);

bool has_header(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> frame(const Descriptor& d, std::span<const std::uint8_t> payload);

struct Framed {
  Descriptor descriptor;
  std::span<const std::uint8_t> payload;
};
/// Throws Format if the magic is missing.
Framed unframe(std::span<const std::uint8_t> bytes);

}  // namespace pqclab::wire
