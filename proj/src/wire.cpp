#include "wire.hpp"

#include <algorithm>

#include "error.hpp"

namespace pqclab::wire {

std::string_view to_string(Scheme s) { return s == Scheme::Kyber ? "kyber" : "mceliece"; }

std::uint8_t encode_descriptor(const Descriptor& d) {
  PQCLAB_EXPECTS(d.level_index < 32, "level index does not fit the descriptor");
  return static_cast<std::uint8_t>(static_cast<unsigned>(d.scheme) << 6 | (d.systematic ? 1u : 0u) << 5 |
                                   d.level_index);
}

Descriptor decode_descriptor(std::uint8_t byte) {
  const unsigned scheme = byte >> 6;
  if (scheme != 1 && scheme != 2) throw_error(ErrorCode::Format, "unknown scheme code in file header");
  Descriptor d;
  d.scheme = static_cast<Scheme>(scheme);
  d.systematic = (byte >> 5) & 1u;
  d.level_index = byte & 0x1f;
  if (d.scheme == Scheme::Kyber && d.systematic) throw_error(ErrorCode::Format, "variant bit set on a Kyber file");
  return d;
}

bool has_header(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= kHeaderBytes && std::equal(kMagic.begin(), kMagic.end(), bytes.begin());
}

std::vector<std::uint8_t> frame(const Descriptor& d, std::span<const std::uint8_t> payload) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(encode_descriptor(d));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Framed unframe(std::span<const std::uint8_t> bytes) {
  if (!has_header(bytes)) throw_error(ErrorCode::Format, "missing PQCLAB file header");
  return {decode_descriptor(bytes[kHeaderBytes - 1]), bytes.subspan(kHeaderBytes)};
}

}  // namespace pqclab::wire
