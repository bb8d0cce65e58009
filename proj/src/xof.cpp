#include "xof.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <algorithm>
#include <cstring>
#include <string>

#include "error.hpp"

namespace pqclab {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;

MdCtxPtr new_ctx() {
  MdCtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx) throw_error(ErrorCode::Internal, "EVP_MD_CTX_new failed");
  return ctx;
}

void digest(const EVP_MD* md, std::span<const std::uint8_t> input,
            std::uint8_t* out, std::size_t out_len, bool xof) {
  auto ctx = new_ctx();
  if (EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1) {
    throw_error(ErrorCode::Internal, "digest init/update failed");
  }
  int ok = xof ? EVP_DigestFinalXOF(ctx.get(), out, out_len)
               : EVP_DigestFinal_ex(ctx.get(), out, nullptr);
  if (ok != 1) throw_error(ErrorCode::Internal, "digest finalization failed");
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Seed random_seed() {
  Seed s{};
  if (RAND_bytes(s.data(), static_cast<int>(s.size())) != 1) {
    throw_error(ErrorCode::Internal, "RAND_bytes failed");
  }
  return s;
}

Seed seed_from_hex(std::string_view hex) {
  if (hex.size() != 2 * kSeedBytes) {
    throw_error(ErrorCode::InvalidArgument, "seed must be 64 hex digits");
  }
  Seed s{};
  for (std::size_t i = 0; i < kSeedBytes; ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw_error(ErrorCode::InvalidArgument, "seed contains a non-hex digit");
    s[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return s;
}

std::string seed_to_hex(const Seed& seed) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * seed.size());
  for (auto b : seed) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

struct ShakeStream::Ctx {
  MdCtxPtr absorbed;
};

ShakeStream::ShakeStream(Variant variant, std::span<const std::uint8_t> input,
                         std::size_t initial_bytes)
    : ctx_(std::make_unique<Ctx>()) {
  ctx_->absorbed = new_ctx();
  const EVP_MD* md = variant == Variant::Shake128 ? EVP_shake128() : EVP_shake256();
  if (EVP_DigestInit_ex(ctx_->absorbed.get(), md, nullptr) != 1 ||
      EVP_DigestUpdate(ctx_->absorbed.get(), input.data(), input.size()) != 1) {
    throw_error(ErrorCode::Internal, "SHAKE absorb failed");
  }
  grow(std::max<std::size_t>(initial_bytes, 1));
}

ShakeStream::~ShakeStream() = default;
ShakeStream::ShakeStream(ShakeStream&&) noexcept = default;
ShakeStream& ShakeStream::operator=(ShakeStream&&) noexcept = default;

void ShakeStream::grow(std::size_t min_total) {
  std::size_t total = std::max(min_total, 2 * buffer_.size());
  auto copy = new_ctx();
  if (EVP_MD_CTX_copy_ex(copy.get(), ctx_->absorbed.get()) != 1) {
    throw_error(ErrorCode::Internal, "SHAKE context copy failed");
  }
  std::vector<std::uint8_t> out(total);
  if (EVP_DigestFinalXOF(copy.get(), out.data(), out.size()) != 1) {
    throw_error(ErrorCode::Internal, "SHAKE squeeze failed");
  }
  buffer_ = std::move(out);
}

void ShakeStream::squeeze(std::span<std::uint8_t> out) {
  if (pos_ + out.size() > buffer_.size()) grow(pos_ + out.size());
  std::memcpy(out.data(), buffer_.data() + pos_, out.size());
  pos_ += out.size();
}

std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input, std::size_t out_len) {
  std::vector<std::uint8_t> out(out_len);
  digest(EVP_shake256(), input, out.data(), out.size(), true);
  return out;
}

std::array<std::uint8_t, 64> sha3_512(std::span<const std::uint8_t> input) {
  std::array<std::uint8_t, 64> out{};
  digest(EVP_sha3_512(), input, out.data(), out.size(), false);
  return out;
}

SeededRng::SeededRng(const Seed& seed, std::string_view label) {
  prefix_.assign(seed.begin(), seed.end());
  prefix_.insert(prefix_.end(), label.begin(), label.end());
}

void SeededRng::refill() {
  std::vector<std::uint8_t> input = prefix_;
  for (int i = 0; i < 8; ++i) input.push_back(static_cast<std::uint8_t>(block_ >> (8 * i)));
  ++block_;
  digest(EVP_shake256(), input, buf_.data(), buf_.size(), true);
  pos_ = 0;
}

void SeededRng::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buf_.size()) refill();
    std::size_t n = std::min(out.size() - done, buf_.size() - pos_);
    std::memcpy(out.data() + done, buf_.data() + pos_, n);
    pos_ += n;
    done += n;
  }
}

std::uint32_t SeededRng::next_u32() {
  std::array<std::uint8_t, 4> b{};
  fill(b);
  return std::uint32_t{b[0]} | std::uint32_t{b[1]} << 8 | std::uint32_t{b[2]} << 16 |
         std::uint32_t{b[3]} << 24;
}

std::uint32_t SeededRng::uniform(std::uint32_t bound) {
  PQCLAB_EXPECTS(bound > 0, "uniform bound must be positive");
  // Largest multiple of bound that fits in 2^32.
  const std::uint64_t limit = (std::uint64_t{1} << 32) / bound * bound;
  for (;;) {
    std::uint32_t x = next_u32();
    if (x < limit) return x % bound;
  }
}

Seed SeededRng::next_seed() {
  Seed s{};
  fill(s);
  return s;
}

}  // namespace pqclab
