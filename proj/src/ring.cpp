#include "ring.hpp"

#include <string>

#include "error.hpp"

namespace pqclab::ring {

using fields::kQ;
using fields::zq_add;
using fields::zq_mul;
using fields::zq_pow;
using fields::zq_sub;

namespace {

constexpr Zq kZeta{17};
// 128^-1 mod q
constexpr Zq kInvHalfN{3303};

constexpr unsigned bitrev7(unsigned x) {
  unsigned r = 0;
  for (int i = 0; i < 7; ++i) r |= ((x >> i) & 1u) << (6 - i);
  return r;
}

constexpr std::array<Zq, 128> make_zetas() {
  std::array<Zq, 128> z{};
  for (unsigned i = 0; i < 128; ++i) z[i] = zq_pow(kZeta, bitrev7(i));
  return z;
}

constexpr std::array<Zq, 128> make_gammas() {
  std::array<Zq, 128> g{};
  for (unsigned i = 0; i < 128; ++i) g[i] = zq_pow(kZeta, 2 * bitrev7(i) + 1);
  return g;
}

constexpr std::array<Zq, 128> kZetas = make_zetas();
constexpr std::array<Zq, 128> kGammas = make_gammas();

static_assert(kZetas[1].value == 1729, "first NTT twiddle is 17^64 mod q");
static_assert(zq_pow(kZeta, 128).value == kQ - 1, "17 must be a primitive 256th root of unity");

void require_domain(const RingElement& p, Domain d, const char* what) {
  if (p.domain != d) throw_error(ErrorCode::InvalidArgument, std::string(what) + ": wrong domain tag");
}

bool valid_d(unsigned d) { return d == 1 || d == 4 || d == 5 || d == 10 || d == 11 || d == 12; }

}  // namespace

const std::array<Zq, 128>& ntt_zetas() { return kZetas; }

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(k_);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RingElement ntt_forward(const RingElement& p, OpCounters* ctr) {
  require_domain(p, Domain::Coefficient, "ntt_forward");
  RingElement r = p;
  auto& f = r.coeffs;
  std::size_t k = 1;
  for (std::size_t len = 128; len >= 2; len /= 2) {
    for (std::size_t start = 0; start < kN; start += 2 * len) {
      const Zq zeta = kZetas[k++];
      for (std::size_t j = start; j < start + len; ++j) {
        const Zq t = zq_mul(zeta, f[j + len]);
        f[j + len] = zq_sub(f[j], t);
        f[j] = zq_add(f[j], t);
      }
    }
  }
  r.domain = Domain::Ntt;
  tally(ctr, &OpCounters::ntt_transforms, 1);
  return r;
}

RingElement ntt_inverse(const RingElement& p, OpCounters* ctr) {
  require_domain(p, Domain::Ntt, "ntt_inverse");
  RingElement r = p;
  auto& f = r.coeffs;
  std::size_t k = 127;
  for (std::size_t len = 2; len <= 128; len *= 2) {
    for (std::size_t start = 0; start < kN; start += 2 * len) {
      const Zq zeta = kZetas[k--];
      for (std::size_t j = start; j < start + len; ++j) {
        const Zq t = f[j];
        f[j] = zq_add(t, f[j + len]);
        f[j + len] = zq_mul(zeta, zq_sub(f[j + len], t));
      }
    }
  }
  for (auto& c : f) c = zq_mul(c, kInvHalfN);
  r.domain = Domain::Coefficient;
  tally(ctr, &OpCounters::ntt_transforms, 1);
  return r;
}

RingElement poly_add(const RingElement& a, const RingElement& b, OpCounters* ctr) {
  PQCLAB_EXPECTS(a.domain == b.domain, "poly_add: mismatched domain tags");
  RingElement r;
  r.domain = a.domain;
  for (std::size_t i = 0; i < kN; ++i) r.coeffs[i] = zq_add(a.coeffs[i], b.coeffs[i]);
  tally(ctr, &OpCounters::zq_adds, kN);
  return r;
}

RingElement poly_sub(const RingElement& a, const RingElement& b, OpCounters* ctr) {
  PQCLAB_EXPECTS(a.domain == b.domain, "poly_sub: mismatched domain tags");
  RingElement r;
  r.domain = a.domain;
  for (std::size_t i = 0; i < kN; ++i) r.coeffs[i] = zq_sub(a.coeffs[i], b.coeffs[i]);
  tally(ctr, &OpCounters::zq_adds, kN);
  return r;
}

RingElement poly_mul_schoolbook(const RingElement& a, const RingElement& b, OpCounters* ctr) {
  require_domain(a, Domain::Coefficient, "poly_mul_schoolbook");
  require_domain(b, Domain::Coefficient, "poly_mul_schoolbook");
  // Accumulate positive and negative (wrapped, X^n = -1) parts separately.
  std::array<std::uint64_t, kN> pos{}, neg{};
  for (std::size_t i = 0; i < kN; ++i) {
    for (std::size_t j = 0; j < kN; ++j) {
      const std::uint64_t prod = std::uint64_t{a.coeffs[i].value} * b.coeffs[j].value;
      const std::size_t idx = i + j;
      if (idx < kN) pos[idx] += prod;
      else neg[idx - kN] += prod;
    }
  }
  RingElement r;
  for (std::size_t i = 0; i < kN; ++i) {
    r.coeffs[i] = zq_sub(Zq{static_cast<std::uint16_t>(pos[i] % kQ)},
                         Zq{static_cast<std::uint16_t>(neg[i] % kQ)});
  }
  tally(ctr, &OpCounters::zq_mults, kN * kN);
  tally(ctr, &OpCounters::zq_adds, kN * kN);
  return r;
}

RingElement poly_mul(const RingElement& a, const RingElement& b, OpCounters* ctr) {
  PQCLAB_EXPECTS(a.domain == b.domain, "poly_mul: mismatched domain tags");
  if (a.domain == Domain::Coefficient) return poly_mul_schoolbook(a, b, ctr);
  RingElement r;
  r.domain = Domain::Ntt;
  for (std::size_t i = 0; i < kN / 2; ++i) {
    const Zq a0 = a.coeffs[2 * i], a1 = a.coeffs[2 * i + 1];
    const Zq b0 = b.coeffs[2 * i], b1 = b.coeffs[2 * i + 1];
    r.coeffs[2 * i] = zq_add(zq_mul(a0, b0), zq_mul(zq_mul(a1, b1), kGammas[i]));
    r.coeffs[2 * i + 1] = zq_add(zq_mul(a0, b1), zq_mul(a1, b0));
  }
  tally(ctr, &OpCounters::zq_mults, 5 * kN / 2);
  tally(ctr, &OpCounters::zq_adds, kN);
  return r;
}

std::span<const std::uint8_t> ByteCursor::take(std::size_t n) {
  if (n > remaining()) {
    throw_error(ErrorCode::StreamExhausted,
                "needed " + std::to_string(n) + " bytes, " + std::to_string(remaining()) + " left");
  }
  auto out = bytes_.subspan(pos_, n);
  pos_ += n;
  return out;
}

RingElement cbd_sample(ByteCursor& stream, unsigned eta) {
  PQCLAB_EXPECTS(eta == 2 || eta == 3, "cbd_sample: eta must be 2 or 3");
  auto bytes = stream.take(64 * eta);
  auto bit = [&](std::size_t i) -> int { return (bytes[i / 8] >> (i % 8)) & 1; };
  RingElement r;
  for (std::size_t i = 0; i < kN; ++i) {
    int x = 0, y = 0;
    for (unsigned j = 0; j < eta; ++j) {
      x += bit(2 * i * eta + j);
      y += bit(2 * i * eta + eta + j);
    }
    r.coeffs[i] = fields::zq_from_int(x - y);
  }
  return r;
}

RingElement sample_noise(const Seed& seed, std::uint8_t nonce, unsigned eta) {
  std::array<std::uint8_t, kSeedBytes + 1> input{};
  std::copy(seed.begin(), seed.end(), input.begin());
  input[kSeedBytes] = nonce;
  auto bytes = shake256(input, 64 * eta);
  ByteCursor cursor(bytes);
  return cbd_sample(cursor, eta);
}

RingElement sample_ntt(const Seed& rho, std::uint8_t row, std::uint8_t col) {
  constexpr std::size_t kMaxRejections = 1'000'000;
  std::array<std::uint8_t, kSeedBytes + 2> input{};
  std::copy(rho.begin(), rho.end(), input.begin());
  input[kSeedBytes] = col;
  input[kSeedBytes + 1] = row;
  ShakeStream xof(ShakeStream::Variant::Shake128, input, 3 * 168);

  RingElement r;
  r.domain = Domain::Ntt;
  std::size_t filled = 0, rejected = 0;
  std::array<std::uint8_t, 3> b{};
  while (filled < kN) {
    xof.squeeze(b);
    const std::uint16_t d1 = static_cast<std::uint16_t>(b[0] | (b[1] & 0x0f) << 8);
    const std::uint16_t d2 = static_cast<std::uint16_t>(b[1] >> 4 | b[2] << 4);
    for (std::uint16_t d : {d1, d2}) {
      if (filled == kN) break;
      if (d < kQ) r.coeffs[filled++] = Zq{d};
      else if (++rejected > kMaxRejections) throw_error(ErrorCode::RejectionLimit, "sample_ntt: too many rejections");
    }
  }
  return r;
}

PolyMatrix expand_matrix(const Seed& rho, std::size_t k) {
  PQCLAB_EXPECTS(k >= 2 && k <= 4, "expand_matrix: k must be 2, 3 or 4");
  PolyMatrix a(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a.at(i, j) = sample_ntt(rho, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
  return a;
}

RingElement encode_msg(const Message& m) {
  constexpr Zq kHalf{(kQ + 1) / 2};
  RingElement r;
  for (std::size_t i = 0; i < kN; ++i) {
    const std::uint16_t bit = (m[i / 8] >> (i % 8)) & 1;
    r.coeffs[i] = Zq{static_cast<std::uint16_t>(bit * kHalf.value)};
  }
  return r;
}

Message decode_msg(const RingElement& p) {
  require_domain(p, Domain::Coefficient, "decode_msg");
  Message m{};
  for (std::size_t i = 0; i < kN; ++i) {
    m[i / 8] |= static_cast<std::uint8_t>(compress_coeff(p.coeffs[i], 1) << (i % 8));
  }
  return m;
}

std::uint16_t compress_coeff(Zq c, unsigned d) {
  const std::uint32_t scaled = (std::uint32_t{c.value} << d) + kQ / 2;
  return static_cast<std::uint16_t>((scaled / kQ) & ((1u << d) - 1));
}

Zq decompress_coeff(std::uint16_t x, unsigned d) {
  const std::uint32_t v = (std::uint32_t{x} * kQ + (1u << (d - 1))) >> d;
  return Zq{static_cast<std::uint16_t>(v)};
}

std::vector<std::uint8_t> pack_bits(const RingElement& p, unsigned d) {
  std::vector<std::uint8_t> out(32 * d, 0);
  std::size_t bitpos = 0;
  for (std::size_t i = 0; i < kN; ++i) {
    const std::uint32_t v = p.coeffs[i].value;
    for (unsigned b = 0; b < d; ++b, ++bitpos) {
      out[bitpos / 8] |= static_cast<std::uint8_t>(((v >> b) & 1u) << (bitpos % 8));
    }
  }
  return out;
}

std::array<std::uint16_t, kN> unpack_bits(std::span<const std::uint8_t> bytes, unsigned d) {
  PQCLAB_EXPECTS(bytes.size() == 32 * d, "unpack_bits: wrong input length");
  std::array<std::uint16_t, kN> out{};
  std::size_t bitpos = 0;
  for (std::size_t i = 0; i < kN; ++i) {
    std::uint16_t v = 0;
    for (unsigned b = 0; b < d; ++b, ++bitpos) {
      v |= static_cast<std::uint16_t>(((bytes[bitpos / 8] >> (bitpos % 8)) & 1u) << b);
    }
    out[i] = v;
  }
  return out;
}

std::vector<std::uint8_t> compress(const RingElement& p, unsigned d) {
  PQCLAB_EXPECTS(valid_d(d), "compress: unsupported d");
  if (d == 12) return pack_bits(p, 12);
  RingElement c;
  for (std::size_t i = 0; i < kN; ++i) c.coeffs[i] = Zq{compress_coeff(p.coeffs[i], d)};
  return pack_bits(c, d);
}

RingElement decompress(std::span<const std::uint8_t> bytes, unsigned d) {
  PQCLAB_EXPECTS(valid_d(d), "decompress: unsupported d");
  auto raw = unpack_bits(bytes, d);
  RingElement r;
  for (std::size_t i = 0; i < kN; ++i) {
    r.coeffs[i] = d == 12 ? fields::zq_reduce(raw[i]) : decompress_coeff(raw[i], d);
  }
  return r;
}

}  // namespace pqclab::ring
