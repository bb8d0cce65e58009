#pragma once

#include <cstdint>
#include <utility>

namespace pqclab {

/// Operation tallies collected by the instrumented arithmetic.
///
/// Counters are passed explicitly (as a nullable pointer) into every
/// instrumented routine; there is no global tally. A null pointer turns
/// counting off.
///
///  - zq_mults / zq_adds: modular multiplications and additions performed by
///    ring products (NTT-domain base multiplication or schoolbook) and ring
///    additions. Butterflies inside the NTT itself are accounted for by
///    ntt_transforms instead.
///  - gf2m_mults: multiplications (and squarings) in GF(2^m).
///  - gf2_word_ops: 8-bit word XOR/AND operations on bit-packed GF(2) data.
///  - ntt_transforms: forward plus inverse NTT invocations.
struct OpCounters {
  std::uint64_t zq_mults = 0;
  std::uint64_t zq_adds = 0;
  std::uint64_t gf2m_mults = 0;
  std::uint64_t gf2_word_ops = 0;
  std::uint64_t ntt_transforms = 0;

  OpCounters& operator+=(const OpCounters& o) noexcept {
    zq_mults += o.zq_mults;
    zq_adds += o.zq_adds;
    gf2m_mults += o.gf2m_mults;
    gf2_word_ops += o.gf2_word_ops;
    ntt_transforms += o.ntt_transforms;
    return *this;
  }

  friend OpCounters operator+(OpCounters a, const OpCounters& b) noexcept {
    return a += b;
  }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline void tally(OpCounters* c, std::uint64_t OpCounters::*field, std::uint64_t n) noexcept {
  if (c != nullptr) c->*field += n;
}

/// Runs `fn(OpCounters&)` against a fresh zeroed counter set and returns it.
template <class Fn>
OpCounters measure(Fn&& fn) {
  OpCounters counters;
  std::forward<Fn>(fn)(counters);
  return counters;
}

}  // namespace pqclab
