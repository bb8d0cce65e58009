#include "gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <string>
#include <thread>

#include "error.hpp"

namespace pqclab::gf2 {

namespace {

void xor_into(Word* __restrict__ dst, const Word* __restrict__ src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t a, b;
    std::memcpy(&a, dst + i, 8);
    std::memcpy(&b, src + i, 8);
    a ^= b;
    std::memcpy(dst + i, &a, 8);
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

Word pad_mask(std::size_t bits) {
  const std::size_t used = bits % kWordBits;
  return used == 0 ? static_cast<Word>(0xff) : static_cast<Word>((1u << used) - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

BitVector BitVector::from_bytes(std::size_t len, std::span<const std::uint8_t> bytes) {
  if (bytes.size() != words_for(len)) {
    throw_error(ErrorCode::Format, "bit vector of length " + std::to_string(len) + " needs " +
                                       std::to_string(words_for(len)) + " bytes, got " + std::to_string(bytes.size()));
  }
  BitVector v(len);
  std::copy(bytes.begin(), bytes.end(), v.words_.begin());
  if (!v.words_.empty() && (v.words_.back() & ~pad_mask(len)) != 0) {
    throw_error(ErrorCode::Format, "bit vector has nonzero pad bits");
  }
  return v;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  PQCLAB_EXPECTS(len_ == o.len_, "bit vector length mismatch");
  xor_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {
  PQCLAB_EXPECTS(rows > 0 && cols > 0, "bit matrix dimensions must be positive");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_bytes(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> bytes) {
  BitMatrix m(rows, cols);
  if (bytes.size() != m.data_.size()) {
    throw_error(ErrorCode::Format, "bit matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                                       std::to_string(m.data_.size()) + " bytes, got " + std::to_string(bytes.size()));
  }
  std::copy(bytes.begin(), bytes.end(), m.data_.begin());
  const Word mask = pad_mask(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if ((m.row(r).back() & ~mask) != 0) throw_error(ErrorCode::Format, "bit matrix row has nonzero pad bits");
  }
  return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
  BitVector v(cols_);
  auto src = row(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  PQCLAB_EXPECTS(v.size() == cols_, "set_row: length mismatch");
  std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::column_block(std::size_t first, std::size_t count) const {
  PQCLAB_EXPECTS(first + count <= cols_, "column block out of range");
  BitMatrix out(rows_, count);
  if (first % kWordBits == 0) {
    for (std::size_t r = 0; r < rows_; ++r) {
      std::memcpy(out.row(r).data(), row(r).data() + first / kWordBits, out.stride_);
      out.row(r).back() &= pad_mask(count);
    }
    return out;
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c)
      if (get(r, first + c)) out.set(r, c, true);
  return out;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& a, const BitMatrix& b) {
  PQCLAB_EXPECTS(a.rows_ == b.rows_, "hconcat: row count mismatch");
  BitMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::memcpy(out.row(r).data(), a.row(r).data(), a.stride_);
    if (a.cols_ % kWordBits == 0) {
      std::memcpy(out.row(r).data() + a.stride_, b.row(r).data(), b.stride_);
    } else {
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (b.get(r, c)) out.set(r, a.cols_ + c, true);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw_error(ErrorCode::InvalidArgument, "permutation is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.map_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.map_[i] = static_cast<std::uint32_t>(i);
  return p;
}

Permutation Permutation::random(std::size_t n, SeededRng& rng) {
  Permutation p = identity(n);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.uniform(static_cast<std::uint32_t>(i));
    std::swap(p.map_[i - 1], p.map_[j]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map_.resize(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) inv.map_[map_[j]] = static_cast<std::uint32_t>(j);
  return inv;
}

Permutation Permutation::then(const Permutation& next) const {
  PQCLAB_EXPECTS(next.size() == size(), "permutation size mismatch");
  Permutation out;
  out.map_.resize(map_.size());
  for (std::size_t j = 0; j < map_.size(); ++j) out.map_[j] = map_[next.map_[j]];
  return out;
}

BitMatrix Permutation::to_matrix() const {
  BitMatrix m(size(), size());
  for (std::size_t j = 0; j < size(); ++j) m.set(map_[j], j, true);
  return m;
}

// ---------------------------------------------------------------------------

BitMatrix bm_mul(const BitMatrix& a, const BitMatrix& b, OpCounters* ctr, unsigned threads) {
  if (a.cols() != b.rows()) {
    throw_error(ErrorCode::InvalidArgument, "bm_mul: dimension mismatch " + std::to_string(a.cols()) + " vs " +
                                                std::to_string(b.rows()));
  }
  BitMatrix out(a.rows(), b.cols());
  auto work = [&](std::size_t first, std::size_t last, OpCounters& local) {
    for (std::size_t i = first; i < last; ++i) {
      Word* dst = out.row(i).data();
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.get(i, j)) {
          xor_into(dst, b.row(j).data(), b.stride());
          local.gf2_word_ops += b.stride();
        }
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, a.rows());
  std::vector<OpCounters> partial(workers);
  if (workers == 1) {
    work(0, a.rows(), partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (a.rows() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(a.rows(), w * chunk);
      const std::size_t last = std::min(a.rows(), first + chunk);
      pool.emplace_back([&, w, first, last] { work(first, last, partial[w]); });
    }
    for (auto& t : pool) t.join();
  }
  if (ctr != nullptr)
    for (const auto& p : partial) *ctr += p;
  return out;
}

BitVector bm_vec_mul(const BitVector& v, const BitMatrix& m, OpCounters* ctr) {
  if (v.size() != m.rows()) throw_error(ErrorCode::InvalidArgument, "bm_vec_mul: length mismatch");
  BitVector out(m.cols());
  std::uint64_t ops = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v.get(i)) {
      xor_into(out.words().data(), m.row(i).data(), m.stride());
      ops += m.stride();
    }
  }
  tally(ctr, &OpCounters::gf2_word_ops, ops);
  return out;
}

RrefResult bm_rref(BitMatrix m, OpCounters* ctr) {
  RrefResult res;
  std::uint64_t ops = 0;
  std::size_t r = 0;
  const std::size_t stride = m.stride();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != r) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    // Row r is zero left of column c, so only words from c/8 onward change.
    const std::size_t w0 = c / kWordBits;
    const Word* src = m.row(r).data() + w0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.get(i, c)) {
        xor_into(m.row(i).data() + w0, src, stride - w0);
        ops += stride - w0;
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.matrix = std::move(m);
  tally(ctr, &OpCounters::gf2_word_ops, ops);
  return res;
}

std::size_t bm_rank(const BitMatrix& m, OpCounters* ctr) { return bm_rref(m, ctr).rank; }

BitMatrix bm_invert(const BitMatrix& m, OpCounters* ctr) {
  if (m.rows() != m.cols()) throw_error(ErrorCode::InvalidArgument, "bm_invert: matrix is not square");
  const std::size_t n = m.rows();
  auto res = bm_rref(BitMatrix::hconcat(m, BitMatrix::identity(n)), ctr);
  if (res.rank < n || res.pivots[n - 1] != n - 1) throw_error(ErrorCode::Singular, "bm_invert: matrix is singular");
  return res.matrix.column_block(n, n);
}

BitMatrix bm_right_inverse(const BitMatrix& m, OpCounters* ctr) {
  const std::size_t k = m.rows(), n = m.cols();
  auto res = bm_rref(BitMatrix::hconcat(m, BitMatrix::identity(k)), ctr);
  if (res.rank < k || res.pivots[k - 1] >= n) {
    throw_error(ErrorCode::Singular, "bm_right_inverse: matrix does not have full row rank");
  }
  // rref([M | I]) = [E M | E]; E M has identity columns at the pivots, so
  // R = Sel * E with Sel[pivot_j][j] = 1 satisfies M R = I.
  BitMatrix e = res.matrix.column_block(n, k);
  BitMatrix r(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto src = e.row(j);
    std::copy(src.begin(), src.end(), r.row(res.pivots[j]).begin());
  }
  return r;
}

BitMatrix bm_null_space(const BitMatrix& m, OpCounters* ctr) {
  auto res = bm_rref(m, ctr);
  const std::size_t n = m.cols();
  if (res.rank == n) throw_error(ErrorCode::InvalidArgument, "bm_null_space: null space is trivial");
  std::vector<bool> is_pivot(n, false);
  for (auto p : res.pivots) is_pivot[p] = true;
  BitMatrix basis(n - res.rank, n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis.set(row, f, true);
    for (std::size_t i = 0; i < res.rank; ++i)
      if (res.matrix.get(i, f)) basis.set(row, res.pivots[i], true);
    ++row;
  }
  return basis;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SeededRng& rng) {
  BitMatrix m(rows, cols);
  const Word mask = pad_mask(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    rng.fill(m.row(r));
    m.row(r).back() &= mask;
  }
  return m;
}

BitMatrix random_invertible(std::size_t dim, SeededRng& rng, OpCounters* ctr, std::size_t* attempts) {
  PQCLAB_EXPECTS(dim >= 1, "random_invertible: dimension must be positive");
  for (std::size_t n = 1;; ++n) {
    BitMatrix m = random_matrix(dim, dim, rng);
    if (bm_rank(m, ctr) == dim) {
      if (attempts != nullptr) *attempts = n;
      return m;
    }
  }
}

BitVector perm_apply(const BitVector& v, const Permutation& p, bool inverse) {
  if (v.size() != p.size()) throw_error(ErrorCode::InvalidArgument, "perm_apply: length mismatch");
  BitVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (inverse) {
      if (v.get(j)) out.set(p[j], true);
    } else if (v.get(p[j])) {
      out.set(j, true);
    }
  }
  return out;
}

BitMatrix permute_columns(const BitMatrix& m, const Permutation& p) {
  if (m.cols() != p.size()) throw_error(ErrorCode::InvalidArgument, "permute_columns: size mismatch");
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.get(r, p[j])) out.set(r, j, true);
  return out;
}

}  // namespace pqclab::gf2
