#include "a2d/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "a2d/errors.hpp"

namespace a2d {

namespace {

std::size_t words_for(std::size_t cols) { return cols == 0 ? 0 : (cols + 63) / 64; }

std::string shape(const BitMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  BitMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("from_rows: ragged rows");
    std::size_t j = 0;
    for (int v : row) m.set(i, j++, (v & 1) != 0);
    ++i;
  }
  return m;
}

BitMatrix BitMatrix::from_bits(std::size_t rows, std::size_t cols, std::span<const int> bits) {
  if (bits.size() != rows * cols) {
    throw InputError("from_bits: expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(bits.size()));
  }
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const int v = bits[i * cols + j];
      if (v != 0 && v != 1) throw InputError("from_bits: entries must be 0 or 1");
      m.set(i, j, v == 1);
    }
  }
  return m;
}

BitMatrix BitMatrix::unit_column(std::size_t n, std::size_t i) {
  BitMatrix m(n, 1);
  m.set(i, 0, true);
  return m;
}

void BitMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("BitMatrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + shape(*this));
  }
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  return (data_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  check_index(r, c);
  const word_type mask = word_type{1} << (c % kWordBits);
  word_type& w = data_[r * words_ + c / kWordBits];
  w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  check_index(r, c);
  data_[r * words_ + c / kWordBits] ^= word_type{1} << (c % kWordBits);
}

std::span<BitMatrix::word_type> BitMatrix::row_words(std::size_t r) {
  return {data_.data() + r * words_, words_};
}

std::span<const BitMatrix::word_type> BitMatrix::row_words(std::size_t r) const {
  return {data_.data() + r * words_, words_};
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t w = 0; w < words_; ++w) data_[dst * words_ + w] ^= data_[src * words_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < words_; ++w) std::swap(data_[a * words_ + w], data_[b * words_ + w]);
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](word_type w) { return w == 0; });
}

bool BitMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t w = 0; w < words_; ++w) {
      const word_type expect = (i / kWordBits == w) ? word_type{1} << (i % kWordBits) : 0;
      if (data_[i * words_ + w] != expect) return false;
    }
  }
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t w = 0; w < words_; ++w) {
      word_type bits = data_[i * words_ + w];
      while (bits != 0) {
        const std::size_t j = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        t.data_[j * t.words_ + i / kWordBits] |= word_type{1} << (i % kWordBits);
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("BitMatrix column out of range");
  BitMatrix v(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((data_[i * words_ + c / kWordBits] >> (c % kWordBits)) & 1U) v.data_[i] = 1;
  }
  return v;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
  BitMatrix m(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (c >= cols_) throw std::out_of_range("select_columns: column out of range");
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((data_[i * words_ + c / kWordBits] >> (c % kWordBits)) & 1U) {
        m.data_[i * m.words_ + k / kWordBits] |= word_type{1} << (k % kWordBits);
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  BitMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (get(r0 + i, c0 + j)) m.set(i, j, true);
    }
  }
  return m;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("set_block outside matrix");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) set(r0 + i, c0 + j, m.get(i, j));
  }
}

std::vector<int> BitMatrix::to_bits() const {
  std::vector<int> bits;
  bits.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) bits.push_back(get(i, j) ? 1 : 0);
  }
  return bits;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::size_t BitMatrix::hash() const {
  std::size_t h = rows_ * 1315423911u + cols_;
  for (word_type w : data_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InputError("add: shape mismatch " + shape(*this) + " vs " + shape(other));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] ^= other.data_[k];
  return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw InputError("compose: shape mismatch " + shape(a) + " * " + shape(b));
  }
  BitMatrix c(a.rows_, b.cols_);
  if (c.words_ == 1 && a.words_ == 1) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      BitMatrix::word_type bits = a.data_[i];
      BitMatrix::word_type acc = 0;
      while (bits != 0) {
        acc ^= b.data_[std::countr_zero(bits)];
        bits &= bits - 1;
      }
      c.data_[i] = acc;
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t w = 0; w < a.words_; ++w) {
      BitMatrix::word_type bits = a.data_[i * a.words_ + w];
      while (bits != 0) {
        const std::size_t k = w * BitMatrix::kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        for (std::size_t v = 0; v < c.words_; ++v) c.data_[i * c.words_ + v] ^= b.data_[k * b.words_ + v];
      }
    }
  }
  return c;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.to_bits() < b.to_bits();
}

std::ostream& operator<<(std::ostream& os, const BitMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ',';
      os << (m.get(i, j) ? 1 : 0);
    }
    os << ']';
  }
  return os << ']';
}

Echelon row_reduce(BitMatrix m) {
  Echelon e;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    const std::size_t w = c / BitMatrix::kWordBits;
    const BitMatrix::word_type mask = BitMatrix::word_type{1} << (c % BitMatrix::kWordBits);
    std::size_t p = lead;
    while (p < m.rows() && (m.row_words(p)[w] & mask) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, lead);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != lead && (m.row_words(r)[w] & mask) != 0) m.xor_row_into(lead, r);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const BitMatrix& a) { return row_reduce(a).pivots.size(); }

BitMatrix kernel_basis(const BitMatrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  const std::size_t nfree = a.cols() - e.pivots.size();
  BitMatrix basis(a.cols(), nfree);
  std::size_t k = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(f, k, true);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced.get(i, f)) basis.set(e.pivots[i], k, true);
    }
    ++k;
  }
  return basis;
}

std::optional<BitMatrix> solve(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) {
    throw InputError("solve: A has " + std::to_string(a.rows()) + " rows but B has " +
                     std::to_string(b.rows()));
  }
  const Echelon e = row_reduce(hconcat(a, b));
  BitMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t p = e.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (e.reduced.get(i, a.cols() + j)) x.set(p, j, true);
    }
  }
  return x;
}

BitMatrix image_basis(const BitMatrix& a) {
  const Echelon e = row_reduce(a);
  return a.select_columns(e.pivots);
}

std::optional<BitMatrix> inverse(const BitMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  const Echelon e = row_reduce(hconcat(a, BitMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const BitMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

BitMatrix compose(const BitMatrix& a, const BitMatrix& b) { return a * b; }

BitMatrix add(const BitMatrix& a, const BitMatrix& b) { return a + b; }

BitMatrix direct_sum(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(i, j)) m.set_block(i * b.rows(), j * b.cols(), b);
    }
  }
  return m;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hconcat: row mismatch " + shape(a) + " | " + shape(b));
  BitMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vconcat: column mismatch " + shape(a) + " / " + shape(b));
  BitMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

BitMatrix complete_basis(const BitMatrix& start, const BitMatrix& pool) {
  if (start.rows() != pool.rows()) throw InputError("complete_basis: ambient dimension mismatch");
  BitMatrix current = image_basis(start);
  std::size_t r = current.cols();
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < pool.cols(); ++j) {
    BitMatrix candidate = hconcat(current, pool.column(j));
    const std::size_t rc = rank(candidate);
    if (rc > r) {
      current = std::move(candidate);
      r = rc;
      chosen.push_back(j);
    }
  }
  return pool.select_columns(chosen);
}

bool in_span(const BitMatrix& a, const BitMatrix& b) { return solve(a, b).has_value(); }

BitMatrix intersect_spans(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("intersect_spans: ambient dimension mismatch");
  // x in span(a) ∩ span(b) iff x = a u = b v for some (u, v) in ker [a | b].
  const BitMatrix k = kernel_basis(hconcat(a, b));
  return image_basis(a * k.block(0, 0, a.cols(), k.cols()));
}

bool same_span(const BitMatrix& a, const BitMatrix& b) {
  return a.rows() == b.rows() && rank(a) == rank(b) && rank(hconcat(a, b)) == rank(a);
}

BitMatrix vectorize(const BitMatrix& m) {
  BitMatrix v(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.get(i, j)) v.set(i * m.cols() + j, 0, true);
    }
  }
  return v;
}

BitMatrix unvectorize(const BitMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw InputError("unvectorize: length mismatch");
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (v.get(i * cols + j, 0)) m.set(i, j, true);
    }
  }
  return m;
}

std::vector<BitMatrix> enumerate_subspaces(std::size_t n) {
  std::vector<BitMatrix> out;
  for (std::size_t r = 0; r <= n; ++r) {
    // Pivot sets of size r in lexicographic order.
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (std::size_t p : piv) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = piv[i] + 1; c < n; ++c) {
          if (!is_pivot[c]) free_slots.emplace_back(i, c);
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_slots.size()); ++mask) {
        BitMatrix rows(r, n);
        for (std::size_t i = 0; i < r; ++i) rows.set(i, piv[i], true);
        for (std::size_t s = 0; s < free_slots.size(); ++s) {
          if ((mask >> s) & 1U) rows.set(free_slots[s].first, free_slots[s].second, true);
        }
        out.push_back(rows.transpose());
      }
      if (r == 0) break;
      std::size_t i = r;
      while (i > 0 && piv[i - 1] == n - r + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace a2d
