#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace a2d {

// Dense matrix over GF(2). Rows are packed into 64-bit words; matrices with
// at most eight single-word rows live entirely inline.
class BitMatrix {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
  static BitMatrix identity(std::size_t n);
  // Rows given as lists of 0/1; all rows must have equal length.
  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  // Row-major 0/1 entries.
  static BitMatrix from_bits(std::size_t rows, std::size_t cols, std::span<const int> bits);
  static BitMatrix unit_column(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  // Raw row access; bits beyond cols() are always zero.
  std::span<word_type> row_words(std::size_t r);
  std::span<const word_type> row_words(std::size_t r) const;
  std::size_t words_per_row() const { return words_; }
  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  BitMatrix transpose() const;
  BitMatrix column(std::size_t c) const;
  BitMatrix select_columns(std::span<const std::size_t> cols) const;
  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& m);

  // Row-major 0/1 entries, the serialized form.
  std::vector<int> to_bits() const;
  std::string to_string() const;
  std::size_t hash() const;

  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b);
  // Lexicographic on (rows, cols, row-major bits); used for canonical ordering.
  friend bool operator<(const BitMatrix& a, const BitMatrix& b);

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  boost::container::small_vector<word_type, 8> data_;
};

std::ostream& operator<<(std::ostream& os, const BitMatrix& m);

// Reduced row echelon form together with its pivot columns.
struct Echelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(BitMatrix m);

std::size_t rank(const BitMatrix& a);

// Columns form a basis of ker A, one per free column in ascending order.
BitMatrix kernel_basis(const BitMatrix& a);

// Canonical solution of A X = B (free variables zero), or nullopt when
// the system is inconsistent.
std::optional<BitMatrix> solve(const BitMatrix& a, const BitMatrix& b);

// Basis of the column space formed by the pivot columns of A.
BitMatrix image_basis(const BitMatrix& a);

std::optional<BitMatrix> inverse(const BitMatrix& a);
bool is_invertible(const BitMatrix& a);

BitMatrix compose(const BitMatrix& a, const BitMatrix& b);
BitMatrix add(const BitMatrix& a, const BitMatrix& b);
BitMatrix direct_sum(const BitMatrix& a, const BitMatrix& b);
BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b);

// Extends the independent columns of `start` by columns drawn, in order,
// from `pool` until the span of `pool` is covered. Returns only the added
// columns.
BitMatrix complete_basis(const BitMatrix& start, const BitMatrix& pool);

// True when every column of `b` lies in the column span of `a`.
bool in_span(const BitMatrix& a, const BitMatrix& b);

// Basis of the intersection of two column spaces of the same ambient space.
BitMatrix intersect_spans(const BitMatrix& a, const BitMatrix& b);

// Column spaces equal as subspaces.
bool same_span(const BitMatrix& a, const BitMatrix& b);

// Row-major vectorization: vec(P X Q) = kronecker(P, Q^T) vec(X).
BitMatrix vectorize(const BitMatrix& m);
BitMatrix unvectorize(const BitMatrix& v, std::size_t rows, std::size_t cols);

// Every subspace of GF(2)^n, each as a matrix whose columns are the
// reduced-echelon basis. Ordered by dimension, then by pivot pattern.
std::vector<BitMatrix> enumerate_subspaces(std::size_t n);

struct BitMatrixHash {
  std::size_t operator()(const BitMatrix& m) const { return m.hash(); }
};

}  // namespace a2d
