#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond BitMatrix get/set and matrix multiplication.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "a2d/comodule.hpp"

namespace oracle {

using a2d::BitMatrix;

inline BitMatrix matrix_from_index(std::size_t rows, std::size_t cols, std::uint64_t index) {
  BitMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, (index >> (i * cols + j)) & 1U);
  }
  return a;
}

inline std::vector<BitMatrix> all_matrices(std::size_t rows, std::size_t cols) {
  std::vector<BitMatrix> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << (rows * cols)); ++k) out.push_back(matrix_from_index(rows, cols, k));
  return out;
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BitMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.set(i, j, rng() & 1U);
  }
  return a;
}

// Column vector as an integer, bit i = entry i.
inline std::uint64_t as_int(const BitMatrix& v) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < v.rows(); ++i) x |= std::uint64_t{v.get(i, 0)} << i;
  return x;
}

// Every vector in the column span.
inline std::set<std::uint64_t> span(const BitMatrix& a) {
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.cols()); ++mask) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if ((mask >> j) & 1U) v ^= as_int(a.column(j));
    }
    out.insert(v);
  }
  return out;
}

inline std::size_t rank(const BitMatrix& a) {
  const std::size_t size = span(a).size();
  std::size_t r = 0;
  while ((std::size_t{1} << r) < size) ++r;
  return r;
}

// All A with A d_src = d_dst A, by filtering every matrix of the right shape.
inline std::vector<BitMatrix> hom(const a2d::Comodule& src, const a2d::Comodule& dst) {
  std::vector<BitMatrix> out;
  for (const auto& a : all_matrices(dst.dim(), src.dim())) {
    if (a * src.d() == dst.d() * a) out.push_back(a);
  }
  return out;
}

inline bool invertible(const BitMatrix& a) { return a.rows() == a.cols() && oracle::rank(a) == a.rows(); }

// Square-zero n x n matrices.
inline std::vector<BitMatrix> square_zero(std::size_t n) {
  std::vector<BitMatrix> out;
  for (const auto& d : all_matrices(n, n)) {
    if ((d * d).is_zero()) out.push_back(d);
  }
  return out;
}

}  // namespace oracle
