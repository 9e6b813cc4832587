#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "torelli/errors.hpp"

namespace torelli {

/// Arbitrary-precision integer used for all exponent and matrix
/// arithmetic; no overflow semantics anywhere in the library.
using Int = boost::multiprecision::cpp_int;

using IntVector = std::vector<Int>;

inline bool is_zero_vector(const IntVector& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

/// Dense matrix of Ints.  Only what the twist-action and kernel
/// computations need: multiply, compare, transpose, reduce mod m, and
/// exact rank by fraction-free elimination.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
      throw PreconditionError("matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& f = at(i, k);
        if (f == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out.at(i, j) += f * other.at(k, j);
      }
    }
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
  }

  /// Entrywise reduction to the range [0, m).
  IntMatrix reduced_mod(const Int& m) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) {
      Int r = data_[i] % m;
      if (r < 0) r += m;
      out.data_[i] = r;
    }
    return out;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != cols_)
      throw PreconditionError("matrix-vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  /// Rank over the rationals, computed exactly by Bareiss fraction-free
  /// elimination on an integer copy.
  std::size_t rank() const {
    IntMatrix m = *this;
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap(m.at(pivot, j), m.at(rank, j));
      for (std::size_t i = rank + 1; i < rows_; ++i) {
        for (std::size_t j = col + 1; j < cols_; ++j) {
          Int num = m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j);
          Int quot, rem;
          boost::multiprecision::divide_qr(num, prev, quot, rem);
          if (rem != 0) throw Error("internal: inexact Bareiss division");
          m.at(i, j) = quot;
        }
        m.at(i, col) = 0;
      }
      prev = m.at(rank, col);
      ++rank;
    }
    return rank;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace torelli
