#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace theta {

using Integer = mpz_class;

/// Dense row-major matrix over the integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t size);
  /// Block-diagonal matrix with the given square blocks.
  static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const std::vector<Integer>& entries() const { return entries_; }

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// "[[1,0],[0,1]]" style text.
std::string to_string(const IntMatrix& m);

}  // namespace theta
