#pragma once

// Exact integer vectors and matrices shared by every module. Nothing in the
// library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace horofan {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long long> entries);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);
/// gcd of the entries, nonnegative; 0 for the zero vector.
Integer content(const IntVector& v);
std::string to_string(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// `cols` is needed so that an empty row list still has a shape.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  IntMatrix transpose() const;
  IntVector apply(const IntVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

}  // namespace horofan
