#include "horofan/integer.hpp"

#include "horofan/error.hpp"

#include <sstream>
#include <utility>

namespace horofan {

IntVector make_vector(std::initializer_list<long long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& e : v) {
    if (e != 0) g = boost::multiprecision::gcd(g, e);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                                    std::to_string(rows[r].size()) + ", expected " +
                                                    std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  return from_rows(columns, rows).transpose();
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / previous;
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace horofan
