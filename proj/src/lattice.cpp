#include "horofan/lattice.hpp"

#include "horofan/error.hpp"

#include <algorithm>
#include <utility>

namespace horofan::lattice {

namespace {

using boost::multiprecision::abs;

std::size_t common_length(std::span<const IntVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vectors of different length");
  return n;
}

void make_primitive(IntVector& v) {
  const Integer g = content(v);
  if (g > 1)
    for (auto& e : v) e /= g;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

std::size_t rank_of(std::span<const IntVector> vectors) {
  const std::size_t n = common_length(vectors);
  std::vector<IntVector> m(vectors.begin(), vectors.end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Integer a = m[rank][col];
      const Integer b = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] = a * m[i][j] - b * m[rank][j];
      make_primitive(m[i]);
    }
    ++rank;
  }
  return rank;
}

bool is_linearly_independent(std::span<const IntVector> vectors) {
  return rank_of(vectors) == vectors.size();
}

std::vector<Integer> SmithNormalForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  IntMatrix vinv = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(vinv(i, c), vinv(j, c));
  };
  // row[target] += q * row[source]
  auto add_row = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) d(target, c) += q * d(source, c);
    for (std::size_t c = 0; c < m; ++c) u(target, c) += q * u(source, c);
  };
  // col[target] += q * col[source]; the inverse picks up the opposite row op
  auto add_col = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t r = 0; r < m; ++r) d(r, target) += q * d(r, source);
    for (std::size_t r = 0; r < n; ++r) v(r, target) += q * v(r, source);
    for (std::size_t c = 0; c < n; ++c) vinv(source, c) -= q * vinv(target, c);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pr == m || abs(d(i, j)) < abs(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i)
        while (d(i, t) != 0) {
          add_row(i, t, -(d(i, t) / d(t, t)));
          if (d(i, t) != 0) swap_rows(t, i);
        }
      for (std::size_t j = t + 1; j < n; ++j)
        while (d(t, j) != 0) {
          add_col(j, t, -(d(t, j) / d(t, t)));
          if (d(t, j) != 0) swap_cols(t, j);
        }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m && column_clear; ++i) column_clear = d(i, t) == 0;
      if (!column_clear) continue;

      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }
  return SmithNormalForm{std::move(u), std::move(d), std::move(v), std::move(vinv), t};
}

bool extends_to_basis(std::span<const IntVector> vectors, std::size_t ambient_rank) {
  const std::size_t n = common_length(vectors);
  if (!vectors.empty() && n != ambient_rank)
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from the ambient rank");
  if (vectors.size() > ambient_rank) return false;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (vectors[i] == vectors[j]) return false;
  if (vectors.empty()) return true;
  const auto snf = smith_normal_form(IntMatrix::from_rows({vectors.begin(), vectors.end()}, n));
  if (snf.rank != vectors.size()) return false;
  for (const auto& f : snf.invariant_factors())
    if (f != 1) return false;
  return true;
}

std::vector<IntVector> hermite_basis(std::span<const IntVector> rows, std::size_t ambient_rank) {
  std::vector<IntVector> m(rows.begin(), rows.end());
  for (const auto& r : m)
    if (r.size() != ambient_rank) throw Error(ErrorCode::DimensionMismatch, "row length differs from the ambient rank");
  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient_rank && r < m.size(); ++col) {
    while (true) {
      std::size_t p = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][col] != 0 && (p == m.size() || abs(m[i][col]) < abs(m[p][col]))) p = i;
      if (p == m.size()) break;
      std::swap(m[r], m[p]);
      bool clear = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        const Integer q = m[i][col] / m[r][col];
        for (std::size_t j = 0; j < ambient_rank; ++j) m[i][j] -= q * m[r][j];
        if (m[i][col] != 0) clear = false;
      }
      if (clear) break;
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (auto& e : m[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(m[i][col], m[r][col]);
      if (q != 0)
        for (std::size_t j = 0; j < ambient_rank; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<IntVector> saturate(std::span<const IntVector> vectors) {
  const std::size_t n = common_length(vectors);
  if (vectors.empty()) return {};
  const auto snf = smith_normal_form(IntMatrix::from_rows({vectors.begin(), vectors.end()}, n));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < snf.rank; ++i) basis.push_back(snf.right_inverse.row(i));
  return hermite_basis(basis, n);
}

std::vector<IntVector> complete_basis(std::span<const IntVector> basis, std::size_t ambient_rank) {
  const std::size_t n = common_length(basis);
  if (basis.empty()) {
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < ambient_rank; ++i) out.push_back(IntMatrix::identity(ambient_rank).row(i));
    return out;
  }
  if (n != ambient_rank) throw Error(ErrorCode::DimensionMismatch, "basis length differs from the ambient rank");
  const auto snf = smith_normal_form(IntMatrix::from_rows({basis.begin(), basis.end()}, n));
  if (snf.rank != basis.size())
    throw Error(ErrorCode::InvalidArgument, "vectors to complete are linearly dependent");
  for (const auto& f : snf.invariant_factors())
    if (f != 1) throw Error(ErrorCode::InvalidArgument, "vectors to complete do not span a saturated sublattice");
  std::vector<IntVector> out;
  for (std::size_t i = snf.rank; i < n; ++i) out.push_back(snf.right_inverse.row(i));
  return out;
}

std::optional<IntVector> coordinates_in(std::span<const IntVector> basis, const IntVector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return IntVector{};
    return std::nullopt;
  }
  const std::size_t n = common_length(basis);
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from the basis");
  const std::size_t k = basis.size();
  const auto snf = smith_normal_form(IntMatrix::from_rows({basis.begin(), basis.end()}, n));
  if (snf.rank != k) throw Error(ErrorCode::InvalidArgument, "basis vectors are linearly dependent");
  // c * B = v  <=>  (c * U^-1) * D = v * V
  const IntVector w = snf.right.transpose().apply(v);
  IntVector y(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < k) {
      const Integer& di = snf.diagonal(i, i);
      if (w[i] % di != 0) return std::nullopt;
      y[i] = w[i] / di;
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.left.transpose().apply(y);
}

std::string FGAbelianGroup::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) append("Z/" + t.str());
  return out.empty() ? "0" : out;
}

FGAbelianGroup cokernel_structure(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  FGAbelianGroup g;
  g.free_rank = a.rows() - snf.rank;
  for (const auto& f : snf.invariant_factors())
    if (f != 1) g.torsion.push_back(f);
  return g;
}

}  // namespace horofan::lattice
