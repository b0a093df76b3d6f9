#pragma once

// Exact integer linear algebra on sublattices of Z^n.

#include "horofan/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace horofan::lattice {

/// Rank over Q of a multiset of vectors of common length.
std::size_t rank_of(std::span<const IntVector> vectors);

/// rank_of(vectors) equals the number of vectors, counted with multiplicity.
bool is_linearly_independent(std::span<const IntVector> vectors);

/// left * input * right == diagonal, left and right unimodular, diagonal
/// entries nonnegative with d1 | d2 | ... and zeros last.
struct SmithNormalForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix right_inverse;
  std::size_t rank = 0;

  /// The nonzero diagonal entries.
  std::vector<Integer> invariant_factors() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& a);

/// Whether the vectors are part of a Z-basis of Z^ambient_rank.
bool extends_to_basis(std::span<const IntVector> vectors, std::size_t ambient_rank);

/// Z-basis (in Hermite normal form) of span_Q(vectors) ∩ Z^n.
std::vector<IntVector> saturate(std::span<const IntVector> vectors);

/// Extends a basis of a saturated sublattice of Z^n to a basis of Z^n; only
/// the added vectors are returned.
std::vector<IntVector> complete_basis(std::span<const IntVector> basis, std::size_t ambient_rank);

/// Integer coefficients c with sum c_i basis_i == v, if they exist. `basis`
/// must be linearly independent.
std::optional<IntVector> coordinates_in(std::span<const IntVector> basis, const IntVector& v);

/// Row-style Hermite normal form of the lattice spanned by `rows`, zero rows
/// dropped.
std::vector<IntVector> hermite_basis(std::span<const IntVector> rows, std::size_t ambient_rank);

struct FGAbelianGroup {
  std::size_t free_rank = 0;
  /// Invariant factors d1 | d2 | ..., each >= 2.
  std::vector<Integer> torsion;

  bool is_free() const noexcept { return torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;
  bool operator==(const FGAbelianGroup&) const = default;
};

/// Z^rows / (column span of a).
FGAbelianGroup cokernel_structure(const IntMatrix& a);

}  // namespace horofan::lattice
