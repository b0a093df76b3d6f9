#pragma once

// Combinatorial Cox construction: the lattice N^ with one basis vector per
// B^- -stable prime divisor, the map mu: N^ -> N, the coloured fan of X^ and
// the class group, plus splitting off torus factors.

#include "horofan/classify.hpp"
#include "horofan/coloured_fan.hpp"
#include "horofan/dynkin.hpp"
#include "horofan/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace horofan::cox {

using fan::ColouredFan;

struct BasisEntry {
  enum class Kind { colour, ray, torus };
  Kind kind = Kind::colour;
  fan::ColourIndex colour = 0;  // Kind::colour
  IntVector ray;                // Kind::ray, primitive generator in N
  std::size_t torus = 0;        // Kind::torus, index into N/N'

  std::string label(const fan::ColouredLattice& lattice) const;
  bool operator==(const BasisEntry&) const = default;
};

struct CoxData {
  /// Colours in lattice order, then non-coloured rays in lexicographic order
  /// (then N/N' directions when built with torus factors).
  std::vector<BasisEntry> basis_index;
  std::size_t n_hat_rank = 0;
  /// rank(N) x n_hat_rank; column j is the image of the j-th basis vector.
  IntMatrix mu;
  /// Fan on N^ with colour points the standard basis vectors e_alpha.
  ColouredFan cox_fan;
  lattice::FGAbelianGroup class_group;
  std::size_t k_hat_rank = 0;
};

struct TorusSplit {
  /// Hermite basis of N', the saturation of the span of all rays and colour
  /// points.
  std::vector<IntVector> n_prime_basis;
  std::size_t quotient_rank = 0;
  /// The same coloured fan in coordinates of n_prime_basis.
  ColouredFan restricted_fan;
};

TorusSplit torus_split(const ColouredFan& fan);

bool has_torus_factors(const ColouredFan& fan);

/// Throws HasTorusFactors; split first.
CoxData cox_construct(const ColouredFan& fan);

/// Cox construction of X = X' x T_{N/N'}: the construction for X' with
/// N^ = N'^ x N/N' and mu = mu' x id, written in the coordinates of N.
CoxData cox_construct_with_torus_factors(const ColouredFan& fan);

struct ConsistencyReport {
  bool cox_fan_regular = false;
  bool vivid = false;
  bool cox_vivid = false;
  bool cox_smooth = false;
  /// A single maximal cone carrying every colour.
  bool affine = false;
  // only filled in for affine fans
  std::optional<bool> projective_space_product;
  std::optional<bool> cox_affine_space;

  bool holds() const noexcept;
};

/// Cross-checks vividness of X, vividness and smoothness of X^, and for
/// affine X the projective-space and affine-space clauses.
ConsistencyReport cox_consistency(const ColouredFan& fan, const dynkin::DynkinData& d);
ConsistencyReport cox_consistency(const ColouredFan& fan, const CoxData& cox, const dynkin::DynkinData& d);

}  // namespace horofan::cox
