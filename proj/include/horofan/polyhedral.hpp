#pragma once

// Strongly convex rational polyhedral cones with exact arithmetic.

#include "horofan/integer.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace horofan::polyhedral {

/// v divided by the gcd of its entries. Throws ZeroVector.
IntVector primitive(const IntVector& v);

/// Generators of {x : <a, x> >= 0 for every constraint a}: a lineality basis
/// plus one representative per extreme ray of the pointed quotient.
struct ConeGenerators {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

/// Double description method (incremental, with combinatorial adjacency).
ConeGenerators double_description(std::span<const IntVector> constraints, std::size_t dimension);

enum class Location { outside, boundary, relative_interior };

class Cone {
 public:
  /// The zero cone in Z^ambient_rank.
  explicit Cone(std::size_t ambient_rank = 0);

  /// Drops redundant generators and computes the facet description. Throws
  /// ZeroVector, DimensionMismatch or NotStronglyConvex.
  static Cone from_generators(std::span<const IntVector> generators, std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t dimension() const noexcept { return ambient_rank_ - equations_.size(); }
  /// Primitive extreme ray generators, sorted.
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  /// Inner facet normals: the cone is {x in span : <n, x> >= 0 for all n}.
  const std::vector<IntVector>& facet_normals() const noexcept { return normals_; }
  /// Basis of the orthogonal complement of the linear span.
  const std::vector<IntVector>& span_equations() const noexcept { return equations_; }

  Location locate(const IntVector& v) const;

  bool operator==(const Cone& o) const noexcept {
    return ambient_rank_ == o.ambient_rank_ && rays_ == o.rays_;
  }
  std::strong_ordering operator<=>(const Cone& o) const;

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> normals_;
  std::vector<IntVector> equations_;
};

Location contains(const Cone& c, const IntVector& v);

/// All faces, from {0} up to c itself, ordered by dimension then rays.
std::vector<Cone> faces(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

bool is_face_of(const Cone& t, const Cone& c);

}  // namespace horofan::polyhedral
