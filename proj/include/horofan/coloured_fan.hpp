#pragma once

// Coloured lattices, coloured cones and coloured fans.

#include "horofan/integer.hpp"
#include "horofan/polyhedral.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horofan::fan {

using polyhedral::Cone;

/// Index into ColouredLattice::colours().
using ColourIndex = std::size_t;
using ColourSet = std::set<ColourIndex>;

/// A lattice N = Z^rank with the universal colour set and its colour points.
/// Colour points may coincide or vanish.
class ColouredLattice {
 public:
  ColouredLattice() = default;
  ColouredLattice(std::size_t rank, std::vector<std::string> colours, std::vector<IntVector> points);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t colour_count() const noexcept { return colours_.size(); }
  const std::vector<std::string>& colours() const noexcept { return colours_; }
  const std::string& colour_name(ColourIndex c) const { return colours_.at(c); }
  const IntVector& colour_point(ColourIndex c) const { return points_.at(c); }
  const std::vector<IntVector>& colour_points() const noexcept { return points_; }
  std::optional<ColourIndex> find(std::string_view name) const noexcept;
  ColourSet all_colours() const;

  bool operator==(const ColouredLattice&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::string> colours_;
  std::vector<IntVector> points_;
};

struct ColouredCone {
  Cone cone;
  ColourSet colours;

  bool operator==(const ColouredCone&) const = default;
};

/// Checks that every colour point of `colours` is a nonzero point of `cone`.
ColouredCone make_coloured_cone(Cone cone, ColourSet colours, const ColouredLattice& lattice);

/// The face `face` of `sc` carrying the colours whose points lie on it.
/// Throws NotAFace.
ColouredCone coloured_face(const ColouredCone& sc, const Cone& face, const ColouredLattice& lattice);

struct ColouredRays {
  /// Primitive generators u_rho of the rays whose face colour set is empty.
  std::vector<IntVector> non_coloured;
  std::vector<std::pair<IntVector, ColourSet>> coloured;
};

ColouredRays coloured_rays(const ColouredCone& sc, const ColouredLattice& lattice);

class ColouredFan {
 public:
  const ColouredLattice& lattice() const noexcept { return lattice_; }
  /// Every member, faces included, in canonical order (dimension, rays,
  /// colours); the origin is always first.
  const std::vector<ColouredCone>& cones() const noexcept { return cones_; }
  /// How many members were added by face closure rather than given.
  std::size_t added_faces() const noexcept { return added_faces_; }

  std::optional<std::size_t> find(const Cone& cone) const;
  /// Members that are not proper faces of other members.
  std::vector<std::size_t> maximal() const;
  /// u_rho for the non-coloured rays (rho, ∅) of the fan, sorted.
  std::vector<IntVector> non_coloured_rays() const;

  bool operator==(const ColouredFan& o) const { return lattice_ == o.lattice_ && cones_ == o.cones_; }

 private:
  friend ColouredFan validate_fan(const ColouredLattice&, std::span<const ColouredCone>);
  ColouredLattice lattice_;
  std::vector<ColouredCone> cones_;
  std::size_t added_faces_ = 0;
};

/// Validates the cones, adds the missing coloured faces and checks that any
/// two members meet in a common face.
ColouredFan validate_fan(const ColouredLattice& lattice, std::span<const ColouredCone> cones);

bool canonical_less(const ColouredCone& a, const ColouredCone& b);

}  // namespace horofan::fan
