#pragma once

// Affine local structure of a coloured cone, and removing colours from a fan.

#include "horofan/coloured_fan.hpp"
#include "horofan/dynkin.hpp"

#include <span>
#include <string>

namespace horofan::structure {

using fan::ColouredCone;
using fan::ColouredFan;
using fan::ColouredLattice;

struct LocalModel {
  /// Induced on I ∪ F, parabolic I; the torus rank is carried over.
  dynkin::DynkinData levi_diagram;
  /// Same rank, colour set F with the original colour points.
  ColouredLattice restricted_lattice;
  /// The input cone, colours re-indexed into restricted_lattice.
  ColouredCone cone;
};

/// Throws ColourSetMismatch when the lattice colours are not S \ I.
LocalModel affine_local(const ColouredCone& sc, const ColouredLattice& lattice, const dynkin::DynkinData& d);

/// Same cones with every colour set intersected with `keep`. Unknown names
/// throw UnknownColour.
ColouredFan decolour(const ColouredFan& fan, std::span<const std::string> keep);
ColouredFan decolour(const ColouredFan& fan, const fan::ColourSet& keep);

}  // namespace horofan::structure
