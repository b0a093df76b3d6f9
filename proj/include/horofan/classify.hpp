#pragma once

// Simplicial, regular and vivid coloured cones, and the verdicts they imply:
// Q-factorial, factorial, smooth, quotient singularities.

#include "horofan/coloured_fan.hpp"
#include "horofan/dynkin.hpp"

#include <vector>

namespace horofan::classify {

using fan::ColouredCone;
using fan::ColouredFan;
using fan::ColouredLattice;

/// Primitive generators of the non-coloured rays plus one colour point per
/// colour of the cone, repeated points kept.
std::vector<IntVector> simplicial_multiset(const ColouredCone& sc, const ColouredLattice& lattice);

bool is_simplicial(const ColouredCone& sc, const ColouredLattice& lattice);
bool is_regular(const ColouredCone& sc, const ColouredLattice& lattice);

/// Every colour of the cone passes dynkin::vivid_colour_ok. Colours are
/// matched to diagram nodes by name; throws UnknownColour.
bool is_vivid(const ColouredCone& sc, const ColouredLattice& lattice, const dynkin::DynkinData& d);

struct ConeClassification {
  bool simplicial = false;
  bool regular = false;
  bool vivid = false;
  bool toroidal = false;

  bool operator==(const ConeClassification&) const = default;
};

struct Verdict {
  /// Parallel to ColouredFan::cones().
  std::vector<ConeClassification> cones;
  bool simplicial = false;
  bool regular = false;
  bool vivid = false;
  bool toroidal = false;

  bool q_factorial = false;
  bool factorial = false;
  bool smooth = false;
  bool quotient_singularities = false;

  bool operator==(const Verdict&) const = default;
};

ConeClassification classify_cone(const ColouredCone& sc, const ColouredLattice& lattice, const dynkin::DynkinData& d);

/// The lattice colours must be exactly S \ I of `d` (by name); throws
/// ColourSetMismatch otherwise.
Verdict classify(const ColouredFan& fan, const dynkin::DynkinData& d);

/// Throws ColourSetMismatch unless the lattice colours are exactly S \ I.
void check_colours_match(const ColouredLattice& lattice, const dynkin::DynkinData& d);

}  // namespace horofan::classify
