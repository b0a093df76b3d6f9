#include "horofan/classify.hpp"

#include "horofan/error.hpp"
#include "horofan/lattice.hpp"

#include <set>
#include <string>

namespace horofan::classify {

std::vector<IntVector> simplicial_multiset(const ColouredCone& sc, const ColouredLattice& lattice) {
  std::vector<IntVector> out = fan::coloured_rays(sc, lattice).non_coloured;
  for (fan::ColourIndex c : sc.colours) out.push_back(lattice.colour_point(c));
  return out;
}

bool is_simplicial(const ColouredCone& sc, const ColouredLattice& lattice) {
  return lattice::is_linearly_independent(simplicial_multiset(sc, lattice));
}

bool is_regular(const ColouredCone& sc, const ColouredLattice& lattice) {
  return lattice::extends_to_basis(simplicial_multiset(sc, lattice), lattice.rank());
}

bool is_vivid(const ColouredCone& sc, const ColouredLattice& lattice, const dynkin::DynkinData& d) {
  dynkin::NodeSet nodes;
  for (fan::ColourIndex c : sc.colours) {
    const auto node = d.find(lattice.colour_name(c));
    if (!node || d.in_parabolic(*node))
      throw Error(ErrorCode::UnknownColour, "'" + lattice.colour_name(c) + "' is not a colour of the diagram");
    nodes.insert(*node);
  }
  for (dynkin::NodeId alpha : nodes)
    if (!dynkin::vivid_colour_ok(d, nodes, alpha)) return false;
  return true;
}

void check_colours_match(const ColouredLattice& lattice, const dynkin::DynkinData& d) {
  std::set<std::string> expected;
  for (dynkin::NodeId v : d.colours()) expected.insert(d.name(v));
  const std::set<std::string> actual(lattice.colours().begin(), lattice.colours().end());
  if (expected != actual || actual.size() != lattice.colour_count())
    throw Error(ErrorCode::ColourSetMismatch, "lattice colours differ from the simple roots outside the parabolic");
}

ConeClassification classify_cone(const ColouredCone& sc, const ColouredLattice& lattice, const dynkin::DynkinData& d) {
  ConeClassification c;
  c.simplicial = is_simplicial(sc, lattice);
  c.regular = is_regular(sc, lattice);
  c.vivid = is_vivid(sc, lattice, d);
  c.toroidal = sc.colours.empty();
  return c;
}

Verdict classify(const ColouredFan& fan, const dynkin::DynkinData& d) {
  check_colours_match(fan.lattice(), d);
  Verdict v;
  v.simplicial = v.regular = v.vivid = v.toroidal = true;
  bool smooth = true;
  bool quotient = true;
  for (const auto& sc : fan.cones()) {
    const ConeClassification c = classify_cone(sc, fan.lattice(), d);
    v.cones.push_back(c);
    v.simplicial = v.simplicial && c.simplicial;
    v.regular = v.regular && c.regular;
    v.vivid = v.vivid && c.vivid;
    v.toroidal = v.toroidal && c.toroidal;
    smooth = smooth && c.regular && c.vivid;
    quotient = quotient && c.simplicial && c.vivid;
  }
  v.q_factorial = v.simplicial;
  v.factorial = v.regular;
  v.smooth = smooth;
  v.quotient_singularities = quotient;
  return v;
}

}  // namespace horofan::classify
