#include "horofan/structure.hpp"

#include "horofan/classify.hpp"
#include "horofan/error.hpp"

namespace horofan::structure {

LocalModel affine_local(const ColouredCone& sc, const ColouredLattice& lattice, const dynkin::DynkinData& d) {
  classify::check_colours_match(lattice, d);
  const ColouredCone checked = fan::make_coloured_cone(sc.cone, sc.colours, lattice);

  dynkin::NodeSet nodes = d.parabolic();
  std::vector<std::string> names;
  std::vector<IntVector> points;
  fan::ColourSet reindexed;
  for (fan::ColourIndex c : checked.colours) {
    nodes.insert(*d.find(lattice.colour_name(c)));
    reindexed.insert(names.size());
    names.push_back(lattice.colour_name(c));
    points.push_back(lattice.colour_point(c));
  }
  ColouredLattice restricted(lattice.rank(), std::move(names), std::move(points));
  return LocalModel{d.induced(nodes), std::move(restricted), ColouredCone{checked.cone, std::move(reindexed)}};
}

ColouredFan decolour(const ColouredFan& fan, std::span<const std::string> keep) {
  fan::ColourSet kept;
  for (const std::string& name : keep) {
    const auto c = fan.lattice().find(name);
    if (!c) throw Error(ErrorCode::UnknownColour, "no colour named '" + name + "'");
    kept.insert(*c);
  }
  return decolour(fan, kept);
}

ColouredFan decolour(const ColouredFan& fan, const fan::ColourSet& keep) {
  std::vector<ColouredCone> cones;
  for (const auto& sc : fan.cones()) {
    fan::ColourSet colours;
    for (fan::ColourIndex c : sc.colours)
      if (keep.contains(c)) colours.insert(c);
    cones.push_back(ColouredCone{sc.cone, std::move(colours)});
  }
  return fan::validate_fan(fan.lattice(), cones);
}

}  // namespace horofan::structure
