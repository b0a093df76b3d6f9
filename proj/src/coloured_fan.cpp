#include "horofan/coloured_fan.hpp"

#include "horofan/error.hpp"

#include <algorithm>
#include <map>

namespace horofan::fan {

using polyhedral::Location;

ColouredLattice::ColouredLattice(std::size_t rank, std::vector<std::string> colours, std::vector<IntVector> points)
    : rank_(rank), colours_(std::move(colours)), points_(std::move(points)) {
  if (colours_.size() != points_.size())
    throw Error(ErrorCode::InvalidArgument, "every colour needs exactly one colour point");
  for (std::size_t i = 0; i < colours_.size(); ++i) {
    if (colours_[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty colour name");
    for (std::size_t j = 0; j < i; ++j)
      if (colours_[i] == colours_[j]) throw Error(ErrorCode::InvalidArgument, "duplicate colour '" + colours_[i] + "'");
    if (points_[i].size() != rank_)
      throw Error(ErrorCode::DimensionMismatch, "colour point of '" + colours_[i] + "' has length " +
                                                    std::to_string(points_[i].size()) + ", lattice rank is " +
                                                    std::to_string(rank_));
  }
}

std::optional<ColourIndex> ColouredLattice::find(std::string_view name) const noexcept {
  for (ColourIndex i = 0; i < colours_.size(); ++i)
    if (colours_[i] == name) return i;
  return std::nullopt;
}

ColourSet ColouredLattice::all_colours() const {
  ColourSet all;
  for (ColourIndex i = 0; i < colours_.size(); ++i) all.insert(i);
  return all;
}

ColouredCone make_coloured_cone(Cone cone, ColourSet colours, const ColouredLattice& lattice) {
  if (cone.ambient_rank() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch, "cone lives in rank " + std::to_string(cone.ambient_rank()) +
                                                  ", lattice rank is " + std::to_string(lattice.rank()));
  for (ColourIndex c : colours) {
    if (c >= lattice.colour_count())
      throw Error(ErrorCode::UnknownColour, "colour index " + std::to_string(c) + " out of range");
    const IntVector& u = lattice.colour_point(c);
    if (is_zero(u))
      throw Error(ErrorCode::ZeroColourPoint, "colour '" + lattice.colour_name(c) + "' has colour point 0");
    if (cone.locate(u) == Location::outside)
      throw Error(ErrorCode::ColourPointOutsideCone,
                  "colour point " + to_string(u) + " of '" + lattice.colour_name(c) + "' is not in the cone");
  }
  return ColouredCone{std::move(cone), std::move(colours)};
}

ColouredCone coloured_face(const ColouredCone& sc, const Cone& face, const ColouredLattice& lattice) {
  if (!polyhedral::is_face_of(face, sc.cone)) throw Error(ErrorCode::NotAFace, "cone is not a face of the coloured cone");
  ColourSet kept;
  for (ColourIndex c : sc.colours)
    if (face.locate(lattice.colour_point(c)) != Location::outside) kept.insert(c);
  return ColouredCone{face, std::move(kept)};
}

ColouredRays coloured_rays(const ColouredCone& sc, const ColouredLattice& lattice) {
  ColouredRays out;
  for (const IntVector& ray : sc.cone.rays()) {
    ColourSet on_ray;
    for (ColourIndex c : sc.colours) {
      const IntVector& u = lattice.colour_point(c);
      if (!is_zero(u) && polyhedral::primitive(u) == ray) on_ray.insert(c);
    }
    if (on_ray.empty()) out.non_coloured.push_back(ray);
    else out.coloured.emplace_back(ray, std::move(on_ray));
  }
  return out;
}

bool canonical_less(const ColouredCone& a, const ColouredCone& b) {
  if (a.cone.dimension() != b.cone.dimension()) return a.cone.dimension() < b.cone.dimension();
  if (a.cone != b.cone) return a.cone < b.cone;
  return a.colours < b.colours;
}

std::optional<std::size_t> ColouredFan::find(const Cone& cone) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].cone == cone) return i;
  return std::nullopt;
}

std::vector<std::size_t> ColouredFan::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < cones_.size() && !covered; ++j)
      covered = cones_[j].cone.dimension() > cones_[i].cone.dimension() &&
                polyhedral::is_face_of(cones_[i].cone, cones_[j].cone);
    if (!covered) out.push_back(i);
  }
  return out;
}

std::vector<IntVector> ColouredFan::non_coloured_rays() const {
  std::vector<IntVector> out;
  for (const auto& sc : cones_)
    if (sc.cone.dimension() == 1 && sc.colours.empty()) out.push_back(sc.cone.rays().front());
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

ColouredFan validate_fan(const ColouredLattice& lattice, std::span<const ColouredCone> cones) {
  std::map<Cone, ColourSet> members;
  auto admit = [&](const Cone& cone, const ColourSet& colours) {
    auto [it, fresh] = members.emplace(cone, colours);
    if (!fresh && it->second != colours)
      throw Error(ErrorCode::InconsistentColours,
                  "cone with rays " + [&] {
                    std::string s;
                    for (const auto& r : cone.rays()) s += to_string(r);
                    return s.empty() ? std::string("{0}") : s;
                  }() + " carries two different colour sets");
  };

  std::vector<ColouredCone> given;
  for (const ColouredCone& sc : cones) {
    ColouredCone checked = make_coloured_cone(sc.cone, sc.colours, lattice);
    if (std::find(given.begin(), given.end(), checked) != given.end()) continue;
    admit(checked.cone, checked.colours);
    given.push_back(std::move(checked));
  }

  for (std::size_t i = 0; i < given.size(); ++i)
    for (std::size_t j = i + 1; j < given.size(); ++j) {
      const Cone meet = polyhedral::intersect(given[i].cone, given[j].cone);
      if (!polyhedral::is_face_of(meet, given[i].cone) || !polyhedral::is_face_of(meet, given[j].cone))
        throw Error(ErrorCode::OverlappingCones, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                                     " do not meet in a common face");
    }

  for (const ColouredCone& sc : given)
    for (const Cone& f : polyhedral::faces(sc.cone)) admit(f, coloured_face(sc, f, lattice).colours);
  admit(Cone(lattice.rank()), {});

  ColouredFan fan;
  fan.lattice_ = lattice;
  for (auto& [cone, colours] : members) fan.cones_.push_back(ColouredCone{cone, colours});
  std::sort(fan.cones_.begin(), fan.cones_.end(), canonical_less);
  fan.added_faces_ = fan.cones_.size() - given.size();
  return fan;
}

}  // namespace horofan::fan
