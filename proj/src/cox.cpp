#include "horofan/cox.hpp"

#include "horofan/error.hpp"

#include <algorithm>

namespace horofan::cox {

namespace {

using fan::ColouredCone;
using fan::ColouredLattice;
using polyhedral::Cone;

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n);
  e[i] = 1;
  return e;
}

IntVector combination(const std::vector<IntVector>& basis, const IntVector& coefficients, std::size_t n) {
  IntVector out(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out[j] += coefficients[i] * basis[i][j];
  return out;
}

bool vector_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string BasisEntry::label(const fan::ColouredLattice& lattice) const {
  switch (kind) {
    case Kind::colour: return "colour:" + lattice.colour_name(colour);
    case Kind::ray: return "ray:" + to_string(ray);
    case Kind::torus: return "torus:" + std::to_string(torus);
  }
  return {};
}

TorusSplit torus_split(const ColouredFan& fan) {
  const ColouredLattice& lattice = fan.lattice();
  std::vector<IntVector> points;
  for (const auto& sc : fan.cones())
    points.insert(points.end(), sc.cone.rays().begin(), sc.cone.rays().end());
  for (const auto& u : lattice.colour_points())
    if (!is_zero(u)) points.push_back(u);

  TorusSplit split;
  split.n_prime_basis = lattice::saturate(points);
  const std::size_t k = split.n_prime_basis.size();
  split.quotient_rank = lattice.rank() - k;

  auto coordinates = [&](const IntVector& v) {
    auto c = lattice::coordinates_in(split.n_prime_basis, v);
    if (!c) throw Error(ErrorCode::InvalidArgument, "point " + to_string(v) + " is not in the saturated sublattice");
    return *c;
  };
  std::vector<IntVector> restricted_points;
  for (const auto& u : lattice.colour_points()) restricted_points.push_back(coordinates(u));
  const ColouredLattice restricted(k, lattice.colours(), std::move(restricted_points));

  std::vector<ColouredCone> cones;
  for (const auto& sc : fan.cones()) {
    std::vector<IntVector> rays;
    for (const auto& r : sc.cone.rays()) rays.push_back(coordinates(r));
    cones.push_back(ColouredCone{Cone::from_generators(rays, k), sc.colours});
  }
  split.restricted_fan = fan::validate_fan(restricted, cones);
  return split;
}

bool has_torus_factors(const ColouredFan& fan) { return torus_split(fan).quotient_rank > 0; }

CoxData cox_construct(const ColouredFan& fan) {
  if (has_torus_factors(fan))
    throw Error(ErrorCode::HasTorusFactors, "the fan and colour points do not span N; split off the torus factor first");
  const ColouredLattice& lattice = fan.lattice();
  const std::size_t n = lattice.rank();
  const std::size_t colours = lattice.colour_count();
  const std::vector<IntVector> rays = fan.non_coloured_rays();

  CoxData cox;
  cox.n_hat_rank = colours + rays.size();
  cox.mu = IntMatrix(n, cox.n_hat_rank);
  for (fan::ColourIndex c = 0; c < colours; ++c) {
    cox.basis_index.push_back(BasisEntry{BasisEntry::Kind::colour, c, {}, 0});
    for (std::size_t i = 0; i < n; ++i) cox.mu(i, c) = lattice.colour_point(c)[i];
  }
  for (std::size_t r = 0; r < rays.size(); ++r) {
    cox.basis_index.push_back(BasisEntry{BasisEntry::Kind::ray, 0, rays[r], 0});
    for (std::size_t i = 0; i < n; ++i) cox.mu(i, colours + r) = rays[r][i];
  }

  std::vector<IntVector> units;
  for (fan::ColourIndex c = 0; c < colours; ++c) units.push_back(unit(cox.n_hat_rank, c));
  const ColouredLattice hat(cox.n_hat_rank, lattice.colours(), units);

  std::vector<ColouredCone> cones;
  for (const auto& sc : fan.cones()) {
    std::vector<IntVector> gens;
    for (fan::ColourIndex c : sc.colours) gens.push_back(units[c]);
    for (const auto& ray : sc.cone.rays()) {
      const auto it = std::lower_bound(rays.begin(), rays.end(), ray, vector_less);
      if (it != rays.end() && *it == ray)
        gens.push_back(unit(cox.n_hat_rank, colours + static_cast<std::size_t>(it - rays.begin())));
    }
    cones.push_back(ColouredCone{Cone::from_generators(gens, cox.n_hat_rank), sc.colours});
  }
  cox.cox_fan = fan::validate_fan(hat, cones);
  cox.class_group = lattice::cokernel_structure(cox.mu.transpose());
  cox.k_hat_rank = cox.n_hat_rank - n;
  return cox;
}

CoxData cox_construct_with_torus_factors(const ColouredFan& fan) {
  const TorusSplit split = torus_split(fan);
  const CoxData inner = cox_construct(split.restricted_fan);
  const std::size_t n = fan.lattice().rank();
  const std::size_t q = split.quotient_rank;
  const std::vector<IntVector>& basis = split.n_prime_basis;
  const std::vector<IntVector> complement = lattice::complete_basis(basis, n);

  CoxData cox;
  cox.n_hat_rank = inner.n_hat_rank + q;
  cox.mu = IntMatrix(n, cox.n_hat_rank);
  for (std::size_t j = 0; j < inner.n_hat_rank; ++j) {
    const IntVector column = combination(basis, inner.mu.column(j), n);
    for (std::size_t i = 0; i < n; ++i) cox.mu(i, j) = column[i];
    BasisEntry entry = inner.basis_index[j];
    if (entry.kind == BasisEntry::Kind::ray) entry.ray = combination(basis, entry.ray, n);
    cox.basis_index.push_back(std::move(entry));
  }
  for (std::size_t t = 0; t < q; ++t) {
    for (std::size_t i = 0; i < n; ++i) cox.mu(i, inner.n_hat_rank + t) = complement[t][i];
    cox.basis_index.push_back(BasisEntry{BasisEntry::Kind::torus, 0, {}, t});
  }

  auto pad = [&](IntVector v) {
    v.resize(cox.n_hat_rank);
    return v;
  };
  const ColouredLattice& inner_lattice = inner.cox_fan.lattice();
  std::vector<IntVector> points;
  for (const auto& u : inner_lattice.colour_points()) points.push_back(pad(u));
  const ColouredLattice hat(cox.n_hat_rank, inner_lattice.colours(), std::move(points));
  std::vector<ColouredCone> cones;
  for (const auto& sc : inner.cox_fan.cones()) {
    std::vector<IntVector> rays;
    for (const auto& r : sc.cone.rays()) rays.push_back(pad(r));
    cones.push_back(ColouredCone{Cone::from_generators(rays, cox.n_hat_rank), sc.colours});
  }
  cox.cox_fan = fan::validate_fan(hat, cones);
  // The torus factor is untouched by the quotient: K^ = K^'.
  cox.class_group = inner.class_group;
  cox.k_hat_rank = cox.n_hat_rank - n;
  return cox;
}

bool ConsistencyReport::holds() const noexcept {
  if (!cox_fan_regular || vivid != cox_vivid || cox_vivid != cox_smooth) return false;
  if (affine) return projective_space_product == vivid && cox_affine_space == vivid;
  return true;
}

ConsistencyReport cox_consistency(const ColouredFan& fan, const dynkin::DynkinData& d) {
  return cox_consistency(fan, cox_construct(fan), d);
}

ConsistencyReport cox_consistency(const ColouredFan& fan, const CoxData& cox, const dynkin::DynkinData& d) {
  const classify::Verdict verdict = classify::classify(fan, d);
  const classify::Verdict hat = classify::classify(cox.cox_fan, d);

  ConsistencyReport report;
  report.cox_fan_regular = hat.regular;
  report.vivid = verdict.vivid;
  report.cox_vivid = hat.vivid;
  report.cox_smooth = hat.smooth;

  const auto top = fan.maximal();
  report.affine = top.size() == 1 && fan.cones()[top.front()].colours == fan.lattice().all_colours();
  if (report.affine) {
    report.projective_space_product = dynkin::is_projective_space_product(d);
    const auto hat_top = cox.cox_fan.maximal();
    bool orthant = hat_top.size() == 1;
    if (orthant) {
      const auto& sc = cox.cox_fan.cones()[hat_top.front()];
      std::vector<IntVector> units;
      for (std::size_t i = 0; i < cox.n_hat_rank; ++i) units.push_back(unit(cox.n_hat_rank, i));
      std::sort(units.begin(), units.end(), vector_less);
      orthant = sc.cone.rays() == units && sc.colours == cox.cox_fan.lattice().all_colours();
    }
    report.cox_affine_space = orthant && hat.smooth;
  }
  return report;
}

}  // namespace horofan::cox
