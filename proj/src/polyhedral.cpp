#include "horofan/polyhedral.hpp"

#include "horofan/error.hpp"
#include "horofan/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace horofan::polyhedral {

namespace {

bool vector_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void normalize(IntVector& v) {
  const Integer g = content(v);
  if (g > 1)
    for (auto& e : v) e /= g;
}

IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  normalize(out);
  return out;
}

IntVector negated(const IntVector& v) {
  IntVector out(v);
  for (auto& e : out) e = -e;
  return out;
}

}  // namespace

IntVector primitive(const IntVector& v) {
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "the zero vector has no primitive generator");
  IntVector out(v);
  normalize(out);
  return out;
}

ConeGenerators double_description(std::span<const IntVector> constraints, std::size_t dimension) {
  for (const auto& a : constraints)
    if (a.size() != dimension) throw Error(ErrorCode::DimensionMismatch, "constraint length differs from the dimension");

  struct Ray {
    IntVector v;
    boost::dynamic_bitset<> tight;  // processed constraints vanishing on v
  };
  const std::size_t m = constraints.size();
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dimension; ++i) lineality.push_back(IntMatrix::identity(dimension).row(i));
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& a = constraints[k];
    auto pick = std::find_if(lineality.begin(), lineality.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pick != lineality.end()) {
      // The constraint cuts the lineality space: one lineality direction
      // becomes a ray and everything else is pushed into the hyperplane.
      IntVector l0 = *pick;
      lineality.erase(pick);
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = negated(l0);
        s0 = -s0;
      }
      for (auto& l : lineality) {
        const Integer t = dot(a, l);
        if (t != 0) l = combine(s0, l, t, l0);
      }
      for (auto& r : rays) {
        const Integer t = dot(a, r.v);
        if (t != 0) r.v = combine(s0, r.v, t, l0);
        r.tight.set(k);
      }
      Ray fresh{std::move(l0), boost::dynamic_bitset<>(m)};
      for (std::size_t j = 0; j < k; ++j) fresh.tight.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(a, rays[i].v);
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (value[i] >= 0) {
        next.push_back(rays[i]);
        if (value[i] == 0) next.back().tight.set(k);
      }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        const auto common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray joined{combine(value[p], rays[q].v, value[q], rays[p].v), common};
        joined.tight.set(k);
        next.push_back(std::move(joined));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

// ---------------------------------------------------------------------------

Cone::Cone(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {
  for (std::size_t i = 0; i < ambient_rank; ++i) equations_.push_back(IntMatrix::identity(ambient_rank).row(i));
}

Cone Cone::from_generators(std::span<const IntVector> generators, std::size_t ambient_rank) {
  std::vector<IntVector> prim;
  for (const auto& g : generators) {
    if (g.size() != ambient_rank)
      throw Error(ErrorCode::DimensionMismatch, "generator " + to_string(g) + " has length " + std::to_string(g.size()) +
                                                    ", expected " + std::to_string(ambient_rank));
    prim.push_back(primitive(g));
  }
  std::sort(prim.begin(), prim.end(), vector_less);
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

  ConeGenerators dual = double_description(prim, ambient_rank);
  {
    std::vector<IntVector> all = dual.lineality;
    all.insert(all.end(), dual.rays.begin(), dual.rays.end());
    if (lattice::rank_of(all) != ambient_rank)
      throw Error(ErrorCode::NotStronglyConvex, "generators span a cone containing a line");
  }

  std::vector<IntVector> extreme;
  for (const auto& g : prim) {
    std::vector<IntVector> tight = dual.lineality;
    for (const auto& n : dual.rays)
      if (dot(n, g) == 0) tight.push_back(n);
    if (lattice::rank_of(tight) + 1 == ambient_rank) extreme.push_back(g);
  }
  if (extreme.size() != prim.size()) dual = double_description(extreme, ambient_rank);

  Cone c(0);
  c.ambient_rank_ = ambient_rank;
  c.rays_ = std::move(extreme);
  c.normals_ = std::move(dual.rays);
  std::sort(c.normals_.begin(), c.normals_.end(), vector_less);
  c.equations_ = std::move(dual.lineality);
  return c;
}

Location Cone::locate(const IntVector& v) const {
  if (v.size() != ambient_rank_)
    throw Error(ErrorCode::DimensionMismatch, "point " + to_string(v) + " does not match the cone's ambient rank");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return Location::outside;
  bool on_facet = false;
  for (const auto& n : normals_) {
    const Integer s = dot(n, v);
    if (s < 0) return Location::outside;
    if (s == 0) on_facet = true;
  }
  return on_facet ? Location::boundary : Location::relative_interior;
}

std::strong_ordering Cone::operator<=>(const Cone& o) const {
  if (auto c = ambient_rank_ <=> o.ambient_rank_; c != 0) return c;
  const auto less = [](const IntVector& a, const IntVector& b) { return vector_less(a, b); };
  if (std::lexicographical_compare(rays_.begin(), rays_.end(), o.rays_.begin(), o.rays_.end(), less))
    return std::strong_ordering::less;
  if (std::lexicographical_compare(o.rays_.begin(), o.rays_.end(), rays_.begin(), rays_.end(), less))
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Location contains(const Cone& c, const IntVector& v) { return c.locate(v); }

std::vector<Cone> faces(const Cone& c) {
  const auto& rays = c.rays();
  const auto& normals = c.facet_normals();
  std::vector<boost::dynamic_bitset<>> on(normals.size(), boost::dynamic_bitset<>(rays.size()));
  for (std::size_t f = 0; f < normals.size(); ++f)
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (dot(normals[f], rays[r]) == 0) on[f].set(r);

  boost::dynamic_bitset<> top(rays.size());
  top.set();
  std::set<boost::dynamic_bitset<>> seen{top};
  std::deque<boost::dynamic_bitset<>> queue{top};
  while (!queue.empty()) {
    const auto face = queue.front();
    queue.pop_front();
    for (const auto& facet : on) {
      auto smaller = face & facet;
      if (smaller != face && seen.insert(smaller).second) queue.push_back(std::move(smaller));
    }
  }

  std::vector<Cone> out;
  for (const auto& face : seen) {
    std::vector<IntVector> gens;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (face.test(r)) gens.push_back(rays[r]);
    out.push_back(Cone::from_generators(gens, c.ambient_rank()));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a < b;
  });
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "intersecting cones in lattices of different rank");
  std::vector<IntVector> constraints;
  for (const Cone* c : {&a, &b}) {
    constraints.insert(constraints.end(), c->facet_normals().begin(), c->facet_normals().end());
    for (const auto& e : c->span_equations()) {
      constraints.push_back(e);
      constraints.push_back(negated(e));
    }
  }
  const ConeGenerators g = double_description(constraints, a.ambient_rank());
  return Cone::from_generators(g.rays, a.ambient_rank());
}

bool is_face_of(const Cone& t, const Cone& c) {
  if (t.ambient_rank() != c.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "comparing cones in lattices of different rank");
  const auto& rays = c.rays();
  for (const auto& r : t.rays())
    if (!std::binary_search(rays.begin(), rays.end(), r, vector_less)) return false;
  std::vector<IntVector> common;
  for (const auto& n : c.facet_normals())
    if (std::all_of(t.rays().begin(), t.rays().end(), [&](const IntVector& r) { return dot(n, r) == 0; }))
      common.push_back(n);
  std::vector<IntVector> closure;
  for (const auto& r : rays)
    if (std::all_of(common.begin(), common.end(), [&](const IntVector& n) { return dot(n, r) == 0; }))
      closure.push_back(r);
  return closure == t.rays();
}

}  // namespace horofan::polyhedral
