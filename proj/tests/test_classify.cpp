#include "horofan/classify.hpp"
#include "horofan/error.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace horofan;
using classify::ConeClassification;
using classify::Verdict;
using classify::classify_cone;
using classify::is_regular;
using classify::is_simplicial;
using classify::is_vivid;
using classify::simplicial_multiset;
using fan::ColouredCone;
using fan::ColouredFan;
using fan::ColouredLattice;
using polyhedral::Cone;
using dynkin::ComponentSpec;
using dynkin::DynkinData;
using dynkin::Family;

namespace {

IntVector v(std::initializer_list<long long> x) { return make_vector(x); }

Cone cone(std::vector<IntVector> gens, std::size_t n) { return Cone::from_generators(gens, n); }

DynkinData a_n(int n, std::vector<std::string> parabolic) {
  const std::vector<ComponentSpec> parts{{Family::A, n, ""}};
  return DynkinData::from_components(parts, 0, parabolic);
}

DynkinData toric() { return DynkinData::from_components({}, 2, {}); }

ColouredFan single(const ColouredLattice& L, const Cone& c, fan::ColourSet colours) {
  const std::vector<ColouredCone> cones{{c, std::move(colours)}};
  return fan::validate_fan(L, cones);
}

}  // namespace

TEST(Classify, MultisetCountsRepeats) {
  const ColouredLattice L(1, {"a", "b"}, {v({1}), v({1})});
  const ColouredCone sc{cone({v({1})}, 1), {0, 1}};
  EXPECT_EQ(simplicial_multiset(sc, L).size(), 2u);
  EXPECT_FALSE(is_simplicial(sc, L));
  EXPECT_FALSE(is_regular(sc, L));
}

TEST(Classify, ColourReplacesItsRay) {
  // the coloured ray contributes through u_alpha = (2,0), not through (1,0)
  const ColouredLattice L(2, {"a"}, {v({2, 0})});
  const ColouredCone sc{cone({v({1, 0}), v({0, 1})}, 2), {0}};
  EXPECT_EQ(simplicial_multiset(sc, L), (std::vector<IntVector>{v({0, 1}), v({2, 0})}));
  EXPECT_TRUE(is_simplicial(sc, L));
  EXPECT_FALSE(is_regular(sc, L));
}

TEST(Classify, InteriorColourPoint) {
  const ColouredLattice L(2, {"a"}, {v({1, 1})});
  const ColouredCone sc{cone({v({1, 0}), v({0, 1})}, 2), {0}};
  EXPECT_EQ(simplicial_multiset(sc, L).size(), 3u);
  EXPECT_FALSE(is_simplicial(sc, L));
}

TEST(Classify, A3Example) {
  const auto d = a_n(3, {"A3.1", "A3.3"});
  const ColouredLattice L(1, {"A3.2"}, {v({1})});
  const Verdict verdict = classify::classify(single(L, cone({v({1})}, 1), {0}), d);
  EXPECT_TRUE(verdict.factorial);
  EXPECT_TRUE(verdict.q_factorial);
  EXPECT_FALSE(verdict.smooth);
  EXPECT_FALSE(verdict.quotient_singularities);
  EXPECT_FALSE(verdict.vivid);
  EXPECT_FALSE(verdict.toroidal);
}

TEST(Classify, VividCones) {
  const ColouredLattice L(1, {"A3.1"}, {v({1})});
  const auto d = a_n(3, {"A3.2", "A3.3"});
  EXPECT_TRUE(is_vivid(ColouredCone{cone({v({1})}, 1), {0}}, L, d));
  EXPECT_TRUE(is_vivid(ColouredCone{cone({v({1})}, 1), {}}, L, d));
  const ColouredLattice wrong(1, {"A3.2"}, {v({1})});
  EXPECT_THROW(is_vivid(ColouredCone{cone({v({1})}, 1), {0}}, wrong, d), Error);
}

TEST(Classify, QuadricCone) {
  const ColouredLattice L(2, {}, {});
  const Verdict verdict = classify::classify(single(L, cone({v({1, 0}), v({1, 2})}, 2), {}), toric());
  EXPECT_TRUE(verdict.q_factorial);
  EXPECT_TRUE(verdict.quotient_singularities);
  EXPECT_FALSE(verdict.factorial);
  EXPECT_FALSE(verdict.smooth);
}

TEST(Classify, ProjectivePlane) {
  const ColouredLattice L(2, {}, {});
  const std::vector<ColouredCone> cones{{cone({v({1, 0}), v({0, 1})}, 2), {}},
                                        {cone({v({0, 1}), v({-1, -1})}, 2), {}},
                                        {cone({v({-1, -1}), v({1, 0})}, 2), {}}};
  const Verdict verdict = classify::classify(fan::validate_fan(L, cones), toric());
  EXPECT_TRUE(verdict.smooth && verdict.factorial && verdict.q_factorial && verdict.quotient_singularities);
  EXPECT_TRUE(verdict.vivid && verdict.toroidal && verdict.regular && verdict.simplicial);
  EXPECT_EQ(verdict.cones.size(), 7u);
}

TEST(Classify, ColourSetMustMatchDiagram) {
  const ColouredLattice L(1, {"A3.2"}, {v({1})});
  const auto f = single(L, cone({v({1})}, 1), {});
  try {
    classify::classify(f, a_n(3, {"A3.1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ColourSetMismatch);
  }
}

TEST(Classify, RegularAgreesWithMinorOracle) {
  gen::Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    const auto s = gen::random_coloured_fan(rng);
    for (const auto& sc : s.fan.cones()) {
      const auto m = simplicial_multiset(sc, s.fan.lattice());
      const bool distinct = std::set<IntVector>(m.begin(), m.end()).size() == m.size();
      EXPECT_EQ(is_simplicial(sc, s.fan.lattice()), oracle::rank(m) == m.size());
      EXPECT_EQ(is_regular(sc, s.fan.lattice()), distinct && oracle::extends_to_basis(m, s.fan.lattice().rank()));
    }
  }
}

TEST(Classify, Implications) {
  gen::Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto s = gen::random_coloured_fan(rng);
    const Verdict verdict = classify::classify(s.fan, s.diagram);
    if (verdict.smooth) EXPECT_TRUE(verdict.factorial && verdict.quotient_singularities);
    if (verdict.quotient_singularities) EXPECT_TRUE(verdict.q_factorial);
    if (verdict.factorial) EXPECT_TRUE(verdict.q_factorial);
    for (const auto& c : verdict.cones) {
      if (c.regular) EXPECT_TRUE(c.simplicial);
      if (c.toroidal) EXPECT_TRUE(c.vivid);
    }
  }
}

TEST(Classify, ToroidalFansNeedOnlySimpliciality) {
  gen::Rng rng(47);
  gen::FanOptions opt;
  opt.colour_free = true;
  opt.max_rank = 4;
  for (int t = 0; t < 80; ++t) {
    const auto s = gen::random_coloured_fan(rng, opt);
    const Verdict verdict = classify::classify(s.fan, s.diagram);
    EXPECT_EQ(verdict.quotient_singularities, verdict.q_factorial);
    EXPECT_EQ(verdict.smooth, verdict.factorial);
    EXPECT_TRUE(verdict.toroidal);
  }
}

TEST(Classify, InvariantUnderLatticeAutomorphisms) {
  gen::Rng rng(53);
  for (int t = 0; t < 80; ++t) {
    const auto s = gen::random_coloured_fan(rng);
    const auto m = gen::random_unimodular(rng, s.fan.lattice().rank());
    const auto moved = gen::transform(s.fan, m);
    const Verdict a = classify::classify(s.fan, s.diagram);
    const Verdict b = classify::classify(moved, s.diagram);
    // cone order may change with the coordinates, the global verdict may not
    EXPECT_EQ(a.q_factorial, b.q_factorial);
    EXPECT_EQ(a.factorial, b.factorial);
    EXPECT_EQ(a.smooth, b.smooth);
    EXPECT_EQ(a.quotient_singularities, b.quotient_singularities);
    EXPECT_EQ(a.vivid, b.vivid);
    EXPECT_EQ(a.cones.size(), b.cones.size());
  }
}

TEST(Classify, FlagsPassToFaces) {
  gen::Rng rng(59);
  int pairs = 0;
  for (int t = 0; t < 150; ++t) {
    const auto s = gen::random_coloured_fan(rng);
    const Verdict verdict = classify::classify(s.fan, s.diagram);
    const auto& cones = s.fan.cones();
    for (std::size_t i = 0; i < cones.size(); ++i)
      for (const auto& face : polyhedral::faces(cones[i].cone)) {
        const auto j = s.fan.find(face);
        ASSERT_TRUE(j.has_value());
        EXPECT_LE(verdict.cones[i].simplicial, verdict.cones[*j].simplicial);
        EXPECT_LE(verdict.cones[i].regular, verdict.cones[*j].regular);
        EXPECT_LE(verdict.cones[i].vivid, verdict.cones[*j].vivid);
        ++pairs;
      }
  }
  EXPECT_GT(pairs, 500);
}
