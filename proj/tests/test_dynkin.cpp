#include "horofan/dynkin.hpp"
#include "horofan/error.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace horofan;
using namespace horofan::dynkin;

namespace {

DynkinData diagram(std::vector<std::string> nodes, std::vector<RawEdge> edges, std::vector<std::string> parabolic = {}) {
  RawDiagram raw;
  raw.nodes = std::move(nodes);
  raw.edges = std::move(edges);
  raw.parabolic = std::move(parabolic);
  return DynkinData::validate(raw);
}

DynkinData type(Family f, int n, std::vector<int> parabolic = {}) {
  std::vector<ComponentSpec> parts{{f, n, "S"}};
  std::vector<std::string> p;
  for (int i : parabolic) p.push_back("S." + std::to_string(i));
  return DynkinData::from_components(parts, 0, p);
}

NodeId node(const DynkinData& d, const std::string& name) { return *d.find(name); }

NodeSet all_nodes(const DynkinData& d) {
  NodeSet s;
  for (NodeId v = 0; v < d.size(); ++v) s.insert(v);
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Dynkin, PathOfThreeIsA3) {
  const auto d = diagram({"a", "b", "c"}, {{"a", "b", 1, ""}, {"b", "c", 1, ""}});
  const TypeLabel t = recognize_type(d, all_nodes(d));
  EXPECT_EQ(t.name(), "A3");
  EXPECT_EQ(t.index_of(node(d, "b")), 2);
}

TEST(Dynkin, DoubleEdgeOfRankTwo) {
  const auto d = diagram({"l", "s"}, {{"l", "s", 2, "l"}});
  EXPECT_EQ(recognize_type(d, all_nodes(d)).name(), "B2");
  const TypeLabel short_first = recognize_type(d, all_nodes(d), node(d, "s"));
  EXPECT_EQ(short_first.name(), "C2");
  EXPECT_EQ(short_first.index_of(node(d, "s")), 1);
  const TypeLabel long_first = recognize_type(d, all_nodes(d), node(d, "l"));
  EXPECT_EQ(long_first.name(), "B2");
  EXPECT_EQ(long_first.index_of(node(d, "l")), 1);
}

TEST(Dynkin, StarIsD4) {
  const auto d = diagram({"c", "x", "y", "z"}, {{"c", "x", 1, ""}, {"y", "c", 1, ""}, {"c", "z", 1, ""}});
  EXPECT_EQ(recognize_type(d, all_nodes(d)).name(), "D4");
}

TEST(Dynkin, ArrowTowardTheMiddleIsC3) {
  // a - b <= c : the double edge points from the long end c to b.
  const auto d = diagram({"a", "b", "c"}, {{"a", "b", 1, ""}, {"b", "c", 2, "c"}});
  const TypeLabel t = recognize_type(d, all_nodes(d));
  EXPECT_EQ(t.name(), "C3");
  EXPECT_EQ(t.index_of(node(d, "a")), 1);
  EXPECT_EQ(t.index_of(node(d, "c")), 3);

  const auto b = diagram({"a", "b", "c"}, {{"a", "b", 1, ""}, {"b", "c", 2, "b"}});
  EXPECT_EQ(recognize_type(b, all_nodes(b)).name(), "B3");
}

TEST(Dynkin, SingleNodeIsA1) {
  const auto d = diagram({"a"}, {});
  EXPECT_EQ(recognize_type(d, all_nodes(d)).name(), "A1");
}

TEST(Dynkin, RejectsBadInput) {
  EXPECT_EQ(code_of([] { diagram({"a", "b", "c"}, {{"a", "b", 1, ""}, {"b", "c", 1, ""}, {"c", "a", 1, ""}}); }),
            ErrorCode::UnknownDiagram);
  EXPECT_EQ(code_of([] { diagram({"a", "b"}, {{"a", "b", 4, "a"}}); }), ErrorCode::BadEdge);
  EXPECT_EQ(code_of([] { diagram({"a", "b"}, {{"a", "b", 1, "a"}}); }), ErrorCode::BadEdge);
  EXPECT_EQ(code_of([] { diagram({"a", "b"}, {{"a", "b", 2, ""}}); }), ErrorCode::BadEdge);
  EXPECT_EQ(code_of([] { diagram({"a", "b"}, {{"a", "b", 1, ""}, {"b", "a", 1, ""}}); }), ErrorCode::BadEdge);
  EXPECT_EQ(code_of([] { diagram({"a"}, {{"a", "q", 1, ""}}); }), ErrorCode::UnknownNode);
  EXPECT_EQ(code_of([] { diagram({"a"}, {}, {"q"}); }), ErrorCode::BadParabolic);
  // triple edge inside a longer chain
  EXPECT_EQ(code_of([] { diagram({"a", "b", "c"}, {{"a", "b", 1, ""}, {"b", "c", 3, "b"}}); }),
            ErrorCode::UnknownDiagram);
  EXPECT_EQ(code_of([] { type(Family::D, 3); }), ErrorCode::UnknownDiagram);
  const auto d = type(Family::A, 3);
  EXPECT_EQ(code_of([&] { recognize_type(d, {node(d, "S.1"), node(d, "S.3")}); }), ErrorCode::UnknownDiagram);
}

TEST(Dynkin, ConnectedComponents) {
  const auto a3 = type(Family::A, 3);
  EXPECT_EQ(a3.connected_component(node(a3, "S.2")).size(), 3u);

  const std::vector<ComponentSpec> two{{Family::A, 1, "P"}, {Family::A, 1, "Q"}};
  const auto a1a1 = DynkinData::from_components(two, 0, {});
  EXPECT_EQ(a1a1.connected_component(node(a1a1, "P.1")), NodeSet{node(a1a1, "P.1")});

  const std::vector<ComponentSpec> pair{{Family::A, 2, "P"}, {Family::A, 2, "Q"}};
  const auto a2a2 = DynkinData::from_components(pair, 0, {});
  EXPECT_EQ(a2a2.connected_component(node(a2a2, "Q.1")), (NodeSet{node(a2a2, "Q.1"), node(a2a2, "Q.2")}));
  EXPECT_EQ(a2a2.components().size(), 2u);
  EXPECT_EQ(code_of([&] { a2a2.connected_component(17); }), ErrorCode::UnknownNode);
}

TEST(Dynkin, InducedKeepsEdgesAndParabolic) {
  const auto b4 = type(Family::B, 4, {1, 4});
  const auto sub = b4.induced({node(b4, "S.3"), node(b4, "S.4"), node(b4, "S.1")});
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_EQ(sub.multiplicity(node(sub, "S.3"), node(sub, "S.4")), 2);
  EXPECT_EQ(sub.long_end(node(sub, "S.3"), node(sub, "S.4")), node(sub, "S.3"));
  EXPECT_EQ(sub.parabolic(), (NodeSet{node(sub, "S.1"), node(sub, "S.4")}));
  EXPECT_EQ(sub.components().size(), 2u);
}

TEST(Dynkin, EveryStandardDiagramIsRecognised) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= 8; ++n) {
      if (!is_valid_rank(f, n)) continue;
      const auto d = type(f, n);
      const auto labels = labelings(d, all_nodes(d));
      ASSERT_FALSE(labels.empty());
      bool identity = false;
      for (const auto& l : labels) {
        std::vector<NodeId> id(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = static_cast<NodeId>(i);
        if (l.family == f && l.numbering == id) identity = true;
      }
      EXPECT_TRUE(identity) << static_cast<char>(f) << n;

      std::vector<NodeId> nodes;
      for (NodeId v = 0; v < d.size(); ++v) nodes.push_back(v);
      std::set<std::pair<Family, int>> expected, got;
      for (const auto& t : oracle::matching_templates(d, nodes)) expected.insert({t.family, t.rank});
      for (const auto& l : labels) got.insert({l.family, l.rank});
      EXPECT_EQ(got, expected) << static_cast<char>(f) << n;
    }
}

TEST(Dynkin, RecognitionIsInvariantUnderRelabelling) {
  gen::Rng rng(7);
  for (int t = 0; t < 150; ++t) {
    const auto d = gen::random_diagram(rng, 8);
    std::vector<std::size_t> image;
    const auto r = gen::relabel(rng, d, image);
    for (const NodeSet& comp : d.components()) {
      NodeSet moved;
      for (NodeId v : comp) moved.insert(*r.find("x" + std::to_string(image[v])));
      const auto a = recognize_type(d, comp);
      const auto b = recognize_type(r, moved);
      EXPECT_EQ(a.family, b.family);
      EXPECT_EQ(a.rank, b.rank);
      EXPECT_EQ(labelings(d, comp).size(), labelings(r, moved).size());
    }
  }
}

TEST(Dynkin, VividExamples) {
  {
    const auto d = type(Family::A, 3, {2, 3});
    const NodeId a1 = node(d, "S.1");
    EXPECT_TRUE(vivid_colour_ok(d, {a1}, a1));
  }
  {
    const auto d = type(Family::A, 3, {1, 3});
    const NodeId a2 = node(d, "S.2");
    EXPECT_FALSE(vivid_colour_ok(d, {a2}, a2));
  }
  {
    const auto d = type(Family::A, 2);
    const NodeId a1 = node(d, "S.1"), a2 = node(d, "S.2");
    EXPECT_FALSE(vivid_colour_ok(d, {a1, a2}, a1));
  }
  {
    // long root in I, the short colour is the first root of C2
    const auto d = diagram({"l", "s"}, {{"l", "s", 2, "l"}}, {"l"});
    EXPECT_TRUE(vivid_colour_ok(d, {node(d, "s")}, node(d, "s")));
    const auto e = diagram({"l", "s"}, {{"l", "s", 2, "l"}}, {"s"});
    EXPECT_FALSE(vivid_colour_ok(e, {node(e, "l")}, node(e, "l")));
  }
  {
    // two separate A-type neighbours in I
    const auto d = type(Family::D, 4, {1, 3, 4});
    EXPECT_FALSE(vivid_colour_ok(d, {node(d, "S.2")}, node(d, "S.2")));
    const auto e = type(Family::D, 4, {2, 3, 4});
    EXPECT_FALSE(vivid_colour_ok(e, {node(e, "S.1")}, node(e, "S.1")));
    const auto g = type(Family::G, 2, {2});
    EXPECT_FALSE(vivid_colour_ok(g, {node(g, "S.1")}, node(g, "S.1")));
    const auto c = type(Family::C, 3, {2, 3});
    EXPECT_TRUE(vivid_colour_ok(c, {node(c, "S.1")}, node(c, "S.1")));
    const auto b = type(Family::B, 3, {2, 3});
    EXPECT_FALSE(vivid_colour_ok(b, {node(b, "S.1")}, node(b, "S.1")));
  }
}

TEST(Dynkin, VividRejectsNonColours) {
  const auto d = type(Family::A, 3, {1, 3});
  const NodeId a1 = node(d, "S.1"), a2 = node(d, "S.2");
  EXPECT_EQ(code_of([&] { vivid_colour_ok(d, {a2}, a1); }), ErrorCode::UnknownColour);
  EXPECT_EQ(code_of([&] { vivid_colour_ok(d, {a1}, a1); }), ErrorCode::UnknownColour);
  EXPECT_EQ(code_of([&] { vivid_colour_ok(d, {a1, a2}, a2); }), ErrorCode::UnknownColour);
}

TEST(Dynkin, VividMatchesTypeARuleExhaustively) {
  for (int n = 1; n <= 8; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> p;
      std::set<int> parabolic;
      for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1) {
          p.push_back(i);
          parabolic.insert(i);
        }
      const auto d = type(Family::A, n, p);
      for (int i = 1; i <= n; ++i) {
        if (parabolic.contains(i)) continue;
        const NodeId a = node(d, "S." + std::to_string(i));
        EXPECT_EQ(vivid_colour_ok(d, {a}, a), oracle::type_a_vivid(n, parabolic, {i})) << "n=" << n << " i=" << i;
        for (int j = i + 1; j <= n; ++j) {
          if (parabolic.contains(j)) continue;
          const NodeId b = node(d, "S." + std::to_string(j));
          EXPECT_FALSE(vivid_colour_ok(d, {a, b}, a));
        }
      }
    }
}

TEST(Dynkin, VividDependsOnlyOnTheComponent) {
  gen::Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto d = gen::random_diagram(rng, 6);
    const NodeSet colours = d.colours();
    if (colours.empty()) continue;
    NodeSet f;
    for (NodeId c : colours)
      if (rng.chance(0.5)) f.insert(c);
    if (f.empty()) continue;
    for (NodeId alpha : f) {
      const NodeSet comp = d.connected_component(alpha);
      const auto local = d.induced(comp);
      NodeSet local_f;
      for (NodeId c : f)
        if (comp.contains(c)) local_f.insert(*local.find(d.name(c)));
      EXPECT_EQ(vivid_colour_ok(d, f, alpha), vivid_colour_ok(local, local_f, *local.find(d.name(alpha))));
    }
  }
}

TEST(Dynkin, ProjectiveSpaceProducts) {
  EXPECT_TRUE(is_projective_space_product(type(Family::A, 2, {2})));
  EXPECT_FALSE(is_projective_space_product(type(Family::A, 3, {1, 3})));
  EXPECT_TRUE(is_projective_space_product(type(Family::E, 8, {1, 2, 3, 4, 5, 6, 7, 8})));
  EXPECT_TRUE(is_projective_space_product(type(Family::C, 4, {2, 3, 4})));
  EXPECT_FALSE(is_projective_space_product(type(Family::B, 4, {2, 3, 4})));

  gen::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto d = gen::random_diagram(rng, 7);
    bool all = true;
    for (NodeId a : d.colours()) all = all && vivid_colour_ok(d, d.colours(), a);
    EXPECT_EQ(is_projective_space_product(d), all);
  }
}
