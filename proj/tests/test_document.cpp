#include "horofan/document.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace horofan;
using namespace horofan::io;

namespace {

std::string slurp(const std::string& relative) {
  std::ifstream in(std::string(HOROFAN_SOURCE_DIR) + "/" + relative);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<ParseIssue> issues_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.issues();
  }
  return {};
}

bool has_issue(std::string_view text, ErrorCode code, const std::string& path = {}) {
  for (const auto& i : issues_of(text))
    if (i.code == code && (path.empty() || i.path == path)) return true;
  return false;
}

FanDocument random_document(gen::Rng& rng) {
  using dynkin::Family;
  FanDocument doc;
  const int parts = rng.uniform(0, 3);
  for (int k = 0; k < parts; ++k) {
    const std::vector<std::pair<Family, int>> options{{Family::A, 1}, {Family::A, 4}, {Family::B, 3}, {Family::C, 2},
                                                      {Family::D, 4}, {Family::E, 6}, {Family::F, 4}, {Family::G, 2}};
    const auto [f, r] = rng.pick(options);
    doc.group.push_back({f, r, rng.chance(0.5) ? "" : "H" + std::to_string(k)});
  }
  doc.torus_rank = rng.uniform(0, 3);
  doc.lattice_rank = static_cast<std::size_t>(rng.uniform(0, 4));
  for (const auto& c : resolved_group(doc))
    for (int i = 1; i <= c.rank; ++i) {
      const std::string name = c.name + "." + std::to_string(i);
      if (rng.chance(0.4)) doc.parabolic.push_back(name);
      else doc.colour_points[name] = gen::random_vector(rng, doc.lattice_rank, 3, false);
    }
  std::vector<std::string> colours;
  for (const auto& [name, point] : doc.colour_points) colours.push_back(name);
  const int cones = rng.uniform(0, 4);
  for (int k = 0; k < cones; ++k) {
    ConeEntry e;
    const int rays = rng.uniform(0, 3);
    for (int j = 0; j < rays; ++j) {
      IntVector v = gen::random_vector(rng, doc.lattice_rank, 5, false);
      if (!v.empty() && rng.chance(0.1)) v[0] = Integer("123456789012345678901234567890") * (rng.chance(0.5) ? 1 : -1);
      e.rays.push_back(v);
    }
    for (const auto& c : colours)
      if (rng.chance(0.3)) e.colours.push_back(c);
    doc.cones.push_back(std::move(e));
  }
  return doc;
}

}  // namespace

TEST(Document, ShippedExamplesParse) {
  const FanDocument a3 = parse(slurp("fans/a3_not_vivid.json"));
  ASSERT_EQ(a3.group.size(), 1u);
  EXPECT_EQ(a3.group[0].family, dynkin::Family::A);
  EXPECT_EQ(a3.group[0].rank, 3);
  EXPECT_EQ(a3.parabolic, (std::vector<std::string>{"A3.1", "A3.3"}));
  EXPECT_EQ(a3.lattice_rank, 1u);
  EXPECT_EQ(a3.colour_points.at("A3.2"), make_vector({1}));
  ASSERT_EQ(a3.cones.size(), 1u);
  EXPECT_EQ(a3.cones[0].colours, std::vector<std::string>{"A3.2"});

  EXPECT_EQ(parse(slurp("fans/p2.json")).cones.size(), 3u);
  EXPECT_EQ(parse(slurp("fans/quadric_cone.json")).lattice_rank, 2u);
}

TEST(Document, WrongLength) {
  EXPECT_TRUE(has_issue(slurp("tests/data/wrong_length.json"), ErrorCode::DimensionMismatch, "/colour_points/A3.2"));
}

TEST(Document, UnresolvedColour) {
  EXPECT_TRUE(has_issue(slurp("tests/data/unresolved_colour.json"), ErrorCode::UnresolvedIdentifier));
}

TEST(Document, SyntaxErrorPosition) {
  const auto issues = issues_of("{\n  \"group\": []\n  \"cones\": []\n}\n");
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].code, ErrorCode::SyntaxError);
  EXPECT_EQ(issues[0].line, 3u);
  EXPECT_EQ(issues[0].column, 3u);
}

TEST(Document, SchemaProblems) {
  const std::string base = R"({"group": [{"family": "A", "rank": 2}], "lattice_rank": 1, "cones": [], )";
  EXPECT_TRUE(has_issue(base + R"("colour_points": {"A2.1": [1], "A2.2": [0]}, "extra": 1})", ErrorCode::SyntaxError, "/extra"));
  EXPECT_TRUE(has_issue(base + R"("colour_points": {"A2.1": [1]}})", ErrorCode::MissingColourPoint));
  EXPECT_TRUE(has_issue(base + R"("parabolic": ["A2.1", "A2.1"], "colour_points": {"A2.2": [1]}})", ErrorCode::BadParabolic));
  EXPECT_TRUE(has_issue(base + R"("parabolic": ["A2.1"], "colour_points": {"A2.1": [1], "A2.2": [1]}})",
                        ErrorCode::UnresolvedIdentifier, "/colour_points/A2.1"));
  EXPECT_TRUE(has_issue(R"({"group": [{"family": "D", "rank": 3}], "lattice_rank": 0, "cones": []})", ErrorCode::UnknownDiagram));
  EXPECT_TRUE(has_issue(R"({"group": [{"family": "Q", "rank": 3}], "lattice_rank": 0, "cones": []})", ErrorCode::UnknownDiagram));
  EXPECT_TRUE(has_issue(R"({"group": [], "lattice_rank": -1, "cones": []})", ErrorCode::SyntaxError, "/lattice_rank"));
  EXPECT_TRUE(has_issue(R"({"group": [], "lattice_rank": 99999999999999999999, "cones": []})", ErrorCode::SyntaxError));
  EXPECT_TRUE(has_issue(R"([1, 2])", ErrorCode::SyntaxError));
  EXPECT_TRUE(has_issue(R"({"group": [], "lattice_rank": 1, "cones": [{"rays": [[1.5]]}]})", ErrorCode::SyntaxError,
                        "/cones/0/rays/0/0"));
}

TEST(Document, RepeatedComponents) {
  const std::string two = R"({"group": [{"family": "A", "rank": 1}, {"family": "A", "rank": 1}],
    "lattice_rank": 1, "colour_points": {"A1.1": [1], "A1_2.1": [1]}, "cones": []})";
  const auto doc = parse(two);
  const auto g = resolved_group(doc);
  EXPECT_EQ(g[0].name, "A1");
  EXPECT_EQ(g[1].name, "A1_2");
  EXPECT_TRUE(has_issue(R"({"group": [{"family": "A", "rank": 1, "name": "A1"}, {"family": "A", "rank": 1}],
    "lattice_rank": 1, "colour_points": {"A1.1": [1]}, "cones": []})", ErrorCode::SyntaxError, "/group"));
}

TEST(Document, BigIntegersAsStrings) {
  const auto doc = parse(R"({"group": [], "lattice_rank": 2,
    "cones": [{"rays": [["-98765432109876543210987654321", 1], [0, 1]]}]})");
  EXPECT_EQ(doc.cones[0].rays[0][0], Integer("-98765432109876543210987654321"));
  EXPECT_EQ(parse(print(doc)), doc);
  EXPECT_NE(print(doc).find("\"-98765432109876543210987654321\""), std::string::npos);
}

TEST(Document, RoundTrip) {
  gen::Rng rng(97);
  for (int t = 0; t < 300; ++t) {
    const FanDocument doc = random_document(rng);
    const std::string text = print(doc);
    const FanDocument back = parse(text);
    ASSERT_EQ(back, doc) << text;
    EXPECT_EQ(print(back), text);
  }
}

TEST(Document, BuildReportsTheCone) {
  try {
    build(parse(slurp("tests/data/overlapping.json")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingCones);
  }
  const auto outside = R"({"group": [{"family": "A", "rank": 1}], "lattice_rank": 1,
    "colour_points": {"A1.1": [-1]}, "cones": [{"rays": [[1]], "colours": ["A1.1"]}]})";
  try {
    build(parse(outside));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ColourPointOutsideCone);
    EXPECT_EQ(std::string(e.what()).rfind("/cones/0: ", 0), 0u);
  }
}

TEST(Document, ReportsAreByteStable) {
  for (const char* file : {"fans/a3_not_vivid.json", "fans/p2.json", "fans/quadric_cone.json"}) {
    const FanDocument doc = parse(slurp(file));
    for (Command c : {Command::classify, Command::cox, Command::decolour}) {
      const Report a = run(doc, c);
      const Report b = run(parse(print(doc)), c);
      EXPECT_EQ(a.machine_text(), b.machine_text());
      EXPECT_EQ(a.text, b.text);
    }
  }
}

TEST(Document, ClassifyReport) {
  const Report r = run(parse(slurp("fans/a3_not_vivid.json")), Command::classify);
  const auto& v = r.machine["verdict"];
  EXPECT_EQ(v["factorial"], true);
  EXPECT_EQ(v["smooth"], false);
  EXPECT_EQ(v["quotient_singularities"], false);
  EXPECT_EQ(r.machine["cones"].size(), 2u);

  const Report q = run(parse(slurp("fans/quadric_cone.json")), Command::classify);
  EXPECT_EQ(q.machine["verdict"]["q_factorial"], true);
  EXPECT_EQ(q.machine["verdict"]["quotient_singularities"], true);
  EXPECT_EQ(q.machine["verdict"]["factorial"], false);
}

TEST(Document, CoxReport) {
  const Report r = run(parse(slurp("fans/p2.json")), Command::cox);
  EXPECT_EQ(r.machine["cox"]["class_group"]["text"], "Z");
  EXPECT_EQ(r.machine["cox"]["k_hat_rank"], 1);
  EXPECT_EQ(r.machine["cox"]["mu"].size(), 2u);
  EXPECT_EQ(r.machine["cox"]["basis_index"].size(), 3u);
  EXPECT_EQ(r.machine["consistency"]["holds"], true);
}

TEST(Document, LocalAndDecolour) {
  const FanDocument doc = parse(slurp("fans/a3_not_vivid.json"));
  RunOptions local;
  local.cone = 0;
  const Report l = run(doc, Command::local, local);
  EXPECT_EQ(l.machine["levi"]["components"], nlohmann::ordered_json::array({"A3"}));
  EXPECT_EQ(l.machine["local_cone"]["vivid"], false);
  local.cone = 1;
  EXPECT_THROW(run(doc, Command::local, local), Error);

  const Report d = run(doc, Command::decolour);
  EXPECT_EQ(d.machine["verdict"]["quotient_singularities"], true);
  EXPECT_EQ(parse(d.machine["document"].dump()).cones[0].colours.size(), 0u);
}
