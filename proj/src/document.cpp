#include "horofan/document.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace horofan::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string default_name(const dynkin::ComponentSpec& c) {
  return std::string(1, static_cast<char>(c.family)) + std::to_string(c.rank);
}

bool is_decimal(const std::string& s) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  return s.size() > start && std::all_of(s.begin() + start, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

class Reader {
 public:
  std::vector<ParseIssue> issues;

  void fail(ErrorCode code, const std::string& path, const std::string& message) {
    issues.push_back(ParseIssue{code, message, path.empty() ? "/" : path, 0, 0});
  }

  const json* member(const json& object, const std::string& path, const char* key, bool required = true) {
    const auto it = object.find(key);
    if (it == object.end()) {
      if (required) fail(ErrorCode::SyntaxError, path, std::string("missing key '") + key + "'");
      return nullptr;
    }
    return &*it;
  }

  std::optional<Integer> integer(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
      return Integer(v.get<std::int64_t>());
    }
    if (v.is_string() && is_decimal(v.get<std::string>())) return Integer(v.get<std::string>());
    fail(ErrorCode::SyntaxError, path, "expected an integer");
    return std::nullopt;
  }

  std::optional<long long> small(const json& v, const std::string& path, long long lo, long long hi) {
    if (!v.is_number_integer()) {
      fail(ErrorCode::SyntaxError, path, "expected an integer");
      return std::nullopt;
    }
    const long long x = v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi)
                            ? hi + 1
                            : v.get<long long>();
    if (x < lo || x > hi) {
      fail(ErrorCode::SyntaxError, path, "value out of range");
      return std::nullopt;
    }
    return x;
  }

  std::optional<std::string> string(const json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    fail(ErrorCode::SyntaxError, path, "expected a string");
    return std::nullopt;
  }

  bool array(const json& v, const std::string& path) {
    if (v.is_array()) return true;
    fail(ErrorCode::SyntaxError, path, "expected an array");
    return false;
  }

  std::optional<IntVector> vector(const json& v, const std::string& path, std::optional<std::size_t> length) {
    if (!array(v, path)) return std::nullopt;
    IntVector out;
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto x = integer(v[i], path + "/" + std::to_string(i));
      if (x) out.push_back(*x);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    if (length && out.size() != *length) {
      fail(ErrorCode::DimensionMismatch, path,
           "vector has length " + std::to_string(out.size()) + ", lattice rank is " + std::to_string(*length));
      return std::nullopt;
    }
    return out;
  }
};

// nlohmann reports the byte after the last character read; step back to the
// start of the token that was being read.
std::size_t token_start(std::string_view text, std::size_t byte) {
  std::size_t i = std::min(byte, text.size());
  auto word = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '.'; };
  while (i > 0 && (text[i - 1] == ' ' || text[i - 1] == '\t')) --i;
  if (i > 0 && text[i - 1] == '"') {
    std::size_t j = i - 1;
    while (j > 0 && !(text[j - 1] == '"' && (j < 2 || text[j - 2] != '\\'))) --j;
    return j > 0 ? j : i;
  }
  while (i > 0 && word(text[i - 1])) --i;
  return i + 1;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string pointer_escape(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

std::string first_message(const std::vector<ParseIssue>& issues) {
  std::string s = issues.empty() ? "parse error" : issues.front().to_string();
  if (issues.size() > 1) s += " (and " + std::to_string(issues.size() - 1) + " more)";
  return s;
}

}  // namespace

std::string ParseIssue::to_string() const {
  std::string s(error_code_name(code));
  if (line > 0) s += " at line " + std::to_string(line) + ", column " + std::to_string(column);
  else if (!path.empty()) s += " at " + path;
  return s + ": " + message;
}

ParseError::ParseError(std::vector<ParseIssue> issues)
    : Error(issues.empty() ? ErrorCode::SyntaxError : issues.front().code, first_message(issues)),
      issues_(std::move(issues)) {}

std::vector<dynkin::ComponentSpec> resolved_group(const FanDocument& doc) {
  std::vector<dynkin::ComponentSpec> out = doc.group;
  std::map<std::string, int> seen;
  for (auto& c : out) {
    if (!c.name.empty()) continue;
    const std::string base = default_name(c);
    const int k = ++seen[base];
    c.name = k == 1 ? base : base + "_" + std::to_string(k);
  }
  return out;
}

FanDocument parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, token_start(text, e.byte));
    std::string what = e.what();
    if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError({ParseIssue{ErrorCode::SyntaxError, what, "", line, column}});
  }

  Reader r;
  FanDocument doc;
  if (!root.is_object()) {
    r.fail(ErrorCode::SyntaxError, "", "the document must be an object");
    throw ParseError(std::move(r.issues));
  }
  static const std::set<std::string> known{"group", "torus_rank", "parabolic", "lattice_rank", "colour_points", "cones"};
  for (const auto& [key, value] : root.items())
    if (!known.contains(key)) r.fail(ErrorCode::SyntaxError, "/" + pointer_escape(key), "unknown key '" + key + "'");

  // group
  if (const json* group = r.member(root, "", "group"); group && r.array(*group, "/group")) {
    for (std::size_t i = 0; i < group->size(); ++i) {
      const std::string path = "/group/" + std::to_string(i);
      const json& g = (*group)[i];
      if (!g.is_object()) {
        r.fail(ErrorCode::SyntaxError, path, "expected an object");
        continue;
      }
      dynkin::ComponentSpec spec;
      bool ok = true;
      if (const json* f = r.member(g, path, "family")) {
        const auto s = r.string(*f, path + "/family");
        const auto family = s && s->size() == 1 ? dynkin::family_from_char((*s)[0]) : std::nullopt;
        if (family) spec.family = *family;
        else {
          ok = false;
          if (s) r.fail(ErrorCode::UnknownDiagram, path + "/family", "unknown family '" + *s + "'");
        }
      } else {
        ok = false;
      }
      if (const json* n = r.member(g, path, "rank")) {
        if (const auto rank = r.small(*n, path + "/rank", 1, 1000)) spec.rank = static_cast<int>(*rank);
        else ok = false;
      } else {
        ok = false;
      }
      if (const json* name = r.member(g, path, "name", false)) {
        const auto s = r.string(*name, path + "/name");
        if (s && (s->empty() || s->find('.') != std::string::npos)) {
          r.fail(ErrorCode::SyntaxError, path + "/name", "component names are non-empty and contain no '.'");
          ok = false;
        } else if (s) {
          spec.name = *s;
        } else {
          ok = false;
        }
      }
      for (const auto& [key, value] : g.items())
        if (key != "family" && key != "rank" && key != "name")
          r.fail(ErrorCode::SyntaxError, path + "/" + pointer_escape(key), "unknown key '" + key + "'");
      if (ok && !dynkin::is_valid_rank(spec.family, spec.rank)) {
        r.fail(ErrorCode::UnknownDiagram, path, "no diagram of type " + default_name(spec));
        ok = false;
      }
      if (ok) doc.group.push_back(std::move(spec));
    }
  }

  if (const json* t = r.member(root, "", "torus_rank", false))
    if (const auto v = r.small(*t, "/torus_rank", 0, 1 << 20)) doc.torus_rank = static_cast<int>(*v);

  if (const json* p = r.member(root, "", "parabolic", false); p && r.array(*p, "/parabolic"))
    for (std::size_t i = 0; i < p->size(); ++i)
      if (auto s = r.string((*p)[i], "/parabolic/" + std::to_string(i))) doc.parabolic.push_back(std::move(*s));

  std::optional<std::size_t> rank;
  if (const json* n = r.member(root, "", "lattice_rank"))
    if (const auto v = r.small(*n, "/lattice_rank", 0, 1 << 16)) rank = static_cast<std::size_t>(*v);
  if (rank) doc.lattice_rank = *rank;

  if (const json* cp = r.member(root, "", "colour_points", false)) {
    if (!cp->is_object()) {
      r.fail(ErrorCode::SyntaxError, "/colour_points", "expected an object");
    } else {
      for (const auto& [key, value] : cp->items())
        if (auto v = r.vector(value, "/colour_points/" + pointer_escape(key), rank))
          doc.colour_points.emplace(key, std::move(*v));
    }
  }

  if (const json* cones = r.member(root, "", "cones"); cones && r.array(*cones, "/cones")) {
    for (std::size_t i = 0; i < cones->size(); ++i) {
      const std::string path = "/cones/" + std::to_string(i);
      const json& c = (*cones)[i];
      if (!c.is_object()) {
        r.fail(ErrorCode::SyntaxError, path, "expected an object");
        continue;
      }
      ConeEntry entry;
      if (const json* rays = r.member(c, path, "rays"); rays && r.array(*rays, path + "/rays"))
        for (std::size_t j = 0; j < rays->size(); ++j)
          if (auto v = r.vector((*rays)[j], path + "/rays/" + std::to_string(j), rank)) entry.rays.push_back(std::move(*v));
      if (const json* colours = r.member(c, path, "colours", false); colours && r.array(*colours, path + "/colours"))
        for (std::size_t j = 0; j < colours->size(); ++j)
          if (auto s = r.string((*colours)[j], path + "/colours/" + std::to_string(j))) entry.colours.push_back(std::move(*s));
      for (const auto& [key, value] : c.items())
        if (key != "rays" && key != "colours")
          r.fail(ErrorCode::SyntaxError, path + "/" + pointer_escape(key), "unknown key '" + key + "'");
      doc.cones.push_back(std::move(entry));
    }
  }

  // Identifiers. Only checked when the group itself parsed cleanly.
  if (r.issues.empty()) {
    std::set<std::string> nodes;
    std::set<std::string> names;
    for (const auto& c : resolved_group(doc)) {
      if (!names.insert(c.name).second) r.fail(ErrorCode::SyntaxError, "/group", "duplicate component name '" + c.name + "'");
      for (int i = 1; i <= c.rank; ++i) nodes.insert(c.name + "." + std::to_string(i));
    }
    std::set<std::string> parabolic;
    for (std::size_t i = 0; i < doc.parabolic.size(); ++i) {
      const std::string path = "/parabolic/" + std::to_string(i);
      if (!nodes.contains(doc.parabolic[i]))
        r.fail(ErrorCode::UnresolvedIdentifier, path, "no simple root named '" + doc.parabolic[i] + "'");
      else if (!parabolic.insert(doc.parabolic[i]).second)
        r.fail(ErrorCode::BadParabolic, path, "'" + doc.parabolic[i] + "' listed twice");
    }
    std::set<std::string> colours;
    for (const auto& n : nodes)
      if (!parabolic.contains(n)) colours.insert(n);
    for (const auto& [name, point] : doc.colour_points)
      if (!colours.contains(name))
        r.fail(ErrorCode::UnresolvedIdentifier, "/colour_points/" + pointer_escape(name),
               nodes.contains(name) ? "'" + name + "' lies in the parabolic and is not a colour"
                                    : "no colour named '" + name + "'");
    for (const auto& name : colours)
      if (!doc.colour_points.contains(name))
        r.fail(ErrorCode::MissingColourPoint, "/colour_points", "colour '" + name + "' has no colour point");
    for (std::size_t i = 0; i < doc.cones.size(); ++i)
      for (std::size_t j = 0; j < doc.cones[i].colours.size(); ++j)
        if (!colours.contains(doc.cones[i].colours[j]))
          r.fail(ErrorCode::UnresolvedIdentifier, "/cones/" + std::to_string(i) + "/colours/" + std::to_string(j),
                 "no colour named '" + doc.cones[i].colours[j] + "'");
  }

  if (!r.issues.empty()) throw ParseError(std::move(r.issues));
  return doc;
}

ordered_json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ordered_json vector_json(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

std::string print(const FanDocument& doc) {
  ordered_json out;
  out["group"] = ordered_json::array();
  for (const auto& c : doc.group) {
    ordered_json g;
    g["family"] = std::string(1, static_cast<char>(c.family));
    g["rank"] = c.rank;
    if (!c.name.empty()) g["name"] = c.name;
    out["group"].push_back(std::move(g));
  }
  out["torus_rank"] = doc.torus_rank;
  out["parabolic"] = doc.parabolic;
  out["lattice_rank"] = doc.lattice_rank;
  out["colour_points"] = ordered_json::object();
  for (const auto& [name, point] : doc.colour_points) out["colour_points"][name] = vector_json(point);
  out["cones"] = ordered_json::array();
  for (const auto& c : doc.cones) {
    ordered_json cone;
    cone["rays"] = ordered_json::array();
    for (const auto& r : c.rays) cone["rays"].push_back(vector_json(r));
    cone["colours"] = c.colours;
    out["cones"].push_back(std::move(cone));
  }
  return out.dump(2) + "\n";
}

Model build(const FanDocument& doc) {
  const auto group = resolved_group(doc);
  dynkin::DynkinData diagram = dynkin::DynkinData::from_components(group, doc.torus_rank, doc.parabolic);

  std::vector<std::string> colours;
  std::vector<IntVector> points;
  for (dynkin::NodeId v : diagram.colours()) {
    const auto it = doc.colour_points.find(diagram.name(v));
    if (it == doc.colour_points.end())
      throw Error(ErrorCode::MissingColourPoint, "colour '" + diagram.name(v) + "' has no colour point");
    colours.push_back(diagram.name(v));
    points.push_back(it->second);
  }
  const fan::ColouredLattice lattice(doc.lattice_rank, std::move(colours), std::move(points));

  std::vector<fan::ColouredCone> cones;
  for (std::size_t i = 0; i < doc.cones.size(); ++i) {
    try {
      fan::ColourSet set;
      for (const auto& name : doc.cones[i].colours) {
        const auto c = lattice.find(name);
        if (!c) throw Error(ErrorCode::UnresolvedIdentifier, "no colour named '" + name + "'");
        set.insert(*c);
      }
      cones.push_back(fan::make_coloured_cone(polyhedral::Cone::from_generators(doc.cones[i].rays, doc.lattice_rank),
                                              std::move(set), lattice));
    } catch (const Error& e) {
      throw Error(e.code(), "/cones/" + std::to_string(i) + ": " + e.what());
    }
  }
  return Model{std::move(diagram), fan::validate_fan(lattice, cones)};
}

FanDocument to_document(const FanDocument& original, const fan::ColouredFan& fan) {
  FanDocument doc = original;
  doc.cones.clear();
  for (std::size_t i : fan.maximal()) {
    const auto& sc = fan.cones()[i];
    ConeEntry entry{sc.cone.rays(), {}};
    for (fan::ColourIndex c : sc.colours) entry.colours.push_back(fan.lattice().colour_name(c));
    doc.cones.push_back(std::move(entry));
  }
  return doc;
}

std::string Report::machine_text() const { return machine.dump(2) + "\n"; }

}  // namespace horofan::io
