#include "horofan/dynkin.hpp"

#include "horofan/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace horofan::dynkin {

std::optional<Family> family_from_char(char c) noexcept {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

bool is_valid_rank(Family family, int rank) noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

int TypeLabel::index_of(NodeId node) const noexcept {
  for (std::size_t i = 0; i < numbering.size(); ++i)
    if (numbering[i] == node) return static_cast<int>(i) + 1;
  return 0;
}

std::string TypeLabel::name() const { return static_cast<char>(family) + std::to_string(rank); }

std::vector<Edge> standard_edges(Family family, int rank) {
  if (!is_valid_rank(family, rank))
    throw Error(ErrorCode::UnknownDiagram,
                std::string(1, static_cast<char>(family)) + std::to_string(rank) + " is not a finite-type diagram");
  const auto n = static_cast<NodeId>(rank);
  std::vector<Edge> edges;
  auto simple = [&](NodeId a, NodeId b) { edges.push_back(Edge{a, b, 1, std::nullopt}); };
  auto multiple = [&](NodeId a, NodeId b, int m, NodeId long_end) { edges.push_back(Edge{a, b, m, long_end}); };
  switch (family) {
    case Family::A:
      for (NodeId i = 0; i + 1 < n; ++i) simple(i, i + 1);
      break;
    case Family::B:
    case Family::C:
      for (NodeId i = 0; i + 2 < n; ++i) simple(i, i + 1);
      multiple(n - 2, n - 1, 2, family == Family::B ? n - 2 : n - 1);
      break;
    case Family::D:
      for (NodeId i = 0; i + 2 < n; ++i) simple(i, i + 1);
      simple(n - 3, n - 1);
      break;
    case Family::E:
      simple(0, 2);
      simple(1, 3);
      for (NodeId i = 2; i + 1 < n; ++i) simple(i, i + 1);
      break;
    case Family::F:
      simple(0, 1);
      multiple(1, 2, 2, 1);
      simple(2, 3);
      break;
    case Family::G:
      multiple(0, 1, 3, 1);
      break;
  }
  return edges;
}

// ---------------------------------------------------------------------------

const std::string& DynkinData::name(NodeId node) const {
  if (node >= size()) throw Error(ErrorCode::UnknownNode, "node index " + std::to_string(node) + " out of range");
  return names_[node];
}

std::optional<NodeId> DynkinData::find(std::string_view name) const noexcept {
  for (NodeId i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

const std::vector<NodeId>& DynkinData::neighbours(NodeId node) const {
  if (node >= size()) throw Error(ErrorCode::UnknownNode, "node index " + std::to_string(node) + " out of range");
  return adjacency_[node];
}

int DynkinData::multiplicity(NodeId a, NodeId b) const {
  if (a >= size() || b >= size()) throw Error(ErrorCode::UnknownNode, "node index out of range");
  const int e = edge_at_[a * size() + b];
  return e < 0 ? 0 : edges_[static_cast<std::size_t>(e)].multiplicity;
}

std::optional<NodeId> DynkinData::long_end(NodeId a, NodeId b) const {
  if (a >= size() || b >= size()) throw Error(ErrorCode::UnknownNode, "node index out of range");
  const int e = edge_at_[a * size() + b];
  if (e < 0) return std::nullopt;
  return edges_[static_cast<std::size_t>(e)].long_end;
}

NodeSet DynkinData::colours() const {
  NodeSet out;
  for (NodeId i = 0; i < size(); ++i)
    if (!in_parabolic(i)) out.insert(i);
  return out;
}

NodeSet DynkinData::component_within(NodeId start, const NodeSet& allowed) const {
  if (start >= size()) throw Error(ErrorCode::UnknownNode, "node index " + std::to_string(start) + " out of range");
  NodeSet seen{start};
  std::vector<NodeId> stack{start};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adjacency_[v])
      if (allowed.contains(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen;
}

NodeSet DynkinData::connected_component(NodeId node) const {
  NodeSet all;
  for (NodeId i = 0; i < size(); ++i) all.insert(i);
  return component_within(node, all);
}

std::vector<NodeSet> DynkinData::components() const {
  std::vector<NodeSet> out;
  std::vector<bool> seen(size(), false);
  for (NodeId i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    NodeSet c = connected_component(i);
    for (NodeId v : c) seen[v] = true;
    out.push_back(std::move(c));
  }
  return out;
}

DynkinData DynkinData::induced(const NodeSet& nodes) const {
  DynkinData out;
  std::map<NodeId, NodeId> renumber;
  for (NodeId v : nodes) {
    if (v >= size()) throw Error(ErrorCode::UnknownNode, "node index " + std::to_string(v) + " out of range");
    renumber[v] = out.names_.size();
    out.names_.push_back(names_[v]);
    if (in_parabolic(v)) out.parabolic_.insert(renumber[v]);
  }
  for (const Edge& e : edges_) {
    if (!nodes.contains(e.a) || !nodes.contains(e.b)) continue;
    Edge f{renumber[e.a], renumber[e.b], e.multiplicity, std::nullopt};
    if (e.long_end) f.long_end = renumber[*e.long_end];
    if (f.a > f.b) std::swap(f.a, f.b);
    out.edges_.push_back(f);
  }
  out.torus_rank_ = torus_rank_;
  out.index_edges();
  return out;
}

bool DynkinData::operator==(const DynkinData& o) const {
  if (names_ != o.names_ || torus_rank_ != o.torus_rank_ || parabolic_ != o.parabolic_) return false;
  for (NodeId a = 0; a < size(); ++a)
    for (NodeId b = a + 1; b < size(); ++b)
      if (multiplicity(a, b) != o.multiplicity(a, b) || long_end(a, b) != o.long_end(a, b)) return false;
  return true;
}

void DynkinData::index_edges() {
  const std::size_t n = size();
  adjacency_.assign(n, {});
  edge_at_.assign(n * n, -1);
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    edge_at_[e.a * n + e.b] = edge_at_[e.b * n + e.a] = static_cast<int>(i);
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

DynkinData DynkinData::validate(const RawDiagram& raw) {
  DynkinData d;
  for (const auto& name : raw.nodes) {
    if (name.empty()) throw Error(ErrorCode::UnknownNode, "empty node name");
    if (d.find(name)) throw Error(ErrorCode::UnknownNode, "duplicate node '" + name + "'");
    d.names_.push_back(name);
  }
  const std::size_t n = d.size();
  std::vector<bool> joined(n * n, false);
  for (const RawEdge& raw_edge : raw.edges) {
    const auto a = d.find(raw_edge.a);
    const auto b = d.find(raw_edge.b);
    if (!a) throw Error(ErrorCode::UnknownNode, "edge refers to unknown node '" + raw_edge.a + "'");
    if (!b) throw Error(ErrorCode::UnknownNode, "edge refers to unknown node '" + raw_edge.b + "'");
    const std::string label = raw_edge.a + "-" + raw_edge.b;
    if (*a == *b) throw Error(ErrorCode::BadEdge, "loop at " + raw_edge.a);
    if (raw_edge.multiplicity < 1 || raw_edge.multiplicity > 3)
      throw Error(ErrorCode::BadEdge, "edge " + label + " has multiplicity " + std::to_string(raw_edge.multiplicity));
    if (joined[*a * n + *b]) throw Error(ErrorCode::BadEdge, "edge " + label + " given twice");
    joined[*a * n + *b] = joined[*b * n + *a] = true;
    Edge e{std::min(*a, *b), std::max(*a, *b), raw_edge.multiplicity, std::nullopt};
    if (raw_edge.multiplicity == 1) {
      if (!raw_edge.long_end.empty())
        throw Error(ErrorCode::BadEdge, "simple edge " + label + " cannot carry a direction");
    } else {
      if (raw_edge.long_end != raw_edge.a && raw_edge.long_end != raw_edge.b)
        throw Error(ErrorCode::BadEdge, "multiple edge " + label + " needs its long end to be one of its nodes");
      e.long_end = d.find(raw_edge.long_end);
    }
    d.edges_.push_back(e);
  }
  if (raw.torus_rank < 0) throw Error(ErrorCode::InvalidArgument, "negative torus rank");
  d.torus_rank_ = raw.torus_rank;
  for (const auto& p : raw.parabolic) {
    const auto v = d.find(p);
    if (!v) throw Error(ErrorCode::BadParabolic, "parabolic root '" + p + "' is not a node");
    d.parabolic_.insert(*v);
  }
  d.index_edges();
  for (const NodeSet& component : d.components())
    if (labelings(d, component).empty())
      throw Error(ErrorCode::UnknownDiagram,
                  "component containing '" + d.names_[*component.begin()] + "' is not a finite-type diagram");
  return d;
}

DynkinData DynkinData::from_components(std::span<const ComponentSpec> components, int torus_rank,
                                       std::span<const std::string> parabolic) {
  RawDiagram raw;
  raw.torus_rank = torus_rank;
  raw.parabolic.assign(parabolic.begin(), parabolic.end());
  for (const ComponentSpec& spec : components) {
    const std::string prefix =
        spec.name.empty() ? static_cast<char>(spec.family) + std::to_string(spec.rank) : spec.name;
    for (const Edge& e : standard_edges(spec.family, spec.rank)) {
      RawEdge r{prefix + "." + std::to_string(e.a + 1), prefix + "." + std::to_string(e.b + 1), e.multiplicity, {}};
      if (e.long_end) r.long_end = prefix + "." + std::to_string(*e.long_end + 1);
      raw.edges.push_back(std::move(r));
    }
    for (int i = 1; i <= spec.rank; ++i) raw.nodes.push_back(prefix + "." + std::to_string(i));
  }
  return validate(raw);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<Family, int>> candidate_types(int n) {
  std::vector<std::pair<Family, int>> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    if (is_valid_rank(f, n)) out.emplace_back(f, n);
  return out;
}

// All isomorphisms from the standard diagram onto the induced subdiagram.
void match_template(const DynkinData& d, const std::vector<NodeId>& nodes, const std::vector<bool>& inside,
                    Family family, int rank, std::vector<TypeLabel>& out) {
  const auto n = static_cast<std::size_t>(rank);
  std::vector<int> mult(n * n, 0);
  std::vector<int> longer(n * n, -1);
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : standard_edges(family, rank)) {
    mult[e.a * n + e.b] = mult[e.b * n + e.a] = e.multiplicity;
    if (e.long_end) longer[e.a * n + e.b] = longer[e.b * n + e.a] = static_cast<int>(*e.long_end);
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  // Breadth-first order so every template node after the first has an
  // already placed parent whose image bounds its candidates.
  std::vector<NodeId> order{0};
  std::vector<NodeId> parent(n, 0);
  std::vector<bool> queued(n, false);
  queued[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (NodeId w : adj[order[k]])
      if (!queued[w]) {
        queued[w] = true;
        parent[w] = order[k];
        order.push_back(w);
      }

  std::vector<NodeId> image(n, 0);
  std::vector<bool> used(d.size(), false);
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == n) {
      out.push_back(TypeLabel{family, rank, image});
      return;
    }
    const NodeId t = order[k];
    const std::vector<NodeId>& candidates = k == 0 ? nodes : d.neighbours(image[parent[t]]);
    for (NodeId c : candidates) {
      if (!inside[c] || used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const NodeId s = order[j];
        const int m = mult[t * n + s];
        if (d.multiplicity(c, image[s]) != m) ok = false;
        else if (m > 1) {
          const auto want = static_cast<NodeId>(longer[t * n + s]) == t ? c : image[s];
          ok = d.long_end(c, image[s]) == want;
        }
      }
      if (!ok) continue;
      image[t] = c;
      used[c] = true;
      place(k + 1);
      used[c] = false;
    }
  };
  place(0);
}

}  // namespace

std::vector<TypeLabel> labelings(const DynkinData& d, const NodeSet& component) {
  std::vector<TypeLabel> out;
  if (component.empty()) return out;
  std::vector<bool> inside(d.size(), false);
  for (NodeId v : component) {
    if (v >= d.size()) throw Error(ErrorCode::UnknownNode, "node index " + std::to_string(v) + " out of range");
    inside[v] = true;
  }
  const std::vector<NodeId> nodes(component.begin(), component.end());
  for (auto [family, rank] : candidate_types(static_cast<int>(nodes.size())))
    match_template(d, nodes, inside, family, rank, out);
  std::sort(out.begin(), out.end());
  return out;
}

TypeLabel recognize_type(const DynkinData& d, const NodeSet& component, std::optional<NodeId> pin) {
  if (component.empty() || d.component_within(*component.begin(), component) != component)
    throw Error(ErrorCode::UnknownDiagram, "node set is not connected");
  const auto all = labelings(d, component);
  if (all.empty()) throw Error(ErrorCode::UnknownDiagram, "node set is not a finite-type diagram");
  if (pin)
    for (const TypeLabel& label : all)
      if (label.index_of(*pin) == 1) return label;
  return all.front();
}

bool vivid_colour_ok(const DynkinData& d, const NodeSet& cone_colours, NodeId alpha) {
  if (alpha >= d.size() || d.in_parabolic(alpha) || !cone_colours.contains(alpha))
    throw Error(ErrorCode::UnknownColour, "colour is not in the cone's colour set");
  for (NodeId f : cone_colours)
    if (f >= d.size() || d.in_parabolic(f))
      throw Error(ErrorCode::UnknownColour, "cone colour set contains a root of the parabolic");

  const NodeSet component = d.connected_component(alpha);
  for (NodeId f : cone_colours)
    if (f != alpha && component.contains(f)) return false;

  std::set<NodeSet> touching;
  for (NodeId w : d.neighbours(alpha))
    if (d.in_parabolic(w)) touching.insert(d.component_within(w, d.parabolic()));
  if (touching.size() > 1) return false;
  if (touching.empty()) return true;

  NodeSet joined = *touching.begin();
  joined.insert(alpha);
  for (const TypeLabel& label : labelings(d, joined))
    if ((label.family == Family::A || label.family == Family::C) && label.index_of(alpha) == 1) return true;
  return false;
}

bool is_projective_space_product(const DynkinData& d) {
  const NodeSet colours = d.colours();
  for (NodeId alpha : colours)
    if (!vivid_colour_ok(d, colours, alpha)) return false;
  return true;
}

}  // namespace horofan::dynkin
