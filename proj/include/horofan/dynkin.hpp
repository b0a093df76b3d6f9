#pragma once

// Dynkin diagrams of connected reductive groups, together with the parabolic
// subset I of simple roots. Colours are the simple roots outside I.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace horofan::dynkin {

using NodeId = std::size_t;
using NodeSet = std::set<NodeId>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

std::optional<Family> family_from_char(char c) noexcept;
/// Whether (family, rank) names a finite-type diagram; B_n and C_n need
/// n >= 2, D_n needs n >= 4.
bool is_valid_rank(Family family, int rank) noexcept;

struct Edge {
  NodeId a = 0;  // a < b
  NodeId b = 0;
  int multiplicity = 1;
  /// For multiple edges, the end carrying the long root; the arrow points
  /// from it to the other (short) end.
  std::optional<NodeId> long_end;
};

/// Unvalidated diagram description, nodes referred to by name.
struct RawEdge {
  std::string a;
  std::string b;
  int multiplicity = 1;
  std::string long_end;  // empty for simple edges
};

struct RawDiagram {
  std::vector<std::string> nodes;
  std::vector<RawEdge> edges;
  int torus_rank = 0;
  std::vector<std::string> parabolic;
};

/// One simple factor given by its Cartan type. Nodes are named
/// "<name>.<i>" with i the Bourbaki index.
struct ComponentSpec {
  Family family = Family::A;
  int rank = 1;
  std::string name;
  bool operator==(const ComponentSpec&) const = default;
};

struct TypeLabel {
  Family family = Family::A;
  int rank = 0;
  /// numbering[i] is the node carrying Bourbaki index i + 1.
  std::vector<NodeId> numbering;

  /// 1-based Bourbaki index of `node`, or 0 if it is not in the component.
  int index_of(NodeId node) const noexcept;
  std::string name() const;

  auto operator<=>(const TypeLabel&) const = default;
};

class DynkinData {
 public:
  /// Checks names, edge decorations and the parabolic subset, and that every
  /// connected component is a finite-type diagram.
  static DynkinData validate(const RawDiagram& raw);
  static DynkinData from_components(std::span<const ComponentSpec> components, int torus_rank,
                                    std::span<const std::string> parabolic);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(NodeId node) const;
  std::optional<NodeId> find(std::string_view name) const noexcept;
  const std::vector<std::string>& names() const noexcept { return names_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<NodeId>& neighbours(NodeId node) const;
  /// 0 when the nodes are not joined.
  int multiplicity(NodeId a, NodeId b) const;
  std::optional<NodeId> long_end(NodeId a, NodeId b) const;

  int torus_rank() const noexcept { return torus_rank_; }
  const NodeSet& parabolic() const noexcept { return parabolic_; }
  bool in_parabolic(NodeId node) const noexcept { return parabolic_.contains(node); }
  /// S \ I, the universal colour set.
  NodeSet colours() const;

  NodeSet connected_component(NodeId node) const;
  std::vector<NodeSet> components() const;
  /// Nodes reachable from `start` without leaving `allowed`.
  NodeSet component_within(NodeId start, const NodeSet& allowed) const;

  /// Induced subdiagram on `nodes`; parabolic becomes I ∩ nodes, node names
  /// and the torus rank are kept.
  DynkinData induced(const NodeSet& nodes) const;

  bool operator==(const DynkinData&) const;

 private:
  DynkinData() = default;
  void index_edges();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<int> edge_at_;  // size() x size(), index into edges_ or -1
  int torus_rank_ = 0;
  NodeSet parabolic_;
};

/// Edges of the standard Bourbaki diagram on indices 0..rank-1, expressed
/// with the same decoration convention as Edge.
std::vector<Edge> standard_edges(Family family, int rank);

/// Every numbering of the induced subdiagram on `component` by a standard
/// diagram, sorted.
std::vector<TypeLabel> labelings(const DynkinData& d, const NodeSet& component);

/// Type of a connected node set. Among all valid labels, one giving `pin`
/// index 1 is preferred; ties go to the lexicographically smallest label.
TypeLabel recognize_type(const DynkinData& d, const NodeSet& component,
                         std::optional<NodeId> pin = std::nullopt);

/// The per-colour vividness test: `alpha` is alone among `cone_colours` in its
/// component, and it touches at most one component I_alpha of I, in which
/// case I_alpha ∪ {alpha} is A_n or C_n with alpha as the first root.
bool vivid_colour_ok(const DynkinData& d, const NodeSet& cone_colours, NodeId alpha);

/// G/P is a product of projective spaces.
bool is_projective_space_product(const DynkinData& d);

}  // namespace horofan::dynkin
