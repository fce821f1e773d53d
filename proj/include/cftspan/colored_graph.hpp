#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cftspan {

using VertexId = int;
using EdgeId = int;
/// Dense palette index, 0..palette_size()-1. Original file labels are kept
/// in a side table and only matter for I/O and display.
using ColorId = int;
using Weight = double;

/// Distinguished "no path" value. Never a large finite number.
inline constexpr Weight kInfDist = std::numeric_limits<Weight>::infinity();

/// Which fault universe is in force. The uncolored settings (EFT/VFT/MFT)
/// are encoded by auto-assigning one fresh color per edge and/or vertex at
/// construction, so every algorithm runs on the color-list model only.
enum class Setting { EFT, VFT, MFT, ECFT, VCFT, MCFT, Lists };

const char* setting_name(Setting s);
std::optional<Setting> setting_from_name(const std::string& name);

/// A set of fault-universe elements, i.e. colors. Always sorted, no dups.
using FaultSet = std::vector<ColorId>;
using ColorList = std::vector<ColorId>;

bool fault_set_contains(const FaultSet& s, ColorId c);
FaultSet fault_set_union(const FaultSet& a, const FaultSet& b);

/// Input-side edge description; colors are arbitrary non-negative labels.
struct EdgeSpec {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Weight weight = 1.0;
  std::vector<long long> colors;
};

/// Edge in dense-color space.
struct Edge {
  EdgeId id;
  VertexId u, v;
  Weight weight;
  ColorList colors;  // ell(e), sorted dense ids
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weighted multigraph whose vertices and edges carry color lists.
/// Immutable after construction; all operations are pure and safe to share
/// across threads. Parallel edges are allowed, self-loops are not, vertices
/// are never removed by fault operations (only isolated), and edge ids stay
/// stable under every subgraph operation.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Validates ids, weights and per-setting list-size constraints, then
  /// remaps color labels to dense ids (sorted label order). For EFT/VFT/MFT
  /// all input lists must be empty; fresh colors are assigned per vertex
  /// (ascending id) and/or per edge (ascending edge id).
  ColoredGraph(Setting setting, int n, std::vector<std::vector<long long>> vertex_lists,
               std::vector<EdgeSpec> edges);

  Setting setting() const { return setting_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge_at(int pos) const { return edges_[pos]; }

  /// Position of the edge with this id, or -1.
  int find_edge(EdgeId id) const;
  const Edge& edge_by_id(EdgeId id) const;

  const ColorList& vertex_colors(VertexId v) const;

  int palette_size() const { return static_cast<int>(palette_.size()); }
  /// Original numeric label, or -1 for an auto-assigned (EFT/VFT/MFT) color.
  long long color_label(ColorId c) const;
  /// Human-readable form: the label, or "e<id>"/"v<id>" for auto colors.
  std::string color_display(ColorId c) const;
  ColorId color_from_label(long long label) const;  // -1 if unknown

  /// ell(e) union ell(u) union ell(v): exactly the colors whose failure
  /// removes this edge.
  const ColorList& damage_set(int pos) const { return damage_sets_[pos]; }

  /// True iff failing `fault` removes edge `e`. Throws on unknown ids.
  bool damages(ColorId fault, EdgeId e) const;

  /// G - S: drop every edge damaged by some color of S.
  ColoredGraph subtract(const FaultSet& s) const;
  /// G[S]: keep exactly the edges whose damage set is contained in S.
  ColoredGraph restrict_to(const FaultSet& s) const;
  /// Subgraph on the given edge ids (same vertices, palette, labels).
  ColoredGraph subgraph(const std::vector<EdgeId>& keep_ids) const;

  /// Exact weighted shortest-path distance; kInfDist when disconnected.
  Weight shortest_dist(VertexId u, VertexId v) const;
  /// Minimum-edge-count path length; nullopt when disconnected.
  std::optional<int> hop_dist(VertexId u, VertexId v) const;
  /// Edge count of a shortest cycle; nullopt for forests. Parallel edges
  /// form a 2-cycle.
  std::optional<int> girth() const;

  /// adjacency()[v] lists (neighbor, edge position) pairs.
  const std::vector<std::vector<std::pair<VertexId, int>>>& adjacency() const { return adj_; }

  std::vector<EdgeId> edge_ids() const;

 private:
  struct ColorInfo {
    long long label = -1;  // -1 for auto colors
    enum class Origin { Explicit, AutoEdge, AutoVertex } origin = Origin::Explicit;
    int origin_id = -1;
  };
  struct SubgraphTag {};
  ColoredGraph(SubgraphTag, const ColoredGraph& parent, const std::vector<char>& keep);

  void build_index();
  void check_vertex(VertexId v) const;

  Setting setting_ = Setting::Lists;
  int n_ = 0;
  std::vector<ColorList> vertex_lists_;
  std::vector<Edge> edges_;
  std::vector<ColorList> damage_sets_;
  std::vector<ColorInfo> palette_;
  std::unordered_map<long long, ColorId> label_to_color_;
  std::unordered_map<EdgeId, int> id_to_pos_;
  std::vector<std::vector<std::pair<VertexId, int>>> adj_;
};

/// Label-level structural equality (setting, vertices, lists, edges).
bool identical_graphs(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace cftspan
