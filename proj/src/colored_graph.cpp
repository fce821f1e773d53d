#include "cftspan/colored_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <set>

namespace cftspan {

const char* setting_name(Setting s) {
  switch (s) {
    case Setting::EFT: return "eft";
    case Setting::VFT: return "vft";
    case Setting::MFT: return "mft";
    case Setting::ECFT: return "ecft";
    case Setting::VCFT: return "vcft";
    case Setting::MCFT: return "mcft";
    case Setting::Lists: return "lists";
  }
  return "?";
}

std::optional<Setting> setting_from_name(const std::string& name) {
  static const std::pair<const char*, Setting> table[] = {
      {"eft", Setting::EFT},   {"vft", Setting::VFT},   {"mft", Setting::MFT},
      {"ecft", Setting::ECFT}, {"vcft", Setting::VCFT}, {"mcft", Setting::MCFT},
      {"lists", Setting::Lists}};
  for (const auto& [n, s] : table)
    if (name == n) return s;
  return std::nullopt;
}

bool fault_set_contains(const FaultSet& s, ColorId c) {
  return std::binary_search(s.begin(), s.end(), c);
}

FaultSet fault_set_union(const FaultSet& a, const FaultSet& b) {
  FaultSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace {

void sort_unique(ColorList& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Per-setting list-size constraints on user-supplied lists.
void check_list_sizes(Setting s, bool is_edge, std::size_t len) {
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(what) + " for setting " + setting_name(s));
  };
  switch (s) {
    case Setting::EFT:
    case Setting::VFT:
    case Setting::MFT:
      if (len != 0) fail("explicit color lists are not allowed");
      break;
    case Setting::ECFT:
      if (is_edge ? len != 1 : len != 0)
        fail(is_edge ? "every edge needs exactly one color" : "vertex color lists must be empty");
      break;
    case Setting::VCFT:
      if (is_edge ? len != 0 : len != 1)
        fail(is_edge ? "edge color lists must be empty" : "every vertex needs exactly one color");
      break;
    case Setting::MCFT:
      if (len != 1)
        fail(is_edge ? "every edge needs exactly one color" : "every vertex needs exactly one color");
      break;
    case Setting::Lists:
      break;
  }
}

}  // namespace

ColoredGraph::ColoredGraph(Setting setting, int n, std::vector<std::vector<long long>> vertex_lists,
                           std::vector<EdgeSpec> edges)
    : setting_(setting), n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(vertex_lists.size()) > n)
    throw std::invalid_argument("more vertex lists than vertices");
  vertex_lists.resize(static_cast<std::size_t>(n));

  for (int v = 0; v < n; ++v) check_list_sizes(setting, false, vertex_lists[v].size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (!(e.weight > 0) || !std::isfinite(e.weight))
      throw std::invalid_argument("edge weights must be positive and finite");
    check_list_sizes(setting, true, e.colors.size());
  }

  const bool auto_vertex = setting == Setting::VFT || setting == Setting::MFT;
  const bool auto_edge = setting == Setting::EFT || setting == Setting::MFT;

  vertex_lists_.assign(static_cast<std::size_t>(n), {});
  edges_.reserve(edges.size());

  if (auto_vertex || auto_edge) {
    // Fresh dense colors: vertices by ascending id, then edges by ascending id.
    if (auto_vertex) {
      for (int v = 0; v < n; ++v) {
        ColorId c = static_cast<ColorId>(palette_.size());
        palette_.push_back({-1, ColorInfo::Origin::AutoVertex, v});
        vertex_lists_[v] = {c};
      }
    }
    std::vector<EdgeSpec> sorted = edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    std::unordered_map<EdgeId, ColorId> edge_color;
    if (auto_edge) {
      for (const auto& e : sorted) {
        ColorId c = static_cast<ColorId>(palette_.size());
        palette_.push_back({-1, ColorInfo::Origin::AutoEdge, e.id});
        edge_color[e.id] = c;
      }
    }
    for (const auto& e : edges) {
      ColorList lc;
      if (auto_edge) lc = {edge_color[e.id]};
      edges_.push_back({e.id, e.u, e.v, e.weight, std::move(lc)});
    }
  } else {
    std::set<long long> labels;
    for (const auto& lst : vertex_lists)
      for (long long l : lst) {
        if (l < 0) throw std::invalid_argument("color labels must be non-negative");
        labels.insert(l);
      }
    for (const auto& e : edges)
      for (long long l : e.colors) {
        if (l < 0) throw std::invalid_argument("color labels must be non-negative");
        labels.insert(l);
      }
    for (long long l : labels) {
      label_to_color_[l] = static_cast<ColorId>(palette_.size());
      palette_.push_back({l, ColorInfo::Origin::Explicit, -1});
    }
    for (int v = 0; v < n; ++v) {
      ColorList lc;
      for (long long l : vertex_lists[v]) lc.push_back(label_to_color_.at(l));
      sort_unique(lc);
      vertex_lists_[v] = std::move(lc);
    }
    for (const auto& e : edges) {
      ColorList lc;
      for (long long l : e.colors) lc.push_back(label_to_color_.at(l));
      sort_unique(lc);
      edges_.push_back({e.id, e.u, e.v, e.weight, std::move(lc)});
    }
  }

  build_index();
}

ColoredGraph::ColoredGraph(SubgraphTag, const ColoredGraph& parent, const std::vector<char>& keep)
    : setting_(parent.setting_),
      n_(parent.n_),
      vertex_lists_(parent.vertex_lists_),
      palette_(parent.palette_),
      label_to_color_(parent.label_to_color_) {
  for (int pos = 0; pos < parent.edge_count(); ++pos)
    if (keep[static_cast<std::size_t>(pos)]) edges_.push_back(parent.edges_[pos]);
  build_index();
}

void ColoredGraph::build_index() {
  id_to_pos_.clear();
  adj_.assign(static_cast<std::size_t>(n_), {});
  damage_sets_.clear();
  damage_sets_.reserve(edges_.size());
  for (int pos = 0; pos < edge_count(); ++pos) {
    const Edge& e = edges_[static_cast<std::size_t>(pos)];
    if (!id_to_pos_.emplace(e.id, pos).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, pos});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, pos});
    ColorList dmg = fault_set_union(e.colors, fault_set_union(vertex_lists_[static_cast<std::size_t>(e.u)],
                                                              vertex_lists_[static_cast<std::size_t>(e.v)]));
    damage_sets_.push_back(std::move(dmg));
  }
}

int ColoredGraph::find_edge(EdgeId id) const {
  auto it = id_to_pos_.find(id);
  return it == id_to_pos_.end() ? -1 : it->second;
}

const Edge& ColoredGraph::edge_by_id(EdgeId id) const {
  int pos = find_edge(id);
  if (pos < 0) throw std::invalid_argument("unknown edge id " + std::to_string(id));
  return edges_[static_cast<std::size_t>(pos)];
}

void ColoredGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

const ColorList& ColoredGraph::vertex_colors(VertexId v) const {
  check_vertex(v);
  return vertex_lists_[static_cast<std::size_t>(v)];
}

long long ColoredGraph::color_label(ColorId c) const {
  if (c < 0 || c >= palette_size()) throw std::invalid_argument("unknown color");
  return palette_[static_cast<std::size_t>(c)].label;
}

std::string ColoredGraph::color_display(ColorId c) const {
  if (c < 0 || c >= palette_size()) throw std::invalid_argument("unknown color");
  const ColorInfo& info = palette_[static_cast<std::size_t>(c)];
  switch (info.origin) {
    case ColorInfo::Origin::Explicit: return std::to_string(info.label);
    case ColorInfo::Origin::AutoEdge: return "e" + std::to_string(info.origin_id);
    case ColorInfo::Origin::AutoVertex: return "v" + std::to_string(info.origin_id);
  }
  return "?";
}

ColorId ColoredGraph::color_from_label(long long label) const {
  auto it = label_to_color_.find(label);
  return it == label_to_color_.end() ? -1 : it->second;
}

bool ColoredGraph::damages(ColorId fault, EdgeId e) const {
  if (fault < 0 || fault >= palette_size())
    throw std::invalid_argument("unknown fault element " + std::to_string(fault));
  int pos = find_edge(e);
  if (pos < 0) throw std::invalid_argument("unknown edge id " + std::to_string(e));
  return fault_set_contains(damage_sets_[static_cast<std::size_t>(pos)], fault);
}

ColoredGraph ColoredGraph::subtract(const FaultSet& s) const {
  std::vector<char> keep(edges_.size(), 1);
  for (int pos = 0; pos < edge_count(); ++pos) {
    const ColorList& dmg = damage_sets_[static_cast<std::size_t>(pos)];
    for (ColorId c : dmg)
      if (fault_set_contains(s, c)) {
        keep[static_cast<std::size_t>(pos)] = 0;
        break;
      }
  }
  return ColoredGraph(SubgraphTag{}, *this, keep);
}

ColoredGraph ColoredGraph::restrict_to(const FaultSet& s) const {
  std::vector<char> keep(edges_.size(), 0);
  for (int pos = 0; pos < edge_count(); ++pos) {
    const ColorList& dmg = damage_sets_[static_cast<std::size_t>(pos)];
    bool inside = true;
    for (ColorId c : dmg)
      if (!fault_set_contains(s, c)) {
        inside = false;
        break;
      }
    keep[static_cast<std::size_t>(pos)] = inside ? 1 : 0;
  }
  return ColoredGraph(SubgraphTag{}, *this, keep);
}

ColoredGraph ColoredGraph::subgraph(const std::vector<EdgeId>& keep_ids) const {
  std::vector<char> keep(edges_.size(), 0);
  for (EdgeId id : keep_ids) {
    int pos = find_edge(id);
    if (pos < 0) throw std::invalid_argument("unknown edge id " + std::to_string(id));
    keep[static_cast<std::size_t>(pos)] = 1;
  }
  return ColoredGraph(SubgraphTag{}, *this, keep);
}

Weight ColoredGraph::shortest_dist(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  std::vector<Weight> dist(static_cast<std::size_t>(n_), kInfDist);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[static_cast<std::size_t>(u)] = 0;
  pq.push({0, u});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(x)]) continue;
    if (x == v) return d;
    for (auto [y, pos] : adj_[static_cast<std::size_t>(x)]) {
      Weight nd = d + edges_[static_cast<std::size_t>(pos)].weight;
      if (nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        pq.push({nd, y});
      }
    }
  }
  return kInfDist;
}

std::optional<int> ColoredGraph::hop_dist(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(static_cast<std::size_t>(n_), -1);
  std::deque<VertexId> q{u};
  dist[static_cast<std::size_t>(u)] = 0;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (auto [y, pos] : adj_[static_cast<std::size_t>(x)]) {
      (void)pos;
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        if (y == v) return dist[static_cast<std::size_t>(y)];
        q.push_back(y);
      }
    }
  }
  return std::nullopt;
}

// Shortest cycle through edge pos = 1 + shortest u-v hop path avoiding pos.
std::optional<int> ColoredGraph::girth() const {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n_));
  for (int skip = 0; skip < edge_count() && best > 2; ++skip) {
    const Edge& e = edges_[static_cast<std::size_t>(skip)];
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<VertexId> q{e.u};
    dist[static_cast<std::size_t>(e.u)] = 0;
    int found = -1;
    while (!q.empty() && found < 0) {
      VertexId x = q.front();
      q.pop_front();
      if (dist[static_cast<std::size_t>(x)] + 1 >= best) break;  // cannot improve
      for (auto [y, pos] : adj_[static_cast<std::size_t>(x)]) {
        if (pos == skip) continue;
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          if (y == e.v) {
            found = dist[static_cast<std::size_t>(y)];
            break;
          }
          q.push_back(y);
        }
      }
    }
    if (found >= 0) best = std::min(best, found + 1);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<EdgeId> ColoredGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

bool identical_graphs(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.setting() != b.setting() || a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  auto labels_of = [](const ColoredGraph& g, const ColorList& lst) {
    std::vector<std::string> out;
    for (ColorId c : lst) out.push_back(g.color_display(c));
    return out;
  };
  for (int v = 0; v < a.vertex_count(); ++v)
    if (labels_of(a, a.vertex_colors(v)) != labels_of(b, b.vertex_colors(v))) return false;
  for (int pos = 0; pos < a.edge_count(); ++pos) {
    const Edge& ea = a.edge_at(pos);
    int bpos = b.find_edge(ea.id);
    if (bpos < 0) return false;
    const Edge& eb = b.edge_at(bpos);
    if (ea.u != eb.u || ea.v != eb.v || ea.weight != eb.weight) return false;
    if (labels_of(a, ea.colors) != labels_of(b, eb.colors)) return false;
  }
  return true;
}

}  // namespace cftspan
