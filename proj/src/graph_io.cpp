#include "cftspan/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace cftspan {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long long parse_ll(const std::string& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return value;
}

int parse_int(const std::string& tok, int line, const char* what) {
  long long v = parse_ll(tok, line, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(line, std::string(what) + " out of range");
  return static_cast<int>(v);
}

Weight parse_weight(const std::string& tok, int line) {
  Weight value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "bad weight '" + tok + "'");
  if (!(value > 0) || !std::isfinite(value))
    throw ParseError(line, "weights must be positive and finite");
  return value;
}

}  // namespace

std::string format_weight(Weight w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  (void)ec;
  return std::string(buf, ptr);
}

ColoredGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  bool have_n = false, have_setting = false;
  int n = 0;
  Setting setting = Setting::Lists;
  std::vector<std::vector<long long>> vertex_lists;
  std::vector<char> vertex_seen;
  std::vector<EdgeSpec> edges;
  std::set<EdgeId> edge_ids;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];

    if (kind == "graph") {
      if (have_n) throw ParseError(line_no, "duplicate graph header");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'graph <n>'");
      n = parse_int(toks[1], line_no, "vertex count");
      if (n < 0) throw ParseError(line_no, "vertex count must be non-negative");
      vertex_lists.assign(static_cast<std::size_t>(n), {});
      vertex_seen.assign(static_cast<std::size_t>(n), 0);
      have_n = true;
    } else if (kind == "setting") {
      if (!have_n) throw ParseError(line_no, "'setting' before 'graph' header");
      if (have_setting) throw ParseError(line_no, "duplicate setting line");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'setting <name>'");
      auto s = setting_from_name(toks[1]);
      if (!s) throw ParseError(line_no, "unknown setting '" + toks[1] + "'");
      setting = *s;
      have_setting = true;
    } else if (kind == "v") {
      if (!have_setting) throw ParseError(line_no, "vertex line before setting");
      if (toks.size() < 2) throw ParseError(line_no, "expected 'v <id> [colors...]'");
      int id = parse_int(toks[1], line_no, "vertex id");
      if (id < 0 || id >= n) throw ParseError(line_no, "vertex id out of range");
      if (vertex_seen[static_cast<std::size_t>(id)])
        throw ParseError(line_no, "duplicate vertex line for " + std::to_string(id));
      vertex_seen[static_cast<std::size_t>(id)] = 1;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        long long c = parse_ll(toks[i], line_no, "color");
        if (c < 0) throw ParseError(line_no, "colors must be non-negative");
        vertex_lists[static_cast<std::size_t>(id)].push_back(c);
      }
    } else if (kind == "e") {
      if (!have_setting) throw ParseError(line_no, "edge line before setting");
      if (toks.size() < 5) throw ParseError(line_no, "expected 'e <id> <u> <v> <weight> [colors...]'");
      EdgeSpec e;
      e.id = parse_int(toks[1], line_no, "edge id");
      if (e.id < 0) throw ParseError(line_no, "edge ids must be non-negative");
      if (!edge_ids.insert(e.id).second)
        throw ParseError(line_no, "duplicate edge id " + std::to_string(e.id));
      e.u = parse_int(toks[2], line_no, "vertex id");
      e.v = parse_int(toks[3], line_no, "vertex id");
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw ParseError(line_no, "edge endpoint out of range");
      if (e.u == e.v) throw ParseError(line_no, "self-loops are not allowed");
      e.weight = parse_weight(toks[4], line_no);
      for (std::size_t i = 5; i < toks.size(); ++i) {
        long long c = parse_ll(toks[i], line_no, "color");
        if (c < 0) throw ParseError(line_no, "colors must be non-negative");
        e.colors.push_back(c);
      }
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unknown line kind '" + kind + "'");
    }
  }
  if (!have_n) throw ParseError(line_no, "missing 'graph <n>' header");
  if (!have_setting) throw ParseError(line_no, "missing 'setting' line");

  try {
    return ColoredGraph(setting, n, std::move(vertex_lists), std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(line_no, err.what());
  }
}

ColoredGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const ColoredGraph& g, const std::vector<std::string>& header) {
  const Setting s = g.setting();
  const bool write_edge_lists = s == Setting::ECFT || s == Setting::MCFT || s == Setting::Lists;
  const bool write_vertex_lists = s == Setting::VCFT || s == Setting::MCFT || s == Setting::Lists;

  std::ostringstream out;
  for (const auto& h : header) out << "# " << h << "\n";
  out << "graph " << g.vertex_count() << "\n";
  out << "setting " << setting_name(s) << "\n";
  if (write_vertex_lists) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const ColorList& lst = g.vertex_colors(v);
      if (lst.empty()) continue;
      out << "v " << v;
      for (ColorId c : lst) out << " " << g.color_label(c);
      out << "\n";
    }
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.id << " " << e.u << " " << e.v << " " << format_weight(e.weight);
    if (write_edge_lists)
      for (ColorId c : e.colors) out << " " << g.color_label(c);
    out << "\n";
  }
  return out.str();
}

void save_graph(const ColoredGraph& g, const std::string& path,
                const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize_graph(g, header);
}

}  // namespace cftspan
