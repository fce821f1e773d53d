#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cftspan/colored_graph.hpp"

namespace cftspan {

/// Text format, one item per line, '#' starts a comment:
///   graph <n>
///   setting <eft|vft|mft|ecft|vcft|mcft|lists>
///   v <id> [<color> ...]
///   e <id> <u> <v> <weight> [<color> ...]
/// List sizes must match the declared setting (ECFT: one color per edge,
/// none per vertex, and so on). Throws ParseError with the offending line.
ColoredGraph parse_graph(const std::string& text);
ColoredGraph load_graph(const std::string& path);

/// Inverse of parse_graph: serialize(parse(t)) parses back identical.
/// Optional header lines are emitted as leading comments.
std::string serialize_graph(const ColoredGraph& g, const std::vector<std::string>& header = {});
void save_graph(const ColoredGraph& g, const std::string& path,
                const std::vector<std::string>& header = {});

/// Shortest round-trip decimal form of a weight.
std::string format_weight(Weight w);

}  // namespace cftspan
