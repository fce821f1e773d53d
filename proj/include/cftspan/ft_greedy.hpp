#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cftspan/colored_graph.hpp"

namespace cftspan {

/// Node cap for the per-edge witness search. Exceeding it raises
/// BudgetExceeded instead of silently degrading.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

enum class WitnessSearch {
  Branching,   // hitting-set style branching over path colors
  Exhaustive,  // cross-check oracle: all <=f subsets of the palette
};

struct BuildStats {
  int edges_examined = 0;
  int edges_kept = 0;
  std::uint64_t search_nodes = 0;  // witness-search tree nodes (exact greedy)
  std::uint64_t path_queries = 0;  // shortest-path computations (modified greedy)
  double wall_ms = 0.0;
};

/// Spanner plus per-kept-edge witness/blame fault sets and counters.
struct BuildReport {
  ColoredGraph spanner;
  std::map<EdgeId, FaultSet> witness;
  BuildStats stats;
};

struct BlockingPair {
  EdgeId edge;
  ColorId fault;
  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

/// Set of (edge, fault) pairs certifying that every short cycle of the
/// spanner is "blocked": the pair's fault damages another cycle edge.
struct BlockingSet {
  std::vector<BlockingPair> pairs;
  std::map<EdgeId, FaultSet> provenance;
};

/// Exact search for a fault set F, |F| <= f, not damaging `candidate`, with
/// dist(H - F; u, v) > threshold. Returns the first witness in deterministic
/// branch order, or nullopt iff none exists. `candidate` must not be in H.
///
/// The branching is complete: any valid F must damage an edge of every
/// u-v path of weight <= threshold, so branching on the colors able to kill
/// the current shortest such path covers all witnesses.
std::optional<FaultSet> find_separating_fault_set(const ColoredGraph& h, const Edge& candidate,
                                                  int f, Weight threshold,
                                                  WitnessSearch mode = WitnessSearch::Branching,
                                                  const SearchBudget& budget = {},
                                                  std::uint64_t* nodes = nullptr);

/// Exponential-time FT greedy spanner. Edges are processed in increasing
/// weight (ties by ascending id); an edge is kept iff some fault set of size
/// <= f separates its endpoints beyond (2k-1) times its weight, and that
/// witness is recorded per kept edge.
BuildReport build_ft_greedy(const ColoredGraph& g, int k, int f,
                            WitnessSearch mode = WitnessSearch::Branching,
                            const SearchBudget& budget = {});

/// B = {(e, x) | e in spanner, x in F_e}. At most f pairs per edge, at most
/// f * |E(H)| total. Throws if the report lacks provenance for some edge.
BlockingSet extract_blocking_set(const BuildReport& report, int k);

struct BlockingCheck {
  bool ok = true;
  // Condition (i) violation: a pair whose fault damages its own edge.
  std::optional<BlockingPair> bad_pair;
  // Condition (ii) violation: a short cycle no pair blocks (edge ids).
  std::optional<std::vector<EdgeId>> unblocked_cycle;
};

/// Checks both blocking-set conditions against every cycle of at most 2k
/// edges. Enumeration is exhaustive; intended for desk-scale graphs.
BlockingCheck verify_blocking_set(const ColoredGraph& h, const BlockingSet& b, int k);

/// All simple cycles with at most max_edges edges, each once, as edge
/// positions. Deterministic order.
std::vector<std::vector<int>> enumerate_short_cycles(const ColoredGraph& g, int max_edges);

}  // namespace cftspan
