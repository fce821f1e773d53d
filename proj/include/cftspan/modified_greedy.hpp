#pragma once

#include "cftspan/ft_greedy.hpp"

namespace cftspan {

struct ReplaceabilityResult {
  bool replaceable = false;
  /// Blame set: colors of the short detours found before the halting
  /// iteration. Populated iff not replaceable; size at most 4kf.
  FaultSet blame;
  /// Count of color-disjoint short paths discovered; f+1 when replaceable.
  int paths_found = 0;
};

/// Polynomial replaceability test. Runs f+1 iterations; iteration i takes
/// the minimum-hop u-v path in H minus the colors of the earlier paths
/// (only colors that do not damage e count). A path of >= 2k hops, or no
/// path at all, halts with "keep e"; completing all f+1 iterations means e
/// has f+1 color-disjoint detours of <= 2k-1 hops and is safely dropped.
/// e must not be in H; hop counts ignore weights (weighted inputs are
/// handled by the caller's processing order).
ReplaceabilityResult is_replaceable(const ColoredGraph& h, const Edge& e, int k, int f,
                                    std::uint64_t* path_queries = nullptr);

/// Polynomial-time CFT spanner: processes edges in increasing weight (ties
/// by ascending id) and keeps exactly the non-replaceable ones. The report
/// records the blame set per kept edge; pairing each kept edge with its
/// blame colors yields a 2k-blocking set of the output.
BuildReport build_modified_greedy(const ColoredGraph& g, int k, int f);

/// True iff every recorded blame set has at most 4kf colors.
bool blame_bound_check(const BuildReport& report, int k, int f);

}  // namespace cftspan
