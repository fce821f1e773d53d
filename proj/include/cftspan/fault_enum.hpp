#pragma once

#include <cstdint>
#include <functional>

#include "cftspan/colored_graph.hpp"

namespace cftspan {

/// Visits every subset of {0..palette-1} with at most max_size elements:
/// sizes ascending, colexicographic within a size. Stops early when fn
/// returns false; returns false iff stopped early.
bool for_each_fault_set(int palette, int max_size, const std::function<bool(const FaultSet&)>& fn);

/// Number of subsets the above visits, saturating at cap.
std::uint64_t count_fault_sets(int palette, int max_size, std::uint64_t cap);

}  // namespace cftspan
