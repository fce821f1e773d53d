#pragma once

#include <cstdint>
#include <optional>

#include "cftspan/colored_graph.hpp"
#include "cftspan/ft_greedy.hpp"

namespace cftspan {

/// Default cap on (fault set x vertex pair) evaluations for the brute-force
/// verifiers. Exceeding it raises BudgetExceeded, never a false "ok".
inline constexpr std::uint64_t kDefaultVerifyBudget = 10'000'000;

struct Counterexample {
  FaultSet faults;
  VertexId u = 0, v = 0;
  Weight dist_in_h = 0, dist_in_g = 0;
};

struct VerifyOutcome {
  bool ok = true;
  std::optional<Counterexample> counterexample;
};

/// Exhaustive check that H is an f-CFT (2k-1)-spanner of G: for every fault
/// set of at most f colors and every vertex pair, the surviving distance in
/// H is at most (2k-1) times the one in G. Fault sets are visited sizes
/// ascending, colex within a size; the first violation is returned. H's
/// edges must be edges of G (same id, endpoints, weight, colors).
VerifyOutcome verify_ft_spanner(const ColoredGraph& g, const ColoredGraph& h, int k, int f,
                                std::uint64_t budget = kDefaultVerifyBudget);

/// Exhaustive check that H preserves pairwise connectivity under every set
/// of at most lambda color faults. Only the H-side can lose connectivity
/// since H is a subgraph.
VerifyOutcome verify_certificate(const ColoredGraph& g, const ColoredGraph& h, int lambda,
                                 std::uint64_t budget = kDefaultVerifyBudget);

/// Sparse connectivity certificate: the modified greedy spanner with f =
/// lambda and k = max(1, ceil(log2 n)).
BuildReport build_certificate(const ColoredGraph& g, int lambda);

int certificate_stretch_parameter(int n);

/// Random blocked subgraph: sample each color into S independently with
/// probability p (seeded), keep the edges fully inside S, then delete every
/// edge of a blocking pair whose fault survived. With a valid 2k-blocking
/// set the result has girth >= 2k+1 for every seed.
ColoredGraph sample_blocked_subgraph(const ColoredGraph& h, const BlockingSet& b, double p,
                                     std::uint64_t seed);

}  // namespace cftspan
