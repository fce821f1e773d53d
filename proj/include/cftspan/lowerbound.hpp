#pragma once

#include <cstdint>

#include "cftspan/colored_graph.hpp"

namespace cftspan {

/// Raised when no permutation (or bipartition) reaches the required edge
/// count after the retry cap; the requested parameters are outside the
/// density regime the packing supports.
struct DensityExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Small high-girth base graph used to seed the adversarial instances.
struct GirthBase {
  ColoredGraph graph;  // uncolored payload (empty lists, unit weights)
  int girth = 0;       // guaranteed lower bound, checked at construction
  enum class Source { HardcodedCage, RandomGreedy } source = Source::HardcodedCage;
};

/// Base with girth >= 2k+2. Hardcoded where available: k=1 gives
/// K_{a,a} with a = max(3, n_hint/2); k=2 the Heawood graph (14 vertices)
/// and k=3 the Tutte-Coxeter graph (30 vertices) while n_hint fits.
/// Everything else falls back to seeded random-greedy insertion, which
/// accepts an edge only when its endpoints are at hop distance >= 2k+1.
GirthBase girth_base(int n_hint, int k, std::uint64_t seed);

/// Packs f overlaid permuted copies of the base, coloring the copy added at
/// level i with color i. Every copy keeps girth >= 2k+2, the union stays
/// simple, and each permutation must map at least half the base edges to
/// fresh non-edges (retried up to 200 times, then DensityExhausted).
ColoredGraph gen_ecft_lower(const GirthBase& base, int f, int k, std::uint64_t seed);

/// Product construction over an edge-colored instance: bipartizes it
/// (keeping at least half the edges), then lays f*f edge-disjoint copies on
/// (L x [f]) u (R x [f]). Vertex (u,i) on the left side gets color l_i,
/// (v,j) on the right gets r_j; edge colors are inherited.
ColoredGraph gen_mcft_lower(const ColoredGraph& base_ec, int f, std::uint64_t seed);

/// List-colored generalization: packs C(f+mu, mu) copies, each edge-listed
/// with a mu-subset of an (f+mu)-color palette; for nu >= 1 follows with the
/// product construction using nu-subsets of (f+nu)-color palettes per side
/// as vertex lists.
ColoredGraph gen_list_lower(const GirthBase& base, int f, int k, int mu, int nu,
                            std::uint64_t seed);

/// Edges of the Heawood / Tutte-Coxeter style LCF graphs (cycle + chords).
ColoredGraph lcf_graph(int n, const std::vector<int>& pattern);

}  // namespace cftspan
