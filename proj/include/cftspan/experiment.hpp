#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cftspan/colored_graph.hpp"
#include "cftspan/ft_greedy.hpp"
#include "cftspan/oracle.hpp"

namespace cftspan {

/// Seeded random test family: G(n, p = 2*n^{1/k}/n), connectivity by
/// rejection, unit weights. Edge colors are uniform over ceil(n/2) labels,
/// vertex colors over ceil(n/4) labels (disjoint ranges); the lists setting
/// draws 1-2 edge colors and 0-1 vertex colors.
ColoredGraph random_instance(int n, int k, Setting setting, std::uint64_t seed);

/// One CSV row of a sweep or build report.
struct ExperimentRecord {
  std::string instance;
  std::string setting;
  int n = 0;
  int m = 0;
  int palette = 0;
  int f = 0;
  int k = 0;
  std::string algo;
  int spanner_edges = 0;
  int max_blame = 0;
  long long blocking_pairs = 0;
  double time_ms = 0.0;
  std::string verified;  // ok | failed | skipped
};

/// Build + optional oracle verification, condensed into a record. The
/// verifier runs only when its (fault set x pair) estimate fits the budget;
/// otherwise the row is marked skipped.
ExperimentRecord record_build(const std::string& instance, const ColoredGraph& g, int k, int f,
                              const std::string& algo, std::uint64_t verify_budget);

struct SweepParams {
  std::string family = "random";  // random | lowerbound
  Setting setting = Setting::ECFT;
  int n = 20;
  int f_lo = 1;
  int f_hi = 2;
  int k = 2;
  int trials = 1;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::uint64_t verify_budget = kDefaultVerifyBudget;
};

/// Runs both algorithms over every (f, trial) cell. Rows come back in
/// (f, trial, algo) order regardless of --jobs; all randomness derives from
/// the master seed, so reruns are byte-identical except time_ms.
std::vector<ExperimentRecord> run_sweep(const SweepParams& params);

/// CSV with a versioned comment header; columns:
/// instance,setting,n,m,palette,f,k,algo,spanner_edges,max_blame,blocking_pairs,time_ms,verified
std::string records_to_csv(const std::vector<ExperimentRecord>& records);

}  // namespace cftspan
