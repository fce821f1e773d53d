#include "cftspan/experiment.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <sstream>
#include <thread>

#include "cftspan/fault_enum.hpp"
#include "cftspan/lowerbound.hpp"
#include "cftspan/modified_greedy.hpp"
#include "cftspan/rng.hpp"

namespace cftspan {

namespace {

bool connected_pairs(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<VertexId> q{0};
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : adj[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        q.push_back(y);
      }
  }
  return count == n;
}

}  // namespace

ColoredGraph random_instance(int n, int k, Setting setting, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  Rng rng(seed);
  const double p = std::min(1.0, 2.0 * std::pow(static_cast<double>(n), 1.0 / k) /
                                     static_cast<double>(n));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int attempt = 0; attempt < 200; ++attempt) {
    edges.clear();
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) edges.push_back({u, v});
    if (connected_pairs(n, edges)) break;
    if (attempt == 199) throw std::runtime_error("no connected sample after 200 attempts");
  }

  const long long edge_palette = (n + 1) / 2;
  const long long vertex_palette = (n + 3) / 4;
  const bool edge_colors =
      setting == Setting::ECFT || setting == Setting::MCFT || setting == Setting::Lists;
  const bool vertex_colors =
      setting == Setting::VCFT || setting == Setting::MCFT || setting == Setting::Lists;

  std::vector<std::vector<long long>> vlists(static_cast<std::size_t>(n));
  if (vertex_colors) {
    for (int v = 0; v < n; ++v) {
      if (setting == Setting::Lists && rng.bernoulli(0.5)) continue;  // empty list
      vlists[static_cast<std::size_t>(v)] = {edge_palette +
                                             static_cast<long long>(rng.below(vertex_palette))};
    }
  }
  std::vector<EdgeSpec> specs;
  EdgeId id = 0;
  for (auto [u, v] : edges) {
    EdgeSpec e{id++, u, v, 1.0, {}};
    if (edge_colors) {
      e.colors.push_back(static_cast<long long>(rng.below(edge_palette)));
      if (setting == Setting::Lists && rng.bernoulli(0.5)) {
        long long extra = static_cast<long long>(rng.below(edge_palette));
        if (extra != e.colors.front()) e.colors.push_back(extra);
      }
    }
    specs.push_back(std::move(e));
  }
  return ColoredGraph(setting, n, std::move(vlists), std::move(specs));
}

ExperimentRecord record_build(const std::string& instance, const ColoredGraph& g, int k, int f,
                              const std::string& algo, std::uint64_t verify_budget) {
  ExperimentRecord rec;
  rec.instance = instance;
  rec.setting = setting_name(g.setting());
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.palette = g.palette_size();
  rec.f = f;
  rec.k = k;
  rec.algo = algo;
  try {
    BuildReport report =
        algo == "greedy" ? build_ft_greedy(g, k, f) : build_modified_greedy(g, k, f);
    rec.spanner_edges = report.spanner.edge_count();
    rec.time_ms = report.stats.wall_ms;
    for (const auto& [id, fs] : report.witness) {
      rec.max_blame = std::max(rec.max_blame, static_cast<int>(fs.size()));
      rec.blocking_pairs += static_cast<long long>(fs.size());
    }
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(g.vertex_count()) * static_cast<std::uint64_t>(g.vertex_count());
    std::uint64_t sets = count_fault_sets(g.palette_size(), f, verify_budget);
    if (pairs != 0 && sets <= verify_budget / pairs) {
      auto outcome = verify_ft_spanner(g, report.spanner, k, f, verify_budget);
      rec.verified = outcome.ok ? "ok" : "failed";
    } else {
      rec.verified = "skipped";
    }
  } catch (const BudgetExceeded&) {
    rec.verified = "skipped";
  } catch (const std::exception&) {
    rec.verified = "failed";
  }
  return rec;
}

std::vector<ExperimentRecord> run_sweep(const SweepParams& params) {
  if (params.f_lo > params.f_hi) throw std::invalid_argument("empty f range");
  if (params.trials < 1) throw std::invalid_argument("trials must be positive");

  struct Task {
    int f, trial;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int f = params.f_lo; f <= params.f_hi; ++f)
    for (int t = 0; t < params.trials; ++t)
      tasks.push_back({f, t, mix_seed(params.seed, static_cast<std::uint64_t>(f),
                                      static_cast<std::uint64_t>(t))});

  std::vector<std::vector<ExperimentRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& task = tasks[i];
      std::ostringstream name;
      name << params.family << "-" << setting_name(params.setting) << "-n" << params.n << "-f"
           << task.f << "-t" << task.trial;
      std::vector<ExperimentRecord> rows;
      try {
        ColoredGraph g =
            params.family == "lowerbound"
                ? gen_ecft_lower(girth_base(params.n, params.k, task.seed), task.f, params.k,
                                 task.seed)
                : random_instance(params.n, params.k, params.setting, task.seed);
        for (const char* algo : {"greedy", "modified"})
          rows.push_back(record_build(name.str(), g, params.k, task.f, algo,
                                      params.verify_budget));
      } catch (const std::exception&) {
        for (const char* algo : {"greedy", "modified"}) {
          ExperimentRecord rec;
          rec.instance = name.str();
          rec.setting = setting_name(params.setting);
          rec.n = params.n;
          rec.f = task.f;
          rec.k = params.k;
          rec.algo = algo;
          rec.verified = "failed";
          rows.push_back(std::move(rec));
        }
      }
      results[i] = std::move(rows);
    }
  };

  int jobs = std::max(1, params.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<ExperimentRecord> records;
  for (auto& rows : results)
    for (auto& rec : rows) records.push_back(std::move(rec));
  return records;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "# cftspan sweep csv v1\n";
  out << "instance,setting,n,m,palette,f,k,algo,spanner_edges,max_blame,blocking_pairs,"
         "time_ms,verified\n";
  for (const auto& r : records) {
    char time_buf[32];
    std::snprintf(time_buf, sizeof(time_buf), "%.3f", r.time_ms);
    out << r.instance << "," << r.setting << "," << r.n << "," << r.m << "," << r.palette << ","
        << r.f << "," << r.k << "," << r.algo << "," << r.spanner_edges << "," << r.max_blame
        << "," << r.blocking_pairs << "," << time_buf << "," << r.verified << "\n";
  }
  return out.str();
}

}  // namespace cftspan
