#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cftspan/experiment.hpp"
#include "cftspan/graph_io.hpp"
#include "cftspan/lowerbound.hpp"
#include "cftspan/modified_greedy.hpp"
#include "cftspan/oracle.hpp"
#include "cftspan/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::uint64_t oracle_budget() {
  if (const char* env = std::getenv("CFT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed CFT_BUDGET\n";
  }
  return cftspan::kDefaultVerifyBudget;
}

void print_counterexample(const cftspan::ColoredGraph& g, const cftspan::Counterexample& ce) {
  std::ostringstream faults;
  faults << "{";
  for (std::size_t i = 0; i < ce.faults.size(); ++i)
    faults << (i ? ", " : "") << g.color_display(ce.faults[i]);
  faults << "}";
  auto dist = [](cftspan::Weight w) {
    return w == cftspan::kInfDist ? std::string("inf") : cftspan::format_weight(w);
  };
  std::cout << "counterexample:\n"
            << "  faults: " << faults.str() << "\n"
            << "  pair: " << ce.u << " -- " << ce.v << "\n"
            << "  dist in spanner-F: " << dist(ce.dist_in_h) << "\n"
            << "  dist in graph-F:   " << dist(ce.dist_in_g) << "\n";
}

void write_report_csv(const std::string& path, const cftspan::ExperimentRecord& rec) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << cftspan::records_to_csv({rec});
}

struct FRange {
  int lo = 1, hi = 1;
};

FRange parse_f_range(const std::string& text) {
  FRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--f-range", "expected '<lo>..<hi>' or a single integer");
  }
  if (r.lo < 0 || r.hi < r.lo) throw CLI::ValidationError("--f-range", "empty or negative range");
  return r;
}

int cmd_build(const std::string& graph_file, const std::string& algo, int k, int f,
              const std::string& out_file, const std::string& report_file) {
  cftspan::ColoredGraph g = cftspan::load_graph(graph_file);
  cftspan::BuildReport report = algo == "greedy" ? cftspan::build_ft_greedy(g, k, f)
                                                 : cftspan::build_modified_greedy(g, k, f);
  if (!out_file.empty()) {
    std::ostringstream params;
    params << "algo=" << algo << " k=" << k << " f=" << f << " source=" << graph_file;
    cftspan::save_graph(report.spanner, out_file, {"cftspan build", params.str()});
  }
  if (!report_file.empty())
    write_report_csv(report_file,
                     cftspan::record_build(graph_file, g, k, f, algo, oracle_budget()));
  std::cout << "kept " << report.spanner.edge_count() << " of " << g.edge_count() << " edges\n";
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& spanner_file, int k, int f,
               bool cert, int lambda) {
  cftspan::ColoredGraph g = cftspan::load_graph(graph_file);
  cftspan::ColoredGraph h = cftspan::load_graph(spanner_file);
  cftspan::VerifyOutcome outcome =
      cert ? cftspan::verify_certificate(g, h, lambda, oracle_budget())
           : cftspan::verify_ft_spanner(g, h, k, f, oracle_budget());
  if (outcome.ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  print_counterexample(g, *outcome.counterexample);
  return kExitVerifyFailed;
}

int cmd_gen(const std::string& family, int f, int k, int mu, int nu, int n_hint,
            std::uint64_t seed, const std::string& out_file) {
  using cftspan::mix_seed;
  cftspan::ColoredGraph g;
  if (family == "ecft") {
    g = cftspan::gen_ecft_lower(cftspan::girth_base(n_hint, k, mix_seed(seed, 1)), f, k,
                                mix_seed(seed, 2));
  } else if (family == "mcft") {
    auto base = cftspan::gen_ecft_lower(cftspan::girth_base(n_hint, k, mix_seed(seed, 1)), f, k,
                                        mix_seed(seed, 2));
    g = cftspan::gen_mcft_lower(base, f, mix_seed(seed, 3));
  } else {
    g = cftspan::gen_list_lower(cftspan::girth_base(n_hint, k, mix_seed(seed, 1)), f, k, mu, nu,
                                mix_seed(seed, 2));
  }
  std::ostringstream params;
  params << "family=" << family << " f=" << f << " k=" << k;
  if (family == "lists") params << " mu=" << mu << " nu=" << nu;
  params << " seed=" << seed << " n_hint=" << n_hint;
  cftspan::save_graph(g, out_file, {"cftspan gen", params.str()});
  std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
            << g.palette_size() << " colors\n";
  return kExitOk;
}

int cmd_cert(const std::string& graph_file, int lambda, const std::string& out_file,
             const std::string& report_file) {
  cftspan::ColoredGraph g = cftspan::load_graph(graph_file);
  int k = cftspan::certificate_stretch_parameter(g.vertex_count());
  cftspan::BuildReport report = cftspan::build_certificate(g, lambda);
  if (!out_file.empty()) {
    std::ostringstream params;
    params << "lambda=" << lambda << " k=" << k << " source=" << graph_file;
    cftspan::save_graph(report.spanner, out_file, {"cftspan cert", params.str()});
  }
  if (!report_file.empty())
    write_report_csv(report_file,
                     cftspan::record_build(graph_file, g, k, lambda, "modified", oracle_budget()));
  std::cout << "certificate: " << report.spanner.edge_count() << " of " << g.edge_count()
            << " edges (k=" << k << ")\n";
  return kExitOk;
}

int cmd_sweep(const cftspan::SweepParams& params, const std::string& csv_file) {
  auto records = cftspan::run_sweep(params);
  std::ofstream out(csv_file);
  if (!out) throw std::runtime_error("cannot open " + csv_file + " for writing");
  out << cftspan::records_to_csv(records);
  std::size_t failed = 0;
  for (const auto& r : records)
    if (r.verified == "failed") ++failed;
  std::cout << records.size() << " rows (" << failed << " failed)\n";
  return (!records.empty() && failed == records.size()) ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"color fault-tolerant spanner toolkit"};
  app.require_subcommand(1);

  // build
  std::string graph_file, spanner_file, out_file, report_file, algo = "greedy";
  int k = 2, f = 1, lambda = 1, mu = 1, nu = 0, n_hint = 0;
  std::uint64_t seed = 1;

  auto* build = app.add_subcommand("build", "build a CFT spanner");
  build->add_option("graph", graph_file, "input graph file")->required();
  build->add_option("--algo", algo, "greedy | modified")
      ->check(CLI::IsMember({"greedy", "modified"}))
      ->required();
  build->add_option("--k", k, "stretch parameter (stretch 2k-1)")->required();
  build->add_option("--f", f, "number of tolerated color faults")->required();
  build->add_option("--out", out_file, "write the spanner here");
  build->add_option("--report", report_file, "write a one-row csv report");

  auto* verify = app.add_subcommand("verify", "brute-force verify a spanner or certificate");
  verify->add_option("graph", graph_file, "input graph file")->required();
  verify->add_option("spanner", spanner_file, "spanner file")->required();
  bool cert_mode = false;
  verify->add_flag("--cert", cert_mode, "check a connectivity certificate instead");
  verify->add_option("--k", k, "stretch parameter");
  verify->add_option("--f", f, "number of tolerated color faults");
  verify->add_option("--lambda", lambda, "certificate fault budget");

  auto* gen = app.add_subcommand("gen", "generate a lower-bound instance");
  std::string family = "ecft";
  gen->add_option("--family", family, "ecft | mcft | lists")
      ->check(CLI::IsMember({"ecft", "mcft", "lists"}))
      ->required();
  gen->add_option("--f", f, "number of tolerated color faults")->required();
  gen->add_option("--k", k, "stretch parameter");
  gen->add_option("--mu", mu, "edge list size (lists family)");
  gen->add_option("--nu", nu, "vertex list size (lists family)");
  gen->add_option("--n", n_hint, "base size hint (0 = default cage)");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out", out_file, "output file")->required();

  auto* cert = app.add_subcommand("cert", "build a sparse connectivity certificate");
  cert->add_option("graph", graph_file, "input graph file")->required();
  cert->add_option("--lambda", lambda, "certificate fault budget")->required();
  cert->add_option("--out", out_file, "write the certificate here");
  cert->add_option("--report", report_file, "write a one-row csv report");

  auto* sweep = app.add_subcommand("sweep", "run a build/verify experiment grid");
  cftspan::SweepParams sp;
  std::string sweep_family = "random", sweep_setting = "ecft", f_range = "1..2", csv_file;
  sweep->add_option("--family", sweep_family, "random | lowerbound")
      ->check(CLI::IsMember({"random", "lowerbound"}));
  sweep->add_option("--setting", sweep_setting, "ecft | vcft | mcft | lists")
      ->check(CLI::IsMember({"ecft", "vcft", "mcft", "lists"}));
  sweep->add_option("--n", sp.n, "instance size");
  sweep->add_option("--f-range", f_range, "fault range '<lo>..<hi>'");
  sweep->add_option("--k", sp.k, "stretch parameter");
  sweep->add_option("--trials", sp.trials, "trials per f value");
  sweep->add_option("--seed", sp.seed, "master rng seed");
  sweep->add_option("--jobs", sp.jobs, "concurrent trials");
  sweep->add_option("--csv", csv_file, "output csv path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (build->parsed()) return cmd_build(graph_file, algo, k, f, out_file, report_file);
    if (verify->parsed()) {
      if (cert_mode ? verify->count("--lambda") == 0
                    : (verify->count("--k") == 0 || verify->count("--f") == 0)) {
        std::cerr << (cert_mode ? "verify --cert needs --lambda\n"
                                : "verify needs --k and --f (or --cert --lambda)\n");
        return kExitInputError;
      }
      return cmd_verify(graph_file, spanner_file, k, f, cert_mode, lambda);
    }
    if (gen->parsed()) return cmd_gen(family, f, k, mu, nu, n_hint, seed, out_file);
    if (cert->parsed()) return cmd_cert(graph_file, lambda, out_file, report_file);
    if (sweep->parsed()) {
      sp.family = sweep_family;
      sp.setting = *cftspan::setting_from_name(sweep_setting);
      auto range = parse_f_range(f_range);
      sp.f_lo = range.lo;
      sp.f_hi = range.hi;
      sp.verify_budget = oracle_budget();
      return cmd_sweep(sp, csv_file);
    }
  } catch (const cftspan::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitInputError;
  } catch (const cftspan::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const cftspan::DensityExhausted& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
