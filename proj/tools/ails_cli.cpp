#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ails/bks.hpp"
#include "ails/engine.hpp"
#include "ails/instance.hpp"
#include "ails/instance_io.hpp"
#include "ails/oracle.hpp"
#include "ails/solution.hpp"

namespace {

using namespace ails;

struct CommonOpts {
  std::string instance_path;
  std::string variant_name;
  int runs = 10;
  int threads = 1;
  unsigned long long seed = 0;
  long max_no_improve = 40000;
  double time_limit = 0.0;
  double alpha = 0.4;
  double dbeta = 15.0;
  double eta = 0.2;
  int gamma = 20;
  int phi = 20;
  bool intra_two_opt = false;
  bool no_time = false;
  std::string bks_path;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--runs", o.runs, "independent runs per instance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "worker threads for the runs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "base seed; run i uses seed+i");
  cmd->add_option("--max-no-improve", o.max_no_improve,
                  "stop after this many iterations without improvement")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", o.time_limit,
                  "per-run wall-clock limit in seconds (0 = none)");
  cmd->add_option("--alpha", o.alpha,
                  "probability of the route-count and fleet mutations");
  cmd->add_option("--dbeta", o.dbeta, "target distance from the reference");
  cmd->add_option("--eta", o.eta, "acceptance threshold position in [0,1]");
  cmd->add_option("--gamma", o.gamma, "adjustment period / window length")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--phi", o.phi, "neighbor list size")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--intra-two-opt", o.intra_two_opt,
                "also try intra-route segment reversal in the descent");
  cmd->add_flag("--no-time", o.no_time,
                "omit wall-clock fields so reports are reproducible");
  cmd->add_option("--bks", o.bks_path,
                  "extra best-known-cost file (overrides built-ins)");
}

Params params_of(const CommonOpts& o) {
  Params p;
  p.alpha = o.alpha;
  p.d_ref = o.dbeta;
  p.eta = o.eta;
  p.gamma = o.gamma;
  p.phi = o.phi;
  p.max_no_improve = o.max_no_improve;
  p.time_limit = o.time_limit;
  p.seed = o.seed;
  p.intra_two_opt = o.intra_two_opt;
  return p;
}

std::optional<Variant> variant_of(const std::string& name) {
  if (name.empty()) return std::nullopt;
  return variant_from_string(name);
}

BksRegistry load_bks(const std::string& flag_path) {
  BksRegistry reg = BksRegistry::builtin();
  if (const char* env = std::getenv("AILS_BKS_PATH"); env && *env)
    reg.load_file(env);
  if (!flag_path.empty()) reg.load_file(flag_path);
  return reg;
}

struct Summary {
  double best = 0.0, avg = 0.0, worst = 0.0, seconds = 0.0;
  int best_run = 0;
};

Summary summarize(const std::vector<RunResult>& results) {
  Summary s;
  s.best = results[0].best_cost;
  s.worst = results[0].best_cost;
  for (int i = 0; i < static_cast<int>(results.size()); ++i) {
    const auto& r = results[i];
    s.avg += r.best_cost;
    s.seconds += r.seconds;
    if (r.best_cost < s.best) {
      s.best = r.best_cost;
      s.best_run = i;
    }
    if (r.best_cost > s.worst) s.worst = r.best_cost;
  }
  s.avg /= static_cast<double>(results.size());
  return s;
}

int cmd_solve(const CommonOpts& o, const std::string& solution_out,
              const std::string& trace_out) {
  Instance inst =
      normalize_fleet(load_instance(o.instance_path, variant_of(o.variant_name)));
  Params p = params_of(o);
  p.keep_trace = !trace_out.empty();

  std::printf("Instance %s (%s, %d customers, %d vehicle types)\n",
              inst.name.c_str(), to_string(inst.variant), inst.n,
              inst.num_types());
  auto results = run_many(inst, p, o.runs, o.threads);
  for (int i = 0; i < o.runs; ++i) {
    const auto& r = results[i];
    std::printf("Run %2d: cost %s  iters %ld", i + 1,
                format_cost(r.best_cost).c_str(), r.iterations);
    if (!o.no_time) std::printf("  time %.2fs", r.seconds);
    if (!r.abort_reason.empty())
      std::printf("  (aborted: %s)", r.abort_reason.c_str());
    std::printf("\n");
  }

  Summary s = summarize(results);
  std::printf("Best:  %s\n", format_cost(s.best).c_str());
  std::printf("Avg:   %s\n", format_cost(s.avg).c_str());
  std::printf("Worst: %s\n", format_cost(s.worst).c_str());
  BksRegistry reg = load_bks(o.bks_path);
  if (auto bks = reg.lookup(inst.name, inst.variant)) {
    std::printf("BKS:   %s  gap(best) %s%%  gap(avg) %s%%\n",
                format_cost(*bks).c_str(),
                format_gap(gap_percent(s.best, *bks)).c_str(),
                format_gap(gap_percent(s.avg, *bks)).c_str());
  }
  if (!o.no_time) std::printf("Time:  %.2fs total\n", s.seconds);

  if (!solution_out.empty()) {
    std::ofstream out(solution_out);
    if (!out) throw std::runtime_error(solution_out + ": cannot open for writing");
    write_solution(results[s.best_run].best, out);
  }
  if (!trace_out.empty()) {
    std::ofstream out(trace_out);
    if (!out) throw std::runtime_error(trace_out + ": cannot open for writing");
    write_trace_header(out);
    for (int i = 0; i < o.runs; ++i) write_trace(results[i].trace, i + 1, out);
  }
  return 0;
}

int cmd_bench(const CommonOpts& o, const std::string& suite_dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(suite_dir))
    if (e.is_regular_file() && e.path().extension() == ".txt")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error(suite_dir + ": no .txt instance files found");

  BksRegistry reg = load_bks(o.bks_path);
  std::printf("%-14s %12s %12s %10s %12s", "Inst", "BKS", "Avg", "Gap%",
              "Best");
  if (!o.no_time) std::printf(" %9s", "Time");
  std::printf("\n");

  double gap_sum = 0.0;
  int gap_count = 0;
  for (const auto& path : files) {
    Instance inst =
        normalize_fleet(load_instance(path.string(), variant_of(o.variant_name)));
    auto results = run_many(inst, params_of(o), o.runs, o.threads);
    Summary s = summarize(results);
    auto bks = reg.lookup(inst.name, inst.variant);
    std::string label = inst.name + "/" + to_string(inst.variant);
    std::printf("%-14s %12s %12s", label.c_str(),
                bks ? format_cost(*bks).c_str() : "-",
                format_cost(s.avg).c_str());
    if (bks) {
      double g = gap_percent(s.avg, *bks);
      gap_sum += g;
      ++gap_count;
      std::printf(" %10s", format_gap(g).c_str());
    } else {
      std::printf(" %10s", "-");
    }
    std::printf(" %12s", format_cost(s.best).c_str());
    if (!o.no_time) std::printf(" %8.2fs", s.seconds);
    std::printf("\n");
  }
  if (gap_count > 0)
    std::printf("Average gap over %d instances: %s%%\n", gap_count,
                format_gap(gap_sum / gap_count).c_str());
  return 0;
}

int cmd_oracle(const std::string& instance_path,
               const std::string& variant_name) {
  Instance inst =
      normalize_fleet(load_instance(instance_path, variant_of(variant_name)));
  DistanceMatrix dist(inst);
  OracleResult res = exact_solve(inst, dist);
  write_solution(res.solution, std::cout);
  std::printf("Optimal cost: %s\n", format_cost(res.cost).c_str());
  return 0;
}

int cmd_convert(const std::string& input, const std::string& output,
                const std::string& name, const std::string& variant_name,
                const std::string& fleet_key) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error(input + ": cannot open file");
  std::optional<std::string> key;
  if (!fleet_key.empty()) key = fleet_key;
  Variant v = variant_from_string(variant_name);
  Instance inst = convert_legacy(in, input, name, v, key);
  std::ofstream out(output);
  if (!out) throw std::runtime_error(output + ": cannot open for writing");
  serialize_instance(inst, out);
  std::printf("Wrote %s (%s, %d customers, %d vehicle types)\n", output.c_str(),
              to_string(inst.variant), inst.n, inst.num_types());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heterogeneous-fleet VRP solver and benchmark harness"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string solution_out, trace_out, suite_dir;
  std::string conv_input, conv_output, conv_name, conv_variant, conv_fleet;

  CLI::App* solve = app.add_subcommand("solve", "run the solver on one instance");
  solve->add_option("--instance", o.instance_path, "instance file")->required();
  solve->add_option("--variant", o.variant_name,
                    "problem variant (overrides the file)");
  add_param_flags(solve, o);
  solve->add_option("--solution-out", solution_out,
                    "write the best solution found to this file");
  solve->add_option("--trace", trace_out, "write per-iteration CSV here");

  CLI::App* bench =
      app.add_subcommand("bench", "run every instance in a directory");
  bench->add_option("--suite", suite_dir, "directory of .txt instances")
      ->required();
  bench->add_option("--variant", o.variant_name,
                    "problem variant (overrides the files)");
  add_param_flags(bench, o);

  CLI::App* oracle =
      app.add_subcommand("oracle", "exact optimum for a tiny instance");
  oracle->add_option("--instance", o.instance_path, "instance file")->required();
  oracle->add_option("--variant", o.variant_name,
                     "problem variant (overrides the file)");

  CLI::App* convert =
      app.add_subcommand("convert", "turn a legacy file into the canonical format");
  convert->add_option("--input", conv_input, "legacy instance file")->required();
  convert->add_option("--output", conv_output, "canonical file to write")
      ->required();
  convert->add_option("--name", conv_name, "instance name for the NAME line")
      ->required();
  convert->add_option("--variant", conv_variant, "problem variant")->required();
  convert->add_option("--fleet", conv_fleet,
                      "benchmark fleet key (3..6, 13..20, N1..N5, H1..H5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(o, solution_out, trace_out);
    if (bench->parsed()) return cmd_bench(o, suite_dir);
    if (oracle->parsed()) return cmd_oracle(o.instance_path, o.variant_name);
    if (convert->parsed())
      return cmd_convert(conv_input, conv_output, conv_name, conv_variant,
                         conv_fleet);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
