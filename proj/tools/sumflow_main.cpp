// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Command-line front end. All primary output is machine-parseable CSV on
// stdout and is byte-identical across reruns with the same inputs; wall
// times go to stderr as "# ..." lines.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumflow/exact.hpp"
#include "sumflow/generator.hpp"
#include "sumflow/heuristic.hpp"
#include "sumflow/io.hpp"
#include "sumflow/tableau.hpp"

namespace {

using namespace sumflow;

constexpr int kExitCompleted = 0;
constexpr int kExitStranded = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitError = 3;

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

std::string format_ms(double ms) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", ms);
  return buffer;
}

std::string format_ratio(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CommandError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw CommandError("cannot write " + path);
  }
}

bool dimacs_extension(const std::string& path) {
  return path.ends_with(".dimacs") || path.ends_with(".dmx");
}

FlowInstance load_instance(const std::string& path, const std::string& format,
                           std::optional<FlowUnits> supply) {
  const std::string text = read_file(path);
  const bool dimacs =
      format.empty() ? dimacs_extension(path) : format == "dimacs";
  FlowInstance instance = dimacs ? parse_dimacs(text) : parse_matrix(text);
  if (supply.has_value()) {
    instance = instance.with_supply(*supply);
  }
  return instance;
}

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::kCompleted:
      return kExitCompleted;
    case SolveStatus::kStranded:
      return kExitStranded;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
  }
  return kExitError;
}

struct SolveArgs {
  std::string path;
  std::string format;
  std::optional<FlowUnits> supply;
  std::string trace_path;
};

int cmd_solve(const SolveArgs& args, bool exact) {
  const FlowInstance instance =
      load_instance(args.path, args.format, args.supply);
  const auto start = std::chrono::steady_clock::now();
  FlowSolution solution;
  std::size_t dispatches = 0;
  if (exact) {
    ExactRun run = solve_exact_detailed(instance);
    solution = std::move(run.solution);
    dispatches = run.augmentations.size();
  } else {
    solution = run_heuristic(instance);
    dispatches = solution.trace.size();
  }
  const double ms = elapsed_ms(start);

  std::cout << "solver,status,shipped,total_cost,dispatches\n"
            << (exact ? "exact" : "heuristic") << ","
            << to_string(solution.status) << "," << solution.shipped << ","
            << solution.total_cost << "," << dispatches << "\n";
  std::cerr << "# solve_ms=" << format_ms(ms) << "\n";
  if (!args.trace_path.empty()) {
    write_file(args.trace_path, write_trace(solution));
  }
  return exit_code(solution.status);
}

int cmd_verify(const SolveArgs& args) {
  const FlowInstance instance =
      load_instance(args.path, args.format, args.supply);
  const auto start = std::chrono::steady_clock::now();
  const GapReport report = gap(instance);
  const double ms = elapsed_ms(start);

  std::cout << "heuristic_status,heuristic_shipped,heuristic_cost,"
               "exact_status,exact_shipped,exact_cost,absolute_gap,"
               "relative_gap\n"
            << to_string(report.heuristic_status) << ","
            << report.heuristic_shipped << "," << report.heuristic_cost << ","
            << to_string(report.exact_status) << "," << report.exact_shipped
            << "," << report.exact_cost << ",";
  if (report.absolute_gap.has_value()) {
    std::cout << *report.absolute_gap << ","
              << format_ratio(*report.relative_gap);
  } else {
    std::cout << ",";
  }
  std::cout << "\n";
  std::cerr << "# verify_ms=" << format_ms(ms) << "\n";
  return kExitCompleted;
}

struct GenArgs {
  std::string out_path;
  GenConfig config;
  bool fixed_supply = false;
};

int cmd_gen(const GenArgs& args) {
  GenConfig config = args.config;
  config.supply_mode =
      args.fixed_supply ? SupplyMode::kFixed : SupplyMode::kMaxFlow;
  const FlowInstance instance = generate(config);
  write_file(args.out_path, write_matrix(instance));
  std::cout << "nodes,density,cap_lo,cap_hi,cost_lo,cost_hi,seed,"
               "supply_mode,supply,arcs\n"
            << config.node_count << "," << format_ratio(config.density) << ","
            << config.cap_min << "," << config.cap_max << ","
            << config.cost_min << "," << config.cost_max << "," << config.seed
            << "," << (args.fixed_supply ? "fixed" : "maxflow") << ","
            << instance.supply() << "," << instance.arcs().size() << "\n";
  return kExitCompleted;
}

struct BenchArgs {
  std::vector<int> sizes;
  int seeds = 1;
  int exact_cutoff = 300;
  bool fixtures = false;
};

void bench_fixtures() {
  std::cout << "name,nodes,arcs,supply,reported_cost,heuristic_status,"
               "heuristic_cost,exact_status,exact_cost\n";
  for (const ReferenceFixture& fixture : reference_fixtures()) {
    const auto start = std::chrono::steady_clock::now();
    const GapReport report = gap(fixture.instance);
    const double ms = elapsed_ms(start);
    std::cout << fixture.name << "," << fixture.instance.node_count() << ","
              << fixture.instance.arcs().size() << ","
              << fixture.instance.supply() << "," << fixture.reported_cost
              << "," << to_string(report.heuristic_status) << ","
              << report.heuristic_cost << "," << to_string(report.exact_status)
              << "," << report.exact_cost << "\n";
    std::cerr << "# fixture=" << fixture.name << " ms=" << format_ms(ms)
              << "\n";
  }
}

int cmd_bench(const BenchArgs& args) {
  if (args.fixtures) {
    bench_fixtures();
    return kExitCompleted;
  }
  if (args.sizes.empty()) {
    throw CommandError("bench needs --sizes or --fixtures");
  }
  std::cout << "size,seed,nodes,arcs,supply,heuristic_status,heuristic_cost,"
               "dispatches,exact_status,exact_cost,absolute_gap,relative_gap\n";
  for (const int size : args.sizes) {
    for (int seed = 1; seed <= args.seeds; ++seed) {
      GenConfig config;
      config.node_count = size;
      config.seed = static_cast<std::uint64_t>(seed);
      const FlowInstance instance = generate(config);

      auto start = std::chrono::steady_clock::now();
      const FlowSolution heuristic = run_heuristic(instance);
      const double heuristic_ms = elapsed_ms(start);

      std::cout << size << "," << seed << "," << instance.node_count() << ","
                << instance.arcs().size() << "," << instance.supply() << ","
                << to_string(heuristic.status) << "," << heuristic.total_cost
                << "," << heuristic.trace.size() << ",";
      std::string times = "# size=" + std::to_string(size) +
                          " seed=" + std::to_string(seed) +
                          " heuristic_ms=" + format_ms(heuristic_ms);
      if (size <= args.exact_cutoff) {
        start = std::chrono::steady_clock::now();
        const FlowSolution exact = solve_exact(instance);
        const double exact_ms = elapsed_ms(start);
        std::cout << to_string(exact.status) << "," << exact.total_cost << ",";
        if (heuristic.status == SolveStatus::kCompleted &&
            exact.status == SolveStatus::kCompleted) {
          const CostValue gap_value = heuristic.total_cost - exact.total_cost;
          const double relative =
              exact.total_cost == 0
                  ? 0.0
                  : static_cast<double>(gap_value) / exact.total_cost;
          std::cout << gap_value << "," << format_ratio(relative);
        } else {
          std::cout << ",";
        }
        times += " exact_ms=" + format_ms(exact_ms);
      } else {
        std::cout << ",,,";
      }
      std::cout << "\n";
      std::cerr << times << "\n";
    }
  }
  return kExitCompleted;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) {
      sizes.push_back(std::stoi(token));
    }
  }
  return sizes;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw CommandError("range must look like lo:hi, got \"" + text + "\"");
  }
  try {
    return {std::stoll(text.substr(0, colon)),
            std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CommandError("range must look like lo:hi, got \"" + text + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"summation-tableau heuristic and exact min-cost flow solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  SolveArgs exact_args;
  SolveArgs verify_args;
  const auto add_instance_flags = [](CLI::App* cmd, SolveArgs& args) {
    cmd->add_option("path", args.path, "instance file")->required();
    cmd->add_option("--format", args.format, "instance format")
        ->check(CLI::IsMember({"dimacs", "matrix"}));
    cmd->add_option("--supply", args.supply,
                    "override the instance's supply");
  };

  CLI::App* solve = app.add_subcommand("solve", "run the greedy heuristic");
  add_instance_flags(solve, solve_args);
  solve->add_option("--trace", solve_args.trace_path,
                    "write the dispatch log as CSV");

  CLI::App* exact = app.add_subcommand("exact", "run the exact solver");
  add_instance_flags(exact, exact_args);
  exact->add_option("--trace", exact_args.trace_path,
                    "write the (empty) dispatch log as CSV");

  CLI::App* verify =
      app.add_subcommand("verify", "run both solvers and report the gap");
  add_instance_flags(verify, verify_args);

  GenArgs gen_args;
  std::string cap_range;
  std::string cost_range;
  CLI::App* gen =
      app.add_subcommand("gen", "write a seeded random instance (matrix)");
  gen->add_option("path", gen_args.out_path, "output file")->required();
  gen->add_option("--nodes", gen_args.config.node_count, "node count");
  gen->add_option("--density", gen_args.config.density,
                  "probability of each optional arc");
  gen->add_option("--cap-range", cap_range, "capacity range lo:hi");
  gen->add_option("--cost-range", cost_range, "cost range lo:hi");
  gen->add_option("--seed", gen_args.config.seed, "generator seed");
  CLI::Option* gen_supply = gen->add_option(
      "--supply", gen_args.config.fixed_supply,
      "fix the supply instead of using the maximum feasible flow");

  BenchArgs bench_args;
  std::string sizes;
  CLI::App* bench =
      app.add_subcommand("bench", "sweep generated sizes or the fixtures");
  bench->add_option("--sizes", sizes, "comma-separated node counts");
  bench->add_option("--seeds", bench_args.seeds, "seeds per size (1..k)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--exact-cutoff", bench_args.exact_cutoff,
                    "largest size the exact solver still runs at");
  bench->add_flag("--fixtures", bench_args.fixtures,
                  "report the built-in networks instead of generating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    // --help and friends exit 0; every usage mistake maps to the common
    // error code.
    const int code = app.exit(error);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_args, /*exact=*/false);
    }
    if (exact->parsed()) {
      return cmd_solve(exact_args, /*exact=*/true);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_args);
    }
    if (gen->parsed()) {
      if (!cap_range.empty()) {
        std::tie(gen_args.config.cap_min, gen_args.config.cap_max) =
            parse_range(cap_range);
      }
      if (!cost_range.empty()) {
        std::tie(gen_args.config.cost_min, gen_args.config.cost_max) =
            parse_range(cost_range);
      }
      gen_args.fixed_supply = gen_supply->count() > 0;
      return cmd_gen(gen_args);
    }
    if (bench->parsed()) {
      bench_args.sizes = parse_sizes(sizes);
      return cmd_bench(bench_args);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
