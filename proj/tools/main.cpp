#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inhabit/frontend.hpp"
#include "inhabit/oracle.hpp"
#include "inhabit/solve.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SearchFlags {
  double timeout = 60.0;
  std::size_t count = 1;
  double entropy_start = 1000.0;
  double entropy_factor = 3.0;
  std::size_t extend = 4;
  double branch_factor = 5.0;
  bool trace = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--timeout", timeout, "Wall-clock limit in seconds")->capture_default_str();
    cmd->add_option("--count", count, "Stop after this many distinct solutions")
        ->capture_default_str();
    cmd->add_option("--entropy-start", entropy_start, "Initial entropy budget")
        ->capture_default_str();
    cmd->add_option("--entropy-factor", entropy_factor, "Budget growth per iteration")
        ->capture_default_str();
    cmd->add_option("--extend", extend, "Metavariable slots added per iteration")
        ->capture_default_str();
    cmd->add_option("--branch-factor", branch_factor,
                    "Predicted entropy multiplier per unconstrained hole")
        ->capture_default_str();
    cmd->add_flag("--trace", trace, "Report per-iteration budgets and node counts on stderr");
  }

  inhabit::SolveOptions options() const {
    inhabit::SolveOptions opt;
    opt.timeout_seconds = timeout;
    opt.max_solutions = count;
    opt.search.entropy_start = entropy_start;
    opt.search.entropy_factor = entropy_factor;
    opt.search.extend_step = extend;
    opt.search.branch_penalty = branch_factor;
    return opt;
  }
};

int run_solve(const std::string& path, const SearchFlags& flags) {
  inhabit::Problem problem;
  try {
    problem = inhabit::parse_problem(read_file(path));
  } catch (const std::exception& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 2;
  }

  inhabit::SolveOptions opt = flags.options();
  opt.on_solution = [](const std::string& text) { std::cout << text << "\n"; };
  std::uint64_t previous_nodes = 0;
  if (flags.trace) {
    opt.on_iteration = [&previous_nodes](const inhabit::IterationInfo& info) {
      if (info.iteration > 1)
        std::cerr << "  nodes this iteration: " << (info.nodes_before - previous_nodes) << "\n";
      previous_nodes = info.nodes_before;
      std::cerr << "iteration " << info.iteration << ": entropy " << info.entropy
                << ", capacity " << info.capacity << "\n";
    };
  }

  inhabit::SolveResult result;
  try {
    result = inhabit::solve_problem(problem, opt);
  } catch (const inhabit::FrontendError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 2;
  }
  if (flags.trace)
    std::cerr << "total: " << result.iterations << " iteration(s), " << result.nodes
              << " node(s), " << result.wall_ms << " ms\n";
  return result.solutions.empty() ? 1 : 0;
}

struct BenchRow {
  std::string name;
  bool solved = false;
  double wall_ms = 0.0;
  std::size_t iterations = 0;
  std::uint64_t nodes = 0;
  std::string error;
  std::string solution;
};

int run_bench(const std::string& dir, const SearchFlags& flags, bool as_json) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".dtt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows;
  for (const auto& file : files) {
    BenchRow row;
    row.name = file.stem().string();
    try {
      inhabit::Problem problem = inhabit::parse_problem(read_file(file.string()));
      inhabit::SolveResult result = inhabit::solve_problem(problem, flags.options());
      row.solved = !result.solutions.empty();
      row.wall_ms = result.wall_ms;
      row.iterations = result.iterations;
      row.nodes = result.nodes;
      if (row.solved) row.solution = result.solutions.front();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
    if (!as_json) {
      const BenchRow& r = rows.back();
      std::printf("%-18s %-7s %10.1f ms %4zu iter %10llu nodes  %s\n", r.name.c_str(),
                  r.error.empty() ? (r.solved ? "solved" : "no") : "error", r.wall_ms,
                  r.iterations, static_cast<unsigned long long>(r.nodes),
                  r.error.empty() ? r.solution.c_str() : r.error.c_str());
    }
  }

  if (as_json) {
    json out = json::array();
    for (const BenchRow& r : rows) {
      json rec{{"name", r.name},
               {"solved", r.solved},
               {"wall_ms", r.wall_ms},
               {"iterations", r.iterations},
               {"nodes", r.nodes}};
      if (!r.error.empty()) rec["error"] = r.error;
      out.push_back(std::move(rec));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t solved = 0;
    for (const BenchRow& r : rows) solved += r.solved ? 1 : 0;
    std::printf("solved %zu/%zu\n", solved, rows.size());
  }
  return 0;
}

int run_oracle_check(const std::string& path, const std::string& term_text) {
  try {
    inhabit::Problem problem = inhabit::parse_problem(read_file(path));
    inhabit::SurfaceTerm term = inhabit::parse_term(term_text);
    bool ok = inhabit::oracle::check(problem, term);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int run_oracle_enumerate(const std::string& path, std::size_t max_nodes) {
  try {
    inhabit::Problem problem = inhabit::parse_problem(read_file(path));
    for (const inhabit::SurfaceTerm& t : inhabit::oracle::enumerate(problem, max_nodes))
      std::cout << inhabit::format_term(t) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type inhabitation solver for dependent function types"};
  app.require_subcommand(1);

  std::string solve_path;
  SearchFlags solve_flags;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a single problem file");
  solve_cmd->add_option("file", solve_path, "Problem file")->required();
  solve_flags.attach(solve_cmd);

  std::string bench_dir;
  SearchFlags bench_flags;
  bool bench_json = false;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run every .dtt problem in a directory");
  bench_cmd->add_option("dir", bench_dir, "Directory of problem files")->required();
  bench_flags.attach(bench_cmd);
  bench_cmd->add_flag("--json", bench_json, "Machine-readable output");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference tools");
  oracle_cmd->require_subcommand(1);
  std::string oracle_check_path, oracle_term;
  CLI::App* ocheck = oracle_cmd->add_subcommand("check", "Check a term against a goal");
  ocheck->add_option("file", oracle_check_path, "Problem file")->required();
  ocheck->add_option("--term", oracle_term, "Candidate term")->required();
  std::string oracle_enum_path;
  std::size_t oracle_max_nodes = 3;
  CLI::App* oenum = oracle_cmd->add_subcommand("enumerate", "List all small inhabitants");
  oenum->add_option("file", oracle_enum_path, "Problem file")->required();
  oenum->add_option("--max-nodes", oracle_max_nodes, "Application-node budget")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) return run_solve(solve_path, solve_flags);
  if (bench_cmd->parsed()) return run_bench(bench_dir, bench_flags, bench_json);
  if (ocheck->parsed()) return run_oracle_check(oracle_check_path, oracle_term);
  if (oenum->parsed()) return run_oracle_enumerate(oracle_enum_path, oracle_max_nodes);
  return 2;
}
