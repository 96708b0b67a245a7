// Command-line frontend: solve tournament solutions, run verification
// sweeps, build majority tournaments from preference profiles.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tk/lab.hpp"
#include "tk/profile.hpp"
#include "tk/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHardViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitEvenElectorate = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw tk::MalformedInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_solve(const std::string& input, const std::string& solutions,
              bool with_strategy) {
  tk::Tournament t = tk::parse_tournament(read_input(input));
  for (const std::string& name : split_csv(solutions)) {
    auto id = tk::parse_solution(name);
    if (!id) {
      std::cerr << "unknown solution: " << name << "\n";
      return kExitBadInput;
    }
    tk::AltSet set = tk::solve(*id, t);
    std::cout << tk::solution_name(*id) << ": " << tk::format_set(set) << "\n";
    if (*id == tk::SolutionId::BP && with_strategy) {
      tk::Strategy s = tk::solve_symmetric_game(tk::tournament_game(t));
      std::cout << "BP strategy: " << tk::strategy_to_string(s) << "\n";
    }
  }
  return kExitOk;
}

int run_sweep(const std::string& orders, const std::string& mode,
              const std::string& checks, long sample, std::uint64_t seed,
              int jobs, const std::string& output) {
  tk::SweepConfig cfg;
  auto dots = orders.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.order_lo = cfg.order_hi = std::stoi(orders);
    } else {
      cfg.order_lo = std::stoi(orders.substr(0, dots));
      cfg.order_hi = std::stoi(orders.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "bad --orders range: " << orders << "\n";
    return kExitBadInput;
  }
  if (cfg.order_lo < 1 || cfg.order_hi < cfg.order_lo) {
    std::cerr << "bad --orders range: " << orders << "\n";
    return kExitBadInput;
  }
  if (mode == "labeled") {
    cfg.mode = tk::EnumMode::labeled;
  } else if (mode == "canonical") {
    cfg.mode = tk::EnumMode::canonical;
  } else {
    std::cerr << "bad --mode: " << mode << "\n";
    return kExitBadInput;
  }
  cfg.checks = split_csv(checks);
  if (cfg.checks.empty()) {
    std::cerr << "no checks requested\n";
    return kExitBadInput;
  }
  if (sample > 0) cfg.sample = sample;
  cfg.seed = seed;
  cfg.jobs = jobs;

  tk::HarnessReport report = tk::sweep(cfg);
  std::string body = report.render();
  if (output.empty() || output == "-") {
    std::cout << body;
  } else {
    std::ofstream out(output);
    out << body;
  }
  for (const auto& [name, c] : report.checks)
    if (!c.hard && c.viol > 0)
      std::cout << "FINDING: " << name << " viol=" << c.viol << "\n";
  for (const auto& [phase, secs] : report.phase_seconds)
    std::cerr << "time: " << phase << " " << secs << "s\n";
  return report.hard_violation() ? kExitHardViolation : kExitOk;
}

int run_mcgarvey(const std::string& input) {
  tk::PreferenceProfile p = tk::parse_profile(read_input(input));
  std::cout << tk::mcgarvey(p).to_matrix_string();
  return kExitOk;
}

int run_banks_element(const std::string& input, std::uint64_t seed) {
  tk::Tournament t = tk::parse_tournament(read_input(input));
  std::cout << tk::banks_element(t, seed) + 1 << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament solution solver and verification harness"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string solutions;
  bool with_strategy = false;
  auto* solve_cmd = app.add_subcommand("solve", "compute solutions for one tournament");
  solve_cmd->add_option("--input", input, "tournament matrix file ('-' for stdin)");
  solve_cmd->add_option("--solutions", solutions,
                        "comma-separated list: cnl,co,uc,ucinf,ba,tc,mc,me,bp,teq")
      ->required();
  solve_cmd->add_flag("--strategy", with_strategy,
                      "with bp: print the exact rational equilibrium");

  std::string orders = "1..5", mode = "labeled", checks;
  long sample = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output;
  auto* sweep_cmd = app.add_subcommand("sweep", "run checks over many tournaments");
  sweep_cmd->add_option("--orders", orders, "order range, e.g. 1..6");
  sweep_cmd->add_option("--mode", mode, "labeled or canonical");
  sweep_cmd
      ->add_option("--checks", checks,
                   "comma-separated: inclusions,mc-unique,oracles,equilibrium,"
                   "me-unique,teq-unique,conjectures")
      ->required();
  sweep_cmd->add_option("--sample", sample, "random sample size instead of exhaustive");
  sweep_cmd->add_option("--seed", seed, "sample seed");
  sweep_cmd->add_option("--jobs", jobs, "worker count");
  sweep_cmd->add_option("--output", output, "report file (default stdout)");

  std::string profile_input = "-";
  auto* mcgarvey_cmd =
      app.add_subcommand("mcgarvey", "majority tournament of a preference profile");
  mcgarvey_cmd->add_option("--input", profile_input, "profile file ('-' for stdin)");

  std::string ba_input = "-";
  std::uint64_t ba_seed = 0;
  auto* ba_cmd = app.add_subcommand("banks-element", "sample one Banks winner");
  ba_cmd->add_option("--input", ba_input, "tournament matrix file ('-' for stdin)");
  ba_cmd->add_option("--seed", ba_seed, "deterministic seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitBadInput : kExitOk;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(input, solutions, with_strategy);
    if (sweep_cmd->parsed())
      return run_sweep(orders, mode, checks, sample, seed, jobs, output);
    if (mcgarvey_cmd->parsed()) return run_mcgarvey(profile_input);
    if (ba_cmd->parsed()) return run_banks_element(ba_input, ba_seed);
  } catch (const tk::EvenElectorate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEvenElectorate;
  } catch (const tk::OrderTooLargeForExact& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const tk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
