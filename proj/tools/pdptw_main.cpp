#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdptw/ga.hpp"
#include "pdptw/generator.hpp"
#include "pdptw/io.hpp"
#include "pdptw/matrix.hpp"
#include "pdptw/oracle.hpp"
#include "pdptw/validate.hpp"

namespace {

// Exit codes are a stable contract: 0 feasible success, 1 input error,
// 2 infeasible result, 3 oracle refusal.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitRefused = 3;

struct GenOptions {
  pdptw::GenParams params;
  std::string output;
};

struct SolveOptions {
  std::string instance_path;
  std::string output = "solution.txt";
  std::string record_path;
  pdptw::GaConfig config;
  std::string pairing = "same";
};

struct ValidateOptions {
  std::string instance_path;
  std::string solution_path;
  std::string pairing = "same";
};

struct ExactOptions {
  std::string instance_path;
  int limit = 8;
  std::string pairing = "same";
  std::string output;
};

struct BenchOptions {
  std::vector<std::string> instance_paths;
  int gen_pairs = 0;
  int gen_vehicles = 1;
  int gen_count = 0;
  pdptw::GenParams gen_params;
  std::vector<int> pop_sizes{20};
  int generations = 50;
  int seed_count = 1;
  std::uint64_t seed_base = 1;
  pdptw::GaConfig config;
  std::string pairing = "same";
  std::string output = "bench.csv";
  std::string history_output;
};

void add_gen_param_flags(CLI::App* cmd, pdptw::GenParams& p, const std::string& prefix) {
  cmd->add_option("--" + prefix + "area", p.area, "Square side length; depot at the center");
  cmd->add_option("--" + prefix + "qmin", p.quantity_min, "Smallest pair quantity");
  cmd->add_option("--" + prefix + "qmax", p.quantity_max, "Largest pair quantity");
  cmd->add_option("--" + prefix + "capacity", p.capacity, "Uniform fleet capacity");
  cmd->add_option("--" + prefix + "cost-min", p.cost_rate_min, "Smallest per-distance cost rate");
  cmd->add_option("--" + prefix + "cost-max", p.cost_rate_max, "Largest per-distance cost rate");
  cmd->add_option("--" + prefix + "window-min", p.window_width_min, "Smallest window width");
  cmd->add_option("--" + prefix + "window-max", p.window_width_max, "Largest window width");
  cmd->add_option("--" + prefix + "horizon", p.horizon, "Depot closing time lower bound");
  cmd->add_option("--" + prefix + "service-min", p.service_min, "Smallest service time");
  cmd->add_option("--" + prefix + "service-max", p.service_max, "Largest service time");
}

void add_ga_flags(CLI::App* cmd, pdptw::GaConfig& config) {
  cmd->add_option("--pop-size", config.population_size, "Population size n")
      ->capture_default_str();
  cmd->add_option("--generations", config.generations, "Generation count")
      ->capture_default_str();
  cmd->add_option("--crossover-rate", config.crossover_rate,
                  "Probability of filling an intermediate slot by crossover")
      ->capture_default_str();
  cmd->add_option("--mutation-rate", config.mutation_rate,
                  "Probability of filling an intermediate slot by mutation")
      ->capture_default_str();
  cmd->add_option("--copy-rate", config.copy_rate,
                  "Probability of filling an intermediate slot by copy")
      ->capture_default_str();
  cmd->add_option("--tardiness-penalty", config.tardiness_penalty,
                  "Fitness penalty per unit of tardiness")
      ->capture_default_str();
  cmd->add_option("--infeasibility-penalty", config.infeasibility_penalty,
                  "Fitness penalty per capacity or precedence violation")
      ->capture_default_str();
}

nlohmann::json config_json(const pdptw::GaConfig& config) {
  return nlohmann::json{
      {"population_size", config.population_size},
      {"generations", config.generations},
      {"crossover_rate", config.crossover_rate},
      {"mutation_rate", config.mutation_rate},
      {"copy_rate", config.copy_rate},
      {"tardiness_penalty", config.tardiness_penalty},
      {"infeasibility_penalty", config.infeasibility_penalty},
      {"seed", config.rng_seed},
      {"pairing", pdptw::to_string(config.pairing)},
  };
}

int run_gen(const GenOptions& opt) {
  const pdptw::Instance instance = pdptw::generate_instance(opt.params);
  pdptw::write_instance_file(instance, opt.output);
  std::cout << opt.output << "\n";
  std::cout << "pairs " << instance.pairs().size() << " vertices " << instance.vertices().size()
            << " vehicles " << instance.fleet_size() << "\n";
  return kExitOk;
}

int run_solve(SolveOptions& opt) {
  opt.config.pairing = pdptw::pairing_mode_from_string(opt.pairing);
  const pdptw::Instance instance = pdptw::read_instance_file(opt.instance_path);

  const auto started = std::chrono::steady_clock::now();
  const pdptw::GaResult result = pdptw::evolve(instance, opt.config);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  pdptw::write_solution_file(result.best_solution, opt.output);

  // Wall-clock time goes to the console only, so identical flags and seed
  // produce byte-identical files.
  nlohmann::json record{
      {"instance", opt.instance_path},
      {"config", config_json(opt.config)},
      {"best_fitness", result.best_fitness},
      {"best_cost", result.best_solution.total_cost},
      {"best_distance", result.best_solution.total_distance},
      {"vehicles_used", result.best_solution.vehicles_used()},
      {"feasible", result.best_solution.feasible},
      {"evaluations", result.evaluations},
      {"history", result.history},
  };
  const std::string record_path =
      opt.record_path.empty() ? opt.output + ".run.json" : opt.record_path;
  std::ofstream record_out(record_path);
  if (!record_out) {
    std::cerr << "cannot open '" << record_path << "' for writing\n";
    return kExitInputError;
  }
  record_out << record.dump(2) << "\n";

  std::cout << "best_cost " << pdptw::format_real(result.best_solution.total_cost)
            << " best_fitness " << pdptw::format_real(result.best_fitness) << " vehicles_used "
            << result.best_solution.vehicles_used() << " feasible "
            << (result.best_solution.feasible ? "yes" : "no") << "\n";
  std::cout << "wrote " << opt.output << " and " << record_path << " in " << elapsed << " s\n";
  return result.best_solution.feasible ? kExitOk : kExitInfeasible;
}

int run_validate(const ValidateOptions& opt) {
  const pdptw::PairingMode mode = pdptw::pairing_mode_from_string(opt.pairing);
  const pdptw::Instance instance = pdptw::read_instance_file(opt.instance_path);
  const std::vector<std::vector<int>> routes =
      pdptw::read_solution_routes_file(opt.solution_path, instance);

  pdptw::Solution solution;
  solution.routes = routes;
  const pdptw::ValidationReport report = pdptw::validate_solution(solution, instance, mode);

  std::cout << "structure " << report.count(pdptw::ViolationKind::structure) << "\n";
  std::cout << "capacity " << report.count(pdptw::ViolationKind::capacity) << "\n";
  std::cout << "precedence " << report.count(pdptw::ViolationKind::precedence) << "\n";
  std::cout << "time_window " << report.count(pdptw::ViolationKind::time_window) << "\n";
  for (const pdptw::Violation& v : report.violations) {
    std::cout << "violation " << pdptw::to_string(v.kind) << " " << v.vehicle << " " << v.vertex
              << " " << v.detail << "\n";
  }
  std::cout << "feasible " << (report.feasible() ? "yes" : "no") << "\n";
  return report.feasible() ? kExitOk : kExitInfeasible;
}

int run_exact(const ExactOptions& opt) {
  const pdptw::PairingMode mode = pdptw::pairing_mode_from_string(opt.pairing);
  const pdptw::Instance instance = pdptw::read_instance_file(opt.instance_path);

  pdptw::OracleResult result;
  try {
    result = pdptw::exact_solve(instance, mode, opt.limit);
  } catch (const pdptw::OracleLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  }

  if (!result.feasible) {
    std::cout << "infeasible after exploring " << result.explored << " candidates\n";
    return kExitInfeasible;
  }
  std::cout << "optimal_cost " << pdptw::format_real(result.optimal_cost) << "\n";
  std::cout << "optimal_distance "
            << pdptw::format_real(result.optimal_solution.total_distance) << "\n";
  for (std::size_t k = 0; k < result.optimal_solution.routes.size(); ++k) {
    std::cout << "V" << (k + 1) << ":";
    for (int id : result.optimal_solution.routes[k]) std::cout << " " << id;
    std::cout << "\n";
  }
  std::cout << "explored " << result.explored << " feasible " << result.feasible_count << "\n";
  if (!opt.output.empty()) {
    pdptw::write_solution_file(result.optimal_solution, opt.output);
  }
  return kExitOk;
}

int run_bench(BenchOptions& opt) {
  opt.config.pairing = pdptw::pairing_mode_from_string(opt.pairing);
  opt.config.generations = opt.generations;

  std::vector<std::pair<std::string, pdptw::Instance>> instances;
  for (const std::string& path : opt.instance_paths) {
    instances.emplace_back(path, pdptw::read_instance_file(path));
  }
  if (opt.gen_count > 0) {
    if (opt.gen_pairs < 1) {
      std::cerr << "--gen-pairs is required with --gen-count\n";
      return kExitInputError;
    }
    for (int i = 0; i < opt.gen_count; ++i) {
      pdptw::GenParams params = opt.gen_params;
      params.pair_count = opt.gen_pairs;
      params.vehicle_count = opt.gen_vehicles;
      params.rng_seed = opt.seed_base + static_cast<std::uint64_t>(i);
      std::ostringstream name;
      name << "gen-p" << params.pair_count << "-k" << params.vehicle_count << "-s"
           << params.rng_seed;
      instances.emplace_back(name.str(), pdptw::generate_instance(params));
    }
  }
  if (instances.empty()) {
    std::cerr << "no instances: pass --inst or --gen-count\n";
    return kExitInputError;
  }

  std::ofstream csv(opt.output);
  if (!csv) {
    std::cerr << "cannot open '" << opt.output << "' for writing\n";
    return kExitInputError;
  }
  const std::string history_path =
      opt.history_output.empty() ? opt.output + ".history.csv" : opt.history_output;
  std::ofstream history(history_path);
  if (!history) {
    std::cerr << "cannot open '" << history_path << "' for writing\n";
    return kExitInputError;
  }

  csv << "instance,pairs,vehicles,pairing,pop_size,generations,crossover_rate,mutation_rate,"
         "copy_rate,tardiness_penalty,infeasibility_penalty,seed,best_fitness,best_cost,"
         "best_distance,vehicles_used,feasible\n";
  history << "instance,pop_size,seed,generation,best_fitness\n";

  const auto started = std::chrono::steady_clock::now();
  for (const auto& [name, instance] : instances) {
    for (const int pop_size : opt.pop_sizes) {
      for (int s = 0; s < opt.seed_count; ++s) {
        pdptw::GaConfig config = opt.config;
        config.population_size = pop_size;
        config.rng_seed = opt.seed_base + static_cast<std::uint64_t>(s);
        const pdptw::GaResult result = pdptw::evolve(instance, config);
        csv << name << "," << instance.pairs().size() << "," << instance.fleet_size() << ","
            << pdptw::to_string(config.pairing) << "," << pop_size << "," << config.generations
            << "," << config.crossover_rate << "," << config.mutation_rate << ","
            << config.copy_rate << "," << config.tardiness_penalty << ","
            << config.infeasibility_penalty << "," << config.rng_seed << ","
            << pdptw::format_real(result.best_fitness) << ","
            << pdptw::format_real(result.best_solution.total_cost) << ","
            << pdptw::format_real(result.best_solution.total_distance) << ","
            << result.best_solution.vehicles_used() << ","
            << (result.best_solution.feasible ? "yes" : "no") << "\n";
        for (std::size_t g = 0; g < result.history.size(); ++g) {
          history << name << "," << pop_size << "," << config.rng_seed << "," << g << ","
                  << pdptw::format_real(result.history[g]) << "\n";
        }
      }
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << "wrote " << opt.output << " and " << history_path << " in " << elapsed << " s\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-PDPTW solver: paired pickup-and-delivery routing with time windows"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  SolveOptions solve_opt;
  ValidateOptions validate_opt;
  ExactOptions exact_opt;
  BenchOptions bench_opt;

  CLI::App* gen = app.add_subcommand("gen", "Generate a random feasible instance");
  gen->add_option("--pairs", gen_opt.params.pair_count, "Number of request pairs")->required();
  gen->add_option("--vehicles", gen_opt.params.vehicle_count, "Fleet size (at most --pairs)")
      ->required();
  gen->add_option("--seed", gen_opt.params.rng_seed, "Random seed")->capture_default_str();
  add_gen_param_flags(gen, gen_opt.params, "");
  gen->add_option("-o,--output", gen_opt.output, "Instance file to write")->required();

  CLI::App* solve = app.add_subcommand("solve", "Run the genetic algorithm on an instance");
  solve->add_option("instance", solve_opt.instance_path, "Instance file")->required();
  solve->add_option("-o,--output", solve_opt.output, "Solution file to write")
      ->capture_default_str();
  solve->add_option("--record", solve_opt.record_path,
                    "Run record JSON path (default: <output>.run.json)");
  add_ga_flags(solve, solve_opt.config);
  solve->add_option("--seed", solve_opt.config.rng_seed, "Random seed")->capture_default_str();
  solve->add_option("--pairing", solve_opt.pairing, "Pairing mode: same or cross")
      ->capture_default_str();

  CLI::App* validate = app.add_subcommand("validate", "Check a solution file against an instance");
  validate->add_option("instance", validate_opt.instance_path, "Instance file")->required();
  validate->add_option("solution", validate_opt.solution_path, "Solution file")->required();
  validate->add_option("--pairing", validate_opt.pairing, "Pairing mode: same or cross")
      ->capture_default_str();

  CLI::App* exact = app.add_subcommand("exact", "Exact brute-force solve of a small instance");
  exact->add_option("instance", exact_opt.instance_path, "Instance file")->required();
  exact->add_option("--limit", exact_opt.limit, "Largest admissible request vertex count")
      ->capture_default_str();
  exact->add_option("--pairing", exact_opt.pairing, "Pairing mode: same or cross")
      ->capture_default_str();
  exact->add_option("-o,--output", exact_opt.output, "Optional solution file for the optimum");

  CLI::App* bench = app.add_subcommand("bench", "Batch runs over a config grid, CSV output");
  bench->add_option("--inst", bench_opt.instance_paths, "Instance files to solve");
  bench->add_option("--gen-pairs", bench_opt.gen_pairs, "Pairs per generated instance");
  bench->add_option("--gen-vehicles", bench_opt.gen_vehicles, "Vehicles per generated instance");
  bench->add_option("--gen-count", bench_opt.gen_count, "Number of generated instances");
  add_gen_param_flags(bench, bench_opt.gen_params, "gen-");
  bench->add_option("--pop-sizes", bench_opt.pop_sizes, "Population sizes to sweep")
      ->delimiter(',');
  bench->add_option("--generations", bench_opt.generations, "Generation count per run")
      ->capture_default_str();
  bench->add_option("--seeds", bench_opt.seed_count, "Number of seeds per cell")
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed_base, "First seed of the sweep")
      ->capture_default_str();
  add_ga_flags(bench, bench_opt.config);
  bench->add_option("--pairing", bench_opt.pairing, "Pairing mode: same or cross")
      ->capture_default_str();
  bench->add_option("-o,--output", bench_opt.output, "CSV file to write")->capture_default_str();
  bench->add_option("--history-o", bench_opt.history_output,
                    "Per-generation history CSV (default: <output>.history.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (solve->parsed()) return run_solve(solve_opt);
    if (validate->parsed()) return run_validate(validate_opt);
    if (exact->parsed()) return run_exact(exact_opt);
    if (bench->parsed()) return run_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
