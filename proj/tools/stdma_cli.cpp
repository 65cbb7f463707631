#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stdma/io.hpp"
#include "stdma/stdma.hpp"

namespace {

using namespace stdma;

void write_json(const std::string& path, const io::json& j) {
  io::write_text_file(path, j.dump(2) + "\n");
}

int cmd_gen(std::size_t nodes, double radius, std::uint64_t seed, const std::string& out) {
  Rng rng(seed);
  write_json(out, io::network_to_json(generate_network(nodes, radius, rng)));
  std::cout << "wrote " << nodes << " nodes to " << out << "\n";
  return 0;
}

int cmd_schedule(const std::string& net_path, const std::string& params_path,
                 const std::string& algo, std::uint64_t seed, const std::string& out) {
  const Network net = io::network_from_json(io::read_json_file(net_path));
  const RadioParams rp = io::params_from_json(io::read_json_file(params_path));
  const TwoTierGraph g = build_two_tier_graph(net, rp);
  Rng rng(seed);
  const Schedule s = run_scheduler(parse_algorithm(algo), net, g, rp, rng);
  write_json(out, io::schedule_to_json(s));
  std::cout << algo << ": " << g.comm_edges().size() << " links in " << s.num_slots()
            << " slots\n";
  return 0;
}

struct FadingOptions {
  bool enabled = false;
  double sigma_v = 1.0;
  double sigma_w = 1.0;
  std::uint64_t seed = 1;
};

int cmd_evaluate(const std::string& net_path, const std::string& params_path,
                 const std::string& sched_path, const FadingOptions& fading,
                 const std::string& out) {
  const Network net = io::network_from_json(io::read_json_file(net_path));
  const RadioParams rp = io::params_from_json(io::read_json_file(params_path));
  const Schedule s = io::schedule_from_json(io::read_json_file(sched_path));
  std::optional<GainMatrix> gains;
  if (fading.enabled) {
    Rng rng(fading.seed);
    gains = sample_gains(rng, net.size(), FadingParams(fading.sigma_v, fading.sigma_w));
  }
  const EvaluationReport report = verify_schedule(net, s, rp, gains ? &*gains : nullptr);
  write_json(out, io::report_to_json(report));
  std::cout << "spatial reuse " << report.spatial_reuse << " over " << report.num_slots
            << " slots, " << report.violations.size() << " violations\n";
  return 0;
}

int cmd_experiment(const std::string& preset_name, bool fading, std::optional<std::size_t> trials,
                   std::uint64_t seed, const std::string& out) {
  ExperimentPreset preset = preset_by_name(preset_name);
  if (trials) preset.trials = *trials;
  if (fading) preset.fading = FadingParams{};
  const auto records =
      run_experiment(preset, {Algorithm::kCfls, Algorithm::kGraphBaseline}, seed);
  io::write_text_file(out, to_csv(records));
  std::cout << "wrote " << records.size() << " records to " << out << "\n";
  return 0;
}

int cmd_oracle(const std::string& net_path, const std::string& params_path,
               std::size_t max_edges, const std::string& out) {
  const Network net = io::network_from_json(io::read_json_file(net_path));
  const RadioParams rp = io::params_from_json(io::read_json_file(params_path));
  const TwoTierGraph g = build_two_tier_graph(net, rp);
  const Schedule s = optimal_schedule_bruteforce(net, g, rp, max_edges);
  write_json(out, io::schedule_to_json(s));
  std::cout << "optimal: " << s.num_slots() << " slots";
  if (!s.empty()) std::cout << ", spatial reuse " << spatial_reuse(net, s, rp);
  std::cout << "\n";
  return 0;
}

int cmd_graph(const std::string& net_path, const std::string& params_path,
              const std::string& out) {
  const Network net = io::network_from_json(io::read_json_file(net_path));
  const RadioParams rp = io::params_from_json(io::read_json_file(params_path));
  io::write_text_file(out, io::graph_to_edge_list(build_two_tier_graph(net, rp)));
  return 0;
}

int cmd_verify_paper() {
  const PaperCheckReport report = run_paper_examples();
  print_paper_report(std::cout, report);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SINR-aware STDMA link scheduling"};
  app.require_subcommand(1);

  std::string net_path, params_path, sched_path, out, algo = "cfls", preset = "exp1";
  std::size_t nodes = 0, max_edges = kDefaultOracleMaxEdges;
  std::optional<std::size_t> trials;
  double radius = 0.0;
  std::uint64_t seed = 1;
  FadingOptions fading;

  auto* gen = app.add_subcommand("gen", "Generate a uniform random network on a disc");
  gen->add_option("--nodes", nodes, "Number of nodes")->required()->check(CLI::Range(2, 1000000));
  gen->add_option("--radius", radius, "Deployment radius in meters")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output network JSON")->required();

  auto* sched = app.add_subcommand("schedule", "Compute a link schedule");
  sched->add_option("--net", net_path, "Network JSON")->required()->check(CLI::ExistingFile);
  sched->add_option("--params", params_path, "Radio params JSON")->required()->check(CLI::ExistingFile);
  sched->add_option("--algo", algo, "cfls | graph-baseline")->check(CLI::IsMember({"cfls", "graph-baseline"}));
  sched->add_option("--seed", seed, "Labeling seed");
  sched->add_option("--out", out, "Output schedule JSON")->required();

  auto* eval = app.add_subcommand("evaluate", "Verify a schedule and compute spatial reuse");
  eval->add_option("--net", net_path, "Network JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--params", params_path, "Radio params JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--schedule", sched_path, "Schedule JSON")->required()->check(CLI::ExistingFile);
  eval->add_flag("--fading", fading.enabled, "Apply Rayleigh fading and lognormal shadowing");
  eval->add_option("--sigma-v", fading.sigma_v, "Mean of the exponential fading power gain")->check(CLI::PositiveNumber);
  eval->add_option("--sigma-w", fading.sigma_w, "Std of the Gaussian shadowing exponent")->check(CLI::PositiveNumber);
  eval->add_option("--seed", fading.seed, "Fading seed");
  eval->add_option("--out", out, "Output report JSON")->required();

  auto* exp = app.add_subcommand("experiment", "Monte Carlo spatial-reuse sweep");
  exp->add_option("--preset", preset, "exp1 | exp2")->check(CLI::IsMember({"exp1", "exp2"}));
  exp->add_flag("--fading", fading.enabled, "Also evaluate under fading (sigma_V^2 = sigma_W^2 = 1)");
  exp->add_option("--trials", trials, "Trials per node count (default 200)")->check(CLI::PositiveNumber);
  exp->add_option("--seed", seed, "Master seed");
  exp->add_option("--out", out, "Output CSV")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimal schedule for tiny networks");
  oracle->add_option("--net", net_path, "Network JSON")->required()->check(CLI::ExistingFile);
  oracle->add_option("--params", params_path, "Radio params JSON")->required()->check(CLI::ExistingFile);
  oracle->add_option("--max-edges", max_edges, "Refuse instances with more directed links");
  oracle->add_option("--out", out, "Output schedule JSON")->required();

  auto* graph = app.add_subcommand("graph", "Dump the two-tier graph as an edge list");
  graph->add_option("--net", net_path, "Network JSON")->required()->check(CLI::ExistingFile);
  graph->add_option("--params", params_path, "Radio params JSON")->required()->check(CLI::ExistingFile);
  graph->add_option("--out", out, "Output edge list")->required();

  auto* paper = app.add_subcommand("verify-paper", "Recompute the reference worked examples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(nodes, radius, seed, out);
    if (*sched) return cmd_schedule(net_path, params_path, algo, seed, out);
    if (*eval) return cmd_evaluate(net_path, params_path, sched_path, fading, out);
    if (*exp) return cmd_experiment(preset, fading.enabled, trials, seed, out);
    if (*oracle) return cmd_oracle(net_path, params_path, max_edges, out);
    if (*graph) return cmd_graph(net_path, params_path, out);
    if (*paper) return cmd_verify_paper();
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
