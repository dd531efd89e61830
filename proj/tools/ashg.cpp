// Command-line front end: gen, solve, exact, reduce, extract, verify and
// experiment. Exit codes: 0 ok, 2 usage or parameter error, 3 capacity
// exceeded, 4 invalid input or failed validation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ashg/error.hpp"
#include "ashg/exact.hpp"
#include "ashg/experiment.hpp"
#include "ashg/generators.hpp"
#include "ashg/hardness.hpp"
#include "ashg/io.hpp"
#include "ashg/welfare.hpp"

namespace {

using ashg::io::Json;

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvalid = 4;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    ashg::io::write_file(path, content);
}

ashg::ValuationMatrix load_game(const std::string& path) {
  return ashg::io::game_from_json(ashg::io::parse(ashg::io::read_file(path)));
}

ashg::SimpleGraph load_graph(const std::string& path) {
  std::istringstream in(ashg::io::read_file(path));
  return ashg::io::read_dimacs(in);
}

Json welfare_json(const ashg::ValuationMatrix& game, const ashg::Partition& pi) {
  Json j;
  j["sw"] = ashg::io::welfare_to_json(ashg::social_welfare(game, pi));
  j["cw"] = ashg::io::welfare_to_json(ashg::correlation_welfare(game, pi));
  j["tv"] = ashg::io::welfare_to_json(ashg::total_value(game));
  return j;
}

void warn(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.5;
  std::optional<double> q;
  std::vector<std::size_t> class_sizes;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  ashg::ValuationMatrix game = [&] {
    if (a.model == "er") return ashg::gen_er(a.n, a.p, a.seed);
    if (a.model == "turan") return ashg::gen_turan(a.n, a.k, a.p, a.seed);
    if (!a.q) throw ashg::ParameterError("--q is required for the balanced model");
    auto sizes = a.class_sizes;
    if (sizes.empty()) sizes = ashg::balanced_class_sizes(a.n, a.k, *a.q);
    return ashg::gen_balanced(sizes, a.p, *a.q, a.seed);
  }();
  emit(a.out, ashg::io::dump(ashg::io::game_to_json(game)));
  return 0;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string algo;
  std::string in;
  std::string out;
  double eps = 0.19;
  std::uint64_t seed = 0;
  std::string vertex_pick = "random";
  std::size_t restarts = 32;
  std::size_t max_iters = 10000;
};

int run_solve(const SolveArgs& a) {
  const auto game = load_game(a.in);
  ashg::SolveOptions options;
  options.greedy.epsilon = a.eps;
  options.greedy.seed = a.seed;
  options.greedy.vertex_pick = a.vertex_pick == "lowest" ? ashg::VertexPick::lowest_index
                                                         : ashg::VertexPick::seeded_random;
  options.cw.seed = a.seed;
  options.cw.restarts = a.restarts;
  options.cw.max_iters = a.max_iters;

  const auto& meta = game.meta();
  if (a.algo == "alg4" && meta.p && meta.is_multipartite() &&
      *meta.p * static_cast<double>(meta.class_sizes.size()) > 1.0)
    warn("alg4 targets p = O(1/k); this instance has p * k > 1");

  const ashg::Partition pi = ashg::solve(a.algo, game, options);
  if (!a.out.empty()) ashg::io::write_file(a.out, ashg::io::dump(ashg::io::partition_to_json(pi)));

  Json report;
  report["algo"] = a.algo;
  report["sw"] = ashg::io::welfare_to_json(ashg::social_welfare(game, pi));
  if (game.is_aversion() && game.symmetric()) {
    try {
      const auto bound = ashg::welfare_upper_bound(game);
      report["upper_bound"] = ashg::io::welfare_to_json(bound.value);
      report["bound_source"] =
          bound.source == ashg::BoundSource::max_clique ? "max-clique" : "n(k-1)";
    } catch (const ashg::CapacityError& e) {
      warn(std::string("no upper bound: ") + e.what());
    }
  }
  if (a.out.empty()) report["partition"] = pi.assignment();
  std::cout << ashg::io::dump(report);
  return 0;
}

// ---- exact -----------------------------------------------------------------

int run_exact(const std::string& space, const std::string& in, const std::string& out) {
  const auto game = load_game(in);
  const auto result = ashg::max_welfare_exact(
      game, space == "two" ? ashg::PartitionSpace::two : ashg::PartitionSpace::all);
  if (!out.empty()) ashg::io::write_file(out, ashg::io::dump(ashg::io::partition_to_json(result.partition)));
  Json report = welfare_json(game, result.partition);
  if (out.empty()) report["partition"] = result.partition.assignment();
  std::cout << ashg::io::dump(report);
  return 0;
}

// ---- reduce / extract ------------------------------------------------------

int run_reduce(const std::string& graph, std::int64_t v_minus, std::optional<std::uint64_t> asym_seed,
               const std::string& out) {
  auto game = ashg::reduce_clique_to_ashg(load_graph(graph), v_minus);
  if (asym_seed) game = ashg::asymmetrize_zero_edges(game, *asym_seed);
  emit(out, ashg::io::dump(ashg::io::game_to_json(game)));
  return 0;
}

int run_extract(const std::string& graph_path, const std::string& game_path,
                const std::string& partition_path) {
  const auto graph = load_graph(graph_path);
  const auto game = load_game(game_path);
  const auto pi = ashg::io::partition_from_json(ashg::io::parse(ashg::io::read_file(partition_path)));
  const auto clique = ashg::extract_clique(graph, game, pi);
  const ashg::Welfare sw = ashg::social_welfare(game, pi);
  Json report;
  std::vector<std::size_t> one_based;
  for (std::size_t v : clique) one_based.push_back(v + 1);
  report["clique"] = one_based;
  report["clique_size"] = clique.size();
  report["sw"] = ashg::io::welfare_to_json(sw);
  // One unit per hub neighbour, comparable with the clique size.
  report["sw_per_clique_unit"] = ashg::io::welfare_to_json(sw.half());
  std::cout << ashg::io::dump(report);
  return 0;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& game_path, const std::string& partition_path) {
  const auto game = load_game(game_path);
  const auto assignment =
      ashg::io::raw_assignment_from_json(ashg::io::parse(ashg::io::read_file(partition_path)));
  const auto report = ashg::verify_partition(game, assignment);
  Json j;
  j["valid"] = report.valid;
  j["reasons"] = report.reasons;
  if (report.welfare) {
    j["sw"] = ashg::io::welfare_to_json(report.welfare->sw);
    j["cw"] = ashg::io::welfare_to_json(report.welfare->cw);
    j["tv"] = ashg::io::welfare_to_json(report.welfare->tv);
  }
  if (report.aversion) {
    j["enemy_inside_block"] = !report.enemy_pairs.empty();
    Json pairs = Json::array();
    for (const auto& [u, v] : report.enemy_pairs) pairs.push_back({u, v});
    j["enemy_pairs"] = pairs;
  }
  std::cout << ashg::io::dump(j);
  return report.valid ? 0 : kExitInvalid;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::string preset;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool timing = false;
  bool allow_degenerate = false;
  std::optional<std::size_t> n, k;
  std::optional<double> p, q, eps;
  std::string out;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  ashg::ExperimentOptions options;
  options.preset = ashg::preset_by_name(a.preset);
  if (a.n) options.preset.n = *a.n;
  if (a.k) options.preset.k = *a.k;
  if (a.p) options.preset.p = *a.p;
  if (a.q) options.preset.q = *a.q;
  if (a.eps) options.preset.epsilon = *a.eps;
  options.trials = a.trials;
  options.base_seed = a.seed;
  options.parallelism = a.threads;
  options.timing = a.timing;
  options.allow_degenerate = a.allow_degenerate;
  for (const auto& w : ashg::check_preset(options.preset, a.allow_degenerate)) warn(w);
  emit(a.out, ashg::experiment_csv(ashg::run_experiment(options)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welfare tools for additively separable hedonic games"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--model", gen.model, "er | turan | balanced")
      ->required()
      ->check(CLI::IsMember({"er", "turan", "balanced"}));
  gen_cmd->add_option("--n", gen.n, "Number of agents");
  gen_cmd->add_option("--k", gen.k, "Number of color classes");
  gen_cmd->add_option("--p", gen.p, "Probability that a cross pair is hostile")->required();
  gen_cmd->add_option("--q", gen.q, "Balance ratio (balanced model)");
  gen_cmd->add_option("--class-sizes", gen.class_sizes, "Class sizes, nonincreasing")
      ->delimiter(',');
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run an approximation algorithm");
  solve_cmd->add_option("--algo", solve.algo)->required()->check(CLI::IsMember(ashg::algorithm_names()));
  solve_cmd->add_option("--in", solve.in, "Instance file")->required();
  solve_cmd->add_option("--out", solve.out, "Partition output file");
  solve_cmd->add_option("--eps", solve.eps, "Epsilon for alg1/alg2/alg4/alg5");
  solve_cmd->add_option("--seed", solve.seed, "Algorithm seed");
  solve_cmd->add_option("--vertex-pick", solve.vertex_pick, "random | lowest")
      ->check(CLI::IsMember({"random", "lowest"}));
  solve_cmd->add_option("--restarts", solve.restarts, "Local-search restarts (cw2-local)");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Moves per restart (cw2-local)");

  std::string exact_space = "all", exact_in, exact_out;
  auto* exact_cmd = app.add_subcommand("exact", "Brute-force welfare optimum");
  exact_cmd->add_option("--space", exact_space, "all | two")->check(CLI::IsMember({"all", "two"}));
  exact_cmd->add_option("--in", exact_in, "Instance file")->required();
  exact_cmd->add_option("--out", exact_out, "Partition output file");

  std::string reduce_graph, reduce_out;
  std::int64_t reduce_vminus = 1;
  std::optional<std::uint64_t> reduce_asym;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the clique gadget of a DIMACS graph");
  reduce_cmd->add_option("--graph", reduce_graph, "DIMACS graph")->required();
  reduce_cmd->add_option("--vminus", reduce_vminus, "Penalty for non-adjacent vertices");
  reduce_cmd->add_option("--asymmetrize", reduce_asym,
                         "Rewrite zero pairs as +1/-1 with this seed");
  reduce_cmd->add_option("-o,--out", reduce_out, "Output file (default stdout)");

  std::string extract_graph, extract_game, extract_partition;
  auto* extract_cmd = app.add_subcommand("extract", "Recover a clique from a gadget partition");
  extract_cmd->add_option("--graph", extract_graph, "DIMACS graph")->required();
  extract_cmd->add_option("--game", extract_game, "Gadget instance")->required();
  extract_cmd->add_option("--partition", extract_partition, "Partition file")->required();

  std::string verify_game, verify_partition;
  auto* verify_cmd = app.add_subcommand("verify", "Check a partition and report its welfare");
  verify_cmd->add_option("--game,--in", verify_game, "Instance file")->required();
  verify_cmd->add_option("--partition", verify_partition, "Partition file")->required();

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a Monte Carlo preset and print CSV");
  exp_cmd->add_option("--preset", exp.preset)->required()->check(CLI::IsMember(ashg::preset_names()));
  exp_cmd->add_option("--trials", exp.trials);
  exp_cmd->add_option("--seed", exp.seed, "Base seed; trial t uses seed ^ t");
  exp_cmd->add_option("--threads", exp.threads, "Worker threads (0 = all cores)");
  exp_cmd->add_flag("--timing", exp.timing, "Fill runtime_ms (output is then not reproducible)");
  exp_cmd->add_flag("--allow-degenerate", exp.allow_degenerate, "Accept p = 0 or p = 1");
  exp_cmd->add_option("--n", exp.n);
  exp_cmd->add_option("--k", exp.k);
  exp_cmd->add_option("--p", exp.p);
  exp_cmd->add_option("--q", exp.q);
  exp_cmd->add_option("--eps", exp.eps);
  exp_cmd->add_option("-o,--out", exp.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*exact_cmd) return run_exact(exact_space, exact_in, exact_out);
    if (*reduce_cmd) return run_reduce(reduce_graph, reduce_vminus, reduce_asym, reduce_out);
    if (*extract_cmd) return run_extract(extract_graph, extract_game, extract_partition);
    if (*verify_cmd) return run_verify(verify_game, verify_partition);
    if (*exp_cmd) return run_experiment_cmd(exp);
  } catch (const ashg::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ashg::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ashg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
