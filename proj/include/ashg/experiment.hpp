#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ashg/cw2.hpp"
#include "ashg/exact.hpp"
#include "ashg/game.hpp"
#include "ashg/greedy.hpp"
#include "ashg/partition.hpp"
#include "ashg/welfare.hpp"

namespace ashg {

// ---- algorithm registry ----------------------------------------------------

struct SolveOptions {
  GreedyConfig greedy{};
  TwoPartitionBackend cw{};
};

/// bk-er, alg1, alg2, alg4, alg5, cw2-exact, cw2-local, matching-exact,
/// matching-greedy.
const std::vector<std::string>& algorithm_names();
/// Throws ParameterError for an unknown name.
Partition solve(const std::string& algo, const ValuationMatrix& game, const SolveOptions& options);

// ---- experiment harness ----------------------------------------------------

struct Preset {
  std::string name;
  ModelKind model = ModelKind::er;
  std::size_t n = 0;
  std::size_t k = 0;  // 0 for er
  double p = 0.5;
  std::optional<double> q;  // balanced only
  double epsilon = 0.19;
  std::string algo;
};

/// er-constant, turan-low, turan-high, balanced-low, balanced-high.
const std::vector<std::string>& preset_names();
/// Throws ParameterError for an unknown name.
Preset preset_by_name(const std::string& name);

/// Class sizes for a balanced preset: sizes fall linearly from the first to
/// roughly q times the first, sum to n, are nonincreasing and balanced.
std::vector<std::size_t> balanced_class_sizes(std::size_t n, std::size_t k, double q);

/// Rejects p outside (0,1) unless allow_degenerate, and the structural
/// parameters the generators would reject. Returns advisory warnings.
std::vector<std::string> check_preset(const Preset& preset, bool allow_degenerate);

ValuationMatrix generate_instance(const Preset& preset, std::uint64_t seed);

struct ExperimentOptions {
  Preset preset;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  std::size_t parallelism = 1;  // 0: hardware concurrency; HW_THREADS caps it
  bool timing = false;          // runtime_ms is "NA" unless set
  bool allow_degenerate = false;
  EnumerationBudget budget{};
};

struct ExperimentRecord {
  std::string model;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  double p = 0.0;
  std::optional<double> q;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  std::string algo;
  std::int64_t sw_achieved = 0;
  std::optional<std::int64_t> upper_bound;
  std::optional<double> ratio;    // none when the bound is missing or 0
  std::string clique_bound_used;  // "max-clique", "n(k-1)" or "NA"
  std::optional<double> runtime_ms;
  Partition partition = Partition::singletons(1);
};

/// Trial t uses seed base_seed ^ t for the instance and derive_seed(seed, 0)
/// for the algorithm. Records are sorted by seed.
std::vector<ExperimentRecord> run_experiment(const ExperimentOptions& options);

/// Effective worker count: requested (0 = hardware), capped by HW_THREADS
/// and by the number of trials.
std::size_t worker_count(std::size_t requested, std::size_t trials);

inline constexpr const char* kCsvVersionLine = "# welfare-exp v1";
inline constexpr const char* kCsvHeader =
    "model,n,k,p,q,epsilon,seed,algo,sw_achieved,upper_bound,ratio,clique_bound_used,runtime_ms";

std::string experiment_csv(const std::vector<ExperimentRecord>& records);

/// Shortest round-trip decimal form.
std::string format_double(double v);

// ---- partition verification ------------------------------------------------

struct VerificationReport {
  bool valid = false;
  std::vector<std::string> reasons;  // why the partition is invalid
  std::optional<WelfareReport> welfare;
  bool aversion = false;
  // Pairs inside one block valued -n by either side (aversion games only).
  std::vector<std::pair<Agent, Agent>> enemy_pairs;
};

VerificationReport verify_partition(const ValuationMatrix& game,
                                    const std::vector<long long>& assignment);

}  // namespace ashg
