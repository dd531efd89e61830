#include "ashg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "ashg/error.hpp"
#include "ashg/generators.hpp"
#include "ashg/matching.hpp"
#include "ashg/rng.hpp"

namespace ashg {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "bk-er",     "alg1",      "alg2",           "alg4",           "alg5",
      "cw2-exact", "cw2-local", "matching-exact", "matching-greedy",
  };
  return names;
}

Partition solve(const std::string& algo, const ValuationMatrix& game, const SolveOptions& options) {
  if (algo == "bk-er") return greedy_clique_formation_er(game, options.greedy);
  if (algo == "alg1") return alg1_greedy_partition(game, options.greedy);
  if (algo == "alg2") return alg2_subdivide(game, options.greedy);
  if (algo == "alg4") return alg4_balanced_low(game, options.greedy);
  if (algo == "alg5") return alg5_balanced_high(game, options.greedy);
  if (algo == "cw2-exact" || algo == "cw2-local") {
    TwoPartitionBackend backend = options.cw;
    backend.kind = algo == "cw2-exact" ? TwoPartitionBackend::Kind::exact
                                       : TwoPartitionBackend::Kind::local_search;
    return approx_sw_nonneg_tv(game, backend).partition;
  }
  if (algo == "matching-exact") return matching_partition(game, MatchingMethod::exact_small);
  if (algo == "matching-greedy") return matching_partition(game, MatchingMethod::greedy);
  throw ParameterError("unknown algorithm '" + algo + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"er-constant", "turan-low", "turan-high",
                                                 "balanced-low", "balanced-high"};
  return names;
}

Preset preset_by_name(const std::string& name) {
  Preset p;
  p.name = name;
  if (name == "er-constant") {
    p.model = ModelKind::er;
    p.n = 500;
    p.p = 0.5;
    p.algo = "bk-er";
  } else if (name == "turan-low") {
    p.model = ModelKind::turan;
    p.n = 200;
    p.k = 10;
    p.p = 0.01;
    p.epsilon = 0.05;
    p.algo = "alg1";
  } else if (name == "turan-high") {
    p.model = ModelKind::turan;
    p.n = 400;
    p.k = 40;
    p.p = 0.5;
    p.algo = "alg2";
  } else if (name == "balanced-low") {
    p.model = ModelKind::balanced;
    p.n = 240;
    p.k = 8;
    p.p = 0.01;
    p.q = 0.6;
    p.epsilon = 0.05;
    p.algo = "alg4";
  } else if (name == "balanced-high") {
    p.model = ModelKind::balanced;
    p.n = 400;
    p.k = 40;
    p.p = 0.5;
    p.q = 0.6;
    p.algo = "alg5";
  } else {
    throw ParameterError("unknown preset '" + name + "'");
  }
  return p;
}

std::vector<std::size_t> balanced_class_sizes(std::size_t n, std::size_t k, double q) {
  if (k < 2 || n < k) throw ParameterError("balanced sizes need k >= 2 and n >= k");
  if (!(q > 0.0 && q <= 1.0)) throw ParameterError("q must lie in (0, 1]");
  std::vector<double> weight(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    weight[i] = 1.0 - (1.0 - q) * static_cast<double>(i) / static_cast<double>(k - 1);
    total += weight[i];
  }
  std::vector<std::size_t> sizes(k);
  std::vector<std::pair<double, std::size_t>> remainder;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double exact = static_cast<double>(n) * weight[i] / total;
    sizes[i] = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(exact)));
    assigned += sizes[i];
    remainder.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainder.begin(), remainder.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t r = 0; assigned < n; r = (r + 1) % k, ++assigned) ++sizes[remainder[r].second];
  while (assigned > n) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < k; ++i)
      if (sizes[i] > sizes[big]) big = i;
    --sizes[big];
    --assigned;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  // q = 1 with k not dividing n cannot be met; sizes within one is the closest
  while (sizes.front() > sizes.back() + 1 &&
         static_cast<double>(sizes.back()) < q * static_cast<double>(sizes.front()) - 1e-9) {
    --sizes.front();
    ++sizes.back();
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
  }
  return sizes;
}

std::vector<std::string> check_preset(const Preset& preset, bool allow_degenerate) {
  std::vector<std::string> warnings;
  if (preset.n == 0) throw ParameterError("n must be positive");
  if (!(preset.p >= 0.0 && preset.p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  if ((preset.p == 0.0 || preset.p == 1.0) && !allow_degenerate)
    throw ParameterError("experiment presets need p in (0, 1); pass --allow-degenerate for p = 0 or 1");
  if (preset.model == ModelKind::er) {
    if (preset.p == 0.0 || preset.p == 1.0)
      throw ParameterError("the Erdos-Renyi model needs p in (0, 1)");
    return warnings;
  }
  if (preset.model != ModelKind::turan && preset.model != ModelKind::balanced)
    throw ParameterError("presets use the er, turan or balanced model");
  if (preset.k < 2) throw ParameterError("k must be at least 2");
  if (preset.model == ModelKind::turan && preset.n % preset.k != 0)
    throw ParameterError("k must divide n for the Turan model");
  if (preset.model == ModelKind::balanced && !preset.q)
    throw ParameterError("the balanced model needs q");
  const double n = static_cast<double>(preset.n);
  const double k_cap = n / (10.0 * std::log(n));
  if (static_cast<double>(preset.k) > k_cap) {
    std::ostringstream os;
    os << "k = " << preset.k << " exceeds n/(10 ln n) = " << format_double(k_cap)
       << "; the asymptotic guarantees may not apply";
    warnings.push_back(os.str());
  }
  if (preset.algo == "alg4" && preset.p * static_cast<double>(preset.k) > 1.0)
    warnings.push_back("alg4 targets p = O(1/k) but p * k = " +
                       format_double(preset.p * static_cast<double>(preset.k)));
  return warnings;
}

ValuationMatrix generate_instance(const Preset& preset, std::uint64_t seed) {
  switch (preset.model) {
    case ModelKind::er:
      return gen_er(preset.n, preset.p, seed);
    case ModelKind::turan:
      return gen_turan(preset.n, preset.k, preset.p, seed);
    case ModelKind::balanced:
      return gen_balanced(balanced_class_sizes(preset.n, preset.k, *preset.q), preset.p, *preset.q,
                          seed);
    default:
      throw ParameterError("presets use the er, turan or balanced model");
  }
}

namespace {

bool uses_epsilon(const std::string& algo) {
  return algo == "alg1" || algo == "alg2" || algo == "alg4" || algo == "alg5";
}

ExperimentRecord run_trial(const ExperimentOptions& options, std::uint64_t seed) {
  const Preset& preset = options.preset;
  ExperimentRecord rec;
  rec.model = std::string(to_string(preset.model));
  rec.n = preset.n;
  if (preset.model != ModelKind::er) rec.k = preset.k;
  rec.p = preset.p;
  rec.q = preset.q;
  if (uses_epsilon(preset.algo)) rec.epsilon = preset.epsilon;
  rec.seed = seed;
  rec.algo = preset.algo;

  const ValuationMatrix game = generate_instance(preset, seed);
  SolveOptions solve_options;
  solve_options.greedy.epsilon = preset.epsilon;
  solve_options.greedy.seed = derive_seed(seed, 0);
  solve_options.cw.seed = derive_seed(seed, 0);
  solve_options.cw.budget = options.budget;

  const auto start = std::chrono::steady_clock::now();
  rec.partition = solve(preset.algo, game, solve_options);
  const auto stop = std::chrono::steady_clock::now();
  if (options.timing)
    rec.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  rec.sw_achieved = social_welfare(game, rec.partition).as_integer();
  try {
    const UpperBound bound = welfare_upper_bound(game, options.budget);
    rec.upper_bound = bound.value.as_integer();
    rec.clique_bound_used = bound.source == BoundSource::max_clique ? "max-clique" : "n(k-1)";
    if (*rec.upper_bound > 0)
      rec.ratio = static_cast<double>(rec.sw_achieved) / static_cast<double>(*rec.upper_bound);
  } catch (const CapacityError&) {
    rec.clique_bound_used = "NA";
  }
  return rec;
}

}  // namespace

std::size_t worker_count(std::size_t requested, std::size_t trials) {
  std::size_t workers = requested;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HW_THREADS")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (end != env && cap > 0) workers = std::min<std::size_t>(workers, cap);
  }
  return std::max<std::size_t>(1, std::min(workers, trials));
}

std::vector<ExperimentRecord> run_experiment(const ExperimentOptions& options) {
  if (options.trials == 0) throw ParameterError("trials must be at least 1");
  check_preset(options.preset, options.allow_degenerate);

  std::vector<std::optional<ExperimentRecord>> slots(options.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= options.trials) return;
      try {
        slots[t] = run_trial(options, options.base_seed ^ static_cast<std::uint64_t>(t));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = worker_count(options.parallelism, options.trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRecord> records;
  records.reserve(slots.size());
  for (auto& slot : slots) records.push_back(std::move(*slot));
  std::stable_sort(records.begin(), records.end(),
                   [](const auto& a, const auto& b) { return a.seed < b.seed; });
  return records;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

template <typename T, typename F>
std::string or_na(const std::optional<T>& v, F&& fmt) {
  return v ? fmt(*v) : std::string("NA");
}

}  // namespace

std::string experiment_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  os << kCsvVersionLine << '\n' << kCsvHeader << '\n';
  const auto dbl = [](double v) { return format_double(v); };
  for (const auto& r : records) {
    os << r.model << ',' << r.n << ',' << or_na(r.k, [](std::size_t k) { return std::to_string(k); })
       << ',' << format_double(r.p) << ',' << or_na(r.q, dbl) << ',' << or_na(r.epsilon, dbl) << ','
       << r.seed << ',' << r.algo << ',' << r.sw_achieved << ','
       << or_na(r.upper_bound, [](std::int64_t b) { return std::to_string(b); }) << ','
       << or_na(r.ratio, dbl) << ',' << r.clique_bound_used << ','
       << or_na(r.runtime_ms, [](double ms) {
            std::ostringstream t;
            t.setf(std::ios::fixed);
            t.precision(3);
            t << ms;
            return t.str();
          })
       << '\n';
  }
  return os.str();
}

VerificationReport verify_partition(const ValuationMatrix& game,
                                    const std::vector<long long>& assignment) {
  VerificationReport report;
  const std::size_t n = game.n();
  if (assignment.size() < n) {
    for (std::size_t a = assignment.size(); a < n; ++a)
      report.reasons.push_back("missing agent " + std::to_string(a));
  } else if (assignment.size() > n) {
    report.reasons.push_back("assignment lists " + std::to_string(assignment.size()) +
                             " agents, the game has " + std::to_string(n));
  }
  for (std::size_t a = 0; a < assignment.size(); ++a)
    if (assignment[a] < 0)
      report.reasons.push_back("agent " + std::to_string(a) + " has negative label " +
                               std::to_string(assignment[a]));
  report.aversion = game.is_aversion();
  report.valid = report.reasons.empty();
  if (!report.valid) return report;

  std::vector<std::size_t> labels(assignment.begin(), assignment.end());
  const Partition pi(labels);
  report.welfare = welfare_report(game, pi);
  if (report.aversion) {
    const auto enemy = -static_cast<std::int64_t>(n);
    for (Agent i = 0; i < n; ++i)
      for (Agent j = i + 1; j < n; ++j)
        if (pi.same_block(i, j) && (game.scaled(i, j) == enemy || game.scaled(j, i) == enemy))
          report.enemy_pairs.emplace_back(i, j);
  }
  return report;
}

}  // namespace ashg
