#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "oracle.hpp"

#include "ashg/error.hpp"
#include "ashg/experiment.hpp"
#include "ashg/generators.hpp"
#include "ashg/greedy.hpp"
#include "ashg/io.hpp"
#include "ashg/rng.hpp"
#include "ashg/welfare.hpp"

using namespace ashg;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("ashg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string(ASHG_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

void write(const std::string& name, const std::string& text) { io::write_file(path(name), text); }

}  // namespace

TEST_CASE("instance JSON layout") {
  const auto g = ValuationMatrix::symmetric_int(3, {1, -2, 0});
  CHECK(io::dump(io::game_to_json(g)) ==
        "{\"format\":\"ashg-v1\",\"n\":3,\"mode\":\"int\",\"symmetric\":true,\"weights\":[1,-2,0],"
        "\"meta\":{\"kind\":\"manual\",\"n\":3,\"seed\":0}}\n");
  const auto h = ValuationMatrix::symmetric_int(3, {2, -1, 0}, 2);
  CHECK(io::dump(io::game_to_json(h)).find("\"mode\":\"int\",\"unit\":2,\"symmetric\"") !=
        std::string::npos);
}

TEST_CASE("instance JSON round trips") {
  const std::vector<ValuationMatrix> games = {
      gen_er(30, 0.4, 3),
      gen_turan(12, 3, 0.2, 4),
      gen_balanced({5, 4, 3}, 0.3, 0.6, 5),
      ValuationMatrix::asymmetric_int(3, {1, -1, 2, 0, 3, -3}, 2),
      ValuationMatrix::symmetric_real(3, {0.1, -2.5, 1e-7}),
      ValuationMatrix::asymmetric_real(2, {0.3, -0.7}),
  };
  for (const auto& g : games) {
    const std::string text = io::dump(io::game_to_json(g));
    const auto back = io::game_from_json(io::parse(text));
    CHECK(back == g);
    CHECK(io::dump(io::game_to_json(back)) == text);
  }
}

TEST_CASE("instance JSON errors") {
  CHECK_THROWS_AS(io::parse("{nope"), ParseError);
  CHECK_THROWS_AS(io::game_from_json(io::parse(R"({"format":"other"})")), ParseError);
  CHECK_THROWS_AS(
      io::game_from_json(io::parse(R"({"format":"ashg-v1","n":3,"mode":"int","symmetric":true,"weights":[1,2]})")),
      ParseError);
  CHECK_THROWS_AS(
      io::game_from_json(io::parse(R"({"format":"ashg-v1","n":2,"mode":"text","symmetric":true,"weights":[1]})")),
      ParseError);
  CHECK_THROWS_AS(io::game_from_json(io::parse(
                      R"({"format":"ashg-v1","n":2,"mode":"int","symmetric":true,"weights":[1],"meta":{"kind":"er","n":3}})")),
                  ParseError);
}

TEST_CASE("partition JSON") {
  const Partition pi(std::vector<std::size_t>{4, 4, 1, 0});
  const std::string text = io::dump(io::partition_to_json(pi));
  CHECK(text == "{\"format\":\"part-v1\",\"assignment\":[0,0,1,2]}\n");
  CHECK(io::partition_from_json(io::parse(text)) == pi);
  CHECK_THROWS_AS(io::partition_from_json(io::parse(R"({"format":"part-v1","assignment":[0,-1]})")),
                  ParseError);
  CHECK_THROWS_AS(io::partition_from_json(io::parse(R"({"format":"part-v1","assignment":[]})")), ParseError);
}

TEST_CASE("balanced preset class sizes") {
  for (std::size_t n : {40, 97, 240, 400})
    for (std::size_t k : {2, 5, 8, 40}) {
      if (k > n) continue;
      for (double q : {0.3, 0.6, 0.8, 1.0}) {
        const auto s = balanced_class_sizes(n, k, q);
        CHECK(s.size() == k);
        CHECK(std::accumulate(s.begin(), s.end(), std::size_t{0}) == n);
        CHECK(std::is_sorted(s.rbegin(), s.rend()));
        CHECK((static_cast<double>(s.back()) >= q * static_cast<double>(s.front()) - 1e-9 ||
               s.front() - s.back() <= 1));
        CHECK(s.back() >= 1);
      }
    }
}

TEST_CASE("presets") {
  CHECK_THROWS_AS(preset_by_name("nope"), ParameterError);
  for (const auto& name : preset_names()) {
    const auto p = preset_by_name(name);
    CHECK_NOTHROW(check_preset(p, false));
  }
  auto t = preset_by_name("turan-low");
  CHECK(t.n == 200);
  CHECK(t.k == 10);
  CHECK(t.p == 0.01);
  CHECK(t.epsilon == 0.05);
  CHECK_FALSE(check_preset(t, false).empty());  // k above n / (10 ln n)
  t.p = 0.0;
  CHECK_THROWS_AS(check_preset(t, false), ParameterError);
  CHECK_NOTHROW(check_preset(t, true));
  t.k = 7;
  CHECK_THROWS_AS(check_preset(t, true), ParameterError);
}

TEST_CASE("experiment rows") {
  SUBCASE("er-constant, one trial") {
    ExperimentOptions opt;
    opt.preset = preset_by_name("er-constant");
    opt.base_seed = 1;
    const auto rows = run_experiment(opt);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].seed == 1);
    CHECK(rows[0].clique_bound_used == "max-clique");
    REQUIRE(rows[0].ratio);
    CHECK(*rows[0].ratio > 0.0);
    CHECK(*rows[0].ratio <= 1.0);
  }
  SUBCASE("turan-low with p = 0") {
    ExperimentOptions opt;
    opt.preset = preset_by_name("turan-low");
    opt.preset.p = 0.0;
    opt.allow_degenerate = true;
    const auto rows = run_experiment(opt);
    CHECK(rows[0].sw_achieved == 1800);
    CHECK(rows[0].upper_bound == 1800);
    CHECK(rows[0].ratio == 1.0);
    opt.allow_degenerate = false;
    CHECK_THROWS_AS(run_experiment(opt), ParameterError);
  }
  SUBCASE("rows recompute and respect the bound") {
    for (const std::string name : {"turan-low", "turan-high", "balanced-low", "balanced-high"}) {
      ExperimentOptions opt;
      opt.preset = preset_by_name(name);
      opt.preset.n = name.find("high") != std::string::npos ? 120 : 60;
      opt.preset.k = name.find("high") != std::string::npos ? 12 : 6;
      opt.trials = 3;
      opt.base_seed = 40;
      for (const auto& r : run_experiment(opt)) {
        const auto g = generate_instance(opt.preset, r.seed);
        CHECK(social_welfare(g, r.partition) == Welfare::exact(r.sw_achieved));
        CHECK(oracle::sw(oracle::from_game(g), r.partition.assignment()) == r.sw_achieved);
        REQUIRE(r.upper_bound);
        CHECK(*r.upper_bound >= r.sw_achieved);
        CHECK(r.sw_achieved >= 0);
      }
    }
  }
  SUBCASE("CSV independent of worker count") {
    ExperimentOptions opt;
    opt.preset = preset_by_name("balanced-high");
    opt.preset.n = 160;
    opt.preset.k = 16;
    opt.trials = 6;
    opt.base_seed = 0xABCDEF;
    opt.parallelism = 1;
    const auto a = experiment_csv(run_experiment(opt));
    opt.parallelism = 3;
    const auto b = experiment_csv(run_experiment(opt));
    CHECK(a == b);
    CHECK(a.rfind("# welfare-exp v1\n"
                  "model,n,k,p,q,epsilon,seed,algo,sw_achieved,upper_bound,ratio,clique_bound_used,runtime_ms\n",
                  0) == 0);
  }
  SUBCASE("trial seeds") {
    ExperimentOptions opt;
    opt.preset = preset_by_name("turan-high");
    opt.preset.n = 40;
    opt.preset.k = 4;
    opt.trials = 4;
    opt.base_seed = 6;
    std::vector<std::uint64_t> seeds;
    for (const auto& r : run_experiment(opt)) seeds.push_back(r.seed);
    CHECK(seeds == std::vector<std::uint64_t>{4, 5, 6, 7});  // 6^0, 6^1, 6^2, 6^3 sorted
  }
}

TEST_CASE("worker count") {
  CHECK(worker_count(4, 2) == 2);
  CHECK(worker_count(1, 10) == 1);
  ::setenv("HW_THREADS", "2", 1);
  CHECK(worker_count(8, 10) == 2);
  ::unsetenv("HW_THREADS");
  CHECK(worker_count(0, 10) >= 1);
}

TEST_CASE("verify_partition") {
  const auto g = gen_turan(12, 3, 0.2, 2);
  GreedyConfig cfg;
  const auto pi = alg1_greedy_partition(g, cfg);
  std::vector<long long> a(pi.assignment().begin(), pi.assignment().end());
  const auto ok = verify_partition(g, a);
  CHECK(ok.valid);
  CHECK(ok.enemy_pairs.empty());
  CHECK(ok.welfare->sw == social_welfare(g, pi));

  auto short_a = a;
  short_a.pop_back();
  const auto missing = verify_partition(g, short_a);
  CHECK_FALSE(missing.valid);
  REQUIRE(missing.reasons.size() == 1);
  CHECK(missing.reasons[0] == "missing agent 11");

  const auto all_in = verify_partition(g, std::vector<long long>(12, 0));
  CHECK(all_in.valid);
  CHECK_FALSE(all_in.enemy_pairs.empty());
  CHECK(all_in.enemy_pairs.front() == std::pair<Agent, Agent>{0, 1});

  CHECK_FALSE(verify_partition(g, std::vector<long long>(13, 0)).valid);
  auto negative = a;
  negative[3] = -1;
  CHECK_FALSE(verify_partition(g, negative).valid);
}

TEST_CASE("command line") {
  SUBCASE("gen is deterministic") {
    CHECK(cli("gen --model er --n 50 --p 0.3 --seed 9 -o " + path("a.json")).code == 0);
    CHECK(cli("gen --model er --n 50 --p 0.3 --seed 9 -o " + path("b.json")).code == 0);
    CHECK(io::read_file(path("a.json")) == io::read_file(path("b.json")));
    CHECK(io::game_from_json(io::parse(io::read_file(path("a.json")))) == gen_er(50, 0.3, 9));
    CHECK(cli("gen --model balanced --class-sizes 4,3,3 --q 0.7 --p 0.2 --seed 1").code == 0);
  }
  SUBCASE("solve, verify and exact") {
    REQUIRE(cli("gen --model turan --n 12 --k 3 --p 0.2 --seed 3 -o " + path("t.json")).code == 0);
    const auto s = cli("solve --algo alg1 --seed 2 --in " + path("t.json") + " --out " + path("p.json"));
    CHECK(s.code == 0);
    const auto report = io::parse(s.out);
    CHECK(report["sw"].get<long long>() >= 0);
    CHECK(report["upper_bound"].get<long long>() >= report["sw"].get<long long>());
    const auto v = cli("verify --game " + path("t.json") + " --partition " + path("p.json"));
    CHECK(v.code == 0);
    CHECK(io::parse(v.out)["valid"] == true);
    CHECK(io::parse(v.out)["enemy_inside_block"] == false);
    const auto e = cli("exact --in " + path("t.json"));
    CHECK(e.code == 0);
    CHECK(io::parse(e.out)["sw"].get<long long>() >= report["sw"].get<long long>());
    for (const auto& algo : algorithm_names()) {
      if (algo == "bk-er") continue;
      CHECK(cli("solve --algo " + algo + " --in " + path("t.json")).code == 0);
    }
  }
  SUBCASE("verify rejects a short assignment") {
    REQUIRE(cli("gen --model turan --n 6 --k 2 --p 0.5 --seed 1 -o " + path("s.json")).code == 0);
    write("short.json", R"({"format":"part-v1","assignment":[0,0,1,1,2]})");
    const auto v = cli("verify --game " + path("s.json") + " --partition " + path("short.json"));
    CHECK(v.code == 4);
    CHECK(v.out.find("missing agent 5") != std::string::npos);
  }
  SUBCASE("reduce and extract") {
    write("c5.dimacs", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    CHECK(cli("reduce --graph " + path("c5.dimacs") + " --vminus 1 -o " + path("c5.json")).code == 0);
    CHECK(cli("exact --in " + path("c5.json") + " --out " + path("c5p.json")).code == 0);
    const auto x = cli("extract --graph " + path("c5.dimacs") + " --game " + path("c5.json") +
                       " --partition " + path("c5p.json"));
    CHECK(x.code == 0);
    const auto j = io::parse(x.out);
    CHECK(j["clique_size"] == 2);
    CHECK(j["sw"] == 4);
    CHECK(j["sw_per_clique_unit"] == 2);
    write("p4.dimacs", "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(cli("extract --graph " + path("p4.dimacs") + " --game " + path("c5.json") + " --partition " +
              path("c5p.json"))
              .code == 4);
  }
  SUBCASE("experiment CSV is independent of threads") {
    const std::string base = "experiment --preset turan-high --n 80 --k 8 --trials 4 --seed 3";
    const auto a = cli(base + " --threads 1");
    const auto b = cli(base + " --threads 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("turan,80,8,0.5,NA,0.19,") != std::string::npos);
  }
  SUBCASE("exit codes") {
    CHECK(cli("").code == 2);
    CHECK(cli("solve --algo nope --in x.json").code == 2);
    CHECK(cli("experiment --preset nope").code == 2);
    CHECK(cli("experiment --preset turan-low --p 0").code == 2);
    CHECK(cli("gen --model turan --n 10 --k 3 --p 0.5").code == 2);
    REQUIRE(cli("gen --model er --n 14 --p 0.5 -o " + path("big.json")).code == 0);
    CHECK(cli("exact --in " + path("big.json")).code == 3);
    write("garbage.json", "{not json");
    CHECK(cli("exact --in " + path("garbage.json")).code == 4);
    CHECK(cli("exact --in " + path("does-not-exist.json")).code == 4);
    CHECK(cli("--help").code == 0);
  }
}
