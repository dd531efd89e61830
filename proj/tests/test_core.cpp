#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "ashg/error.hpp"
#include "ashg/partition.hpp"
#include "ashg/welfare.hpp"

using namespace ashg;

namespace {

// Three agents: v(a1,a2) = 1, v(a1,a3) = -x, v(a2,a3) = 0.
ValuationMatrix example_x2() { return ValuationMatrix::symmetric_int(3, {1, -2, 0}); }
// x = 1/2 in half units.
ValuationMatrix example_half() { return ValuationMatrix::symmetric_int(3, {2, -1, 0}, 2); }

Partition part(std::vector<std::size_t> a) { return Partition(a); }

}  // namespace

TEST_CASE("welfare of the three-agent example with x = 2") {
  const auto g = example_x2();
  const auto star = part({0, 0, 1});
  const auto single = Partition::singletons(3);
  CHECK(social_welfare(g, star) == Welfare::exact(2));
  CHECK(correlation_welfare(g, single) == Welfare::exact(1));
  CHECK(correlation_welfare(g, star) == Welfare::exact(3));
  CHECK(total_value(g) == Welfare::exact(-2));
  CHECK(social_welfare(g, single) == Welfare::exact(0));
}

TEST_CASE("welfare of the three-agent example with x = 1/2") {
  const auto g = example_half();
  CHECK(social_welfare(g, part({0, 0, 1})) == Welfare::exact(2));
  CHECK(total_value(g) == Welfare::exact(1));
  // CW(singletons) = -TV/2
  CHECK(correlation_welfare(g, Partition::singletons(3)) == Welfare::exact_doubled(-1));
}

TEST_CASE("triangle of ones") {
  const auto g = ValuationMatrix::symmetric_int(3, {1, 1, 1});
  CHECK(social_welfare(g, Partition::grand_coalition(3)) == Welfare::exact(6));
  CHECK(total_value(g) == Welfare::exact(6));
  CHECK(total_value(ValuationMatrix::symmetric_int(3, {0, 0, 0})) == Welfare::exact(0));
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(std::vector<std::size_t>{2, 2, 5}) == std::vector<std::size_t>{0, 0, 1});
  CHECK(canonicalize(std::vector<std::size_t>{0, 1, 0}) == std::vector<std::size_t>{0, 1, 0});
  CHECK(canonicalize(std::vector<std::size_t>{9}) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(canonicalize(std::vector<std::size_t>{}), DimensionError);
  const auto pi = part({3, 1, 3, 7});
  CHECK(canonicalize(pi) == pi);
  CHECK(pi.assignment() == std::vector<std::size_t>{0, 1, 0, 2});
  CHECK(pi.blocks() == std::vector<Coalition>{{0, 2}, {1}, {3}});
}

TEST_CASE("partition from blocks") {
  CHECK(Partition::from_blocks(4, {{3, 1}, {0}, {2}}).assignment() ==
        std::vector<std::size_t>{0, 1, 2, 1});
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), DimensionError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), DimensionError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 1}, {}}), DimensionError);
}

TEST_CASE("size mismatch is a dimension error") {
  const auto g = example_x2();
  CHECK_THROWS_AS(social_welfare(g, Partition::singletons(4)), DimensionError);
  CHECK_THROWS_AS(correlation_welfare(g, Partition::singletons(2)), DimensionError);
}

TEST_CASE("2 SW = 2 CW + TV against the dense oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const bool sym = trial % 2 == 0;
    const auto w = sym ? oracle::random_symmetric(rng, n, -n, n) : oracle::random_asymmetric(rng, n, -n, n);
    const auto g = oracle::to_game(w);
    for (int r = 0; r < 4; ++r) {
      const auto a = oracle::random_labels(rng, n);
      const Partition pi(a);
      const Welfare s = social_welfare(g, pi);
      const Welfare c = correlation_welfare(g, pi);
      const Welfare t = total_value(g);
      CHECK(s == Welfare::exact(oracle::sw(w, a)));
      CHECK(c == Welfare::exact_doubled(oracle::cw_doubled(w, a)));
      CHECK(t == Welfare::exact(oracle::tv(w)));
      CHECK(2 * s == 2 * c + t);
    }
  }
}

TEST_CASE("singleton and grand coalition values") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto g = oracle::to_game(oracle::random_asymmetric(rng, n, -5, 5));
    const Welfare t = total_value(g);
    CHECK(social_welfare(g, Partition::singletons(n)) == Welfare::exact(0));
    CHECK(correlation_welfare(g, Partition::grand_coalition(n)) == t.half());
    CHECK(correlation_welfare(g, Partition::singletons(n)) == -t.half());
  }
}

TEST_CASE("welfare is invariant under relabeling agents") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const auto w = oracle::random_asymmetric(rng, n, -4, 4);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    oracle::Matrix wp(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) wp[perm[i]][perm[j]] = w[i][j];
    const auto a = oracle::random_labels(rng, n);
    oracle::Labels ap(n);
    for (std::size_t i = 0; i < n; ++i) ap[perm[i]] = a[i];
    CHECK(social_welfare(oracle::to_game(w), Partition(a)) ==
          social_welfare(oracle::to_game(wp), Partition(ap)));
  }
}

TEST_CASE("symmetrize") {
  SUBCASE("opposite valuations cancel") {
    const auto g = ValuationMatrix::asymmetric_int(2, {1, -1});
    const auto s = symmetrize(g);
    CHECK(s.symmetric());
    CHECK(s.value(0, 1) == 0.0);
  }
  SUBCASE("3 and 1 average to 2") {
    const auto s = symmetrize(ValuationMatrix::asymmetric_int(2, {3, 1}));
    CHECK(s.value(0, 1) == 2.0);
    CHECK(s.value(1, 0) == 2.0);
  }
  SUBCASE("odd pair sums widen the unit") {
    const auto s = symmetrize(ValuationMatrix::asymmetric_int(2, {1, 0}));
    CHECK(s.unit() == 2);
    CHECK(s.value(0, 1) == 0.5);
  }
  SUBCASE("fixed point on symmetric input") {
    const auto g = example_x2();
    CHECK(symmetrize(g) == g);
  }
  SUBCASE("social welfare of every partition is preserved") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 4;
      const auto w = oracle::random_asymmetric(rng, n, -3, 3);
      const auto g = oracle::to_game(w);
      const auto s = symmetrize(g);
      oracle::partitions(n, [&](const oracle::Labels& a) {
        CHECK(social_welfare(s, Partition(a)) == Welfare::exact(oracle::sw(w, a)));
      });
    }
  }
  SUBCASE("real mode averages") {
    const auto s = symmetrize(ValuationMatrix::asymmetric_real(2, {0.25, 1.0}));
    CHECK(s.value(0, 1) == doctest::Approx(0.625));
  }
}

TEST_CASE("agent utilities sum to social welfare") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    const auto w = oracle::random_asymmetric(rng, n, -6, 6);
    const auto a = oracle::random_labels(rng, n);
    const auto u = agent_utilities(oracle::to_game(w), Partition(a));
    Welfare total = Welfare::exact(0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t expect = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && a[j] == a[i]) expect += w[i][j];
      CHECK(u[i] == Welfare::exact(expect));
      total = total + u[i];
    }
    CHECK(total == Welfare::exact(oracle::sw(w, a)));
  }
}

TEST_CASE("real-mode welfare") {
  const auto g = ValuationMatrix::symmetric_real(3, {0.5, -1.25, 0.1});
  const auto r = welfare_report(g, part({0, 0, 1}));
  CHECK(r.sw.to_double() == doctest::Approx(1.0));
  CHECK(r.tv.to_double() == doctest::Approx(2 * (0.5 - 1.25 + 0.1)));
  CHECK(2 * r.sw == 2 * r.cw + r.tv);
}

TEST_CASE("Welfare arithmetic") {
  CHECK(Welfare::exact_doubled(3).half() == Welfare::exact_doubled(3, 2));
  CHECK(Welfare::exact_doubled(3, 2).to_double() == 0.75);
  CHECK(Welfare::exact(1, 2) == Welfare::exact_doubled(1));
  CHECK(Welfare::exact(2) > Welfare::exact_doubled(3));
  CHECK(Welfare::exact(7).to_string() == "7");
  CHECK(Welfare::exact_doubled(-1).to_string() == "-0.5");
  CHECK(Welfare::exact(1, 3) + Welfare::exact(1, 6) == Welfare::exact(1, 2));
  CHECK(Welfare::real(1.0) == Welfare::real(1.0 + 1e-12));
  CHECK(Welfare::real(1.0) < Welfare::real(1.0 + 1e-6));
  CHECK_FALSE(Welfare::exact_doubled(1).is_integral());
  CHECK_THROWS_AS(Welfare::exact_doubled(1).as_integer(), Error);
}

TEST_CASE("game storage and aversion check") {
  const auto g = ValuationMatrix::symmetric_int(3, {1, -3, 1});
  CHECK(g.is_aversion());
  CHECK(g.scaled(2, 0) == -3);
  CHECK(g.scaled(1, 1) == 0);
  CHECK_FALSE(ValuationMatrix::symmetric_int(3, {1, -2, 1}).is_aversion());
  CHECK_THROWS_AS(ValuationMatrix::symmetric_int(3, {1, 1}), DimensionError);
  const auto a = ValuationMatrix::asymmetric_int(3, {1, 2, 3, 4, 5, 6});
  CHECK(a.scaled(0, 1) == 1);
  CHECK(a.scaled(0, 2) == 2);
  CHECK(a.scaled(1, 0) == 3);
  CHECK(a.scaled(2, 1) == 6);
}
