#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "bratteli/samplers.hpp"

using namespace bratteli;

TEST_CASE("engine streams are deterministic and independent") {
  std::mt19937_64 a = make_engine(42, 0), b = make_engine(42, 0), c = make_engine(42, 1);
  CHECK(a() == b());
  CHECK(a() == b());
  std::mt19937_64 a2 = make_engine(42, 0);
  CHECK(a2() != c());  // distinct streams diverge immediately

  Int draw = draw_uniform_128(a);
  CHECK(draw >= 0);
  CHECK(draw < one_shl_128());
}

TEST_CASE("exact threshold scaling") {
  CHECK(scaled_threshold(Rat(1)) == one_shl_128());
  CHECK(scaled_threshold(Rat(1, 2)) == Int(1) << 127);
  CHECK(scaled_threshold(Rat(1, 3)) == one_shl_128() / 3);
  CHECK(scaled_threshold(Rat(0)) == 0);
}

TEST_CASE("transition tables") {
  CHECK_THROWS_AS(make_table({}), std::logic_error);

  TransitionTable t = make_table(bk_transitions(Partition({2, 1}), 2));
  REQUIRE(t.steps.size() == t.thresholds.size());
  for (std::size_t i = 1; i < t.thresholds.size(); ++i)
    CHECK(t.thresholds[i - 1] <= t.thresholds[i]);
  CHECK(t.thresholds.back() == one_shl_128());

  // The root table has a single forced step.
  GenericGrowthSampler sampler(Alphabet::geometric(2), QT{Rat(0), Rat(1, 2)});
  std::mt19937_64 rng = make_engine(7, 0);
  CHECK(sampler.table(Partition()).pick(rng).to == Partition({1}));
}

TEST_CASE("sampler construction rejects bad configurations") {
  CHECK_THROWS_AS(GenericGrowthSampler(Alphabet::geometric(2), QT{Rat(0), Rat(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GenericGrowthSampler(Alphabet::finite({Rat(1)}), QT{Rat(1), Rat(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_generic_sampler(3, Alphabet::geometric(2), QT{Rat(0), Rat(1, 2)}, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_bk_sampler(3, 2, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_bk_sampler(3, 1, 10, 1), std::invalid_argument);
}

TEST_CASE("runs are reproducible from the seed") {
  Alphabet x = Alphabet::finite({Rat(1, 2), Rat(1, 3), Rat(1, 6)});
  QT p{Rat(1, 3), Rat(1, 2)};
  SampleRun a = run_generic_sampler(6, x, p, 40, 2026);
  SampleRun b = run_generic_sampler(6, x, p, 40, 2026);
  CHECK(a.endpoints == b.endpoints);
  SampleRun c = run_generic_sampler(6, x, p, 40, 2027);
  CHECK(a.endpoints != c.endpoints);
  CHECK(a.sampler == "generic");
  CHECK(a.alphabet == x);
  CHECK(a.params->q == Rat(1, 3));
  CHECK(a.paths.empty());

  SampleRun d = run_bk_sampler(8, 2, 20, 99);
  SampleRun e = run_bk_sampler(8, 2, 20, 99);
  CHECK(d.endpoints == e.endpoints);
  CHECK(d.sampler == "bk");
  CHECK(d.p == 2);
  CHECK(d.params->t == Rat(1, 2));
}

TEST_CASE("path recording matches endpoints") {
  SampleRun run = run_generic_sampler(5, Alphabet::geometric(3), QT{Rat(1, 5), Rat(1, 3)}, 12,
                                      31, true);
  REQUIRE(run.paths.size() == 12);
  for (std::size_t i = 0; i < run.paths.size(); ++i) {
    CHECK(run.paths[i].endpoint() == run.endpoints[i]);
    CHECK(run.paths[i].steps.size() == 5);
    CHECK(run.paths[i].start() == Partition());
  }

  // Recording does not change which endpoints are drawn.
  SampleRun bare = run_generic_sampler(5, Alphabet::geometric(3), QT{Rat(1, 5), Rat(1, 3)}, 12,
                                       31, false);
  CHECK(bare.endpoints == run.endpoints);
}

TEST_CASE("conjugate-shape growth agrees with the table-based chain") {
  for (int p : {2, 3}) {
    for (long trial = 0; trial < 25; ++trial) {
      std::mt19937_64 r1 = make_engine(512, static_cast<std::uint64_t>(trial));
      std::mt19937_64 r2 = make_engine(512, static_cast<std::uint64_t>(trial));
      Partition fast = grow_bk(12, p, r1);
      GrowthPath slow = grow_bk_path(12, p, r2);
      CHECK(fast == slow.endpoint());
    }
  }

  // And the recorded run uses the same draws as the bare run.
  SampleRun bare = run_bk_sampler(10, 2, 15, 77, false);
  SampleRun paths = run_bk_sampler(10, 2, 15, 77, true);
  CHECK(bare.endpoints == paths.endpoints);
}

TEST_CASE("empirical distributions") {
  SampleRun run = run_bk_sampler(4, 2, 50, 11);
  Distribution d = empirical_distribution(run);
  CHECK(d.n() == 4);
  Rat sum(0);
  for (const auto& [lam, prob] : d.entries()) {
    Rat scaled = prob * Rat(50);
    CHECK(scaled.get_den() == 1);  // integer counts
    sum += prob;
  }
  CHECK(sum == Rat(1));
  CHECK(d.meta().source == "empirical");
  CHECK(d.meta().trials == 50);
  CHECK(d.meta().seed == 11);
  CHECK(d.meta().t == Rat(1, 2));

  // Level 1 is deterministic.
  Distribution one = empirical_distribution(run_bk_sampler(1, 3, 10, 5));
  CHECK(one.prob(Partition({1})) == Rat(1));
}

TEST_CASE("normalized row profile") {
  CHECK_THROWS_AS(asymptotic_profile(50, 2, 5, 1), std::invalid_argument);

  ProfileReport report = asymptotic_profile(150, 2, 10, 2026, 3);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].limit == Rat(1, 2));
  CHECK(report.rows[1].limit == Rat(1, 4));
  CHECK(report.rows[2].limit == Rat(1, 8));
  CHECK(report.n == 150);
  CHECK(report.p == 2);
  CHECK(report.trials == 10);
  for (const ProfileRow& row : report.rows) {
    CHECK(row.mean > 0);
    CHECK(row.mean < 1);
    CHECK(row.stderr_ >= 0);
  }
  CHECK(report.rows[0].mean > report.rows[1].mean);
  CHECK(report.rows[1].mean > report.rows[2].mean);
}
