#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bratteli/special.hpp"

using namespace bratteli;

TEST_CASE("hall-littlewood multiplicities are power sums") {
  CHECK(hl_kappa(cover_step(Partition({1}), Partition({1, 1})), 2) == 3);
  CHECK(hl_kappa(cover_step(Partition({2}), Partition({2, 1})), 2) == 2);
  CHECK(hl_kappa(cover_step(Partition({1}), Partition({2})), 2) == 1);
  CHECK_THROWS_AS(hl_kappa(cover_step(Partition(), Partition({1})), 1), std::invalid_argument);

  // The integer rule is the q = 0, t = 1/p face of the general weight.
  for (int p : {2, 3}) {
    QT params{Rat(0), Rat(1, p)};
    for (int n = 0; n <= 6; ++n)
      for (const Partition& lam : enumerate_partitions(n))
        for (const CoverStep& step : covers_up(lam)) {
          CHECK(Rat(hl_kappa(step, p)) == kappa(step, params));
          CHECK(hl_kappa_poly(step).evaluate(Rat(p), Rat(0)) == Rat(hl_kappa(step, p)));
        }
  }
}

TEST_CASE("green polynomials") {
  LaurentPoly one = LaurentPoly::constant(Rat(1));
  LaurentPoly p = LaurentPoly::var_q();
  CHECK(green_polynomial(Partition()) == one);
  CHECK(green_polynomial(Partition({2})) == one);
  CHECK(green_polynomial(Partition({1, 1})) == one + p);
  CHECK(green_polynomial(Partition({2, 1})) == one + p + p);

  CHECK(green_value(Partition({1, 1}), 2) == 3);
  CHECK(green_value(Partition({2, 1}), 3) == 7);

  // green_value is the weighted path count at q = 0, t = 1/p.
  for (int q : {2, 3})
    for (const Partition& lam : enumerate_partitions(5))
      CHECK(Rat(green_value(lam, q)) == dimension(lam, QT{Rat(0), Rat(1, q)}));
}

TEST_CASE("jordan-type measure") {
  Distribution d = jordan_measure(2, 2);
  CHECK(d.prob(Partition({2})) == Rat(1, 2));
  CHECK(d.prob(Partition({1, 1})) == Rat(1, 2));
  CHECK(d.meta().source == "jordan-measure");
  CHECK(d.meta().alphabet == Alphabet::geometric(2));

  Distribution e = jordan_measure(2, 3);
  CHECK(e.prob(Partition({2})) == Rat(2, 3));
  CHECK(e.prob(Partition({1, 1})) == Rat(1, 3));

  CHECK_THROWS_AS(jordan_measure(2, 1), std::invalid_argument);
}

TEST_CASE("column growth rule") {
  auto root = bk_transitions(Partition(), 2);
  REQUIRE(root.size() == 1);
  CHECK(root[0].prob == Rat(1));

  auto one = bk_transitions(Partition({1}), 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0].step.to == Partition({2}));
  CHECK(one[0].prob == Rat(1, 2));
  CHECK(one[1].step.to == Partition({1, 1}));
  CHECK(one[1].prob == Rat(1, 2));

  // Matches the generic growth chain at q = 0, t = 1/p over geometric weights.
  for (int p : {2, 3}) {
    QT params{Rat(0), Rat(1, p)};
    Alphabet x = Alphabet::geometric(p);
    for (int n = 0; n <= 5; ++n)
      for (const Partition& lam : enumerate_partitions(n)) {
        auto fast = bk_transitions(lam, p);
        auto slow = transition_probabilities(lam, x, params);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
          CHECK(fast[i].step.to == slow[i].step.to);
          CHECK(fast[i].prob == slow[i].prob);
        }
      }
  }
}

TEST_CASE("equal-parameter multiplicities") {
  Rat r(2, 5);
  for (int n = 0; n <= 5; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      for (const CoverStep& step : covers_up(lam)) {
        CHECK(schur_kappa<Rat>(step, r) == kappa(step, QT{r, r}));
        CHECK(schur_kappa_factored(step).evaluate(r, Rat(0)) == schur_kappa<Rat>(step, r));
        CHECK(schur_kappa_symbolic(step) ==
              schur_kappa<RationalFunction>(step, RationalFunction::var_q()));
      }
}

TEST_CASE("equal-parameter dimensions and measure") {
  // dim(2,1) = 2 (1 + q + q^2) / q.
  LaurentPoly one = LaurentPoly::constant(Rat(1));
  LaurentPoly q = LaurentPoly::var_q();
  RationalFunction expect((one + q + q * q) * LaurentPoly::constant(Rat(2)), q);
  CHECK(schur_dimension_symbolic(Partition({2, 1})) == expect);
  CHECK(schur_dimension(Partition({2, 1}), Rat(1, 2)) == Rat(7));

  for (const Partition& lam : enumerate_partitions(5))
    CHECK(schur_dimension(lam, Rat(1, 2)) == dimension(lam, QT{Rat(1, 2), Rat(1, 2)}));

  std::vector<Rat> xs{Rat(1, 2), Rat(1, 4), Rat(1, 4)};
  Distribution sm = schur_measure(3, xs);
  CHECK(sm.meta().source == "schur-measure");
  for (const Rat& v : {Rat(1, 2), Rat(1, 3)}) {
    Distribution m = measure(3, Alphabet::finite(xs), QT{v, v});
    for (const auto& [lam, prob] : sm.entries()) CHECK(prob == m.prob(lam));
  }
}

TEST_CASE("one-parameter multiplicities") {
  CHECK_THROWS_AS(check_jack_theta(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(jack_kappa(cover_step(Partition(), Partition({1})), Rat(-1)),
                  std::invalid_argument);

  CoverStep step = cover_step(Partition({2}), Partition({2, 1}));
  CHECK(jack_kappa(step, Rat(1, 2)) == Rat(4, 3));
  CHECK(jack_kappa(cover_step(Partition(), Partition({1})), Rat(7, 3)) == Rat(1));

  // The parametrized point q = u^d, t = u^c approaches the limit weight.
  Rat limit = jack_kappa(step, Rat(1, 2));
  Rat coarse = rat_abs(kappa_at_jack_point(step, Rat(1, 2), Rat(1, 10)) - limit);
  Rat fine = rat_abs(kappa_at_jack_point(step, Rat(1, 2), Rat(1, 100)) - limit);
  CHECK(fine < coarse);
  CHECK(fine < Rat(1, 100));
  CHECK_THROWS_AS(kappa_at_jack_point(step, Rat(1, 2), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(kappa_at_jack_point(step, Rat(1, 2), Rat(1)), std::invalid_argument);

  // Weighted path counts: at theta = 1 the weight of every path to lam is
  // the product of hooks over f-many paths.
  CHECK(jack_dimension(Partition({2, 1}), Rat(1)) == Rat(6));
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      Int hooks = 1;
      for (const Cell& s : cells(lam)) hooks *= arm_leg_hook(lam, s).hook;
      CHECK(jack_dimension(lam, Rat(1)) == Rat(syt_count(lam) * hooks));
    }
  CHECK_THROWS_AS(jack_dimension(Partition({1}), Rat(0)), std::invalid_argument);
}
