#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "bratteli/oracles.hpp"
#include "bratteli/samplers.hpp"
#include "bratteli/special.hpp"

using namespace bratteli;

TEST_CASE("primality guard") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
  CHECK_THROWS_AS(check_prime(4), std::invalid_argument);
  CHECK_NOTHROW(check_prime(5));
}

TEST_CASE("matrix arithmetic over a prime field") {
  MatrixFp id = MatrixFp::identity(3, 5);
  CHECK(id.rank() == 3);
  CHECK((id * id).at(1, 1) == 1);
  CHECK((id - id).rank() == 0);

  MatrixFp m(2, 5);
  m.at(0, 0) = 2; m.at(0, 1) = 4;
  m.at(1, 0) = 1; m.at(1, 1) = 2;  // second row is half the first
  CHECK(m.rank() == 1);
  CHECK((m * m).at(0, 0) == (2 * 2 + 4 * 1) % 5);

  CHECK_THROWS_AS(MatrixFp(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(MatrixFp(0, 5), std::invalid_argument);
}

TEST_CASE("jordan types from rank sequences") {
  CHECK(jordan_type(MatrixFp::identity(4, 3)) == Partition({1, 1, 1, 1}));

  // Full Jordan block: ones on the superdiagonal.
  MatrixFp block = MatrixFp::identity(4, 2);
  for (int i = 0; i + 1 < 4; ++i) block.at(i, i + 1) = 1;
  CHECK(jordan_type(block) == Partition({4}));

  // One 2-block plus a fixed vector.
  MatrixFp mixed = MatrixFp::identity(3, 5);
  mixed.at(0, 1) = 3;
  CHECK(jordan_type(mixed) == Partition({2, 1}));

  MatrixFp scaled(3, 3);
  for (int i = 0; i < 3; ++i) scaled.at(i, i) = 2;  // 2I is not unipotent
  CHECK_THROWS_AS(jordan_type(scaled), std::invalid_argument);
}

TEST_CASE("exhaustive jordan distribution") {
  CHECK(unipotent_count(3, 2) == 8);
  CHECK(unipotent_count(4, 2) == 64);

  Distribution two = jordan_distribution_exhaustive(2, 2);
  CHECK(two.prob(Partition({2})) == Rat(1, 2));
  CHECK(two.prob(Partition({1, 1})) == Rat(1, 2));
  CHECK(two.meta().source == "oracle");

  Distribution three = jordan_distribution_exhaustive(2, 3);
  CHECK(three.prob(Partition({2})) == Rat(2, 3));
  CHECK(three.prob(Partition({1, 1})) == Rat(1, 3));

  // Independent check of the closed-form measure at level 3.
  Distribution oracle = jordan_distribution_exhaustive(3, 2);
  Distribution closed = jordan_measure(3, 2);
  CHECK(oracle.prob(Partition({3})) == Rat(1, 4));
  CHECK(oracle.prob(Partition({2, 1})) == Rat(5, 8));
  CHECK(oracle.prob(Partition({1, 1, 1})) == Rat(1, 8));
  CHECK(tv_distance(oracle, closed) == Rat(0));
}

TEST_CASE("sampled jordan distribution stays near the exact one") {
  std::mt19937_64 rng = make_engine(7, 0);
  Distribution mc = jordan_distribution_mc(3, 2, 4096, rng);
  Distribution exact = jordan_distribution_exhaustive(3, 2);
  CHECK(tv_distance(mc, exact) < Rat(1, 10));
  CHECK(mc.meta().trials == 4096);
  CHECK_THROWS_AS(jordan_distribution_mc(3, 2, 0, rng), std::invalid_argument);
}

TEST_CASE("row insertion shapes") {
  CHECK(rsk_shape({}) == Partition());
  CHECK(rsk_shape({1, 1, 1}) == Partition({3}));
  CHECK(rsk_shape({2, 1}) == Partition({1, 1}));
  CHECK(rsk_shape({1, 2, 1}) == Partition({2, 1}));
  CHECK(rsk_shape({3, 1, 2}) == Partition({2, 1}));
  CHECK(rsk_shape({3, 2, 1}) == Partition({1, 1, 1}));
  CHECK_THROWS_AS(rsk_shape({1, 0}), std::invalid_argument);
}

TEST_CASE("exact insertion-shape law") {
  Distribution d = rsk_distribution_exhaustive(2, {Rat(1, 2), Rat(1, 2)});
  CHECK(d.prob(Partition({2})) == Rat(3, 4));
  CHECK(d.prob(Partition({1, 1})) == Rat(1, 4));

  // The insertion shape of an i.i.d. word has the equal-parameter law.
  std::vector<Rat> xs{Rat(1, 2), Rat(1, 3), Rat(1, 6)};
  Distribution oracle = rsk_distribution_exhaustive(3, xs);
  Distribution closed = schur_measure(3, xs);
  CHECK(tv_distance(oracle, closed) == Rat(0));

  std::mt19937_64 rng = make_engine(8, 0);
  Distribution mc = rsk_distribution_mc(2, {Rat(1, 2), Rat(1, 2)}, 4096, rng);
  CHECK(tv_distance(mc, d) < Rat(1, 10));
  CHECK(mc.meta().trials == 4096);
}

TEST_CASE("charge statistic") {
  CHECK(charge_word({1}) == 0);
  CHECK(charge_word({1, 2}) == 1);
  CHECK(charge_word({2, 1}) == 0);
  CHECK(charge_word({3, 2, 1}) == 0);
  CHECK(charge_word({1, 2, 3}) == 3);
  CHECK_THROWS_AS(charge_word({2, 2}), std::invalid_argument);
}

TEST_CASE("tableau enumeration and one-variable polynomials") {
  int count = 0;
  for_each_ssyt(Partition({2, 1}), Partition({1, 1, 1}),
                [&](const std::vector<std::vector<int>>&) { ++count; });
  CHECK(count == 2);
  CHECK(kostka_number(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK_THROWS_AS(for_each_ssyt(Partition({2}), Partition({1}), [](const auto&) {}),
                  std::invalid_argument);

  LaurentPoly t = LaurentPoly::var_t();
  CHECK(kostka_foulkes(Partition({2}), Partition({1, 1})) == t);
  CHECK(kostka_foulkes(Partition({2, 1}), Partition({1, 1, 1})) == t + t * t);
  CHECK(kostka_foulkes(Partition({3}), Partition({2, 1})) == t);
  CHECK(kostka_foulkes(Partition({2, 1}), Partition({2, 1})) ==
        LaurentPoly::constant(Rat(1)));
  CHECK(kostka_foulkes(Partition({1, 1}), Partition({2})).is_zero());
}

TEST_CASE("young lattice path counts") {
  CHECK(young_path_count(Partition(), Partition({2, 1})) == 2);
  CHECK(young_path_count(Partition({2, 1}), Partition({2, 1})) == 1);
  CHECK(young_path_count(Partition({1}), Partition({2, 1})) == 2);
  CHECK_THROWS_AS(young_path_count(Partition({3}), Partition({2, 1})), std::invalid_argument);

  for (int n = 0; n <= 6; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(young_path_count(Partition(), lam) == syt_count(lam));
}

TEST_CASE("tableau sums evaluate schur polynomials") {
  std::vector<Rat> xs{Rat(1, 2), Rat(1, 3), Rat(1, 6)};
  PEvaluator<Rat> ev(xs, Rat(1, 2), Rat(1, 2));
  for (int n = 0; n <= 4; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(schur_by_tableaux(lam, xs) == ev.value(lam));
  CHECK(schur_by_tableaux(Partition({1, 1, 1, 1}), xs) == Rat(0));
}
