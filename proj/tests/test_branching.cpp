#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "bratteli/branching.hpp"
#include "bratteli/partition.hpp"

using namespace bratteli;

namespace {
const LaurentPoly kOne = LaurentPoly::constant(Rat(1));
const LaurentPoly kQ = LaurentPoly::var_q();
const LaurentPoly kT = LaurentPoly::var_t();
}  // namespace

TEST_CASE("parameter domain") {
  CHECK_NOTHROW(check_domain(QT{Rat(0), Rat(1, 2)}));
  CHECK_THROWS_AS(check_domain(QT{Rat(1), Rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(check_domain(QT{Rat(-1, 2), Rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(check_domain(QT{Rat(1, 2), Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(check_domain(QT{Rat(1, 2), Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(exact_div(Rat(1), Rat(0)), std::domain_error);
}

TEST_CASE("closed-form multiplicities on small steps") {
  // Row step (1) -> (2): single row cell, no prefactor.
  CoverStep row = cover_step(Partition({1}), Partition({2}));
  CHECK(kappa_symbolic(row) == RationalFunction(kOne + kQ));

  // Column step (1) -> (1,1): prefactor 1/t.
  CoverStep col = cover_step(Partition({1}), Partition({1, 1}));
  CHECK(kappa_symbolic(col) == RationalFunction(kOne + kT, kT));

  // (2) -> (2,1): (1 - q t^2) / (t (1 - q t)).
  CoverStep a = cover_step(Partition({2}), Partition({2, 1}));
  CHECK(kappa_symbolic(a) == RationalFunction(kOne - kQ * kT * kT, kT - kQ * kT * kT));

  // (1,1) -> (2,1): (1 - q^2 t) / (1 - q t).
  CoverStep b = cover_step(Partition({1, 1}), Partition({2, 1}));
  CHECK(kappa_symbolic(b) == RationalFunction(kOne - kQ * kQ * kT, kOne - kQ * kT));

  // Numeric overload agrees with the symbolic value.
  QT p{Rat(1, 3), Rat(1, 2)};
  CHECK(kappa(a, p) == kappa_symbolic(a).evaluate(p.q, p.t));
  CHECK(kappa(a, QT{Rat(1, 2), Rat(1, 2)}) == Rat(7, 3));
}

TEST_CASE("vertical Pieri coefficients") {
  // Adding in a fresh column: the column above is empty, so psi' = 1.
  CHECK(psi_prime_symbolic(cover_step(Partition(), Partition({1}))) == RationalFunction(Rat(1)));
  CHECK(psi_prime_symbolic(cover_step(Partition({1}), Partition({2}))) == RationalFunction(Rat(1)));

  // (1) -> (1,1): (1 - t^2)(1 - q) / ((1 - q t)(1 - t)).
  CoverStep col = cover_step(Partition({1}), Partition({1, 1}));
  CHECK(psi_prime_symbolic(col) ==
        RationalFunction((kOne - kT * kT) * (kOne - kQ), (kOne - kQ * kT) * (kOne - kT)));

  // (2,1) -> (2,1,1): the column cells are (1,1) and (2,1).
  CoverStep deep = cover_step(Partition({2, 1}), Partition({2, 1, 1}));
  QT p{Rat(1, 3), Rat(1, 2)};
  CHECK(psi_prime(deep, p) == psi_prime_factored(deep).evaluate(p.q, p.t));
  CHECK(psi_prime(deep, p) == psi_prime_symbolic(deep).evaluate(p.q, p.t));
}

TEST_CASE("the two multiplicity forms agree on every step") {
  QT p{Rat(2, 5), Rat(1, 2)};
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& lam : enumerate_partitions(n)) {
      for (const CoverStep& step : covers_up(lam)) {
        CHECK(kappa_first_form<Rat>(step, p.q, p.t) == kappa_second_form<Rat>(step, p.q, p.t));
        CHECK(kappa_first_form_factored(step).expand() == kappa_factored(step).expand());
        CHECK(kappa_first_form<RationalFunction>(step, RationalFunction::var_q(),
                                                 RationalFunction::var_t()) ==
              kappa_symbolic(step));
      }
    }
  }
}

TEST_CASE("path products collapse to the endpoint closed form") {
  QT p{Rat(1, 3), Rat(1, 2)};
  for (const Partition& lam : enumerate_partitions(5)) {
    Rat expect = path_weight_closed_form(lam).evaluate(p.q, p.t);
    for (const GrowthPath& path : enumerate_paths(lam)) {
      Rat prod(1);
      for (const CoverStep& step : path.steps)
        prod *= psi_prime(step, p) / kappa(step, p);
      CHECK(prod == expect);
    }
  }
}

TEST_CASE("weighted path counts") {
  QT p{Rat(1, 2), Rat(1, 2)};
  CHECK(dimension(Partition(), p) == Rat(1));
  CHECK(dimension(Partition({1}), p) == Rat(1));
  CHECK(dimension(Partition({2, 1}), p) == Rat(7));
  CHECK_THROWS_AS(dimension(Partition({1}), QT{Rat(1), Rat(1, 2)}), std::invalid_argument);

  // The recursion really is the path sum.
  QT r{Rat(1, 3), Rat(2, 5)};
  Partition lam({3, 2});
  Rat by_paths(0);
  for (const GrowthPath& path : enumerate_paths(lam)) {
    Rat prod(1);
    for (const CoverStep& step : path.steps) prod *= kappa(step, r);
    by_paths += prod;
  }
  CHECK(dimension(lam, r) == by_paths);

  // Shared cache across endpoints.
  DimensionCache cache(p);
  CHECK(cache.dim(Partition({2, 1})) == Rat(7));
  CHECK(cache.dim(Partition({2})) == Rat(3, 2));
  CHECK(cache.params().q == Rat(1, 2));
}

TEST_CASE("symbolic dimension of (2,1)") {
  LaurentPoly expect = LaurentPoly::monomial(0, -1, Rat(2)) + kOne +
                       LaurentPoly::monomial(1, -1) + LaurentPoly::monomial(1, 0, Rat(2));
  CHECK(dimension_symbolic(Partition({2, 1})) == RationalFunction(expect));
  CHECK(dimension_symbolic_quotient(Partition({2, 1})).evaluate(Rat(1, 2), Rat(1, 2)) == Rat(7));
  CHECK(dimension_symbolic(Partition()) == RationalFunction(Rat(1)));
}

TEST_CASE("interval dimensions") {
  QT p{Rat(1, 2), Rat(1, 2)};
  CHECK(interval_dimension(Partition({1}), Partition({2, 1}), p) == Rat(7));
  CHECK(interval_dimension(Partition({2, 1}), Partition({2, 1}), p) == Rat(1));
  CHECK(interval_dimension(Partition(), Partition({2, 1}), p) == dimension(Partition({2, 1}), p));
  CHECK_THROWS_AS(interval_dimension(Partition({3}), Partition({2, 1}), p),
                  std::invalid_argument);
}

TEST_CASE("path enumeration") {
  auto paths = enumerate_paths(Partition({2, 1}));
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].added_columns() == std::vector<int>{1, 1, 2});
  CHECK(paths[1].added_columns() == std::vector<int>{1, 2, 1});
  for (const auto& p : paths) {
    CHECK(p.start() == Partition());
    CHECK(p.endpoint() == Partition({2, 1}));
  }

  // Unweighted count matches the standard tableau count.
  for (int n = 0; n <= 5; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      CHECK(enumerate_paths(lam).size() == static_cast<std::size_t>(syt_count(lam).get_ui()));

  CHECK(enumerate_paths(Partition({2}), Partition({1, 1})).empty());

  // Chains must be contiguous.
  CoverStep s1 = cover_step(Partition(), Partition({1}));
  CoverStep s2 = cover_step(Partition({2}), Partition({2, 1}));
  CHECK_THROWS_AS(make_growth_path({s1, s2}), std::invalid_argument);
  GrowthPath ok = make_growth_path({s1, cover_step(Partition({1}), Partition({2}))});
  CHECK(ok.endpoint() == Partition({2}));
  CHECK(ok.added_columns() == std::vector<int>{1, 2});
}
