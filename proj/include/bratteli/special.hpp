#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "bratteli/macdonald.hpp"

namespace bratteli {

inline void check_prime_power_base(int p) {
  if (p < 2) throw std::invalid_argument("invalid-params: need p >= 2, got " + std::to_string(p));
}

// --- Hall-Littlewood specialization: q = 0, t = 1/p ------------------------

// kappa collapses to the integer p^{lambda'_{i+1}} + ... + p^{lambda'_i},
// i the column that received the new cell.
inline Int hl_kappa(const CoverStep& step, int p) {
  check_prime_power_base(p);
  int i = step.added.col;
  int lo = column_length(step.from, i + 1), hi = column_length(step.from, i);
  Int out = 0;
  for (int j = lo; j <= hi; ++j) out += int_pow(Int(p), static_cast<unsigned long>(j));
  return out;
}

inline LaurentPoly hl_kappa_poly(const CoverStep& step) {
  int i = step.added.col;
  int lo = column_length(step.from, i + 1), hi = column_length(step.from, i);
  LaurentPoly out;
  for (int j = lo; j <= hi; ++j) out += LaurentPoly::monomial(j, 0);
  return out;
}

// dim(Lambda) under the Hall-Littlewood specialization, as a polynomial in p
// (a Green polynomial).
inline LaurentPoly green_polynomial(const Partition& lam) {
  check_enumeration_cap(lam.size());
  std::map<Partition, LaurentPoly, EnumLess> memo;
  std::function<const LaurentPoly&(const Partition&)> rec =
      [&](const Partition& nu) -> const LaurentPoly& {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    LaurentPoly value;
    if (nu.empty()) value = LaurentPoly::constant(Rat(1));
    else
      for (const CoverStep& step : covers_down(nu))
        value += rec(step.from) * hl_kappa_poly(step);
    return memo.emplace(nu, std::move(value)).first->second;
  };
  return rec(lam);
}

inline Int green_value(const Partition& lam, int p) {
  check_prime_power_base(p);
  Rat v = green_polynomial(lam).evaluate(Rat(p), Rat(0));
  if (v.get_den() != 1) throw std::logic_error("green polynomial must be integral");
  return v.get_num();
}

// Measure of Jordan types of uniform unipotent upper-triangular matrices:
// the coherent measure at q = 0, t = 1/p over the geometric alphabet.
inline Distribution jordan_measure(int n, int p, int cap = kDefaultEnumerationCap) {
  check_prime_power_base(p);
  Distribution base = measure(n, Alphabet::geometric(p), QT{Rat(0), Rat(1, p)}, cap);
  DistributionMeta meta = base.meta();
  meta.source = "jordan-measure";
  return Distribution(n, base.entries(), std::move(meta));
}

// Column-growth rule: column 1 with probability p^{-lambda'_1}, column j > 1
// with probability p^{-lambda'_j} - p^{-lambda'_{j-1}}.
inline std::vector<Transition> bk_transitions(const Partition& lam, int p) {
  check_prime_power_base(p);
  std::vector<Transition> out;
  Rat sum(0);
  for (const CoverStep& step : covers_up(lam)) {
    int j = step.added.col;
    Rat prob = rat_pow(Rat(1, p), column_length(lam, j));
    if (j > 1) prob -= rat_pow(Rat(1, p), column_length(lam, j - 1));
    sum += prob;
    out.push_back({step, std::move(prob)});
  }
  if (sum != 1) throw std::logic_error("column rule probabilities sum to " +
                                       to_fraction_string(sum));
  return out;
}

// --- Schur specialization: q = t --------------------------------------------

// kappa = q^{-lambda'_i} prod_{s in lambda} [h_Lambda(s)] / [h_lambda(s)],
// with [n] the q-integer.
inline FactoredQT schur_kappa_factored(const CoverStep& step) {
  FactoredQT out = FactoredQT::monomial(-column_length(step.from, step.added.col), 0);
  for (const Cell& s : cells(step.from)) {
    out *= FactoredQT::binomial(arm_leg_hook(step.to, s).hook, 0);
    out /= FactoredQT::binomial(arm_leg_hook(step.from, s).hook, 0);
  }
  return out;
}

template <class S>
S schur_kappa(const CoverStep& step, const S& q) {
  S out = power(q, -static_cast<long>(column_length(step.from, step.added.col)));
  for (const Cell& s : cells(step.from)) {
    out *= exact_div(q_integer(arm_leg_hook(step.to, s).hook, q),
                     q_integer(arm_leg_hook(step.from, s).hook, q));
  }
  return out;
}

inline RationalFunction schur_kappa_symbolic(const CoverStep& step) {
  return schur_kappa_factored(step).expand();
}

// dim(Lambda) = f^Lambda prod_s [h(s)] / q^{n(Lambda)}.
inline FactoredQT schur_dimension_factored(const Partition& lam) {
  FactoredQT out = FactoredQT::monomial(-static_cast<int>(n_stat(lam)), 0,
                                        Rat(syt_count(lam)));
  for (const Cell& s : cells(lam)) {
    out *= FactoredQT::binomial(arm_leg_hook(lam, s).hook, 0);
    out /= FactoredQT::binomial(1, 0);
  }
  return out;
}

inline RationalFunction schur_dimension_symbolic(const Partition& lam) {
  return schur_dimension_factored(lam).expand();
}

inline Rat schur_dimension(const Partition& lam, const Rat& q) {
  return schur_dimension_factored(lam).evaluate(q, Rat(0));
}

// M_n = s_Lambda(x) f^Lambda: the q = t measure does not depend on q.
inline Distribution schur_measure(int n, const std::vector<Rat>& xs,
                                  int cap = kDefaultEnumerationCap) {
  Alphabet x = Alphabet::finite(xs);  // validates weights
  check_enumeration_cap(n, cap);
  // Schur polynomials via the same evaluator at q = t (psi factors cancel to 1
  // only partially; any q = t in the open box gives s_lambda).
  PEvaluator<Rat> ev(x.weights(), Rat(1, 2), Rat(1, 2));
  Distribution::Map entries;
  for (const Partition& lam : enumerate_partitions(n, cap))
    entries.emplace(lam, ev.value(lam) * Rat(syt_count(lam)));
  DistributionMeta meta{std::nullopt, std::nullopt, x, "schur-measure",
                        std::nullopt, std::nullopt};
  return Distribution(n, std::move(entries), std::move(meta));
}

// --- Jack specialization: q = t^{1/theta}, t -> 1 ---------------------------

inline void check_jack_theta(const Rat& theta) {
  if (theta <= 0)
    throw std::invalid_argument(
        "invalid-params: jack weights need theta > 0 (theta = 0 degenerates; it amounts to "
        "pinning q = 1 before the limit), got " + to_fraction_string(theta));
}

inline Rat jack_kappa(const CoverStep& step, const Rat& theta) {
  check_jack_theta(theta);
  Rat out(1);
  for (Cell s : row_cells(step)) {
    Rat num = arm(step.to, s) + 1 + theta * leg(step.to, s);
    Rat den = arm(step.from, s) + 1 + theta * leg(step.from, s);
    out *= exact_div(num, den);
  }
  for (Cell s : col_cells(step)) {
    Rat num = arm(step.to, s) + theta * (leg(step.to, s) + 1);
    Rat den = arm(step.from, s) + theta * (leg(step.from, s) + 1);
    out *= exact_div(num, den);
  }
  return out;
}

// Weighted path count under the one-parameter multiplicity.
inline Rat jack_dimension(const Partition& lam, const Rat& theta,
                          int cap = kDefaultEnumerationCap) {
  check_jack_theta(theta);
  check_enumeration_cap(lam.size(), cap);
  std::map<Partition, Rat, EnumLess> memo;
  std::function<const Rat&(const Partition&)> rec = [&](const Partition& nu) -> const Rat& {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    Rat value(1);
    if (!nu.empty()) {
      value = 0;
      for (const CoverStep& step : covers_down(nu)) value += rec(step.from) * jack_kappa(step, theta);
    }
    return memo.emplace(nu, std::move(value)).first->second;
  };
  return rec(lam);
}

// kappa evaluated on the approach path q = u^d, t = u^c (theta = c/d in
// lowest terms), u = 1 - eps; converges to jack_kappa as eps -> 0.
inline Rat kappa_at_jack_point(const CoverStep& step, const Rat& theta, const Rat& eps) {
  check_jack_theta(theta);
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("invalid-params: need 0 < eps < 1");
  Rat u = Rat(1) - eps;
  long c = theta.get_num().get_si(), d = theta.get_den().get_si();
  QT p{rat_pow(u, d), rat_pow(u, c)};
  return kappa_second_form<Rat>(step, p.q, p.t);
}

}  // namespace bratteli
