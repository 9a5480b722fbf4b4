#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bratteli/macdonald.hpp"
#include "bratteli/oracles.hpp"
#include "bratteli/special.hpp"

namespace bratteli {

struct VerifyReport {
  std::string identity;
  bool ok = true;
  long checked = 0;
  std::string detail;
  std::optional<std::string> counterexample;
};

inline std::string step_to_string(const CoverStep& step) {
  return partition_to_string(step.from) + " -> " + partition_to_string(step.to);
}

// Injection point for the branching weights, so tests can feed a corrupted
// multiplicity and watch the verifiers catch it.
struct StepWeights {
  std::function<FactoredQT(const CoverStep&)> kappa = [](const CoverStep& s) {
    return kappa_factored(s);
  };
  std::function<FactoredQT(const CoverStep&)> psi = [](const CoverStep& s) {
    return psi_prime_factored(s);
  };
};

namespace detail {

// Structural comparison first; expansion only on mismatch, so honest inputs
// stay cheap and corrupted ones still get an exact verdict.
inline bool factored_equal(const FactoredQT& a, const FactoredQT& b) {
  if ((a / b).is_one()) return true;
  return a.expand() == b.expand();
}

inline void record_failure(VerifyReport& report, const std::string& witness) {
  if (report.ok) {
    report.ok = false;
    report.counterexample = witness;
  }
}

inline void for_each_step(int max_n, const std::function<void(const CoverStep&)>& fn) {
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lam : enumerate_partitions(n))
      for (const CoverStep& step : covers_down(lam)) fn(step);
}

}  // namespace detail

// Both printed forms of the multiplicity agree on every cover step; the
// literal template transcriptions are cross-checked at small sizes.
inline VerifyReport verify_kappa_forms(int max_n) {
  check_enumeration_cap(max_n);
  VerifyReport report{"kappa-forms", true, 0, "", std::nullopt};
  const RationalFunction qv = RationalFunction::var_q(), tv = RationalFunction::var_t();
  detail::for_each_step(max_n, [&](const CoverStep& step) {
    ++report.checked;
    if (!detail::factored_equal(kappa_first_form_factored(step), kappa_factored(step)))
      detail::record_failure(report, step_to_string(step));
    if (step.to.size() <= 4) {
      RationalFunction f1 = kappa_first_form<RationalFunction>(step, qv, tv);
      RationalFunction f2 = kappa_second_form<RationalFunction>(step, qv, tv);
      if (!(f1 == f2)) detail::record_failure(report, step_to_string(step) + " (literal)");
    }
  });
  std::ostringstream os;
  os << "cover steps up to level " << max_n;
  report.detail = os.str();
  return report;
}

// Path products of psi'/kappa collapse to the closed form for every path, so
// they depend on the endpoint only.
inline VerifyReport verify_exchangeability(const Partition& lam,
                                           const StepWeights& weights = StepWeights{}) {
  VerifyReport report{"exchangeability", true, 0, "", std::nullopt};
  FactoredQT closed = path_weight_closed_form(lam);
  for (const GrowthPath& path : enumerate_paths(lam)) {
    ++report.checked;
    FactoredQT product = FactoredQT::one();
    for (const CoverStep& step : path.steps) product *= weights.psi(step) / weights.kappa(step);
    if (!detail::factored_equal(product, closed)) {
      std::ostringstream os;
      os << partition_to_string(lam) << " via columns [";
      for (std::size_t i = 0; i < path.steps.size(); ++i)
        os << (i ? "," : "") << path.steps[i].added.col;
      os << "]";
      detail::record_failure(report, os.str());
    }
  }
  std::ostringstream os;
  os << report.checked << " paths to " << partition_to_string(lam);
  report.detail = os.str();
  return report;
}

inline VerifyReport verify_exchangeability_all(int max_n,
                                               const StepWeights& weights = StepWeights{}) {
  check_enumeration_cap(max_n);
  VerifyReport report{"exchangeability", true, 0, "", std::nullopt};
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      VerifyReport one = verify_exchangeability(lam, weights);
      report.checked += one.checked;
      if (!one.ok) detail::record_failure(report, one.counterexample.value_or(""));
    }
  std::ostringstream os;
  os << "all paths to endpoints up to level " << max_n;
  report.detail = os.str();
  return report;
}

// The level-n measure pushes down to the level-(n-1) measure through the
// branching weights, exactly, level by level.
inline VerifyReport verify_coherence(int n, const QT& params, const Alphabet& x,
                                     const StepWeights& weights = StepWeights{}) {
  check_enumeration_cap(n);
  VerifyReport report{"coherence", true, 0, "", std::nullopt};
  DimensionCache dims(params);
  std::optional<PEvaluator<Rat>> eval;
  if (x.kind() == Alphabet::Kind::finite) eval.emplace(x.weights(), params.q, params.t);
  std::vector<Distribution> levels;
  for (int m = 0; m <= n; ++m) levels.push_back(measure(m, x, params));
  for (int m = n; m >= 1; --m) {
    for (const Partition& lam : enumerate_partitions(m - 1)) {
      Rat pushed(0);
      for (const CoverStep& step : covers_up(lam)) {
        Rat kap = weights.kappa(step).evaluate(params.q, params.t);
        pushed += exact_div(dims.dim(lam), dims.dim(step.to)) * kap *
                  levels[static_cast<std::size_t>(m)].prob(step.to);
      }
      ++report.checked;
      if (pushed != levels[static_cast<std::size_t>(m - 1)].prob(lam)) {
        std::ostringstream os;
        os << partition_to_string(lam) << " from level " << m;
        detail::record_failure(report, os.str());
      }
    }
  }
  std::ostringstream os;
  os << "push-downs through level " << n << ", q=" << to_fraction_string(params.q)
     << ", t=" << to_fraction_string(params.t) << ", x=" << x.describe();
  report.detail = os.str();
  return report;
}

// Single-row Pieri identity: summing P_Lambda * psi' over covers recovers
// (sum of the alphabet) * P_lambda, i.e. P_lambda itself here.
inline VerifyReport verify_pieri(int max_n, const QT& params, const Alphabet& x) {
  check_enumeration_cap(max_n);
  check_domain(params);
  x.check_compatible(params);
  VerifyReport report{"pieri", true, 0, "", std::nullopt};
  std::optional<PEvaluator<Rat>> eval;
  if (x.kind() == Alphabet::Kind::finite) eval.emplace(x.weights(), params.q, params.t);
  for (int n = 0; n <= max_n; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      Rat lhs(0);
      for (const CoverStep& step : covers_up(lam))
        lhs += detail::alphabet_value(step.to, x, params, eval ? &*eval : nullptr) *
               psi_prime<Rat>(step, params.q, params.t);
      ++report.checked;
      if (lhs != detail::alphabet_value(lam, x, params, eval ? &*eval : nullptr))
        detail::record_failure(report, partition_to_string(lam));
    }
  std::ostringstream os;
  os << "partitions up to level " << max_n << ", q=" << to_fraction_string(params.q)
     << ", t=" << to_fraction_string(params.t) << ", x=" << x.describe();
  report.detail = os.str();
  return report;
}

// Green polynomial from the branching DP equals the charge-statistic sum:
// G(p) = p^{n(Lambda)} * sum_mu f^mu K_{mu,Lambda}(1/p), as polynomials.
inline VerifyReport verify_green_charge(int max_n) {
  check_enumeration_cap(max_n);
  VerifyReport report{"green-charge", true, 0, "", std::nullopt};
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      LaurentPoly rhs;
      for (const Partition& mu : enumerate_partitions(n)) {
        LaurentPoly kf = kostka_foulkes(mu, lam);  // variable in the t slot
        if (kf.is_zero()) continue;
        LaurentPoly reversed;  // p^{n(lam)} K(1/p), charge k |-> p^{n(lam)-k}
        for (const auto& [e, c] : kf.terms())
          reversed += LaurentPoly::monomial(static_cast<int>(n_stat(lam)) - e.t, 0, c);
        rhs += reversed * LaurentPoly::constant(Rat(syt_count(mu)));
      }
      ++report.checked;
      if (!(green_polynomial(lam) == rhs)) detail::record_failure(report, partition_to_string(lam));
    }
  std::ostringstream os;
  os << "Green polynomials up to level " << max_n;
  report.detail = os.str();
  return report;
}

// At q = t the branching collapses to hook-length data: the closed-form
// multiplicity and dimension match the general ones symbolically.
inline VerifyReport verify_hook_dim(int max_n) {
  check_enumeration_cap(max_n);
  VerifyReport report{"hook-dim", true, 0, "", std::nullopt};
  detail::for_each_step(max_n, [&](const CoverStep& step) {
    ++report.checked;
    RationalFunction general = kappa_factored(step).expand().substitute_q_to_t();
    RationalFunction closed = schur_kappa_factored(step).expand().substitute_q_to_t();
    if (!(general == closed)) detail::record_failure(report, step_to_string(step));
  });
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lam : enumerate_partitions(n)) {
      ++report.checked;
      RationalFunction general =
          dimension_symbolic_quotient(lam).substitute_q_to_t().to_rational_function();
      RationalFunction closed = schur_dimension_factored(lam).expand().substitute_q_to_t();
      if (!(general == closed))
        detail::record_failure(report, "dim " + partition_to_string(lam));
    }
  std::ostringstream os;
  os << "multiplicities and dimensions up to level " << max_n << " at equal parameters";
  report.detail = os.str();
  return report;
}

// Relative dimensions at q = t factor through Young-lattice path counts:
// dim(Lambda,nu)/dim(0,nu) = q^{n(Lambda)}/prod [h_Lambda] * paths(Lambda,nu)/paths(0,nu).
inline VerifyReport verify_relative_dim(int max_n) {
  check_enumeration_cap(max_n);
  VerifyReport report{"relative-dim", true, 0, "", std::nullopt};
  struct StepLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
      if (!(a.first == b.first)) return enumeration_less(a.first, b.first);
      return enumeration_less(a.second, b.second);
    }
  };
  std::map<std::pair<Partition, Partition>, RationalFunction, StepLess> kappa_memo;
  auto kappa_eq = [&](const CoverStep& step) -> const RationalFunction& {
    auto key = std::make_pair(step.from, step.to);
    auto it = kappa_memo.find(key);
    if (it != kappa_memo.end()) return it->second;
    return kappa_memo.emplace(key, kappa_factored(step).expand().substitute_q_to_t())
        .first->second;
  };
  for (int n = 0; n <= max_n; ++n)
    for (const Partition& nu : enumerate_partitions(n)) {
      // One downward DP from nu yields dim(mu, nu) for every mu below it.
      std::map<Partition, RationalFunction, EnumLess> interval;
      std::function<const RationalFunction&(const Partition&)> rec =
          [&](const Partition& mu) -> const RationalFunction& {
        auto it = interval.find(mu);
        if (it != interval.end()) return it->second;
        RationalFunction value{Rat(0)};
        for (const CoverStep& step : covers_up(mu))
          if (subdiagram(step.to, nu)) value = value + kappa_eq(step) * rec(step.to);
        return interval.emplace(mu, std::move(value)).first->second;
      };
      interval.emplace(nu, RationalFunction(Rat(1)));
      const RationalFunction& whole = rec(Partition());
      for (const auto& [mu, dim_mu_nu] : interval) {
        ++report.checked;
        // Cross-multiplied: dim(mu,nu) * prod [h_mu] * paths(0,nu)
        //                   = t^{n(mu)} * dim(0,nu) * paths(mu,nu).
        FactoredQT hooks = FactoredQT::one();
        for (Cell s : cells(mu))
          hooks *= FactoredQT::binomial(arm_leg_hook(mu, s).hook, 0) / FactoredQT::binomial(1, 0);
        RationalFunction lhs = dim_mu_nu * hooks.expand().substitute_q_to_t() *
                               RationalFunction(Rat(young_path_count(Partition(), nu)));
        RationalFunction rhs =
            RationalFunction(LaurentPoly::monomial(0, static_cast<int>(n_stat(mu)))) * whole *
            RationalFunction(Rat(young_path_count(mu, nu)));
        if (!(lhs == rhs))
          detail::record_failure(report, partition_to_string(mu) + " inside " +
                                             partition_to_string(nu));
      }
    }
  std::ostringstream os;
  os << "containments with outer shape up to level " << max_n;
  report.detail = os.str();
  return report;
}

// Reparameterized multiplicity converges to the one-parameter limit with
// error shrinking at least proportionally to eps: successive errors must drop
// by at least a third of the eps step. Steps whose linear error term vanishes
// shrink faster (quadratically) and still pass; a wrong limit stalls at a
// constant error and fails.
inline VerifyReport verify_jack_limit(int max_n,
                                      const std::vector<Rat>& thetas = {Rat(1, 2), Rat(1), Rat(2)},
                                      const std::vector<Rat>& epsilons = {Rat(1, 10), Rat(1, 100),
                                                                          Rat(1, 1000)}) {
  check_enumeration_cap(max_n);
  if (epsilons.size() < 2) throw std::invalid_argument("invalid-params: need at least two eps");
  VerifyReport report{"jack-limit", true, 0, "", std::nullopt};
  detail::for_each_step(max_n, [&](const CoverStep& step) {
    for (const Rat& theta : thetas) {
      ++report.checked;
      Rat limit = jack_kappa(step, theta);
      std::vector<Rat> errors;
      for (const Rat& eps : epsilons)
        errors.push_back(rat_abs(kappa_at_jack_point(step, theta, eps) - limit));
      for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        if (errors[i + 1] == 0) continue;  // exact agreement at the finer step
        bool bad = false;
        if (errors[i] == 0) bad = true;
        else {
          Rat ratio = errors[i] / errors[i + 1];
          Rat eps_ratio = epsilons[i] / epsilons[i + 1];
          if (ratio * 3 < eps_ratio) bad = true;
        }
        if (bad) {
          std::ostringstream os;
          os << step_to_string(step) << " at theta=" << to_fraction_string(theta);
          detail::record_failure(report, os.str());
        }
      }
    }
  });
  std::ostringstream os;
  os << "cover steps up to level " << max_n << " across " << thetas.size() << " theta values";
  report.detail = os.str();
  return report;
}

// Default exact-check grid: parameter pairs crossed with the alphabets that
// are compatible with them.
inline std::vector<std::pair<QT, Alphabet>> default_grid() {
  std::vector<std::pair<QT, Alphabet>> grid;
  std::vector<Rat> qs = {Rat(0), Rat(1, 3), Rat(1, 2)};
  std::vector<Rat> ts = {Rat(1, 3), Rat(1, 2)};
  std::vector<Alphabet> finite = {
      Alphabet::finite({Rat(1, 2), Rat(1, 2)}),
      Alphabet::finite({Rat(2, 5), Rat(3, 10), Rat(1, 5), Rat(1, 10)})};
  for (const Rat& q : qs)
    for (const Rat& t : ts) {
      QT params{q, t};
      for (const Alphabet& x : finite) grid.emplace_back(params, x);
      if (t == Rat(1, 2)) grid.emplace_back(params, Alphabet::geometric(2));
      if (t == Rat(1, 3)) grid.emplace_back(params, Alphabet::geometric(3));
    }
  return grid;
}

struct SuiteReport {
  bool ok = true;
  std::vector<VerifyReport> reports;

  void add(VerifyReport r) {
    ok = ok && r.ok;
    reports.push_back(std::move(r));
  }
};

// Everything at once, with per-identity caps scaled down to level_cap.
inline SuiteReport verify_suite(int level_cap, const StepWeights& weights = StepWeights{}) {
  check_enumeration_cap(level_cap);
  auto cap = [&](int full) { return std::min(level_cap, full); };
  SuiteReport suite;
  suite.add(verify_kappa_forms(cap(8)));
  suite.add(verify_exchangeability_all(cap(7), weights));
  for (const auto& [params, x] : default_grid()) {
    suite.add(verify_coherence(cap(8), params, x, weights));
    suite.add(verify_pieri(cap(6), params, x));
  }
  suite.add(verify_green_charge(cap(6)));
  suite.add(verify_hook_dim(cap(8)));
  suite.add(verify_relative_dim(cap(8)));
  suite.add(verify_jack_limit(cap(6)));
  return suite;
}

}  // namespace bratteli
