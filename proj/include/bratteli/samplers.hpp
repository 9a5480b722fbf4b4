#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bratteli/macdonald.hpp"
#include "bratteli/special.hpp"

namespace bratteli {

// Deterministic engine per (seed, stream); trials use stream = trial index.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(sq);
}

inline const Int& one_shl_128() {
  static const Int v = Int(1) << 128;
  return v;
}

inline Int draw_uniform_128(std::mt19937_64& rng) {
  Int hi(static_cast<unsigned long>(rng())), lo(static_cast<unsigned long>(rng()));
  return (hi << 64) | lo;
}

// floor(c * 2^128) for an exact cumulative probability c.
inline Int scaled_threshold(const Rat& cum) {
  return (cum.get_num() << 128) / cum.get_den();
}

// Inverse-CDF table over cover steps in deterministic (ascending column) order.
struct TransitionTable {
  std::vector<CoverStep> steps;
  std::vector<Int> thresholds;  // scaled cumulative sums

  const CoverStep& pick(std::mt19937_64& rng) const {
    Int draw = draw_uniform_128(rng);
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
      if (draw < thresholds[i]) return steps[i];
    return steps.back();
  }
};

inline TransitionTable make_table(const std::vector<Transition>& transitions) {
  if (transitions.empty()) throw std::logic_error("empty transition list");
  TransitionTable table;
  Rat cum(0);
  for (const Transition& tr : transitions) {
    cum += tr.prob;
    table.steps.push_back(tr.step);
    table.thresholds.push_back(scaled_threshold(cum));
  }
  return table;
}

// Growth chain for the coherent measures, with per-state tables cached across
// steps and trials.
class GenericGrowthSampler {
 public:
  GenericGrowthSampler(Alphabet x, QT params) : x_(std::move(x)), params_(std::move(params)) {
    check_domain(params_);
    x_.check_compatible(params_);
    if (x_.kind() == Alphabet::Kind::finite)
      eval_.emplace(x_.weights(), params_.q, params_.t);
  }

  const TransitionTable& table(const Partition& lam) {
    auto it = tables_.find(lam);
    if (it != tables_.end()) return it->second;
    auto transitions =
        transition_probabilities(lam, x_, params_, eval_ ? &*eval_ : nullptr);
    return tables_.emplace(lam, make_table(transitions)).first->second;
  }

  GrowthPath grow(int n, std::mt19937_64& rng) {
    GrowthPath path;
    Partition cur;
    for (int i = 0; i < n; ++i) {
      const CoverStep& step = table(cur).pick(rng);
      path.steps.push_back(step);
      cur = step.to;
    }
    return path;
  }

 private:
  Alphabet x_;
  QT params_;
  std::optional<PEvaluator<Rat>> eval_;
  std::map<Partition, TransitionTable, EnumLess> tables_;
};

namespace detail {
// One inverse-CDF draw for the column rule, scanning columns left to right:
// the cumulative P(column <= c) telescopes to p^{-lambda'_c}. The first empty
// column always accepts, so the scan terminates inside the loop.
template <class ColLen>
int choose_bk_column(int columns, int p, ColLen col_len, std::mt19937_64& rng) {
  Int draw = draw_uniform_128(rng);
  for (int c = 1; c <= columns; ++c) {
    if (c > 1 && col_len(c) >= col_len(c - 1)) continue;  // not addable
    Int threshold = one_shl_128() / int_pow(Int(p), static_cast<unsigned long>(col_len(c)));
    if (draw < threshold) return c;
  }
  return columns;
}
}  // namespace detail

// Column-rule growth (q = 0, t = 1/p specialization), on the conjugate shape
// for speed: adding to column c just increments lambda'_c.
inline Partition grow_bk(int n, int p, std::mt19937_64& rng) {
  check_prime_power_base(p);
  std::vector<int> conj;  // conj[c-1] = lambda'_c
  auto col_len = [&](int c) { return c <= static_cast<int>(conj.size()) ? conj[c - 1] : 0; };
  for (int step = 0; step < n; ++step) {
    int chosen = detail::choose_bk_column(static_cast<int>(conj.size()) + 1, p, col_len, rng);
    if (chosen > static_cast<int>(conj.size())) conj.push_back(1);
    else conj[chosen - 1] += 1;
  }
  return conjugate(Partition(conj));
}

// Path-recording variant. Draw-for-draw identical to grow_bk: the same engine
// state yields the same chain, so recording paths never changes the sample.
inline GrowthPath grow_bk_path(int n, int p, std::mt19937_64& rng) {
  check_prime_power_base(p);
  GrowthPath path;
  Partition cur;
  for (int i = 0; i < n; ++i) {
    auto col_len = [&](int c) { return column_length(cur, c); };
    int chosen = detail::choose_bk_column(cur.part(1) + 1, p, col_len, rng);
    CoverStep step = make_cover_step(cur, col_len(chosen) + 1);
    cur = step.to;
    path.steps.push_back(std::move(step));
  }
  return path;
}

struct SampleRun {
  std::string sampler;  // "generic" or "bk"
  int n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::optional<QT> params;
  std::optional<Alphabet> alphabet;
  std::optional<int> p;
  bool record_paths = false;
  std::vector<Partition> endpoints;
  std::vector<GrowthPath> paths;
};

inline void check_trials(long trials) {
  if (trials < 1) throw std::invalid_argument("invalid-params: trials must be >= 1");
}

inline SampleRun run_generic_sampler(int n, const Alphabet& x, const QT& params, long trials,
                                     std::uint64_t seed, bool record_paths = false) {
  check_trials(trials);
  check_enumeration_cap(n);
  GenericGrowthSampler sampler(x, params);
  SampleRun run{"generic", n, trials, seed, params, x, std::nullopt, record_paths, {}, {}};
  run.endpoints.reserve(static_cast<std::size_t>(trials));
  for (long trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = make_engine(seed, static_cast<std::uint64_t>(trial));
    GrowthPath path = sampler.grow(n, rng);
    run.endpoints.push_back(path.endpoint());
    if (record_paths) run.paths.push_back(std::move(path));
  }
  return run;
}

inline SampleRun run_bk_sampler(int n, int p, long trials, std::uint64_t seed,
                                bool record_paths = false) {
  check_trials(trials);
  if (n < 0) throw std::invalid_argument("invalid-params: negative n");
  SampleRun run{"bk", n, trials, seed,
                QT{Rat(0), Rat(1, p)}, Alphabet::geometric(p), p, record_paths, {}, {}};
  run.endpoints.reserve(static_cast<std::size_t>(trials));
  for (long trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = make_engine(seed, static_cast<std::uint64_t>(trial));
    if (record_paths) {
      GrowthPath path = grow_bk_path(n, p, rng);
      run.endpoints.push_back(path.endpoint());
      run.paths.push_back(std::move(path));
    } else {
      run.endpoints.push_back(grow_bk(n, p, rng));
    }
  }
  return run;
}

inline Distribution empirical_distribution(const SampleRun& run) {
  Distribution::Map counts;
  for (const Partition& lam : run.endpoints) {
    auto [it, fresh] = counts.try_emplace(lam, Rat(0));
    it->second += 1;
  }
  for (auto& [lam, c] : counts) c /= Rat(run.trials);
  DistributionMeta meta;
  if (run.params) { meta.q = run.params->q; meta.t = run.params->t; }
  meta.alphabet = run.alphabet;
  meta.source = "empirical";
  meta.trials = run.trials;
  meta.seed = run.seed;
  return Distribution(run.n, std::move(counts), std::move(meta));
}

struct ProfileRow {
  int index = 0;       // which part
  double mean = 0;     // sample mean of lambda_i / n  (approx)
  double stderr_ = 0;  // standard error of that mean  (approx)
  Rat limit;           // (1 - 1/p) / p^{i-1}
};

struct ProfileReport {
  int n = 0, p = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<ProfileRow> rows;
};

// Mean normalized row lengths of the column-rule chain against their limits.
inline ProfileReport asymptotic_profile(int n, int p, long trials, std::uint64_t seed,
                                        int max_rows = 5) {
  if (n < 100) throw std::invalid_argument("invalid-params: profile needs n >= 100");
  check_trials(trials);
  check_prime_power_base(p);
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(max_rows));
  for (long trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = make_engine(seed, static_cast<std::uint64_t>(trial));
    Partition lam = grow_bk(n, p, rng);
    for (int i = 1; i <= max_rows; ++i)
      samples[static_cast<std::size_t>(i - 1)].push_back(
          static_cast<double>(lam.part(i)) / static_cast<double>(n));
  }
  ProfileReport report{n, p, trials, seed, {}};
  for (int i = 1; i <= max_rows; ++i) {
    const auto& v = samples[static_cast<std::size_t>(i - 1)];
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    var = v.size() > 1 ? var / static_cast<double>(v.size() - 1) : 0.0;
    double se = std::sqrt(var / static_cast<double>(v.size()));
    Rat limit = Rat(p - 1, p) * rat_pow(Rat(1, p), i - 1);
    report.rows.push_back({i, mean, se, limit});
  }
  return report;
}

}  // namespace bratteli
