#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bratteli/branching.hpp"

namespace bratteli {

inline constexpr int kMaxFiniteAlphabet = 8;

// Specialization alphabet: either finitely many nonnegative weights summing
// to one, or the normalized geometric weights (1-1/p)(1/p)^{i-1}, which tie
// the parameter t to 1/p.
class Alphabet {
 public:
  enum class Kind { finite, geometric };

  static Alphabet finite(std::vector<Rat> xs) {
    if (xs.empty() || xs.size() > kMaxFiniteAlphabet)
      throw std::invalid_argument("invalid-alphabet: need 1.." +
                                  std::to_string(kMaxFiniteAlphabet) + " weights");
    Rat sum(0);
    for (const Rat& x : xs) {
      if (x < 0) throw std::invalid_argument("invalid-alphabet: negative weight");
      sum += x;
    }
    if (sum != 1) throw std::invalid_argument("invalid-alphabet: weights must sum to 1, got " +
                                              to_fraction_string(sum));
    Alphabet a;
    a.kind_ = Kind::finite;
    a.xs_ = std::move(xs);
    return a;
  }

  static Alphabet geometric(int p) {
    if (p < 2) throw std::invalid_argument("invalid-alphabet: geometric ratio 1/p needs p >= 2");
    Alphabet a;
    a.kind_ = Kind::geometric;
    a.p_ = p;
    return a;
  }

  Kind kind() const { return kind_; }
  const std::vector<Rat>& weights() const { return xs_; }
  int p() const { return p_; }

  // Measures over the geometric alphabet only exist in closed form when the
  // geometric ratio matches t.
  void check_compatible(const QT& params) const {
    if (kind_ == Kind::geometric && params.t * p_ != 1)
      throw std::invalid_argument(
          "invalid-alphabet: geometric:" + std::to_string(p_) +
          " requires t = 1/" + std::to_string(p_) + ", got t = " + to_fraction_string(params.t));
  }

  std::string describe() const {
    if (kind_ == Kind::geometric) return "geometric:" + std::to_string(p_);
    std::string out;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (i) out += ",";
      out += to_fraction_string(xs_[i]);
    }
    return out;
  }

  static Alphabet parse(const std::string& text) {
    if (text.rfind("geometric:", 0) == 0) {
      int p = 0;
      try {
        std::size_t used = 0;
        p = std::stoi(text.substr(10), &used);
        if (used != text.size() - 10) throw std::invalid_argument("trailing junk");
      } catch (const std::exception&) {
        throw std::invalid_argument("invalid-alphabet: bad geometric spec " + text);
      }
      return geometric(p);
    }
    std::vector<Rat> xs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      if (tok.empty()) throw std::invalid_argument("invalid-alphabet: empty weight in " + text);
      xs.push_back(rat_from_string(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return finite(std::move(xs));
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Kind kind_ = Kind::finite;
  std::vector<Rat> xs_;
  int p_ = 0;
};

// Horizontal-strip Pieri coefficient psi_{big/small}: product over cells of
// `small` whose row meets the strip but whose column does not.
template <class S>
S psi_horizontal(const Partition& big, const Partition& small, const S& q, const S& t) {
  S out(1);
  for (int r = 1; r <= small.rows(); ++r) {
    if (big.part(r) == small.part(r)) continue;  // row misses the strip
    for (int c = 1; c <= small.part(r); ++c) {
      if (column_length(big, c) != column_length(small, c)) continue;  // column meets it
      Cell s{r, c};
      S n1 = detail::one_minus(q, arm(small, s), t, leg(small, s) + 1);
      S d1 = detail::one_minus(q, arm(small, s) + 1, t, leg(small, s));
      S n2 = detail::one_minus(q, arm(big, s) + 1, t, leg(big, s));
      S d2 = detail::one_minus(q, arm(big, s), t, leg(big, s) + 1);
      out *= exact_div(n1, d1) * exact_div(n2, d2);
    }
  }
  return out;
}

inline bool is_horizontal_strip(const Partition& big, const Partition& small) {
  if (!subdiagram(small, big)) return false;
  for (int r = 1; r <= big.rows(); ++r)
    if (small.part(r) < big.part(r + 1)) return false;
  return true;
}

// Macdonald symmetric polynomial P_lambda at a finite list of values, by the
// variable-peeling branching rule with memoization.
template <class S>
class PEvaluator {
 public:
  PEvaluator(std::vector<S> xs, S q, S t)
      : xs_(std::move(xs)), q_(std::move(q)), t_(std::move(t)) {}

  const S& value(const Partition& lam) { return value_k(lam, static_cast<int>(xs_.size())); }

 private:
  struct PairLess {
    bool operator()(const std::pair<Partition, int>& a,
                    const std::pair<Partition, int>& b) const {
      if (a.second != b.second) return a.second < b.second;
      return enumeration_less(a.first, b.first);
    }
  };

  const S& value_k(const Partition& lam, int k) {
    auto key = std::make_pair(lam, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    S out(0);
    if (lam.empty()) out = S(1);
    else if (lam.rows() > k) out = S(0);
    else {
      // Peel the last variable over horizontal strips lam/mu.
      const S& xk = xs_[static_cast<std::size_t>(k - 1)];
      std::vector<int> mu(static_cast<std::size_t>(lam.rows()));
      std::function<void(int)> rec = [&](int r) {
        if (r > lam.rows()) {
          std::vector<int> trimmed = mu;
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          Partition m(trimmed);
          long strip = lam.size() - m.size();
          S term = value_k(m, k - 1);
          if (!(term == S(0)))
            out += term * psi_horizontal(lam, m, q_, t_) * power(xk, strip);
          return;
        }
        int lo = lam.part(r + 1), hi = lam.part(r);
        for (int v = lo; v <= hi; ++v) {
          mu[static_cast<std::size_t>(r - 1)] = v;
          rec(r + 1);
        }
      };
      rec(1);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  std::vector<S> xs_;
  S q_, t_;
  std::map<std::pair<Partition, int>, S, PairLess> memo_;
};

// P_lambda(1, t, t^2, ...) = t^{n(lambda)} / prod_s (1 - q^{a(s)} t^{l(s)+1}).
inline FactoredQT principal_specialization_factored(const Partition& lam) {
  FactoredQT out = FactoredQT::monomial(0, static_cast<int>(n_stat(lam)));
  for (const Cell& s : cells(lam)) out /= FactoredQT::binomial(arm(lam, s), leg(lam, s) + 1);
  return out;
}

// P_lambda(1, t, ..., t^{k-1}): the finite principal specialization.
inline FactoredQT principal_specialization_factored(const Partition& lam, int k) {
  if (k < 0) throw std::invalid_argument("invalid-params: negative variable count");
  FactoredQT out = principal_specialization_factored(lam);
  for (const Cell& s : cells(lam)) {
    FactoredQT b = FactoredQT::binomial(co_arm(s), k - co_leg(s));
    if (b.is_zero()) return FactoredQT::zero();
    out *= b;
  }
  return out;
}

// P_lambda over the normalized geometric alphabet (1-t)(1, t, t^2, ...).
inline FactoredQT geometric_value_factored(const Partition& lam) {
  FactoredQT out = principal_specialization_factored(lam);
  out *= FactoredQT::binomial(0, 1).pow(lam.size());
  return out;
}

struct DistributionMeta {
  std::optional<Rat> q, t;
  std::optional<Alphabet> alphabet;
  std::string source;
  std::optional<long> trials;
  std::optional<unsigned long long> seed;
};

class Distribution {
 public:
  using Map = std::map<Partition, Rat, EnumLess>;

  Distribution(int n, Map entries, DistributionMeta meta)
      : n_(n), entries_(std::move(entries)), meta_(std::move(meta)) {
    Rat sum(0);
    for (const auto& [lam, p] : entries_) {
      if (lam.size() != static_cast<long>(n_))
        throw std::invalid_argument("level-mismatch: entry size != n");
      if (p < 0) throw std::logic_error("negative probability in distribution");
      sum += p;
    }
    if (sum != 1) throw std::logic_error("distribution does not sum to 1: " +
                                         to_fraction_string(sum));
  }

  int n() const { return n_; }
  const Map& entries() const { return entries_; }
  const DistributionMeta& meta() const { return meta_; }

  Rat prob(const Partition& lam) const {
    auto it = entries_.find(lam);
    return it == entries_.end() ? Rat(0) : it->second;
  }

 private:
  int n_;
  Map entries_;
  DistributionMeta meta_;
};

inline Rat tv_distance(const Distribution& a, const Distribution& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("level-mismatch: distributions live on different levels");
  Rat sum(0);
  for (const auto& [lam, p] : a.entries()) sum += rat_abs(p - b.prob(lam));
  for (const auto& [lam, p] : b.entries())
    if (a.prob(lam) == 0) sum += p;
  return sum / 2;
}

namespace detail {
inline Rat alphabet_value(const Partition& lam, const Alphabet& x, const QT& params,
                          PEvaluator<Rat>* finite_eval) {
  if (x.kind() == Alphabet::Kind::geometric)
    return geometric_value_factored(lam).evaluate(params.q, params.t);
  return finite_eval->value(lam);
}
}  // namespace detail

// The coherent measure at level n:
//   M_n(L) = (1-q)^n P_L(x) t^{n(L)} dim(L) / prod_{s in L} (1 - q^{a+1} t^l).
inline Distribution measure(int n, const Alphabet& x, const QT& params,
                            int cap = kDefaultEnumerationCap) {
  check_domain(params);
  x.check_compatible(params);
  check_enumeration_cap(n, cap);
  DimensionCache dims(params);
  std::optional<PEvaluator<Rat>> finite_eval;
  if (x.kind() == Alphabet::Kind::finite)
    finite_eval.emplace(x.weights(), params.q, params.t);
  Distribution::Map entries;
  for (const Partition& lam : enumerate_partitions(n, cap)) {
    Rat p = detail::alphabet_value(lam, x, params, finite_eval ? &*finite_eval : nullptr);
    if (p == 0) { entries.emplace(lam, Rat(0)); continue; }
    p *= rat_pow(Rat(1) - params.q, n);
    p *= rat_pow(params.t, n_stat(lam));
    p *= dims.dim(lam);
    for (const Cell& s : cells(lam)) {
      Rat f = Rat(1) - rat_pow(params.q, arm(lam, s) + 1) * rat_pow(params.t, leg(lam, s));
      p /= f;  // nonzero on the open box
    }
    entries.emplace(lam, std::move(p));
  }
  DistributionMeta meta{params.q, params.t, x, "measure", std::nullopt, std::nullopt};
  return Distribution(n, std::move(entries), std::move(meta));
}

struct Transition {
  CoverStep step;
  Rat prob;
};

// One growth step of the Markov chain: P(L | l) = P_L(x) psi'_{L/l} / P_l(x).
inline std::vector<Transition> transition_probabilities(const Partition& lam, const Alphabet& x,
                                                        const QT& params,
                                                        PEvaluator<Rat>* shared_eval = nullptr) {
  check_domain(params);
  x.check_compatible(params);
  std::optional<PEvaluator<Rat>> local;
  PEvaluator<Rat>* eval = shared_eval;
  if (x.kind() == Alphabet::Kind::finite && !eval) {
    local.emplace(x.weights(), params.q, params.t);
    eval = &*local;
  }
  Rat p_lam = detail::alphabet_value(lam, x, params, eval);
  if (p_lam == 0)
    throw std::domain_error("pole: growth source has zero weight under this alphabet");
  std::vector<Transition> out;
  Rat sum(0);
  for (const CoverStep& step : covers_up(lam)) {
    Rat p = detail::alphabet_value(step.to, x, params, eval);
    if (p != 0) p *= psi_prime(step, params) / p_lam;
    sum += p;
    out.push_back({step, std::move(p)});
  }
  if (sum != 1) throw std::logic_error("transition probabilities sum to " +
                                       to_fraction_string(sum));
  return out;
}

}  // namespace bratteli
