#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bratteli/factored.hpp"
#include "bratteli/partition.hpp"
#include "bratteli/rational_function.hpp"

namespace bratteli {

struct QT {
  Rat q, t;
};

// Open parameter box for the measures and numeric dimension recursion.
inline void check_domain(const QT& p) {
  if (p.q < 0 || p.q >= 1)
    throw std::invalid_argument("invalid-params: q must satisfy 0 <= q < 1, got " +
                                to_fraction_string(p.q));
  if (p.t <= 0 || p.t >= 1)
    throw std::invalid_argument("invalid-params: t must satisfy 0 < t < 1, got " +
                                to_fraction_string(p.t));
}

template <class S>
S exact_div(const S& a, const S& b) {
  return a / b;
}
template <>
inline Rat exact_div<Rat>(const Rat& a, const Rat& b) {
  if (b == 0) throw std::domain_error("pole: zero denominator in branching weight");
  return a / b;
}

namespace detail {
template <class S>
S one_minus(const S& q, long eq, const S& t, long et) {
  return S(1) - power(q, eq) * power(t, et);
}
}  // namespace detail

// Multiplicity in its defining form: products over the added cell's row and
// column of ratios of monomial differences.
template <class S>
S kappa_first_form(const CoverStep& step, const S& q, const S& t) {
  S out(1);
  for (Cell s : row_cells(step)) {
    S num = power(t, -static_cast<long>(leg(step.to, s))) -
            power(q, static_cast<long>(arm(step.to, s)) + 1);
    S den = power(t, -static_cast<long>(leg(step.from, s))) -
            power(q, static_cast<long>(arm(step.from, s)) + 1);
    out *= exact_div(num, den);
  }
  for (Cell s : col_cells(step)) {
    S num = power(q, static_cast<long>(arm(step.to, s))) -
            power(t, -(static_cast<long>(leg(step.to, s)) + 1));
    S den = power(q, static_cast<long>(arm(step.from, s))) -
            power(t, -(static_cast<long>(leg(step.from, s)) + 1));
    out *= exact_div(num, den);
  }
  return out;
}

// Equivalent rewriting: a monomial prefactor times ratios of (1 - q^a t^l).
template <class S>
S kappa_second_form(const CoverStep& step, const S& q, const S& t) {
  long col_len = column_length(step.to, step.added.col);
  S out = power(t, -(col_len - 1));
  for (Cell s : row_cells(step)) {
    S num = detail::one_minus(q, arm(step.to, s) + 1, t, leg(step.to, s));
    S den = detail::one_minus(q, arm(step.from, s) + 1, t, leg(step.from, s));
    out *= exact_div(num, den);
  }
  for (Cell s : col_cells(step)) {
    S num = detail::one_minus(q, arm(step.to, s), t, leg(step.to, s) + 1);
    S den = detail::one_minus(q, arm(step.from, s), t, leg(step.from, s) + 1);
    out *= exact_div(num, den);
  }
  return out;
}

// Single-box vertical Pieri coefficient.
template <class S>
S psi_prime(const CoverStep& step, const S& q, const S& t) {
  S out(1);
  for (Cell s : col_cells(step)) {
    S n1 = detail::one_minus(q, arm(step.to, s), t, leg(step.to, s) + 1);
    S d1 = detail::one_minus(q, arm(step.to, s) + 1, t, leg(step.to, s));
    S n2 = detail::one_minus(q, arm(step.from, s) + 1, t, leg(step.from, s));
    S d2 = detail::one_minus(q, arm(step.from, s), t, leg(step.from, s) + 1);
    out *= exact_div(n1, d1) * exact_div(n2, d2);
  }
  return out;
}

inline FactoredQT kappa_factored(const CoverStep& step) {
  long col_len = column_length(step.to, step.added.col);
  FactoredQT out = FactoredQT::monomial(0, -static_cast<int>(col_len - 1));
  for (Cell s : row_cells(step)) {
    out *= FactoredQT::binomial(arm(step.to, s) + 1, leg(step.to, s));
    out /= FactoredQT::binomial(arm(step.from, s) + 1, leg(step.from, s));
  }
  for (Cell s : col_cells(step)) {
    out *= FactoredQT::binomial(arm(step.to, s), leg(step.to, s) + 1);
    out /= FactoredQT::binomial(arm(step.from, s), leg(step.from, s) + 1);
  }
  return out;
}

inline FactoredQT kappa_first_form_factored(const CoverStep& step) {
  FactoredQT out = FactoredQT::one();
  for (Cell s : row_cells(step)) {
    out *= FactoredQT::monomial_difference(0, -leg(step.to, s), arm(step.to, s) + 1, 0);
    out /= FactoredQT::monomial_difference(0, -leg(step.from, s), arm(step.from, s) + 1, 0);
  }
  for (Cell s : col_cells(step)) {
    out *= FactoredQT::monomial_difference(arm(step.to, s), 0, 0, -(leg(step.to, s) + 1));
    out /= FactoredQT::monomial_difference(arm(step.from, s), 0, 0, -(leg(step.from, s) + 1));
  }
  return out;
}

inline FactoredQT psi_prime_factored(const CoverStep& step) {
  FactoredQT out = FactoredQT::one();
  for (Cell s : col_cells(step)) {
    out *= FactoredQT::binomial(arm(step.to, s), leg(step.to, s) + 1);
    out /= FactoredQT::binomial(arm(step.to, s) + 1, leg(step.to, s));
    out *= FactoredQT::binomial(arm(step.from, s) + 1, leg(step.from, s));
    out /= FactoredQT::binomial(arm(step.from, s), leg(step.from, s) + 1);
  }
  return out;
}

// (1-q)^n t^{n(Lambda)} / prod_{s in Lambda} (1 - q^{a+1} t^l): the common
// value of every path product  prod psi'/kappa  ending at Lambda.
inline FactoredQT path_weight_closed_form(const Partition& lam) {
  FactoredQT out = FactoredQT::binomial(1, 0).pow(lam.size());
  out *= FactoredQT::monomial(0, static_cast<int>(n_stat(lam)));
  for (const Cell& s : cells(lam))
    out /= FactoredQT::binomial(arm(lam, s) + 1, leg(lam, s));
  return out;
}

inline Rat kappa(const CoverStep& step, const QT& p) {
  return kappa_second_form<Rat>(step, p.q, p.t);
}
inline Rat psi_prime(const CoverStep& step, const QT& p) {
  return psi_prime<Rat>(step, p.q, p.t);
}
inline RationalFunction kappa_symbolic(const CoverStep& step) {
  return kappa_factored(step).expand();
}
inline RationalFunction psi_prime_symbolic(const CoverStep& step) {
  return psi_prime_factored(step).expand();
}

inline bool subdiagram(const Partition& a, const Partition& b) {
  for (int r = 1; r <= a.rows(); ++r)
    if (a.part(r) > b.part(r)) return false;
  return true;
}

// Weighted path count dim(Lambda) = sum over paths of the product of kappa.
class DimensionCache {
 public:
  explicit DimensionCache(QT p) : p_(std::move(p)) { check_domain(p_); }

  const Rat& dim(const Partition& lam) {
    auto it = memo_.find(lam);
    if (it != memo_.end()) return it->second;
    Rat value;
    if (lam.empty()) value = 1;
    else {
      value = 0;
      for (const CoverStep& step : covers_down(lam))
        value += dim(step.from) * kappa(step, p_);
    }
    return memo_.emplace(lam, std::move(value)).first->second;
  }

  const QT& params() const { return p_; }

 private:
  QT p_;
  std::map<Partition, Rat, EnumLess> memo_;
};

inline Rat dimension(const Partition& lam, const QT& p) {
  check_enumeration_cap(lam.size());
  DimensionCache cache(p);
  return cache.dim(lam);
}

// Same recursion restricted to the interval [from, to].
inline Rat interval_dimension(const Partition& from, const Partition& to, const QT& p) {
  check_enumeration_cap(to.size());
  check_domain(p);
  if (!subdiagram(from, to))
    throw std::invalid_argument("invalid-step: interval endpoints not nested");
  std::map<Partition, Rat, EnumLess> memo;
  std::function<const Rat&(const Partition&)> rec = [&](const Partition& nu) -> const Rat& {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    Rat value;
    if (nu == from) value = 1;
    else {
      value = 0;
      for (const CoverStep& step : covers_down(nu))
        if (subdiagram(from, step.from)) value += rec(step.from) * kappa(step, p);
    }
    return memo.emplace(nu, std::move(value)).first->second;
  };
  return rec(to);
}

inline SymQuotient dimension_symbolic_quotient(const Partition& lam) {
  std::map<Partition, SymQuotient, EnumLess> memo;
  std::function<const SymQuotient&(const Partition&)> rec =
      [&](const Partition& nu) -> const SymQuotient& {
    auto it = memo.find(nu);
    if (it != memo.end()) return it->second;
    SymQuotient value;
    if (nu.empty()) value = SymQuotient::one();
    else {
      for (const CoverStep& step : covers_down(nu)) {
        SymQuotient term = rec(step.from);
        term *= kappa_factored(step);
        value += term;
      }
    }
    return memo.emplace(nu, std::move(value)).first->second;
  };
  return rec(lam);
}

inline RationalFunction dimension_symbolic(const Partition& lam) {
  return dimension_symbolic_quotient(lam).to_rational_function();
}

struct GrowthPath {
  std::vector<CoverStep> steps;

  Partition start() const { return steps.empty() ? Partition() : steps.front().from; }
  Partition endpoint() const { return steps.empty() ? Partition() : steps.back().to; }
  std::vector<int> added_columns() const {
    std::vector<int> out;
    out.reserve(steps.size());
    for (const CoverStep& s : steps) out.push_back(s.added.col);
    return out;
  }
};

inline GrowthPath make_growth_path(std::vector<CoverStep> steps) {
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (!(steps[i].from == steps[i - 1].to))
      throw std::invalid_argument("invalid-step: path steps do not chain");
  return GrowthPath{std::move(steps)};
}

// All saturated chains from `from` up to `to`.
inline std::vector<GrowthPath> enumerate_paths(const Partition& from, const Partition& to) {
  check_enumeration_cap(to.size());
  if (!subdiagram(from, to)) return {};
  if (from == to) return {GrowthPath{}};
  std::vector<GrowthPath> out;
  for (const CoverStep& step : covers_down(to)) {
    if (!subdiagram(from, step.from)) continue;
    for (GrowthPath& p : enumerate_paths(from, step.from)) {
      p.steps.push_back(step);
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline std::vector<GrowthPath> enumerate_paths(const Partition& to) {
  return enumerate_paths(Partition(), to);
}

}  // namespace bratteli
