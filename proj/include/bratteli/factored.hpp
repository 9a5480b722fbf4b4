#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "bratteli/rational_function.hpp"

namespace bratteli {

// Scalar kept in the factored shape  c * q^mq * t^mt * prod (1 - q^b t^c)^e.
// Every branching weight is a product of such atoms, so quotients cancel by
// exponent bookkeeping instead of polynomial arithmetic. Binomial keys are
// canonical: (b,c) lexicographically positive, never (0,0).
class FactoredQT {
 public:
  using Key = std::pair<int, int>;

  FactoredQT() = default;  // one

  static FactoredQT one() { return FactoredQT(); }
  static FactoredQT zero() {
    FactoredQT f;
    f.coeff_ = 0;
    return f;
  }
  static FactoredQT rational(Rat c) {
    FactoredQT f;
    f.coeff_ = std::move(c);
    return f;
  }
  static FactoredQT monomial(int mq, int mt, Rat c = Rat(1)) {
    FactoredQT f;
    f.coeff_ = std::move(c);
    if (f.coeff_ != 0) { f.mq_ = mq; f.mt_ = mt; }
    return f;
  }
  // 1 - q^b t^c
  static FactoredQT binomial(int b, int c, int e = 1) {
    FactoredQT f;
    f.mul_binomial(b, c, e);
    return f;
  }
  // q^{aq} t^{at} - q^{bq} t^{bt}
  static FactoredQT monomial_difference(int aq, int at, int bq, int bt) {
    if (aq == bq && at == bt) return zero();
    FactoredQT f = monomial(aq, at);
    f.mul_binomial(bq - aq, bt - at, 1);
    return f;
  }

  bool is_zero() const { return coeff_ == 0; }
  bool is_one() const { return coeff_ == 1 && mq_ == 0 && mt_ == 0 && bins_.empty(); }
  const Rat& coefficient() const { return coeff_; }
  int monomial_q() const { return mq_; }
  int monomial_t() const { return mt_; }
  const std::map<Key, int>& binomials() const { return bins_; }

  friend bool operator==(const FactoredQT&, const FactoredQT&) = default;

  FactoredQT& operator*=(const FactoredQT& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    coeff_ *= o.coeff_;
    mq_ += o.mq_;
    mt_ += o.mt_;
    for (const auto& [k, e] : o.bins_) add_exponent(k, e);
    return *this;
  }
  FactoredQT& operator/=(const FactoredQT& o) {
    if (o.is_zero()) throw std::domain_error("pole: division by factored zero");
    if (is_zero()) return *this;
    coeff_ /= o.coeff_;
    mq_ -= o.mq_;
    mt_ -= o.mt_;
    for (const auto& [k, e] : o.bins_) add_exponent(k, -e);
    return *this;
  }
  friend FactoredQT operator*(FactoredQT a, const FactoredQT& b) { return a *= b; }
  friend FactoredQT operator/(FactoredQT a, const FactoredQT& b) { return a /= b; }

  FactoredQT pow(long e) const {
    if (e == 0) return one();
    if (is_zero()) {
      if (e < 0) throw std::domain_error("pole: factored zero to negative power");
      return zero();
    }
    FactoredQT f;
    f.coeff_ = rat_pow(coeff_, e);
    f.mq_ = static_cast<int>(mq_ * e);
    f.mt_ = static_cast<int>(mt_ * e);
    for (const auto& [k, ex] : bins_) f.bins_[k] = static_cast<int>(ex * e);
    return f;
  }

  static LaurentPoly binomial_poly(const Key& k) {
    return LaurentPoly::constant(Rat(1)) - LaurentPoly::monomial(k.first, k.second);
  }

  RationalFunction expand() const {
    if (is_zero()) return RationalFunction();
    LaurentPoly num = LaurentPoly::monomial(mq_, mt_, coeff_);
    LaurentPoly den = LaurentPoly::constant(Rat(1));
    for (const auto& [k, e] : bins_) {
      LaurentPoly b = binomial_poly(k);
      for (int i = 0; i < (e > 0 ? e : -e); ++i) {
        if (e > 0) num *= b; else den *= b;
      }
    }
    return RationalFunction(std::move(num), std::move(den));
  }

  Rat evaluate(const Rat& q, const Rat& t) const {
    if (is_zero()) return Rat(0);
    if ((mq_ < 0 && q == 0) || (mt_ < 0 && t == 0))
      throw std::domain_error("pole: negative monomial exponent at zero");
    Rat out = coeff_ * rat_pow(q, mq_) * rat_pow(t, mt_);
    for (const auto& [k, e] : bins_) {
      Rat b = Rat(1) - rat_pow(q, k.first) * rat_pow(t, k.second);
      if (b == 0 && e < 0)
        throw std::domain_error("pole: vanishing factor to negative power");
      out *= rat_pow(b, e);
    }
    return out;
  }

 private:
  void add_exponent(const Key& k, int e) {
    if (e == 0) return;
    auto [it, fresh] = bins_.try_emplace(k, e);
    if (!fresh) {
      it->second += e;
      if (it->second == 0) bins_.erase(it);
    }
  }
  void mul_binomial(int b, int c, int e) {
    if (e == 0) return;
    if (b == 0 && c == 0) {
      if (e < 0) throw std::domain_error("pole: zero binomial to negative power");
      *this = zero();
      return;
    }
    if (b < 0 || (b == 0 && c < 0)) {
      // 1 - x = -x (1 - 1/x)
      if (e % 2 != 0) coeff_ = -coeff_;
      mq_ += b * e;
      mt_ += c * e;
      b = -b;
      c = -c;
    }
    add_exponent({b, c}, e);
  }

  Rat coeff_{1};
  int mq_ = 0, mt_ = 0;
  std::map<Key, int> bins_;
};

// Sum-friendly symbolic value: Laurent numerator over a multiset of binomial
// factors. Used by the dimension recursion, where plain num/den pairs blow up
// without gcd but the true denominator divides prod_{s in Lambda}(1-q^{a+1}t^l).
class SymQuotient {
 public:
  using Key = FactoredQT::Key;

  SymQuotient() = default;  // zero
  explicit SymQuotient(LaurentPoly num) : num_(std::move(num)) {}

  static SymQuotient one() { return SymQuotient(LaurentPoly::constant(Rat(1))); }

  const LaurentPoly& num() const { return num_; }
  const std::map<Key, int>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SymQuotient& operator*=(const FactoredQT& f) {
    if (f.is_zero() || num_.is_zero()) return *this = SymQuotient();
    num_ *= LaurentPoly::monomial(f.monomial_q(), f.monomial_t(), f.coefficient());
    for (const auto& [k, e] : f.binomials()) {
      if (e > 0) {
        LaurentPoly b = FactoredQT::binomial_poly(k);
        for (int i = 0; i < e; ++i) num_ *= b;
      } else {
        add_den(k, -e);
      }
    }
    cancel();
    return *this;
  }

  SymQuotient& operator+=(const SymQuotient& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Lift both to the union denominator, then add numerators.
    std::map<Key, int> common = den_;
    for (const auto& [k, e] : o.den_) {
      auto [it, fresh] = common.try_emplace(k, e);
      if (!fresh) it->second = std::max(it->second, e);
    }
    LaurentPoly a = num_, b = o.num_;
    for (const auto& [k, e] : common) {
      LaurentPoly bin = FactoredQT::binomial_poly(k);
      int need_a = e - exponent(den_, k), need_b = e - exponent(o.den_, k);
      for (int i = 0; i < need_a; ++i) a *= bin;
      for (int i = 0; i < need_b; ++i) b *= bin;
    }
    num_ = a + b;
    den_ = std::move(common);
    if (num_.is_zero()) den_.clear();
    cancel();
    return *this;
  }

  RationalFunction to_rational_function() const {
    LaurentPoly den = LaurentPoly::constant(Rat(1));
    for (const auto& [k, e] : den_)
      for (int i = 0; i < e; ++i) den *= FactoredQT::binomial_poly(k);
    return RationalFunction(num_, std::move(den));
  }

  Rat evaluate(const Rat& q, const Rat& t) const {
    Rat out = num_.evaluate(q, t);
    for (const auto& [k, e] : den_) {
      Rat b = Rat(1) - rat_pow(q, k.first) * rat_pow(t, k.second);
      if (b == 0) throw std::domain_error("pole: vanishing denominator factor");
      out /= rat_pow(b, e);
    }
    return out;
  }

  SymQuotient substitute_q_to_t() const {
    SymQuotient out(num_.substitute_q_to_t());
    for (const auto& [k, e] : den_) {
      int p = k.first + k.second;
      if (p == 0) throw std::domain_error("pole: denominator factor vanishes at q=t");
      Key nk = p > 0 ? Key{0, p} : Key{0, -p};
      if (p < 0) {
        // (1-t^p)^e = (-1)^e t^{pe} (1-t^{-p})^e; compensate the numerator.
        out.num_ *= LaurentPoly::monomial(0, -p * e, Rat(e % 2 == 0 ? 1 : -1));
      }
      out.add_den(nk, e);
    }
    out.cancel();
    return out;
  }

 private:
  static int exponent(const std::map<Key, int>& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : it->second;
  }
  void add_den(const Key& k, int e) {
    if (e == 0) return;
    auto [it, fresh] = den_.try_emplace(k, e);
    if (!fresh) it->second += e;
  }
  void cancel() {
    for (auto it = den_.begin(); it != den_.end();) {
      LaurentPoly bin = FactoredQT::binomial_poly(it->first);
      while (it->second > 0) {
        auto q = num_.divided_exactly_by(bin);
        if (!q) break;
        num_ = std::move(*q);
        --it->second;
      }
      it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
  }

  LaurentPoly num_;
  std::map<Key, int> den_;
};

}  // namespace bratteli
