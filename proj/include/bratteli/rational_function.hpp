#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "bratteli/laurent.hpp"

namespace bratteli {

// Quotient of Laurent polynomials. Canonicalization is deliberately cheap
// (monomial shift, content, sign, opportunistic exact division) — no
// multivariate gcd. Equality is decided by cross-multiplication, which is
// exact regardless of representation.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(LaurentPoly::constant(Rat(1))) {}
  RationalFunction(long v) : RationalFunction(LaurentPoly::constant(Rat(v))) {}
  RationalFunction(const Rat& v) : RationalFunction(LaurentPoly::constant(v)) {}
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(Rat(1))) {}
  RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RationalFunction var_q() { return RationalFunction(LaurentPoly::var_q()); }
  static RationalFunction var_t() { return RationalFunction(LaurentPoly::var_t()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("pole: division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  Rat evaluate(const Rat& q, const Rat& t) const {
    Rat d = den_.evaluate(q, t);
    if (d == 0)
      throw std::domain_error("pole: denominator vanishes at q=" + to_fraction_string(q) +
                              ", t=" + to_fraction_string(t));
    return num_.evaluate(q, t) / d;
  }

  RationalFunction substitute_q_to_t() const {
    return RationalFunction(num_.substitute_q_to_t(), den_.substitute_q_to_t());
  }

  std::string to_text(const std::string& vq = "q", const std::string& vt = "t") const {
    if (is_polynomial()) return num_.to_text(vq, vt);
    return "(" + num_.to_text(vq, vt) + ") / (" + den_.to_text(vq, vt) + ")";
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("pole: zero denominator");
    if (num_.is_zero()) { den_ = LaurentPoly::constant(Rat(1)); return; }
    // Shift both parts by the same monomial so the denominator is an honest
    // polynomial touching the origin; the numerator may stay Laurent.
    LaurentPoly::Exp md = den_.min_exponents();
    if (md.q != 0 || md.t != 0) {
      den_ = den_.shifted(-md.q, -md.t);
      num_ = num_.shifted(-md.q, -md.t);
    }
    if (den_.is_constant()) {
      num_ *= Rat(1) / den_.constant_value();
      den_ = LaurentPoly::constant(Rat(1));
      return;
    }
    // Opportunistic exact division keeps branching-weight products small.
    if (den_.term_count() <= 64 && num_.term_count() <= 4096) {
      if (auto q = num_.divided_exactly_by(den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(Rat(1));
        return;
      }
    }
    Rat c = den_.content();
    if (den_.leading_coefficient() < 0) c = -c;
    if (c != 1) {
      Rat inv = Rat(1) / c;
      num_ *= inv;
      den_ *= inv;
    }
  }

  LaurentPoly num_, den_;
};

template <class S>
S power(const S& base, long e) {
  if (e == 0) return S(1);
  if (e < 0) return S(1) / power(base, -e);
  S out(1), b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

template <>
inline Rat power<Rat>(const Rat& base, long e) { return rat_pow(base, e); }

// 1 + q + ... + q^{n-1}, generic in the scalar.
template <class S>
S q_integer(int n, const S& q) {
  S out(0);
  S p(1);
  for (int k = 0; k < n; ++k) {
    out += p;
    p *= q;
  }
  return out;
}

}  // namespace bratteli
