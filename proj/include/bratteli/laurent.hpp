#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bratteli/rational.hpp"

namespace bratteli {

// Sparse Laurent polynomial in q and t over the rationals. Exponents may be
// negative; zero coefficients are never stored.
class LaurentPoly {
 public:
  struct Exp {
    int q = 0, t = 0;
    friend auto operator<=>(const Exp&, const Exp&) = default;
  };
  using Terms = std::map<Exp, Rat>;

  LaurentPoly() = default;

  static LaurentPoly constant(Rat c) {
    LaurentPoly p;
    if (c != 0) p.terms_[{0, 0}] = std::move(c);
    return p;
  }
  static LaurentPoly monomial(int eq, int et, Rat c = Rat(1)) {
    LaurentPoly p;
    if (c != 0) p.terms_[{eq, et}] = std::move(c);
    return p;
  }
  static LaurentPoly var_q() { return monomial(1, 0); }
  static LaurentPoly var_t() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
  }
  std::size_t term_count() const { return terms_.size(); }

  Rat coefficient(int eq, int et) const {
    auto it = terms_.find({eq, et});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rat& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly shifted(int dq, int dt) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[{e.q + dq, e.t + dt}] = c;
    return out;
  }

  Exp min_exponents() const {
    Exp m{0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) { m = e; first = false; }
      else { m.q = std::min(m.q, e.q); m.t = std::min(m.t, e.t); }
    }
    return m;
  }

  Exp leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
  }
  const Rat& leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
  }

  // gcd of numerators over lcm of denominators; 0 for the zero polynomial.
  Rat content() const {
    if (terms_.empty()) return Rat(0);
    Int g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat out(g, l);
    out.canonicalize();
    return out;
  }

  Rat evaluate(const Rat& q, const Rat& t) const {
    Exp m = min_exponents();
    if ((m.q < 0 && q == 0) || (m.t < 0 && t == 0))
      throw std::domain_error("pole: negative exponent at zero");
    Rat out(0);
    for (const auto& [e, c] : terms_) out += c * rat_pow(q, e.q) * rat_pow(t, e.t);
    return out;
  }

  LaurentPoly substitute_q_to_t() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term({0, e.q + e.t}, c);
    return out;
  }

  // Exact division; nullopt when the divisor does not divide exactly.
  std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("pole: division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    Exp md = d.min_exponents(), mn = min_exponents();
    LaurentPoly den = d.shifted(-md.q, -md.t);
    LaurentPoly rem = shifted(-mn.q, -mn.t);
    LaurentPoly quot;
    const Exp dl = den.leading_exponent();
    const Rat& dc = den.leading_coefficient();
    while (!rem.is_zero()) {
      Exp rl = rem.leading_exponent();
      if (rl.q < dl.q || rl.t < dl.t) return std::nullopt;
      Exp sh{rl.q - dl.q, rl.t - dl.t};
      Rat c = rem.leading_coefficient() / dc;
      quot.add_term(sh, c);
      rem -= den.shifted(sh.q, sh.t) * LaurentPoly::constant(c);
    }
    return quot.shifted(mn.q - md.q, mn.t - md.t);
  }

  std::string to_text(const std::string& vq = "q", const std::string& vt = "t") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      auto var = [&](const std::string& v, int p) {
        if (p == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (p != 1) mono += "^" + std::to_string(p);
      };
      var(vq, e.q);
      var(vt, e.t);
      std::string coeff;
      if (mono.empty()) coeff = fraction_text(c);
      else if (c == 1) coeff = "";
      else if (c == -1) coeff = "-";
      else coeff = fraction_text(c) + "*";
      std::string term = coeff + mono;
      if (out.empty()) out = term;
      else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    }
    return out;
  }

 private:
  static std::string fraction_text(const Rat& c) {
    std::string s = c.get_num().get_str();
    if (c.get_den() != 1) s += "/" + c.get_den().get_str();
    return s;
  }
  void add_term(Exp e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

// 1 + q + ... + q^{n-1} as a polynomial in the q slot.
inline LaurentPoly q_integer_poly(int n) {
  LaurentPoly out;
  for (int k = 0; k < n; ++k) out += LaurentPoly::monomial(k, 0);
  return out;
}

}  // namespace bratteli
