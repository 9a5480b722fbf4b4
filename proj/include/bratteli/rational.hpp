#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bratteli {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// Always "num/den", including integers ("3/1"), matching the wire format.
inline std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(s));
  r.canonicalize();
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rat(0);
  }
  Rat out;
  unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
  if (e < 0) mpq_inv(out.get_mpq_t(), out.get_mpq_t());
  out.canonicalize();
  return out;
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace bratteli
