#pragma once

#include <gmpxx.h>

#include <string>

#include "srmt/errors.hpp"

namespace srmt {

/// Arbitrary-precision natural number (non-negative use enforced by callers).
using Nat = mpz_class;
/// Exact rational, always kept in lowest terms with positive denominator.
using Rat = mpq_class;

inline Nat nat_pow(const Nat& base, const Nat& exp) {
  if (sgn(exp) < 0) fail(errc::value_out_of_range, "negative exponent");
  if (exp.fits_ulong_p()) {
    Nat out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return out;
  }
  Nat out = 1, b = base, e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

inline Rat rat_pow(const Rat& base, const Nat& exp) {
  Rat out(nat_pow(base.get_num(), exp), nat_pow(base.get_den(), exp));
  out.canonicalize();
  return out;
}

inline Nat parse_nat(const std::string& text) {
  if (text.empty()) fail(errc::syntax, "empty natural number");
  for (char ch : text)
    if (ch < '0' || ch > '9') fail(errc::syntax, "invalid natural number '" + text + "'");
  return Nat(text);
}

/// Accepts "p/q", "p", and decimal shorthand like "0.3". Result is canonical.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) fail(errc::syntax, "empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Nat num = parse_nat(text.substr(0, slash));
    Nat den = parse_nat(text.substr(slash + 1));
    if (den == 0) fail(errc::syntax, "zero denominator in '" + text + "'");
    Rat out(num, den);
    out.canonicalize();
    return out;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) fail(errc::syntax, "invalid decimal '" + text + "'");
    Nat num = parse_nat(whole + frac);
    Nat den = nat_pow(Nat(10), Nat(frac.size()));
    Rat out(num, den);
    out.canonicalize();
    return out;
  }
  return Rat(parse_nat(text));
}

/// Lowest-terms rendering: "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& value) {
  return value.get_str();
}

}  // namespace srmt
