#pragma once

#include <map>
#include <random>
#include <string>
#include <variant>

#include "srmt/polynomial.hpp"
#include "srmt/rational.hpp"
#include "srmt/semiring_tag.hpp"

namespace srmt {

/// Tropical carrier element: a non-negative rational or infinity.
struct Trop {
  bool inf = false;
  Rat q = 0;

  static Trop infinity() { return Trop{true, Rat(0)}; }
  static Trop finite(Rat value) { return Trop{false, std::move(value)}; }

  bool operator==(const Trop& other) const {
    return inf == other.inf && (inf || q == other.q);
  }
  bool operator!=(const Trop& other) const { return !(*this == other); }
  bool operator<(const Trop& other) const {
    if (inf != other.inf) return !inf;
    return !inf && q < other.q;
  }
};

/// One element of one concrete semiring. Values carry their tag; all
/// operations demand matching tags and validate carrier membership.
class Value {
 public:
  static Value boolean(bool b) { return Value(SemiringTag::boolean(), b); }

  static Value nat(Nat n) {
    if (sgn(n) < 0) fail(errc::value_out_of_range, "negative natural");
    return Value(SemiringTag::nat(), std::move(n));
  }

  static Value level(const SemiringTag& tag, unsigned long v) {
    if (tag.kind() != Kind::MinMax) fail(errc::tag_mismatch, "level needs a minmax tag");
    if (v >= tag.order())
      fail(errc::value_out_of_range,
           "level " + std::to_string(v) + " outside " + tag.str());
    return Value(tag, v);
  }

  static Value viterbi(Rat q) {
    if (sgn(q) < 0 || q > 1)
      fail(errc::value_out_of_range, "viterbi value " + rat_str(q) + " outside [0,1]");
    return Value(SemiringTag::viterbi(), std::move(q));
  }

  static Value tropical(Rat q) {
    if (sgn(q) < 0)
      fail(errc::value_out_of_range, "tropical value " + rat_str(q) + " is negative");
    return Value(SemiringTag::tropical(), Trop::finite(std::move(q)));
  }

  static Value tropical_inf() { return Value(SemiringTag::tropical(), Trop::infinity()); }

  static Value poly(const SemiringTag& tag, Polynomial p) {
    if (!tag.is_polynomial() || tag.kind() != p.variant())
      fail(errc::tag_mismatch, "polynomial variant does not match " + tag.str());
    for (const auto& name : p.variables())
      if (!tag.vars().contains(name))
        fail(errc::value_out_of_range, "variable '" + name + "' outside " + tag.str());
    return Value(tag, std::move(p));
  }

  static Value zero(const SemiringTag& tag) {
    switch (tag.kind()) {
      case Kind::Bool: return boolean(false);
      case Kind::Nat: return nat(0);
      case Kind::MinMax: return level(tag, 0);
      case Kind::Viterbi: return viterbi(0);
      case Kind::Tropical: return tropical_inf();
      default: return poly(tag, Polynomial::zero(tag.kind()));
    }
  }

  static Value one(const SemiringTag& tag) {
    switch (tag.kind()) {
      case Kind::Bool: return boolean(true);
      case Kind::Nat: return nat(1);
      case Kind::MinMax: return level(tag, tag.order() - 1);
      case Kind::Viterbi: return viterbi(1);
      case Kind::Tropical: return tropical(0);
      default: return poly(tag, Polynomial::one(tag.kind()));
    }
  }

  const SemiringTag& tag() const { return tag_; }

  bool as_bool() const { return std::get<bool>(payload_); }
  const Nat& as_nat() const { return std::get<Nat>(payload_); }
  unsigned long as_level() const { return std::get<unsigned long>(payload_); }
  const Rat& as_rat() const { return std::get<Rat>(payload_); }
  const Trop& as_trop() const { return std::get<Trop>(payload_); }
  const Polynomial& as_poly() const { return std::get<Polynomial>(payload_); }

  bool is_zero() const { return *this == zero(tag_); }
  bool is_one() const { return *this == one(tag_); }

  bool operator==(const Value& other) const {
    return tag_ == other.tag_ && payload_ == other.payload_;
  }
  bool operator!=(const Value& other) const { return !(*this == other); }
  bool operator<(const Value& other) const {
    if (tag_ != other.tag_) return tag_ < other.tag_;
    return payload_ < other.payload_;
  }

  std::string str() const {
    switch (tag_.kind()) {
      case Kind::Bool: return as_bool() ? "true" : "false";
      case Kind::Nat: return as_nat().get_str();
      case Kind::MinMax: return std::to_string(as_level());
      case Kind::Viterbi: return rat_str(as_rat());
      case Kind::Tropical: return as_trop().inf ? "inf" : rat_str(as_trop().q);
      default: return as_poly().str();
    }
  }

  static Value parse(const SemiringTag& tag, const std::string& text) {
    switch (tag.kind()) {
      case Kind::Bool:
        if (text == "true") return boolean(true);
        if (text == "false") return boolean(false);
        fail(errc::syntax, "expected true or false, got '" + text + "'");
      case Kind::Nat:
        return nat(parse_nat(text));
      case Kind::MinMax: {
        Nat v = parse_nat(text);
        if (!v.fits_ulong_p()) fail(errc::value_out_of_range, "level too large");
        return level(tag, v.get_ui());
      }
      case Kind::Viterbi:
        return viterbi(parse_rational(text));
      case Kind::Tropical:
        if (text == "inf") return tropical_inf();
        return tropical(parse_rational(text));
      default:
        return poly(tag, Polynomial::parse(tag.kind(), text));
    }
  }

 private:
  template <class Payload>
  Value(SemiringTag tag, Payload payload)
      : tag_(std::move(tag)), payload_(std::move(payload)) {}

  SemiringTag tag_;
  std::variant<bool, Nat, unsigned long, Rat, Trop, Polynomial> payload_;
};

inline void check_tags(const Value& a, const Value& b) {
  if (a.tag() != b.tag())
    fail(errc::tag_mismatch, a.tag().str() + " vs " + b.tag().str());
}

inline Value sr_add(const Value& a, const Value& b) {
  check_tags(a, b);
  const SemiringTag& tag = a.tag();
  switch (tag.kind()) {
    case Kind::Bool: return Value::boolean(a.as_bool() || b.as_bool());
    case Kind::Nat: return Value::nat(a.as_nat() + b.as_nat());
    case Kind::MinMax: return Value::level(tag, std::max(a.as_level(), b.as_level()));
    case Kind::Viterbi: return Value::viterbi(std::max(a.as_rat(), b.as_rat()));
    case Kind::Tropical: {
      const Trop& x = a.as_trop();
      const Trop& y = b.as_trop();
      if (x.inf) return b;
      if (y.inf) return a;
      return Value::tropical(std::min(x.q, y.q));
    }
    default: return Value::poly(tag, a.as_poly().add(b.as_poly()));
  }
}

inline Value sr_mul(const Value& a, const Value& b) {
  check_tags(a, b);
  const SemiringTag& tag = a.tag();
  switch (tag.kind()) {
    case Kind::Bool: return Value::boolean(a.as_bool() && b.as_bool());
    case Kind::Nat: return Value::nat(a.as_nat() * b.as_nat());
    case Kind::MinMax: return Value::level(tag, std::min(a.as_level(), b.as_level()));
    case Kind::Viterbi: return Value::viterbi(a.as_rat() * b.as_rat());
    case Kind::Tropical: {
      const Trop& x = a.as_trop();
      const Trop& y = b.as_trop();
      if (x.inf || y.inf) return Value::tropical_inf();
      return Value::tropical(x.q + y.q);
    }
    default: return Value::poly(tag, a.as_poly().mul(b.as_poly()));
  }
}

/// a^e by repeated squaring; e = 0 yields the multiplicative unit.
inline Value sr_pow(const Value& a, Nat e) {
  if (sgn(e) < 0) fail(errc::value_out_of_range, "negative exponent");
  Value out = Value::one(a.tag());
  Value base = a;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) out = sr_mul(out, base);
    if ((e >>= 1) > 0) base = sr_mul(base, base);
  }
  return out;
}

/// q-fold sum by doubling; q = 0 yields the additive unit.
inline Value sr_scale(Nat q, const Value& a) {
  if (sgn(q) < 0) fail(errc::value_out_of_range, "negative multiplicity");
  Value out = Value::zero(a.tag());
  Value base = a;
  while (q > 0) {
    if (mpz_odd_p(q.get_mpz_t())) out = sr_add(out, base);
    if ((q >>= 1) > 0) base = sr_add(base, base);
  }
  return out;
}

/// Deterministic sample from the carrier, used by law checks and tests.
inline Value random_value(const SemiringTag& tag, std::mt19937_64& rng) {
  auto draw = [&](unsigned long bound) { return rng() % bound; };
  switch (tag.kind()) {
    case Kind::Bool:
      return Value::boolean(draw(2) == 1);
    case Kind::Nat:
      return Value::nat(Nat(draw(13)));
    case Kind::MinMax:
      return Value::level(tag, draw(tag.order()));
    case Kind::Viterbi: {
      unsigned long den = 1 + draw(16);
      unsigned long num = draw(den + 1);
      Rat q{Nat(num), Nat(den)};
      q.canonicalize();
      return Value::viterbi(q);
    }
    case Kind::Tropical: {
      if (draw(8) == 0) return Value::tropical_inf();
      unsigned long den = 1 + draw(16);
      unsigned long num = draw(4 * den);
      Rat q{Nat(num), Nat(den)};
      q.canonicalize();
      return Value::tropical(q);
    }
    default: {
      std::vector<std::pair<Monomial, Nat>> raw;
      unsigned long terms = draw(4);
      for (unsigned long t = 0; t < terms; ++t) {
        Monomial m;
        for (const auto& name : tag.vars().names()) {
          unsigned long exp = draw(3);
          if (exp > 0) m.exps[name] = Nat(exp);
        }
        raw.emplace_back(std::move(m), Nat(1 + draw(3)));
      }
      return Value::poly(tag, Polynomial::normalized(tag.kind(), std::move(raw)));
    }
  }
}

/// Equational laws a semiring may satisfy beyond the semiring axioms.
struct SemiringProfile {
  bool idempotent = false;       // a + a = a
  bool mult_idempotent = false;  // a * a = a
  bool fully_idempotent = false; // both of the above
  bool absorptive = false;       // a + a*b = a (implies idempotent)
};

namespace detail {

inline void verify_laws(const SemiringTag& tag, const SemiringProfile& p,
                        const std::vector<Value>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Value& a = samples[i];
    const Value& b = samples[(i + 1) % samples.size()];
    if (p.idempotent && sr_add(a, a) != a)
      fail(errc::profile_violation, tag.str() + " is not additively idempotent at " + a.str());
    if (p.mult_idempotent && sr_mul(a, a) != a)
      fail(errc::profile_violation,
           tag.str() + " is not multiplicatively idempotent at " + a.str());
    if (p.absorptive && sr_add(a, sr_mul(a, b)) != a)
      fail(errc::profile_violation,
           tag.str() + " is not absorptive at " + a.str() + ", " + b.str());
  }
}

}  // namespace detail

/// Profile of a tag. Finite carriers are checked exhaustively; infinite ones
/// carry declared profiles that are re-verified on at least 100 samples.
inline SemiringProfile sr_classify(const SemiringTag& tag) {
  static std::map<SemiringTag, SemiringProfile> cache;
  auto hit = cache.find(tag);
  if (hit != cache.end()) return hit->second;

  SemiringProfile p;
  switch (tag.kind()) {
    case Kind::Bool:
    case Kind::MinMax: {
      p = {true, true, true, true};
      std::vector<Value> carrier;
      if (tag.kind() == Kind::Bool) {
        carrier = {Value::boolean(false), Value::boolean(true)};
      } else {
        unsigned long n = tag.order();
        if (n <= 512) {
          for (unsigned long v = 0; v < n; ++v) carrier.push_back(Value::level(tag, v));
        } else {
          for (unsigned long v = 0; v < 256; ++v) carrier.push_back(Value::level(tag, v));
          carrier.push_back(Value::level(tag, n - 2));
          carrier.push_back(Value::level(tag, n - 1));
        }
      }
      for (const Value& a : carrier) {
        if (sr_add(a, a) != a || sr_mul(a, a) != a)
          fail(errc::profile_violation, tag.str() + " idempotence failed at " + a.str());
        for (const Value& b : carrier)
          if (sr_add(a, sr_mul(a, b)) != a)
            fail(errc::profile_violation, tag.str() + " absorption failed at " + a.str());
      }
      break;
    }
    case Kind::Nat:
    case Kind::NatPoly:
      p = {false, false, false, false};
      break;
    case Kind::Viterbi:
    case Kind::Tropical:
    case Kind::AbsPoly:
      p = {true, false, false, true};
      break;
    case Kind::BoolPoly:
    case Kind::WhyPoly:
      p = {true, false, false, false};
      break;
    case Kind::PosBool:
      p = {true, true, true, true};
      break;
  }
  if (tag.kind() != Kind::Bool && tag.kind() != Kind::MinMax) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<Value> samples;
    for (int i = 0; i < 128; ++i) samples.push_back(random_value(tag, rng));
    detail::verify_laws(tag, p, samples);
  }
  cache.emplace(tag, p);
  return p;
}

}  // namespace srmt
