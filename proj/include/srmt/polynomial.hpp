#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srmt/rational.hpp"
#include "srmt/semiring_tag.hpp"

namespace srmt {

/// Commutative monomial: map from variable name to positive exponent.
/// The unit monomial is the empty map.
struct Monomial {
  std::map<std::string, Nat> exps;

  static Monomial unit() { return Monomial{}; }

  static Monomial var(const std::string& name, Nat exp = 1) {
    Monomial m;
    if (exp < 0) fail(errc::value_out_of_range, "negative exponent");
    if (exp > 0) m.exps[name] = std::move(exp);
    return m;
  }

  bool is_unit() const { return exps.empty(); }

  Nat exponent(const std::string& name) const {
    auto it = exps.find(name);
    return it == exps.end() ? Nat(0) : it->second;
  }

  Nat degree() const {
    Nat total = 0;
    for (const auto& [name, exp] : exps) total += exp;
    return total;
  }

  Monomial times(const Monomial& other) const {
    Monomial out = *this;
    for (const auto& [name, exp] : other.exps) out.exps[name] += exp;
    return out;
  }

  /// Exponents clamped to 1 (the multilinear shadow used by W[X] and PosBool[X]).
  Monomial multilinear() const {
    Monomial out;
    for (const auto& [name, exp] : exps) out.exps[name] = 1;
    return out;
  }

  bool operator==(const Monomial& other) const { return exps == other.exps; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
  bool operator<(const Monomial& other) const { return exps < other.exps; }

  std::string str(const Nat& coeff) const {
    std::string out;
    if (coeff != 1 || exps.empty()) out = coeff.get_str();
    for (const auto& [name, exp] : exps) {
      if (!out.empty()) out += "*";
      out += name;
      if (exp != 1) out += "^" + exp.get_str();
    }
    return out;
  }
};

/// True when m1 divides m2 componentwise, i.e. m1 absorbs m2 in the
/// absorption order (m1 + m1*rest collapses to m1 in absorptive semirings).
inline bool mono_absorbs(const Monomial& m1, const Monomial& m2) {
  for (const auto& [name, exp] : m1.exps)
    if (exp > m2.exponent(name)) return false;
  return true;
}

/// Polynomial over one of the five polynomial semiring kinds, kept in the
/// kind's canonical normal form at all times.
class Polynomial {
 public:
  explicit Polynomial(Kind variant) : variant_(variant) {
    if (!kind_is_polynomial(variant)) fail(errc::config, "not a polynomial kind");
  }

  static Polynomial zero(Kind variant) { return Polynomial(variant); }

  static Polynomial one(Kind variant) {
    return normalized(variant, {{Monomial::unit(), Nat(1)}});
  }

  static Polynomial variable(Kind variant, const std::string& name) {
    return normalized(variant, {{Monomial::var(name), Nat(1)}});
  }

  /// Builds the canonical form of a raw term list under the variant's laws:
  /// merge equal monomials, collapse coefficients to 1 outside N[X], clamp
  /// exponents to 1 for W[X]/PosBool[X], drop absorbed monomials for
  /// S[X]/PosBool[X].
  static Polynomial normalized(Kind variant, std::vector<std::pair<Monomial, Nat>> raw) {
    Polynomial out(variant);
    bool multilinear = variant == Kind::WhyPoly || variant == Kind::PosBool;
    bool unit_coeffs = variant != Kind::NatPoly;
    bool absorb = variant == Kind::AbsPoly || variant == Kind::PosBool;

    for (auto& [mono, coeff] : raw) {
      if (coeff < 0) fail(errc::value_out_of_range, "negative coefficient");
      if (coeff == 0) continue;
      Monomial m = multilinear ? mono.multilinear() : mono;
      out.terms_[std::move(m)] += coeff;
    }
    if (unit_coeffs)
      for (auto& [mono, coeff] : out.terms_) coeff = 1;
    if (absorb) {
      std::vector<Monomial> doomed;
      for (const auto& [mono, coeff] : out.terms_)
        for (const auto& [other, c2] : out.terms_)
          if (!(other == mono) && mono_absorbs(other, mono)) {
            doomed.push_back(mono);
            break;
          }
      for (const auto& mono : doomed) out.terms_.erase(mono);
    }
    return out;
  }

  Kind variant() const { return variant_; }
  const std::map<Monomial, Nat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
  }

  std::set<std::string> variables() const {
    std::set<std::string> out;
    for (const auto& [mono, coeff] : terms_)
      for (const auto& [name, exp] : mono.exps) out.insert(name);
    return out;
  }

  Nat max_degree() const {
    Nat best = 0;
    for (const auto& [mono, coeff] : terms_) {
      Nat d = mono.degree();
      if (d > best) best = d;
    }
    return best;
  }

  Polynomial add(const Polynomial& other) const {
    check_variant(other);
    std::vector<std::pair<Monomial, Nat>> raw(terms_.begin(), terms_.end());
    raw.insert(raw.end(), other.terms_.begin(), other.terms_.end());
    return normalized(variant_, std::move(raw));
  }

  Polynomial mul(const Polynomial& other) const {
    check_variant(other);
    std::vector<std::pair<Monomial, Nat>> raw;
    raw.reserve(terms_.size() * other.terms_.size());
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : other.terms_) raw.emplace_back(m1.times(m2), c1 * c2);
    return normalized(variant_, std::move(raw));
  }

  bool operator==(const Polynomial& other) const {
    return variant_ == other.variant_ && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }
  bool operator<(const Polynomial& other) const {
    if (variant_ != other.variant_) return variant_ < other.variant_;
    return terms_ < other.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
      if (!out.empty()) out += " + ";
      out += mono.str(coeff);
    }
    return out;
  }

  /// Parses "+"-joined terms of "*"-joined factors, each factor a natural
  /// number, a variable, or variable^exponent. "0" and "1" are the constants.
  static Polynomial parse(Kind variant, const std::string& text) {
    std::vector<std::pair<Monomial, Nat>> raw;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_token = [&]() -> std::string {
      skip_ws();
      std::size_t start = pos;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      } else {
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
      }
      if (start == pos) fail(errc::syntax, "expected factor at position " + std::to_string(pos) +
                                              " in polynomial '" + text + "'");
      return text.substr(start, pos - start);
    };

    while (true) {
      Monomial mono;
      Nat coeff = 1;
      while (true) {
        std::string tok = read_token();
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
          coeff *= parse_nat(tok);
        } else {
          Nat exp = 1;
          skip_ws();
          if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = parse_nat(read_token());
            if (exp == 0) fail(errc::syntax, "zero exponent in polynomial '" + text + "'");
          }
          mono.exps[tok] += exp;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          continue;
        }
        break;
      }
      raw.emplace_back(std::move(mono), std::move(coeff));
      skip_ws();
      if (pos < text.size() && text[pos] == '+') {
        ++pos;
        continue;
      }
      break;
    }
    skip_ws();
    if (pos != text.size())
      fail(errc::syntax, "trailing input at position " + std::to_string(pos) +
                             " in polynomial '" + text + "'");
    return normalized(variant, std::move(raw));
  }

 private:
  void check_variant(const Polynomial& other) const {
    if (variant_ != other.variant_) fail(errc::tag_mismatch, "mixed polynomial variants");
  }

  Kind variant_;
  std::map<Monomial, Nat> terms_;
};

}  // namespace srmt
