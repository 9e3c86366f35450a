#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srmt/homomorphism.hpp"
#include "srmt/interpretation.hpp"
#include "srmt/parser.hpp"

namespace srmt {

/// Exponents f(1), f(2), ... attached to the literals of a min-gap
/// characteristic sentence. They satisfy f(1) = 1 and each f(i+1) is minimal
/// with (1-eps)^f(i+1) < eps^(f(1)+...+f(i)), which makes one missing literal
/// cost more than all over-true literals can recover.
struct ExponentSchedule {
  Rat epsilon;
  std::vector<Nat> exponents;
};

inline ExponentSchedule exponent_schedule(const Rat& eps, std::size_t count,
                                          const Nat& cap = Nat(1000000)) {
  if (sgn(eps) <= 0 || eps > 1)
    fail(errc::value_out_of_range, "epsilon " + rat_str(eps) + " outside (0,1]");
  if (count < 1) fail(errc::config, "schedule needs at least one literal");
  ExponentSchedule out{eps, {Nat(1)}};
  Rat base = Rat(1) - eps;
  Nat sum = 1;
  for (std::size_t i = 1; i < count; ++i) {
    Rat rhs = rat_pow(eps, sum);
    Nat f;
    if (sgn(base) == 0) {
      f = 1;
    } else {
      auto small_enough = [&](const Nat& e) { return rat_pow(base, e) < rhs; };
      Nat hi = 1;
      while (!small_enough(hi)) {
        hi *= 2;
        if (hi > cap)
          fail(errc::cap_exceeded,
               "exponent above " + cap.get_str() + " at literal " + std::to_string(i + 1));
      }
      Nat lo = 1;
      while (lo < hi) {
        Nat mid = (lo + hi) / 2;
        if (small_enough(mid))
          hi = mid;
        else
          lo = mid + 1;
      }
      f = lo;
    }
    sum += f;
    out.exponents.push_back(std::move(f));
  }
  return out;
}

/// Smallest difference between two distinct values of a viterbi value set
/// (1 if fewer than two distinct values are present).
inline Rat min_gap(const std::set<Value>& values) {
  std::vector<Rat> sorted;
  for (const Value& v : values) {
    if (v.tag().kind() != Kind::Viterbi)
      fail(errc::tag_mismatch, "min_gap needs viterbi values");
    sorted.push_back(v.as_rat());
  }
  if (sorted.size() < 2) return Rat(1);
  Rat best = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    Rat d = sorted[i] - sorted[i - 1];
    if (d < best) best = d;
  }
  return best;
}

namespace detail {

inline std::vector<std::string> tuple_vars(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

inline FormulaPtr exists_chain(const std::vector<std::string>& vars, FormulaPtr body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    body = fml::exists(*it, std::move(body));
  return body;
}

inline Nat factorial(std::size_t n) {
  Nat out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= static_cast<unsigned long>(i);
  return out;
}

/// Conjuncts stating that x1..xn enumerate the whole universe.
inline std::vector<FormulaPtr> universe_parts(const std::vector<std::string>& vars) {
  std::vector<FormulaPtr> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      parts.push_back(fml::neq(vars[i], vars[j]));
  std::vector<FormulaPtr> options;
  for (const auto& v : vars) options.push_back(fml::eq("y", v));
  parts.push_back(fml::forall("y", fml::disj(std::move(options))));
  return parts;
}

}  // namespace detail

/// Formula in x1..xn whose value at a tuple is 1 exactly when the tuple is an
/// enumeration of the whole universe without repetition, and 0 otherwise.
inline FormulaPtr universe_formula(std::size_t n) {
  if (n < 1) fail(errc::config, "universe formula needs at least one variable");
  return canonicalize(fml::conj(detail::universe_parts(detail::tuple_vars(n))));
}

/// Classical characteristic sentence of the structure a model-defining
/// Boolean interpretation describes: true on a Boolean interpretation exactly
/// when it is isomorphic to this one.
inline FormulaPtr classical_characteristic(const KInterpretation& pi) {
  if (pi.tag().kind() != Kind::Bool)
    fail(errc::tag_mismatch, "classical characteristic needs a bool interpretation");
  if (!is_model_defining(pi))
    fail(errc::not_model_defining, "classical characteristic needs a model-defining map");
  std::size_t n = pi.universe().size();
  std::vector<std::string> vars = detail::tuple_vars(n);
  std::vector<FormulaPtr> parts = detail::universe_parts(vars);
  for (const Literal& lit : lit_enum(pi.vocab(), vars)) {
    Literal at_elements = lit;
    for (auto& arg : at_elements.args) {
      std::size_t i = std::find(vars.begin(), vars.end(), arg) - vars.begin();
      arg = pi.universe().elements()[i];
    }
    if (!pi.value(at_elements).is_zero())
      parts.push_back(fml::lit(lit.symbol, lit.positive, lit.args));
  }
  return canonicalize(detail::exists_chain(vars, fml::conj(std::move(parts))));
}

/// Characteristic sentence plus its exponent schedule.
struct CharacteristicSentence {
  FormulaPtr sentence;
  ExponentSchedule schedule;
};

/// Min-gap characteristic of a model-defining viterbi interpretation: any
/// model-defining viterbi interpretation of the same universe size whose
/// values differ from this one's by at least eps wherever they differ agrees
/// on the sentence exactly when it is isomorphic to this one.
inline CharacteristicSentence viterbi_characteristic(const KInterpretation& pi, const Rat& eps,
                                                     const Nat& cap = Nat(1000000)) {
  if (pi.tag().kind() != Kind::Viterbi)
    fail(errc::tag_mismatch, "min-gap characteristic needs a viterbi interpretation");
  if (!is_model_defining(pi))
    fail(errc::not_model_defining, "min-gap characteristic needs a model-defining map");
  Rat gap = min_gap(pi.value_image());
  if (eps > gap)
    fail(errc::epsilon_too_large,
         "epsilon " + rat_str(eps) + " exceeds the value gap " + rat_str(gap));
  std::size_t n = pi.universe().size();
  std::vector<std::string> vars = detail::tuple_vars(n);
  std::vector<FormulaPtr> nonzero;
  for (const Literal& lit : lit_enum(pi.vocab(), vars)) {
    Literal at_elements = lit;
    for (auto& arg : at_elements.args) {
      std::size_t i = std::find(vars.begin(), vars.end(), arg) - vars.begin();
      arg = pi.universe().elements()[i];
    }
    if (!pi.value(at_elements).is_zero())
      nonzero.push_back(fml::lit(lit.symbol, lit.positive, lit.args));
  }
  ExponentSchedule schedule = exponent_schedule(eps, nonzero.size(), cap);
  std::vector<FormulaPtr> parts = detail::universe_parts(vars);
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    parts.push_back(fml::pow(nonzero[i], schedule.exponents[i]));
  FormulaPtr sentence =
      canonicalize(detail::exists_chain(vars, fml::conj(std::move(parts))));
  return {std::move(sentence), std::move(schedule)};
}

enum class AxiomKind {
  Classical,
  ViterbiCharacteristic,
  ViterbiAxioms,
  Sorting,
  NatCharacteristic,
  NatXCharacteristic,
};

inline const char* to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::Classical: return "classical";
    case AxiomKind::ViterbiCharacteristic: return "viterbi-characteristic";
    case AxiomKind::ViterbiAxioms: return "viterbi-axioms";
    case AxiomKind::Sorting: return "sorting";
    case AxiomKind::NatCharacteristic: return "nat-characteristic";
    case AxiomKind::NatXCharacteristic: return "natx-characteristic";
  }
  return "unknown";
}

/// A finite list of sentences with the parameters used to build it.
struct AxiomSet {
  AxiomKind kind;
  std::vector<FormulaPtr> sentences;
  std::optional<Rat> epsilon;
  std::vector<Nat> exponents;
  std::optional<Nat> q;
  std::optional<Nat> bound_c;
  std::optional<Nat> bound_n;
  std::optional<Nat> power;
};

/// Sorting axioms over a vocabulary for universe size n: for every relation
/// symbol, polarity and 1 <= i <= n^arity, the sentence whose value is the
/// product of the i largest literal values of that polarity, taken over
/// distinct tuples. Meaningful over additively idempotent semirings, which a
/// supplied guard tag is checked against.
inline AxiomSet sorting_axioms(const Vocabulary& vocab, std::size_t n,
                               const std::optional<SemiringTag>& guard = std::nullopt) {
  if (n < 1) fail(errc::config, "universe size must be at least 1");
  if (guard && !sr_classify(*guard).idempotent)
    fail(errc::profile_violation, guard->str() + " is not additively idempotent");
  AxiomSet out{AxiomKind::Sorting, {}, {}, {}, {}, {}, {}, {}};
  for (const auto& [symbol, arity] : vocab.relations()) {
    std::size_t tuple_count = 1;
    for (unsigned c = 0; c < arity; ++c) tuple_count *= n;
    for (bool positive : {true, false}) {
      for (std::size_t i = 1; i <= tuple_count; ++i) {
        std::vector<std::vector<std::string>> tuples;
        std::vector<std::string> all_vars;
        for (std::size_t j = 1; j <= i; ++j) {
          std::vector<std::string> tuple;
          if (arity == 1) {
            tuple.push_back("x" + std::to_string(j));
          } else {
            for (unsigned c = 1; c <= arity; ++c)
              tuple.push_back("x" + std::to_string(j) + "_" + std::to_string(c));
          }
          all_vars.insert(all_vars.end(), tuple.begin(), tuple.end());
          tuples.push_back(std::move(tuple));
        }
        std::vector<FormulaPtr> parts;
        for (std::size_t j = 0; j < i; ++j)
          for (std::size_t l = j + 1; l < i; ++l) {
            std::vector<FormulaPtr> diffs;
            for (unsigned c = 0; c < arity; ++c)
              diffs.push_back(fml::neq(tuples[j][c], tuples[l][c]));
            parts.push_back(fml::disj(std::move(diffs)));
          }
        for (std::size_t j = 0; j < i; ++j)
          parts.push_back(fml::lit(symbol, positive, tuples[j]));
        out.sentences.push_back(
            canonicalize(detail::exists_chain(all_vars, fml::conj(std::move(parts)))));
      }
    }
  }
  return out;
}

/// Finite axiomatisation of a model-defining viterbi interpretation up to
/// isomorphism within the model-defining viterbi interpretations: the sorting
/// axioms together with the min-gap characteristic at the interpretation's
/// own minimum value gap.
inline AxiomSet viterbi_axiomatisation(const KInterpretation& pi,
                                       const Nat& cap = Nat(1000000)) {
  if (pi.tag().kind() != Kind::Viterbi)
    fail(errc::tag_mismatch, "axiomatisation needs a viterbi interpretation");
  Rat gap = min_gap(pi.value_image());
  CharacteristicSentence chi = viterbi_characteristic(pi, gap, cap);
  AxiomSet out = sorting_axioms(pi.vocab(), pi.universe().size(), pi.tag());
  out.kind = AxiomKind::ViterbiAxioms;
  out.sentences.push_back(chi.sentence);
  out.epsilon = gap;
  out.exponents = chi.schedule.exponents;
  return out;
}

/// Least e with (c/(c-1))^e > k, i.e. c^e > k (c-1)^e; needs c >= 2.
inline Nat nat_exponent(const Nat& c, const Nat& k) {
  if (c < 2) fail(errc::value_out_of_range, "base must be at least 2");
  if (k < 1) fail(errc::value_out_of_range, "count must be at least 1");
  Nat e = 1, ce = c, de = c - 1;
  while (ce <= k * de) {
    ++e;
    ce *= c;
    de *= c - 1;
  }
  return e;
}

/// Radix-weighted characteristic with radix q: in the canonical literal order
/// L_1, ..., L_m the inner disjunction reads off sum q^(i-1) L_i, a base-q
/// numeral of the literal row at a tuple, and the power e makes the sum of
/// n! such numerals injective up to reordering.
struct WeightedCharacteristic {
  FormulaPtr sentence;
  Nat q;
  Nat power;
};

namespace detail {

inline WeightedCharacteristic weighted_characteristic(const Vocabulary& vocab, std::size_t n,
                                                      const Nat& q) {
  std::vector<std::string> vars = tuple_vars(n);
  std::vector<Literal> lits = lit_enum(vocab, vars);
  std::vector<FormulaPtr> weighted;
  Nat weight = 1;
  for (const Literal& lit : lits) {
    weighted.push_back(fml::times(weight, fml::lit(lit.symbol, lit.positive, lit.args)));
    weight *= q;
  }
  Nat c = nat_pow(q, Nat(lits.size()));
  Nat e = nat_exponent(c, factorial(n));
  std::vector<FormulaPtr> parts = universe_parts(vars);
  parts.push_back(fml::disj(std::move(weighted)));
  FormulaPtr body = fml::pow(fml::conj(std::move(parts)), e);
  return {canonicalize(exists_chain(vars, std::move(body))), q, e};
}

}  // namespace detail

/// Characteristic sentence of a natural-valued interpretation with all
/// values below q: two such interpretations of the same universe size agree
/// on it exactly when they are isomorphic.
inline WeightedCharacteristic nat_characteristic(const KInterpretation& pi, const Nat& q) {
  if (pi.tag().kind() != Kind::Nat)
    fail(errc::tag_mismatch, "needs a natural-valued interpretation");
  if (q < 2) fail(errc::value_out_of_range, "radix must be at least 2");
  for (const Value& v : pi.value_image())
    if (v.as_nat() >= q)
      fail(errc::value_out_of_range,
           "value " + v.str() + " not below the radix " + q.get_str());
  return detail::weighted_characteristic(pi.vocab(), pi.universe().size(), q);
}

/// The homomorphism N[X] -> N sending the i-th variable to C^(n^(i-1)). It is
/// injective on polynomials with coefficients below C and exponents below n.
inline Homomorphism natx_embedding(const Nat& C, const Nat& n, const VarSet& vars) {
  if (C < 1 || n < 1) fail(errc::value_out_of_range, "bounds must be at least 1");
  SemiringTag source = SemiringTag::natpoly(vars);
  std::map<std::string, Value> assignment;
  Nat tower = 1;  // n^(i-1), starting at i = 1
  for (const auto& name : vars.names()) {
    assignment.emplace(name, Value::nat(nat_pow(C, tower)));
    tower *= n;
  }
  return universal_hom(source, SemiringTag::nat(), assignment);
}

/// All natpoly values with coefficients below C and per-variable exponents
/// below n, in a fixed order; the domain the embedding is injective on.
inline std::vector<Polynomial> bounded_natpolys(const VarSet& vars, const Nat& C,
                                                const Nat& n,
                                                const Nat& cap = Nat(1000000)) {
  if (C < 1 || n < 1) fail(errc::value_out_of_range, "bounds must be at least 1");
  std::vector<Monomial> monos{Monomial::unit()};
  for (const auto& name : vars.names()) {
    std::vector<Monomial> next;
    for (const Monomial& m : monos)
      for (Nat exp = 0; exp < n; ++exp) {
        Monomial grown = m;
        if (exp > 0) grown.exps[name] = exp;
        next.push_back(std::move(grown));
      }
    monos = std::move(next);
  }
  Nat total = nat_pow(C, Nat(monos.size()));
  if (total > cap)
    fail(errc::cap_exceeded, "bounded set has " + total.get_str() + " elements");
  std::sort(monos.begin(), monos.end());
  std::vector<Polynomial> out;
  std::vector<Nat> coeffs(monos.size(), 0);
  while (true) {
    std::vector<std::pair<Monomial, Nat>> raw;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (coeffs[i] > 0) raw.emplace_back(monos[i], coeffs[i]);
    out.push_back(Polynomial::normalized(Kind::NatPoly, std::move(raw)));
    std::size_t p = 0;
    while (p < coeffs.size() && coeffs[p] + 1 == C) coeffs[p++] = 0;
    if (p == coeffs.size()) break;
    coeffs[p] += 1;
  }
  return out;
}

/// Characteristic sentence of a polynomial-valued interpretation whose values
/// have coefficients below C and exponents below n_exp: the radix-weighted
/// sentence at radix C^(n_exp^|X|), which the variable embedding keeps
/// injective on the bounded value set.
inline WeightedCharacteristic natx_characteristic(const KInterpretation& pi, const Nat& C,
                                                  const Nat& n_exp) {
  if (pi.tag().kind() != Kind::NatPoly)
    fail(errc::tag_mismatch, "needs a natpoly interpretation");
  if (C < 2) fail(errc::value_out_of_range, "coefficient bound must be at least 2");
  if (n_exp < 1) fail(errc::value_out_of_range, "exponent bound must be at least 1");
  for (const Value& v : pi.value_image())
    for (const auto& [mono, coeff] : v.as_poly().terms()) {
      if (coeff >= C)
        fail(errc::value_out_of_range, "coefficient " + coeff.get_str() + " not below " +
                                           C.get_str() + " in " + v.str());
      for (const auto& [name, exp] : mono.exps)
        if (exp >= n_exp)
          fail(errc::value_out_of_range, "exponent " + exp.get_str() + " not below " +
                                             n_exp.get_str() + " in " + v.str());
    }
  Nat radix = nat_pow(C, nat_pow(n_exp, Nat(pi.tag().vars().size())));
  return detail::weighted_characteristic(pi.vocab(), pi.universe().size(), radix);
}

}  // namespace srmt
