#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "srmt/formula.hpp"
#include "srmt/homomorphism.hpp"
#include "srmt/semiring.hpp"

namespace srmt {

/// Relation symbols with their arities. Arities are at least 1.
class Vocabulary {
 public:
  Vocabulary() = default;

  explicit Vocabulary(std::map<std::string, unsigned> relations)
      : relations_(std::move(relations)) {
    for (const auto& [name, arity] : relations_) {
      if (!is_identifier(name)) fail(errc::config, "invalid relation name '" + name + "'");
      if (arity < 1) fail(errc::config, "relation '" + name + "' needs arity at least 1");
    }
  }

  const std::map<std::string, unsigned>& relations() const { return relations_; }

  unsigned arity(const std::string& symbol) const {
    auto it = relations_.find(symbol);
    if (it == relations_.end()) fail(errc::unknown_symbol, "relation '" + symbol + "'");
    return it->second;
  }

  bool contains(const std::string& symbol) const { return relations_.count(symbol) > 0; }

  bool operator==(const Vocabulary& other) const { return relations_ == other.relations_; }
  bool operator!=(const Vocabulary& other) const { return !(*this == other); }

 private:
  std::map<std::string, unsigned> relations_;
};

/// Finite universe with a fixed element order. The list constructor rejects
/// empty lists; an empty universe must be requested through the factory, and
/// quantifiers over it take the monoid identities (exists 0, forall 1).
class Universe {
 public:
  Universe() = default;

  static Universe empty() { return Universe(); }

  explicit Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) fail(errc::config, "empty universe");
    std::set<std::string> seen;
    for (const auto& e : elements_) {
      if (!is_identifier(e)) fail(errc::config, "invalid element name '" + e + "'");
      if (!seen.insert(e).second) fail(errc::config, "duplicate element '" + e + "'");
    }
  }

  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const std::string& e) const {
    return std::find(elements_.begin(), elements_.end(), e) != elements_.end();
  }

  bool operator==(const Universe& other) const { return elements_ == other.elements_; }
  bool operator!=(const Universe& other) const { return !(*this == other); }

 private:
  std::vector<std::string> elements_;
};

/// Instantiated literal: a relation symbol, a polarity, and argument names.
struct Literal {
  std::string symbol;
  bool positive = true;
  std::vector<std::string> args;

  Literal opposite() const { return Literal{symbol, !positive, args}; }

  bool operator==(const Literal& other) const {
    return symbol == other.symbol && positive == other.positive && args == other.args;
  }
  bool operator!=(const Literal& other) const { return !(*this == other); }
  bool operator<(const Literal& other) const {
    if (symbol != other.symbol) return symbol < other.symbol;
    if (positive != other.positive) return positive;
    return args < other.args;
  }

  std::string str() const {
    std::string out = positive ? "" : "!";
    out += symbol + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += args[i];
    }
    return out + ")";
  }

  static Literal parse(const std::string& text) {
    std::size_t i = 0;
    Literal lit;
    if (i < text.size() && text[i] == '!') {
      lit.positive = false;
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '(') ++i;
    lit.symbol = text.substr(start, i - start);
    if (!is_identifier(lit.symbol) || i == text.size())
      fail(errc::syntax, "invalid literal '" + text + "'");
    ++i;
    std::string cur;
    for (; i < text.size(); ++i) {
      char ch = text[i];
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch == ',' || ch == ')') {
        if (!is_identifier(cur)) fail(errc::syntax, "invalid literal '" + text + "'");
        lit.args.push_back(cur);
        cur.clear();
        if (ch == ')') {
          if (i + 1 != text.size()) fail(errc::syntax, "invalid literal '" + text + "'");
          return lit;
        }
      } else {
        cur += ch;
      }
    }
    fail(errc::syntax, "invalid literal '" + text + "'");
  }
};

/// All literals over the given argument names, in canonical order: relation
/// symbols ascending, positive before negative, argument tuples in row-major
/// order of the name list.
inline std::vector<Literal> lit_enum(const Vocabulary& vocab,
                                     const std::vector<std::string>& names) {
  std::vector<Literal> out;
  if (names.empty()) return out;
  for (const auto& [symbol, arity] : vocab.relations()) {
    for (bool positive : {true, false}) {
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        Literal lit;
        lit.symbol = symbol;
        lit.positive = positive;
        for (std::size_t i : idx) lit.args.push_back(names[i]);
        out.push_back(std::move(lit));
        std::size_t p = arity;
        while (p > 0 && idx[p - 1] + 1 == names.size()) idx[--p] = 0;
        if (p == 0) break;
        ++idx[p - 1];
      }
    }
  }
  return out;
}

/// Semiring interpretation: a tag, a universe, a vocabulary, and a total map
/// from instantiated literals to values (absent literals are zero).
class KInterpretation {
 public:
  KInterpretation() = default;

  KInterpretation(SemiringTag tag, Universe universe, Vocabulary vocab)
      : tag_(std::move(tag)), universe_(std::move(universe)), vocab_(std::move(vocab)) {}

  const SemiringTag& tag() const { return tag_; }
  const Universe& universe() const { return universe_; }
  const Vocabulary& vocab() const { return vocab_; }
  const std::map<Literal, Value>& nonzero_entries() const { return table_; }

  void set(const Literal& lit, const Value& value) {
    validate(lit);
    if (value.tag() != tag_)
      fail(errc::tag_mismatch, "value in " + value.tag().str() + " for " + tag_.str());
    if (value.is_zero())
      table_.erase(lit);
    else
      table_.insert_or_assign(lit, value);
  }

  Value value(const Literal& lit) const {
    validate(lit);
    auto it = table_.find(lit);
    return it == table_.end() ? Value::zero(tag_) : it->second;
  }

  /// Every value the literal map takes, including zero if some literal is zero.
  std::set<Value> value_image() const {
    std::set<Value> out;
    for (const Literal& lit : lit_enum(vocab_, universe_.elements())) out.insert(value(lit));
    return out;
  }

  bool operator==(const KInterpretation& other) const {
    return tag_ == other.tag_ && universe_ == other.universe_ && vocab_ == other.vocab_ &&
           table_ == other.table_;
  }
  bool operator!=(const KInterpretation& other) const { return !(*this == other); }

 private:
  void validate(const Literal& lit) const {
    if (vocab_.arity(lit.symbol) != lit.args.size())
      fail(errc::config, "arity mismatch in " + lit.str());
    for (const auto& a : lit.args)
      if (!universe_.contains(a)) fail(errc::config, "unknown element '" + a + "'");
  }

  SemiringTag tag_ = SemiringTag::boolean();
  Universe universe_;
  Vocabulary vocab_;
  std::map<Literal, Value> table_;
};

namespace detail {

inline void validate_against(const FormulaPtr& f, const KInterpretation& pi) {
  if (f->kind == FKind::Lit) {
    if (pi.vocab().arity(f->symbol) != f->terms.size())
      fail(errc::config, "arity mismatch at " + print_formula(f));
    return;
  }
  for (const auto& c : f->children) validate_against(c, pi);
}

class Evaluator {
 public:
  Evaluator(const KInterpretation& pi, std::map<std::string, std::string> env)
      : pi_(pi), env_(std::move(env)) {}

  Value eval(const FormulaPtr& f) {
    switch (f->kind) {
      case FKind::Lit: {
        Literal lit;
        lit.symbol = f->symbol;
        lit.positive = f->positive;
        for (const auto& t : f->terms) lit.args.push_back(resolve(t));
        return pi_.value(lit);
      }
      case FKind::Eq:
        return resolve(f->terms[0]) == resolve(f->terms[1]) ? Value::one(pi_.tag())
                                                            : Value::zero(pi_.tag());
      case FKind::Neq:
        return resolve(f->terms[0]) != resolve(f->terms[1]) ? Value::one(pi_.tag())
                                                            : Value::zero(pi_.tag());
      case FKind::And: {
        Value out = Value::one(pi_.tag());
        for (const auto& c : f->children) {
          out = sr_mul(out, eval(c));
          if (out.is_zero()) break;
        }
        return out;
      }
      case FKind::Or: {
        Value out = Value::zero(pi_.tag());
        for (const auto& c : f->children) out = sr_add(out, eval(c));
        return out;
      }
      case FKind::Exists:
      case FKind::Forall: {
        bool all = f->kind == FKind::Forall;
        Value out = all ? Value::one(pi_.tag()) : Value::zero(pi_.tag());
        auto saved = env_.find(f->symbol) == env_.end()
                         ? std::optional<std::string>()
                         : std::optional<std::string>(env_[f->symbol]);
        for (const auto& elem : pi_.universe().elements()) {
          env_[f->symbol] = elem;
          Value v = eval(f->children[0]);
          out = all ? sr_mul(out, v) : sr_add(out, v);
          if (all && out.is_zero()) break;
        }
        if (saved)
          env_[f->symbol] = *saved;
        else
          env_.erase(f->symbol);
        return out;
      }
      case FKind::Pow:
        return sr_pow(eval(f->children[0]), f->count);
      case FKind::Times:
        return sr_scale(f->count, eval(f->children[0]));
    }
    fail(errc::config, "corrupt formula");
  }

 private:
  const std::string& resolve(const std::string& term) const {
    auto it = env_.find(term);
    if (it != env_.end()) return it->second;
    if (pi_.universe().contains(term)) return term;
    fail(errc::unbound_name, "'" + term + "' is neither bound nor a universe element");
  }

  const KInterpretation& pi_;
  std::map<std::string, std::string> env_;
};

}  // namespace detail

/// Value of a formula under an interpretation and a (possibly empty)
/// assignment of free variables to universe elements. Disjunction and
/// existential quantification sum, conjunction and universal quantification
/// multiply, equalities evaluate to the units.
inline Value evaluate(const KInterpretation& pi, const FormulaPtr& f,
                      const std::map<std::string, std::string>& assignment = {}) {
  detail::validate_against(f, pi);
  for (const auto& [var, elem] : assignment)
    if (!pi.universe().contains(elem))
      fail(errc::config, "assignment sends '" + var + "' outside the universe");
  for (const auto& name : free_names(f))
    if (!assignment.count(name) && !pi.universe().contains(name))
      fail(errc::unbound_name, "'" + name + "' is neither bound nor a universe element");
  return detail::Evaluator(pi, assignment).eval(f);
}

/// True when every opposing literal pair has exactly one zero value.
inline bool is_model_defining(const KInterpretation& pi) {
  for (const Literal& lit : lit_enum(pi.vocab(), pi.universe().elements())) {
    if (!lit.positive) continue;
    if (pi.value(lit).is_zero() == pi.value(lit.opposite()).is_zero()) return false;
  }
  return true;
}

/// The Boolean structure a model-defining interpretation describes.
inline KInterpretation classical_model(const KInterpretation& pi) {
  if (!is_model_defining(pi))
    fail(errc::not_model_defining, "no classical model under a non-model-defining map");
  KInterpretation out(SemiringTag::boolean(), pi.universe(), pi.vocab());
  for (const auto& [lit, value] : pi.nonzero_entries()) out.set(lit, Value::boolean(true));
  return out;
}

/// Literal-wise image of an interpretation under a homomorphism.
inline KInterpretation compose_hom(const Homomorphism& h, const KInterpretation& pi) {
  if (pi.tag() != h.source())
    fail(errc::tag_mismatch, "interpretation in " + pi.tag().str() +
                                 ", homomorphism from " + h.source().str());
  KInterpretation out(h.target(), pi.universe(), pi.vocab());
  for (const auto& [lit, value] : pi.nonzero_entries()) out.set(lit, apply_hom(h, value));
  return out;
}

}  // namespace srmt
