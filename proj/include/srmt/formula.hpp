#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "srmt/rational.hpp"

namespace srmt {

/// Connectives of negation normal form plus the two multiplicity shorthands.
enum class FKind { Lit, Eq, Neq, And, Or, Exists, Forall, Pow, Times };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node. Field use by kind:
///   Lit:            symbol (relation), positive, terms (arguments)
///   Eq / Neq:       terms (exactly two)
///   And / Or:       children (at least one)
///   Exists / Forall: symbol (bound variable), children[0]
///   Pow / Times:    children[0], count (exponent resp. multiplicity, >= 1)
struct Formula {
  FKind kind;
  bool positive = true;
  std::string symbol;
  std::vector<std::string> terms;
  std::vector<FormulaPtr> children;
  Nat count = 0;
};

namespace fml {

inline FormulaPtr lit(std::string symbol, bool positive, std::vector<std::string> terms) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Lit;
  f->symbol = std::move(symbol);
  f->positive = positive;
  f->terms = std::move(terms);
  return f;
}

inline FormulaPtr eq(std::string lhs, std::string rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Eq;
  f->terms = {std::move(lhs), std::move(rhs)};
  return f;
}

inline FormulaPtr neq(std::string lhs, std::string rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Neq;
  f->terms = {std::move(lhs), std::move(rhs)};
  return f;
}

inline FormulaPtr conj(std::vector<FormulaPtr> children) {
  if (children.empty()) fail(errc::config, "empty conjunction");
  if (children.size() == 1) return children.front();
  auto f = std::make_shared<Formula>();
  f->kind = FKind::And;
  f->children = std::move(children);
  return f;
}

inline FormulaPtr disj(std::vector<FormulaPtr> children) {
  if (children.empty()) fail(errc::config, "empty disjunction");
  if (children.size() == 1) return children.front();
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Or;
  f->children = std::move(children);
  return f;
}

inline FormulaPtr quantifier(FKind kind, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->symbol = std::move(var);
  f->children = {std::move(body)};
  return f;
}

inline FormulaPtr exists(std::string var, FormulaPtr body) {
  return quantifier(FKind::Exists, std::move(var), std::move(body));
}

inline FormulaPtr forall(std::string var, FormulaPtr body) {
  return quantifier(FKind::Forall, std::move(var), std::move(body));
}

inline FormulaPtr pow(FormulaPtr body, Nat exponent) {
  if (exponent < 1) fail(errc::config, "exponent must be at least 1");
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Pow;
  f->children = {std::move(body)};
  f->count = std::move(exponent);
  return f;
}

inline FormulaPtr times(Nat multiplicity, FormulaPtr body) {
  if (multiplicity < 1) fail(errc::config, "multiplicity must be at least 1");
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Times;
  f->children = {std::move(body)};
  f->count = std::move(multiplicity);
  return f;
}

}  // namespace fml

/// Deterministic total order on formulas; the basis of canonical child order.
inline int formula_cmp(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  auto cmp_str = [](const std::string& x, const std::string& y) {
    return x < y ? -1 : (y < x ? 1 : 0);
  };
  switch (a->kind) {
    case FKind::Lit: {
      if (int c = cmp_str(a->symbol, b->symbol)) return c;
      if (a->positive != b->positive) return a->positive ? -1 : 1;
      if (a->terms != b->terms) return a->terms < b->terms ? -1 : 1;
      return 0;
    }
    case FKind::Eq:
    case FKind::Neq:
      if (a->terms != b->terms) return a->terms < b->terms ? -1 : 1;
      return 0;
    case FKind::And:
    case FKind::Or: {
      std::size_t n = std::min(a->children.size(), b->children.size());
      for (std::size_t i = 0; i < n; ++i)
        if (int c = formula_cmp(a->children[i], b->children[i])) return c;
      if (a->children.size() != b->children.size())
        return a->children.size() < b->children.size() ? -1 : 1;
      return 0;
    }
    case FKind::Exists:
    case FKind::Forall:
      if (int c = cmp_str(a->symbol, b->symbol)) return c;
      return formula_cmp(a->children[0], b->children[0]);
    case FKind::Pow:
    case FKind::Times: {
      if (int c = formula_cmp(a->children[0], b->children[0])) return c;
      return cmp(a->count, b->count);
    }
  }
  return 0;
}

/// Canonical form: associative connectives flattened and sorted, equality
/// operands ordered, trivial exponents and multiplicities dropped, nested
/// exponents combined. Children of And/Or are never deduplicated because
/// multiplicity matters outside idempotent semirings.
inline FormulaPtr canonicalize(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Lit:
      return f;
    case FKind::Eq:
    case FKind::Neq: {
      if (f->terms[0] <= f->terms[1]) return f;
      return f->kind == FKind::Eq ? fml::eq(f->terms[1], f->terms[0])
                                  : fml::neq(f->terms[1], f->terms[0]);
    }
    case FKind::And:
    case FKind::Or: {
      std::vector<FormulaPtr> flat;
      for (const auto& child : f->children) {
        FormulaPtr c = canonicalize(child);
        if (c->kind == f->kind)
          flat.insert(flat.end(), c->children.begin(), c->children.end());
        else
          flat.push_back(std::move(c));
      }
      std::sort(flat.begin(), flat.end(),
                [](const FormulaPtr& x, const FormulaPtr& y) { return formula_cmp(x, y) < 0; });
      return f->kind == FKind::And ? fml::conj(std::move(flat)) : fml::disj(std::move(flat));
    }
    case FKind::Exists:
    case FKind::Forall:
      return fml::quantifier(f->kind, f->symbol, canonicalize(f->children[0]));
    case FKind::Pow: {
      FormulaPtr body = canonicalize(f->children[0]);
      Nat e = f->count;
      if (body->kind == FKind::Pow) {
        e *= body->count;
        body = body->children[0];
      }
      if (e == 1) return body;
      return fml::pow(std::move(body), std::move(e));
    }
    case FKind::Times: {
      FormulaPtr body = canonicalize(f->children[0]);
      Nat q = f->count;
      if (body->kind == FKind::Times) {
        q *= body->count;
        body = body->children[0];
      }
      if (q == 1) return body;
      return fml::times(std::move(q), std::move(body));
    }
  }
  return f;
}

inline unsigned quantifier_rank(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Lit:
    case FKind::Eq:
    case FKind::Neq:
      return 0;
    case FKind::And:
    case FKind::Or: {
      unsigned best = 0;
      for (const auto& c : f->children) best = std::max(best, quantifier_rank(c));
      return best;
    }
    case FKind::Exists:
    case FKind::Forall:
      return 1 + quantifier_rank(f->children[0]);
    case FKind::Pow:
    case FKind::Times:
      return quantifier_rank(f->children[0]);
  }
  return 0;
}

/// Node count, with Pow and Times weighted by their expanded size so that
/// ordering by size agrees with ordering by expanded sentence size.
inline Nat formula_size(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Lit:
    case FKind::Eq:
    case FKind::Neq:
      return 1;
    case FKind::And:
    case FKind::Or: {
      Nat total = 1;
      for (const auto& c : f->children) total += formula_size(c);
      return total;
    }
    case FKind::Exists:
    case FKind::Forall:
      return 1 + formula_size(f->children[0]);
    case FKind::Pow:
    case FKind::Times:
      return 1 + f->count * formula_size(f->children[0]);
  }
  return 1;
}

namespace detail {

inline void free_names_into(const FormulaPtr& f, std::set<std::string>& bound,
                            std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::Lit:
    case FKind::Eq:
    case FKind::Neq:
      for (const auto& t : f->terms)
        if (!bound.count(t)) out.insert(t);
      return;
    case FKind::Exists:
    case FKind::Forall: {
      bool fresh = bound.insert(f->symbol).second;
      free_names_into(f->children[0], bound, out);
      if (fresh) bound.erase(f->symbol);
      return;
    }
    default:
      for (const auto& c : f->children) free_names_into(c, bound, out);
  }
}

}  // namespace detail

/// Names occurring in terms outside the scope of a binder for them. Whether a
/// free name is a variable or a universe element is resolved at evaluation.
inline std::set<std::string> free_names(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  detail::free_names_into(f, bound, out);
  return out;
}

inline std::string print_formula(const FormulaPtr& f) {
  auto wrap = [](const FormulaPtr& child, bool parens) {
    std::string s = print_formula(child);
    return parens ? "(" + s + ")" : s;
  };
  switch (f->kind) {
    case FKind::Lit: {
      std::string out = f->positive ? "" : "!";
      out += f->symbol + "(";
      for (std::size_t i = 0; i < f->terms.size(); ++i) {
        if (i) out += ", ";
        out += f->terms[i];
      }
      return out + ")";
    }
    case FKind::Eq:
      return f->terms[0] + " = " + f->terms[1];
    case FKind::Neq:
      return f->terms[0] + " != " + f->terms[1];
    case FKind::And: {
      std::string out;
      for (std::size_t i = 0; i < f->children.size(); ++i) {
        FKind k = f->children[i]->kind;
        bool parens = k == FKind::And || k == FKind::Or || k == FKind::Exists ||
                      k == FKind::Forall;
        if (i) out += " & ";
        out += wrap(f->children[i], parens);
      }
      return out;
    }
    case FKind::Or: {
      std::string out;
      for (std::size_t i = 0; i < f->children.size(); ++i) {
        FKind k = f->children[i]->kind;
        bool parens = k == FKind::Or || k == FKind::Exists || k == FKind::Forall;
        if (i) out += " | ";
        out += wrap(f->children[i], parens);
      }
      return out;
    }
    case FKind::Exists:
      return "E " + f->symbol + ". " + print_formula(f->children[0]);
    case FKind::Forall:
      return "A " + f->symbol + ". " + print_formula(f->children[0]);
    case FKind::Pow:
      return wrap(f->children[0], f->children[0]->kind != FKind::Lit) + "^" +
             f->count.get_str();
    case FKind::Times: {
      FKind k = f->children[0]->kind;
      bool parens =
          k == FKind::And || k == FKind::Or || k == FKind::Exists || k == FKind::Forall;
      return f->count.get_str() + " * " + wrap(f->children[0], parens);
    }
  }
  return "";
}

}  // namespace srmt
