#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "srmt/formula.hpp"

namespace srmt {
namespace detail {

enum class TokKind { Ident, Number, LParen, RParen, Comma, Dot, Eq, Neq, Bang, Amp, Pipe, Caret, Star, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex_formula(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({TokKind::Ident, text.substr(start, i - start), start});
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokKind::Number, text.substr(start, i - start), start});
    } else if (ch == '!' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({TokKind::Neq, "!=", start});
      i += 2;
    } else {
      TokKind kind;
      switch (ch) {
        case '(': kind = TokKind::LParen; break;
        case ')': kind = TokKind::RParen; break;
        case ',': kind = TokKind::Comma; break;
        case '.': kind = TokKind::Dot; break;
        case '=': kind = TokKind::Eq; break;
        case '!': kind = TokKind::Bang; break;
        case '&': kind = TokKind::Amp; break;
        case '|': kind = TokKind::Pipe; break;
        case '^': kind = TokKind::Caret; break;
        case '*': kind = TokKind::Star; break;
        default:
          fail(errc::syntax, "unexpected character '" + std::string(1, ch) +
                                 "' at position " + std::to_string(start));
      }
      out.push_back({kind, std::string(1, ch), start});
      ++i;
    }
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : toks_(lex_formula(text)) {}

  FormulaPtr run() {
    FormulaPtr f = quantified();
    expect(TokKind::End, "end of input");
    return canonicalize(f);
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  Token advance() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void bail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == TokKind::End ? "end of input" : "'" + t.text + "'";
    fail(errc::syntax,
         "expected " + expected + " at position " + std::to_string(t.pos) + ", got " + got);
  }

  Token expect(TokKind kind, const std::string& what) {
    if (peek().kind != kind) bail(what);
    return advance();
  }

  bool accept(TokKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  bool at_quantifier() const {
    return peek().kind == TokKind::Ident &&
           (peek().text == "E" || peek().text == "A") &&
           peek(1).kind == TokKind::Ident && peek(2).kind == TokKind::Dot;
  }

  FormulaPtr quantified() {
    if (at_quantifier()) {
      bool is_exists = advance().text == "E";
      std::string var = advance().text;
      advance();  // the dot
      FormulaPtr body = quantified();
      return is_exists ? fml::exists(std::move(var), std::move(body))
                       : fml::forall(std::move(var), std::move(body));
    }
    return or_expr();
  }

  FormulaPtr or_expr() {
    std::vector<FormulaPtr> parts{and_expr()};
    while (accept(TokKind::Pipe)) parts.push_back(and_expr());
    return parts.size() == 1 ? parts.front() : fml::disj(std::move(parts));
  }

  FormulaPtr and_expr() {
    std::vector<FormulaPtr> parts{unary()};
    while (accept(TokKind::Amp)) parts.push_back(unary());
    return parts.size() == 1 ? parts.front() : fml::conj(std::move(parts));
  }

  FormulaPtr unary() {
    if (at_quantifier()) return quantified();
    if (peek().kind == TokKind::Number && peek(1).kind == TokKind::Star) {
      Nat q = parse_nat(advance().text);
      advance();  // the star
      if (q < 1) bail("multiplicity of at least 1");
      return fml::times(std::move(q), unary());
    }
    return postfix();
  }

  FormulaPtr postfix() {
    FormulaPtr f = primary();
    while (accept(TokKind::Caret)) {
      Nat e = parse_nat(expect(TokKind::Number, "exponent").text);
      if (e < 1) bail("exponent of at least 1");
      f = fml::pow(std::move(f), std::move(e));
    }
    return f;
  }

  FormulaPtr primary() {
    if (accept(TokKind::LParen)) {
      FormulaPtr f = quantified();
      expect(TokKind::RParen, "')'");
      return f;
    }
    if (accept(TokKind::Bang)) {
      if (peek().kind != TokKind::Ident || peek(1).kind != TokKind::LParen)
        bail("relation atom after '!'");
      return relation_atom(false);
    }
    if (peek().kind != TokKind::Ident) bail("a formula");
    if (peek(1).kind == TokKind::LParen) return relation_atom(true);
    std::string lhs = advance().text;
    if (accept(TokKind::Eq)) return fml::eq(std::move(lhs), advance_term());
    if (accept(TokKind::Neq)) return fml::neq(std::move(lhs), advance_term());
    bail("'(', '=' or '!=' after '" + lhs + "'");
  }

  std::string advance_term() {
    if (peek().kind != TokKind::Ident) bail("a term");
    return advance().text;
  }

  FormulaPtr relation_atom(bool positive) {
    std::string symbol = advance().text;
    expect(TokKind::LParen, "'('");
    std::vector<std::string> terms{advance_term()};
    while (accept(TokKind::Comma)) terms.push_back(advance_term());
    expect(TokKind::RParen, "')'");
    return fml::lit(std::move(symbol), positive, std::move(terms));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the formula surface syntax and returns the canonical form.
/// Quantifiers "E v." / "A v." reach as far right as possible, "|" binds
/// looser than "&", "!" is only legal before relation atoms, "phi ^ n" and
/// "n * phi" are the exponent and multiplicity shorthands.
inline FormulaPtr parse_formula(const std::string& text) {
  return detail::FormulaParser(text).run();
}

}  // namespace srmt
