#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "srmt/errors.hpp"
#include "srmt/rational.hpp"

namespace srmt {

/// The ten supported commutative semirings.
enum class Kind {
  Bool,      // ({0,1}, or, and)
  Nat,       // (N, +, *)
  MinMax,    // ({0..n-1}, max, min)
  Viterbi,   // ([0,1] rational, max, *)
  Tropical,  // (Q>=0 with infinity, min, +)
  NatPoly,   // N[X]
  BoolPoly,  // B[X]
  WhyPoly,   // W[X]
  AbsPoly,   // S[X]
  PosBool,   // PosBool[X]
};

inline bool kind_is_polynomial(Kind k) {
  switch (k) {
    case Kind::NatPoly:
    case Kind::BoolPoly:
    case Kind::WhyPoly:
    case Kind::AbsPoly:
    case Kind::PosBool:
      return true;
    default:
      return false;
  }
}

inline bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

/// Finite, ordered set of indeterminate names. Stored sorted and duplicate-free.
class VarSet {
 public:
  VarSet() = default;

  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_)
      if (!is_identifier(n)) fail(errc::config, "invalid variable name '" + n + "'");
    std::sort(names_.begin(), names_.end());
    auto last = std::unique(names_.begin(), names_.end());
    if (last != names_.end()) fail(errc::config, "duplicate variable name");
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  bool contains(const std::string& name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
  }

  bool operator==(const VarSet& other) const { return names_ == other.names_; }
  bool operator!=(const VarSet& other) const { return !(*this == other); }
  bool operator<(const VarSet& other) const { return names_ < other.names_; }

 private:
  std::vector<std::string> names_;
};

/// Identifies one concrete semiring: a kind plus its parameters
/// (the carrier size for min-max, the variable set for polynomial kinds).
class SemiringTag {
 public:
  static SemiringTag boolean() { return SemiringTag(Kind::Bool); }
  static SemiringTag nat() { return SemiringTag(Kind::Nat); }
  static SemiringTag viterbi() { return SemiringTag(Kind::Viterbi); }
  static SemiringTag tropical() { return SemiringTag(Kind::Tropical); }

  static SemiringTag minmax(unsigned long order) {
    if (order < 2) fail(errc::config, "min-max carrier needs at least two elements");
    SemiringTag tag(Kind::MinMax);
    tag.order_ = order;
    return tag;
  }

  static SemiringTag natpoly(VarSet vars) { return poly(Kind::NatPoly, std::move(vars)); }
  static SemiringTag boolpoly(VarSet vars) { return poly(Kind::BoolPoly, std::move(vars)); }
  static SemiringTag whypoly(VarSet vars) { return poly(Kind::WhyPoly, std::move(vars)); }
  static SemiringTag abspoly(VarSet vars) { return poly(Kind::AbsPoly, std::move(vars)); }
  static SemiringTag posbool(VarSet vars) { return poly(Kind::PosBool, std::move(vars)); }

  static SemiringTag poly(Kind kind, VarSet vars) {
    if (!kind_is_polynomial(kind)) fail(errc::config, "not a polynomial semiring kind");
    SemiringTag tag(kind);
    tag.vars_ = std::move(vars);
    return tag;
  }

  Kind kind() const { return kind_; }
  bool is_polynomial() const { return kind_is_polynomial(kind_); }
  unsigned long order() const { return order_; }
  const VarSet& vars() const { return vars_; }

  bool operator==(const SemiringTag& other) const {
    return kind_ == other.kind_ && order_ == other.order_ && vars_ == other.vars_;
  }
  bool operator!=(const SemiringTag& other) const { return !(*this == other); }
  bool operator<(const SemiringTag& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    if (order_ != other.order_) return order_ < other.order_;
    return vars_ < other.vars_;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::Bool: return "bool";
      case Kind::Nat: return "nat";
      case Kind::Viterbi: return "viterbi";
      case Kind::Tropical: return "tropical";
      case Kind::MinMax: return "minmax:" + std::to_string(order_);
      case Kind::NatPoly: return "natpoly:" + joined_vars();
      case Kind::BoolPoly: return "boolpoly:" + joined_vars();
      case Kind::WhyPoly: return "whypoly:" + joined_vars();
      case Kind::AbsPoly: return "abspoly:" + joined_vars();
      case Kind::PosBool: return "posbool:" + joined_vars();
    }
    fail(errc::config, "corrupt semiring tag");
  }

  static SemiringTag parse(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon == std::string::npos ? text.size() : colon);
    std::string rest = colon == std::string::npos ? std::string() : text.substr(colon + 1);
    bool has_param = colon != std::string::npos;

    if (head == "bool" || head == "nat" || head == "viterbi" || head == "tropical") {
      if (has_param) fail(errc::syntax, "'" + head + "' takes no parameter");
      if (head == "bool") return boolean();
      if (head == "nat") return nat();
      if (head == "viterbi") return viterbi();
      return tropical();
    }
    if (head == "minmax") {
      if (!has_param) fail(errc::syntax, "minmax needs a carrier size, e.g. minmax:4");
      Nat order = parse_nat(rest);
      if (!order.fits_ulong_p()) fail(errc::config, "min-max carrier size too large");
      return minmax(order.get_ui());
    }
    Kind kind;
    if (head == "natpoly") kind = Kind::NatPoly;
    else if (head == "boolpoly") kind = Kind::BoolPoly;
    else if (head == "whypoly") kind = Kind::WhyPoly;
    else if (head == "abspoly") kind = Kind::AbsPoly;
    else if (head == "posbool") kind = Kind::PosBool;
    else fail(errc::syntax, "unknown semiring '" + text + "'");
    if (!has_param)
      fail(errc::syntax, "'" + head + "' needs a variable list, e.g. " + head + ":x,y");
    return poly(kind, VarSet(split_vars(rest)));
  }

 private:
  explicit SemiringTag(Kind kind) : kind_(kind) {}

  std::string joined_vars() const {
    std::string out;
    for (const auto& n : vars_.names()) {
      if (!out.empty()) out += ',';
      out += n;
    }
    return out;
  }

  static std::vector<std::string> split_vars(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
      if (ch == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
  }

  Kind kind_;
  unsigned long order_ = 0;
  VarSet vars_;
};

}  // namespace srmt
