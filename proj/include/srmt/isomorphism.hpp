#pragma once

#include <map>
#include <optional>
#include <vector>

#include "srmt/interpretation.hpp"

namespace srmt {

namespace detail {

/// Per-element invariant used to prune candidate pairings: the values of all
/// constant-tuple literals at the element plus how often each value occurs in
/// literals mentioning the element.
inline std::vector<std::pair<Value, Nat>> iso_signature(const KInterpretation& pi,
                                                        const std::string& elem) {
  std::map<Value, Nat> occur;
  std::vector<std::pair<Value, Nat>> out;
  for (const auto& [symbol, arity] : pi.vocab().relations())
    for (bool positive : {true, false}) {
      Literal lit;
      lit.symbol = symbol;
      lit.positive = positive;
      lit.args.assign(arity, elem);
      out.emplace_back(pi.value(lit), 0);
    }
  for (const Literal& lit : lit_enum(pi.vocab(), pi.universe().elements()))
    if (std::find(lit.args.begin(), lit.args.end(), elem) != lit.args.end())
      occur[pi.value(lit)] += 1;
  out.insert(out.end(), occur.begin(), occur.end());
  return out;
}

inline bool iso_extend(const KInterpretation& a, const KInterpretation& b,
                       const std::vector<std::vector<std::pair<Value, Nat>>>& sig_a,
                       const std::vector<std::vector<std::pair<Value, Nat>>>& sig_b,
                       std::size_t next, std::map<std::string, std::string>& partial,
                       std::vector<bool>& used) {
  const auto& elems_a = a.universe().elements();
  const auto& elems_b = b.universe().elements();
  if (next == elems_a.size()) {
    for (const Literal& lit : lit_enum(a.vocab(), elems_a)) {
      Literal image = lit;
      for (auto& arg : image.args) arg = partial.at(arg);
      if (a.value(lit) != b.value(image)) return false;
    }
    return true;
  }
  for (std::size_t j = 0; j < elems_b.size(); ++j) {
    if (used[j] || sig_a[next] != sig_b[j]) continue;
    used[j] = true;
    partial[elems_a[next]] = elems_b[j];
    if (iso_extend(a, b, sig_a, sig_b, next + 1, partial, used)) return true;
    partial.erase(elems_a[next]);
    used[j] = false;
  }
  return false;
}

}  // namespace detail

/// Searches for a bijection between the universes that carries every literal
/// of one interpretation to an equal-valued literal of the other. Returns the
/// first such bijection in backtracking order, or nothing.
inline std::optional<std::map<std::string, std::string>> find_isomorphism(
    const KInterpretation& a, const KInterpretation& b) {
  if (a.tag() != b.tag() || a.vocab() != b.vocab() ||
      a.universe().size() != b.universe().size())
    return std::nullopt;
  std::vector<std::vector<std::pair<Value, Nat>>> sig_a, sig_b;
  for (const auto& e : a.universe().elements()) sig_a.push_back(detail::iso_signature(a, e));
  for (const auto& e : b.universe().elements()) sig_b.push_back(detail::iso_signature(b, e));
  std::map<std::string, std::string> partial;
  std::vector<bool> used(b.universe().size(), false);
  if (detail::iso_extend(a, b, sig_a, sig_b, 0, partial, used)) return partial;
  return std::nullopt;
}

}  // namespace srmt
