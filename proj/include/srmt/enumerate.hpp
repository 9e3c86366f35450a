#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "srmt/formula.hpp"
#include "srmt/interpretation.hpp"

namespace srmt {

/// Streams every canonical sentence over a vocabulary up to a size bound and
/// a quantifier rank bound, in ascending size and a fixed deterministic order
/// within each size. Canonical means: flattened sorted connectives, ordered
/// equality operands, no exponent or multiplicity shorthands, and the bound
/// variable at nesting depth d is always the d-th pool name, so no sentence
/// appears twice up to renaming of bound variables.
class SentenceEnumerator {
 public:
  SentenceEnumerator(Vocabulary vocab, unsigned long size_bound, unsigned qr_bound)
      : vocab_(std::move(vocab)), size_bound_(size_bound), qr_bound_(qr_bound) {
    unsigned width = 1;
    for (unsigned q = qr_bound_; q >= 10; q /= 10) ++width;
    for (unsigned i = 1; i <= qr_bound_; ++i) {
      std::string digits = std::to_string(i);
      pool_.push_back("x" + std::string(width - digits.size(), '0') + digits);
    }
  }

  const std::vector<std::string>& pool() const { return pool_; }

  /// Calls visit on each sentence; stop early by returning false from visit.
  template <class Visit>
  void for_each(Visit&& visit) {
    for (unsigned long s = 1; s <= size_bound_; ++s)
      for (const FormulaPtr& f : cell(0, s))
        if (!visit(f)) return;
  }

  std::size_t count() {
    std::size_t total = 0;
    for_each([&](const FormulaPtr&) {
      ++total;
      return true;
    });
    return total;
  }

 private:
  const std::vector<FormulaPtr>& cell(unsigned depth, unsigned long size) {
    auto key = std::make_pair(depth, size);
    auto hit = cells_.find(key);
    if (hit != cells_.end()) return hit->second;

    std::vector<FormulaPtr> out;
    if (size == 1) {
      atoms(depth, out);
    } else {
      if (depth < qr_bound_)
        for (FKind k : {FKind::Exists, FKind::Forall})
          for (const FormulaPtr& body : cell(depth + 1, size - 1))
            out.push_back(fml::quantifier(k, pool_[depth], body));
      if (size >= 3)
        for (FKind k : {FKind::And, FKind::Or}) {
          std::vector<FormulaPtr> chosen;
          compose(k, depth, size - 1, 1, 0, chosen, out);
        }
    }
    return cells_.emplace(std::move(key), std::move(out)).first->second;
  }

  void atoms(unsigned depth, std::vector<FormulaPtr>& out) {
    std::vector<std::string> vars(pool_.begin(), pool_.begin() + depth);
    if (vars.empty()) return;
    for (const Literal& lit : lit_enum(vocab_, vars))
      out.push_back(fml::lit(lit.symbol, lit.positive, lit.args));
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i; j < vars.size(); ++j) out.push_back(fml::eq(vars[i], vars[j]));
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i; j < vars.size(); ++j) out.push_back(fml::neq(vars[i], vars[j]));
  }

  /// Children of an And/Or node as non-decreasing (size, cell index)
  /// sequences, so each multiset of children is produced exactly once.
  void compose(FKind k, unsigned depth, unsigned long remaining, unsigned long min_size,
               std::size_t min_index, std::vector<FormulaPtr>& chosen,
               std::vector<FormulaPtr>& out) {
    for (unsigned long sz = min_size; sz <= remaining; ++sz) {
      const auto& pick = cell(depth, sz);
      for (std::size_t idx = sz == min_size ? min_index : 0; idx < pick.size(); ++idx) {
        if (pick[idx]->kind == k) continue;
        chosen.push_back(pick[idx]);
        unsigned long left = remaining - sz;
        if (left == 0 && chosen.size() >= 2) {
          std::vector<FormulaPtr> children = chosen;
          std::sort(children.begin(), children.end(), [](const FormulaPtr& x, const FormulaPtr& y) {
            return formula_cmp(x, y) < 0;
          });
          out.push_back(k == FKind::And ? fml::conj(std::move(children))
                                        : fml::disj(std::move(children)));
        } else if (left >= 1) {
          compose(k, depth, left, sz, idx, chosen, out);
        }
        chosen.pop_back();
      }
    }
  }

  Vocabulary vocab_;
  unsigned long size_bound_;
  unsigned qr_bound_;
  std::vector<std::string> pool_;
  std::map<std::pair<unsigned, unsigned long>, std::vector<FormulaPtr>> cells_;
};

}  // namespace srmt
