#pragma once

#include <map>
#include <string>
#include <vector>

#include "srmt/interpretation.hpp"
#include "srmt/isomorphism.hpp"

namespace srmt {

/// Values witnessing failure of additive cancellation in an additively
/// idempotent semiring: a absorbs both b and c, multiplication by a merges
/// them, yet b and c differ. Such a triple yields elementarily equivalent,
/// non-isomorphic two-element interpretations.
struct CancellationWitness {
  Value a;
  Value b;
  Value c;
};

inline CancellationWitness verify_witness(const Value& a, const Value& b, const Value& c) {
  check_tags(a, b);
  check_tags(a, c);
  if (!sr_classify(a.tag()).idempotent)
    fail(errc::profile_violation, a.tag().str() + " is not additively idempotent");
  if (a.is_zero() || b.is_zero() || c.is_zero())
    fail(errc::condition_failed, "witness values must be nonzero");
  if (sr_add(a, b) != a)
    fail(errc::condition_failed, "a + b = a fails: " + sr_add(a, b).str() + " != " + a.str());
  if (sr_add(a, c) != a)
    fail(errc::condition_failed, "a + c = a fails: " + sr_add(a, c).str() + " != " + a.str());
  if (sr_mul(a, b) != sr_mul(a, c))
    fail(errc::condition_failed,
         "a*b = a*c fails: " + sr_mul(a, b).str() + " != " + sr_mul(a, c).str());
  if (b == c) fail(errc::condition_failed, "b and c must differ");
  return CancellationWitness{a, b, c};
}

/// The two-element interpretations induced by a cancellation witness: one
/// unary relation R with R(d) = a on both sides and R(e) = b versus R(e) = c.
/// Their non-isomorphism is re-checked before returning.
inline std::pair<KInterpretation, KInterpretation> witness_interpretations(
    const CancellationWitness& w) {
  Universe universe({"d", "e"});
  Vocabulary vocab({{"R", 1}});
  KInterpretation pi_b(w.a.tag(), universe, vocab);
  pi_b.set(Literal{"R", true, {"d"}}, w.a);
  pi_b.set(Literal{"R", true, {"e"}}, w.b);
  KInterpretation pi_c(w.a.tag(), universe, vocab);
  pi_c.set(Literal{"R", true, {"d"}}, w.a);
  pi_c.set(Literal{"R", true, {"e"}}, w.c);
  if (find_isomorphism(pi_b, pi_c))
    fail(errc::degenerate, "witness interpretations are isomorphic");
  return {std::move(pi_b), std::move(pi_c)};
}

/// Result of a tropical perturbation: the perturbed interpretation, the data
/// that produced it, and the evidence that it agrees with the original on
/// every retained sentence while not being isomorphic to it.
struct PerturbationOutcome {
  KInterpretation perturbed;
  std::vector<Literal> finite_literals;  // column order of the linear system
  std::vector<std::string> variables;    // fresh variable attached to each literal
  std::vector<Rat> before;               // v, the original finite values
  std::vector<Rat> after;                // w, the perturbed values
  std::vector<FormulaPtr> retained;      // sentences that constrain the kernel
  std::vector<Polynomial> provenance;    // their values under the variable relabeling
  std::vector<Monomial> argmins;         // the unique h-minimal monomials
  std::vector<FormulaPtr> dropped;       // sentences whose Boolean value is zero
  Rat margin;
  Rat delta;
  Literal differing;                     // first literal whose value moved
};

namespace detail {

/// Kernel basis of an r x l rational matrix via Gauss-Jordan elimination,
/// one vector per free column, in ascending free-column order.
inline std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m,
                                                  std::size_t cols) {
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rat lead = m[row][col];
    for (std::size_t c = 0; c < cols; ++c) m[row][c] /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rat factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> vec(cols, Rat(0));
    vec[fc] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) vec[pivot_col[r]] = -m[r][fc];
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace detail

/// Moves the finite literal values of a tropical interpretation along a
/// rational kernel direction of the sentences' minimal monomials, scaled well
/// below the margin to the next-best monomial. The result takes the same
/// value as the original on every retained sentence but is not isomorphic to
/// it, which is re-verified before returning.
inline PerturbationOutcome tropical_perturbation(const KInterpretation& pi,
                                                 const std::vector<FormulaPtr>& sentences) {
  if (pi.tag().kind() != Kind::Tropical)
    fail(errc::tag_mismatch, "perturbation needs a tropical interpretation");

  PerturbationOutcome out;
  for (const Literal& lit : lit_enum(pi.vocab(), pi.universe().elements())) {
    Value v = pi.value(lit);
    if (v.as_trop().inf) continue;
    out.finite_literals.push_back(lit);
    out.before.push_back(v.as_trop().q);
  }
  std::size_t l = out.finite_literals.size();
  if (l == 0) fail(errc::degenerate, "no finite literal values to perturb");

  unsigned width = 1;
  for (std::size_t q = l; q >= 10; q /= 10) ++width;
  for (std::size_t j = 1; j <= l; ++j) {
    std::string digits = std::to_string(j);
    out.variables.push_back("t" + std::string(width - digits.size(), '0') + digits);
  }
  SemiringTag poly_tag = SemiringTag::boolpoly(VarSet(out.variables));
  KInterpretation relabeled(poly_tag, pi.universe(), pi.vocab());
  std::map<std::string, Rat> value_of;
  for (std::size_t j = 0; j < l; ++j) {
    relabeled.set(out.finite_literals[j],
                  Value::poly(poly_tag, Polynomial::variable(Kind::BoolPoly, out.variables[j])));
    value_of[out.variables[j]] = out.before[j];
  }

  auto height = [&](const Monomial& m) {
    Rat h = 0;
    for (const auto& [name, exp] : m.exps) h += Rat(exp) * value_of.at(name);
    return h;
  };

  out.margin = Rat(0);
  bool have_margin = false;
  Nat maxdeg = 1;
  for (const FormulaPtr& psi : sentences) {
    Value p = evaluate(relabeled, psi);
    if (p.is_zero()) {
      out.dropped.push_back(psi);
      continue;
    }
    const Polynomial& poly = p.as_poly();
    if (poly.max_degree() > maxdeg) maxdeg = poly.max_degree();
    std::vector<const Monomial*> best;
    Rat best_h;
    Rat runner_up;
    bool have_runner_up = false;
    for (const auto& [mono, coeff] : poly.terms()) {
      Rat h = height(mono);
      if (best.empty() || h < best_h) {
        if (!best.empty()) {
          runner_up = best_h;
          have_runner_up = true;
        }
        best.assign(1, &mono);
        best_h = h;
      } else if (h == best_h) {
        best.push_back(&mono);
      } else if (!have_runner_up || h < runner_up) {
        runner_up = h;
        have_runner_up = true;
      }
    }
    if (best.size() != 1)
      fail(errc::degenerate,
           "minimal monomial is not unique for '" + print_formula(psi) + "'");
    if (have_runner_up) {
      Rat gap = runner_up - best_h;
      if (!have_margin || gap < out.margin) {
        out.margin = gap;
        have_margin = true;
      }
    }
    out.retained.push_back(psi);
    out.provenance.push_back(poly);
    out.argmins.push_back(*best.front());
  }
  if (!have_margin) out.margin = 1;
  if (out.retained.size() >= l)
    fail(errc::degenerate, "needs fewer constraining sentences than finite literals");

  std::vector<std::vector<Rat>> matrix;
  for (const Monomial& m : out.argmins) {
    std::vector<Rat> row(l, Rat(0));
    for (std::size_t j = 0; j < l; ++j) row[j] = Rat(m.exponent(out.variables[j]));
    matrix.push_back(std::move(row));
  }
  std::vector<std::vector<Rat>> basis = detail::kernel_basis(std::move(matrix), l);
  for (auto& vec : basis)
    for (const Rat& entry : vec) {
      if (sgn(entry) == 0) continue;
      if (sgn(entry) < 0)
        for (Rat& e : vec) e = -e;
      break;
    }

  for (const auto& base_dir : basis) {
    for (int sign : {1, -1}) {
      std::vector<Rat> dir = base_dir;
      for (Rat& d : dir) d *= sign;
      bool feasible = true;
      Rat inf_norm = 0;
      for (std::size_t j = 0; j < l; ++j) {
        if (sgn(dir[j]) < 0 && sgn(out.before[j]) == 0) feasible = false;
        Rat mag = abs(dir[j]);
        if (mag > inf_norm) inf_norm = mag;
      }
      if (!feasible || sgn(inf_norm) == 0) continue;

      Rat delta = out.margin / (Rat(2) * Rat(maxdeg) * inf_norm);
      for (int tries = 0; tries < 512; ++tries) {
        bool positive = true;
        for (std::size_t j = 0; j < l; ++j) {
          if (sgn(dir[j]) == 0) continue;
          if (sgn(out.before[j] + delta * dir[j]) <= 0) {
            positive = false;
            break;
          }
        }
        if (positive) break;
        delta /= 2;
      }

      std::vector<Rat> after;
      KInterpretation perturbed = pi;
      bool ok = true;
      for (std::size_t j = 0; j < l; ++j) {
        Rat w = out.before[j] + delta * dir[j];
        if (sgn(w) < 0 || (sgn(w) == 0 && sgn(dir[j]) != 0)) {
          ok = false;
          break;
        }
        after.push_back(w);
        perturbed.set(out.finite_literals[j], Value::tropical(w));
      }
      if (!ok) continue;
      for (const FormulaPtr& psi : out.retained)
        if (evaluate(pi, psi) != evaluate(perturbed, psi))
          fail(errc::degenerate,
               "perturbation failed to preserve '" + print_formula(psi) + "'");
      if (find_isomorphism(pi, perturbed)) continue;

      out.after = std::move(after);
      out.delta = delta;
      for (std::size_t j = 0; j < l; ++j)
        if (out.after[j] != out.before[j]) {
          out.differing = out.finite_literals[j];
          break;
        }
      out.perturbed = std::move(perturbed);
      return out;
    }
  }
  fail(errc::degenerate, "no kernel direction yields a usable perturbation");
}

}  // namespace srmt
