#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srmt/axioms.hpp"
#include "srmt/enumerate.hpp"
#include "srmt/homomorphism.hpp"
#include "srmt/interpretation.hpp"
#include "srmt/isomorphism.hpp"

namespace srmt {

/// One pair of homomorphisms from a separating set. The left map is applied
/// to the first interpretation, the right map to the second.
struct HomPair {
  Homomorphism left;
  Homomorphism right;
  std::string label;
};

/// Family of homomorphism pairs used to certify elementary equivalence. A set
/// separates a value set when for any two distinct values p, q some pair
/// satisfies left(p) != right(q).
struct SeparatingSet {
  std::vector<HomPair> pairs;
  bool diagonal = false;  // every pair applies one and the same map to both sides
  bool trusted = false;   // user-supplied sets must opt in and pass a finite check
  std::string family;     // provenance label
};

/// True when every ordered pair of distinct values is separated by some pair.
inline bool check_separating(const SeparatingSet& set, const std::vector<Value>& values) {
  for (const Value& p : values)
    for (const Value& q : values) {
      if (p == q) continue;
      bool separated = false;
      for (const HomPair& pair : set.pairs)
        if (apply_hom(pair.left, p) != apply_hom(pair.right, q)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

namespace detail {

inline std::string subset_label(const VarSet& vars, unsigned long mask) {
  std::string label = "Y = {";
  bool first = true;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (mask & (1ul << i)) {
      if (!first) label += ",";
      label += vars.names()[i];
      first = false;
    }
  return label + "}";
}

}  // namespace detail

/// The diagonal family of truth-assignment homomorphisms PosBool[X] -> bool:
/// for every subset Y of X, the map sending the variables of Y to true and
/// the rest to false. Separating for all of PosBool[X].
inline SeparatingSet posbool_family(const VarSet& vars) {
  if (vars.size() >= 20) fail(errc::cap_exceeded, "variable set too large");
  SemiringTag tag = SemiringTag::posbool(vars);
  SeparatingSet out;
  out.diagonal = true;
  out.trusted = true;
  out.family = "posbool";
  for (unsigned long mask = 0; mask < (1ul << vars.size()); ++mask) {
    std::map<std::string, Value> assignment;
    for (std::size_t i = 0; i < vars.size(); ++i)
      assignment.emplace(vars.names()[i], Value::boolean((mask & (1ul << i)) != 0));
    Homomorphism h = universal_hom(tag, SemiringTag::boolean(), assignment);
    out.pairs.push_back({h, h, detail::subset_label(vars, mask)});
  }
  return out;
}

/// The W[X] family induced by a permutation sigma of X: for every subset Y,
/// the pair of the sigma-twisted restriction (each variable of Y goes to the
/// first point of its sigma-orbit that lies in Y again) and the plain
/// restriction. Separating for all of W[X].
inline SeparatingSet why_family(const VarSet& vars,
                                const std::map<std::string, std::string>& sigma) {
  if (vars.size() >= 20) fail(errc::cap_exceeded, "variable set too large");
  for (const auto& name : vars.names())
    if (!sigma.count(name)) fail(errc::config, "permutation misses '" + name + "'");
  std::set<std::string> image;
  for (const auto& [name, to] : sigma) {
    if (!vars.contains(name) || !vars.contains(to))
      fail(errc::config, "permutation leaves the variable set");
    image.insert(to);
  }
  if (image.size() != vars.size() || sigma.size() != vars.size())
    fail(errc::config, "not a permutation of the variable set");

  SemiringTag tag = SemiringTag::whypoly(vars);
  SeparatingSet out;
  out.diagonal = false;
  out.trusted = true;
  out.family = "why";
  for (unsigned long mask = 0; mask < (1ul << vars.size()); ++mask) {
    auto in_mask = [&](const std::string& name) {
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars.names()[i] == name) return (mask & (1ul << i)) != 0;
      return false;
    };
    std::map<std::string, std::optional<std::string>> twisted, plain;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string& name = vars.names()[i];
      if (!in_mask(name)) {
        twisted[name] = std::nullopt;
        plain[name] = std::nullopt;
        continue;
      }
      plain[name] = name;
      std::string walk = sigma.at(name);
      std::size_t steps = 1;
      while (!in_mask(walk)) {
        walk = sigma.at(walk);
        if (++steps > vars.size())
          fail(errc::config, "orbit of '" + name + "' never returns");
      }
      twisted[name] = walk;
    }
    out.pairs.push_back({Homomorphism::var_map(tag, tag, twisted),
                         Homomorphism::var_map(tag, tag, plain),
                         detail::subset_label(vars, mask)});
  }
  return out;
}

/// The diagonal family of all threshold maps minmax(n) -> bool, verified to
/// separate the full carrier.
inline SeparatingSet minmax_threshold_family(unsigned long n) {
  SemiringTag tag = SemiringTag::minmax(n);
  SeparatingSet out;
  out.diagonal = true;
  out.trusted = true;
  out.family = "minmax-threshold";
  for (unsigned long t = 1; t < n; ++t) {
    Homomorphism h = Homomorphism::threshold(tag, t);
    out.pairs.push_back({h, h, "t = " + std::to_string(t)});
  }
  if (n <= 512) {
    std::vector<Value> carrier;
    for (unsigned long v = 0; v < n; ++v) carrier.push_back(Value::level(tag, v));
    if (!check_separating(out, carrier))
      fail(errc::not_separating, "threshold family fails to separate the carrier");
  }
  return out;
}

/// Outcome of an equivalence question. CertifiedEquivalent carries one
/// universe bijection per homomorphism pair; Distinguished carries a sentence
/// with its two unequal values; Unknown carries the bounds that were tried.
struct Verdict {
  enum class Outcome { CertifiedEquivalent, Distinguished, Unknown };

  struct PairEvidence {
    std::string label;
    std::map<std::string, std::string> bijection;
  };

  Outcome outcome = Outcome::Unknown;
  std::vector<PairEvidence> pairs;
  FormulaPtr witness;
  std::optional<Value> value_a;
  std::optional<Value> value_b;
  unsigned long size_bound = 0;
  unsigned qr_bound = 0;
  std::string note;
};

/// Enumerates canonical sentences in ascending size and returns the first on
/// which the two interpretations take different values, or Unknown once the
/// bounds are exhausted.
inline Verdict distinguisher_search(const KInterpretation& a, const KInterpretation& b,
                                    unsigned long size_bound, unsigned qr_bound) {
  if (a.tag() != b.tag()) fail(errc::tag_mismatch, "search needs one shared semiring");
  if (a.vocab() != b.vocab()) fail(errc::config, "search needs one shared vocabulary");
  Verdict out;
  out.size_bound = size_bound;
  out.qr_bound = qr_bound;
  SentenceEnumerator stream(a.vocab(), size_bound, qr_bound);
  stream.for_each([&](const FormulaPtr& f) {
    Value va = evaluate(a, f);
    Value vb = evaluate(b, f);
    if (va != vb) {
      out.outcome = Verdict::Outcome::Distinguished;
      out.witness = f;
      out.value_a = va;
      out.value_b = vb;
      return false;
    }
    return true;
  });
  if (out.outcome == Verdict::Outcome::Unknown)
    out.note = "no distinguishing sentence within the bounds";
  return out;
}

namespace detail {

/// Bool copy of an interpretation whose values all lie in {0, 1} of an
/// additively idempotent semiring, where v -> (v != 0) is a homomorphism.
inline std::optional<KInterpretation> bool_shadow(const KInterpretation& pi) {
  if (pi.tag().kind() == Kind::Bool) return pi;
  Value one = Value::one(pi.tag());
  if (sr_add(one, one) != one) return std::nullopt;
  for (const auto& [lit, value] : pi.nonzero_entries())
    if (value != one) return std::nullopt;
  KInterpretation out(SemiringTag::boolean(), pi.universe(), pi.vocab());
  for (const auto& [lit, value] : pi.nonzero_entries()) out.set(lit, Value::boolean(true));
  return out;
}

/// Closure of the given seed values under + and * up to a size cap.
inline std::vector<Value> value_closure(const SemiringTag& tag, std::set<Value> seed,
                                        std::size_t cap = 256) {
  seed.insert(Value::zero(tag));
  seed.insert(Value::one(tag));
  bool grew = true;
  while (grew && seed.size() < cap) {
    grew = false;
    std::vector<Value> snapshot(seed.begin(), seed.end());
    for (const Value& p : snapshot) {
      for (const Value& q : snapshot) {
        if (seed.size() >= cap) break;
        if (seed.insert(sr_add(p, q)).second) grew = true;
        if (seed.size() >= cap) break;
        if (seed.insert(sr_mul(p, q)).second) grew = true;
      }
      if (seed.size() >= cap) break;
    }
  }
  return {seed.begin(), seed.end()};
}

}  // namespace detail

/// Certifies elementary equivalence through a separating set: maps both
/// interpretations through every pair and finds a universe isomorphism
/// between the images. If some image pair fails and both images are two
/// valued under a diagonal pair, a classical characteristic sentence or a
/// bounded Boolean search lifts the difference to a distinguishing sentence
/// for the originals; otherwise the verdict is Unknown.
inline Verdict certify_equivalence(const KInterpretation& a, const KInterpretation& b,
                                   const SeparatingSet& set,
                                   unsigned long fallback_size_bound = 8,
                                   unsigned fallback_qr_bound = 2) {
  if (a.tag() != b.tag()) fail(errc::tag_mismatch, "certification needs one shared semiring");
  if (a.vocab() != b.vocab()) fail(errc::config, "certification needs one shared vocabulary");
  if (set.pairs.empty()) fail(errc::not_separating, "empty homomorphism set");
  for (const HomPair& pair : set.pairs)
    if (pair.left.source() != a.tag() || pair.right.source() != a.tag())
      fail(errc::tag_mismatch, "homomorphism pair does not start at " + a.tag().str());
  if (!set.trusted)
    fail(errc::not_separating, "set is not marked trusted; cannot certify with it");
  bool built_in = set.family == "posbool" || set.family == "why" ||
                  set.family == "minmax-threshold";
  if (!built_in) {
    std::set<Value> seed = a.value_image();
    for (const Value& v : b.value_image()) seed.insert(v);
    if (!check_separating(set, detail::value_closure(a.tag(), std::move(seed))))
      fail(errc::not_separating, "set fails to separate the achieved value closure");
  }

  Verdict out;
  std::vector<Verdict::PairEvidence> evidence;
  for (const HomPair& pair : set.pairs) {
    KInterpretation img_a = compose_hom(pair.left, a);
    KInterpretation img_b = compose_hom(pair.right, b);
    auto iso = find_isomorphism(img_a, img_b);
    if (iso) {
      evidence.push_back({pair.label, *iso});
      continue;
    }
    out.size_bound = fallback_size_bound;
    out.qr_bound = fallback_qr_bound;
    if (!set.diagonal) {
      out.note = "images under '" + pair.label + "' are not isomorphic";
      return out;
    }
    auto shadow_a = detail::bool_shadow(img_a);
    auto shadow_b = detail::bool_shadow(img_b);
    if (!shadow_a || !shadow_b) {
      out.note = "images under '" + pair.label + "' are not isomorphic and not two-valued";
      return out;
    }
    FormulaPtr candidate;
    if (is_model_defining(*shadow_a) && is_model_defining(*shadow_b)) {
      FormulaPtr chi = classical_characteristic(*shadow_a);
      if (evaluate(*shadow_a, chi) != evaluate(*shadow_b, chi)) candidate = chi;
    }
    if (!candidate) {
      Verdict inner =
          distinguisher_search(*shadow_a, *shadow_b, fallback_size_bound, fallback_qr_bound);
      if (inner.outcome == Verdict::Outcome::Distinguished) candidate = inner.witness;
    }
    if (candidate) {
      Value va = evaluate(a, candidate);
      Value vb = evaluate(b, candidate);
      if (va != vb) {
        out.outcome = Verdict::Outcome::Distinguished;
        out.witness = candidate;
        out.value_a = va;
        out.value_b = vb;
        out.note = "lifted from the images under '" + pair.label + "'";
        return out;
      }
    }
    out.note = "images under '" + pair.label + "' are not isomorphic";
    return out;
  }
  out.outcome = Verdict::Outcome::CertifiedEquivalent;
  out.pairs = std::move(evidence);
  return out;
}

/// Two elementarily equivalent but non-isomorphic interpretations over any
/// fully idempotent semiring, built from two distinct nonzero values r, s:
/// a four-element universe with two unary relations whose literal tables are
/// mutual rotations. Certifiable with the matching separating family.
inline std::pair<KInterpretation, KInterpretation> lattice_counterexample(
    const SemiringTag& tag, const Value& r, const Value& s) {
  SemiringProfile profile = sr_classify(tag);
  if (!profile.idempotent || !profile.mult_idempotent)
    fail(errc::profile_violation, tag.str() + " is not fully idempotent");
  if (r.tag() != tag || s.tag() != tag) fail(errc::tag_mismatch, "values outside " + tag.str());
  if (r.is_zero() || s.is_zero() || r == s)
    fail(errc::degenerate, "needs two distinct nonzero values");

  Universe universe({"a", "b", "c", "d"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  Value zero = Value::zero(tag);
  auto build = [&](const std::vector<std::vector<Value>>& rows) {
    KInterpretation pi(tag, universe, vocab);
    for (std::size_t i = 0; i < 4; ++i) {
      const std::string& e = universe.elements()[i];
      pi.set(Literal{"P", true, {e}}, rows[i][0]);
      pi.set(Literal{"Q", true, {e}}, rows[i][1]);
      pi.set(Literal{"P", false, {e}}, rows[i][2]);
      pi.set(Literal{"Q", false, {e}}, rows[i][3]);
    }
    return pi;
  };
  KInterpretation first = build({{zero, s, r, zero},
                                 {r, zero, zero, s},
                                 {s, r, zero, zero},
                                 {zero, zero, s, r}});
  KInterpretation second = build({{s, zero, zero, r},
                                  {zero, r, s, zero},
                                  {r, s, zero, zero},
                                  {zero, zero, r, s}});
  return {std::move(first), std::move(second)};
}

}  // namespace srmt
