#pragma once

#include <map>
#include <optional>
#include <string>

#include "srmt/semiring.hpp"

namespace srmt {

/// Semiring homomorphism in one of four concrete shapes:
///   Assignment: the unique extension of a variable assignment out of a
///               polynomial semiring (the universal property),
///   VarMap:     variable-to-variable-or-zero substitution between polynomial
///               semirings of the same kind,
///   Threshold:  minmax(n) -> bool, true iff the level reaches the threshold,
///   Identity:   the identity on any semiring.
class Homomorphism {
 public:
  enum class Form { Assignment, VarMap, Threshold, Identity };

  static Homomorphism identity(SemiringTag tag) {
    Homomorphism h(Form::Identity, tag, tag);
    return h;
  }

  /// Exhaustively checks the homomorphism laws for the instantiated carrier
  /// (sampling the carrier once it exceeds 2048 levels).
  static Homomorphism threshold(const SemiringTag& source, unsigned long t) {
    if (source.kind() != Kind::MinMax)
      fail(errc::tag_mismatch, "threshold maps need a minmax source");
    unsigned long n = source.order();
    if (t < 1 || t >= n)
      fail(errc::value_out_of_range,
           "threshold " + std::to_string(t) + " outside 1.." + std::to_string(n - 1));
    Homomorphism h(Form::Threshold, source, SemiringTag::boolean());
    h.threshold_ = t;
    std::vector<unsigned long> levels;
    if (n <= 2048)
      for (unsigned long v = 0; v < n; ++v) levels.push_back(v);
    else
      levels = {0, 1, t - 1, t, t + 1 < n ? t + 1 : t, n - 2, n - 1};
    auto image = [&](unsigned long v) { return v >= t; };
    for (unsigned long a : levels)
      for (unsigned long b : levels) {
        if (image(std::max(a, b)) != (image(a) || image(b)) ||
            image(std::min(a, b)) != (image(a) && image(b)))
          fail(errc::profile_violation, "threshold map is not a homomorphism");
      }
    if (image(0) || !image(n - 1))
      fail(errc::profile_violation, "threshold map does not preserve the units");
    return h;
  }

  static Homomorphism var_map(const SemiringTag& source, const SemiringTag& target,
                              std::map<std::string, std::optional<std::string>> mapping) {
    if (!source.is_polynomial() || source.kind() != target.kind())
      fail(errc::tag_mismatch, "variable maps need matching polynomial kinds");
    for (const auto& name : source.vars().names())
      if (!mapping.count(name))
        fail(errc::config, "variable map misses '" + name + "'");
    for (const auto& [name, image] : mapping) {
      if (!source.vars().contains(name))
        fail(errc::config, "variable map names '" + name + "' outside the source");
      if (image && !target.vars().contains(*image))
        fail(errc::config, "image variable '" + *image + "' outside the target");
    }
    Homomorphism h(Form::VarMap, source, target);
    h.mapping_ = std::move(mapping);
    return h;
  }

  Form form() const { return form_; }
  const SemiringTag& source() const { return source_; }
  const SemiringTag& target() const { return target_; }
  unsigned long threshold_level() const { return threshold_; }
  const std::map<std::string, Value>& assignment() const { return assignment_; }
  const std::map<std::string, std::optional<std::string>>& mapping() const { return mapping_; }

  std::string describe() const {
    switch (form_) {
      case Form::Identity:
        return "id";
      case Form::Threshold:
        return "v -> (v >= " + std::to_string(threshold_) + ")";
      case Form::VarMap: {
        std::string out;
        for (const auto& [name, image] : mapping_) {
          if (!out.empty()) out += ", ";
          out += name + " -> " + (image ? *image : "0");
        }
        return out.empty() ? "empty" : out;
      }
      case Form::Assignment: {
        std::string out;
        for (const auto& [name, value] : assignment_) {
          if (!out.empty()) out += ", ";
          out += name + " -> " + value.str();
        }
        return out.empty() ? "empty" : out;
      }
    }
    return "";
  }

 private:
  friend Homomorphism universal_hom(const SemiringTag&, const SemiringTag&,
                                    const std::map<std::string, Value>&);

  Homomorphism(Form form, SemiringTag source, SemiringTag target)
      : form_(form), source_(std::move(source)), target_(std::move(target)) {}

  Form form_;
  SemiringTag source_;
  SemiringTag target_;
  std::map<std::string, Value> assignment_;
  std::map<std::string, std::optional<std::string>> mapping_;
  unsigned long threshold_ = 0;
};

/// The unique homomorphism out of a polynomial semiring determined by a total
/// variable assignment, available exactly when the target satisfies the laws
/// the polynomial kind is universal for.
inline Homomorphism universal_hom(const SemiringTag& source, const SemiringTag& target,
                                  const std::map<std::string, Value>& e) {
  if (!source.is_polynomial())
    fail(errc::tag_mismatch, source.str() + " is not a polynomial semiring");
  for (const auto& name : source.vars().names())
    if (!e.count(name)) fail(errc::config, "assignment misses variable '" + name + "'");
  for (const auto& [name, value] : e) {
    if (!source.vars().contains(name))
      fail(errc::config, "assignment names '" + name + "' outside the source");
    if (value.tag() != target)
      fail(errc::tag_mismatch, "assignment value for '" + name + "' is not in " + target.str());
  }
  SemiringProfile profile = sr_classify(target);
  bool need_idem = false, need_mult = false, need_absorb = false;
  switch (source.kind()) {
    case Kind::NatPoly: break;
    case Kind::BoolPoly: need_idem = true; break;
    case Kind::WhyPoly: need_idem = need_mult = true; break;
    case Kind::AbsPoly: need_absorb = true; break;
    case Kind::PosBool: need_idem = need_mult = need_absorb = true; break;
    default: break;
  }
  if ((need_idem && !profile.idempotent) || (need_mult && !profile.mult_idempotent) ||
      (need_absorb && !profile.absorptive))
    fail(errc::class_violation,
         target.str() + " lacks the laws " + source.str() + " is universal for");
  Homomorphism h(Homomorphism::Form::Assignment, source, target);
  h.assignment_ = e;
  return h;
}

inline Value apply_hom(const Homomorphism& h, const Value& v) {
  if (v.tag() != h.source())
    fail(errc::tag_mismatch, "value in " + v.tag().str() + ", homomorphism from " +
                                 h.source().str());
  switch (h.form()) {
    case Homomorphism::Form::Identity:
      return v;
    case Homomorphism::Form::Threshold:
      return Value::boolean(v.as_level() >= h.threshold_level());
    case Homomorphism::Form::VarMap: {
      std::vector<std::pair<Monomial, Nat>> raw;
      for (const auto& [mono, coeff] : v.as_poly().terms()) {
        Monomial image;
        bool vanishes = false;
        for (const auto& [name, exp] : mono.exps) {
          const auto& target_var = h.mapping().at(name);
          if (!target_var) {
            vanishes = true;
            break;
          }
          image.exps[*target_var] += exp;
        }
        if (!vanishes) raw.emplace_back(std::move(image), coeff);
      }
      return Value::poly(h.target(),
                         Polynomial::normalized(h.target().kind(), std::move(raw)));
    }
    case Homomorphism::Form::Assignment: {
      Value out = Value::zero(h.target());
      for (const auto& [mono, coeff] : v.as_poly().terms()) {
        Value term = Value::one(h.target());
        for (const auto& [name, exp] : mono.exps)
          term = sr_mul(term, sr_pow(h.assignment().at(name), exp));
        out = sr_add(out, sr_scale(coeff, term));
      }
      return out;
    }
  }
  fail(errc::config, "corrupt homomorphism");
}

}  // namespace srmt
