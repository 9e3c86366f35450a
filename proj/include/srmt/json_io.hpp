#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "srmt/attacks.hpp"
#include "srmt/axioms.hpp"
#include "srmt/equivalence.hpp"
#include "srmt/interpretation.hpp"

namespace srmt {

using Json = nlohmann::json;

inline Json interpretation_to_json(const KInterpretation& pi) {
  Json out;
  out["semiring"] = pi.tag().str();
  out["universe"] = pi.universe().elements();
  Json relations = Json::object();
  for (const auto& [name, arity] : pi.vocab().relations()) relations[name] = arity;
  out["relations"] = relations;
  Json table = Json::array();
  for (const auto& [lit, value] : pi.nonzero_entries())
    table.push_back(Json{{"lit", lit.str()}, {"value", value.str()}});
  out["table"] = table;
  return out;
}

inline KInterpretation interpretation_from_json(const Json& doc) {
  if (!doc.is_object()) fail(errc::config, "interpretation document must be an object");
  for (const char* field : {"semiring", "universe", "relations", "table"})
    if (!doc.contains(field))
      fail(errc::config, std::string("interpretation document misses '") + field + "'");
  SemiringTag tag = SemiringTag::parse(doc["semiring"].get<std::string>());
  if (!doc["universe"].is_array()) fail(errc::config, "'universe' must be an array");
  auto elements = doc["universe"].get<std::vector<std::string>>();
  Universe universe = elements.empty() ? Universe::empty() : Universe(std::move(elements));
  if (!doc["relations"].is_object()) fail(errc::config, "'relations' must be an object");
  std::map<std::string, unsigned> relations;
  for (const auto& [name, arity] : doc["relations"].items()) {
    if (!arity.is_number_unsigned()) fail(errc::config, "arity of '" + name + "' must be a natural");
    relations[name] = arity.get<unsigned>();
  }
  Vocabulary vocab(std::move(relations));
  KInterpretation pi(tag, std::move(universe), std::move(vocab));
  if (!doc["table"].is_array()) fail(errc::config, "'table' must be an array");
  for (const auto& entry : doc["table"]) {
    if (!entry.is_object() || !entry.contains("lit") || !entry.contains("value"))
      fail(errc::config, "table entries need 'lit' and 'value'");
    pi.set(Literal::parse(entry["lit"].get<std::string>()),
           Value::parse(tag, entry["value"].get<std::string>()));
  }
  return pi;
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::config, "cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(errc::syntax, "invalid JSON in '" + path + "': " + e.what());
  }
  return doc;
}

inline KInterpretation load_interpretation(const std::string& path) {
  return interpretation_from_json(load_json(path));
}

inline void save_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) fail(errc::config, "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

inline Json verdict_to_json(const Verdict& verdict) {
  Json out;
  switch (verdict.outcome) {
    case Verdict::Outcome::CertifiedEquivalent: out["outcome"] = "certified"; break;
    case Verdict::Outcome::Distinguished: out["outcome"] = "distinguished"; break;
    case Verdict::Outcome::Unknown: out["outcome"] = "unknown"; break;
  }
  if (!verdict.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& pair : verdict.pairs)
      pairs.push_back(Json{{"label", pair.label}, {"bijection", pair.bijection}});
    out["pairs"] = pairs;
  }
  if (verdict.witness) {
    out["witness"] = print_formula(verdict.witness);
    out["value_a"] = verdict.value_a->str();
    out["value_b"] = verdict.value_b->str();
  }
  if (verdict.outcome != Verdict::Outcome::CertifiedEquivalent) {
    out["size_bound"] = verdict.size_bound;
    out["qr_bound"] = verdict.qr_bound;
  }
  if (!verdict.note.empty()) out["note"] = verdict.note;
  return out;
}

inline Json axiomset_to_json(const AxiomSet& axioms) {
  Json out;
  out["kind"] = to_string(axioms.kind);
  Json sentences = Json::array();
  for (const auto& f : axioms.sentences) sentences.push_back(print_formula(f));
  out["sentences"] = sentences;
  if (axioms.epsilon) out["epsilon"] = rat_str(*axioms.epsilon);
  if (!axioms.exponents.empty()) {
    Json exps = Json::array();
    for (const auto& e : axioms.exponents) exps.push_back(e.get_str());
    out["exponents"] = exps;
  }
  if (axioms.q) out["q"] = axioms.q->get_str();
  if (axioms.bound_c) out["C"] = axioms.bound_c->get_str();
  if (axioms.bound_n) out["n"] = axioms.bound_n->get_str();
  if (axioms.power) out["e"] = axioms.power->get_str();
  return out;
}

/// Reads a homomorphism document. Forms: {"form": "identity", "source": TAG},
/// {"form": "threshold", "source": TAG, "level": N},
/// {"form": "var-map", "source": TAG, "target": TAG, "map": {var: var-or-"0"}},
/// {"form": "assignment", "source": TAG, "target": TAG, "assignment": {var: VALUE}}.
inline Homomorphism hom_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("form") || !doc.contains("source"))
    fail(errc::config, "homomorphism documents need 'form' and 'source'");
  std::string form = doc["form"].get<std::string>();
  SemiringTag source = SemiringTag::parse(doc["source"].get<std::string>());
  if (form == "identity") return Homomorphism::identity(source);
  if (form == "threshold") {
    if (!doc.contains("level") || !doc["level"].is_number_integer() ||
        doc["level"].get<long long>() < 0)
      fail(errc::config, "threshold documents need an unsigned 'level'");
    return Homomorphism::threshold(source, doc["level"].get<unsigned long>());
  }
  if (!doc.contains("target"))
    fail(errc::config, "'" + form + "' documents need 'target'");
  SemiringTag target = SemiringTag::parse(doc["target"].get<std::string>());
  if (form == "var-map") {
    if (!doc.contains("map") || !doc["map"].is_object())
      fail(errc::config, "var-map documents need a 'map' object");
    std::map<std::string, std::optional<std::string>> mapping;
    for (const auto& [name, image] : doc["map"].items()) {
      if (image.is_null() || (image.is_string() && image.get<std::string>() == "0"))
        mapping[name] = std::nullopt;
      else if (image.is_string())
        mapping[name] = image.get<std::string>();
      else
        fail(errc::config, "map image of '" + name + "' must be a variable or \"0\"");
    }
    return Homomorphism::var_map(source, target, std::move(mapping));
  }
  if (form == "assignment") {
    if (!doc.contains("assignment") || !doc["assignment"].is_object())
      fail(errc::config, "assignment documents need an 'assignment' object");
    std::map<std::string, Value> assignment;
    for (const auto& [name, value] : doc["assignment"].items())
      assignment.emplace(name, Value::parse(target, value.get<std::string>()));
    return universal_hom(source, target, assignment);
  }
  fail(errc::config, "unknown homomorphism form '" + form + "'");
}

/// Reads a separating-set document: {"family": NAME, "trusted": BOOL,
/// "diagonal": BOOL, "pairs": [{"label": TEXT, "left": HOM, "right": HOM}]}.
/// Sets that are not one of the built-in families are re-checked against the
/// achieved value closure before certification uses them.
inline SeparatingSet separating_set_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    fail(errc::config, "separating-set documents need a 'pairs' array");
  SeparatingSet out;
  out.family = doc.value("family", std::string("user"));
  out.trusted = doc.value("trusted", false);
  out.diagonal = doc.value("diagonal", false);
  for (const auto& entry : doc["pairs"]) {
    if (!entry.is_object() || !entry.contains("left") || !entry.contains("right"))
      fail(errc::config, "pair entries need 'left' and 'right'");
    out.pairs.push_back({hom_from_json(entry["left"]), hom_from_json(entry["right"]),
                         entry.value("label", std::string())});
  }
  if (out.pairs.empty()) fail(errc::config, "separating set has no pairs");
  return out;
}

inline Json perturbation_to_json(const PerturbationOutcome& outcome) {
  Json out;
  out["perturbed"] = interpretation_to_json(outcome.perturbed);
  Json cols = Json::array();
  for (std::size_t j = 0; j < outcome.finite_literals.size(); ++j)
    cols.push_back(Json{{"lit", outcome.finite_literals[j].str()},
                        {"variable", outcome.variables[j]},
                        {"before", rat_str(outcome.before[j])},
                        {"after", rat_str(outcome.after[j])}});
  out["columns"] = cols;
  Json retained = Json::array();
  for (std::size_t i = 0; i < outcome.retained.size(); ++i)
    retained.push_back(Json{{"sentence", print_formula(outcome.retained[i])},
                            {"value", outcome.provenance[i].str()},
                            {"argmin", outcome.argmins[i].str(Nat(1))}});
  out["retained"] = retained;
  Json dropped = Json::array();
  for (const auto& f : outcome.dropped) dropped.push_back(print_formula(f));
  out["dropped"] = dropped;
  out["margin"] = rat_str(outcome.margin);
  out["delta"] = rat_str(outcome.delta);
  out["differing"] = outcome.differing.str();
  return out;
}

}  // namespace srmt
