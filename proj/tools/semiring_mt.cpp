#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srmt/demos.hpp"

namespace {

using namespace srmt;

#ifndef SRMT_DATA_DIR
#define SRMT_DATA_DIR "data"
#endif

struct Shared {
  bool json = false;
  unsigned long size_bound = 6;
  unsigned qr_bound = 2;
  unsigned long exp_cap = 1000000;
  std::string family;
};

void emit(const Shared& shared, const std::vector<std::string>& lines, Json doc) {
  if (shared.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
  }
}

std::string formula_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) fail(errc::config, "cannot read '" + arg + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return arg;
}

std::vector<std::string> table_lines(const KInterpretation& pi) {
  std::vector<std::string> out;
  for (const auto& [lit, value] : pi.nonzero_entries())
    out.push_back("  " + lit.str() + " = " + value.str());
  if (out.empty()) out.push_back("  (all zero)");
  return out;
}

SeparatingSet family_from_text(const std::string& text, const KInterpretation& a) {
  if (text == "posbool") return posbool_family(a.tag().vars());
  if (text == "minmax") {
    if (a.tag().kind() != Kind::MinMax)
      fail(errc::config, "the minmax family needs a minmax interpretation");
    return minmax_threshold_family(a.tag().order());
  }
  if (text == "why" || text.rfind("why:", 0) == 0) {
    std::map<std::string, std::string> sigma;
    if (text == "why") {
      for (const auto& name : a.tag().vars().names()) sigma[name] = name;
    } else {
      std::stringstream entries(text.substr(4));
      std::string entry;
      while (std::getline(entries, entry, ',')) {
        auto sep = entry.find('>');
        if (sep == std::string::npos)
          fail(errc::config, "permutation entries look like FROM>TO");
        sigma[entry.substr(0, sep)] = entry.substr(sep + 1);
      }
    }
    return why_family(a.tag().vars(), sigma);
  }
  if (text.rfind("file:", 0) == 0) return separating_set_from_json(load_json(text.substr(5)));
  fail(errc::config, "unknown family '" + text + "'");
}

int run_eval(const Shared& shared, const std::string& pi_path, const std::string& formula_arg,
             const std::vector<std::string>& bindings) {
  KInterpretation pi = load_interpretation(pi_path);
  FormulaPtr formula = parse_formula(formula_argument(formula_arg));
  std::map<std::string, std::string> assignment;
  for (const auto& entry : bindings) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) fail(errc::config, "bindings look like VAR=ELEMENT");
    assignment[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  Value value = evaluate(pi, formula, assignment);
  Json doc{{"command", "eval"},
           {"semiring", pi.tag().str()},
           {"formula", print_formula(formula)},
           {"value", value.str()}};
  emit(shared, {value.str()}, std::move(doc));
  return 0;
}

int run_iso(const Shared& shared, const std::string& a_path, const std::string& b_path) {
  KInterpretation a = load_interpretation(a_path);
  KInterpretation b = load_interpretation(b_path);
  auto bijection = find_isomorphism(a, b);
  std::vector<std::string> lines;
  Json doc{{"command", "iso"}, {"isomorphic", bijection.has_value()}};
  if (bijection) {
    lines.push_back("ISOMORPHIC");
    Json map = Json::object();
    for (const auto& [from, to] : *bijection) {
      lines.push_back("  " + from + " -> " + to);
      map[from] = to;
    }
    doc["bijection"] = std::move(map);
  } else {
    lines.push_back("NOT ISOMORPHIC");
  }
  emit(shared, lines, std::move(doc));
  return 0;
}

int run_equiv(const Shared& shared, const std::string& a_path, const std::string& b_path) {
  KInterpretation a = load_interpretation(a_path);
  KInterpretation b = load_interpretation(b_path);
  Verdict verdict;
  if (!shared.family.empty())
    verdict = certify_equivalence(a, b, family_from_text(shared.family, a), shared.size_bound,
                                  shared.qr_bound);
  else
    verdict = distinguisher_search(a, b, shared.size_bound, shared.qr_bound);

  std::vector<std::string> lines;
  int exit_code = 0;
  switch (verdict.outcome) {
    case Verdict::Outcome::CertifiedEquivalent: {
      bool isomorphic = find_isomorphism(a, b).has_value();
      lines.push_back(isomorphic ? "CERTIFIED EQUIVALENT; ISOMORPHIC"
                                 : "CERTIFIED EQUIVALENT; NOT ISOMORPHIC");
      for (const auto& ev : verdict.pairs) {
        std::string line = "  " + ev.label + ":";
        for (const auto& [from, to] : ev.bijection) line += " " + from + "->" + to;
        lines.push_back(line);
      }
      break;
    }
    case Verdict::Outcome::Distinguished:
      lines.push_back("DISTINGUISHED by " + print_formula(verdict.witness));
      lines.push_back("  left value:  " + verdict.value_a->str());
      lines.push_back("  right value: " + verdict.value_b->str());
      break;
    case Verdict::Outcome::Unknown:
      lines.push_back("UNKNOWN: no distinguisher up to size " + std::to_string(shared.size_bound) +
                      ", rank " + std::to_string(shared.qr_bound));
      exit_code = 3;
      break;
  }
  Json doc = verdict_to_json(verdict);
  doc["command"] = "equiv";
  emit(shared, lines, std::move(doc));
  return exit_code;
}

int run_axioms(const Shared& shared, const std::string& pi_path, const std::string& kind,
               const std::string& epsilon_text, unsigned long q, unsigned long coeff_bound,
               unsigned long exp_bound) {
  KInterpretation pi = load_interpretation(pi_path);
  AxiomSet set{AxiomKind::Classical, {}, {}, {}, {}, {}, {}, {}};
  if (kind == "classical") {
    set.sentences = {classical_characteristic(pi)};
  } else if (kind == "viterbi-characteristic") {
    Rat eps = epsilon_text.empty() ? min_gap(pi.value_image()) : parse_rational(epsilon_text);
    CharacteristicSentence chi = viterbi_characteristic(pi, eps, Nat(shared.exp_cap));
    set.kind = AxiomKind::ViterbiCharacteristic;
    set.sentences = {chi.sentence};
    set.epsilon = chi.schedule.epsilon;
    set.exponents = chi.schedule.exponents;
  } else if (kind == "viterbi-axioms") {
    set = viterbi_axiomatisation(pi, Nat(shared.exp_cap));
  } else if (kind == "sorting") {
    set = sorting_axioms(pi.vocab(), pi.universe().size(), pi.tag());
  } else if (kind == "nat-characteristic") {
    WeightedCharacteristic chi = nat_characteristic(pi, Nat(q));
    set.kind = AxiomKind::NatCharacteristic;
    set.sentences = {chi.sentence};
    set.q = chi.q;
    set.power = chi.power;
  } else if (kind == "natx-characteristic") {
    WeightedCharacteristic chi = natx_characteristic(pi, Nat(coeff_bound), Nat(exp_bound));
    set.kind = AxiomKind::NatXCharacteristic;
    set.sentences = {chi.sentence};
    set.q = chi.q;
    set.bound_c = Nat(coeff_bound);
    set.bound_n = Nat(exp_bound);
    set.power = chi.power;
  } else {
    fail(errc::config, "unknown axiom kind '" + kind + "'");
  }

  std::vector<std::string> lines;
  lines.push_back(std::string(to_string(set.kind)) + ": " + std::to_string(set.sentences.size()) +
                  " sentence(s)");
  for (const auto& sentence : set.sentences) lines.push_back("  " + print_formula(sentence));
  if (set.epsilon) lines.push_back("epsilon: " + rat_str(*set.epsilon));
  if (!set.exponents.empty()) {
    std::string exps = "exponents:";
    for (const Nat& e : set.exponents) exps += " " + e.get_str();
    lines.push_back(exps);
  }
  if (set.q) lines.push_back("radix: " + set.q->get_str());
  if (set.power) lines.push_back("power: " + set.power->get_str());
  Json doc = axiomset_to_json(set);
  doc["command"] = "axioms";
  emit(shared, lines, std::move(doc));
  return 0;
}

int run_attack_cancel(const Shared& shared, const std::string& tag_text, const std::string& wa,
                      const std::string& wb, const std::string& wc) {
  SemiringTag tag = SemiringTag::parse(tag_text);
  CancellationWitness witness =
      verify_witness(Value::parse(tag, wa), Value::parse(tag, wb), Value::parse(tag, wc));
  Value product = sr_mul(witness.a, witness.b);
  auto pair = witness_interpretations(witness);

  std::vector<std::string> lines;
  lines.push_back("witness verified over " + tag.str());
  lines.push_back("  a = " + witness.a.str());
  lines.push_back("  b = " + witness.b.str());
  lines.push_back("  c = " + witness.c.str());
  lines.push_back("  a*b = a*c = " + product.str());
  lines.push_back("pi_b:");
  for (auto& line : table_lines(pair.first)) lines.push_back(line);
  lines.push_back("pi_c:");
  for (auto& line : table_lines(pair.second)) lines.push_back(line);
  lines.push_back("NOT ISOMORPHIC");
  Json doc{{"command", "attack-cancel"},
           {"semiring", tag.str()},
           {"a", witness.a.str()},
           {"b", witness.b.str()},
           {"c", witness.c.str()},
           {"product", product.str()},
           {"pi_b", interpretation_to_json(pair.first)},
           {"pi_c", interpretation_to_json(pair.second)},
           {"isomorphic", false}};
  emit(shared, lines, std::move(doc));
  return 0;
}

int run_attack_perturb(const Shared& shared, const std::string& pi_path,
                       const std::vector<std::string>& sentence_texts) {
  KInterpretation pi = load_interpretation(pi_path);
  std::vector<FormulaPtr> sentences;
  for (const auto& text : sentence_texts) sentences.push_back(parse_formula(text));
  PerturbationOutcome outcome = tropical_perturbation(pi, sentences);

  std::vector<std::string> lines;
  for (std::size_t i = 0; i < outcome.finite_literals.size(); ++i)
    lines.push_back("  " + outcome.finite_literals[i].str() + ": " + rat_str(outcome.before[i]) +
                    " -> " + rat_str(outcome.after[i]));
  lines.push_back("delta: " + rat_str(outcome.delta) + ", margin: " + rat_str(outcome.margin));
  lines.push_back("first moved literal: " + outcome.differing.str());
  for (const auto& sentence : outcome.retained)
    lines.push_back("agrees on " + print_formula(sentence) + ": " +
                    evaluate(pi, sentence).str());
  for (const auto& sentence : outcome.dropped)
    lines.push_back("dropped (value zero): " + print_formula(sentence));
  lines.push_back("NOT ISOMORPHIC");
  Json doc = perturbation_to_json(outcome);
  doc["command"] = "attack-perturb";
  emit(shared, lines, std::move(doc));
  return 0;
}

int run_demo_cmd(const Shared& shared, const std::string& scenario, const std::string& data_dir) {
  std::vector<std::string> names =
      scenario == "all" ? demo_names() : std::vector<std::string>{scenario};
  std::vector<std::string> lines;
  Json docs = Json::array();
  for (const auto& name : names) {
    DemoReport report = run_demo(name, data_dir);
    lines.push_back("== " + report.scenario + " ==");
    lines.insert(lines.end(), report.lines.begin(), report.lines.end());
    lines.push_back("OK " + report.scenario);
    docs.push_back(std::move(report.document));
  }
  Json doc = names.size() == 1 ? std::move(docs[0])
                               : Json{{"command", "demo"}, {"scenarios", std::move(docs)}};
  emit(shared, lines, std::move(doc));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiring semantics toolkit: evaluate first-order formulas over commutative "
               "semirings, certify elementary equivalence, generate characteristic axioms, "
               "and build counterexample attacks"};
  app.require_subcommand(1);

  Shared shared;
  app.add_flag("--json", shared.json, "print a JSON document instead of text");
  app.add_option("--size-bound", shared.size_bound, "sentence size bound for searches")
      ->capture_default_str();
  app.add_option("--qr-bound", shared.qr_bound, "quantifier rank bound for searches")
      ->capture_default_str();
  app.add_option("--exp-cap", shared.exp_cap, "cap on generated exponents")
      ->capture_default_str();
  app.add_option("--family", shared.family,
                 "separating family: posbool | why[:FROM>TO,...] | minmax | file:PATH");

  std::string eval_pi, eval_formula;
  std::vector<std::string> eval_bindings;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under an interpretation");
  eval_cmd->fallthrough();
  eval_cmd->add_option("interpretation", eval_pi, "interpretation JSON file")->required();
  eval_cmd->add_option("formula", eval_formula, "formula text, or a file containing one")
      ->required();
  eval_cmd->add_option("--assign", eval_bindings, "free-variable binding VAR=ELEMENT");

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "search for an isomorphism between two tables");
  iso_cmd->fallthrough();
  iso_cmd->add_option("left", iso_a, "interpretation JSON file")->required();
  iso_cmd->add_option("right", iso_b, "interpretation JSON file")->required();

  std::string equiv_a, equiv_b;
  auto* equiv_cmd = app.add_subcommand(
      "equiv", "certify elementary equivalence via a separating family, or search for a "
               "distinguishing sentence");
  equiv_cmd->fallthrough();
  equiv_cmd->add_option("left", equiv_a, "interpretation JSON file")->required();
  equiv_cmd->add_option("right", equiv_b, "interpretation JSON file")->required();

  std::string axioms_pi, axioms_kind, axioms_epsilon;
  unsigned long axioms_q = 2, axioms_coeff = 2, axioms_exp = 2;
  auto* axioms_cmd = app.add_subcommand("axioms", "generate characteristic sentences");
  axioms_cmd->fallthrough();
  axioms_cmd->add_option("interpretation", axioms_pi, "interpretation JSON file")->required();
  axioms_cmd
      ->add_option("--kind", axioms_kind,
                   "classical | viterbi-characteristic | viterbi-axioms | sorting | "
                   "nat-characteristic | natx-characteristic")
      ->required();
  axioms_cmd->add_option("--epsilon", axioms_epsilon,
                         "gap for viterbi-characteristic (default: the table's own gap)");
  axioms_cmd->add_option("--q", axioms_q, "radix for nat-characteristic")
      ->capture_default_str();
  axioms_cmd->add_option("--coeff-bound", axioms_coeff, "coefficient bound for natx")
      ->capture_default_str();
  axioms_cmd->add_option("--exp-bound", axioms_exp, "exponent bound for natx")
      ->capture_default_str();

  auto* attack_cmd = app.add_subcommand("attack", "cancellation and perturbation attacks");
  attack_cmd->require_subcommand(1);
  std::string cancel_tag, cancel_a, cancel_b, cancel_c;
  auto* cancel_cmd = attack_cmd->add_subcommand(
      "cancel", "verify a cancellation witness and build its twin tables");
  cancel_cmd->fallthrough();
  cancel_cmd->add_option("--semiring", cancel_tag, "semiring tag, e.g. boolpoly:x,y")
      ->required();
  cancel_cmd->add_option("--wa", cancel_a, "witness element a")->required();
  cancel_cmd->add_option("--wb", cancel_b, "witness element b")->required();
  cancel_cmd->add_option("--wc", cancel_c, "witness element c")->required();

  std::string perturb_pi;
  std::vector<std::string> perturb_sentences;
  auto* perturb_cmd = attack_cmd->add_subcommand(
      "perturb", "move a tropical table while preserving given sentence values");
  perturb_cmd->fallthrough();
  perturb_cmd->add_option("interpretation", perturb_pi, "tropical interpretation JSON file")
      ->required();
  perturb_cmd->add_option("--sentence", perturb_sentences, "sentence to preserve (repeatable)")
      ->required();

  std::string demo_scenario, demo_data = SRMT_DATA_DIR;
  auto* demo_cmd = app.add_subcommand("demo", "run a self-verifying scenario");
  demo_cmd->fallthrough();
  demo_cmd
      ->add_option("scenario", demo_scenario,
                   "one of: minmax-PQ, posbool-equivalence, why-equivalence, viterbi-19-91, "
                   "viterbi-axioms, nat-characteristic, natx-embedding, cancellation-boolx, "
                   "cancellation-sx, tropical-attack, all")
      ->required();
  demo_cmd->add_option("--data", demo_data, "directory holding the scenario data files")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(shared, eval_pi, eval_formula, eval_bindings);
    if (iso_cmd->parsed()) return run_iso(shared, iso_a, iso_b);
    if (equiv_cmd->parsed()) return run_equiv(shared, equiv_a, equiv_b);
    if (axioms_cmd->parsed())
      return run_axioms(shared, axioms_pi, axioms_kind, axioms_epsilon, axioms_q, axioms_coeff,
                        axioms_exp);
    if (cancel_cmd->parsed())
      return run_attack_cancel(shared, cancel_tag, cancel_a, cancel_b, cancel_c);
    if (perturb_cmd->parsed()) return run_attack_perturb(shared, perturb_pi, perturb_sentences);
    if (demo_cmd->parsed()) return run_demo_cmd(shared, demo_scenario, demo_data);
  } catch (const srmt::error& e) {
    std::cerr << "error (" << srmt::to_string(e.code()) << "): " << e.what() << "\n";
    if (e.code() == srmt::errc::cap_exceeded) return 3;
    if (e.code() == srmt::errc::scenario_mismatch) return 1;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
