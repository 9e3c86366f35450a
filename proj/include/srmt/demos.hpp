#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srmt/json_io.hpp"

namespace srmt {

/// Transcript of one demo scenario: human-readable lines plus a JSON summary.
/// Scenarios recompute everything they claim; any mismatch with the expected
/// values raises a scenario mismatch instead of producing a report.
struct DemoReport {
  std::string scenario;
  std::vector<std::string> lines;
  Json document;
};

namespace demo_detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) fail(errc::scenario_mismatch, what);
}

inline KInterpretation load(const std::string& dir, const std::string& name) {
  return load_interpretation(dir + "/" + name + ".json");
}

inline std::string table_line(const KInterpretation& pi) {
  std::string out;
  for (const auto& [lit, value] : pi.nonzero_entries()) {
    if (!out.empty()) out += ", ";
    out += lit.str() + " = " + value.str();
  }
  return out.empty() ? "(all zero)" : out;
}

inline std::string bijection_line(const std::map<std::string, std::string>& bij) {
  std::string out;
  for (const auto& [from, to] : bij) {
    if (!out.empty()) out += ", ";
    out += from + " -> " + to;
  }
  return out;
}

inline void minmax_pq(DemoReport& r, const std::string& dir) {
  KInterpretation pq = load(dir, "pi_pq");
  KInterpretation qp = load(dir, "pi_qp");
  expect(is_model_defining(pq) && is_model_defining(qp), "tables must be model-defining");
  r.lines.push_back("pi_PQ over minmax:4 on {a,b,c}: " + table_line(pq));
  r.lines.push_back("pi_QP over minmax:4 on {a,b,c}: " + table_line(qp));
  expect(!find_isomorphism(pq, qp), "pi_PQ and pi_QP must not be isomorphic");

  SeparatingSet family = minmax_threshold_family(4);
  Verdict verdict = certify_equivalence(pq, qp, family);
  expect(verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "threshold certification must succeed");
  expect(verdict.pairs.size() == 3, "minmax:4 has three threshold maps");
  for (const auto& ev : verdict.pairs)
    r.lines.push_back("image isomorphism at " + ev.label + ": " + bijection_line(ev.bijection));
  std::map<std::string, std::string> mid = {{"a", "b"}, {"b", "a"}, {"c", "c"}};
  expect(verdict.pairs[1].bijection == mid, "the t = 2 images must swap a and b");
  r.lines.push_back("CERTIFIED EQUIVALENT; NOT ISOMORPHIC");

  SemiringTag k3 = SemiringTag::minmax(3);
  auto pair = lattice_counterexample(k3, Value::level(k3, 1), Value::level(k3, 2));
  expect(!find_isomorphism(pair.first, pair.second),
         "the minmax:3 lattice pair must not be isomorphic");
  Verdict k3_verdict = certify_equivalence(pair.first, pair.second, minmax_threshold_family(3));
  expect(k3_verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "the minmax:3 lattice pair must certify");
  r.lines.push_back("four-element pair over minmax:3 from values 1, 2: "
                    "CERTIFIED EQUIVALENT; NOT ISOMORPHIC");
  r.document["verdict"] = verdict_to_json(verdict);
  r.document["minmax3_verdict"] = verdict_to_json(k3_verdict);
}

inline void posbool_equivalence(DemoReport& r, const std::string& dir) {
  KInterpretation xy = load(dir, "pi_xy");
  KInterpretation yx = load(dir, "pi_yx");
  SemiringTag tag = xy.tag();
  auto built = lattice_counterexample(tag,
                                      Value::poly(tag, Polynomial::variable(Kind::PosBool, "x")),
                                      Value::poly(tag, Polynomial::variable(Kind::PosBool, "y")));
  expect(built.first == xy && built.second == yx,
         "the lattice construction must reproduce the stored tables");
  r.lines.push_back("pi_xy over posbool:x,y on {a,b,c,d}: " + table_line(xy));
  r.lines.push_back("pi_yx over posbool:x,y on {a,b,c,d}: " + table_line(yx));

  SeparatingSet family = posbool_family(tag.vars());
  expect(family.pairs.size() == 4, "four truth assignments over {x,y}");
  const char* suffix[4] = {"none", "x", "y", "xy"};
  for (std::size_t i = 0; i < 4; ++i) {
    KInterpretation img_xy = compose_hom(family.pairs[i].left, xy);
    KInterpretation img_yx = compose_hom(family.pairs[i].right, yx);
    expect(img_xy == load(dir, std::string("img_xy_") + suffix[i]),
           "image of pi_xy under " + family.pairs[i].label + " must match the stored table");
    expect(img_yx == load(dir, std::string("img_yx_") + suffix[i]),
           "image of pi_yx under " + family.pairs[i].label + " must match the stored table");
    r.lines.push_back(family.pairs[i].label + ": h.pi_xy = [" + table_line(img_xy) +
                      "]; h.pi_yx = [" + table_line(img_yx) + "]");
  }

  Verdict verdict = certify_equivalence(xy, yx, family);
  expect(verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "posbool certification must succeed");
  expect(verdict.pairs.size() == 4, "one image isomorphism per truth assignment");
  for (const auto& ev : verdict.pairs)
    r.lines.push_back("image isomorphism at " + ev.label + ": " + bijection_line(ev.bijection));
  std::map<std::string, std::string> full = {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}};
  expect(verdict.pairs[3].bijection == full,
         "the full assignment images are matched by swapping a and b");
  expect(!find_isomorphism(xy, yx), "the originals must not be isomorphic");
  r.lines.push_back("CERTIFIED EQUIVALENT; NOT ISOMORPHIC");
  r.document["verdict"] = verdict_to_json(verdict);
}

inline void why_equivalence(DemoReport& r, const std::string& dir) {
  KInterpretation xy = load(dir, "pi_xy_why");
  KInterpretation yx = load(dir, "pi_yx_why");
  r.lines.push_back("pi_xy over whypoly:x,y on {a,b,c,d}: " + table_line(xy));
  r.lines.push_back("pi_yx over whypoly:x,y on {a,b,c,d}: " + table_line(yx));

  std::map<std::string, std::string> sigma = {{"x", "y"}, {"y", "x"}};
  SeparatingSet family = why_family(xy.tag().vars(), sigma);
  expect(family.pairs.size() == 4 && !family.diagonal,
         "the swap permutation yields four twisted pairs");
  Verdict verdict = certify_equivalence(xy, yx, family);
  expect(verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "whypoly certification must succeed");
  expect(verdict.pairs.size() == 4, "one image isomorphism per subset");
  std::vector<std::map<std::string, std::string>> want = {
      {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}},
      {{"a", "d"}, {"b", "c"}, {"c", "b"}, {"d", "a"}},
      {{"a", "c"}, {"b", "d"}, {"c", "a"}, {"d", "b"}},
      {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}}};
  for (std::size_t i = 0; i < 4; ++i) {
    expect(verdict.pairs[i].bijection == want[i],
           "image isomorphism at " + verdict.pairs[i].label + " differs from the expected map");
    r.lines.push_back("image isomorphism at " + verdict.pairs[i].label + ": " +
                      bijection_line(verdict.pairs[i].bijection));
  }
  expect(!find_isomorphism(xy, yx), "the originals must not be isomorphic");
  r.lines.push_back("CERTIFIED EQUIVALENT; NOT ISOMORPHIC");
  r.document["verdict"] = verdict_to_json(verdict);
}

inline void viterbi_19_91(DemoReport& r, const std::string& dir) {
  KInterpretation p19 = load(dir, "pi_19");
  KInterpretation p91 = load(dir, "pi_91");
  expect(!find_isomorphism(p19, p91), "pi_19 and pi_91 must not be isomorphic");

  FormulaPtr repeated = parse_formula("E x. (P(x) & Q(x)^2)");
  Value v19 = evaluate(p19, repeated);
  Value v91 = evaluate(p91, repeated);
  expect(v19 == Value::viterbi(parse_rational("81/1000")) &&
             v91 == Value::viterbi(parse_rational("9/1000")),
         "the repeated literal must give 81/1000 against 9/1000");
  r.lines.push_back("pi_19[" + print_formula(repeated) + "] = " + v19.str());
  r.lines.push_back("pi_91[" + print_formula(repeated) + "] = " + v91.str());

  Verdict verdict = distinguisher_search(p19, p91, 6, 2);
  expect(verdict.outcome == Verdict::Outcome::Distinguished,
         "the bounded search must find a distinguishing sentence");
  expect(print_formula(verdict.witness) == "E x1. P(x1)",
         "the first canonical distinguisher is E x1. P(x1)");
  expect(*verdict.value_a == Value::viterbi(parse_rational("1/10")) &&
             *verdict.value_b == Value::viterbi(parse_rational("9/10")),
         "the witness values must be 1/10 against 9/10");
  r.lines.push_back("first canonical distinguisher: " + print_formula(verdict.witness) + " with " +
                    verdict.value_a->str() + " != " + verdict.value_b->str());
  r.document["verdict"] = verdict_to_json(verdict);
  r.document["repeated_literal"] =
      Json{{"sentence", print_formula(repeated)}, {"pi_19", v19.str()}, {"pi_91", v91.str()}};
}

inline void viterbi_axioms(DemoReport& r, const std::string& dir) {
  KInterpretation p19 = load(dir, "pi_19");
  AxiomSet axioms = viterbi_axiomatisation(p19);
  expect(axioms.sentences.size() == 5, "four sorting sentences plus the characteristic");
  expect(axioms.epsilon && *axioms.epsilon == parse_rational("1/10"),
         "epsilon must be the value gap 1/10");
  std::vector<Nat> schedule = {Nat(1), Nat(22)};
  expect(axioms.exponents == schedule, "the exponent schedule must be (1, 22)");
  for (const auto& sentence : axioms.sentences)
    r.lines.push_back("axiom: " + print_formula(sentence));
  r.lines.push_back("epsilon 1/10, exponents (1, 22)");

  std::vector<Value> reference;
  for (const auto& sentence : axioms.sentences) reference.push_back(evaluate(p19, sentence));

  std::vector<Rat> grid;
  for (const char* text : {"1/4", "1/2", "3/4", "1", "1/10", "9/10"})
    grid.push_back(parse_rational(text));
  Universe uni({"a"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  std::size_t candidates = 0, agreeing = 0;
  for (bool p_positive : {true, false})
    for (const Rat& p_value : grid)
      for (bool q_positive : {true, false})
        for (const Rat& q_value : grid) {
          KInterpretation cand(SemiringTag::viterbi(), uni, vocab);
          cand.set(Literal{"P", p_positive, {"a"}}, Value::viterbi(p_value));
          cand.set(Literal{"Q", q_positive, {"a"}}, Value::viterbi(q_value));
          ++candidates;
          bool agree = true;
          for (std::size_t i = 0; i < axioms.sentences.size() && agree; ++i)
            agree = evaluate(cand, axioms.sentences[i]) == reference[i];
          bool iso = find_isomorphism(cand, p19).has_value();
          expect(agree == iso, "axiom agreement must coincide with isomorphism on the grid");
          if (agree) ++agreeing;
        }
  expect(candidates == 144 && agreeing == 1,
         "exactly one of the 144 grid interpretations satisfies the axioms");
  r.lines.push_back("grid sweep: 144 model-defining candidates, 1 satisfies all axioms, "
                    "agreement coincides with isomorphism");
  r.document["axioms"] = axiomset_to_json(axioms);
  r.document["grid_candidates"] = candidates;
  r.document["grid_agreeing"] = agreeing;
}

inline void nat_characteristic_demo(DemoReport& r, const std::string& dir) {
  (void)dir;
  Universe uni({"a"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  SemiringTag tag = SemiringTag::nat();

  KInterpretation example(tag, uni, vocab);
  example.set(Literal{"P", true, {"a"}}, Value::nat(1));
  example.set(Literal{"Q", true, {"a"}}, Value::nat(2));
  WeightedCharacteristic chi = nat_characteristic(example, 3);
  expect(chi.q == 3 && chi.power == 1, "radix 3 needs exponent 1 on one element");
  Value encoded = evaluate(example, chi.sentence);
  expect(encoded == Value::nat(19), "digits (1, 0, 2, 0) in base 3 read 19");
  r.lines.push_back("chi at radix 3: " + print_formula(chi.sentence));
  r.lines.push_back("value on (P = 1, Q = 2): 19 = 1*1 + 0*3 + 2*9 + 0*27");

  std::vector<KInterpretation> rows;
  for (unsigned p = 0; p < 3; ++p)
    for (unsigned pn = 0; pn < 3; ++pn)
      for (unsigned q = 0; q < 3; ++q)
        for (unsigned qn = 0; qn < 3; ++qn) {
          KInterpretation row(tag, uni, vocab);
          row.set(Literal{"P", true, {"a"}}, Value::nat(p));
          row.set(Literal{"P", false, {"a"}}, Value::nat(pn));
          row.set(Literal{"Q", true, {"a"}}, Value::nat(q));
          row.set(Literal{"Q", false, {"a"}}, Value::nat(qn));
          rows.push_back(std::move(row));
        }
  std::vector<Value> values;
  for (const auto& row : rows) values.push_back(evaluate(row, chi.sentence));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      bool agree = values[i] == values[j];
      bool iso = find_isomorphism(rows[i], rows[j]).has_value();
      expect(agree == iso, "chi agreement must coincide with isomorphism below the radix");
    }
  r.lines.push_back("all 81 one-element tables with values below 3 get distinct chi values");

  Universe two({"a", "b"});
  auto fill = [&](unsigned pa, unsigned qa, unsigned pb, unsigned qb) {
    KInterpretation pi(tag, two, vocab);
    pi.set(Literal{"P", true, {"a"}}, Value::nat(pa));
    pi.set(Literal{"Q", true, {"a"}}, Value::nat(qa));
    pi.set(Literal{"P", true, {"b"}}, Value::nat(pb));
    pi.set(Literal{"Q", true, {"b"}}, Value::nat(qb));
    return pi;
  };
  KInterpretation base = fill(1, 2, 2, 1);
  KInterpretation swapped = fill(2, 1, 1, 2);
  KInterpretation other = fill(1, 1, 2, 1);
  WeightedCharacteristic chi2 = nat_characteristic(base, 3);
  Nat c = nat_pow(Nat(3), Nat(8));
  expect(nat_pow(c, chi2.power) > 2 * nat_pow(c - 1, chi2.power) &&
             nat_pow(c, chi2.power - 1) <= 2 * nat_pow(c - 1, chi2.power - 1),
         "the exponent must be minimal for two reorderings");
  expect(evaluate(base, chi2.sentence) == evaluate(swapped, chi2.sentence),
         "relabeled tables must agree on chi");
  expect(evaluate(base, chi2.sentence) != evaluate(other, chi2.sentence),
         "distinct tables must disagree on chi");
  r.lines.push_back("two-element check: chi with exponent " + chi2.power.get_str() +
                    " agrees across relabeling and separates a distinct table");
  r.document["radix"] = 3;
  r.document["one_element_rows"] = rows.size();
  r.document["two_element_exponent"] = chi2.power.get_str();
}

inline void natx_embedding_demo(DemoReport& r, const std::string& dir) {
  VarSet vars({"x1", "x2"});
  SemiringTag tag = SemiringTag::natpoly(vars);
  Homomorphism h = natx_embedding(2, 2, vars);
  std::vector<Polynomial> bounded = bounded_natpolys(vars, 2, 2);
  expect(bounded.size() == 16, "coefficients below 2, exponents below 2 give 16 polynomials");
  std::set<Nat> images;
  for (const Polynomial& p : bounded)
    images.insert(apply_hom(h, Value::poly(tag, p)).as_nat());
  std::set<Nat> want;
  for (unsigned long v = 0; v < 16; ++v) want.insert(Nat(v));
  expect(images == want, "the embedding must map the 16 polynomials onto 0..15");
  Value nine = apply_hom(h, Value::poly(tag, Polynomial::parse(Kind::NatPoly, "1 + x1*x2")));
  expect(nine == Value::nat(9), "1 + x1*x2 must map to 1 + 2*4 = 9");
  r.lines.push_back("embedding x1 -> 2, x2 -> 4 maps the 16 bounded polynomials onto {0..15}");
  r.lines.push_back("h(1 + x1*x2) = 9");

  VarSet tvar({"t"});
  SemiringTag ttag = SemiringTag::natpoly(tvar);
  Universe uni({"a"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  std::vector<Polynomial> tpolys = bounded_natpolys(tvar, 2, 2);
  expect(tpolys.size() == 4, "one variable gives the four polynomials 0, 1, t, 1 + t");
  KInterpretation seed(ttag, uni, vocab);
  seed.set(Literal{"P", true, {"a"}}, Value::poly(ttag, Polynomial::parse(Kind::NatPoly, "t")));
  seed.set(Literal{"Q", true, {"a"}},
           Value::poly(ttag, Polynomial::parse(Kind::NatPoly, "1 + t")));
  WeightedCharacteristic chi = natx_characteristic(seed, 2, 2);
  expect(chi.q == 4, "the radix must be 2^(2^1) = 4");
  std::set<std::string> seen;
  std::size_t row_count = 0;
  for (const Polynomial& p : tpolys)
    for (const Polynomial& pn : tpolys)
      for (const Polynomial& q : tpolys)
        for (const Polynomial& qn : tpolys) {
          KInterpretation row(ttag, uni, vocab);
          row.set(Literal{"P", true, {"a"}}, Value::poly(ttag, p));
          row.set(Literal{"P", false, {"a"}}, Value::poly(ttag, pn));
          row.set(Literal{"Q", true, {"a"}}, Value::poly(ttag, q));
          row.set(Literal{"Q", false, {"a"}}, Value::poly(ttag, qn));
          ++row_count;
          expect(seen.insert(evaluate(row, chi.sentence).str()).second,
                 "radix-4 weights must keep all bounded rows apart");
        }
  expect(row_count == 256, "four polynomial values over four literals give 256 rows");
  r.lines.push_back("radix-4 characteristic separates all 256 bounded one-element tables");

  KInterpretation square(ttag, uni, vocab);
  square.set(Literal{"P", true, {"a"}},
             Value::poly(ttag, Polynomial::parse(Kind::NatPoly, "t^2")));
  bool rejected = false;
  try {
    natx_characteristic(square, 2, 2);
  } catch (const error& e) {
    rejected = e.code() == errc::value_out_of_range;
  }
  expect(rejected, "t^2 must be rejected while the exponent bound is 2");
  WeightedCharacteristic wider = natx_characteristic(square, 2, 3);
  expect(wider.q == 8, "raising the exponent bound to 3 gives radix 2^(3^1) = 8");
  r.lines.push_back("t^2 is rejected at exponent bound 2 and admitted at bound 3 (radix 8)");

  KInterpretation twin = load(dir, "pi_natx");
  KInterpretation viterbi = load(dir, "pi_v");
  std::map<std::string, Value> assignment = {
      {"w", Value::viterbi(parse_rational("2/5"))},
      {"x", Value::viterbi(parse_rational("3/10"))},
      {"y", Value::viterbi(parse_rational("9/10"))},
      {"z", Value::viterbi(parse_rational("1/2"))}};
  Homomorphism eval_hom = universal_hom(twin.tag(), SemiringTag::viterbi(), assignment);
  expect(compose_hom(eval_hom, twin) == viterbi,
         "the assignment must reproduce the viterbi table literal by literal");
  FormulaPtr phi = parse_formula("A x. (P(x) | Q(x))");
  Value twin_value = evaluate(twin, phi);
  expect(twin_value == Value::poly(twin.tag(), Polynomial::parse(Kind::NatPoly, "x*z + y*z")),
         "the polynomial twin must evaluate to x*z + y*z");
  Value mapped = apply_hom(eval_hom, twin_value);
  expect(mapped == evaluate(viterbi, phi) && mapped == Value::viterbi(parse_rational("9/20")),
         "mapping the twin value must reproduce the direct evaluation 9/20");
  r.lines.push_back("pi_natx[A x. (P(x) | Q(x))] = x*z + y*z; its image under the "
                    "assignment equals the direct viterbi value 9/20");
  r.document["embedding_images"] = 16;
  r.document["bounded_rows"] = row_count;
  r.document["twin_value"] = twin_value.str();
}

inline void cancellation_boolx(DemoReport& r, const std::string& dir) {
  SemiringTag tag = SemiringTag::boolpoly(VarSet({"x", "y"}));
  auto poly = [&](const char* text) {
    return Value::poly(tag, Polynomial::parse(Kind::BoolPoly, text));
  };
  CancellationWitness w =
      verify_witness(poly("x + y + x^2 + x*y + y^2"), poly("x^2 + y^2"), poly("x^2 + x*y + y^2"));
  Value product = sr_mul(w.a, w.b);
  expect(product ==
             poly("x^3 + x*y^2 + x^2*y + y^3 + x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4"),
         "the merged product must be the nine-monomial polynomial");
  expect(product.as_poly().terms().size() == 9, "the merged product has nine monomials");
  r.lines.push_back("witness over boolpoly:x,y: a = " + w.a.str());
  r.lines.push_back("b = " + w.b.str() + "; c = " + w.c.str());
  r.lines.push_back("a*b = a*c = " + product.str());

  auto pair = witness_interpretations(w);
  expect(pair.first == load(dir, "pi_b_boolx") && pair.second == load(dir, "pi_c_boolx"),
         "the stored tables must match the construction");
  expect(!find_isomorphism(pair.first, pair.second), "pi_b and pi_c must not be isomorphic");
  Verdict verdict = distinguisher_search(pair.first, pair.second, 6, 2);
  expect(verdict.outcome == Verdict::Outcome::Unknown,
         "no sentence up to size 6 may distinguish the pair");
  r.lines.push_back("NOT ISOMORPHIC; no distinguishing sentence up to size 6, rank 2");
  r.document["product"] = product.str();
  r.document["verdict"] = verdict_to_json(verdict);
}

inline void cancellation_sx(DemoReport& r, const std::string& dir) {
  SemiringTag tag = SemiringTag::abspoly(VarSet({"x", "y"}));
  auto poly = [&](const char* text) {
    return Value::poly(tag, Polynomial::parse(Kind::AbsPoly, text));
  };
  CancellationWitness w = verify_witness(poly("x + y"), poly("x^2 + y^2"), poly("x^2 + x*y + y^2"));
  expect(sr_add(w.a, w.b) == w.a, "absorption must collapse (x + y) + (x^2 + y^2) to x + y");
  Value product = sr_mul(w.a, w.b);
  expect(product == poly("x^3 + x^2*y + x*y^2 + y^3"),
         "the merged product must be the four-monomial antichain");
  expect(product.as_poly().terms().size() == 4, "the merged product has four monomials");
  r.lines.push_back("witness over abspoly:x,y: a = " + w.a.str() + "; b = " + w.b.str() +
                    "; c = " + w.c.str());
  r.lines.push_back("a*b = a*c = " + product.str());

  auto pair = witness_interpretations(w);
  expect(pair.first == load(dir, "pi_b_sx") && pair.second == load(dir, "pi_c_sx"),
         "the stored tables must match the construction");
  expect(!find_isomorphism(pair.first, pair.second), "pi_b and pi_c must not be isomorphic");
  Verdict verdict = distinguisher_search(pair.first, pair.second, 6, 2);
  expect(verdict.outcome == Verdict::Outcome::Unknown,
         "no sentence up to size 6 may distinguish the pair");
  r.lines.push_back("NOT ISOMORPHIC; no distinguishing sentence up to size 6, rank 2");
  r.document["product"] = product.str();
  r.document["verdict"] = verdict_to_json(verdict);
}

inline void tropical_attack(DemoReport& r, const std::string& dir) {
  KInterpretation pi = load(dir, "pi_trop");
  r.lines.push_back("pi over tropical on {a}: " + table_line(pi));

  auto describe = [&](const PerturbationOutcome& run, const std::string& label) {
    std::string after;
    for (std::size_t j = 0; j < run.after.size(); ++j) {
      if (j) after += ", ";
      after += run.finite_literals[j].str() + " = " + rat_str(run.after[j]);
    }
    r.lines.push_back(label + ": delta " + rat_str(run.delta) + ", margin " +
                      rat_str(run.margin) + ", perturbed to [" + after + "]");
  };

  auto run1 = tropical_perturbation(pi, {parse_formula("E x. P(x)")});
  expect(run1.delta == parse_rational("1/2") && run1.margin == Rat(1),
         "one free direction at margin 1 must move by 1/2");
  expect(run1.after == std::vector<Rat>{Rat(1), parse_rational("7/2")},
         "only Q(a) may move, to 7/2");
  expect(run1.differing.str() == "Q(a)", "the moved literal must be Q(a)");
  describe(run1, "sentences {E x. P(x)}");

  auto run2 = tropical_perturbation(pi, {parse_formula("E x. (P(x) & Q(x))")});
  expect(run2.delta == parse_rational("1/4"),
         "degree 2 at margin 1 must move by 1/4");
  expect(run2.after == std::vector<Rat>{parse_rational("5/4"), parse_rational("11/4")},
         "the kernel direction (1, -1) must move P(a) up and Q(a) down");
  expect(run2.differing.str() == "P(a)", "the first moved literal must be P(a)");
  describe(run2, "sentences {E x. (P(x) & Q(x))}");

  auto run3 = tropical_perturbation(pi, {parse_formula("E x. (P(x)^2 | Q(x))")});
  expect(run3.delta == parse_rational("1/4") && run3.margin == Rat(1),
         "the squared literal doubles the row and caps delta at 1/4");
  expect(run3.after == std::vector<Rat>{Rat(1), parse_rational("13/4")},
         "Q(a) must move to 13/4 while the minimal monomial keeps P(a)");
  describe(run3, "sentences {E x. (P(x)^2 | Q(x))}");

  auto run4 =
      tropical_perturbation(pi, {parse_formula("E x. !P(x)"), parse_formula("E x. P(x)")});
  expect(run4.dropped.size() == 1 && run4.retained.size() == 1,
         "the sentence with value zero must be dropped");
  expect(run4.after == run1.after, "the dropped sentence must not change the outcome");
  r.lines.push_back("E x. !P(x) evaluates to zero and is dropped from the constraints");

  bool too_many = false;
  try {
    tropical_perturbation(pi, {parse_formula("E x. P(x)"), parse_formula("E x. Q(x)")});
  } catch (const error& e) {
    too_many = e.code() == errc::degenerate;
  }
  expect(too_many, "two constraints on two finite literals must be rejected");
  r.lines.push_back("two constraining sentences over two finite literals: rejected (no "
                    "kernel room)");

  KInterpretation flat(SemiringTag::tropical(), pi.universe(), pi.vocab());
  flat.set(Literal{"P", true, {"a"}}, Value::tropical(Rat(2)));
  flat.set(Literal{"Q", true, {"a"}}, Value::tropical(Rat(2)));
  bool tie = false;
  try {
    tropical_perturbation(flat, {parse_formula("E x. (P(x) | Q(x))")});
  } catch (const error& e) {
    tie = e.code() == errc::degenerate;
  }
  expect(tie, "a tied minimum must be rejected as degenerate");
  r.lines.push_back("tied minimal monomials (P = Q = 2): rejected as degenerate");
  r.document["single_literal"] = perturbation_to_json(run1);
  r.document["conjunction"] = perturbation_to_json(run2);
  r.document["power"] = perturbation_to_json(run3);
}

}  // namespace demo_detail

inline std::vector<std::string> demo_names() {
  return {"minmax-PQ",       "posbool-equivalence", "why-equivalence",
          "viterbi-19-91",   "viterbi-axioms",      "nat-characteristic",
          "natx-embedding",  "cancellation-boolx",  "cancellation-sx",
          "tropical-attack"};
}

inline DemoReport run_demo(const std::string& scenario, const std::string& data_dir) {
  DemoReport report;
  report.scenario = scenario;
  report.document["scenario"] = scenario;
  if (scenario == "minmax-PQ")
    demo_detail::minmax_pq(report, data_dir);
  else if (scenario == "posbool-equivalence")
    demo_detail::posbool_equivalence(report, data_dir);
  else if (scenario == "why-equivalence")
    demo_detail::why_equivalence(report, data_dir);
  else if (scenario == "viterbi-19-91")
    demo_detail::viterbi_19_91(report, data_dir);
  else if (scenario == "viterbi-axioms")
    demo_detail::viterbi_axioms(report, data_dir);
  else if (scenario == "nat-characteristic")
    demo_detail::nat_characteristic_demo(report, data_dir);
  else if (scenario == "natx-embedding")
    demo_detail::natx_embedding_demo(report, data_dir);
  else if (scenario == "cancellation-boolx")
    demo_detail::cancellation_boolx(report, data_dir);
  else if (scenario == "cancellation-sx")
    demo_detail::cancellation_sx(report, data_dir);
  else if (scenario == "tropical-attack")
    demo_detail::tropical_attack(report, data_dir);
  else
    fail(errc::config, "unknown scenario '" + scenario + "'");
  report.document["lines"] = report.lines;
  return report;
}

}  // namespace srmt
