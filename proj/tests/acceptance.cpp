#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srmt/demos.hpp"
#include "srmt/json_io.hpp"

using namespace srmt;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string data_dir() { return SRMT_DATA_DIR; }

KInterpretation load(const std::string& name) {
  return load_interpretation(data_dir() + "/" + name + ".json");
}

Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// All model-defining one-element viterbi tables over {P/1, Q/1} whose
/// nonzero side takes a value from the list.
std::vector<KInterpretation> one_element_grid(const std::vector<Rat>& nonzero) {
  std::vector<KInterpretation> out;
  Universe uni({"a"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  for (bool p_pos : {true, false})
    for (const Rat& pv : nonzero)
      for (bool q_pos : {true, false})
        for (const Rat& qv : nonzero) {
          KInterpretation pi(SemiringTag::viterbi(), uni, vocab);
          pi.set(Literal{"P", p_pos, {"a"}}, Value::viterbi(pv));
          pi.set(Literal{"Q", q_pos, {"a"}}, Value::viterbi(qv));
          out.push_back(std::move(pi));
        }
  return out;
}

std::string criterion1() {
  KInterpretation pi_v = load("pi_v");
  FormulaPtr phi = parse_formula("A x. (P(x) | Q(x))");
  Value direct = evaluate(pi_v, phi);
  expect(direct == Value::viterbi(frac(9, 20)), "forall value must be exactly 9/20");

  KInterpretation twin = load("pi_natx");
  Value tv = evaluate(twin, phi);
  expect(tv == Value::parse(twin.tag(), "x*z + y*z"),
         "polynomial twin must evaluate to x*z + y*z");

  std::map<std::string, Value> assignment = {{"w", Value::viterbi(frac(2, 5))},
                                             {"x", Value::viterbi(frac(3, 10))},
                                             {"y", Value::viterbi(frac(9, 10))},
                                             {"z", Value::viterbi(frac(1, 2))}};
  Homomorphism h = universal_hom(twin.tag(), SemiringTag::viterbi(), assignment);
  expect(compose_hom(h, twin) == pi_v, "assignment must reproduce the viterbi table");
  expect(apply_hom(h, tv) == direct, "mapping the twin value must give 9/20 again");
  return "9/20 exact, twin x*z + y*z, homomorphism round trip bit-exact";
}

std::string criterion2() {
  KInterpretation pi_xy = load("pi_xy");
  KInterpretation pi_yx = load("pi_yx");
  SeparatingSet family = posbool_family(pi_xy.tag().vars());
  expect(family.pairs.size() == 4, "four truth assignments expected");
  const char* suffix[] = {"none", "x", "y", "xy"};
  for (std::size_t i = 0; i < 4; ++i) {
    KInterpretation img_a = compose_hom(family.pairs[i].left, pi_xy);
    KInterpretation img_b = compose_hom(family.pairs[i].right, pi_yx);
    expect(img_a == load(std::string("img_xy_") + suffix[i]),
           std::string("stored image table mismatch for img_xy_") + suffix[i]);
    expect(img_b == load(std::string("img_yx_") + suffix[i]),
           std::string("stored image table mismatch for img_yx_") + suffix[i]);
    expect(bool(find_isomorphism(img_a, img_b)),
           std::string("image pair must be isomorphic under ") + suffix[i]);
  }
  Verdict verdict = certify_equivalence(pi_xy, pi_yx, family);
  expect(verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "certification must succeed");
  expect(!find_isomorphism(pi_xy, pi_yx), "the originals must not be isomorphic");
  return "four image pairs match cell-for-cell and certify; originals non-isomorphic";
}

std::string criterion3() {
  KInterpretation pi_b = load("pi_xy_why");
  KInterpretation pi_c = load("pi_yx_why");
  SeparatingSet family = why_family(pi_b.tag().vars(), {{"x", "y"}, {"y", "x"}});
  expect(family.pairs.size() == 4, "four subsets expected");
  Verdict verdict = certify_equivalence(pi_b, pi_c, family);
  expect(verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "certification must succeed");
  std::vector<std::map<std::string, std::string>> want = {
      {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}},
      {{"a", "d"}, {"b", "c"}, {"c", "b"}, {"d", "a"}},
      {{"a", "c"}, {"b", "d"}, {"c", "a"}, {"d", "b"}},
      {{"a", "b"}, {"b", "a"}, {"c", "c"}, {"d", "d"}}};
  for (std::size_t i = 0; i < 4; ++i)
    expect(verdict.pairs[i].bijection == want[i],
           "image isomorphism differs from the expected bijection at pair " +
               std::to_string(i));
  expect(!find_isomorphism(pi_b, pi_c), "the originals must not be isomorphic");
  return "permutation family certifies with the expected image bijections";
}

std::string criterion4() {
  KInterpretation pi_pq = load("pi_pq");
  KInterpretation pi_qp = load("pi_qp");
  Verdict verdict = certify_equivalence(pi_pq, pi_qp, minmax_threshold_family(4));
  expect(verdict.outcome == Verdict::Outcome::CertifiedEquivalent,
         "threshold certification must succeed");
  expect(!find_isomorphism(pi_pq, pi_qp), "the originals must not be isomorphic");

  SemiringTag k3 = SemiringTag::minmax(3);
  auto pair = lattice_counterexample(k3, Value::level(k3, 1), Value::level(k3, 2));
  Verdict lattice = certify_equivalence(pair.first, pair.second, minmax_threshold_family(3));
  expect(lattice.outcome == Verdict::Outcome::CertifiedEquivalent,
         "lattice pair certification must succeed");
  expect(!find_isomorphism(pair.first, pair.second),
         "the lattice pair must not be isomorphic");
  return "threshold certification succeeds for the level tables and the K3 pair";
}

std::string criterion5() {
  KInterpretation p19 = load("pi_19");
  KInterpretation p91 = load("pi_91");
  FormulaPtr probe = parse_formula("E x. (P(x) & Q(x)^2)");
  expect(evaluate(p19, probe) == Value::viterbi(frac(81, 1000)),
         "probe sentence must evaluate to 81/1000");
  expect(evaluate(p91, probe) == Value::viterbi(frac(9, 1000)),
         "probe sentence must evaluate to 9/1000");
  Verdict verdict = distinguisher_search(p19, p91, 6, 2);
  expect(verdict.outcome == Verdict::Outcome::Distinguished,
         "a witness within size 6 must exist");
  expect(formula_size(verdict.witness) <= 6, "witness must respect the size bound");
  expect(*verdict.value_a != *verdict.value_b, "witness values must differ exactly");
  expect(evaluate(p19, verdict.witness) == *verdict.value_a &&
             evaluate(p91, verdict.witness) == *verdict.value_b,
         "witness values must re-evaluate exactly");
  return "witness '" + print_formula(verdict.witness) + "' separates with exact values " +
         verdict.value_a->str() + " vs " + verdict.value_b->str();
}

void check_schedule(const Rat& eps, const std::vector<Nat>& exponents) {
  expect(exponents.at(0) == 1, "schedules start at exponent 1");
  Rat base = Rat(1) - eps;
  Nat sum = exponents[0];
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    expect(rat_pow(base, exponents[i]) < rat_pow(eps, sum),
           "exponent " + exponents[i].get_str() + " must satisfy the dominance bound");
    expect(rat_pow(base, exponents[i] - 1) >= rat_pow(eps, sum),
           "exponent " + exponents[i].get_str() + " must be minimal");
    sum += exponents[i];
  }
}

std::string criterion6() {
  ExponentSchedule half = exponent_schedule(frac(1, 2), 4);
  expect(half.exponents == std::vector<Nat>{1, 2, 4, 8},
         "schedule for 1/2 over four literals must be (1,2,4,8)");
  check_schedule(frac(1, 2), half.exponents);
  ExponentSchedule tenth = exponent_schedule(frac(1, 10), 2);
  expect(tenth.exponents == std::vector<Nat>{1, 22},
         "schedule for 1/10 over two literals must be (1,22)");
  check_schedule(frac(1, 10), tenth.exponents);
  return "schedules (1,2,4,8) and (1,22) with minimality at every step";
}

KInterpretation relabel_two(const KInterpretation& pi) {
  KInterpretation out(pi.tag(), pi.universe(), pi.vocab());
  for (const auto& [lit, value] : pi.nonzero_entries()) {
    Literal moved = lit;
    for (auto& arg : moved.args) arg = arg == "a" ? "b" : "a";
    out.set(moved, value);
  }
  return out;
}

std::string criterion7() {
  Rat eps = frac(1, 4);
  std::vector<Rat> grid = {frac(1, 4), frac(1, 2), frac(3, 4), Rat(1)};
  std::vector<KInterpretation> tables = one_element_grid(grid);
  expect(tables.size() == 64, "the one-element grid must have 64 tables");

  std::size_t agreements = 0;
  bool pinned_schedule = false;
  for (const KInterpretation& a : tables) {
    CharacteristicSentence chi = viterbi_characteristic(a, eps);
    if (!pinned_schedule) {
      expect(chi.schedule.exponents == std::vector<Nat>{1, 5},
             "one-element schedule at 1/4 must be (1,5)");
      pinned_schedule = true;
    }
    Value self = evaluate(a, chi.sentence);
    for (const KInterpretation& b : tables) {
      if (evaluate(b, chi.sentence) != self) continue;
      ++agreements;
      expect(bool(find_isomorphism(a, b)),
             "agreement on the characteristic must force isomorphism");
    }
  }
  expect(agreements == 64, "each table must agree exactly with itself");

  std::mt19937_64 rng(20240823);
  std::vector<Rat> values = grid;
  auto random_table = [&]() {
    KInterpretation pi(SemiringTag::viterbi(), Universe({"a", "b"}),
                       Vocabulary({{"P", 1}, {"Q", 1}}));
    for (const std::string& sym : {std::string("P"), std::string("Q")})
      for (const std::string& elem : {std::string("a"), std::string("b")}) {
        bool positive = rng() % 2 == 0;
        pi.set(Literal{sym, positive, {elem}}, Value::viterbi(values[rng() % values.size()]));
      }
    return pi;
  };

  bool pinned_two = false;
  for (int round = 0; round < 24; ++round) {
    KInterpretation a = random_table();
    CharacteristicSentence chi = viterbi_characteristic(a, eps);
    if (!pinned_two) {
      expect(chi.schedule.exponents == std::vector<Nat>{1, 5, 29, 169},
             "two-element schedule at 1/4 must be (1,5,29,169)");
      pinned_two = true;
    }
    Value self = evaluate(a, chi.sentence);
    KInterpretation swapped = relabel_two(a);
    expect(evaluate(swapped, chi.sentence) == self,
           "a relabeled copy must agree on the characteristic");
    expect(bool(find_isomorphism(a, swapped)), "a relabeled copy must be isomorphic");
    for (int probes = 0; probes < 3; ++probes) {
      KInterpretation b = random_table();
      if (evaluate(b, chi.sentence) == self)
        expect(bool(find_isomorphism(a, b)),
               "agreement on the characteristic must force isomorphism");
    }
  }
  return "64x64 exhaustive and 24-round two-element suite: agreement forces isomorphism";
}

std::string criterion8() {
  KInterpretation p19 = load("pi_19");
  AxiomSet axioms = viterbi_axiomatisation(p19);
  expect(axioms.sentences.size() == 5, "four sorting axioms plus the characteristic");
  expect(axioms.epsilon && *axioms.epsilon == frac(1, 10),
         "the axiomatisation must use the table's own value gap 1/10");
  expect(axioms.exponents == std::vector<Nat>{1, 22}, "exponents must be (1,22)");

  std::vector<Value> self;
  for (const FormulaPtr& f : axioms.sentences) self.push_back(evaluate(p19, f));

  std::vector<Rat> grid = {frac(1, 4),  frac(1, 2), frac(3, 4),
                           Rat(1),      frac(1, 10), frac(9, 10)};
  std::vector<KInterpretation> tables = one_element_grid(grid);
  expect(tables.size() == 144, "the extended grid must have 144 tables");
  std::size_t agreeing = 0;
  for (const KInterpretation& b : tables) {
    bool agrees = true;
    for (std::size_t i = 0; i < axioms.sentences.size() && agrees; ++i)
      agrees = evaluate(b, axioms.sentences[i]) == self[i];
    bool iso = bool(find_isomorphism(p19, b));
    expect(agrees == iso, "agreement on the axiom set must match isomorphism");
    if (agrees) ++agreeing;
  }
  expect(agreeing == 1, "exactly one grid table may agree with pi_19");
  return "144 grid tables: agreement on all five axioms holds exactly for pi_19 itself";
}

std::string criterion9() {
  for (unsigned c = 2; c <= 4; ++c)
    for (unsigned k = 1; k <= 4; ++k) {
      Nat e = nat_exponent(Nat(c), Nat(k));
      std::set<Nat> sums;
      std::size_t multisets = 0;
      std::vector<unsigned> cur(k, 0);
      while (true) {
        Nat sum = 0;
        for (unsigned v : cur) sum += nat_pow(Nat(v), e);
        sums.insert(sum);
        ++multisets;
        std::size_t i = k;
        while (i > 0 && cur[i - 1] + 1 == c) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[i - 1];
      }
      expect(sums.size() == multisets,
             "power sums must separate the multisets for c=" + std::to_string(c) +
                 ", k=" + std::to_string(k));
    }

  expect(nat_exponent(Nat(2), Nat(3)) == 2, "nat_exponent(2,3) must be 2");
  expect(nat_pow(Nat(2), Nat(2)) > Nat(3) * nat_pow(Nat(1), Nat(2)), "2^2 > 3*1^2");
  expect(nat_pow(Nat(2), Nat(1)) <= Nat(3) * nat_pow(Nat(1), Nat(1)), "2^1 <= 3*1^1");
  expect(nat_exponent(Nat(10), Nat(2)) == 7, "nat_exponent(10,2) must be 7");
  expect(nat_pow(Nat(10), Nat(7)) > Nat(2) * nat_pow(Nat(9), Nat(7)), "10^7 > 2*9^7");
  expect(nat_pow(Nat(10), Nat(6)) <= Nat(2) * nat_pow(Nat(9), Nat(6)), "10^6 <= 2*9^6");
  return "power sums separate all multisets for c <= 4, k <= 4; exponents 2 and 7 minimal";
}

std::string criterion10() {
  VarSet vars({"x1", "x2"});
  SemiringTag tag = SemiringTag::natpoly(vars);
  Homomorphism h = natx_embedding(2, 2, vars);
  std::vector<Polynomial> bounded = bounded_natpolys(vars, 2, 2);
  expect(bounded.size() == 16, "C=2, n=2 over two variables gives 16 polynomials");
  std::set<Nat> images;
  for (const Polynomial& p : bounded) images.insert(apply_hom(h, Value::poly(tag, p)).as_nat());
  std::set<Nat> want;
  for (unsigned long v = 0; v < 16; ++v) want.insert(Nat(v));
  expect(images == want, "the embedding must be a bijection onto 0..15");

  VarSet tvar({"t"});
  SemiringTag ttag = SemiringTag::natpoly(tvar);
  Universe uni({"a"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  std::vector<Polynomial> tpolys = bounded_natpolys(tvar, 2, 2);
  expect(tpolys.size() == 4, "one variable gives four bounded polynomials");
  KInterpretation seed(ttag, uni, vocab);
  seed.set(Literal{"P", true, {"a"}}, Value::parse(ttag, "t"));
  seed.set(Literal{"Q", true, {"a"}}, Value::parse(ttag, "1 + t"));
  WeightedCharacteristic chi = natx_characteristic(seed, 2, 2);
  expect(chi.q == 4, "the radix must be 2^(2^1) = 4");

  std::set<std::string> seen;
  std::size_t rows = 0;
  for (const Polynomial& p : tpolys)
    for (const Polynomial& pn : tpolys)
      for (const Polynomial& q : tpolys)
        for (const Polynomial& qn : tpolys) {
          KInterpretation row(ttag, uni, vocab);
          row.set(Literal{"P", true, {"a"}}, Value::poly(ttag, p));
          row.set(Literal{"P", false, {"a"}}, Value::poly(ttag, pn));
          row.set(Literal{"Q", true, {"a"}}, Value::poly(ttag, q));
          row.set(Literal{"Q", false, {"a"}}, Value::poly(ttag, qn));
          ++rows;
          expect(seen.insert(evaluate(row, chi.sentence).str()).second,
                 "the radix-4 characteristic must separate all bounded rows");
        }
  expect(rows == 256, "four bounded values over four literals give 256 rows");
  return "embedding bijective onto 0..15; radix-4 characteristic separates all 256 rows";
}

std::string criterion11() {
  Universe uni({"a"});
  Vocabulary vocab({{"P", 1}, {"Q", 1}});
  SemiringTag tag = SemiringTag::nat();
  auto row = [&](unsigned p, unsigned pn, unsigned q, unsigned qn) {
    KInterpretation pi(tag, uni, vocab);
    pi.set(Literal{"P", true, {"a"}}, Value::nat(p));
    pi.set(Literal{"P", false, {"a"}}, Value::nat(pn));
    pi.set(Literal{"Q", true, {"a"}}, Value::nat(q));
    pi.set(Literal{"Q", false, {"a"}}, Value::nat(qn));
    return pi;
  };

  WeightedCharacteristic chi = nat_characteristic(row(1, 0, 2, 0), 3);
  expect(chi.q == 3 && chi.power == 1, "radix 3 with exponent 1 on one element");
  expect(evaluate(row(1, 0, 2, 0), chi.sentence) == Value::nat(19),
         "the digit example P=1, Q=2 must give the numeral 19");

  std::set<std::string> seen;
  std::size_t rows = 0;
  for (unsigned p = 0; p < 3; ++p)
    for (unsigned pn = 0; pn < 3; ++pn)
      for (unsigned q = 0; q < 3; ++q)
        for (unsigned qn = 0; qn < 3; ++qn) {
          ++rows;
          expect(seen.insert(evaluate(row(p, pn, q, qn), chi.sentence).str()).second,
                 "the radix-3 numeral must separate all rows");
        }
  expect(rows == 81, "values below 3 over four literals give 81 rows");
  return "81 one-element tables: characteristic agreement holds exactly for equal tables";
}

std::string criterion12() {
  SemiringTag bx = SemiringTag::boolpoly(VarSet({"x", "y"}));
  Value a = Value::parse(bx, "x + y + x^2 + x*y + y^2");
  Value b = Value::parse(bx, "x^2 + y^2");
  Value c = Value::parse(bx, "x^2 + x*y + y^2");
  CancellationWitness w = verify_witness(a, b, c);
  expect(sr_mul(w.a, w.b) ==
             Value::parse(bx,
                          "x^3 + x*y^2 + x^2*y + y^3 + x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4"),
         "the product must equal the nine-monomial polynomial exactly");

  SemiringTag ax = SemiringTag::abspoly(VarSet({"x", "y"}));
  verify_witness(Value::parse(ax, "x + y"), Value::parse(ax, "x^2 + y^2"),
                 Value::parse(ax, "x^2 + x*y + y^2"));

  auto [pi_b, pi_c] = witness_interpretations(w);

  SemiringTag generic_tag = SemiringTag::boolpoly(VarSet({"u", "v"}));
  KInterpretation generic(generic_tag, pi_b.universe(), pi_b.vocab());
  generic.set(Literal{"R", true, {"d"}}, Value::parse(generic_tag, "u"));
  generic.set(Literal{"R", true, {"e"}}, Value::parse(generic_tag, "v"));
  Homomorphism swap = Homomorphism::var_map(generic_tag, generic_tag,
                                            {{"u", "v"}, {"v", "u"}});
  Homomorphism h_b = universal_hom(generic_tag, bx, {{"u", w.a}, {"v", w.b}});
  Homomorphism h_c = universal_hom(generic_tag, bx, {{"u", w.a}, {"v", w.c}});

  std::size_t sentences = 0;
  SentenceEnumerator stream(pi_b.vocab(), 8, 2);
  stream.for_each([&](const FormulaPtr& f) {
    ++sentences;
    Value vb = evaluate(pi_b, f);
    Value vc = evaluate(pi_c, f);
    expect(vb == vc, "the pair must agree on '" + print_formula(f) + "'");
    Value p = evaluate(generic, f);
    expect(apply_hom(swap, p) == p,
           "the provenance of '" + print_formula(f) + "' must be swap-invariant");
    expect(apply_hom(h_b, p) == vb && apply_hom(h_c, p) == vc,
           "specializing the provenance must reproduce both values");
    return true;
  });
  expect(sentences > 0, "the enumeration must produce sentences");

  Verdict verdict = distinguisher_search(pi_b, pi_c, 8, 2);
  expect(verdict.outcome == Verdict::Outcome::Unknown,
         "no distinguishing sentence may exist within size 8, rank 2");
  std::ostringstream note;
  note << "9-monomial product exact; " << sentences
       << " sentences agree with swap-invariant provenance; search Unknown";
  return note.str();
}

std::string criterion13() {
  KInterpretation pi(SemiringTag::tropical(), Universe({"a"}),
                     Vocabulary({{"P", 1}, {"Q", 1}}));
  pi.set(Literal{"P", true, {"a"}}, Value::tropical(Rat(1)));
  pi.set(Literal{"Q", true, {"a"}}, Value::tropical(Rat(3)));

  auto check_instance = [&](const std::string& text, const std::vector<Rat>& after) {
    PerturbationOutcome out = tropical_perturbation(pi, {parse_formula(text)});
    expect(out.after == after, "perturbed values mismatch for " + text);
    for (const FormulaPtr& f : out.retained)
      expect(evaluate(pi, f) == evaluate(out.perturbed, f),
             "agreement must be exact for " + text);
    expect(!find_isomorphism(pi, out.perturbed),
           "the perturbed table must not be isomorphic for " + text);
    for (std::size_t i = 0; i < out.retained.size(); ++i) {
      auto height = [&](const Monomial& m) {
        Rat h = 0;
        for (std::size_t j = 0; j < out.variables.size(); ++j)
          h += Rat(m.exponent(out.variables[j])) * out.after[j];
        return h;
      };
      Rat best = height(out.argmins[i]);
      for (const auto& [mono, coeff] : out.provenance[i].terms())
        if (!(mono == out.argmins[i]))
          expect(best < height(mono), "the dominant monomial must stay strictly minimal");
    }
  };

  check_instance("E x. P(x)", {Rat(1), frac(7, 2)});
  check_instance("E x. (P(x) & Q(x))", {frac(5, 4), frac(11, 4)});

  bool refused = false;
  try {
    tropical_perturbation(pi, {parse_formula("E x. P(x)"), parse_formula("E x. Q(x)")});
  } catch (const error& e) {
    refused = e.code() == errc::degenerate;
  }
  expect(refused, "two sentences on two finite literals must be refused");
  return "both instances agree exactly, stay non-isomorphic, keep their dominant monomials";
}

std::vector<SemiringTag> all_tags() {
  VarSet xy({"x", "y"});
  return {SemiringTag::boolean(),     SemiringTag::nat(),
          SemiringTag::minmax(4),     SemiringTag::viterbi(),
          SemiringTag::tropical(),    SemiringTag::natpoly(xy),
          SemiringTag::boolpoly(xy),  SemiringTag::whypoly(xy),
          SemiringTag::abspoly(xy),   SemiringTag::posbool(xy)};
}

Value sample_value(const SemiringTag& tag, std::mt19937_64& rng) {
  switch (tag.kind()) {
    case Kind::Bool: return Value::boolean(rng() % 2 == 0);
    case Kind::Nat: return Value::nat(Nat(rng() % 10));
    case Kind::MinMax: return Value::level(tag, rng() % tag.order());
    case Kind::Viterbi: return Value::viterbi(frac(long(rng() % 7), 6));
    case Kind::Tropical:
      if (rng() % 5 == 0) return Value::tropical_inf();
      return Value::tropical(frac(long(rng() % 9), 4));
    default: {
      std::vector<std::pair<Monomial, Nat>> terms;
      std::size_t count = rng() % 4;
      for (std::size_t i = 0; i < count; ++i) {
        Monomial m = Monomial::unit();
        for (const std::string& name : tag.vars().names()) {
          unsigned long e = rng() % 3;
          if (e) m = m.times(Monomial::var(name, e));
        }
        terms.emplace_back(std::move(m), Nat(1 + rng() % 3));
      }
      return Value::poly(tag, Polynomial::normalized(tag.kind(), std::move(terms)));
    }
  }
}

void laws_suite(std::mt19937_64& rng) {
  for (const SemiringTag& tag : all_tags()) {
    Value zero = Value::zero(tag);
    Value one = Value::one(tag);
    for (int round = 0; round < 48; ++round) {
      Value a = sample_value(tag, rng);
      Value b = sample_value(tag, rng);
      Value c = sample_value(tag, rng);
      expect(sr_add(a, b) == sr_add(b, a), tag.str() + ": addition must commute");
      expect(sr_add(sr_add(a, b), c) == sr_add(a, sr_add(b, c)),
             tag.str() + ": addition must associate");
      expect(sr_mul(a, b) == sr_mul(b, a), tag.str() + ": multiplication must commute");
      expect(sr_mul(sr_mul(a, b), c) == sr_mul(a, sr_mul(b, c)),
             tag.str() + ": multiplication must associate");
      expect(sr_mul(a, sr_add(b, c)) == sr_add(sr_mul(a, b), sr_mul(a, c)),
             tag.str() + ": multiplication must distribute");
      expect(sr_add(a, zero) == a && sr_mul(a, one) == a && sr_mul(a, zero) == zero,
             tag.str() + ": units must behave");
    }
  }
}

void polynomial_suite(std::mt19937_64& rng) {
  VarSet xy({"x", "y"});
  for (Kind kind : {Kind::BoolPoly, Kind::WhyPoly, Kind::AbsPoly, Kind::PosBool}) {
    SemiringTag tag = SemiringTag::poly(kind, xy);
    for (int round = 0; round < 60; ++round) {
      Value v = sr_mul(sample_value(tag, rng), sr_add(sample_value(tag, rng),
                                                      sample_value(tag, rng)));
      const Polynomial& p = v.as_poly();
      for (const auto& [mono, coeff] : p.terms()) {
        expect(coeff == 1, "unit coefficients required outside the free semiring");
        if (kind == Kind::WhyPoly || kind == Kind::PosBool)
          for (const auto& [name, e] : mono.exps)
            expect(e == 1, "multilinear normalization must cap exponents");
        if (kind == Kind::AbsPoly || kind == Kind::PosBool)
          for (const auto& [other, oc] : p.terms())
            if (!(other == mono))
              expect(!mono_absorbs(other, mono), "antichains admit no absorption");
      }
      expect(sr_add(v, v) == v, "addition must be idempotent here");
    }
  }
}

void fundamental_suite(std::mt19937_64& rng) {
  VarSet xy({"x", "y"});
  SemiringTag np = SemiringTag::natpoly(xy);
  std::vector<FormulaPtr> formulas = {
      parse_formula("E x. (P(x) & Q(x))"), parse_formula("A x. (P(x) | Q(x))"),
      parse_formula("E x. A y. (P(x) | !Q(y))"), parse_formula("E x. (P(x) & Q(x)^2)"),
      parse_formula("E x. 3 * P(x)")};
  for (int round = 0; round < 16; ++round) {
    Universe uni = round % 2 ? Universe({"a", "b"}) : Universe({"a"});
    Vocabulary vocab({{"P", 1}, {"Q", 1}});
    KInterpretation pi(np, uni, vocab);
    for (const Literal& lit : lit_enum(vocab, uni.elements()))
      pi.set(lit, sample_value(np, rng));
    std::map<std::string, Value> assignment = {{"x", Value::nat(Nat(rng() % 5))},
                                               {"y", Value::nat(Nat(rng() % 5))}};
    Homomorphism h = universal_hom(np, SemiringTag::nat(), assignment);
    KInterpretation image = compose_hom(h, pi);
    for (const FormulaPtr& f : formulas)
      expect(apply_hom(h, evaluate(pi, f)) == evaluate(image, f),
             "evaluation must commute with the homomorphism");
  }

  SemiringTag mm = SemiringTag::minmax(4);
  for (int round = 0; round < 16; ++round) {
    Universe uni({"a", "b"});
    Vocabulary vocab({{"P", 1}, {"Q", 1}});
    KInterpretation pi(mm, uni, vocab);
    for (const Literal& lit : lit_enum(vocab, uni.elements()))
      pi.set(lit, Value::level(mm, rng() % 4));
    Homomorphism h = Homomorphism::threshold(mm, 1 + rng() % 3);
    KInterpretation image = compose_hom(h, pi);
    for (const FormulaPtr& f : formulas)
      expect(apply_hom(h, evaluate(pi, f)) == evaluate(image, f),
             "thresholding must commute with evaluation");
  }
}

void distinct_tuple_suite() {
  for (const SemiringTag& tag : all_tags())
    for (std::size_t m = 0; m <= 3; ++m) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < m; ++i) names.push_back(std::string(1, char('a' + i)));
      Universe uni = names.empty() ? Universe::empty() : Universe(names);
      KInterpretation pi(tag, uni, Vocabulary{});
      for (std::size_t n = 1; n <= 3; ++n) {
        FormulaPtr sentence;
        if (n == 1) {
          sentence = fml::exists("x1", fml::eq("x1", "x1"));
        } else {
          std::vector<std::string> vars;
          for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
          std::vector<FormulaPtr> parts;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
              parts.push_back(fml::neq(vars[i], vars[j]));
          FormulaPtr body = fml::conj(std::move(parts));
          for (std::size_t i = n; i > 0; --i) body = fml::exists(vars[i - 1], std::move(body));
          sentence = std::move(body);
        }
        unsigned long count = 1;
        for (std::size_t i = 0; i < n; ++i) count *= (m >= i ? m - i : 0);
        Value want = Value::zero(tag);
        for (unsigned long i = 0; i < count; ++i) want = sr_add(want, Value::one(tag));
        expect(evaluate(pi, sentence) == want,
               tag.str() + ": distinct-tuple count mismatch at m=" + std::to_string(m) +
                   ", n=" + std::to_string(n));
      }
    }
}

void sorting_suite(std::mt19937_64& rng) {
  auto sorted_product = [](std::vector<Value> values, std::size_t take) {
    std::sort(values.begin(), values.end(),
              [](const Value& p, const Value& q) { return q < p; });
    Value out = Value::one(values.front().tag());
    for (std::size_t i = 0; i < take; ++i) out = sr_mul(out, values[i]);
    return out;
  };

  SemiringTag vit = SemiringTag::viterbi();
  for (std::size_t n = 1; n <= 3; ++n) {
    Vocabulary vocab({{"P", 1}, {"Q", 1}});
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    Universe uni(names);
    AxiomSet axioms = sorting_axioms(vocab, n, vit);
    for (int round = 0; round < 8; ++round) {
      KInterpretation pi(vit, uni, vocab);
      for (const Literal& lit : lit_enum(vocab, names))
        pi.set(lit, Value::viterbi(frac(long(rng() % 5), 4)));
      std::size_t at = 0;
      for (const std::string& sym : {std::string("P"), std::string("Q")})
        for (bool positive : {true, false})
          for (std::size_t i = 1; i <= n; ++i) {
            std::vector<Value> row;
            for (const std::string& elem : names)
              row.push_back(pi.value(Literal{sym, positive, {elem}}));
            expect(evaluate(pi, axioms.sentences.at(at++)) == sorted_product(row, i),
                   "sorting value must be the product of the largest literal values");
          }
    }
  }

  Vocabulary pair_vocab({{"R", 2}});
  Universe uni({"a", "b"});
  AxiomSet axioms = sorting_axioms(pair_vocab, 2, vit);
  for (int round = 0; round < 6; ++round) {
    KInterpretation pi(vit, uni, pair_vocab);
    for (const Literal& lit : lit_enum(pair_vocab, uni.elements()))
      pi.set(lit, Value::viterbi(frac(long(rng() % 5), 4)));
    std::size_t at = 0;
    for (bool positive : {true, false})
      for (std::size_t i = 1; i <= 4; ++i) {
        std::vector<Value> row;
        for (const std::string& lhs : uni.elements())
          for (const std::string& rhs : uni.elements())
            row.push_back(pi.value(Literal{"R", positive, {lhs, rhs}}));
        expect(evaluate(pi, axioms.sentences.at(at++)) == sorted_product(row, i),
               "binary sorting value must match the brute-force product");
      }
  }
}

std::string criterion14() {
  std::mt19937_64 rng(20240823);
  laws_suite(rng);
  polynomial_suite(rng);
  fundamental_suite(rng);
  distinct_tuple_suite();
  sorting_suite(rng);
  return "laws, normalization invariants, homomorphism commutation, distinct-tuple "
         "counts and sorting values all hold";
}

std::string run(int n) {
  switch (n) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    case 11: return criterion11();
    case 12: return criterion12();
    case 13: return criterion13();
    default: return criterion14();
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <1..14>\n";
    return 2;
  }
  int n = std::atoi(argv[1]);
  if (n < 1 || n > 14) {
    std::cerr << "usage: acceptance <1..14>\n";
    return 2;
  }
  auto start = std::chrono::steady_clock::now();
  std::string note;
  std::string failure;
  try {
    note = run(n);
  } catch (const Failure& f) {
    failure = f.what;
  } catch (const std::exception& e) {
    failure = std::string("unexpected error: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  if (failure.empty())
    line << "PASS " << n << ": " << note;
  else
    line << "FAIL " << n << ": " << failure;
  line << " (" << std::fixed << std::setprecision(1) << seconds << "s)";
  std::cout << line.str() << "\n";
  return failure.empty() ? 0 : 1;
}
