// twistkit: exact self-twist detection and degree-4 spin lifts for classical
// eigen-systems, with a JSON report mode on every subcommand.
//
// Exit codes: 0 success, 1 verification failure, 2 input/usage error.
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "twistkit/embeddings.hpp"
#include "twistkit/factor.hpp"
#include "twistkit/json_io.hpp"
#include "twistkit/paper_examples.hpp"
#include "twistkit/symplectic.hpp"
#include "twistkit/twists.hpp"
#include "twistkit/yoshida.hpp"

using namespace twistkit;
using io::Json;

namespace {

struct Output {
  bool json = false;

  // Emits either the JSON report or the accumulated human-readable lines and
  // maps the verification verdict onto the exit code.
  int finish(const std::string& command, Json payload, const std::string& human,
             bool ok) const {
    if (json) {
      Json report = Json::object();
      report["schema"] = io::kReportSchema;
      report["command"] = command;
      report["ok"] = ok;
      report["result"] = std::move(payload);
      std::printf("%s\n", report.dump(2).c_str());
    } else {
      std::fputs(human.c_str(), stdout);
    }
    return ok ? 0 : 1;
  }
};

std::string poly_str(const RationalPoly& p) { return p.to_display_string(); }

std::string elem_str(const NFElem& e) { return e.rep().to_display_string(); }

// Default fixtures directory: $TWISTKIT_FIXTURES, else ./fixtures.
std::string default_fixtures() {
  if (const char* env = std::getenv("TWISTKIT_FIXTURES")) return env;
  return "fixtures";
}

unsigned long long default_seed() {
  if (const char* env = std::getenv("TWISTKIT_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

Json character_summary(const DirichletCharacter& chi) {
  Json j = io::character_to_json(chi);
  j["conductor"] = chi.conductor();
  j["order"] = chi.order();
  return j;
}

// ---------------------------------------------------------------------- algebra

int run_algebra_factor(const Output& out, const std::string& in) {
  RationalPoly p = io::poly_from_json(io::read_json_file(in));
  Factorization f = factor_rational_polynomial(p);
  Json j = Json::object();
  j["input"] = io::poly_to_json(p);
  j["unit"] = io::rational_to_json(f.unit);
  Json factors = Json::array();
  std::string human = "unit: " + f.unit.get_str() + "\n";
  for (const PolyFactor& pf : f.factors) {
    Json e = Json::object();
    e["factor"] = io::poly_to_json(pf.factor);
    e["multiplicity"] = pf.multiplicity;
    factors.push_back(e);
    human += "(" + poly_str(pf.factor) + ")^" + std::to_string(pf.multiplicity) + "\n";
  }
  j["factors"] = factors;
  return out.finish("algebra factor", j, human, true);
}

int run_algebra_automorphisms(const Output& out, const std::string& in) {
  NumberFieldPtr K = io::field_from_json(io::read_json_file(in));
  auto auts = field_automorphisms(K);
  Json j = Json::object();
  j["field"] = io::field_to_json(K);
  j["count"] = auts.size();
  j["galois"] = static_cast<int>(auts.size()) == K->degree();
  Json images = Json::array();
  std::string human = "automorphisms of Q[x]/(" + poly_str(K->poly()) + "): " +
                      std::to_string(auts.size()) +
                      (static_cast<int>(auts.size()) == K->degree() ? " (Galois)\n"
                                                                    : " (not Galois)\n");
  for (const auto& g : auts) {
    images.push_back(io::elem_to_json(g.gen_image()));
    human += "  x -> " + elem_str(g.gen_image()) + "\n";
  }
  j["generator_images"] = images;
  return out.finish("algebra automorphisms", j, human, true);
}

int run_algebra_compositum(const Output& out, const std::string& left, const std::string& right) {
  NumberFieldPtr K1 = io::field_from_json(io::read_json_file(left));
  NumberFieldPtr K2 = io::field_from_json(io::read_json_file(right));
  CompositumResult c = compositum(K1, K2);
  Json j = Json::object();
  j["field"] = io::field_to_json(c.field);
  j["degree"] = c.field->degree();
  j["left_generator_image"] = io::elem_to_json(c.left.gen_image());
  j["right_generator_image"] = io::elem_to_json(c.right.gen_image());
  std::string human = "compositum: Q[x]/(" + poly_str(c.field->poly()) + "), degree " +
                      std::to_string(c.field->degree()) + "\n  left generator -> " +
                      elem_str(c.left.gen_image()) + "\n  right generator -> " +
                      elem_str(c.right.gen_image()) + "\n";
  return out.finish("algebra compositum", j, human, true);
}

int run_algebra_roots(const Output& out, const std::string& in, int precision) {
  NumberFieldPtr K = io::field_from_json(io::read_json_file(in));
  auto roots = complex_roots(K->poly(), precision);
  Json j = Json::object();
  j["field"] = io::field_to_json(K);
  j["precision_bits"] = precision;
  Json arr = Json::array();
  std::string human;
  for (const BigComplex& r : roots) {
    auto z = to_complex_double(r);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.15g %+.15gi", z.real(), z.imag());
    arr.push_back(std::string(buf));
    human += std::string(buf) + "\n";
  }
  j["roots"] = arr;
  return out.finish("algebra roots", j, human, true);
}

// ------------------------------------------------------------------------ char

int run_char_info(const Output& out, const std::string& in) {
  DirichletCharacter chi = io::character_from_json(io::read_json_file(in));
  Json j = character_summary(chi);
  std::string human = "modulus: " + std::to_string(chi.modulus()) +
                      "\nconductor: " + std::to_string(chi.conductor()) +
                      "\norder: " + std::to_string(chi.order()) + "\n";
  return out.finish("char info", j, human, true);
}

int run_char_eval(const Output& out, const std::string& in, long at) {
  DirichletCharacter chi = io::character_from_json(io::read_json_file(in));
  NFElem v = chi.evaluate(at);
  Json j = Json::object();
  j["modulus"] = chi.modulus();
  j["at"] = at;
  j["value"] = io::elem_to_json(v);
  return out.finish("char eval", j,
                    "chi(" + std::to_string(at) + ") = " + elem_str(v) + "\n", true);
}

int run_char_unit_group(const Output& out, long modulus) {
  UnitGroup G = UnitGroup::of(modulus);
  Json j = Json::object();
  j["modulus"] = modulus;
  j["phi"] = G.phi();
  j["gens"] = G.gens();
  j["orders"] = G.orders();
  std::string human = "(Z/" + std::to_string(modulus) + ")*: phi = " + std::to_string(G.phi());
  human += "\n  generators:";
  for (size_t i = 0; i < G.gens().size(); ++i)
    human += " " + std::to_string(G.gens()[i]) + " (order " + std::to_string(G.orders()[i]) + ")";
  human += "\n";
  return out.finish("char unit-group", j, human, true);
}

int run_char_theorem1(const Output& out, int genus, int weight, long level) {
  Theorem1Report r = theorem1_hypotheses(genus, weight, level);
  Json j = Json::object();
  j["genus"] = genus;
  j["weight"] = weight;
  j["level"] = level;
  j["parity_ok"] = r.parity_ok;
  j["order_element_ok"] = r.order_element_ok;
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
  j["witness_power_identity"] = r.witness_power_identity;
  j["hypotheses_ok"] = r.hypotheses_ok();
  std::string human = std::string("parity |g-k| odd: ") + (r.parity_ok ? "yes" : "no") +
                      "\norder-2g element: " + (r.order_element_ok ? "yes" : "no");
  if (r.witness)
    human += "\nwitness: " + std::to_string(*r.witness) +
             (r.witness_power_identity ? " (witness^g = -1)" : " (no unit with a^g = -1)");
  human += "\n";
  return out.finish("char theorem1", j, human, r.hypotheses_ok());
}

int run_char_find_sigma(const Output& out, const std::string& in, int genus, int weight) {
  DirichletCharacter psi = io::character_from_json(io::read_json_file(in));
  std::optional<long> a = find_sigma(psi.modulus(), genus, weight, psi);
  Json j = Json::object();
  j["modulus"] = psi.modulus();
  j["genus"] = genus;
  j["weight"] = weight;
  if (a)
    j["sigma"] = *a;
  else
    j["sigma"] = nullptr;
  std::string human = a ? ("sigma = " + std::to_string(*a) + "\n") : "no qualifying residue\n";
  return out.finish("char find-sigma", j, human, a.has_value());
}

// ------------------------------------------------------------------------- gsp

CongruenceKind parse_kind(const std::string& s) {
  if (s == "full") return CongruenceKind::full;
  if (s == "principal") return CongruenceKind::principal;
  if (s == "gamma0") return CongruenceKind::gamma0;
  if (s == "gamma1") return CongruenceKind::gamma1;
  throw std::invalid_argument("unknown congruence kind \"" + s +
                              "\" (expected full, principal, gamma0, or gamma1)");
}

int run_gsp_check(const Output& out, const std::string& in, long modulus,
                  const std::string& kind) {
  RationalMatrix M = io::matrix_from_json(io::read_json_file(in));
  Json j = Json::object();
  j["rows"] = M.rows();
  j["integral"] = M.is_integral();
  bool ok = true;
  std::string human;
  try {
    Rational mu = similitude_factor(M);
    j["similitude"] = io::rational_to_json(mu);
    j["symplectic"] = is_symplectic(M);
    human += "similitude factor: " + mu.get_str() + "\n";
  } catch (const std::domain_error&) {
    j["similitude"] = nullptr;
    j["symplectic"] = false;
    human += "not a symplectic similitude\n";
    ok = false;
  }
  if (modulus > 0) {
    CongruenceKind k = parse_kind(kind);
    bool member = ok && in_congruence_subgroup(M, Integer(modulus), k);
    Json c = Json::object();
    c["modulus"] = modulus;
    c["kind"] = kind;
    c["member"] = member;
    j["congruence"] = c;
    human += kind + "(" + std::to_string(modulus) + ") membership: " + (member ? "yes" : "no") +
             "\n";
    ok = ok && member;
  }
  return out.finish("gsp check", j, human, ok);
}

// ----------------------------------------------------------------------- siegel

int run_siegel_phi(const Output& out, const std::string& in, const std::string& out_path) {
  SiegelFourierExpansion F = io::expansion_from_json(io::read_json_file(in));
  SiegelFourierExpansion G = F.phi();
  if (!out_path.empty()) io::write_json_file(out_path, io::expansion_to_json(G));
  Json j = Json::object();
  j["input_genus"] = F.genus();
  j["input_terms"] = F.terms().size();
  j["input_cusp_truncated"] = F.is_cusp_truncated();
  j["output_genus"] = G.genus();
  j["output_terms"] = G.terms().size();
  j["output_zero"] = G.terms().empty();
  std::string human = "phi: genus " + std::to_string(F.genus()) + " -> " +
                      std::to_string(G.genus()) + ", " + std::to_string(F.terms().size()) +
                      " -> " + std::to_string(G.terms().size()) + " terms\n";
  human += std::string("input cusp-truncated: ") + (F.is_cusp_truncated() ? "yes" : "no") + "\n";
  return out.finish("siegel phi", j, human, true);
}

// ---------------------------------------------------------------------- newform

int run_newform_check(const Output& out, const std::string& in, int precision) {
  EigenSystem E = io::eigensystem_from_json(io::read_json_file(in));
  CheckReport hecke = hecke_consistency(E);
  CheckReport bound = ramanujan_check(E, precision);
  Json j = Json::object();
  j["label"] = E.label();
  j["level"] = E.level();
  j["weight"] = E.weight();
  j["field_degree"] = E.hecke_field()->degree();
  j["prime_bound"] = E.prime_bound();
  j["char"] = character_summary(E.nebentypus());
  j["hecke"] = io::check_report_to_json(hecke);
  j["eigenvalue_bound"] = io::check_report_to_json(bound);
  bool ok = hecke.ok && bound.ok;
  std::string human = E.label() + ": level " + std::to_string(E.level()) + ", weight " +
                      std::to_string(E.weight()) + ", field degree " +
                      std::to_string(E.hecke_field()->degree()) + ", primes up to " +
                      std::to_string(E.prime_bound()) + "\n";
  human += std::string("Hecke recursion: ") + (hecke.ok ? "ok" : "FAIL") + "\n";
  for (const std::string& s : hecke.failures) human += "  " + s + "\n";
  human += std::string("eigenvalue bound: ") + (bound.ok ? "ok" : "FAIL") + "\n";
  for (const std::string& s : bound.failures) human += "  " + s + "\n";
  return out.finish("newform check", j, human, ok);
}

// ----------------------------------------------------------------------- twists

Json cm_to_json(const CmResult& cm) {
  Json j = Json::object();
  switch (cm.kind) {
    case CmResult::Kind::none: j["kind"] = "none"; break;
    case CmResult::Kind::inconclusive: j["kind"] = "inconclusive"; break;
    case CmResult::Kind::cm: j["kind"] = "cm"; break;
  }
  if (cm.character)
    j["character"] = io::character_to_json(*cm.character);
  else
    j["character"] = nullptr;
  j["notes"] = cm.notes;
  return j;
}

int run_twists_detect(const Output& out, const std::string& in, long bound, bool wide) {
  EigenSystem E = io::eigensystem_from_json(io::read_json_file(in));
  TwistGroup T = detect_inner_twists(E, bound, wide);
  FixedFieldResult ff = fixed_field(E, T);
  CmResult cm = is_cm(E, bound);
  Json j = io::twist_group_to_json(T);
  Json ffj = Json::object();
  ffj["poly"] = io::poly_to_json(ff.field->poly());
  ffj["degree"] = ff.field->degree();
  ffj["generator_in_ambient"] = io::elem_to_json(ff.generator_in_ambient);
  ffj["trace_data_inside"] = ff.trace_data_inside;
  j["fixed_field"] = ffj;
  j["cm"] = cm_to_json(cm);
  Json identities = Json::object();
  identities["cocycle"] = cocycle_check(T);
  identities["determinant_relation"] = determinant_relation_check(E, T);
  j["identities"] = identities;

  std::string human = E.label() + ": " + std::to_string(T.elements.size()) + " self-twist(s), " +
                      std::to_string(T.inconclusive.size()) + " inconclusive\n";
  for (const InnerTwist& t : T.elements)
    human += "  x -> " + elem_str(t.automorphism.gen_image()) + "  with chi of conductor " +
             std::to_string(t.character.conductor()) + " (order " +
             std::to_string(t.character.order()) + ")\n";
  for (const auto& g : T.inconclusive)
    human += "  x -> " + elem_str(g.gen_image()) + "  inconclusive (starved residue class)\n";
  human += "fixed field degree: " + std::to_string(ff.field->degree()) + "\n";
  human += "cm: " + j["cm"]["kind"].get<std::string>() + "\n";
  return out.finish("twists detect", j, human, true);
}

int run_twists_synth(const Output& out, const std::string& out_path, long level, int weight,
                     long bound, unsigned long long seed) {
  // Demonstration synthesis over Q(i): the prescribed group is {identity} and,
  // when the level admits it, one quadratic twist through complex conjugation.
  auto K = NumberField::make(RationalPoly({Rational(1), Rational(0), Rational(1)}));
  std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
  pairs.emplace_back(FieldAutomorphism(K, K->generator()), DirichletCharacter::trivial(1, K));
  auto quads = quadratic_characters(level, K);
  for (const DirichletCharacter& chi : quads) {
    if (chi.conductor() == 1) continue;
    pairs.emplace_back(FieldAutomorphism(K, -K->generator()), chi.primitivize());
    break;
  }
  EigenSystem E = generate_synthetic(K, pairs, level, weight, bound, seed);
  io::write_json_file(out_path, io::eigensystem_to_json(E));
  Json j = Json::object();
  j["label"] = E.label();
  j["level"] = level;
  j["weight"] = weight;
  j["prime_bound"] = bound;
  j["seed"] = seed;
  j["prescribed_pairs"] = pairs.size();
  j["out"] = out_path;
  std::string human = "wrote " + out_path + " (label " + E.label() + ", " +
                      std::to_string(pairs.size()) + " prescribed pair(s))\n";
  return out.finish("twists synth", j, human, true);
}

// ---------------------------------------------------------------------- yoshida

int run_yoshida_build(const Output& out, const std::string& left, const std::string& right,
                      long bound, const std::string& out_path, bool relaxed, bool assert_ds) {
  EigenSystem E1 = io::eigensystem_from_json(io::read_json_file(left));
  EigenSystem E2 = io::eigensystem_from_json(io::read_json_file(right));
  ConditionReport cr = check_conditions(E1, E2, assert_ds);
  Json conditions = Json::object();
  conditions["not_scalar_multiple"] = cr.not_scalar_multiple;
  conditions["same_primitive_character"] = cr.same_primitive_character;
  conditions["weight_strict_ok"] = cr.weight_strict_ok;
  conditions["weight_relaxed_ok"] = cr.weight_relaxed_ok;
  conditions["discrete_series"] = cr.discrete_series == DiscreteSeriesStatus::yes ? "asserted"
                                                                                  : "unknown";
  conditions["notes"] = cr.notes;

  Json j = Json::object();
  j["conditions"] = conditions;
  std::string human = std::string("conditions: not-scalar ") +
                      (cr.not_scalar_multiple ? "ok" : "FAIL") + ", same-character " +
                      (cr.same_primitive_character ? "ok" : "FAIL") + ", weights strict " +
                      (cr.weight_strict_ok ? "ok" : "no") + " / relaxed " +
                      (cr.weight_relaxed_ok ? "ok" : "no") + "\n";
  if (!cr.weight_strict_ok && cr.weight_relaxed_ok && !relaxed) {
    human += "weights admissible only under the relaxed rule; rerun with --relaxed-weights\n";
    j["built"] = false;
    return out.finish("yoshida build", j, human, false);
  }
  try {
    YoshidaLift Y = build_lift(E1, E2, bound);
    io::write_json_file(out_path, io::lift_to_json(Y));
    j["built"] = true;
    j["prime_bound"] = Y.prime_bound;
    j["spin_polynomials"] = Y.spin_polys.size();
    j["field_degree"] = Y.compositum.field->degree();
    j["notes"] = Y.notes;
    j["out"] = out_path;
    human += "wrote " + out_path + " (" + std::to_string(Y.spin_polys.size()) +
             " spin polynomials over a degree-" +
             std::to_string(Y.compositum.field->degree()) + " field)\n";
    return out.finish("yoshida build", j, human, true);
  } catch (const std::domain_error& e) {
    j["built"] = false;
    j["error"] = e.what();
    human += std::string("lift refused: ") + e.what() + "\n";
    return out.finish("yoshida build", j, human, false);
  }
}

int run_yoshida_twists(const Output& out, const std::string& in, long bound, bool wide) {
  YoshidaLift Y = io::lift_from_json(io::read_json_file(in));
  if (bound <= 0) bound = Y.prime_bound;
  TwistGroup T = lift_twist_group(Y, bound, wide);
  Json j = io::twist_group_to_json(T);
  std::string human = "lift of " + Y.left.label() + " and " + Y.right.label() + ": " +
                      std::to_string(T.elements.size()) + " twist pair(s), " +
                      std::to_string(T.inconclusive.size()) + " inconclusive\n";
  for (const InnerTwist& t : T.elements)
    human += "  x -> " + elem_str(t.automorphism.gen_image()) + "  with chi of conductor " +
             std::to_string(t.character.conductor()) + "\n";
  return out.finish("yoshida twists", j, human, true);
}

int run_yoshida_fields(const Output& out, const std::string& in, long bound) {
  YoshidaLift Y = io::lift_from_json(io::read_json_file(in));
  if (bound <= 0) bound = Y.prime_bound;
  SubfieldResult tf = trace_field(Y, bound);
  SubfieldResult ff = full_hecke_field(Y, bound);
  Json j = Json::object();
  j["compositum"] = io::field_to_json(Y.compositum.field);
  j["compositum_degree"] = Y.compositum.field->degree();
  j["trace_field"] = io::subfield_to_json(tf);
  j["full_field"] = io::subfield_to_json(ff);
  j["strict_inclusion"] = tf.subfield->degree() < Y.compositum.field->degree();

  // Reference comparisons for the two documented coefficient fields.
  Json cmp = Json::array();
  const RationalPoly& kp = Y.compositum.field->poly();
  if (kp == RationalPoly({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)})) {
    NFElem z = Y.compositum.field->generator();
    NFElem w = z + z.pow(3);
    bool m = tf.subfield->degree() == 2 && express_in_powers(tf.generator_image, w) &&
             express_in_powers(w, tf.generator_image);
    cmp.push_back(std::string("documented trace field Q(zeta8 + zeta8^3), x^2 + 2: ") +
                  (m ? "matches" : "differs"));
  } else if (kp == RationalPoly({Rational(16), Rational(0), Rational(0), Rational(0),
                                 Rational(-7), Rational(0), Rational(0), Rational(0),
                                 Rational(1)})) {
    bool m = quadratic_field_has_discriminant(tf.subfield->poly(), -15);
    cmp.push_back(std::string("documented trace field Q(sqrt(-15)): ") +
                  (m ? "matches" : "differs"));
  } else {
    cmp.push_back("no documented reference for this coefficient field");
  }
  j["paper_comparison"] = cmp;

  std::string human = "trace field: degree " + std::to_string(tf.subfield->degree()) + ", " +
                      poly_str(tf.subfield->poly()) + "\n";
  human += "full spin coefficient field: degree " + std::to_string(ff.subfield->degree()) +
           ", " + poly_str(ff.subfield->poly()) + "\n";
  human += "strict inclusion in the degree-" + std::to_string(Y.compositum.field->degree()) +
           " coefficient field: " +
           (tf.subfield->degree() < Y.compositum.field->degree() ? "yes" : "no") + "\n";
  for (const auto& c : cmp) human += c.get<std::string>() + "\n";
  return out.finish("yoshida fields", j, human, true);
}

// --------------------------------------------------------- verify-paper-examples

int run_verify_examples(const Output& out, const std::string& fixtures, long bound) {
  ExampleReport r30 = verify_level30(fixtures, bound);
  ExampleReport r100 = verify_level100(fixtures, bound);
  bool ok = r30.all_pass() && r100.all_pass();
  Json j = Json::object();
  j["fixtures"] = fixtures;
  j["prime_bound"] = bound;
  Json examples = Json::array();
  examples.push_back(r30.to_json());
  examples.push_back(r100.to_json());
  j["examples"] = examples;
  j["all_pass"] = ok;
  std::string human;
  for (const ExampleReport* r : {&r30, &r100}) {
    human += r->example + ":\n";
    for (const ExampleCheck& c : r->checks)
      human += std::string(c.pass ? "  [PASS] " : "  [FAIL] ") + c.name + ": " + c.detail + "\n";
  }
  human += ok ? "all checks pass\n" : "some checks FAILED\n";
  return out.finish("verify-paper-examples", j, human, ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "twistkit: exact self-twists of classical eigen-systems and their degree-4 spin "
      "lifts.\nExit codes: 0 success, 1 verification failure, 2 input error."};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "emit a machine-readable JSON report");

  int rc = 0;
  auto set = [&rc](int code) { rc = code; };

  // algebra
  auto* algebra = app.add_subcommand("algebra", "number-field utilities");
  algebra->require_subcommand(1);
  {
    static std::string in;
    auto* c = algebra->add_subcommand("factor", "factor a rational polynomial");
    c->add_option("--in", in, "polynomial JSON (coefficient array)")->required();
    c->callback([&] { set(run_algebra_factor(out, in)); });
  }
  {
    static std::string in;
    auto* c = algebra->add_subcommand("automorphisms", "automorphism group of a field");
    c->add_option("--field", in, "field JSON")->required();
    c->callback([&] { set(run_algebra_automorphisms(out, in)); });
  }
  {
    static std::string l, r;
    auto* c = algebra->add_subcommand("compositum", "compositum of two fields");
    c->add_option("--left", l, "field JSON")->required();
    c->add_option("--right", r, "field JSON")->required();
    c->callback([&] { set(run_algebra_compositum(out, l, r)); });
  }
  {
    static std::string in;
    static int precision = 128;
    auto* c = algebra->add_subcommand("roots", "complex roots of the defining polynomial");
    c->add_option("--field", in, "field JSON")->required();
    c->add_option("--precision", precision, "working precision in bits (default 128)");
    c->callback([&] { set(run_algebra_roots(out, in, precision)); });
  }

  // char
  auto* chr = app.add_subcommand("char", "Dirichlet character utilities");
  chr->require_subcommand(1);
  {
    static std::string in;
    auto* c = chr->add_subcommand("info", "modulus, conductor, and order");
    c->add_option("--in", in, "character JSON")->required();
    c->callback([&] { set(run_char_info(out, in)); });
  }
  {
    static std::string in;
    static long at = 0;
    auto* c = chr->add_subcommand("eval", "evaluate at an integer");
    c->add_option("--in", in, "character JSON")->required();
    c->add_option("--at", at, "argument")->required();
    c->callback([&] { set(run_char_eval(out, in, at)); });
  }
  {
    static long modulus = 1;
    auto* c = chr->add_subcommand("unit-group", "generators and orders of (Z/N)*");
    c->add_option("--modulus", modulus, "modulus N")->required();
    c->callback([&] { set(run_char_unit_group(out, modulus)); });
  }
  {
    static int genus = 2, weight = 3;
    static long level = 1;
    auto* c = chr->add_subcommand("theorem1", "parity and order-2g hypotheses");
    c->add_option("--genus", genus, "genus g")->required();
    c->add_option("--weight", weight, "weight k")->required();
    c->add_option("--level", level, "level N")->required();
    c->callback([&] { set(run_char_theorem1(out, genus, weight, level)); });
  }
  {
    static std::string in;
    static int genus = 2, weight = 3;
    auto* c = chr->add_subcommand("find-sigma",
                                  "order-2g residue with a^g = -1 and psi(a) = (-1)^(k-g+1)");
    c->add_option("--in", in, "character JSON for psi")->required();
    c->add_option("--genus", genus, "genus g")->required();
    c->add_option("--weight", weight, "weight k")->required();
    c->callback([&] { set(run_char_find_sigma(out, in, genus, weight)); });
  }

  // gsp
  auto* gsp = app.add_subcommand("gsp", "symplectic similitude checks");
  gsp->require_subcommand(1);
  {
    static std::string in, kind = "gamma0";
    static long modulus = 0;
    auto* c = gsp->add_subcommand("check", "similitude and congruence membership");
    c->add_option("--matrix", in, "matrix JSON (row-major nested arrays)")->required();
    c->add_option("--modulus", modulus, "congruence level N");
    c->add_option("--kind", kind, "full, principal, gamma0, or gamma1 (default gamma0)");
    c->callback([&] { set(run_gsp_check(out, in, modulus, kind)); });
  }

  // siegel
  auto* siegel = app.add_subcommand("siegel", "truncated Fourier expansions");
  siegel->require_subcommand(1);
  {
    static std::string in, outp;
    auto* c = siegel->add_subcommand("phi", "apply the degree-lowering operator");
    c->add_option("--in", in, "expansion JSON")->required();
    c->add_option("--out", outp, "output path for the genus-(g-1) expansion");
    c->callback([&] { set(run_siegel_phi(out, in, outp)); });
  }

  // newform
  auto* newform = app.add_subcommand("newform", "eigen-system ingestion and checks");
  newform->require_subcommand(1);
  {
    static std::string in;
    static int precision = 128;
    auto* c = newform->add_subcommand("check", "Hecke recursion and eigenvalue bounds");
    c->add_option("--in", in, "eigen-system JSON")->required();
    c->add_option("--precision", precision, "working precision in bits (default 128)");
    c->callback([&] { set(run_newform_check(out, in, precision)); });
  }

  // twists
  auto* twists = app.add_subcommand("twists", "self-twist detection");
  twists->require_subcommand(1);
  {
    static std::string in;
    static long bound = 100;
    static bool wide = false;
    auto* c = twists->add_subcommand("detect", "detect the group of self-twists");
    c->add_option("--in", in, "eigen-system JSON")->required();
    c->add_option("--bound", bound, "prime bound (default 100)");
    c->add_flag("--wide-moduli", wide, "search character moduli dividing N^2 instead of N");
    c->callback([&] { set(run_twists_detect(out, in, bound, wide)); });
  }
  {
    static std::string outp;
    static long level = 8, bound = 100;
    static int weight = 2;
    static unsigned long long seed = default_seed();
    auto* c = twists->add_subcommand("synth",
                                     "generate a synthetic eigen-system with a prescribed "
                                     "quadratic self-twist (demo; deterministic in the seed)");
    c->add_option("--out", outp, "output path")->required();
    c->add_option("--level", level, "level (default 8)");
    c->add_option("--weight", weight, "weight (default 2)");
    c->add_option("--bound", bound, "prime bound (default 100)");
    c->add_option("--seed", seed, "generator seed (default $TWISTKIT_SEED or 1)");
    c->callback([&] { set(run_twists_synth(out, outp, level, weight, bound, seed)); });
  }

  // yoshida
  auto* yoshida = app.add_subcommand("yoshida", "degree-4 spin lifts");
  yoshida->require_subcommand(1);
  {
    static std::string l, r, outp;
    static long bound = 100;
    static bool relaxed = false, assert_ds = false;
    auto* c = yoshida->add_subcommand("build", "construct the lift of an admissible pair");
    c->add_option("--left", l, "left eigen-system JSON")->required();
    c->add_option("--right", r, "right eigen-system JSON")->required();
    c->add_option("--bound", bound, "prime bound (default 100)");
    c->add_option("--out", outp, "output lift JSON")->required();
    c->add_flag("--relaxed-weights", relaxed,
                "admit equal even weights (the strict rule requires one weight 2 and one "
                "larger even weight)");
    c->add_flag("--assert-discrete-series", assert_ds,
                "record the discrete-series condition as asserted by the caller");
    c->callback([&] { set(run_yoshida_build(out, l, r, bound, outp, relaxed, assert_ds)); });
  }
  {
    static std::string in;
    static long bound = 0;
    static bool wide = false;
    auto* c = yoshida->add_subcommand("twists", "self-twist pairs of a lift");
    c->add_option("--in", in, "lift JSON")->required();
    c->add_option("--bound", bound, "prime bound (default: the lift's bound)");
    c->add_flag("--wide-moduli", wide, "search moduli dividing (lcm of levels)^2");
    c->callback([&] { set(run_yoshida_twists(out, in, bound, wide)); });
  }
  {
    static std::string in;
    static long bound = 0;
    auto* c = yoshida->add_subcommand("fields", "trace and full Hecke fields of a lift");
    c->add_option("--in", in, "lift JSON")->required();
    c->add_option("--bound", bound, "prime bound (default: the lift's bound)");
    c->callback([&] { set(run_yoshida_fields(out, in, bound)); });
  }

  // verify-paper-examples
  {
    static std::string fixtures = default_fixtures();
    static long bound = 100;
    auto* c = app.add_subcommand("verify-paper-examples",
                                 "run every documented check on the bundled fixtures");
    c->add_option("--fixtures", fixtures,
                  "fixtures directory (default $TWISTKIT_FIXTURES or ./fixtures)");
    c->add_option("--bound", bound, "prime bound (default 100)");
    c->callback([&] { set(run_verify_examples(out, fixtures, bound)); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return rc;
}
