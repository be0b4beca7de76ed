#include "twistkit/paper_examples.hpp"

#include <cmath>
#include <sstream>

#include "twistkit/embeddings.hpp"
#include "twistkit/factor.hpp"

namespace twistkit {

namespace {

// Runs one named check, turning exceptions into failures with the message as
// the detail, so a report always covers every check it attempted.
void run_check(ExampleReport& report, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
  ExampleCheck c;
  c.name = name;
  try {
    auto [ok, detail] = body();
    c.pass = ok;
    c.detail = detail;
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  report.checks.push_back(std::move(c));
}

std::pair<bool, std::string> yes(std::string detail) { return {true, std::move(detail)}; }
std::pair<bool, std::string> no(std::string detail) { return {false, std::move(detail)}; }

Rational Q(long n, long d = 1) { return Rational(n, d); }

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  mpz_class sn = sqrt(r.get_num()), sd = sqrt(r.get_den());
  return sn * sn == r.get_num() && sd * sd == r.get_den();
}

// Fills the field-comparison fragment shared by both examples.
io::Json field_comparison(const YoshidaLift& Y, const SubfieldResult& trace,
                          const SubfieldResult& full, const std::string& reference,
                          bool trace_matches) {
  io::Json j = io::Json::object();
  j["compositum"] = io::field_to_json(Y.compositum.field);
  j["compositum_degree"] = Y.compositum.field->degree();
  j["trace_field"] = io::subfield_to_json(trace);
  j["full_field"] = io::subfield_to_json(full);
  j["strict_inclusion_trace"] = trace.subfield->degree() < Y.compositum.field->degree();
  j["strict_inclusion_full"] = full.subfield->degree() < Y.compositum.field->degree();
  j["reference_trace_field"] = reference;
  j["trace_field_matches_reference"] = trace_matches;
  return j;
}

}  // namespace

bool ExampleReport::all_pass() const {
  for (const ExampleCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

io::Json ExampleReport::to_json() const {
  io::Json j = io::Json::object();
  j["example"] = example;
  io::Json arr = io::Json::array();
  for (const ExampleCheck& c : checks) {
    io::Json e = io::Json::object();
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["all_pass"] = all_pass();
  j["comparison"] = comparison;
  return j;
}

bool quadratic_field_has_discriminant(const RationalPoly& m, long target) {
  if (m.degree() != 2 || !m.is_monic()) return false;
  Rational disc = m.coeff(1) * m.coeff(1) - Q(4) * m.coeff(0);
  if (disc.get_num() == 0 || target == 0) return false;
  return is_rational_square(disc / Q(target));
}

ExampleReport verify_level30(const std::string& fixtures_dir, long bound) {
  ExampleReport report;
  report.example = "level-30";
  report.comparison = io::Json::object();

  EigenSystem* fp = nullptr;
  EigenSystem* gp = nullptr;
  std::optional<EigenSystem> f, g;
  run_check(report, "load-fixtures", [&]() {
    f = io::eigensystem_from_json(io::read_json_file(fixtures_dir + "/level30_f.json"));
    g = io::eigensystem_from_json(io::read_json_file(fixtures_dir + "/level30_g.json"));
    fp = &*f;
    gp = &*g;
    if (fp->hecke_field()->degree() != 4 || gp->hecke_field()->degree() != 4)
      return no("coefficient fields must have degree 4");
    if (fp->level() != 30 || gp->level() != 30 || fp->weight() != 2 || gp->weight() != 2)
      return no("expected weight-2 level-30 systems");
    if (fp->label().find("synth") == std::string::npos ||
        gp->label().find("synth") == std::string::npos)
      return no("fixture labels must mark the synthetic extension");
    return yes("two degree-4 weight-2 level-30 systems, synthetic extension marked");
  });
  if (!fp || !gp) return report;

  const NumberFieldPtr K = fp->hecke_field();
  const NFElem z = K->generator();

  run_check(report, "character-conductor-and-order", [&]() {
    const DirichletCharacter& chi = fp->nebentypus();
    if (chi.conductor() != 15) return no("conductor != 15");
    if (chi.order() != 4) return no("order != 4");
    if (!gp->nebentypus().equals(chi)) return no("factors carry different characters");
    return yes("conductor 15, order 4, shared by both factors");
  });

  run_check(report, "character-values", [&]() {
    const DirichletCharacter& chi = fp->nebentypus();
    if (!(chi.evaluate(7) == -(z * z))) return no("chi(7) != -zeta8^2");
    if (!(chi.evaluate(11) == K->from_rational(Q(-1)))) return no("chi(11) != -1");
    if (!chi.evaluate(2).is_zero()) return no("chi(2) != 0");
    return yes("chi(7) = -zeta8^2, chi(11) = -1, chi(2) = 0");
  });

  run_check(report, "unit-group-order-4-element", [&]() {
    Theorem1Report t = theorem1_hypotheses(2, 3, 30);
    if (!t.parity_ok) return no("|g-k| parity hypothesis fails for (2,3)");
    if (!t.order_element_ok || !t.witness) return no("(Z/30)* has no element of order 4");
    std::ostringstream os;
    os << "witness " << *t.witness << " of order 4 mod 30";
    return yes(os.str());
  });

  run_check(report, "attested-coefficients", [&]() {
    NFElem a3 = K->element(RationalPoly({Q(-1), Q(0), Q(-1), Q(1)}));  // z^3 - z^2 - 1
    if (!(fp->ap_at(2) == z)) return no("f: a_2 != zeta8");
    if (!(fp->ap_at(3) == a3)) return no("f: a_3 != zeta8^3 - zeta8^2 - 1");
    if (!(fp->ap_squared().at(2) == z * z)) return no("f: a_4 != zeta8^2");
    if (!(gp->ap_at(2) == z.pow(3))) return no("g: a_2 != zeta8^3");
    // zeta8^9 - zeta8^6 - 1 reduces to zeta8 + zeta8^2 - 1.
    if (!(gp->ap_at(3) == K->element(RationalPoly({Q(-1), Q(1), Q(1)}))))
      return no("g: a_3 != zeta8^9 - zeta8^6 - 1");
    if (!(gp->ap_squared().at(2) == -(z * z))) return no("g: a_4 != zeta8^6");
    return yes("listed q^2, q^3, q^4 coefficients of both factors match exactly");
  });

  run_check(report, "internal-consistency", [&]() {
    CheckReport h1 = hecke_consistency(*fp), h2 = hecke_consistency(*gp);
    CheckReport r1 = ramanujan_check(*fp), r2 = ramanujan_check(*gp);
    if (!h1.ok || !h2.ok) return no("Hecke recursion fails");
    if (!r1.ok || !r2.ok) return no("eigenvalue bound fails");
    return yes("Hecke recursion and eigenvalue bounds hold for both factors");
  });

  TwistGroup T1, T2;
  run_check(report, "twist-groups", [&]() {
    T1 = detect_inner_twists(*fp, bound);
    T2 = detect_inner_twists(*gp, bound);
    FieldAutomorphism s5(K, z.pow(5));
    for (const TwistGroup* T : {&T1, &T2}) {
      if (T->elements.size() != 2) return no("expected exactly two self-twists");
      if (!T->inconclusive.empty()) return no("unexpected inconclusive automorphisms");
      const InnerTwist* t = T->find(s5);
      if (t == nullptr) return no("missing the zeta8 -> zeta8^5 twist");
      if (t->character.conductor() != 5 || t->character.order() != 2)
        return no("twisting character is not the quadratic character mod 5");
    }
    if (!cocycle_check(T1) || !cocycle_check(T2)) return no("cocycle identity fails");
    if (!determinant_relation_check(*fp, T1) || !determinant_relation_check(*gp, T2))
      return no("determinant relation fails");
    return yes("both groups are {identity, (zeta8 -> zeta8^5, quadratic mod 5)}");
  });

  NFElem w = z + z.pow(3);
  run_check(report, "trace-sums-in-subfield", [&]() {
    for (int i = 1; i <= 8; ++i)
      if (!express_in_powers(z.pow(i) + z.pow(3 * i), w))
        return no("zeta8^i + zeta8^(3i) escapes the subfield at i = " + std::to_string(i));
    for (const auto& [p, a] : fp->ap()) {
      if (30 % p == 0) continue;
      if (!express_in_powers(a + gp->ap_at(p), w))
        return no("a_p + b_p escapes the subfield at p = " + std::to_string(p));
    }
    return yes("zeta8^i + zeta8^(3i) for i = 1..8 and all good-prime traces lie in "
               "Q(zeta8 + zeta8^3)");
  });

  run_check(report, "subfield-minimal-polynomial", [&]() {
    if (!(minimal_polynomial(w) == RationalPoly({Q(2), Q(0), Q(1)})))
      return no("minimal polynomial of zeta8 + zeta8^3 is not x^2 + 2");
    SubfieldResult S = subfield_generated(K, {w});
    if (S.subfield->degree() != 2) return no("subfield degree != 2");
    return yes("minimal polynomial x^2 + 2, subfield degree 2");
  });

  std::optional<YoshidaLift> Y;
  run_check(report, "lift-conditions", [&]() {
    ConditionReport cr = check_conditions(*fp, *gp);
    if (!cr.not_scalar_multiple) return no("factors are scalar multiples");
    if (!cr.same_primitive_character) return no("primitive characters differ");
    if (cr.weight_strict_ok) return no("weights (2,2) should fail the strict rule");
    if (!cr.weight_relaxed_ok) return no("weights (2,2) should pass the relaxed rule");
    return yes("admissible under the relaxed weight rule (strict rule excludes (2,2))");
  });

  run_check(report, "lift-and-trace-field", [&]() {
    Y = build_lift(*fp, *gp, bound);
    SubfieldResult tf = trace_field(*Y, bound);
    SubfieldResult ff = full_hecke_field(*Y, bound);
    bool matches = tf.subfield->degree() == 2 && express_in_powers(tf.generator_image, w) &&
                   express_in_powers(w, tf.generator_image);
    report.comparison = field_comparison(*Y, tf, ff, "Q(zeta8 + zeta8^3) with x^2 + 2", matches);
    if (!matches) return no("trace field is not Q(zeta8 + zeta8^3)");
    if (tf.subfield->degree() >= Y->compositum.field->degree())
      return no("trace field is not strictly smaller than the coefficient field");
    std::ostringstream os;
    os << "trace field degree 2 strictly inside the degree-" << Y->compositum.field->degree()
       << " coefficient field; full spin coefficient field degree " << ff.subfield->degree();
    return yes(os.str());
  });

  run_check(report, "lift-twist-group", [&]() {
    if (!Y) return no("lift unavailable");
    TwistGroup LT = lift_twist_group(*Y, bound);
    FieldAutomorphism s5(K, z.pow(5));
    if (LT.elements.size() != 2) return no("expected exactly two lift self-twists");
    const InnerTwist* t = LT.find(s5);
    if (t == nullptr || t->character.conductor() != 5)
      return no("missing (zeta8 -> zeta8^5, quadratic mod 5) on the lift");
    ContainmentReport cont = common_twist_containment(LT, T1, T2);
    if (!cont.checked || !cont.contained)
      return no("common factor twists are not contained in the lift group");
    DirichletCharacter leg5(UnitGroup::of(5), K, {K->from_rational(Q(-1))});
    if (!verify_theorem2(*fp, *gp, s5, leg5, bound))
      return no("spin twist identity fails for the common twist");
    return yes("lift group is {identity, (zeta8 -> zeta8^5, quadratic mod 5)}; "
               "containment and the spin twist identity hold");
  });

  return report;
}

ExampleReport verify_level100(const std::string& fixtures_dir, long bound) {
  ExampleReport report;
  report.example = "level-100";
  report.comparison = io::Json::object();

  EigenSystem* f1p = nullptr;
  EigenSystem* f2p = nullptr;
  std::optional<EigenSystem> f1, f2;
  run_check(report, "load-fixtures", [&]() {
    f1 = io::eigensystem_from_json(io::read_json_file(fixtures_dir + "/level100_f1.json"));
    f2 = io::eigensystem_from_json(io::read_json_file(fixtures_dir + "/level100_f2.json"));
    f1p = &*f1;
    f2p = &*f2;
    if (f1p->hecke_field()->degree() != 8 || f2p->hecke_field()->degree() != 8)
      return no("coefficient fields must have degree 8");
    if (f1p->level() != 100 || f2p->level() != 100) return no("expected level 100");
    if (f1p->label().find("synth") == std::string::npos ||
        f2p->label().find("synth") == std::string::npos)
      return no("fixture labels must mark the synthetic extension");
    return yes("two degree-8 weight-2 level-100 systems, synthetic extension marked");
  });
  if (!f1p || !f2p) return report;

  const NumberFieldPtr K = f1p->hecke_field();
  const NFElem mu = K->generator();
  const RationalPoly octic({Q(16), Q(0), Q(0), Q(0), Q(-7), Q(0), Q(0), Q(0), Q(1)});

  run_check(report, "defining-polynomial", [&]() {
    if (!(K->poly() == octic)) return no("field polynomial is not x^8 - 7x^4 + 16");
    if (!is_irreducible(octic)) return no("x^8 - 7x^4 + 16 is not irreducible");
    return yes("x^8 - 7x^4 + 16 irreducible over Q");
  });

  run_check(report, "mu4-satisfies-quadratic", [&]() {
    if (!(minimal_polynomial(mu.pow(4)) == RationalPoly({Q(16), Q(-7), Q(1)})))
      return no("mu^4 does not satisfy x^2 - 7x + 16");
    return yes("mu^4 has minimal polynomial x^2 - 7x + 16 (discriminant -15)");
  });

  run_check(report, "mu-absolute-value", [&]() {
    const double target = std::sqrt(2.0);
    for (const BigComplex& r : complex_roots(octic, 192)) {
      double m = abs_value(r).get_d();
      if (std::abs(m - target) > 1e-10) return no("an embedding of mu misses |mu| = sqrt(2)");
    }
    return yes("all eight embeddings satisfy |mu| = sqrt(2) within 1e-10");
  });

  run_check(report, "character-conductor-and-order", [&]() {
    const DirichletCharacter& chi = f1p->nebentypus();
    if (chi.conductor() != 20) return no("conductor != 20");
    if (chi.order() != 4) return no("order != 4");
    if (!f2p->nebentypus().equals(chi)) return no("factors carry different characters");
    return yes("conductor 20, order 4, shared by both factors");
  });

  run_check(report, "character-values", [&]() {
    const DirichletCharacter& chi = f1p->nebentypus();
    NFElem v = K->element(RationalPoly({Q(0), Q(0), Q(-3, 4), Q(0), Q(0), Q(0), Q(1, 4)}));
    if (!(chi.evaluate(51) == K->from_rational(Q(-1)))) return no("chi(51) != -1");
    if (!(chi.evaluate(77) == v)) return no("chi(77) != (mu^6 - 3 mu^2)/4");
    NFElem v2 = v * v;
    if (!(v2.is_rational() && v2.as_rational() == Q(-1)))
      return no("chi(77)^2 != -1");
    return yes("chi(51) = -1, chi(77) = (mu^6 - 3 mu^2)/4 with chi(77)^2 = -1");
  });

  run_check(report, "attested-coefficients", [&]() {
    NFElem a3 =
        K->element(RationalPoly({Q(0), Q(0), Q(0), Q(-13, 8), Q(0), Q(0), Q(0), Q(3, 8)}));
    if (!(f1p->ap_at(2) == mu)) return no("f1: a_2 != mu");
    if (!(f1p->ap_at(3) == a3)) return no("f1: a_3 != (3 mu^7 - 13 mu^3)/8");
    if (!(f2p->ap_at(2) == -mu)) return no("f2: a_2 != -mu (mu_2 = -mu_1)");
    if (!(f2p->ap_at(3) == -a3)) return no("f2: a_3 is not the mu -> -mu conjugate");
    return yes("f_i = q + mu_i q^2 + (3 mu_i^7 - 13 mu_i^3)/8 q^3 with mu_2 = -mu_1");
  });

  run_check(report, "vanishing-sums", [&]() {
    if (!(f1p->ap_at(2) + f2p->ap_at(2)).is_zero()) return no("a_2 + b_2 != 0");
    if (!(f1p->ap_at(3) + f2p->ap_at(3)).is_zero()) return no("a_3 + b_3 != 0");
    return yes("a_2 + b_2 = 0 and a_3 + b_3 = 0 exactly (the documented sums vanish; "
               "the trace field is generated by the p = 1 mod 4 traces instead)");
  });

  run_check(report, "internal-consistency", [&]() {
    if (!hecke_consistency(*f1p).ok || !hecke_consistency(*f2p).ok)
      return no("Hecke recursion fails");
    if (!ramanujan_check(*f1p).ok || !ramanujan_check(*f2p).ok)
      return no("eigenvalue bound fails");
    return yes("Hecke recursion and eigenvalue bounds hold for both factors");
  });

  TwistGroup T1, T2;
  FieldAutomorphism sig(K, -mu);
  run_check(report, "twist-groups", [&]() {
    T1 = detect_inner_twists(*f1p, bound);
    T2 = detect_inner_twists(*f2p, bound);
    for (const TwistGroup* T : {&T1, &T2}) {
      if (T->elements.size() != 2) return no("expected exactly two detected self-twists");
      const InnerTwist* t = T->find(sig);
      if (t == nullptr) return no("missing the mu -> -mu twist");
      if (t->character.conductor() != 4 || t->character.order() != 2)
        return no("twisting character is not the quadratic character mod 4");
      if (T->inconclusive.size() != 6)
        return no("expected six inconclusive automorphisms (conductor-100 characters "
                  "cannot be refuted by primes below 100)");
    }
    if (!cocycle_check(T1) || !cocycle_check(T2)) return no("cocycle identity fails");
    if (!determinant_relation_check(*f1p, T1) || !determinant_relation_check(*f2p, T2))
      return no("determinant relation fails");
    return yes("both groups are {identity, (mu -> -mu, quadratic mod 4)}; the six "
               "remaining automorphisms stay inconclusive at modulus 100 by starvation");
  });

  std::optional<YoshidaLift> Y;
  run_check(report, "lift-and-trace-field", [&]() {
    ConditionReport cr = check_conditions(*f1p, *f2p);
    if (!cr.lift_admissible()) return no("pair is not admissible");
    Y = build_lift(*f1p, *f2p, bound);
    SubfieldResult tf = trace_field(*Y, bound);
    SubfieldResult ff = full_hecke_field(*Y, bound);
    NFElem mu4 = mu.pow(4);
    bool matches = tf.subfield->degree() == 2 &&
                   quadratic_field_has_discriminant(tf.subfield->poly(), -15) &&
                   express_in_powers(tf.generator_image, mu4).has_value() &&
                   express_in_powers(mu4, tf.generator_image).has_value();
    report.comparison = field_comparison(*Y, tf, ff, "Q(sqrt(-15))", matches);
    report.comparison["trace_field_discriminant_class"] = -15;
    if (!matches) return no("trace field is not Q(sqrt(-15)) = Q(mu^4)");
    for (const auto& [p, q] : Y->spin_polys) {
      NFElem t = Y->left_eigen.at(p) + Y->right_eigen.at(p);
      if (!express_in_powers(t, tf.generator_image))
        return no("a trace value escapes the trace field at p = " + std::to_string(p));
    }
    std::ostringstream os;
    os << "trace field has degree 2 and discriminant class -15; every computed trace lies "
          "in it; full spin coefficient field degree "
       << ff.subfield->degree() << " inside degree " << Y->compositum.field->degree();
    return yes(os.str());
  });

  run_check(report, "lift-twist-group", [&]() {
    if (!Y) return no("lift unavailable");
    TwistGroup LT = lift_twist_group(*Y, bound);
    if (LT.elements.size() != 4) return no("expected four lift self-twist pairs");
    FieldAutomorphism id(K, mu);
    bool have_id_chi4 = false, have_sig_triv = false, have_sig_chi4 = false;
    for (const InnerTwist& t : LT.elements) {
      if (t.automorphism == sig && t.character.conductor() == 1) have_sig_triv = true;
      if (t.automorphism == sig && t.character.conductor() == 4) have_sig_chi4 = true;
      if (t.automorphism == id && t.character.conductor() == 4) have_id_chi4 = true;
    }
    if (!have_sig_triv) return no("missing the factor-swap pair (mu -> -mu, trivial)");
    if (!have_sig_chi4) return no("missing the direct pair (mu -> -mu, quadratic mod 4)");
    if (!have_id_chi4) return no("missing the self-twist pair (identity, quadratic mod 4)");
    ContainmentReport cont = common_twist_containment(LT, T1, T2);
    if (!cont.checked || !cont.contained)
      return no("common factor twists are not contained in the lift group");
    DirichletCharacter chi4(UnitGroup::of(4), K, {K->from_rational(Q(-1))});
    if (!verify_theorem2(*f1p, *f2p, sig, chi4, bound))
      return no("spin twist identity fails for the common twist");
    return yes("lift group has order 4: both characters pair with both of identity and "
               "mu -> -mu; containment and the spin twist identity hold");
  });

  return report;
}

}  // namespace twistkit
