#include <chrono>
#include <cstdlib>
#include <map>
#include <string>

#include "synthetic_suite.hpp"
#include "test_util.hpp"
#include "twistkit/json_io.hpp"
#include "twistkit/twists.hpp"

using namespace twistkit;
using testutil::run;

namespace {

std::string fixtures_dir() {
  if (const char* env = std::getenv("TWISTKIT_FIXTURES")) return env;
  return "fixtures";
}

EigenSystem load_fixture(const std::string& name) {
  return io::eigensystem_from_json(io::read_json_file(fixtures_dir() + "/" + name));
}

// Level-4 system over Q(i) with a_p = 0 exactly when chi_{-4}(p) = -1.
EigenSystem cm_like_system(const NumberFieldPtr& QI, long bound) {
  std::map<long, NFElem> ap;
  for (long p : primes_up_to(bound)) {
    if (p == 2)
      ap[p] = QI->zero();
    else if (p % 4 == 1)
      ap[p] = QI->element(RationalPoly({Rational(1), Rational(1)}));
    else
      ap[p] = QI->zero();
  }
  return EigenSystem("cm-like", 4, 2, DirichletCharacter::trivial(4, QI), QI, ap);
}

}  // namespace

int main() {
  NumberFieldPtr QI = NumberField::make(RationalPoly({Rational(1), Rational(0), Rational(1)}));

  run("divisor enumeration", [&] {
    auto d30 = divisors_of(30);
    REQUIRE(d30 == (std::vector<long>{1, 2, 3, 5, 6, 10, 15, 30}));
    REQUIRE(divisors_of(1) == (std::vector<long>{1}));
    REQUIRE(divisors_of(8) == (std::vector<long>{1, 2, 4, 8}));
  });

  run("prescribed groups are recovered exactly across 120 systems", [&] {
    auto t0 = std::chrono::steady_clock::now();
    synth_suite::SuiteResult r = synth_suite::run_suite(100, {11, 22, 33, 44, 55});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const std::string& f : r.failures) std::cout << "  mismatch: " << f << "\n";
    REQUIRE(r.failures.empty());
    REQUIRE(r.systems == 120);
    REQUIRE_MSG(secs < 60.0, "suite took " << secs << "s");
  });

  run("generation is deterministic in the seed", [&] {
    auto cfg = synth_suite::suite_configs()[3];  // an order-2 configuration over Q(i)
    EigenSystem a = generate_synthetic(cfg.K, cfg.pairs, cfg.level, cfg.weight, 50, 7);
    EigenSystem b = generate_synthetic(cfg.K, cfg.pairs, cfg.level, cfg.weight, 50, 7);
    EigenSystem c = generate_synthetic(cfg.K, cfg.pairs, cfg.level, cfg.weight, 50, 8);
    REQUIRE(io::eigensystem_to_json(a) == io::eigensystem_to_json(b));
    REQUIRE(io::eigensystem_to_json(a) != io::eigensystem_to_json(c));
  });

  run("twisting characters are unique per automorphism", [&] {
    DirichletCharacter chi4 = synth_suite::quad_char(4, QI, {{3, -1}});
    DirichletCharacter chi8 = synth_suite::quad_char(8, QI, {{3, -1}, {7, 1}});
    std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
    pairs.emplace_back(FieldAutomorphism(QI, QI->generator()), DirichletCharacter::trivial(1, QI));
    FieldAutomorphism conj(QI, -QI->generator());
    pairs.emplace_back(conj, chi4);
    EigenSystem E = generate_synthetic(QI, pairs, 8, 2, 100, 31);
    UniquenessReport same = verify_uniqueness(E, conj, chi4, chi4.induce(8), 100);
    REQUIRE(same.equal);
    UniquenessReport diff = verify_uniqueness(E, conj, chi4, chi8, 100);
    REQUIRE(!diff.equal);
    REQUIRE(diff.witness_prime.has_value());
    REQUIRE(E.ap_at(*diff.witness_prime) != E.hecke_field()->zero());
    REQUIRE(!(chi4.evaluate(*diff.witness_prime) == chi8.evaluate(*diff.witness_prime)));
  });

  run("fixed field of the detected group", [&] {
    NumberFieldPtr Z8 =
        NumberField::make(RationalPoly({Rational(1), Rational(0), Rational(0), Rational(0),
                                        Rational(1)}));
    DirichletCharacter chi4 = synth_suite::quad_char(4, Z8, {{3, -1}});
    std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
    pairs.emplace_back(FieldAutomorphism(Z8, Z8->generator()), DirichletCharacter::trivial(1, Z8));
    pairs.emplace_back(synth_suite::power_automorphism(Z8, 5), chi4);  // fixes even powers
    EigenSystem E = generate_synthetic(Z8, pairs, 4, 2, 100, 17);
    TwistGroup T = detect_inner_twists(E, 100);
    REQUIRE(T.elements.size() == 2);
    FixedFieldResult ff = fixed_field(E, T);
    REQUIRE(ff.field->degree() == 2);  // the even powers of z form Q(i)
    REQUIRE(ff.trace_data_inside);
    REQUIRE(minimal_polynomial(ff.generator_in_ambient).degree() == 2);
    REQUIRE(express_in_powers(Z8->generator().pow(2), ff.generator_in_ambient).has_value());
    // a Klein group fixes only Q
    auto klein = synth_suite::suite_configs();
    for (const auto& cfg : klein)
      if (cfg.name == "Z8-klein8") {
        EigenSystem E4 = generate_synthetic(cfg.K, cfg.pairs, cfg.level, cfg.weight, 100, 23);
        TwistGroup T4 = detect_inner_twists(E4, 100);
        REQUIRE(T4.elements.size() == 4);
        FixedFieldResult f4 = fixed_field(E4, T4);
        REQUIRE(f4.field->degree() == 1);
        REQUIRE(f4.trace_data_inside);
      }
  });

  run("complex-multiplication classification", [&] {
    EigenSystem cm = cm_like_system(QI, 100);
    CmResult r = is_cm(cm, 100);
    REQUIRE(r.kind == CmResult::Kind::cm);
    REQUIRE(r.character.has_value());
    REQUIRE(r.character->conductor() == 4);
    // with too few vanishing witnesses the verdict degrades honestly
    EigenSystem small = cm_like_system(QI, 8);  // p = 3, 7 vanish: only two witnesses
    CmResult s = is_cm(small, 8);
    REQUIRE(s.kind == CmResult::Kind::inconclusive);
    // generic synthetic data has no quadratic vanishing pattern
    auto cfg = synth_suite::suite_configs()[1];
    EigenSystem plain = generate_synthetic(cfg.K, cfg.pairs, cfg.level, cfg.weight, 100, 29);
    REQUIRE(is_cm(plain, 100).kind == CmResult::Kind::none);
  });

  run("wide moduli recover conductors past the level", [&] {
    DirichletCharacter chi8 = synth_suite::quad_char(8, QI, {{3, -1}, {7, 1}});
    std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
    pairs.emplace_back(FieldAutomorphism(QI, QI->generator()), DirichletCharacter::trivial(1, QI));
    FieldAutomorphism conj(QI, -QI->generator());
    pairs.emplace_back(conj, chi8);
    EigenSystem base = generate_synthetic(QI, pairs, 8, 2, 100, 41);
    // repackage the same eigenvalues at level 4: the conductor-8 character no
    // longer divides the level, so the narrow search must refute conjugation
    EigenSystem relabeled("relabeled", 4, 2, DirichletCharacter::trivial(4, QI), QI, base.ap());
    TwistGroup narrow = detect_inner_twists(relabeled, 100);
    REQUIRE(narrow.elements.size() == 1);
    REQUIRE(narrow.elements[0].automorphism.is_identity());
    REQUIRE(narrow.inconclusive.empty());  // refuted, not starved
    TwistGroup wide = detect_inner_twists(relabeled, 100, true);
    REQUIRE(wide.elements.size() == 2);
    const InnerTwist* t = wide.find(conj);
    REQUIRE(t != nullptr);
    REQUIRE(t->character.same_primitive(chi8));
  });

  run("starved residue classes stay inconclusive", [&] {
    // conductor 15: the class 1 mod 15 contains only 31 and 61 below 100
    DirichletCharacter chi15 =
        synth_suite::quad_char(15, QI, {{2, 1}, {7, -1}});  // the mod-3 times the mod-5 character
    REQUIRE(chi15.conductor() == 15);
    std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
    pairs.emplace_back(FieldAutomorphism(QI, QI->generator()), DirichletCharacter::trivial(1, QI));
    FieldAutomorphism conj(QI, -QI->generator());
    pairs.emplace_back(conj, chi15);
    EigenSystem E = generate_synthetic(QI, pairs, 15, 2, 100, 53);
    TwistGroup T = detect_inner_twists(E, 100);
    REQUIRE(T.elements.size() == 1);  // only the identity is confirmed
    REQUIRE(T.inconclusive.size() == 1);
    REQUIRE(T.inconclusive[0] == conj);
    // raising the bound resolves it
    EigenSystem E2 = generate_synthetic(QI, pairs, 15, 2, 200, 53);
    TwistGroup T2 = detect_inner_twists(E2, 200);
    REQUIRE(T2.elements.size() == 2);
    REQUIRE(T2.inconclusive.empty());
  });

  run("fixture systems: documented groups at bound 100", [&] {
    EigenSystem f = load_fixture("level30_f.json");
    TwistGroup Tf = detect_inner_twists(f, 100);
    REQUIRE(Tf.elements.size() == 2);
    REQUIRE(Tf.inconclusive.empty());
    REQUIRE(Tf.contains_identity());
    const InnerTwist* nontrivial = nullptr;
    for (const auto& t : Tf.elements)
      if (!t.automorphism.is_identity()) nontrivial = &t;
    REQUIRE(nontrivial != nullptr);
    REQUIRE(nontrivial->character.conductor() == 5);
    REQUIRE(nontrivial->character.order() == 2);
    REQUIRE(static_cast<long>(nontrivial->verified_primes.size()) > 10);
    REQUIRE(cocycle_check(Tf));
    REQUIRE(determinant_relation_check(f, Tf));

    EigenSystem f1 = load_fixture("level100_f1.json");
    TwistGroup T1 = detect_inner_twists(f1, 100);
    REQUIRE(T1.elements.size() == 2);
    REQUIRE(T1.inconclusive.size() == 6);  // modulus 100 cannot be refuted below 100
    const InnerTwist* n1 = nullptr;
    for (const auto& t : T1.elements)
      if (!t.automorphism.is_identity()) n1 = &t;
    REQUIRE(n1 != nullptr);
    REQUIRE(n1->character.conductor() == 4);
    REQUIRE(cocycle_check(T1));
    REQUIRE(determinant_relation_check(f1, T1));
    REQUIRE(T1.field_galois);
  });

  run("explicit candidate moduli behave like the defaults", [&] {
    DirichletCharacter chi4 = synth_suite::quad_char(4, QI, {{3, -1}});
    std::vector<std::pair<FieldAutomorphism, DirichletCharacter>> pairs;
    pairs.emplace_back(FieldAutomorphism(QI, QI->generator()), DirichletCharacter::trivial(1, QI));
    pairs.emplace_back(FieldAutomorphism(QI, -QI->generator()), chi4);
    EigenSystem E = generate_synthetic(QI, pairs, 4, 2, 100, 61);
    TwistGroup T1 = detect_inner_twists(E, 100);
    TwistGroup T2 = detect_inner_twists(E, std::vector<long>{1, 2, 4}, 100);
    REQUIRE(T1.elements.size() == T2.elements.size());
    for (const auto& t : T1.elements) {
      const InnerTwist* u = T2.find(t.automorphism);
      REQUIRE(u != nullptr);
      REQUIRE(u->character.same_primitive(t.character));
    }
    // offering only the trivial modulus refutes the conjugation twist
    TwistGroup T3 = detect_inner_twists(E, std::vector<long>{1}, 100);
    REQUIRE(T3.elements.size() == 1);
    REQUIRE(T3.inconclusive.empty());
  });

  return testutil::summary("test_twists");
}
