#include <cstdlib>
#include <fstream>
#include <string>

#include "test_util.hpp"
#include "twistkit/embeddings.hpp"
#include "twistkit/eigensystem.hpp"
#include "twistkit/json_io.hpp"

using namespace twistkit;
using testutil::run;

namespace {

std::string fixtures_dir() {
  if (const char* env = std::getenv("TWISTKIT_FIXTURES")) return env;
  return "fixtures";
}

io::Json load(const std::string& name) {
  return io::read_json_file(fixtures_dir() + "/" + name);
}

// A tiny hand-rolled weight-2 system over Q(i) at level 4 for constructor
// edge cases: a_p = 0 at p = 3 (mod 4), a_p in Z[i] elsewhere.
EigenSystem small_system(const NumberFieldPtr& QI, long bound) {
  std::map<long, NFElem> ap;
  for (long p : primes_up_to(bound)) {
    if (p == 2)
      ap[p] = QI->zero();
    else if (p % 4 == 1)
      ap[p] = QI->element(RationalPoly({Rational(2), Rational(1)}));
    else
      ap[p] = QI->zero();
  }
  return EigenSystem("toy", 4, 2, DirichletCharacter::trivial(4, QI), QI, ap);
}

}  // namespace

int main() {
  NumberFieldPtr QI = NumberField::make(RationalPoly({Rational(1), Rational(0), Rational(1)}));

  run("fixture loading", [&] {
    EigenSystem f = io::eigensystem_from_json(load("level30_f.json"));
    EigenSystem g = io::eigensystem_from_json(load("level30_g.json"));
    EigenSystem f1 = io::eigensystem_from_json(load("level100_f1.json"));
    EigenSystem f2 = io::eigensystem_from_json(load("level100_f2.json"));
    REQUIRE(f.level() == 30 && g.level() == 30);
    REQUIRE(f1.level() == 100 && f2.level() == 100);
    REQUIRE(f.weight() == 2 && f1.weight() == 2);
    REQUIRE(f.hecke_field()->degree() == 4);
    REQUIRE(f1.hecke_field()->degree() == 8);
    REQUIRE(f.prime_bound() == 97);
    REQUIRE(f1.prime_bound() == 97);
    REQUIRE(f.nebentypus().conductor() == 15);
    REQUIRE(f.nebentypus().order() == 4);
    REQUIRE(f1.nebentypus().conductor() == 20);
    REQUIRE(f1.nebentypus().order() == 4);
    REQUIRE(f.ap().size() == 25);
    REQUIRE(f.ap_squared().size() == 4);  // p = 2, 3, 5, 7
  });

  run("serialization round trip is canonical", [&] {
    for (const char* name :
         {"level30_f.json", "level30_g.json", "level100_f1.json", "level100_f2.json"}) {
      io::Json doc = load(name);
      EigenSystem E = io::eigensystem_from_json(doc);
      REQUIRE(io::eigensystem_to_json(E).dump(2) == doc.dump(2));
    }
  });

  run("recursion and eigenvalue bounds hold on all fixtures", [&] {
    for (const char* name :
         {"level30_f.json", "level30_g.json", "level100_f1.json", "level100_f2.json"}) {
      EigenSystem E = io::eigensystem_from_json(load(name));
      CheckReport h = hecke_consistency(E);
      REQUIRE_MSG(h.ok, name << ": " << (h.failures.empty() ? "" : h.failures[0]));
      CheckReport r = ramanujan_check(E, 128);
      REQUIRE_MSG(r.ok, name << ": " << (r.failures.empty() ? "" : r.failures[0]));
    }
  });

  run("prime-square values match the recursion, recomputed directly", [&] {
    for (const char* name : {"level30_f.json", "level100_f1.json"}) {
      EigenSystem E = io::eigensystem_from_json(load(name));
      const NumberFieldPtr& K = E.hecke_field();
      for (const auto& [p, apsq] : E.ap_squared()) {
        NFElem eps = E.nebentypus().evaluate(p);
        NFElem expect = E.ap_at(p) * E.ap_at(p) -
                        eps * K->from_rational(Rational(p));  // weight 2: p^(k-1) = p
        REQUIRE(apsq == expect);
        REQUIRE(E.predicted_ap_squared(p) == expect);
      }
    }
  });

  run("eigenvalue bound, numeric cross-check", [&] {
    EigenSystem E = io::eigensystem_from_json(load("level30_f.json"));
    const RationalPoly& fpoly = E.hecke_field()->poly();
    auto roots = complex_roots(fpoly, 160);
    for (const auto& [p, a] : E.ap()) {
      if (30 % p == 0) continue;
      for (const BigComplex& r : roots) {
        std::complex<double> z = to_complex_double(r), acc(0, 0);
        for (int i = a.rep().degree(); i >= 0; --i)
          acc = acc * z + std::complex<double>(a.rep().coeff(i).get_d(), 0);
        REQUIRE(std::abs(acc) <= 2.0 * std::sqrt(static_cast<double>(p)) * (1 + 1e-6));
      }
    }
  });

  run("constructor validation", [&] {
    EigenSystem toy = small_system(QI, 20);
    REQUIRE(toy.prime_bound() == 19);
    REQUIRE(toy.has_ap(7));
    REQUIRE(!toy.has_ap(23));
    REQUIRE_THROWS(toy.ap_at(23), std::exception);
    // gaps in prime coverage are rejected
    std::map<long, NFElem> gap{{2, QI->zero()}, {5, QI->one()}};
    REQUIRE_THROWS(EigenSystem("bad", 4, 2, DirichletCharacter::trivial(4, QI), QI, gap),
                   std::invalid_argument);
    // composite indices are rejected
    std::map<long, NFElem> comp{{2, QI->zero()}, {3, QI->one()}, {4, QI->one()}};
    REQUIRE_THROWS(EigenSystem("bad", 4, 2, DirichletCharacter::trivial(4, QI), QI, comp),
                   std::invalid_argument);
    // prime-square table must be keyed by primes with known a_p
    std::map<long, NFElem> ap{{2, QI->zero()}, {3, QI->one()}};
    std::map<long, NFElem> badsq{{6, QI->one()}};
    REQUIRE_THROWS(EigenSystem("bad", 4, 2, DirichletCharacter::trivial(4, QI), QI, ap, badsq),
                   std::invalid_argument);
    // nebentypus at a smaller modulus is induced up to the level
    EigenSystem ind("ind", 20, 2, DirichletCharacter::trivial(4, QI), QI, ap);
    REQUIRE(ind.nebentypus().modulus() == 20);
    // trivial characters induce across moduli because the conductor is 1
    EigenSystem ind7("ind7", 20, 2, DirichletCharacter::trivial(7, QI), QI, ap);
    REQUIRE(ind7.nebentypus().modulus() == 20);
    // a conductor that does not divide the level is rejected
    DirichletCharacter chi7 = quadratic_characters(7, QI)[1];
    REQUIRE(chi7.conductor() == 7);
    REQUIRE_THROWS(EigenSystem("bad", 20, 2, chi7, QI, ap), std::invalid_argument);
    // weights below 1 are rejected
    REQUIRE_THROWS(EigenSystem("bad", 4, 0, DirichletCharacter::trivial(4, QI), QI, ap),
                   std::invalid_argument);
  });

  run("recursion check flags corrupted squares", [&] {
    std::map<long, NFElem> ap{{2, QI->one()}, {3, QI->generator()}};
    std::map<long, NFElem> sq{{3, QI->one()}};  // wrong: should be i*i - 3 = -4 at level 4
    EigenSystem E("corrupt", 4, 2, DirichletCharacter::trivial(4, QI), QI, ap, sq);
    CheckReport r = hecke_consistency(E);
    REQUIRE(!r.ok);
    REQUIRE(!r.failures.empty());
    // the honest value: a_3^2 - eps(3)*3 with eps trivial at 3
    std::map<long, NFElem> good{
        {3, QI->generator() * QI->generator() - QI->from_rational(Rational(3))}};
    EigenSystem E2("fine", 4, 2, DirichletCharacter::trivial(4, QI), QI, ap, good);
    REQUIRE(hecke_consistency(E2).ok);
  });

  run("eigenvalue bound flags violations", [&] {
    std::map<long, NFElem> ap{{2, QI->zero()}, {3, QI->from_rational(Rational(50))}};
    EigenSystem E("loud", 4, 2, DirichletCharacter::trivial(4, QI), QI, ap);
    CheckReport r = ramanujan_check(E, 128);
    REQUIRE(!r.ok);  // |a_3| = 50 > 2*sqrt(3)
    CheckReport quiet = ramanujan_check(small_system(QI, 30), 128);
    REQUIRE(quiet.ok);  // |2+i| = sqrt(5) < 2*sqrt(p) for p >= 2
  });

  run("corrupted documents are rejected with input errors", [&] {
    io::Json doc = load("level30_f.json");
    io::Json missing = doc;
    missing.erase("level");
    REQUIRE_THROWS(io::eigensystem_from_json(missing), std::invalid_argument);
    io::Json badap = doc;
    badap["ap"]["9"] = badap["ap"]["7"];
    REQUIRE_THROWS(io::eigensystem_from_json(badap), std::invalid_argument);
    io::Json badsq = doc;
    badsq["apsq"]["10"] = badsq["apsq"]["9"];
    REQUIRE_THROWS(io::eigensystem_from_json(badsq), std::invalid_argument);
    io::Json badrat = doc;
    badrat["weight"] = "two";
    REQUIRE_THROWS(io::eigensystem_from_json(badrat), std::exception);
  });

  run("prime utilities", [&] {
    auto ps = primes_up_to(100);
    REQUIRE(ps.size() == 25);
    REQUIRE(ps.front() == 2);
    REQUIRE(ps.back() == 97);
    int count = 0;
    for (long n = 0; n <= 500; ++n) {
      bool brute = n >= 2;
      for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) brute = false;
      REQUIRE(is_prime(n) == brute);
      if (brute) ++count;
    }
    REQUIRE(count == 95);
  });

  return testutil::summary("test_newforms");
}
