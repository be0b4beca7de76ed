#include "twistkit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twistkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void require(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing required key \"") + key + "\"");
  return *it;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rational values must be strings like \"3/8\"");
  std::string s = j.get<std::string>();
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    bad("cannot parse rational \"" + s + "\"");
  require(sgn(Rational(q.get_den())) > 0, "rational \"" + s + "\" has a nonpositive denominator");
  q.canonicalize();
  return q;
}

Json poly_to_json(const RationalPoly& p) {
  Json a = Json::array();
  for (const Rational& c : p.coeffs()) a.push_back(rational_to_json(c));
  return a;
}

RationalPoly poly_from_json(const Json& j) {
  require(j.is_array(), "polynomials must be arrays of rationals, constant term first");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return RationalPoly(std::move(c));
}

Json field_to_json(const NumberFieldPtr& K) {
  Json j = Json::object();
  j["poly"] = poly_to_json(K->poly());
  return j;
}

NumberFieldPtr field_from_json(const Json& j) {
  require(j.is_object(), "a field must be an object with a \"poly\" member");
  RationalPoly f = poly_from_json(member(j, "poly"));
  return NumberField::make(std::move(f));  // validates monic irreducible
}

Json elem_to_json(const NFElem& e) {
  Json j = Json::object();
  j["rep"] = poly_to_json(e.rep());
  return j;
}

NFElem elem_from_json(const Json& j, const NumberFieldPtr& K) {
  // Canonical form {"rep": [...]}; a bare coefficient array is also accepted.
  RationalPoly rep = poly_from_json(j.is_object() ? member(j, "rep") : j);
  require(rep.degree() < K->degree(), "element representative exceeds the field degree");
  return K->element(std::move(rep));
}

Json character_to_json(const DirichletCharacter& chi) {
  Json j = Json::object();
  j["modulus"] = chi.modulus();
  j["gens"] = chi.group().gens();
  Json vals = Json::array();
  for (const NFElem& v : chi.gen_values()) vals.push_back(elem_to_json(v));
  j["values"] = vals;
  j["value_field"] = field_to_json(chi.value_field());
  return j;
}

DirichletCharacter character_from_json(const Json& j) {
  return character_from_json(j, field_from_json(member(j, "value_field")));
}

DirichletCharacter character_from_json(const Json& j, const NumberFieldPtr& K) {
  require(j.is_object(), "a character must be an object");
  long N = member(j, "modulus").get<long>();
  require(N >= 1, "character modulus must be positive");
  const Json& jg = member(j, "gens");
  const Json& jv = member(j, "values");
  require(jg.is_array() && jv.is_array() && jg.size() == jv.size(),
          "\"gens\" and \"values\" must be arrays of equal length");
  std::vector<long> gens;
  std::vector<NFElem> values;
  for (const auto& g : jg) gens.push_back(g.get<long>());
  for (const auto& v : jv) values.push_back(elem_from_json(v, K));

  UnitGroup G = UnitGroup::of(N);
  for (long g : gens)
    require(G.is_unit(g), "character generator is not a unit mod the modulus");
  if (gens == G.gens()) return DirichletCharacter(G, K, values);

  // Arbitrary generating set: enumerate the exponent tuples it spans, keep
  // the lexicographically first tuple reaching each unit, and read off the
  // values on the canonical generators.
  std::map<long, std::vector<long>> reach;
  std::vector<long> ords;
  for (long g : gens) ords.push_back(G.element_order(g));
  std::vector<long> tuple(gens.size(), 0);
  while (true) {
    long u = 1 % N;
    for (size_t i = 0; i < gens.size(); ++i)
      u = (u * power_mod(gens[i], tuple[i], N)) % N;
    if (N == 1) u = 1;
    if (reach.find(u) == reach.end()) reach[u] = tuple;
    size_t i = 0;
    for (; i < tuple.size(); ++i) {
      if (++tuple[i] < ords[i]) break;
      tuple[i] = 0;
    }
    if (i == tuple.size()) break;
  }
  require(static_cast<long>(reach.size()) == G.phi(),
          "supplied generators do not generate the unit group");

  auto value_at = [&](long u) {
    NFElem out = K->one();
    const std::vector<long>& t = reach.at(u);
    for (size_t i = 0; i < gens.size(); ++i) out = out * values[i].pow(t[i]);
    return out;
  };
  std::vector<NFElem> canon_values;
  for (long g : G.gens()) canon_values.push_back(value_at(g));
  DirichletCharacter chi(G, K, canon_values);  // validates value orders
  // The supplied table must be consistent with the group relations.
  for (const auto& [u, t] : reach)
    require(chi.evaluate(u) == value_at(u),
            "character values are inconsistent with the generator relations");
  return chi;
}

Json eigensystem_to_json(const EigenSystem& E) {
  Json j = Json::object();
  j["label"] = E.label();
  j["level"] = E.level();
  j["weight"] = E.weight();
  j["char"] = character_to_json(E.nebentypus());
  j["field"] = field_to_json(E.hecke_field());
  Json ap = Json::object();
  for (const auto& [p, a] : E.ap()) ap[std::to_string(p)] = elem_to_json(a);
  j["ap"] = ap;
  if (!E.ap_squared().empty()) {
    Json apsq = Json::object();
    for (const auto& [p, a] : E.ap_squared()) apsq[std::to_string(p * p)] = elem_to_json(a);
    j["apsq"] = apsq;
  }
  return j;
}

EigenSystem eigensystem_from_json(const Json& j) {
  require(j.is_object(), "an eigen-system must be an object");
  std::string label = member(j, "label").get<std::string>();
  long level = member(j, "level").get<long>();
  int weight = member(j, "weight").get<int>();
  NumberFieldPtr K = field_from_json(member(j, "field"));
  DirichletCharacter chi = character_from_json(member(j, "char"), K);

  auto parse_key = [](const std::string& s) {
    size_t pos = 0;
    long n = 0;
    try {
      n = std::stol(s, &pos);
    } catch (const std::exception&) {
      bad("eigenvalue key \"" + s + "\" is not an integer");
    }
    require(pos == s.size() && n >= 2, "eigenvalue key \"" + s + "\" is not an integer >= 2");
    return n;
  };

  std::map<long, NFElem> ap;
  const Json& jap = member(j, "ap");
  require(jap.is_object(), "\"ap\" must be an object keyed by primes");
  for (auto it = jap.begin(); it != jap.end(); ++it) {
    long p = parse_key(it.key());
    require(is_prime(p), "\"ap\" key " + it.key() + " is not prime");
    ap.emplace(p, elem_from_json(it.value(), K));
  }

  std::map<long, NFElem> apsq;
  if (auto it = j.find("apsq"); it != j.end()) {
    require(it->is_object(), "\"apsq\" must be an object keyed by prime squares");
    for (auto t = it->begin(); t != it->end(); ++t) {
      long n = parse_key(t.key());
      long p = std::lround(std::sqrt(static_cast<double>(n)));
      require(p * p == n && is_prime(p), "\"apsq\" key " + t.key() + " is not a prime square");
      apsq.emplace(p, elem_from_json(t.value(), K));
    }
  }
  try {
    return EigenSystem(std::move(label), level, weight, std::move(chi), K, std::move(ap),
                       std::move(apsq));
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid eigen-system document: ") + e.what());
  }
}

Json matrix_to_json(const RationalMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < M.cols(); ++k) row.push_back(rational_to_json(M.at(i, k)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "a matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    require(r.is_array(), "matrix rows must be arrays");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(rational_from_json(v));
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(std::move(rows));
}

Json expansion_to_json(const SiegelFourierExpansion& F) {
  Json j = Json::object();
  j["genus"] = F.genus();
  j["bound"] = F.bound();
  j["field"] = field_to_json(F.coeff_field());
  Json terms = Json::array();
  for (const auto& [A, t] : F.terms()) {
    Json term = Json::object();
    term["A"] = matrix_to_json(A.to_rational());
    term["t"] = elem_to_json(t);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

SiegelFourierExpansion expansion_from_json(const Json& j) {
  require(j.is_object(), "an expansion must be an object");
  int genus = member(j, "genus").get<int>();
  long bound = member(j, "bound").get<long>();
  NumberFieldPtr K;
  if (auto it = j.find("field"); it != j.end())
    K = field_from_json(*it);
  else
    K = NumberField::rationals();
  SiegelFourierExpansion F(genus, bound, K);
  const Json& terms = member(j, "terms");
  require(terms.is_array(), "\"terms\" must be an array");
  for (const auto& term : terms) {
    RationalMatrix A = matrix_from_json(member(term, "A"));
    require(A.rows() == genus && A.cols() == genus, "index matrix has the wrong size");
    try {
      F.set(HalfIntegralMatrix::from_rational(A), elem_from_json(member(term, "t"), K));
    } catch (const std::invalid_argument& e) {
      bad(std::string("invalid expansion term: ") + e.what());
    }
  }
  return F;
}

Json lift_to_json(const YoshidaLift& Y) {
  Json j = Json::object();
  j["schema"] = kLiftSchema;
  j["left"] = eigensystem_to_json(Y.left);
  j["right"] = eigensystem_to_json(Y.right);
  j["prime_bound"] = Y.prime_bound;
  j["field"] = field_to_json(Y.compositum.field);
  j["notes"] = Y.notes;
  Json spins = Json::array();
  for (const auto& [p, q] : Y.spin_polys) {
    Json s = Json::object();
    s["p"] = p;
    Json coeffs = Json::array();
    for (int i = 0; i <= q.degree(); ++i) coeffs.push_back(elem_to_json(q.coeff(i)));
    s["coeffs"] = coeffs;
    spins.push_back(s);
  }
  j["spin"] = spins;
  return j;
}

YoshidaLift lift_from_json(const Json& j) {
  require(j.is_object(), "a lift must be an object");
  require(member(j, "schema").get<std::string>() == kLiftSchema,
          std::string("unsupported lift schema (expected ") + kLiftSchema + ")");
  EigenSystem left = eigensystem_from_json(member(j, "left"));
  EigenSystem right = eigensystem_from_json(member(j, "right"));
  long bound = member(j, "prime_bound").get<long>();
  // Reconstruct instead of trusting the serialized spin data; the document's
  // copy is then verified against the reconstruction.
  YoshidaLift Y = build_lift(left, right, bound);
  const Json& spins = member(j, "spin");
  size_t count = 0;
  for (const auto& s : spins) {
    long p = member(s, "p").get<long>();
    auto it = Y.spin_polys.find(p);
    require(it != Y.spin_polys.end(), "lift document lists a prime outside the rebuilt lift");
    const Json& coeffs = member(s, "coeffs");
    require(static_cast<int>(coeffs.size()) == it->second.degree() + 1,
            "serialized spin polynomial has the wrong degree");
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
      require(elem_from_json(coeffs[i], Y.compositum.field) == it->second.coeff(i),
              "serialized spin polynomial disagrees with the rebuilt lift");
    ++count;
  }
  require(count == Y.spin_polys.size(), "lift document is missing spin polynomials");
  return Y;
}

Json subfield_to_json(const SubfieldResult& S) {
  Json j = Json::object();
  j["poly"] = poly_to_json(S.subfield->poly());
  j["degree"] = S.subfield->degree();
  j["generator_in_ambient"] = elem_to_json(S.generator_image);
  return j;
}

Json twist_group_to_json(const TwistGroup& T) {
  Json j = Json::object();
  j["base"] = T.base_label;
  j["level"] = T.level;
  j["prime_bound"] = T.prime_bound;
  j["field"] = field_to_json(T.field);
  j["field_galois"] = T.field_galois;
  Json elems = Json::array();
  for (const InnerTwist& t : T.elements) {
    Json e = Json::object();
    e["gen_image"] = elem_to_json(t.automorphism.gen_image());
    e["character"] = character_to_json(t.character);
    e["verified_primes"] = t.verified_primes;
    elems.push_back(e);
  }
  j["elements"] = elems;
  Json inc = Json::array();
  for (const FieldAutomorphism& g : T.inconclusive) inc.push_back(elem_to_json(g.gen_image()));
  j["inconclusive"] = inc;
  return j;
}

Json check_report_to_json(const CheckReport& r) {
  Json j = Json::object();
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open \"" + path + "\"");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    bad("parse error in \"" + path + "\": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot open \"" + path + "\" for writing");
  out << j.dump(2) << '\n';
}

}  // namespace twistkit::io
