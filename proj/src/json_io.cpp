#include "symfrac/json_io.hpp"

namespace symfrac {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, "JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json coeff_json(const Coeff& c) { return c.to_string(); }

Coeff coeff_from(const json& j, const RingSpec& ring) {
  if (j.is_number_integer()) return Coeff(ring, j.get<long long>());
  if (!j.is_string()) bad("coefficient must be a string or integer");
  return Coeff::parse(ring, j.get<std::string>());
}

RingSpec ring_from(const json& j) {
  if (!j.is_string()) bad("ring must be a string");
  return RingSpec::parse(j.get<std::string>());
}

std::vector<unsigned> unsigned_list(const json& j) {
  if (!j.is_array()) bad("expected an array of non-negative integers");
  std::vector<unsigned> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) bad("expected a non-negative integer");
    out.push_back(x.get<unsigned>());
  }
  return out;
}

json partition_json(const Partition& p) { return p.parts(); }

Partition partition_from(const json& j) {
  auto parts = unsigned_list(j);
  for (unsigned x : parts)
    if (x == 0) bad("partition parts must be positive");
  return Partition(parts);
}

std::size_t size_from(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) bad("expected a positive integer");
  return j.get<std::size_t>();
}

std::optional<Provenance> provenance_from(const std::string& s) {
  for (auto p : {Provenance::Newton, Provenance::Hankel, Provenance::RemovablePole, Provenance::Indeterminate})
    if (s == to_string(p)) return p;
  return std::nullopt;
}

}  // namespace

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coeff", coeff_json(t.coeff)}, {"exponents", t.mono.exponents(p.nvars())}});
  return {{"ring", p.ring().to_string()}, {"n", p.nvars()}, {"terms", terms}};
}

MPoly mpoly_from_json(const json& j) {
  RingSpec ring = ring_from(field(j, "ring"));
  std::size_t n = size_from(field(j, "n"));
  std::vector<MPoly::Poly::Term> terms;
  for (const auto& t : field(j, "terms")) {
    auto exps = unsigned_list(field(t, "exponents"));
    if (exps.size() > n) bad("monomial has more than n exponents");
    terms.push_back({Monomial(exps), coeff_from(field(t, "coeff"), ring)});
  }
  return MPoly(n, MPoly::Poly::from_terms(ring, std::move(terms)));
}

json to_json(const EExpansion& e) {
  json terms = json::array();
  for (const auto& [lambda, c] : e.entries()) terms.push_back({{"coeff", coeff_json(c)}, {"e", partition_json(lambda)}});
  return {{"ring", e.ring().to_string()}, {"n", e.nvars()}, {"terms", terms}, {"text", e.to_string()}};
}

EExpansion eexpansion_from_json(const json& j) {
  RingSpec ring = ring_from(field(j, "ring"));
  std::size_t n = size_from(field(j, "n"));
  std::vector<std::pair<Partition, Coeff>> terms;
  for (const auto& t : field(j, "terms")) {
    Partition lambda = partition_from(field(t, "e"));
    if (lambda.largest() > n) bad("e-index exceeds n");
    terms.emplace_back(lambda, coeff_from(field(t, "coeff"), ring));
  }
  return EExpansion::from_terms(n, ring, terms);
}

json ppoly_to_json(const PPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms())
    terms.push_back({{"coeff", coeff_json(t.coeff)}, {"p", partition_json(Partition::from_monomial(t.mono))}});
  return terms;
}

PPoly ppoly_from_json(const json& j, const RingSpec& ring) {
  if (!j.is_array()) bad("polynomial must be an array of terms");
  std::vector<PPoly::Term> terms;
  for (const auto& t : j) terms.push_back({partition_from(field(t, "p")).to_monomial(), coeff_from(field(t, "coeff"), ring)});
  return PPoly::from_terms(ring, std::move(terms));
}

json to_json(const PRat& a) {
  return {{"ring", a.ring().to_string()}, {"num", ppoly_to_json(a.num())}, {"den", ppoly_to_json(a.den())}, {"text", a.render()}};
}

PRat prat_from_json(const json& j) {
  RingSpec ring = ring_from(field(j, "ring"));
  return PRat(ppoly_from_json(field(j, "num"), ring), ppoly_from_json(field(j, "den"), ring));
}

json to_json(const EFormula& f, std::optional<bool> verified) {
  json j{{"k", f.k},
         {"n", f.n},
         {"ring", f.ring.to_string()},
         {"num", ppoly_to_json(f.value.num())},
         {"den", ppoly_to_json(f.value.den())},
         {"route", to_string(f.route)},
         {"denominator", f.denominator_id()},
         {"text", f.render()},
         {"mixed",
          {{"num", ppoly_to_json(f.mixed.num())},
           {"den", ppoly_to_json(f.mixed.den())},
           {"offset", f.mixed_offset},
           {"text", f.render_mixed()}}}};
  if (verified) j["verified"] = *verified;
  return j;
}

EFormula eformula_from_json(const json& j) {
  RingSpec ring = ring_from(field(j, "ring"));
  unsigned k = static_cast<unsigned>(size_from(field(j, "k")));
  std::size_t n = size_from(field(j, "n"));
  PRat value(ppoly_from_json(field(j, "num"), ring), ppoly_from_json(field(j, "den"), ring));
  std::string route = field(j, "route").get<std::string>();
  if (route != "newton" && route != "hankel") bad("unknown route " + route);
  std::optional<HankelSpec> den;
  if (route == "hankel") den = HankelSpec{static_cast<unsigned>(n - k + 1), n, 1};
  const json& mixed = field(j, "mixed");
  PRat m(ppoly_from_json(field(mixed, "num"), ring), ppoly_from_json(field(mixed, "den"), ring));
  return EFormula{k, n, ring, value, route == "newton" ? Route::Newton : Route::Hankel, den, m,
                  size_from(field(mixed, "offset"))};
}

json to_json(const CharPoly& ch) {
  json coeffs = json::array();
  for (const auto& c : ch.coeffs) coeffs.push_back(coeff_json(c));
  json prov = json::object();
  for (std::size_t k = 0; k < ch.provenance.size(); ++k) prov["e" + std::to_string(k + 1)] = to_string(ch.provenance[k]);
  return {{"ring", ch.ring.to_string()}, {"coeffs", coeffs}, {"provenance", prov}, {"warnings", ch.warnings},
          {"text", ch.to_string()}};
}

CharPoly charpoly_from_json(const json& j) {
  RingSpec ring = ring_from(field(j, "ring"));
  CharPoly ch{ring, {}, {}, {}};
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.size() < 2) bad("coeffs must list c_0 .. c_n");
  for (const auto& c : coeffs) ch.coeffs.push_back(coeff_from(c, ring));
  if (!ch.coeffs.back().is_one()) bad("characteristic polynomial must be monic");
  if (j.contains("provenance")) {
    for (std::size_t k = 1; k <= ch.degree(); ++k) {
      std::string key = "e" + std::to_string(k);
      if (!j["provenance"].contains(key)) break;
      auto p = provenance_from(j["provenance"][key].get<std::string>());
      if (!p) bad("unknown provenance for " + key);
      ch.provenance.push_back(*p);
    }
  }
  if (j.contains("warnings")) ch.warnings = j["warnings"].get<std::vector<std::string>>();
  return ch;
}

json to_json(const MembershipAnswer& a) {
  json cert = json::array();
  for (const auto& [lambda, c] : a.certificate) cert.push_back({{"coeff", coeff_json(c)}, {"p", partition_json(lambda)}});
  return {{"member", a.member},
          {"certificate", cert},
          {"spanning_dimension", a.spanning_dimension},
          {"slice_dimension", a.slice_dimension},
          {"failing_degrees", a.failing_degrees}};
}

MembershipAnswer membership_from_json(const json& j, const RingSpec& ring) {
  MembershipAnswer a{field(j, "member").get<bool>(), {}, field(j, "spanning_dimension").get<std::size_t>(),
                     field(j, "slice_dimension").get<std::size_t>(), unsigned_list(field(j, "failing_degrees"))};
  for (const auto& t : field(j, "certificate")) a.certificate.emplace_back(partition_from(field(t, "p")), coeff_from(field(t, "coeff"), ring));
  return a;
}

Matrix<Coeff> matrix_from_json(const json& j, const RingSpec& ring) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  Matrix<Coeff> m(n, n, Coeff(ring));
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = coeff_from(j[i][c], ring);
  }
  return m;
}

}  // namespace symfrac
