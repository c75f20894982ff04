#include "ajcable/serialize.hpp"

namespace ajcable {

namespace {

mpz_class parse_integer(const json& j) {
  mpz_class c;
  if (!j.is_string() || c.set_str(j.get<std::string>(), 10) != 0)
    throw UsageError("coefficient must be a decimal string");
  return c;
}

void expect_vars(const json& j, std::initializer_list<const char*> vars) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw UsageError("polynomial JSON needs \"vars\" and \"terms\"");
  json expected = json::array();
  for (const char* v : vars) expected.push_back(v);
  if (j["vars"] != expected) throw UsageError("unexpected variable list " + j["vars"].dump());
}

}  // namespace

json to_json(const LaurentPoly1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
  return {{"vars", {"t"}}, {"terms", terms}};
}

json to_json(const LaurentQ& p, const std::string& var) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
  return {{"vars", {var}}, {"terms", terms}};
}

json to_json(const LaurentPoly2& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.t, e.m, c.get_str()});
  return {{"vars", {"t", "M"}}, {"terms", terms}};
}

json to_json(const QTorusOperator& op) {
  json parts = json::array();
  for (const auto& [k, a] : op.coeffs()) parts.push_back({k, to_json(a)});
  return {{"op", parts}};
}

json to_json(const CommutativeMLPoly& p) {
  json parts = json::array();
  for (const auto& [k, a] : p.coeffs()) parts.push_back({k, to_json(a, "M")});
  return {{"op", parts}};
}

json to_json(const AnnihilatorCertificate& cert) {
  return {{"r", cert.r},
          {"m", cert.m},
          {"S", to_json(cert.op)},
          {"checked", cert.annihilation.checked},
          {"result", cert.pass() ? "pass" : "fail"}};
}

json to_json(const AJReport& report) {
  json witness = nullptr;
  if (report.witness) witness = {{"num", to_json(report.witness->num)}, {"den", to_json(report.witness->den)}};
  return {{"r", report.r},
          {"proportional", report.proportional},
          {"witness", witness},
          {"epsilon_S", to_json(report.epsilon_S)},
          {"a_poly", to_json(report.a_poly)},
          {"annihilation_checked", report.certificate.annihilation.checked}};
}

LaurentPoly1 poly1_from_json(const json& j) {
  expect_vars(j, {"t"});
  std::vector<LaurentPoly1::Term> terms;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 2) throw UsageError("bad term " + term.dump());
    terms.emplace_back(term[0].get<long>(), parse_integer(term[1]));
  }
  return LaurentPoly1::from_terms(std::move(terms));
}

LaurentPoly2 poly2_from_json(const json& j) {
  expect_vars(j, {"t", "M"});
  std::vector<LaurentPoly2::Term> terms;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 3) throw UsageError("bad term " + term.dump());
    terms.emplace_back(Exponent2{term[0].get<long>(), term[1].get<long>()}, parse_integer(term[2]));
  }
  return LaurentPoly2::from_terms(std::move(terms));
}

QTorusOperator operator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("op")) throw UsageError("operator JSON needs \"op\"");
  QTorusOperator out;
  for (const auto& part : j["op"]) {
    if (!part.is_array() || part.size() != 2) throw UsageError("bad operator part " + part.dump());
    out += QTorusOperator::monomial(poly2_from_json(part[1]), part[0].get<long>());
  }
  return out;
}

}  // namespace ajcable
