#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qfejer/element.hpp"
#include "qfejer/fejer.hpp"
#include "qfejer/folner.hpp"
#include "qfejer/gauge.hpp"
#include "qfejer/psd.hpp"

namespace qfejer {

using Json = nlohmann::json;

namespace detail {

/// Integers that fit 64 bits are emitted as JSON numbers; larger ones fall
/// back to decimal strings so no precision is lost.
inline Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

inline mpz_class integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw Error(what + " is not a decimal integer: " + j.get<std::string>());
    return z;
  }
  throw Error(what + " must be an integer or a decimal string");
}

inline Json fraction_to_json(const Rational& r) {
  return Json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

inline Rational fraction_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2)
    throw Error(what + " must be a [numerator, denominator] pair");
  mpz_class num = integer_from_json(j[0], what + " numerator");
  mpz_class den = integer_from_json(j[1], what + " denominator");
  if (den <= 0) throw Error(what + " denominator must be positive");
  return rational(num, den);
}

inline long long small_int_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(what + " must be an integer");
  return j.get<long long>();
}

}  // namespace detail

inline Json element_to_json(const Element& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    terms.push_back({{"re", detail::fraction_to_json(c.re)},
                     {"im", detail::fraction_to_json(c.im)},
                     {"g", m.g},
                     {"p", m.p},
                     {"q", m.q},
                     {"h", m.h}});
  }
  return {{"system", a.system().name()}, {"terms", terms}};
}

/// Strict load: unknown system names, non-member p or q, h outside [0, q),
/// zero coefficients, and duplicate monomials are all rejected.
inline Element element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("system") || !j.contains("terms"))
    throw Error("element JSON must be {\"system\": ..., \"terms\": [...]}");
  if (!j["system"].is_string()) throw Error("element system must be a string");
  SystemDescriptor sys = SystemDescriptor::parse(j["system"].get<std::string>());
  if (!j["terms"].is_array()) throw Error("element terms must be an array");
  Element out = Element::zero(sys);
  for (const Json& t : j["terms"]) {
    if (!t.is_object()) throw Error("element term must be an object");
    for (const char* key : {"re", "im", "g", "p", "q", "h"})
      if (!t.contains(key)) throw Error(std::string("element term lacks \"") + key + "\"");
    GaussianRational c(detail::fraction_from_json(t["re"], "re"),
                       detail::fraction_from_json(t["im"], "im"));
    if (c.is_zero()) throw Error("element term has zero coefficient");
    Monomial m{detail::small_int_from_json(t["g"], "g"),
               detail::small_int_from_json(t["p"], "p"),
               detail::small_int_from_json(t["q"], "q"),
               detail::small_int_from_json(t["h"], "h")};
    if (out.terms().count(m)) throw Error("element JSON repeats a monomial");
    out.add_term(m, c);  // validates membership and 0 <= h < q
  }
  return out;
}

inline Json decomposition_to_json(const GradedDecomposition& dec) {
  Json out = Json::array();
  for (const auto& [d, comp] : dec)
    out.push_back({{"degree", to_string(d)}, {"element", element_to_json(comp)}});
  return out;
}

inline Json sparse_vector_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v)
    out.push_back({{"k", k},
                   {"re", detail::fraction_to_json(c.re)},
                   {"im", detail::fraction_to_json(c.im)}});
  return out;
}

inline Json report_to_json(const ConvergenceReport& rep) {
  Json rows = Json::array();
  for (const ConvergenceRow& r : rep.rows)
    rows.push_back({{"n", r.n},
                    {"B_n", detail::fraction_to_json(r.b_n)},
                    {"lower_sq", detail::fraction_to_json(r.lower_sq)},
                    {"exact_equal", r.exact_equal}});
  return {{"id", rep.id}, {"rows", rows}};
}

inline std::string report_to_csv(const ConvergenceReport& rep) {
  std::string out = "n,B_n_num,B_n_den,lower_sq_num,lower_sq_den,exact_equal\n";
  for (const ConvergenceRow& r : rep.rows) {
    out += std::to_string(r.n) + "," + r.b_n.get_num().get_str() + "," +
           r.b_n.get_den().get_str() + "," + r.lower_sq.get_num().get_str() + "," +
           r.lower_sq.get_den().get_str() + "," + (r.exact_equal ? "true" : "false") +
           "\n";
  }
  return out;
}

inline Json kernel_to_json(const KernelPolynomial& k) {
  Json out = Json::array();
  for (const auto& [h, coeff] : k)
    out.push_back({{"h", Json(h)}, {"coeff", to_string(coeff)}});
  return out;
}

/// Two aligned columns: exponent vector, then the coefficient as "num/den".
inline std::string kernel_to_text(const KernelPolynomial& k) {
  std::size_t width = 1;
  for (const auto& [h, coeff] : k) width = std::max(width, to_string(h).size());
  std::string out;
  for (const auto& [h, coeff] : k) {
    std::string hs = to_string(h);
    out += hs + std::string(width - hs.size() + 2, ' ') + to_string(coeff) + "\n";
  }
  return out;
}

inline Json commutant_to_json(const CommutantReport& rep) {
  Json offending = Json::array();
  for (const Degree& d : rep.offending) offending.push_back(to_string(d));
  return {{"commutes", rep.commutes},
          {"offending_degrees", offending},
          {"scalar_part_re", detail::fraction_to_json(rep.scalar_part.re)},
          {"scalar_part_im", detail::fraction_to_json(rep.scalar_part.im)}};
}

inline Json ldlt_to_json(const LdltResult& r) {
  Json out;
  out["psd"] = r.psd;
  out["rank"] = static_cast<long long>(r.rank);
  if (r.psd) {
    out["perm"] = r.perm;
    Json diag = Json::array();
    for (const Rational& d : r.diag) diag.push_back(to_string(d));
    out["diag"] = diag;
    Json L = Json::array();
    for (const auto& row : r.L) {
      Json jr = Json::array();
      for (const Rational& x : row) jr.push_back(to_string(x));
      L.push_back(jr);
    }
    out["L"] = L;
  } else {
    Json w = Json::array();
    for (const Rational& x : *r.negative_witness) w.push_back(to_string(x));
    out["negative_witness"] = w;
  }
  return out;
}

}  // namespace qfejer
