#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <json.hpp>

#include "weylmin/errors.hpp"
#include "weylmin/fock.hpp"
#include "weylmin/render.hpp"
#include "weylmin/surface.hpp"

namespace weylmin {

// JSON documents, schema "weylmin/1". Layout is described in docs/formats.md.
// Integers that fit in int64 are written as JSON numbers, larger ones as
// decimal strings; both spellings are accepted on input.

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "weylmin/1";

namespace detail {

inline json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline mpz_class integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError(std::string("field '") + what + "' is not an integer: \"" + s + "\"");
    return mpz_class(s);
  }
  throw ParseError(std::string("field '") + what + "' must be an integer");
}

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline mpq_class rational_from_json(const json& num, const json& den, const char* what) {
  mpz_class n = integer_from_json(num, what), d = integer_from_json(den, what);
  if (d <= 0) throw ParseError(std::string("field '") + what + "' has a nonpositive denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

inline int small_int(const json& j, const char* what) {
  const mpz_class z = integer_from_json(j, what);
  if (z < 0 || z > 1'000'000) throw ParseError(std::string("field '") + what + "' out of range");
  return static_cast<int>(z.get_si());
}

inline void check_schema(const json& doc, const char* type) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (field(doc, "schema") != kSchema) throw ParseError(std::string("unsupported schema; expected \"") + kSchema + "\"");
  if (field(doc, "type") != type) throw ParseError(std::string("expected a document of type \"") + type + "\"");
}

}  // namespace detail

/// [{k, l, coeff: [{hbar_deg, re_num, re_den, im_num, im_den}]}] in (k+l, k) order.
inline json to_json(const WeylElement& a) {
  json out = json::array();
  for (const auto& [key, c] : a.terms()) {
    json coeff = json::array();
    for (int d = 0; d <= c.degree(); ++d) {
      const GaussRational& z = c.coeff(d);
      if (z.is_zero()) continue;
      coeff.push_back({{"hbar_deg", d},
                       {"re_num", detail::integer_to_json(z.re().get_num())},
                       {"re_den", detail::integer_to_json(z.re().get_den())},
                       {"im_num", detail::integer_to_json(z.im().get_num())},
                       {"im_den", detail::integer_to_json(z.im().get_den())}});
    }
    out.push_back({{"k", key.k}, {"l", key.l}, {"coeff", std::move(coeff)}});
  }
  return out;
}

inline WeylElement weyl_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("element must be a JSON array of terms");
  WeylElement r;
  std::set<Bidegree> seen;
  for (const auto& t : j) {
    const Bidegree key{detail::small_int(detail::field(t, "k"), "k"), detail::small_int(detail::field(t, "l"), "l")};
    if (!seen.insert(key).second)
      throw ParseError("duplicate term (k=" + std::to_string(key.k) + ", l=" + std::to_string(key.l) + ")");
    const json& coeff = detail::field(t, "coeff");
    if (!coeff.is_array()) throw ParseError("'coeff' must be an array");
    HbarPoly c;
    std::set<int> degs;
    for (const auto& e : coeff) {
      const int d = detail::small_int(detail::field(e, "hbar_deg"), "hbar_deg");
      if (!degs.insert(d).second) throw ParseError("duplicate hbar_deg " + std::to_string(d));
      const mpq_class re = detail::rational_from_json(detail::field(e, "re_num"), detail::field(e, "re_den"), "re");
      const mpq_class im = detail::rational_from_json(detail::field(e, "im_num"), detail::field(e, "im_den"), "im");
      c += hbar_monomial(GaussRational(re, im), d);
    }
    r.add_term(key, c);
  }
  return r;
}

inline json to_json(const Surface& s) {
  json offsets = json::array();
  for (const auto& q : s.offsets)
    offsets.push_back({{"num", detail::integer_to_json(q.get_num())}, {"den", detail::integer_to_json(q.get_den())}});
  json components = json::array();
  for (const auto& c : s.components) components.push_back(to_json(c));
  json inputs = json::array();
  for (const auto& [name, value] : s.provenance.inputs) inputs.push_back({{"name", name}, {"value", value}});
  json primitives = json::array();
  for (const auto& p : s.provenance.primitives) primitives.push_back(to_json(p));
  return {{"schema", kSchema},
          {"type", "surface"},
          {"n", s.size()},
          {"offsets", std::move(offsets)},
          {"components", std::move(components)},
          {"provenance", {{"kind", s.provenance.kind}, {"inputs", std::move(inputs)}, {"primitives", std::move(primitives)}}}};
}

inline Surface surface_from_json(const json& doc) {
  detail::check_schema(doc, "surface");
  Surface s;
  const int n = detail::small_int(detail::field(doc, "n"), "n");
  const json& comps = detail::field(doc, "components");
  if (!comps.is_array() || comps.size() != static_cast<std::size_t>(n))
    throw ParseError("'components' must be an array of length n");
  for (const auto& c : comps) s.components.push_back(weyl_from_json(c));
  const json& offs = detail::field(doc, "offsets");
  if (!offs.is_array() || offs.size() != static_cast<std::size_t>(n))
    throw ParseError("'offsets' must be an array of length n");
  for (const auto& o : offs)
    s.offsets.push_back(detail::rational_from_json(detail::field(o, "num"), detail::field(o, "den"), "offset"));
  const json& prov = detail::field(doc, "provenance");
  const json& kind = detail::field(prov, "kind");
  if (!kind.is_string()) throw ParseError("'provenance.kind' must be a string");
  s.provenance.kind = kind.get<std::string>();
  const json& inputs = detail::field(prov, "inputs");
  if (!inputs.is_array()) throw ParseError("'provenance.inputs' must be an array");
  for (const auto& in : inputs) {
    const json& name = detail::field(in, "name");
    const json& value = detail::field(in, "value");
    if (!name.is_string() || !value.is_string()) throw ParseError("input name and value must be strings");
    s.provenance.inputs.emplace_back(name.get<std::string>(), value.get<std::string>());
  }
  const json& prims = detail::field(prov, "primitives");
  if (!prims.is_array() || (!prims.empty() && prims.size() != static_cast<std::size_t>(n)))
    throw ParseError("'provenance.primitives' must be empty or of length n");
  for (const auto& p : prims) s.provenance.primitives.push_back(weyl_from_json(p));
  return s;
}

inline json to_json(const VerificationReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back({{"label", w.label}, {"text", render_text(w.residual)}, {"element", to_json(w.residual)}});
  return {{"schema", kSchema},       {"type", "verification"},  {"pass", rep.passes()},
          {"hermitian", rep.hermitian}, {"harmonic", rep.harmonic}, {"conformal", rep.conformal},
          {"witnesses", std::move(witnesses)}};
}

inline json to_json(const ResidualReport& r, double tol) {
  return {{"schema", kSchema},
          {"type", "fock_residuals"},
          {"dim", r.dim},
          {"hbar", r.hbar},
          {"safe_rows", r.safe_rows},
          {"residuals", {{"X1", r.x1}, {"X2", r.x2}, {"X3", r.x3}, {"phi_isotropy", r.phi_isotropy}}},
          {"phi_consistency", r.phi_consistency},
          {"tail_bound", r.tail_bound},
          {"tol", tol},
          {"pass", r.max_residual() < tol}};
}

inline json element_doc(const WeylElement& a) {
  return {{"schema", kSchema}, {"type", "element"}, {"text", render_text(a)}, {"element", to_json(a)}};
}

inline WeylElement element_from_doc(const json& doc) {
  detail::check_schema(doc, "element");
  return weyl_from_json(detail::field(doc, "element"));
}

/// Canonical text of a document: two-space indent and a trailing newline.
inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace weylmin
