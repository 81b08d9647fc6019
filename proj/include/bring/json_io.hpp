#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding of scalars, polynomials, steps, traces and reports.
 *
 * Scalars: an exact rational is [num, den] (integers, or decimal strings
 * when they do not fit in 64 bits); a complex float is {"re": "...",
 * "im": "..."} with round-trippable decimal strings. Polynomials carry their
 * coefficients in ascending degree order.
 */

#include "bring/verify.hpp"

#include "json.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace bring {

using Json = nlohmann::ordered_json;

class JsonFormatError : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}
inline mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw JsonFormatError("not an integer: " + j.dump());
    return z;
  }
  throw JsonFormatError("expected an integer, got " + j.dump());
}
}  // namespace detail

/// Exact rational from "7", "-3/4" or "1.25e-2"; nullopt if the text is none
/// of these.
inline std::optional<mpq_class> parse_rational(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
  if (text.empty()) return std::nullopt;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    mpz_class n, d;
    if (n.set_str(text.substr(0, slash), 10) != 0 || d.set_str(text.substr(slash + 1), 10) != 0 || d == 0)
      return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  // sign, digits, optional fraction, optional exponent
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++], any = true;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++], --exponent, any = true;
  }
  if (!any) return std::nullopt;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    try {
      exponent += std::stol(text.substr(i), &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used == 0 || text.substr(i, used).find_first_of("+-0123456789") != 0) return std::nullopt;
    i += used;
  }
  if (i != text.size() || std::labs(exponent) > 100000) return std::nullopt;
  mpz_class num(digits, 10), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class q = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

inline Json to_json(const Scalar& s) {
  if (s.is_rational()) {
    const mpq_class& q = s.as_rational();
    return Json::array({detail::integer_json(q.get_num()), detail::integer_json(q.get_den())});
  }
  Json j = Json::object();
  j["re"] = s.as_complex().re().to_string();
  j["im"] = s.as_complex().im().to_string();
  return j;
}

inline Scalar scalar_from_json(const Json& j, int bits) {
  if (j.is_number_integer()) return Scalar(mpq_class(detail::integer_from_json(j)));
  if (j.is_array() && j.size() == 2) {
    const mpz_class num = detail::integer_from_json(j[0]), den = detail::integer_from_json(j[1]);
    if (den == 0) throw JsonFormatError("zero denominator in " + j.dump());
    return Scalar::rational(num, den);
  }
  if (j.is_object() && j.contains("re") && j.contains("im")) {
    try {
      return Scalar::complex(Real(j["re"].get<std::string>(), bits), Real(j["im"].get<std::string>(), bits));
    } catch (const std::exception& e) {
      throw JsonFormatError(std::string("bad complex scalar: ") + e.what());
    }
  }
  if (j.is_string()) {
    if (auto q = parse_rational(j.get<std::string>())) return Scalar(*q);
  }
  throw JsonFormatError("not a scalar: " + j.dump());
}

inline Json to_json(const UniPoly& p, const std::string& var = "z") {
  Json cs = Json::array();
  for (const auto& c : p.coeffs()) cs.push_back(to_json(c));
  Json j = Json::object();
  j["var"] = var;
  j["mode"] = all_rational(p) ? "rational" : "complex";
  j["coeffs"] = std::move(cs);
  return j;
}

inline UniPoly poly_from_json(const Json& j, int bits) {
  const Json* cs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw JsonFormatError("polynomial object needs \"coeffs\"");
    cs = &j.at("coeffs");
  }
  if (!cs->is_array()) throw JsonFormatError("polynomial coefficients must be an array");
  std::vector<Scalar> out;
  for (const auto& c : *cs) out.push_back(scalar_from_json(c, bits));
  return UniPoly(std::move(out));
}

/// Doubles, with non-finite values as null.
inline Json number_json(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline Json to_json(const AuxSolve& a) {
  Json roots = Json::array();
  for (const auto& r : a.roots) roots.push_back(to_json(r));
  Json j = Json::object();
  j["unknown"] = a.unknown;
  j["kind"] = a.kind();
  j["equation"] = to_json(a.equation, a.unknown);
  j["roots"] = std::move(roots);
  j["chosen"] = a.chosen;
  return j;
}

inline AuxSolve aux_from_json(const Json& j, int bits) {
  AuxSolve a;
  a.unknown = j.at("unknown").get<std::string>();
  a.equation = poly_from_json(j.at("equation"), bits);
  for (const auto& r : j.at("roots")) a.roots.push_back(scalar_from_json(r, bits));
  a.chosen = j.at("chosen").get<std::size_t>();
  if (a.chosen >= a.roots.size()) throw JsonFormatError("aux solve: chosen index out of range");
  return a;
}

inline Json to_json(const Subsidiary& s) {
  static const char* names[] = {"a", "b", "c", "d"};
  Json j = Json::object();
  j["k"] = s.k();
  for (std::size_t i = 0; i < 4; ++i) j[names[i]] = to_json(s.coeff(i));
  j["map"] = to_json(s.map());
  return j;
}

inline Subsidiary subsidiary_from_json(const Json& j, int bits) {
  static const char* names[] = {"a", "b", "c", "d"};
  const int k = j.at("k").get<int>();
  if (k < 1 || k > 4) throw JsonFormatError("subsidiary degree must be 1..4");
  std::vector<Scalar> cs;
  for (int i = 0; i < k; ++i) cs.push_back(scalar_from_json(j.at(names[i]), bits));
  return k == 1 ? Subsidiary::linear(cs[0]) : Subsidiary::polynomial(std::move(cs));
}

inline Json to_json(const TransformStep& s) {
  Json aux = Json::array();
  for (const auto& a : s.aux) aux.push_back(to_json(a));
  Json j = Json::object();
  j["kind"] = s.kind;
  j["identity"] = s.identity;
  j["input"] = to_json(s.input);
  j["subsidiary"] = to_json(s.subsidiary);
  j["aux"] = std::move(aux);
  j["normalization"] = to_json(s.normalization);
  j["rescue_lambda"] = s.rescue_lambda ? to_json(*s.rescue_lambda) : Json(nullptr);
  j["output"] = to_json(s.output, "y");
  return j;
}

inline TransformStep step_from_json(const Json& j, int bits) {
  TransformStep s;
  s.kind = j.at("kind").get<std::string>();
  s.identity = j.value("identity", false);
  s.input = poly_from_json(j.at("input"), bits);
  s.subsidiary = subsidiary_from_json(j.at("subsidiary"), bits);
  if (j.contains("aux"))
    for (const auto& a : j.at("aux")) s.aux.push_back(aux_from_json(a, bits));
  if (j.contains("normalization")) s.normalization = scalar_from_json(j.at("normalization"), bits);
  if (j.contains("rescue_lambda") && !j.at("rescue_lambda").is_null())
    s.rescue_lambda = scalar_from_json(j.at("rescue_lambda"), bits);
  s.output = poly_from_json(j.at("output"), bits);
  return s;
}

inline Json to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  Json j = Json::object();
  j["precision_bits"] = t.precision_bits;
  j["original"] = to_json(t.original);
  j["steps"] = std::move(steps);
  j["final"] = to_json(t.final, "y");
  j["bring_p"] = to_json(t.bring_p);
  j["bring_q"] = to_json(t.bring_q);
  return j;
}

/// Parses a trace; throws JsonFormatError (or nlohmann's exceptions) on
/// malformed input.
inline ReductionTrace trace_from_json(const Json& j, int default_bits = default_precision_bits) {
  if (!j.is_object()) throw JsonFormatError("trace must be a JSON object");
  ReductionTrace t;
  t.precision_bits = j.value("precision_bits", default_bits);
  if (t.precision_bits < min_precision_bits) throw JsonFormatError("precision_bits below minimum");
  const int bits = t.precision_bits;
  t.original = poly_from_json(j.at("original"), bits);
  if (j.contains("steps"))
    for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s, bits));
  t.final = j.contains("final") ? poly_from_json(j.at("final"), bits)
                                : (t.steps.empty() ? t.original : t.steps.back().output);
  t.bring_p = j.contains("bring_p") ? scalar_from_json(j.at("bring_p"), bits) : t.final.coeff(1);
  t.bring_q = j.contains("bring_q") ? scalar_from_json(j.at("bring_q"), bits) : t.final.coeff(0);
  return t;
}

inline Json to_json(const VerifyReport& r) {
  Json j = Json::object();
  j["max_forward_residual"] = number_json(r.max_forward_residual);
  j["match_distance"] = number_json(r.match_distance);
  j["matched"] = r.matched;
  if (r.bring_residuals) {
    j["bring_residuals"] = Json::array();
    for (double x : *r.bring_residuals) j["bring_residuals"].push_back(number_json(x));
  } else {
    j["bring_residuals"] = nullptr;
  }
  return j;
}

inline Json to_json(const TraceVerification& v) {
  Json steps = Json::array();
  for (const auto& s : v.steps) steps.push_back(to_json(s));
  Json j = Json::object();
  j["passed"] = v.passed();
  j["chain_ok"] = v.chain_ok;
  j["replay_ok"] = v.replay_ok;
  j["final_ok"] = v.final_ok;
  j["failure"] = v.failure.empty() ? Json(nullptr) : Json(v.failure);
  j["steps"] = std::move(steps);
  return j;
}

inline Json to_json(const SolveResult& r) {
  Json roots = Json::array(), res = Json::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  for (double x : r.residuals) res.push_back(number_json(x));
  Json j = Json::object();
  j["method"] = r.method;
  j["exact"] = r.exact();
  j["roots"] = std::move(roots);
  j["residuals"] = std::move(res);
  return j;
}

}  // namespace bring
