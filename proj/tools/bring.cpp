// Command-line front end: reduce | solve | obstruction | verify.

#include "bring/bring.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using bring::Json;

constexpr int exit_ok = 0;
constexpr int exit_unverified = 1;
constexpr int exit_degenerate = 2;
constexpr int exit_usage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int precision_bits = bring::default_precision_bits;
  std::string tol = "1e-30";
  std::uint64_t seed = 0;
  std::string mode = "auto";
  std::string output = "json";
  std::string coeffs;
  std::string in;
  std::string out;
  std::string p = "1", q = "1";
};

bring::Config make_config(const Options& o) {
  if (o.precision_bits < bring::min_precision_bits)
    throw UsageError("--precision-bits must be at least " + std::to_string(bring::min_precision_bits));
  bring::Config cfg;
  cfg.precision_bits = o.precision_bits;
  try {
    std::size_t used = 0;
    cfg.tol = std::stod(o.tol, &used);
    if (used != o.tol.size() || !(cfg.tol > 0) || !std::isfinite(cfg.tol)) throw std::invalid_argument(o.tol);
  } catch (const std::exception&) {
    throw UsageError("--tol must be a positive real, got '" + o.tol + "'");
  }
  cfg.seed = o.seed;
  return cfg;
}

bring::Scalar apply_mode(const bring::Scalar& s, const Options& o) {
  if (o.mode == "complex") return s.is_rational() ? bring::Scalar(s.to_complex(o.precision_bits)) : s;
  if (o.mode == "rational" && !s.is_rational()) throw UsageError("--mode rational given a non-rational coefficient");
  return s;
}

bring::UniPoly apply_mode(const bring::UniPoly& p, const Options& o) {
  std::vector<bring::Scalar> cs;
  for (const auto& c : p.coeffs()) cs.push_back(apply_mode(c, o));
  return bring::UniPoly(std::move(cs));
}

bring::Scalar parse_scalar_token(const std::string& token, const Options& o) {
  auto q = bring::parse_rational(token);
  if (!q) throw UsageError("not a number: '" + token + "'");
  return apply_mode(bring::Scalar(*q), o);
}

/// --coeffs takes coefficients highest degree first.
bring::UniPoly parse_coeff_list(const std::string& text, const Options& o) {
  std::vector<bring::Scalar> descending;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) descending.push_back(parse_scalar_token(token, o));
  if (descending.empty()) throw UsageError("--coeffs is empty");
  return bring::UniPoly(std::vector<bring::Scalar>(descending.rbegin(), descending.rend()));
}

Json read_json_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

/// One polynomial from --coeffs, or one or several from --in.
std::vector<bring::UniPoly> read_polynomials(const Options& o, bool& batch) {
  batch = false;
  if (!o.coeffs.empty()) return {parse_coeff_list(o.coeffs, o)};
  const Json j = read_json_input(o.in);
  std::vector<bring::UniPoly> out;
  try {
    batch = j.is_array() && !j.empty() && j.front().is_object() && !j.front().contains("re");
    if (batch) {
      for (const auto& item : j) out.push_back(apply_mode(bring::poly_from_json(item, o.precision_bits), o));
    } else {
      out.push_back(apply_mode(bring::poly_from_json(j, o.precision_bits), o));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad polynomial input: ") + e.what());
  }
  return out;
}

bring::UniPoly normalized(const bring::UniPoly& p) {
  if (p.is_zero()) throw UsageError("zero polynomial");
  return bring::monic(p);
}

std::string format_poly(const bring::UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const bring::Scalar c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    const bool negative = c.is_rational() && c.as_rational() < 0;
    const bring::Scalar m = negative ? -c : c;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    const bool unit = m.is_one() && k > 0;
    if (!unit) s += m.is_rational() ? m.to_string() : "(" + m.to_string() + ")";
    if (k > 0) s += (unit ? "" : "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

std::string text_double(double x) {
  std::ostringstream o;
  o.precision(3);
  o << std::scientific << x;
  return o.str();
}

struct Emitted {
  Json json;
  std::string text;
  int code = exit_ok;
};

Emitted reduce_one(const bring::UniPoly& input, const bring::Config& cfg) {
  const bring::UniPoly a = normalized(input);
  if (a.degree() != 5) throw UsageError("reduce needs a quintic, got degree " + std::to_string(a.degree()));
  const bring::ReductionTrace trace = bring::reduce_general_quintic(a, cfg);
  const bring::TraceVerification v = bring::verify_trace(trace, cfg);
  Emitted e;
  e.json = bring::to_json(trace);
  e.json["verification"] = bring::to_json(v);
  e.code = v.passed() ? exit_ok : exit_unverified;
  std::ostringstream t;
  t << "original: " << format_poly(trace.original, "z") << "\n";
  for (const auto& s : trace.steps) {
    t << "step " << s.kind << " (k=" << s.subsidiary.k() << (s.rescue_lambda ? ", rescue lambda=" + s.rescue_lambda->to_string() : "")
      << "): T(z) = " << format_poly(s.subsidiary.map(), "z") << "\n";
    for (const auto& x : s.aux) t << "  " << x.unknown << ": " << x.kind() << ", chose " << x.value().to_string() << "\n";
  }
  t << "final: " << format_poly(trace.final, "y") << "\n";
  t << "bring_p: " << trace.bring_p.to_string() << "\nbring_q: " << trace.bring_q.to_string() << "\n";
  t << "verified: " << (v.passed() ? "yes" : "no: " + v.failure) << "\n";
  e.text = t.str();
  return e;
}

Emitted solve_one(const bring::UniPoly& input, const bring::Config& cfg) {
  const bring::UniPoly a = normalized(input);
  if (a.degree() >= 5)
    throw UsageError("solve handles degrees 1 to 4; a quintic has no radical solution here (use 'reduce' for its Bring-Jerrard form)");
  if (a.degree() < 1) throw UsageError("solve needs degree >= 1");
  const bring::SolveResult r = bring::solve_polynomial(a, cfg);
  Emitted e;
  e.json = bring::to_json(r);
  e.json["polynomial"] = bring::to_json(a);
  std::ostringstream t;
  t << "polynomial: " << format_poly(a, "z") << "\nmethod: " << r.method << "\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    t << "root: " << r.roots[i].to_string() << "  residual " << text_double(r.residuals[i]) << "\n";
  e.text = t.str();
  return e;
}

Emitted obstruction(const Options& o, const bring::Config& cfg) {
  const bring::Scalar p = parse_scalar_token(o.p, o), q = parse_scalar_token(o.q, o);
  const bring::ObstructionResult r = bring::quartic_obstruction_G(p, q, cfg);
  const auto points = bring::obstruction_points(r, cfg);
  Emitted e;
  e.json["p"] = bring::to_json(p);
  e.json["q"] = bring::to_json(q);
  e.json["a"] = bring::to_json(r.a);
  e.json["degree"] = r.g.degree();
  e.json["degenerate"] = r.degenerate;
  e.json["G"] = bring::to_json(r.g, "c");
  Json roots = Json::array(), res = Json::array();
  std::ostringstream t;
  t << "G(c) = " << format_poly(r.g, "c") << "\ndegree: " << r.g.degree() << (r.degenerate ? " (degenerate)" : "") << "\n";
  for (const auto& pt : points) {
    roots.push_back(bring::to_json(pt.c));
    Json one = Json::object();
    one["b"] = bring::to_json(pt.b);
    one["c"] = bring::to_json(pt.c);
    one["e_residual"] = bring::number_json(pt.e_residual);
    one["f_residual"] = bring::number_json(pt.f_residual);
    res.push_back(std::move(one));
    t << "c = " << pt.c.to_string() << "  |E| " << text_double(pt.e_residual) << "  |F| " << text_double(pt.f_residual) << "\n";
  }
  e.json["roots_of_G"] = std::move(roots);
  e.json["consistency_residuals"] = std::move(res);
  e.text = t.str();
  return e;
}

Emitted verify(const Options& o, bring::Config cfg, bool precision_given) {
  const Json j = read_json_input(o.in);
  bring::ReductionTrace trace;
  try {
    trace = bring::trace_from_json(j, o.precision_bits);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed trace: ") + e.what());
  }
  if (!precision_given) cfg.precision_bits = trace.precision_bits;
  const bring::TraceVerification v = bring::verify_trace(trace, cfg);
  Emitted e;
  e.json = bring::to_json(v);
  e.code = v.passed() ? exit_ok : exit_unverified;
  std::ostringstream t;
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    const auto& r = v.steps[i];
    t << "step " << i << " (" << trace.steps[i].kind << "): forward residual " << text_double(r.max_forward_residual)
      << ", match distance " << text_double(r.match_distance) << (r.matched ? ", matched" : ", NOT matched") << "\n";
  }
  t << (v.passed() ? "passed" : "failed: " + v.failure) << "\n";
  e.text = t.str();
  return e;
}

void emit(const std::vector<Emitted>& results, bool batch, const Options& o) {
  std::string body;
  if (o.output == "text") {
    for (const auto& r : results) body += r.text;
  } else if (batch) {
    Json all = Json::array();
    for (const auto& r : results) all.push_back(r.json);
    body = all.dump(2) + "\n";
  } else {
    body = results.front().json.dump(2) + "\n";
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tschirnhaus transformations: reduce quintics to Bring-Jerrard form, solve degrees 1-4 in radicals, "
      "inspect the quartic obstruction, verify traces.\n"
      "Coefficients on --coeffs are given highest degree first, e.g. --coeffs 1,0,0,1,1,1 is z^5+z^2+z+1. "
      "Rationals may be written 3/4 or 0.75. JSON polynomials list coefficients lowest degree first."};
  app.require_subcommand(1);
  Options o;
  auto* precision = app.add_option("--precision-bits", o.precision_bits, "working precision in bits (>= 64)");
  app.add_option("--tol", o.tol, "tolerance for annihilated coefficients")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for the root finder's starting points")->capture_default_str();
  app.add_option("--mode", o.mode, "coefficient arithmetic")->check(CLI::IsMember({"rational", "complex", "auto"}))->capture_default_str();
  app.add_option("--output", o.output, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", o.out, "write output to FILE instead of stdout");
  app.fallthrough();

  auto* reduce = app.add_subcommand("reduce", "reduce a quintic to y^5 + P y + Q and verify every step");
  auto* solve = app.add_subcommand("solve", "roots of a polynomial of degree 1 to 4 by closed-form solvers");
  for (auto* sub : {reduce, solve}) {
    auto* c = sub->add_option("--coeffs", o.coeffs, "coefficients, highest degree first, comma separated");
    auto* i = sub->add_option("--in", o.in, "JSON polynomial (or array of them); '-' for stdin");
    c->excludes(i);
  }
  auto* obstruction_cmd = app.add_subcommand("obstruction", "the resultant G(c) for z^4 + p z + q");
  obstruction_cmd->add_option("--p", o.p, "coefficient p")->capture_default_str();
  obstruction_cmd->add_option("--q", o.q, "coefficient q")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "replay and check a reduction trace");
  verify_cmd->add_option("--in", o.in, "trace JSON; '-' or omitted for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    const bring::Config cfg = make_config(o);
    std::vector<Emitted> results;
    bool batch = false;
    if (reduce->parsed() || solve->parsed()) {
      if (o.coeffs.empty() && o.in.empty()) throw UsageError("give --coeffs or --in");
      const auto polys = read_polynomials(o, batch);
      for (const auto& p : polys) results.push_back(reduce->parsed() ? reduce_one(p, cfg) : solve_one(p, cfg));
    } else if (obstruction_cmd->parsed()) {
      results.push_back(obstruction(o, cfg));
    } else {
      results.push_back(verify(o, cfg, precision->count() > 0));
    }
    emit(results, batch, o);
    int code = exit_ok;
    for (const auto& r : results) code = std::max(code, r.code);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const bring::DegenerateDenominator& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return exit_degenerate;
  } catch (const bring::RescueExhausted& e) {
    std::cerr << "rescue exhausted: " << e.what() << "\n";
    return exit_degenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_unverified;
  }
}
