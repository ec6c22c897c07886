#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "gz/error.hpp"
#include "gz/gzcore.hpp"
#include "gz/kw_chart.hpp"
#include "gz/lax.hpp"
#include "gz/matricial.hpp"
#include "gz/serialize.hpp"
#include "gz/sigma.hpp"
#include "gz/spaces.hpp"
#include "gz/verify.hpp"
#include "suite.hpp"

namespace gz::cli {

namespace {

struct Context {
  Json input;
  std::uint64_t seed = 0;
  int samples = 50;
  std::optional<double> tol;
  std::optional<std::string> mode;

  double tol_or(double fallback) const { return tol.value_or(fallback); }
};

struct Result {
  Json output;
  int code = kOk;
};

using Handler = std::function<Result(const Context&)>;

// A field of an object input, or the whole input when it is a bare value.
const Json& matrix_input(const Json& in, const char* key = "B") {
  if (in.is_array()) return in;
  if (in.is_object() && in.contains(key)) return in.at(key);
  throw ParseError(std::string("expected a matrix or an object with '") + key + "'");
}

const Json& require(const Json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return in.at(key);
}

std::vector<Polynomial> polys_from(const Json& j) {
  if (!j.is_array()) throw ParseError("'polys' must be an array of coefficient arrays");
  std::vector<Polynomial> out;
  for (const Json& p : j) out.push_back(polynomial_from_json(p));
  return out;
}

std::vector<int> degrees_from(const Json& j) {
  try {
    return j.get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("'k' must be an integer array: ") + e.what());
  }
}

Json reports_json(const std::vector<verify::VerificationReport>& reports, bool& all_pass) {
  Json out = Json::array();
  all_pass = true;
  for (const auto& r : reports) {
    out.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  return out;
}

std::string shape_tag(int s, int rest) {
  return "(C*)^" + std::to_string(s) + " x C^" + std::to_string(rest);
}

Result cmd_gz_map(const Context& c) {
  const Matrix b = matrix_from_json(matrix_input(c.input));
  GZBasis basis = GZBasis::TracePower;
  if (c.input.is_object() && c.input.contains("basis")) basis = basis_from_string(c.input.at("basis").get<std::string>());
  return {to_json(gz_map(b, basis))};
}

Result cmd_gz_flow(const Context& c) {
  const Matrix b = matrix_from_json(matrix_input(c.input));
  const GZGroupElement lambda = group_element_from_json(require(c.input, "lambda"), static_cast<int>(b.rows()));
  const Matrix out = gz_flow(b, lambda);
  const double defect = verify::conservation_defect([&](const Matrix&) { return out; },
                                                    [](const Matrix& x) { return gz_map(x).values; }, b);
  const double tol = c.tol_or(1e-9);
  Json j;
  j["B"] = to_json(out);
  j["conservation_defect"] = defect;
  j["tolerance"] = tol;
  return {j, defect <= tol ? kOk : kNumericalFailure};
}

Result cmd_sregular(const Context& c) {
  if (c.input.is_object() && c.input.contains("k")) {
    const MatricialData f = md_validate(matricial_from_json(c.input), c.tol_or(kMatricialTol));
    const StrongRegularity sr = md_strongly_regular(f);
    Json j;
    j["strongly_regular"] = sr.strongly_regular;
    j["sigma"] = sr.sigma.values;
    j["isotropy"] = {{"unknowns", sr.isotropy.unknowns},
                     {"nullity", sr.isotropy.nullity},
                     {"mu_dimension", sr.isotropy.mu_dimension}};
    j["consistent"] = sr.consistent;
    j["warnings"] = sr.sigma.warnings;
    return {j, sr.consistent ? kOk : kNumericalFailure};
  }
  const Matrix b = matrix_from_json(matrix_input(c.input));
  const RegularityResult r = strongly_regular(b, c.tol_or(kRankRelTol));
  Json j;
  j["strongly_regular"] = r.strongly_regular;
  j["rank"] = r.rank;
  j["required"] = r.required;
  return {j};
}

Result cmd_orbit_count(const Context& c) {
  if (c.input.is_object() && c.input.contains("k")) {
    const std::vector<int> k = degrees_from(c.input.at("k"));
    for (int v : k)
      if (v < 0) throw ValidationError("degrees must be nonnegative");
    int t = 0;
    for (std::size_t j = 0; j + 1 < k.size(); ++j) t += (k[j] != 0 && k[j + 1] != 0) ? 1 : 0;
    Json j;
    j["t"] = t;
    j["count"] = sr_orbit_count_zero_fiber(k);
    return {j};
  }
  const auto polys = polys_from(require(c.input, "polys"));
  std::string mode_name = c.mode.value_or(c.input.value("mode", std::string("rational-maps")));
  const FiberMode mode = fiber_mode_from_string(mode_name);
  const FiberOrbitData d = fiber_orbit_data(polys, mode, c.tol_or(kStratumTol));
  Json j;
  j["t"] = d.t;
  j["count"] = d.count;
  j["s"] = d.s;
  j["total_degree"] = d.total_degree;
  j["shape"] = shape_tag(d.cstar_factors, d.c_factors);
  j["s_per_root"] = d.s_per_root;
  j["t_per_root"] = d.t_per_root;
  j["signature"] = to_json(d.signature);
  j["tolerance"] = d.signature.tolerance;
  j["mode"] = to_string(mode);
  return {j};
}

Result cmd_strata(const Context& c) {
  const double tol = c.tol_or(kStratumTol);
  StratumSignature sig;
  if (c.input.is_object() && c.input.contains("polys")) {
    sig = stratum_signature(polys_from(c.input.at("polys")), tol);
  } else if (c.input.is_object() && c.input.contains("values")) {
    sig = stratum_signature(gz_coordinates_from_json(c.input), tol);
  } else {
    sig = stratum_signature(gz_map(matrix_from_json(matrix_input(c.input)), GZBasis::CharPoly), tol);
  }
  Json j;
  j["tolerance"] = sig.tolerance;
  j["roots"] = to_json(sig);
  return {j};
}

Result cmd_enumerate_orbits(const Context& c) {
  MultiDegree k{degrees_from(require(c.input, "k"))};
  const auto reps = enumerate_sr(k);
  Json list = Json::array();
  bool ok = true;
  for (const auto& f : reps) {
    const bool valid = md_check(f).empty();
    const StrongRegularity sr = md_strongly_regular(f);
    ok = ok && valid && sr.strongly_regular && sr.consistent;
    Json e;
    e["sigma"] = sr.sigma.values;
    e["valid"] = valid;
    e["strongly_regular"] = sr.strongly_regular;
    e["data"] = to_json(f);
    list.push_back(std::move(e));
  }
  Json j;
  j["k"] = k.k;
  j["count"] = reps.size();
  j["representatives"] = std::move(list);
  return {j, ok ? kOk : kNumericalFailure};
}

Result cmd_md_validate(const Context& c) {
  const MatricialData f = matricial_from_json(c.input);
  const auto issues = md_check(f, c.tol_or(kMatricialTol));
  Json list = Json::array();
  for (const auto& is : issues)
    list.push_back({{"kind", to_string(is.kind)}, {"i", is.i}, {"defect", is.defect}, {"detail", is.detail}});
  Json j;
  j["valid"] = issues.empty();
  j["issues"] = std::move(list);
  return {j, issues.empty() ? kOk : kValidationFailure};
}

Result cmd_ak_act(const Context& c) {
  const double tol = c.tol_or(kMatricialTol);
  const MatricialData f = md_validate(matricial_from_json(require(c.input, "data")), tol);
  std::vector<ComplexList> lambda;
  const Json& l = require(c.input, "lambda");
  if (!l.is_array()) throw ParseError("'lambda' must be an array of coefficient arrays");
  for (const Json& e : l) lambda.push_back(complex_list_from_json(e));
  const MatricialData out = md_validate(ak_act(f, lambda), tol);
  const auto before = polar(f);
  const auto after = polar(out);
  double defect = 0.0;
  for (std::size_t i = 0; i < before.size(); ++i) defect = std::max(defect, before[i].max_coeff_distance(after[i]));
  Json j;
  j["data"] = to_json(out);
  j["polar_defect"] = defect;
  return {j, defect <= 1e-9 ? kOk : kNumericalFailure};
}

Result cmd_polar(const Context& c) {
  const MatricialData f = md_validate(matricial_from_json(c.input), c.tol_or(kMatricialTol));
  Json polys = Json::array();
  for (const Polynomial& p : polar(f)) polys.push_back(to_json(p));
  Json j;
  j["polys"] = std::move(polys);
  return {j};
}

Result cmd_kw_check(const Context& c) {
  if (c.input.is_object() && c.input.contains("poles")) {
    OpenStratumChart chart;
    chart.k.k = degrees_from(require(c.input, "k"));
    chart.poles = complex_list_from_json(c.input.at("poles"));
    chart.rho = complex_list_from_json(require(c.input, "rho"));
    chart_validate(chart);
    const int len = chart.size();
    Json rs = Json::array();
    double worst = 0.0;
    for (int l = 0; l < len; ++l) {
      Json row = Json::array();
      for (int q = 0; q < len; ++q) {
        const Complex v = chart_bracket(chart, chart_r(len, l), chart_s(len, q));
        const Complex fd = chart_bracket_fd(chart, chart_r(len, l), chart_s(len, q));
        worst = std::max(worst, std::abs(v - fd) / (1.0 + std::abs(v)));
        row.push_back(to_json(v));
      }
      rs.push_back(std::move(row));
    }
    const double tol = c.tol_or(1e-7);
    Json j;
    j["r_s_brackets"] = std::move(rs);
    j["fd_defect"] = worst;
    j["tolerance"] = tol;
    return {j, worst <= tol ? kOk : kNumericalFailure};
  }
  std::vector<verify::VerificationReport> reports{suite::kw_relations(c.seed, c.samples),
                                                  suite::kw_fd_cross_check(c.seed + 1, c.samples)};
  if (c.tol)
    for (auto& r : reports) r.tolerance = *c.tol, r.finish();
  bool pass = false;
  Json j;
  j["reports"] = reports_json(reports, pass);
  j["pass"] = pass;
  return {j, pass ? kOk : kNumericalFailure};
}

Result cmd_bracket_table(const Context& c) {
  const Matrix b = matrix_from_json(matrix_input(c.input));
  if (b.rows() != b.cols() || b.rows() < 1) throw ValidationError("B must be a nonempty square matrix");
  const int n = static_cast<int>(b.rows());
  const auto indices = gz_indices(n);
  std::vector<Matrix> grads;
  for (GZIndex idx : indices)
    grads.push_back(verify::matrix_gradient(
        [idx](const Matrix& x) {
          const Matrix minor = leading_minor(x, idx.m);
          Matrix p = Matrix::Identity(idx.m, idx.m);
          for (int j = 0; j < idx.i; ++j) p = p * minor;
          return p.trace();
        },
        b));
  Json table = Json::array();
  Json names = Json::array();
  double worst = 0.0;
  const double nb = std::max(1.0, b.norm());
  for (std::size_t p = 0; p < indices.size(); ++p) {
    names.push_back({indices[p].m, indices[p].i});
    Json row = Json::array();
    for (std::size_t q = 0; q < indices.size(); ++q) {
      const Complex v = verify::lie_poisson_bracket_from_gradients(grads[p], grads[q], b);
      const double scale = std::pow(nb, indices[p].i + indices[q].i - 1) * indices[p].i * indices[q].i;
      worst = std::max(worst, std::abs(v) / scale);
      row.push_back(to_json(v));
    }
    table.push_back(std::move(row));
  }
  const double tol = c.tol_or(1e-6);
  Json j;
  j["n"] = n;
  j["indices"] = std::move(names);
  j["table"] = std::move(table);
  j["max_scaled"] = worst;
  j["tolerance"] = tol;
  return {j, worst <= tol ? kOk : kNumericalFailure};
}

Result cmd_lax_run(const Context& c) {
  const Matrix beta = matrix_from_json(require(c.input, "beta_a"));
  const double a = c.input.value("a", 0.0);
  const double b = c.input.value("b", 1.0);
  const int steps = c.input.value("N", 200);
  std::vector<Matrix> coeffs;
  if (c.input.contains("alpha_poly")) {
    for (const Json& m : c.input.at("alpha_poly")) coeffs.push_back(matrix_from_json(m));
  } else {
    coeffs.push_back(matrix_from_json(require(c.input, "alpha")));
  }
  if (coeffs.empty()) throw ParseError("'alpha_poly' must contain at least one matrix");
  for (const Matrix& m : coeffs)
    if (m.rows() != beta.rows() || m.cols() != beta.cols()) throw ValidationError("alpha and beta_a differ in size");
  auto alpha = [&coeffs](double t) {
    Matrix out = coeffs.back();
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) out = out * t + coeffs[j];
    return out;
  };
  const LaxPath path = lax_integrate(alpha, beta, a, b, steps);
  Json j = to_json(path);
  j["residual"] = path.residual;
  j["drift"] = path.drift;
  j["richardson"] = path.richardson;
  return {j};
}

Result cmd_lax_gauge(const Context& c) {
  const LaxPath path = lax_path_from_json(c.input);
  const GaugeFix fix = gauge_fix_regular(path, c.tol_or(1e-6));
  const LaxPath fixed = gauge_apply(fix.g_path, path);
  std::vector<Matrix> inverse;
  for (const Matrix& g : fix.g_path) inverse.push_back(g.inverse());
  const LaxPath back = gauge_apply(inverse, fixed);
  double round_trip = 0.0;
  for (std::size_t q = 0; q < path.grid.size(); ++q)
    round_trip = std::max({round_trip, (back.alpha[q] - path.alpha[q]).norm(), (back.beta[q] - path.beta[q]).norm()});
  const double spectral = charpoly(fix.X).max_coeff_distance(charpoly(path.beta.front()));
  const double tol = c.tol_or(1e-6);
  Json j;
  j["g_b"] = to_json(fix.g_b);
  j["X"] = to_json(fix.X);
  j["drift"] = fix.drift;
  j["condition"] = fix.condition;
  j["charpoly_defect"] = spectral;
  j["round_trip"] = round_trip;
  j["tolerance"] = tol;
  const bool ok = fix.drift <= tol && round_trip <= tol && spectral <= tol;
  return {j, ok ? kOk : kNumericalFailure};
}

Result cmd_verify_suite(const Context& c) {
  bool pass = false;
  Json j;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["reports"] = reports_json(suite::run_all(c.seed, c.samples), pass);
  j["pass"] = pass;
  return {j, pass ? kOk : kNumericalFailure};
}

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t{
      {"gz-map", cmd_gz_map},
      {"gz-flow", cmd_gz_flow},
      {"sregular", cmd_sregular},
      {"orbit-count", cmd_orbit_count},
      {"strata", cmd_strata},
      {"enumerate-orbits", cmd_enumerate_orbits},
      {"md-validate", cmd_md_validate},
      {"ak-act", cmd_ak_act},
      {"polar", cmd_polar},
      {"kw-check", cmd_kw_check},
      {"bracket-table", cmd_bracket_table},
      {"lax-run", cmd_lax_run},
      {"lax-gauge", cmd_lax_gauge},
      {"verify-suite", cmd_verify_suite},
  };
  return t;
}

// Subcommands that work without any input document.
bool input_optional(const std::string& name) { return name == "verify-suite" || name == "kw-check"; }

std::string read_input(const std::string& source, std::istream& in) {
  if (source.empty()) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return source;
  std::ifstream file(source);
  if (!file) throw ParseError("cannot read input file '" + source + "'");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

}  // namespace

std::vector<std::string> subcommands() {
  std::vector<std::string> names;
  for (const auto& [name, handler] : table()) names.push_back(name);
  return names;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gelfand-Zeitlin systems: flows, orbit counts, matricial models, Lax equations"};
  std::string command;
  std::string input_arg;
  std::string output_path;
  Context ctx;
  double tol = 0.0;
  std::string mode;
  std::string names;
  for (const auto& n : subcommands()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", command, "one of: " + names)->required();
  app.add_option("--input,-i", input_arg, "input file or inline JSON (default: stdin)");
  app.add_option("--output,-o", output_path, "write the JSON result here instead of stdout");
  app.add_option("--seed", ctx.seed, "random seed")->default_val(0);
  app.add_option("--samples", ctx.samples, "samples for randomised checks")->default_val(50)->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);
  auto* mode_opt = app.add_option("--mode", mode, "fiber mode: rational-maps | matrices");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (tol_opt->count() > 0) ctx.tol = tol;
  if (mode_opt->count() > 0) ctx.mode = mode;

  const auto& handlers = table();
  auto it = std::find_if(handlers.begin(), handlers.end(), [&](const auto& p) { return p.first == command; });
  if (it == handlers.end()) {
    err << "unknown subcommand '" << command << "' (expected one of: " << names << ")\n";
    return kUsage;
  }

  try {
    if (input_arg.empty() && input_optional(command)) {
      ctx.input = Json::object();
    } else {
      ctx.input = parse_json(read_input(input_arg, in));
    }
    const Result result = it->second(ctx);
    const std::string text = result.output.dump() + "\n";
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path);
      if (!file) {
        err << "cannot write '" << output_path << "'\n";
        return kUsage;
      }
      file << text;
    }
    if (result.code == kNumericalFailure) err << command << ": defect above tolerance\n";
    if (result.code == kValidationFailure) err << command << ": validation failed\n";
    return result.code;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace gz::cli
