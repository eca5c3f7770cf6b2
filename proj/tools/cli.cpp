#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "json_writer.hpp"
#include "sitepc/connectivity.hpp"
#include "sitepc/enumeration.hpp"
#include "sitepc/errors.hpp"
#include "sitepc/lace.hpp"
#include "sitepc/percolation.hpp"
#include "sitepc/series.hpp"
#include "sitepc/triangle.hpp"

namespace sitepc::cli {

using nlohmann::json;

namespace {

const char* const kCommands[] = {"expand", "convert", "count", "cycles", "pc", "tau", "double", "triangle", "pi", "oze"};

bool is_stochastic(const std::string& command) {
  return command == "pc" || command == "tau" || command == "double" || command == "triangle" || command == "pi" ||
         command == "oze";
}

TruncatedSeries preset_series(const std::string& name) {
  using R = Rational;
  if (name == "site") {
    return TruncatedSeries(Variable::s, {R(0), R(1), R(3, 2), R(15, 4), R(83, 4), R(6577, 48), R(119077, 96)});
  }
  if (name == "bond") {
    return TruncatedSeries(Variable::s, {R(0), R(1), R(0), R(5, 2), R(15, 2), R(57), R(4855, 12)});
  }
  throw UsageError("unknown preset '" + name + "' (expected site or bond)");
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json coefficients_json(const TruncatedSeries& s, int from = 0) {
  json out = json::array();
  for (int i = from; i <= s.order(); ++i) out.push_back(rational_to_json(s[i]));
  return out;
}

json estimate_json(const Estimate& e) { return {{"mean", e.mean}, {"stderr", e.stderr()}, {"n", e.n}}; }

Point parse_x(const RunConfig& c) {
  if (c.x.empty()) throw UsageError("--x is required for " + c.command);
  Point x;
  try {
    x = parse_point(c.x);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse --x '" + c.x + "': " + e.what());
  }
  if (x.dim() != c.d) throw UsageError("--x has dimension " + std::to_string(x.dim()) + " but --d is " + std::to_string(c.d));
  return x;
}

double p_or_default(const RunConfig& c, double fallback) { return c.p ? *c.p : fallback; }

RunOptions run_options(const RunConfig& c) { return {c.samples, c.seed, c.threads}; }

std::string csv_line(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    first = false;
    out += f;
  }
  return out + "\n";
}

std::string num(double v) { return format_double(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

struct Artifact {
  json doc;
  std::string csv;
  bool finite_size_warning = false;
};

Artifact run_expand(const RunConfig& c) {
  const auto solution = solve_pc_fixed_point(lace_coefficient_expansions(), c.order);
  const TruncatedSeries pc = solution.pc();
  Artifact a;
  a.doc = {{"schema", "sitepc.expand/1"},
           {"order", c.order},
           {"q", coefficients_json(solution.q)},
           {"pc", coefficients_json(pc)},
           {"q_text", to_string(solution.q)},
           {"pc_text", to_string(pc)},
           {"rounds", solution.rounds}};
  a.csv = csv_line({"index", "q", "pc"});
  for (int i = 0; i <= pc.order(); ++i) {
    a.csv += csv_line({num(i), i <= solution.q.order() ? to_string(solution.q[i]) : "", to_string(pc[i])});
  }
  return a;
}

Artifact run_convert(const RunConfig& c) {
  TruncatedSeries in = TruncatedSeries::zero(Variable::s, 0);
  if (!c.preset.empty()) {
    in = preset_series(c.preset);
  } else {
    std::ifstream file(c.input);
    if (!file) throw UsageError("cannot open --input '" + c.input + "'");
    json j;
    try {
      j = json::parse(file);
    } catch (const json::exception& e) {
      throw UsageError("invalid JSON in '" + c.input + "': " + e.what());
    }
    in = series_from_json(j);
  }
  const TruncatedSeries out = c.direction == "to-2d" ? substitute_sigma_to_2d(in) : substitute_2d_to_sigma(in);
  Artifact a;
  a.doc = {{"schema", "sitepc.convert/1"},
           {"direction", c.direction},
           {"input", to_json(in)},
           {"output", to_json(out)},
           {"coefficients", coefficients_json(out, 1)},
           {"text", to_string(out)}};
  a.csv = csv_line({"index", "input", "output"});
  for (int i = 0; i <= out.order(); ++i) a.csv += csv_line({num(i), to_string(in[i]), to_string(out[i])});
  return a;
}

Point pad(const Point& x, int d) {
  std::vector<int> coords(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < std::min(d, x.dim()); ++i) coords[static_cast<std::size_t>(i)] = x[i];
  return Point(coords);
}

Artifact run_count(const RunConfig& c) {
  std::function<BigInt(int)> count;
  json query = {{"kind", c.query}};
  int d_min = 1;
  if (c.query == "class") {
    if (c.l1 < c.linf || c.linf < 0) throw UsageError("class queries need l1 >= linf >= 0");
    count = [&](int d) { return class_count(d, c.l1, c.linf); };
    query["l1"] = c.l1;
    query["linf"] = c.linf;
  } else if (c.query == "walk") {
    if (c.m < 0) throw UsageError("--m must be nonnegative");
    const Point x = parse_x(c);
    int support = 0;
    for (int i = 0; i < x.dim(); ++i) {
      if (x[i] != 0) support = i + 1;
    }
    d_min = std::max(1, support);
    count = [&c, x](int d) { return walk_counts(d, c.m).at(pad(x, d)); };
    query["m"] = c.m;
    query["x"] = to_string(x);
  } else if (c.query == "ball") {
    if (c.m < 0) throw UsageError("--m must be nonnegative");
    count = [&](int d) { return BigInt(ball_size(d, c.m)); };
    query["radius"] = c.m;
  } else {
    throw UsageError("unknown --query '" + c.query + "' (expected class, walk or ball)");
  }
  const BigInt value = count(c.d);
  Artifact a;
  a.doc = {{"schema", "sitepc.count/1"}, {"query", query}, {"d", c.d}, {"value", bigint_json(value)}};
  a.csv = csv_line({"query", "d", "value"}) + csv_line({c.query, num(c.d), value.str()});
  if (c.omega_degree >= 0) {
    const OmegaPolynomial poly = polynomial_in_omega(count, c.omega_degree, d_min);
    json coeffs = json::array();
    for (const auto& r : poly.coefficients) coeffs.push_back(rational_to_json(r));
    a.doc["omega_polynomial"] = {{"coefficients", coeffs}, {"text", poly.to_string()}, {"d_min", d_min}};
  }
  return a;
}

Artifact run_cycles(const RunConfig& c) {
  const Point x = parse_x(c);
  const CycleFamily family = enumerate_cycles(c.d, x, c.length);
  json interiors = json::array();
  for (const auto& interior : family.interiors) {
    json sites = json::array();
    for (const auto& v : interior) sites.push_back(to_string(v));
    interiors.push_back(sites);
  }
  Artifact a;
  a.doc = {{"schema", "sitepc.cycles/1"},
           {"d", c.d},
           {"x", to_string(x)},
           {"length", c.length},
           {"n_cycles", family.size()},
           {"interiors", interiors}};
  std::string prob_text;
  if (family.size() <= static_cast<std::size_t>(kMaxUnionCycles) &&
      family.interior_sites().size() <= static_cast<std::size_t>(kMaxUnionSites)) {
    const ProbabilityPolynomial poly = union_occupation_probability(family);
    json coeffs = json::array();
    for (const auto& v : poly.coefficients()) coeffs.push_back(bigint_json(v));
    prob_text = poly.to_string();
    a.doc["probability"] = {{"coefficients", coeffs}, {"text", prob_text}};
  } else {
    a.doc["probability"] = nullptr;
  }
  a.csv = csv_line({"x", "length", "n_cycles", "probability"}) +
          csv_line({"\"" + to_string(x) + "\"", num(c.length), num(static_cast<std::uint64_t>(family.size())), prob_text});
  return a;
}

json mc_header(const RunConfig& c, const std::string& schema) {
  return {{"schema", schema}, {"d", c.d}, {"L", c.L}, {"samples", c.samples}, {"seed", c.seed}};
}

Artifact run_pc(const RunConfig& c) {
  const TorusGeometry g(c.d, c.L);
  const RunOptions run = run_options(c);
  const Estimate pc = estimate_pc(g, run);
  Artifact a;
  a.doc = mc_header(c, "sitepc.pc/1");
  a.doc["pc"] = estimate_json(pc);
  a.csv = csv_line({"quantity", "p", "mean", "stderr", "n"}) +
          csv_line({"pc", "", num(pc.mean), num(pc.stderr()), num(static_cast<std::uint64_t>(pc.n))});
  std::vector<double> grid = c.p_grid;
  if (c.p) grid.insert(grid.begin(), *c.p);
  json theta = json::array();
  for (double p : grid) {
    const Estimate e = estimate_theta(g, p, run);
    json row = estimate_json(e);
    row["p"] = p;
    theta.push_back(row);
    a.csv += csv_line({"theta", num(p), num(e.mean), num(e.stderr()), num(static_cast<std::uint64_t>(e.n))});
  }
  a.doc["theta"] = theta;
  return a;
}

ChemVariant parse_variant(const std::string& v) {
  if (v == "plain") return ChemVariant::plain;
  if (v == "at-least") return ChemVariant::at_least;
  if (v == "at-most") return ChemVariant::at_most;
  if (v == "exactly") return ChemVariant::exactly;
  throw UsageError("unknown --variant '" + v + "'");
}

Artifact estimate_artifact(const RunConfig& c, const std::string& schema, const std::string& quantity, double p,
                           const Estimate& e, json extra) {
  Artifact a;
  a.doc = mc_header(c, schema);
  a.doc["p"] = p;
  for (auto it = extra.begin(); it != extra.end(); ++it) a.doc[it.key()] = it.value();
  a.doc["estimate"] = e.mean;
  a.doc["stderr"] = e.stderr();
  a.csv = csv_line({"quantity", "d", "L", "p", "mean", "stderr", "n"}) +
          csv_line({quantity, num(c.d), num(c.L), num(p), num(e.mean), num(e.stderr()), num(static_cast<std::uint64_t>(e.n))});
  return a;
}

Artifact run_tau(const RunConfig& c) {
  const TorusGeometry g(c.d, c.L);
  const Point x = parse_x(c);
  if (x == Point::origin(c.d)) throw UsageError("tau needs x != 0");
  const double p = p_or_default(c, 1.0 / (2.0 * c.d));
  const ChemVariant variant = parse_variant(c.variant);
  const Estimate e = two_point(g, x, p, variant, c.l, run_options(c));
  json extra = {{"x", to_string(x)}, {"variant", c.variant}};
  if (variant != ChemVariant::plain) extra["l"] = c.l;
  return estimate_artifact(c, "sitepc.tau/1", "tau", p, e, extra);
}

Artifact run_double(const RunConfig& c) {
  const TorusGeometry g(c.d, c.L);
  const Point x = parse_x(c);
  const double p = p_or_default(c, 1.0 / (2.0 * c.d));
  const Estimate e = double_connection(g, x, p, run_options(c));
  return estimate_artifact(c, "sitepc.double/1", "double", p, e, {{"x", to_string(x)}});
}

Artifact run_triangle(const RunConfig& c) {
  const TorusGeometry g(c.d, c.L);
  const double p = p_or_default(c, 1.0 / (2.0 * c.d));
  const TriangleResult r = triangle_diagrams(g, p, run_options(c), c.floor);
  Artifact a;
  a.doc = mc_header(c, "sitepc.triangle/1");
  a.doc["p"] = p;
  const std::pair<const char*, double> values[] = {
      {"bullet", r.bullet},           {"bullet_circ", r.bullet_circ}, {"bullet_bullet_circ", r.bullet_bullet_circ},
      {"bullet_at_0", r.bullet_at_0}, {"bullet_circ_at_0", r.bullet_circ_at_0}, {"seam_tau", r.seam_tau}};
  a.csv = csv_line({"quantity", "value"});
  for (const auto& [name, v] : values) {
    a.doc[name] = v;
    a.csv += csv_line({name, num(v)});
  }
  a.doc["floor"] = c.floor;
  a.doc["finite_size_warning"] = r.finite_size_warning;
  a.csv += csv_line({"finite_size_warning", r.finite_size_warning ? "1" : "0"});
  a.finite_size_warning = r.finite_size_warning;
  return a;
}

Artifact run_pi(const RunConfig& c) {
  const TorusGeometry g(c.d, c.L);
  const double p = p_or_default(c, 1.0 / (2.0 * c.d));
  const PiHatResult r = pi_hat_estimate(g, c.n, p, c.radius, run_options(c));
  json extra = {{"n", c.n}, {"radius", c.radius}};
  if (c.n == 0) extra["near_origin_max_abs"] = r.max_abs_near_origin;
  return estimate_artifact(c, "sitepc.pi/1", "pi" + std::to_string(c.n), p, r.estimate, extra);
}

Artifact run_oze(const RunConfig& c) {
  const TorusGeometry g(c.d, c.L);
  const double p = p_or_default(c, 0.8 / (2.0 * c.d));
  const OzeResult r = oze_residual(g, p, c.radius, run_options(c));
  Artifact a;
  a.doc = mc_header(c, "sitepc.oze/1");
  a.doc["p"] = p;
  a.doc["radius"] = c.radius;
  a.doc["residual"] = r.residual;
  a.doc["lhs"] = r.lhs;
  a.doc["rhs"] = r.rhs;
  a.doc["pi_hat"] = r.pi_hat;
  a.doc["reach"] = estimate_json(r.reach);
  a.doc["pi"] = json::array({estimate_json(r.pi[0]), estimate_json(r.pi[1]), estimate_json(r.pi[2])});
  a.csv = csv_line({"quantity", "value", "stderr"});
  a.csv += csv_line({"residual", num(r.residual), ""});
  a.csv += csv_line({"lhs", num(r.lhs), ""});
  a.csv += csv_line({"rhs", num(r.rhs), ""});
  a.csv += csv_line({"reach", num(r.reach.mean), num(r.reach.stderr())});
  for (int n = 0; n < 3; ++n) a.csv += csv_line({"pi" + std::to_string(n), num(r.pi[n].mean), num(r.pi[n].stderr())});
  return a;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  std::uint64_t s = 0;
  while (s == 0) s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  return s;
}

}  // namespace

void validate(RunConfig& c) {
  if (std::find(std::begin(kCommands), std::end(kCommands), c.command) == std::end(kCommands)) {
    throw UsageError("unknown subcommand '" + c.command + "'");
  }
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  if (c.d < 1) throw UsageError("--d must be at least 1");
  if (c.command == "expand" && c.order < 0) throw UsageError("--order must be nonnegative");
  if (c.command == "convert") {
    if (c.preset.empty() == c.input.empty()) throw UsageError("convert needs exactly one of --input or --preset");
    if (c.direction != "to-2d" && c.direction != "to-sigma") throw UsageError("--direction must be to-2d or to-sigma");
  }
  if (c.command == "cycles" && (c.length < 4 || c.length > 8 || c.length % 2 != 0)) {
    throw UsageError("--length must be 4, 6 or 8");
  }
  if (is_stochastic(c.command)) {
    if (c.L < 4 || c.L % 2 != 0) throw UsageError("--L must be even and at least 4");
    if (c.samples < 1) throw UsageError("--samples must be at least 1");
    if (c.p && !(*c.p >= 0.0 && *c.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
    for (double p : c.p_grid) {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--p-grid values must lie in [0, 1]");
    }
    if ((c.command == "pi" || c.command == "oze") && (c.radius < 0 || c.radius > c.L / 2 - 1)) {
      throw UsageError("--radius must lie in [0, L/2 - 1]");
    }
    if (c.command == "pi" && (c.n < 0 || c.n > 2)) throw UsageError("--n must be 0, 1 or 2");
    if (c.command == "tau" && c.variant != "plain" && c.l < 1) throw UsageError("--l must be at least 1");
    if (c.command == "triangle" && !(c.floor >= 0.0)) throw UsageError("--floor must be nonnegative");
    if (c.seed == 0) c.seed = entropy_seed();
  }
}

int run(const RunConfig& c, std::ostream& out) {
  Artifact a;
  if (c.command == "expand") a = run_expand(c);
  else if (c.command == "convert") a = run_convert(c);
  else if (c.command == "count") a = run_count(c);
  else if (c.command == "cycles") a = run_cycles(c);
  else if (c.command == "pc") a = run_pc(c);
  else if (c.command == "tau") a = run_tau(c);
  else if (c.command == "double") a = run_double(c);
  else if (c.command == "triangle") a = run_triangle(c);
  else if (c.command == "pi") a = run_pi(c);
  else if (c.command == "oze") a = run_oze(c);
  else throw UsageError("unknown subcommand '" + c.command + "'");
  out << (c.format == "csv" ? a.csv : dump_json(a.doc));
  return a.finite_size_warning && c.strict ? kFiniteSize : kOk;
}

namespace {

void add_geometry(CLI::App* sub, RunConfig& c) {
  sub->add_option("--d", c.d, "Dimension")->capture_default_str();
  sub->add_option("--L", c.L, "Torus side length (even, >= 4)")->capture_default_str();
}

void add_mc(CLI::App* sub, RunConfig& c) {
  sub->add_option("--samples", c.samples, "Number of samples")->capture_default_str();
  sub->add_option("--seed", c.seed, "Master seed (0 draws one from the OS)")->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores); results do not depend on it")
      ->capture_default_str();
}

void add_output(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_flag("--strict", c.strict, "Exit with code 3 on finite-size warnings");
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  double p_raw = std::numeric_limits<double>::quiet_NaN();

  CLI::App app{"Site percolation critical-point expansion toolkit", "sitepc"};
  app.set_help_all_flag("--help-all", "Print help for every subcommand");
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "Solve the lace-expansion fixed point for Omega p_c as a series in 1/(2d)");
  expand->add_option("--order", c.order, "Series order M of q = Omega p_c")->capture_default_str();
  add_output(expand, c);

  auto* convert = app.add_subcommand("convert", "Convert a p_c series between 1/(2d-1) and 1/(2d)");
  convert->add_option("--input", c.input, "Series JSON file {variable, order, coefficients}");
  convert->add_option("--preset", c.preset, "Built-in sigma series")->check(CLI::IsMember({"site", "bond"}));
  convert->add_option("--direction", c.direction, "to-2d (s -> t) or to-sigma (t -> s)")
      ->check(CLI::IsMember({"to-2d", "to-sigma"}))
      ->capture_default_str();
  add_output(convert, c);

  auto* count = app.add_subcommand("count", "Exact lattice counts: point classes, walk counts, ball sizes");
  count->add_option("--query", c.query, "class, walk or ball")->check(CLI::IsMember({"class", "walk", "ball"}))
      ->capture_default_str();
  count->add_option("--d", c.d, "Dimension")->capture_default_str();
  count->add_option("--l1", c.l1, "l1 norm of the class")->capture_default_str();
  count->add_option("--linf", c.linf, "l-infinity norm of the class")->capture_default_str();
  count->add_option("--m", c.m, "Walk length (walk) or radius (ball)")->capture_default_str();
  count->add_option("--x", c.x, "Walk endpoint, e.g. 1,1,0");
  count->add_option("--omega-degree", c.omega_degree, "Also interpolate the count as a polynomial in Omega of this degree");
  add_output(count, c);

  auto* cycles = app.add_subcommand("cycles", "Enumerate self-avoiding cycles through 0 and x");
  cycles->add_option("--d", c.d, "Dimension")->capture_default_str();
  cycles->add_option("--x", c.x, "Second point on the cycle, e.g. 1,1,1")->required();
  cycles->add_option("--length", c.length, "Cycle length (4, 6 or 8)")->capture_default_str();
  add_output(cycles, c);

  auto* pc = app.add_subcommand("pc", "Wrapping estimate of p_c and the theta(p) proxy");
  add_geometry(pc, c);
  pc->add_option("--p", p_raw, "Also estimate theta at this p");
  pc->add_option("--p-grid", c.p_grid, "Also estimate theta on these p values");
  add_mc(pc, c);
  add_output(pc, c);

  auto* tau = app.add_subcommand("tau", "Two-point function with optional chemical-distance constraint");
  add_geometry(tau, c);
  tau->add_option("--p", p_raw, "Occupation probability (default 1/(2d))");
  tau->add_option("--x", c.x, "Target point")->required();
  tau->add_option("--variant", c.variant, "plain, at-least, at-most or exactly")
      ->check(CLI::IsMember({"plain", "at-least", "at-most", "exactly"}))
      ->capture_default_str();
  tau->add_option("--l", c.l, "Chemical-distance threshold")->capture_default_str();
  add_mc(tau, c);
  add_output(tau, c);

  auto* dbl = app.add_subcommand("double", "Probability that 0 and x are doubly connected");
  add_geometry(dbl, c);
  dbl->add_option("--p", p_raw, "Occupation probability (default 1/(2d))");
  dbl->add_option("--x", c.x, "Target point")->required();
  add_mc(dbl, c);
  add_output(dbl, c);

  auto* triangle = app.add_subcommand("triangle", "Triangle diagrams from a full-torus tau estimate");
  add_geometry(triangle, c);
  triangle->add_option("--p", p_raw, "Occupation probability (default 1/(2d))");
  triangle->add_option("--floor", c.floor, "Finite-size warning when tau on the seam exceeds this")->capture_default_str();
  add_mc(triangle, c);
  add_output(triangle, c);

  auto* pi = app.add_subcommand("pi", "Monte Carlo estimate of the lace coefficient sum_x Pi^(n)(x)");
  add_geometry(pi, c);
  pi->add_option("--n", c.n, "Coefficient index (0, 1 or 2)")->capture_default_str();
  pi->add_option("--p", p_raw, "Occupation probability (default 1/(2d))");
  pi->add_option("--radius", c.radius, "Truncation radius of the u_0 sum")->capture_default_str();
  add_mc(pi, c);
  add_output(pi, c);

  auto* oze = app.add_subcommand("oze", "Relative residual of the Ornstein-Zernike identity at k = 0");
  add_geometry(oze, c);
  oze->add_option("--p", p_raw, "Occupation probability (default 0.8/(2d))");
  oze->add_option("--radius", c.radius, "Truncation radius of the u_0 sum")->capture_default_str();
  add_mc(oze, c);
  add_output(oze, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (!std::isnan(p_raw)) c.p = p_raw;

  try {
    validate(c);
    if (c.out.empty()) return run(c, out);
    std::ostringstream buffer;
    const int code = run(c, buffer);
    std::ofstream file(c.out);
    if (!file) throw UsageError("cannot write --out '" + c.out + "'");
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << dump_json({{"error", "resource"}, {"message", e.what()}});
    return kResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TagMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace sitepc::cli
