#include "nilcoh/cli.hpp"

#include "nilcoh/adapted_rep.hpp"
#include "nilcoh/algebra_io.hpp"
#include "nilcoh/coadjoint.hpp"
#include "nilcoh/diophantine.hpp"
#include "nilcoh/estimates.hpp"
#include "nilcoh/lattice.hpp"
#include "nilcoh/nilflow.hpp"
#include "nilcoh/recipe.hpp"
#include "nilcoh/rep_solver.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>

namespace nilcoh::cli {

using json = nlohmann::ordered_json;
using cd = std::complex<double>;

namespace {

// ---------------------------------------------------------------------------
// Report helpers

json q_json(const Rational& r) { return to_string(r); }

json vec_json(const VectorQ& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

json vec_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

template <class T>
json vec_json(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

// Columns of a basis matrix, one vector each.
json columns_json(const MatrixQ& m) {
  json a = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(vec_json(VectorQ(m.col(c))));
  return a;
}

json rows_json(const MatrixQ& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vec_json(VectorQ(m.row(r).transpose())));
  return a;
}

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

json check_json(const EstimateCheck& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"constant", c.constant}, {"ratio", c.ratio()}};
}

class Formatter {
 public:
  explicit Formatter(int precision) : precision_(precision) {}

  std::string number(double v) const {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.{}g}", v, precision_);
  }

  std::string scalar(const json& v) const {
    switch (v.type()) {
      case json::value_t::number_float: return number(v.get<double>());
      case json::value_t::string: return v.get<std::string>();
      case json::value_t::null: return "null";
      default: return v.dump();
    }
  }

  static bool is_flat(const json& v) {
    return std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
  }

  std::string inline_array(const json& v) const {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  }

  // Stable "key: value" text; nested objects indent by two, list items get "- ".
  void render(const json& node, int indent, std::string& out) const {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : node.items()) {
      if (value.is_object()) {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      } else if (value.is_array() && !is_flat(value)) {
        out += pad + key + ":\n";
        for (const json& item : value) {
          if (item.is_object()) {
            std::string block;
            render(item, indent + 4, block);
            block.replace(static_cast<std::size_t>(indent + 2), 2, "- ");
            out += block;
          } else {
            out += pad + "  - " + (item.is_array() ? inline_array(item) : scalar(item)) + "\n";
          }
        }
      } else if (value.is_array()) {
        out += pad + key + ": " + inline_array(value) + "\n";
      } else {
        out += pad + key + ": " + scalar(value) + "\n";
      }
    }
  }

 private:
  int precision_;
};

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header, const Formatter& fmt)
      : path_(path), fmt_(fmt) {
    for (std::size_t i = 0; i < header.size(); ++i) text_ += (i ? "," : "") + header[i];
    text_ += "\n";
  }

  void row(std::initializer_list<double> values) {
    std::size_t i = 0;
    for (double v : values) text_ += (i++ ? "," : "") + fmt_.number(v);
    text_ += "\n";
  }

  void raw_row(const std::string& line) { text_ += line + "\n"; }

  void write() const {
    std::ofstream f(path_, std::ios::binary);
    f << text_;
    if (!f) throw Error(ErrorKind::invalid_argument, "cannot write " + path_.string());
  }

 private:
  std::filesystem::path path_;
  const Formatter& fmt_;
  std::string text_;
};

// ---------------------------------------------------------------------------
// Inputs

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraQ require_algebra(const RunConfig& c) {
  if (c.algebra.empty()) throw UsageError("--algebra is required");
  if (!std::filesystem::is_regular_file(c.algebra)) throw UsageError("algebra file not found: " + c.algebra.string());
  return load_algebra(c.algebra);
}

VectorQ require_rational(const std::string& text, const char* flag, int dim) {
  if (text.empty()) throw UsageError(fmt::format("{} is required", flag));
  VectorQ v = parse_rational_vector(text);
  if (v.size() != dim)
    throw Error(ErrorKind::dimension_mismatch, fmt::format("{} needs {} entries, got {}", flag, dim, v.size()));
  return v;
}

Eigen::VectorXd require_real(const std::string& text, const char* flag, int dim) {
  if (text.empty()) throw UsageError(fmt::format("{} is required", flag));
  Eigen::VectorXd v = FrequencyInput::parse(text).values;
  if (v.size() != dim)
    throw Error(ErrorKind::dimension_mismatch, fmt::format("{} needs {} entries, got {}", flag, dim, v.size()));
  return v;
}

json header(const RunConfig& c, const std::string& name) {
  json h;
  h["subcommand"] = c.subcommand;
  if (!name.empty()) h["algebra"] = name;
  h["seed"] = c.seed;
  return h;
}

// ---------------------------------------------------------------------------
// Subcommands

json cmd_analyze(const RunConfig& c) {
  const AlgebraQ alg = require_algebra(c);
  json r = header(c, alg.name());
  r["dim"] = alg.dim();
  r["step"] = alg.step();
  r["layers"] = vec_json(alg.layers());
  r["generator_count"] = alg.generator_count();
  r["labels"] = vec_json(alg.labels());
  json series = json::array();
  for (int j = 1; j <= alg.step() + 1; ++j)
    series.push_back({{"term", j}, {"dim", alg.series_term(j).cols()}, {"basis", columns_json(alg.series_term(j))}});
  r["central_series"] = series;
  r["center"] = {{"dim", alg.center().cols()}, {"basis", columns_json(alg.center())}};
  json brackets = json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j) {
      const VectorQ b = alg.bracket(alg.basis_vector(i), alg.basis_vector(j));
      if (!is_zero_matrix(MatrixQ(b))) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"value", vec_json(b)}});
    }
  r["brackets"] = brackets;
  const auto failures = LatticeData{&alg}.necessary_condition_failures();
  r["lattice"] = {{"necessary_conditions_hold", failures.empty()}, {"failures", vec_json(failures)}};
  return r;
}

json cmd_orbit(const RunConfig& c) {
  const AlgebraQ alg = require_algebra(c);
  const VectorQ lambda = require_rational(c.lambda, "--lambda", alg.dim());
  const VectorQ x = require_rational(c.x, "--X", alg.dim());
  const auto inv = orbit_invariants(alg, lambda, x);
  json r = header(c, alg.name());
  r["lambda"] = vec_json(lambda);
  r["X"] = vec_json(x);
  r["rank"] = inv.maximal_rank ? "maximal" : "non-maximal";
  r["maximal_rank"] = inv.maximal_rank;
  r["degenerate_conditions"] = vec_json(std::vector<bool>(inv.degenerate_conditions.begin(), inv.degenerate_conditions.end()));
  r["b_matrix"] = rows_json(inv.b_matrix);
  r["radical_basis"] = columns_json(inv.radical_basis);
  r["nk1_perp_basis"] = columns_json(inv.nk1_perp_basis);
  r["w_k_squared"] = q_json(inv.w_k_squared);
  r["w_k"] = inv.w_k;
  r["w_z_squared"] = q_json(inv.w_z_squared);
  r["w_z"] = inv.w_z;
  json bx = json::array();
  for (const auto& [j, v] : inv.b_x_per_basis) bx.push_back({{"index", j + 1}, {"value", q_json(v)}});
  r["b_x_per_basis"] = bx;
  r["delta_squared"] = q_json(inv.delta_squared);
  r["delta"] = inv.delta;
  try {
    r["weakly_integral"] = weakly_integral(LatticeData{&alg}, lambda);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::unsupported_algebra) throw;
    r["weakly_integral"] = "unknown";
  }
  return r;
}

json cmd_adapt(const RunConfig& c) {
  const AlgebraQ alg = require_algebra(c);
  const VectorQ lambda = require_rational(c.lambda, "--lambda", alg.dim());
  const VectorQ x = require_rational(c.x, "--X", alg.dim());
  const AdaptedRepData rep = build_adapted(alg, lambda, x);
  json r = header(c, alg.name());
  r["lambda"] = vec_json(lambda);
  r["X"] = vec_json(x);
  r["Y"] = vec_json(rep.y);
  r["Y_direction"] = vec_json(rep.y_direction);
  r["delta"] = rep.delta;
  r["delta_squared"] = q_json(rep.delta_squared);
  r["coupling"] = rep.coupling;
  r["nprime_basis"] = columns_json(rep.nprime_basis);
  r["U"] = vec_json(rep.u);
  r["U_direction"] = vec_json(rep.normal_direction);
  r["X_dot_U"] = rep.x_component;
  r["X_dot_U_squared"] = q_json(rep.x_component_squared);
  r["t0"] = q_json(rep.t0);
  r["lambda_shifted"] = vec_json(rep.lambda_shifted);
  r["xproj_margin_squared"] = q_json(xproj_margin_squared(alg, rep));
  json symbols = json::array();
  for (Eigen::Index col = 0; col < rep.nprime_basis.cols(); ++col) {
    const VectorQ e = rep.nprime_basis.col(col);
    json terms = json::array();
    for (const auto& t : operator_symbol(alg, rep, e))
      terms.push_back({{"power", t.power}, {"coefficient", vec_json(t.coefficient)}});
    symbols.push_back({{"element", vec_json(e)}, {"terms", terms}});
  }
  r["symbols"] = symbols;
  return r;
}

struct Outcome {
  json report;
  int status = exit_ok;
};

Outcome cmd_solve(const RunConfig& c, const Formatter& fmt) {
  const AlgebraQ alg = require_algebra(c);
  const VectorQ lambda = require_rational(c.lambda, "--lambda", alg.dim());
  const VectorQ x = require_rational(c.x, "--X", alg.dim());
  const Recipe recipe = Recipe::parse(c.f);
  const AdaptedRepData rep = build_adapted(alg, lambda, x);

  RepContext ctx;
  ctx.coupling = rep.coupling;
  const bool hermite = c.mode == "hermite";
  if (hermite || recipe.uses_hermite()) {
    const bool h3 = alg.dim() == 3 && alg.layers() == std::vector<int>{2, 1};
    if (!h3 || x(0) != Rational(1) || x(1) != Rational(0))
      throw Error(ErrorKind::mode_mismatch, "hermite terms and --mode hermite need h3 with X = E1 + c E3");
    ctx.heisenberg_m = rep.coupling;
  }
  const Grid grid{c.grid_l, c.grid_n};
  RepFunction f = sample_recipe(recipe, ctx, grid);
  if (hermite) f = to_hermite(f, c.hermite_count);

  const SpectralTolerances tol;
  EstimateOptions opts;
  opts.relative_slack = c.estimate_slack;
  opts.zero_tol = c.zero_tol;

  const double f_norm = f.l2_norm();
  const cd obstruction = invariant_distribution(f);
  const bool obstruction_free = std::abs(obstruction) <= c.zero_tol * f_norm;
  const RepFunction u = green(f, tol);
  const RepFunction fg = to_grid(f);
  const Eigen::MatrixXcd diff = to_grid(apply_X(u, tol)).values() - fg.values();
  const double residual = f_norm > 0.0 ? std::sqrt(grid.step() * diff.squaredNorm()) / f_norm : 0.0;
  const double annihilation = std::abs(invariant_distribution(apply_X(f, tol)));

  json r = header(c, alg.name());
  r["lambda"] = vec_json(lambda);
  r["X"] = vec_json(x);
  r["f"] = recipe.to_string();
  r["mode"] = c.mode;
  r["grid"] = {{"N", grid.size}, {"L", grid.half_width}};
  r["delta"] = rep.delta;
  r["coupling"] = rep.coupling;
  r["alpha"] = c.alpha;
  r["beta"] = c.beta;
  r["f_l2"] = f_norm;
  r["obstruction"] = complex_json(obstruction);
  r["obstruction_free"] = obstruction_free;
  r["inversion_residual"] = residual;
  r["inversion_ok"] = residual <= c.inversion_tol;
  r["annihilation"] = annihilation;
  r["u_l2_window"] = u.l2_norm();
  r["u_y_sobolev_beta"] = y_sobolev_norm(u, c.beta);

  Outcome out;
  try {
    json est;
    est["invariant_distribution"] = check_json(check_invdist_estimate(f, c.alpha, 0, opts));
    const auto green_report = check_green_estimates(f, c.alpha, c.beta, {0, 1, 2}, false, opts);
    est["green_part1"] = check_json(green_report.part1);
    json part2 = json::array();
    for (const auto& [ell, chk] : green_report.part2) {
      json row = {{"ell", ell}};
      row.update(check_json(chk));
      part2.push_back(row);
    }
    est["green_part2"] = part2;
    r["estimates"] = est;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::estimate_violated) throw;
    r["estimates"] = {{"violated", e.what()}};
    out.status = exit_estimate;
  }
  if (out.status == exit_ok && residual > c.inversion_tol) out.status = exit_validation;

  const RepFunction ug = to_grid(u);
  CsvWriter csv(c.out_dir / "solve.csv", {"t", "re_f", "im_f", "re_u", "im_u"}, fmt);
  for (int j = 0; j < grid.size; ++j) {
    const cd fv = fg.values()(j, 0), uv = ug.values()(j, 0);
    csv.row({grid.node(j), fv.real(), fv.imag(), uv.real(), uv.imag()});
  }
  csv.write();
  r["csv"] = (c.out_dir / "solve.csv").string();
  out.report = std::move(r);
  return out;
}

Outcome cmd_diophantine(const RunConfig& c, const Formatter& fmt) {
  FrequencyInput omega;
  std::string name;
  if (!c.omega.empty()) {
    omega = FrequencyInput::parse(c.omega);
  } else {
    const AlgebraQ alg = require_algebra(c);
    name = alg.name();
    const FrequencyInput full = FrequencyInput::parse(c.x);
    if (full.values.size() != alg.dim())
      throw Error(ErrorKind::dimension_mismatch, fmt::format("--X needs {} entries", alg.dim()));
    omega = full.exact ? FrequencyInput::from_rational(frequency_vector(alg, *full.exact))
                       : FrequencyInput::from_double(frequency_vector(alg.cast<double>(), full.values));
  }
  const DiophantineReport d = certify(omega, c.tau, c.m_max);

  json r = header(c, name);
  r["omega"] = vec_json(d.omega);
  r["tau"] = d.tau;
  r["m_max"] = d.m_max;
  r["k_best"] = d.k_best;
  r["witness"] = vec_json(d.witness);
  r["irrational_in_range"] = d.irrational;
  if (d.collapse_shell) r["collapse_shell"] = *d.collapse_shell;
  if (d.continued_fraction) {
    const auto& cf = *d.continued_fraction;
    json conv = json::array();
    for (const auto& [p, q] : cf.convergents) conv.push_back(json::array({p, q}));
    json rec = json::array();
    for (const auto& w : cf.record_witnesses) rec.push_back(vec_json(w));
    r["continued_fraction"] = {{"partial_quotients", vec_json(cf.partial_quotients)},
                               {"convergents", conv},
                               {"record_witnesses", rec},
                               {"agrees", cf.agrees}};
  }

  CsvWriter csv(c.out_dir / "diophantine.csv", {"shell", "min_abs_pairing", "scaled"}, fmt);
  for (const auto& s : d.shells) csv.row({static_cast<double>(s.shell), s.minimum, s.scaled});
  csv.write();
  r["csv"] = (c.out_dir / "diophantine.csv").string();
  return {std::move(r), exit_ok};
}

Observable parse_observable(const std::string& text, int n) {
  static const std::regex pattern(R"(\s*(constant|character|coboundary)\s*(?:\(([^)]*)\))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw Error(ErrorKind::parse, "unknown observable: " + text);
  if (m[1] == "constant") return Observable::constant();
  std::vector<long> freq;
  const std::string args = m[2];
  std::size_t pos = 0;
  while (pos <= args.size()) {
    const std::size_t comma = std::min(args.find(',', pos), args.size());
    const Rational v = parse_rational(std::string_view(args).substr(pos, comma - pos));
    if (!is_integer(v)) throw Error(ErrorKind::parse, "character frequencies must be integers");
    freq.push_back(numerator(v).convert_to<long>());
    pos = comma + 1;
  }
  if (static_cast<int>(freq.size()) != n)
    throw Error(ErrorKind::dimension_mismatch, fmt::format("observable needs {} integer frequencies", n));
  if (m[1] == "character") return Observable::character(freq);
  return Observable::coboundary({{freq, cd(1.0)}});
}

Outcome cmd_simulate(const RunConfig& c, const Formatter& fmt) {
  const AlgebraQ alg = require_algebra(c);
  const Eigen::VectorXd x = require_real(c.x, "--X", alg.dim());
  const Eigen::VectorXd x0 = c.x0.empty() ? Eigen::VectorXd::Zero(alg.dim()) : require_real(c.x0, "--x0", alg.dim());
  const Observable obs = parse_observable(c.obs, alg.generator_count());
  const NilflowSimulator sim(alg);
  const NilPoint start = sim.reduce(x0);
  const Eigen::VectorXd omega = x.head(alg.generator_count());

  json r = header(c, alg.name());
  r["X"] = vec_json(x);
  r["x0"] = vec_json(start.coords);
  r["observable"] = c.obs;
  r["dt"] = c.dt;

  Outcome out;
  CsvWriter csv(c.out_dir / "simulate.csv", {"T", "re_avg", "im_avg", "bound"}, fmt);
  json rows = json::array();
  for (double T : c.times) {
    const cd avg = sim.birkhoff_average(start, x, obs, T, c.dt);
    json row = {{"T", T}, {"average", complex_json(avg)}};
    double bound = 1.0;
    bool pass = true;
    if (obs.kind() == Observable::Kind::characters) {
      const auto eq = sim.equidistribution_report(start, x, {obs.terms().front().m}, {T}, c.dt);
      if (eq.empty()) {
        pass = std::abs(avg - cd(1.0)) <= 1e-12;
      } else {
        bound = eq.front().bound;
        pass = eq.front().pass;
        row["closed_form"] = complex_json(eq.front().closed_form);
        row["error"] = eq.front().error;
      }
    } else if (obs.kind() == Observable::Kind::coboundary) {
      bound = 2.0 * obs.potential_sup_bound() / T;
      const cd telescoped = obs.potential(sim.flow_step(start, x, T)) - obs.potential(start);
      row["telescoped"] = complex_json(telescoped / T);
      pass = std::abs(avg) <= bound * (1.0 + 1e-12);
    }
    row["bound"] = bound;
    row["pass"] = pass;
    if (!pass) out.status = exit_estimate;
    rows.push_back(row);
    csv.row({T, avg.real(), avg.imag(), bound});
  }
  r["frequency"] = obs.kind() == Observable::Kind::constant ? 0.0 : obs.max_frequency(omega);
  r["rows"] = rows;
  csv.write();
  r["csv"] = (c.out_dir / "simulate.csv").string();
  out.report = std::move(r);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RunConfig

void RunConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::invalid_argument, what); };
  static const std::vector<std::string> known{"analyze", "orbit", "adapt", "solve", "diophantine", "simulate"};
  if (std::find(known.begin(), known.end(), subcommand) == known.end()) bad("unknown subcommand: " + subcommand);
  if (precision < 1 || precision > 17) bad("--precision must lie in 1..17");
  if (!(grid_l > 0.0)) bad("--grid-L must be positive");
  if (grid_n < 16 || grid_n % 2 != 0) bad("--grid-N must be even and at least 16");
  if (mode != "grid" && mode != "hermite") bad("--mode must be grid or hermite");
  if (hermite_count < 1) bad("--hermite-count must be positive");
  if (!(inversion_tol > 0.0) || !(estimate_slack > 0.0) || !(zero_tol > 0.0)) bad("tolerances must be positive");
  if (!(tau >= 0.0)) bad("--tau must be non-negative");
  if (m_max < 1) bad("--mmax must be positive");
  if (!(dt > 0.0)) bad("--dt must be positive");
  for (double T : times)
    if (!(T > 0.0)) bad("--T values must be positive");
}

std::string RunConfig::to_json() const {
  const nlohmann::ordered_json j = {{"subcommand", subcommand},
                  {"algebra", algebra.string()},
                  {"out_dir", out_dir.string()},
                  {"json", json},
                  {"precision", precision},
                  {"seed", seed},
                  {"lambda", lambda},
                  {"x", x},
                  {"f", f},
                  {"alpha", alpha},
                  {"beta", beta},
                  {"grid_n", grid_n},
                  {"grid_l", grid_l},
                  {"mode", mode},
                  {"hermite_count", hermite_count},
                  {"inversion_tol", inversion_tol},
                  {"estimate_slack", estimate_slack},
                  {"zero_tol", zero_tol},
                  {"omega", omega},
                  {"tau", tau},
                  {"m_max", m_max},
                  {"x0", x0},
                  {"obs", obs},
                  {"times", times},
                  {"dt", dt}};
  return j.dump(2);
}

RunConfig RunConfig::from_json(std::string_view text) {
  RunConfig c;
  try {
    const auto j = nlohmann::ordered_json::parse(text);
    auto get = [&j](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    std::string algebra = c.algebra.string(), out_dir = c.out_dir.string();
    get("subcommand", c.subcommand);
    get("algebra", algebra);
    get("out_dir", out_dir);
    get("json", c.json);
    get("precision", c.precision);
    get("seed", c.seed);
    get("lambda", c.lambda);
    get("x", c.x);
    get("f", c.f);
    get("alpha", c.alpha);
    get("beta", c.beta);
    get("grid_n", c.grid_n);
    get("grid_l", c.grid_l);
    get("mode", c.mode);
    get("hermite_count", c.hermite_count);
    get("inversion_tol", c.inversion_tol);
    get("estimate_slack", c.estimate_slack);
    get("zero_tol", c.zero_tol);
    get("omega", c.omega);
    get("tau", c.tau);
    get("m_max", c.m_max);
    get("x0", c.x0);
    get("obs", c.obs);
    get("times", c.times);
    get("dt", c.dt);
    c.algebra = algebra;
    c.out_dir = out_dir;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad config: ") + e.what());
  }
  return c;
}

// ---------------------------------------------------------------------------

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Formatter fmt(config.precision);
  try {
    config.validate();
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec || !std::filesystem::is_directory(config.out_dir))
      throw UsageError("cannot create output directory " + config.out_dir.string());

    Outcome o;
    if (config.subcommand == "analyze") o.report = cmd_analyze(config);
    else if (config.subcommand == "orbit") o.report = cmd_orbit(config);
    else if (config.subcommand == "adapt") o.report = cmd_adapt(config);
    else if (config.subcommand == "solve") o = cmd_solve(config, fmt);
    else if (config.subcommand == "diophantine") o = cmd_diophantine(config, fmt);
    else o = cmd_simulate(config, fmt);

    if (config.json) {
      out << o.report.dump(2) << "\n";
    } else {
      std::string text;
      fmt.render(o.report, 0, text);
      out << text;
    }
    return o.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::estimate_violated) return exit_estimate;
    if (e.kind() == ErrorKind::parse || e.kind() == ErrorKind::invalid_argument) return exit_usage;
    return exit_validation;
  }
}

}  // namespace nilcoh::cli
