#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>

#include "report.hpp"
#include "shapebasis/basis.hpp"
#include "shapebasis/blocks.hpp"
#include "shapebasis/errors.hpp"
#include "shapebasis/maximal.hpp"
#include "shapebasis/orlicz.hpp"
#include "shapebasis/shape_law.hpp"

namespace shapebasis::cli {

namespace {

// Thrown for bad flags, config files or input tables; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string config;
  std::string out_path;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 100000;
  unsigned workers = 1;
};

struct SolverArgs {
  double t = 0.25;
  double rho0 = 9.0;
  int K = 20;
};

struct Lemma1Args {
  double t = 0.25;
  double rho0 = 9.0;
  int trials = 1000;
};

struct BlocksArgs {
  double alpha = 1.0;
  std::string n_rule = "k^2";
  int kmax = 8;
  bool geometry_only = false;
};

struct WitnessArgs {
  std::string input;
  SolverArgs solver;
};

struct Outcome {
  Table table;
  bool ok = true;
};

struct Context {
  std::uint64_t seed = 0;
  SamplingOptions sampling;
  std::ostream& err;
};

// Uniform stream drawn from the counter-based generator.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed) {}
  double next() { return counter_uniform(seed_, counter_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// `key = value` lines become `--key=value` tokens.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '\'' || value.front() == '"') &&
        value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty() || key == "config") {
      throw UsageError(path + ":" + std::to_string(line_no) + ": bad key");
    }
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  return path;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SHAPEBASIS_SEED")) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || env[0] == '-') {
      throw UsageError(std::string("SHAPEBASIS_SEED is not an unsigned integer: ") + env);
    }
    return v;
  }
  return 0;
}

// geometric_angles restricted to (0, pi/6]: larger angles are clamped.
std::vector<double> table_angles(int K, std::ostream& err) {
  if (K < 0) throw UsageError("--K must be >= 0");
  std::vector<double> angles = geometric_angles(K);
  for (double& a : angles) {
    if (a > kPi / 6) {
      err << "warning: angle " << format_real(a) << " clamped to pi/6\n";
      a = kPi / 6;
    }
  }
  return angles;
}

struct SolverRow {
  double theta;
  double sigma;
};

std::vector<SolverRow> solver_rows(const SolverArgs& a, std::ostream& err) {
  const ShapeLawParams params(a.t, a.rho0);
  std::vector<SolverRow> rows;
  for (double theta : table_angles(a.K, err)) rows.push_back({theta, solve_sigma(params, theta)});
  return rows;
}

Outcome shape_table(const SolverArgs& a, const Context& ctx) {
  const auto rows = solver_rows(a, ctx.err);
  Outcome o;
  o.table.columns = {"theta", "sigma", "sigma_star", "residual", "lower_bound", "theta_times_sigma"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [theta, sigma] = rows[i];
    const double residual = std::abs(rho(a.t, theta, sigma) - a.rho0);
    o.ok = o.ok && residual <= 1e-10 * a.rho0;
    // Angles come in decreasing order, so shapes must increase.
    if (i > 0) o.ok = o.ok && sigma > rows[i - 1].sigma;
    o.table.rows.push_back({theta, sigma, sigma_star(a.t, theta), residual,
                            sigma_lower_bound(a.t, a.rho0, theta), theta * sigma});
  }
  return o;
}

// Random cells of a 4x4 grid over the circumscribed box, each carrying a
// random coefficient with probability 0.6.
SimpleFunction random_grid_function(const Rectangle& r, Stream& s) {
  constexpr int kGrid = 4;
  const Rectangle box = hat_rect(r);
  const double w = 1.25 * box.width() / kGrid;
  const double h = 1.25 * box.height() / kGrid;
  const Point2 origin = box.center() - 0.5 * Point2{kGrid * w, kGrid * h};
  std::vector<SimpleTerm> terms;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double keep = s.next();
      const double coef = 10.0 * s.next();
      if (keep >= 0.6) continue;
      const Point2 lo = origin + Point2{i * w, j * h};
      terms.push_back(
          {coef, ConvexPolygon({lo, lo + Point2{w, 0}, lo + Point2{w, h}, lo + Point2{0, h}})});
    }
  }
  return SimpleFunction(std::move(terms));
}

Outcome lemma1(const Lemma1Args& a, const Context& ctx) {
  if (a.trials < 1) throw UsageError("--trials must be >= 1");
  const ShapeLawParams params(a.t, a.rho0);
  Outcome o;
  o.table.columns = {"trial", "theta", "sigma", "lhs_ok", "rhs_ok"};
  for (int trial = 0; trial < a.trials; ++trial) {
    Stream s(derive_seed(ctx.seed, static_cast<std::uint64_t>(trial)));
    const double theta = 1e-3 + (kPi / 6 - 1e-3) * s.next();
    const double sigma = solve_sigma(params, theta);
    const double angle = s.next() < 0.5 ? theta : kPi - theta;
    const double shortside = std::exp(-3.0 + 6.0 * s.next());
    const Point2 center{-5.0 + 10.0 * s.next(), -5.0 + 10.0 * s.next()};
    const Rectangle r(center, angle, sigma * shortside, shortside);
    const SimpleFunction f = random_grid_function(r, s);
    const SandwichResult res = sandwich_check(r, a.t, a.rho0, f);
    if (!res.lhs_ok || !res.rhs_ok) {
      o.ok = false;
      o.table.rows.push_back({std::int64_t{trial}, angle, sigma, res.lhs_ok, res.rhs_ok});
    }
  }
  ctx.err << "lemma1: " << a.trials << " trials, " << o.table.rows.size() << " failures\n";
  return o;
}

std::function<int(int)> parse_n_rule(const std::string& rule) {
  static const std::regex constant(R"(\s*(\d+)\s*)");
  static const std::regex power(R"(\s*k\s*\^\s*(\d+(\.\d+)?)\s*)");
  std::smatch m;
  if (std::regex_match(rule, m, constant)) {
    const int c = std::stoi(m[1]);
    if (c < 1) throw UsageError("--N constant must be >= 1");
    return [c](int) { return c; };
  }
  if (std::regex_match(rule, m, power)) {
    const double p = std::stod(m[1]);
    if (!(p > 0)) throw UsageError("--N power must be > 0");
    return [p](int k) { return k == 0 ? 1 : static_cast<int>(std::ceil(std::pow(k, p))); };
  }
  throw UsageError("--N must be '<integer>' or 'k^<p>', got '" + rule + "'");
}

Outcome blocks(const BlocksArgs& a, const Context& ctx) {
  if (a.kmax < 0) throw UsageError("--kmax must be >= 0");
  if (!(a.alpha > 0)) throw UsageError("--alpha must be > 0");
  const auto rule = parse_n_rule(a.n_rule);
  std::vector<int> counts;
  for (int k = 0; k <= a.kmax; ++k) counts.push_back(rule(k));
  const BlockConfig cfg = corollary_config(counts);
  const YoungFunction phi = llogl(a.alpha);

  Outcome o;
  o.table.columns = {"k", "N_k", "sigma_k", "angle_ok", "union_ratio",
                     "half_ok", "quarter_ok", "necessity_ratio"};
  for (std::size_t k = 0; k < cfg.block_count(); ++k) {
    const BlockFamily fam = build_family(cfg, k);
    if (!fam.angle_condition_ok) ctx.err << "warning: block " << k << " violates the angle condition\n";
    const bool contained = containment_check(fam);
    o.ok = o.ok && contained;
    Cell union_ratio, half_ok, quarter_ok;
    if (!a.geometry_only) {
      SamplingOptions opt = ctx.sampling;
      opt.seed = derive_seed(ctx.seed, 2 * k);
      const HalfAreaResult half = half_area_check(fam, opt);
      union_ratio = half.ratio;
      half_ok = half.passed;
      bool quarter = false;
      if (contained) {
        opt.seed = derive_seed(ctx.seed, 2 * k + 1);
        quarter = quarter_bound_check(fam, opt);
      }
      quarter_ok = quarter;
      o.ok = o.ok && quarter;
    }
    o.table.rows.push_back({static_cast<std::int64_t>(k), std::int64_t{cfg.count(k)},
                            cfg.sigma(k), fam.angle_condition_ok, union_ratio, half_ok,
                            quarter_ok, necessity_ratio(cfg, phi, k)});
  }
  return o;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_real(const std::string& text, const std::string& where) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(where + ": not a number: '" + text + "'");
  return v;
}

std::vector<SolverRow> read_shape_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input " + path);
  std::string line;
  if (!std::getline(in, line)) throw UsageError(path + ": empty input");
  const auto header = split_csv(trim(line));
  const auto theta_col = std::find(header.begin(), header.end(), "theta") - header.begin();
  const auto sigma_col = std::find(header.begin(), header.end(), "sigma") - header.begin();
  const auto width = static_cast<std::ptrdiff_t>(header.size());
  if (theta_col == width || sigma_col == width) {
    throw UsageError(path + ": header needs theta and sigma columns");
  }
  std::vector<SolverRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    const std::string where = path + ":" + std::to_string(line_no);
    if (static_cast<std::ptrdiff_t>(f.size()) != width) throw UsageError(where + ": wrong field count");
    rows.push_back({parse_real(f[theta_col], where), parse_real(f[sigma_col], where)});
  }
  return rows;
}

Outcome witness(const WitnessArgs& a, const Context& ctx) {
  std::vector<SolverRow> rows =
      a.input.empty() ? solver_rows(a.solver, ctx.err) : read_shape_csv(a.input);
  if (rows.empty()) throw UsageError("witness needs at least one (theta, sigma) row");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SolverRow& x, const SolverRow& y) { return x.sigma < y.sigma; });
  Outcome o;
  o.table.columns = {"theta", "sigma", "far_distance"};
  double prev = -1.0;
  for (const auto& [theta, sigma] : rows) {
    const Witness w = moriyon_witness(theta, sigma);
    o.ok = o.ok && w.far_distance > prev && w.far_distance >= 0.5 * std::sqrt(sigma);
    prev = w.far_distance;
    o.table.rows.push_back({theta, sigma, w.far_distance});
  }
  return o;
}

void add_common(CLI::App* sub, CommonArgs& c) {
  sub->add_option("--config", c.config, "key = value file; flags override it");
  sub->add_option("--out", c.out_path, "Write the report here instead of standard output");
  sub->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", c.seed, "Random seed (default: $SHAPEBASIS_SEED, else 0)");
  sub->add_option("--samples", c.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  sub->add_option("--workers", c.workers, "Worker threads; 0 = all cores");
}

void add_solver(CLI::App* sub, SolverArgs& s) {
  sub->add_option("--t", s.t, "Anchor fraction t in (0, 1/2)");
  sub->add_option("--rho0", s.rho0, "Target area ratio");
  sub->add_option("--K", s.K, "Angles 2^-k for k = 0..K");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app("Numerical experiments on rectangle bases with direction-dependent shapes",
               "shapebasis");
  app.require_subcommand(1);
  app.set_version_flag("--version", SHAPEBASIS_VERSION);

  CommonArgs common;
  SolverArgs table_args;
  Lemma1Args lemma_args;
  BlocksArgs block_args;
  WitnessArgs witness_args;

  auto* table_cmd = app.add_subcommand("shape-table", "Tabulate the solved shape function");
  add_solver(table_cmd, table_args);

  auto* lemma_cmd = app.add_subcommand("lemma1", "Randomized per-rectangle sandwich check");
  lemma_cmd->add_option("--t", lemma_args.t, "Anchor fraction t in (0, 1/2)");
  lemma_cmd->add_option("--rho0", lemma_args.rho0, "Target area ratio");
  lemma_cmd->add_option("--trials", lemma_args.trials, "Random rectangle/function pairs");

  auto* blocks_cmd = app.add_subcommand("blocks", "Counterexample block families");
  blocks_cmd->add_option("--alpha", block_args.alpha, "Young function exponent");
  blocks_cmd->add_option("--N", block_args.n_rule, "Block counts: '<int>' or 'k^<p>'");
  blocks_cmd->add_option("--kmax", block_args.kmax, "Last block index");
  blocks_cmd->add_flag("--geometry-only", block_args.geometry_only, "Skip Monte Carlo checks");

  auto* witness_cmd = app.add_subcommand("witness", "Far-corner distances of unit-area rectangles");
  witness_cmd->add_option("--input", witness_args.input, "CSV with theta and sigma columns");
  add_solver(witness_cmd, witness_args.solver);

  for (CLI::App* sub : {table_cmd, lemma_cmd, blocks_cmd, witness_cmd}) {
    add_common(sub, common);
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    for (CLI::Option* opt : sub->get_options()) {
      opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
  }

  try {
    std::vector<std::string> args = raw_args;
    if (const auto path = find_config_path(args)) {
      // Config entries go right after the subcommand so later flags win.
      const auto injected = read_config(*path);
      const auto at = (!args.empty() && args[0].rfind("-", 0) != 0) ? args.begin() + 1 : args.begin();
      args.insert(at, injected.begin(), injected.end());
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SHAPEBASIS_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Context ctx{resolve_seed(common.seed),
                      {common.samples, 0, common.workers},
                      err};
    Outcome outcome;
    std::string name;
    if (table_cmd->parsed()) {
      name = "shape-table";
      outcome = shape_table(table_args, ctx);
    } else if (lemma_cmd->parsed()) {
      name = "lemma1";
      outcome = lemma1(lemma_args, ctx);
    } else if (blocks_cmd->parsed()) {
      name = "blocks";
      outcome = blocks(block_args, ctx);
    } else {
      name = "witness";
      outcome = witness(witness_args, ctx);
    }

    std::ofstream file;
    if (!common.out_path.empty()) {
      file.open(common.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("cannot write " + common.out_path);
    }
    std::ostream& sink = common.out_path.empty() ? out : file;
    if (common.format == "json") {
      write_json(sink, outcome.table, {name, ctx.seed, common.samples});
    } else {
      write_csv(sink, outcome.table);
    }
    sink.flush();
    if (!sink) throw UsageError("failed writing the report");
    if (!outcome.ok) err << name << ": check failed\n";
    return outcome.ok ? kExitOk : kExitCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace shapebasis::cli
