#include "bdop/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include "bdop/kernel_dist.hpp"
#include "bdop/limits.hpp"
#include "bdop/operators.hpp"
#include "bdop/rng.hpp"
#include "bdop/specfun.hpp"
#include "bdop/stats.hpp"

namespace bdop {

namespace {

constexpr double kTrendFloor = 1e-10;  // distances below this count as converged

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "invalid number for " + what + ": '" + tok + "'");
  }
}

long parse_long(const std::string& tok, int line, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "invalid integer for " + what + ": '" + tok + "'");
  }
}

// Trend checks used by the pass/fail summaries. Values already at machine
// noise (below the floor) cannot meaningfully order, so they pass.
bool nonincreasing(const std::vector<double>& v, double slack) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > kTrendFloor && v[i] > v[i - 1] * (1.0 + slack)) return false;
  }
  return true;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > kTrendFloor && !(v[i] < v[i - 1])) return false;
  }
  return true;
}

QuadratureRule default_rule() {
  QuadratureRule q;
  q.kind = QuadratureRule::Kind::adaptive;
  q.panels = 4;
  q.nodes_per_panel = 16;
  q.abs_tol = 1e-10;
  return q;
}

// Computes rows [0, count) with fn, in index order, optionally in parallel.
template <typename Fn>
std::vector<std::vector<double>> compute_rows(std::size_t count, Fn&& fn) {
  const int threads = thread_count_from_env();
  std::vector<std::vector<double>> rows(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
    return rows;
  }
  std::vector<std::future<std::vector<double>>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    futures.push_back(std::async(std::launch::async, [&fn, i] { return fn(i); }));
  }
  for (std::size_t i = 0; i < count; ++i) rows[i] = futures[i].get();
  return rows;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t state = seed;
  (void)splitmix64(state);
  state ^= n * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_n_values(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty())
    throw ConfigError(0, experiment_name(cfg.experiment) + " requires n_values");
}

const PiecewiseFunction& require_f(const ExperimentConfig& cfg) {
  if (!cfg.f) throw ConfigError(0, experiment_name(cfg.experiment) + " requires f");
  return *cfg.f;
}

}  // namespace

std::string experiment_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kernel_normality: return "kernel-normality";
    case ExperimentKind::bv_limit: return "bv-limit";
    case ExperimentKind::lupas_limit: return "lupas-limit";
    case ExperimentKind::beta_pdf: return "beta-pdf";
    case ExperimentKind::nu_table: return "nu-table";
  }
  return "unknown";
}

std::optional<ExperimentKind> experiment_from_name(const std::string& name) {
  if (name == "kernel-normality") return ExperimentKind::kernel_normality;
  if (name == "bv-limit") return ExperimentKind::bv_limit;
  if (name == "lupas-limit") return ExperimentKind::lupas_limit;
  if (name == "beta-pdf") return ExperimentKind::beta_pdf;
  if (name == "nu-table") return ExperimentKind::nu_table;
  return std::nullopt;
}

std::vector<double> make_grid(const GridSpec& g) {
  if (g.points < 2) throw ConfigError(0, "grid needs at least 2 points");
  if (!(g.hi > g.lo)) throw ConfigError(0, "grid needs hi > lo");
  std::vector<double> grid(static_cast<std::size_t>(g.points));
  const double h = (g.hi - g.lo) / (g.points - 1);
  for (int i = 0; i < g.points; ++i) grid[static_cast<std::size_t>(i)] = g.lo + i * h;
  return grid;
}

ConfigError::ConfigError(int line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
      line_(line) {}

PiecewiseFunction parse_function_spec(const std::string& spec, int line) {
  struct RawPiece {
    double lo, hi;
    std::vector<double> coeffs;
  };
  std::vector<RawPiece> raw;
  std::vector<std::pair<double, double>> at_values;

  std::stringstream ss(spec);
  std::string clause;
  while (std::getline(ss, clause, ';')) {
    clause = trim(clause);
    if (clause.empty()) continue;
    const auto open = clause.find('(');
    const auto close = clause.find(')');
    const auto colon = clause.find(':', close == std::string::npos ? 0 : close);
    if (open == std::string::npos || close == std::string::npos ||
        colon == std::string::npos || close < open) {
      throw ConfigError(line, "malformed function clause: '" + clause + "'");
    }
    const std::string head = trim(clause.substr(0, open));
    const std::string args = clause.substr(open + 1, close - open - 1);
    const std::string body = trim(clause.substr(colon + 1));
    std::vector<std::string> arg_toks;
    {
      std::stringstream as(args);
      std::string a;
      while (std::getline(as, a, ',')) arg_toks.push_back(trim(a));
    }
    if (head == "piece") {
      if (arg_toks.size() != 2)
        throw ConfigError(line, "piece(lo, hi) needs exactly two bounds");
      RawPiece p;
      p.lo = parse_double(arg_toks[0], line, "piece bound");
      p.hi = parse_double(arg_toks[1], line, "piece bound");
      for (const std::string& tok : split_ws(body))
        p.coeffs.push_back(parse_double(tok, line, "coefficient"));
      if (p.coeffs.empty())
        throw ConfigError(line, "piece needs at least one coefficient");
      raw.push_back(std::move(p));
    } else if (head == "at") {
      if (arg_toks.size() != 1) throw ConfigError(line, "at(x) needs exactly one point");
      at_values.emplace_back(parse_double(arg_toks[0], line, "breakpoint"),
                             parse_double(body, line, "point value"));
    } else {
      throw ConfigError(line, "unknown function clause '" + head + "'");
    }
  }
  if (raw.empty()) throw ConfigError(line, "function spec has no pieces");
  std::sort(raw.begin(), raw.end(),
            [](const RawPiece& a, const RawPiece& b) { return a.lo < b.lo; });
  if (raw.front().lo != 0.0 || raw.back().hi != 1.0)
    throw ConfigError(line, "pieces must cover [0, 1]");
  std::vector<double> breakpoints;
  std::vector<PieceExpr> pieces;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0) {
      if (raw[i].lo != raw[i - 1].hi)
        throw ConfigError(line, "pieces must tile [0, 1] without gaps or overlaps");
      breakpoints.push_back(raw[i].lo);
    }
    pieces.push_back(PolyPiece{raw[i].coeffs});
  }
  try {
    PiecewiseFunction f(std::move(breakpoints), std::move(pieces));
    for (const auto& [bp, v] : at_values) f.set_value_at(bp, v);
    return f;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line, e.what());
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  bool saw_experiment = false;
  std::string raw_line;
  int line_no = 0;
  int n_values_line = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string s = raw_line;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line_no, "expected 'key = value', got '" + s + "'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (value.empty()) throw ConfigError(line_no, "empty value for key '" + key + "'");

    if (key == "experiment") {
      const auto kind = experiment_from_name(value);
      if (!kind) throw ConfigError(line_no, "unknown experiment '" + value + "'");
      cfg.experiment = *kind;
      saw_experiment = true;
    } else if (key == "x") {
      cfg.x = parse_double(value, line_no, "x");
      if (!(cfg.x > 0.0 && cfg.x < 1.0))
        throw ConfigError(line_no, "x must lie in (0, 1)");
    } else if (key == "n_values") {
      n_values_line = line_no;
      cfg.n_values.clear();
      for (const std::string& tok : split_ws(value)) {
        const long n = parse_long(tok, line_no, "n_values");
        if (n < 1) throw ConfigError(line_no, "n_values must be positive");
        cfg.n_values.push_back(static_cast<int>(n));
      }
    } else if (key == "grid") {
      const auto toks = split_ws(value);
      if (toks.size() != 3)
        throw ConfigError(line_no, "grid needs 'lo hi points'");
      cfg.grid.lo = parse_double(toks[0], line_no, "grid lo");
      cfg.grid.hi = parse_double(toks[1], line_no, "grid hi");
      cfg.grid.points = static_cast<int>(parse_long(toks[2], line_no, "grid points"));
      if (cfg.grid.points < 2) throw ConfigError(line_no, "grid points must be >= 2");
      if (!(cfg.grid.hi > cfg.grid.lo))
        throw ConfigError(line_no, "grid needs hi > lo");
    } else if (key == "seed") {
      try {
        cfg.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw ConfigError(line_no, "invalid seed '" + value + "'");
      }
    } else if (key == "output" || key == "output_path") {
      cfg.output_path = value;
    } else if (key == "mc_samples") {
      cfg.mc_samples = parse_long(value, line_no, "mc_samples");
      if (cfg.mc_samples < 0) throw ConfigError(line_no, "mc_samples must be >= 0");
    } else if (key == "tolerance") {
      cfg.tolerance = parse_double(value, line_no, "tolerance");
      if (!(cfg.tolerance > 0.0)) throw ConfigError(line_no, "tolerance must be > 0");
    } else if (key == "r_values") {
      cfg.r_values.clear();
      for (const std::string& tok : split_ws(value)) {
        const double r = parse_double(tok, line_no, "r_values");
        if (!(r >= 0.0)) throw ConfigError(line_no, "r_values must be >= 0");
        cfg.r_values.push_back(r);
      }
    } else if (key == "f") {
      cfg.f = parse_function_spec(value, line_no);
    } else if (key == "w") {
      cfg.w = parse_function_spec(value, line_no);
    } else {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!saw_experiment) throw ConfigError(0, "config must set 'experiment'");
  if (!std::is_sorted(cfg.n_values.begin(), cfg.n_values.end()))
    throw ConfigError(n_values_line, "n_values must be sorted ascending");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  return parse_config(in);
}

bool ExperimentReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

ExperimentReport run_kernel_normality(const ExperimentConfig& cfg) {
  Stopwatch timer;
  require_n_values(cfg);
  const double target_var = 2.0 * cfg.x * (1.0 - cfg.x);
  const std::vector<double> grid = make_grid(cfg.grid);
  const CdfFunction target =
      CdfFunction::exact([target_var](double s) { return normal_cdf(s, 0.0, target_var); });
  const bool with_mc = cfg.mc_samples > 0;

  ExperimentReport report;
  report.experiment = experiment_name(cfg.experiment);
  report.columns = with_mc ? std::vector<std::string>{"n", "ks_exact", "ks_mc", "dkw_bound"}
                           : std::vector<std::string>{"n", "ks_exact"};
  report.rows = compute_rows(cfg.n_values.size(), [&](std::size_t i) {
    const int n = cfg.n_values[i];
    const KernelDistribution d(n, cfg.x);
    const CdfFunction exact =
        CdfFunction::exact([&d](double s) { return standardized_cdf(d, s); });
    const double ks_exact = ks_distance(exact, target, grid);
    if (!with_mc) return std::vector<double>{static_cast<double>(n), ks_exact};
    const Seed seed{stream_seed(cfg.seed, static_cast<std::uint64_t>(n))};
    std::vector<double> draws = sample(d, seed, static_cast<int>(cfg.mc_samples));
    const double root_n = std::sqrt(static_cast<double>(n));
    for (double& v : draws) v = root_n * (v - cfg.x);
    const double ks_mc = ks_distance(ecdf(std::move(draws)), target, grid);
    const double dkw =
        std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(cfg.mc_samples)));
    return std::vector<double>{static_cast<double>(n), ks_exact, ks_mc, dkw};
  });

  std::vector<double> ks;
  for (const auto& row : report.rows) ks.push_back(row[1]);
  report.checks.push_back({"ks_exact_nonincreasing", nonincreasing(ks, 0.0)});
  report.checks.push_back({"ks_exact_final_below_0.02", ks.back() < 0.02});
  report.wall_seconds = timer.seconds();
  return report;
}

ExperimentReport run_bv_limit(const ExperimentConfig& cfg) {
  Stopwatch timer;
  require_n_values(cfg);
  const PiecewiseFunction& f = require_f(cfg);
  const PiecewiseFunction w = cfg.w.value_or(PiecewiseFunction::constant(1.0));
  const double predicted = predicted_limit(f, w, cfg.x);
  const QuadratureRule q = default_rule();

  ExperimentReport report;
  report.experiment = experiment_name(cfg.experiment);
  report.columns = {"n", "M_nw_value", "predicted_limit", "abs_error"};
  report.rows = compute_rows(cfg.n_values.size(), [&](std::size_t i) {
    const int n = cfg.n_values[i];
    const double value = weighted_durrmeyer_op(f, w, OperatorPoint(n, cfg.x), q);
    return std::vector<double>{static_cast<double>(n), value, predicted,
                               std::fabs(value - predicted)};
  });

  std::vector<double> errs;
  for (const auto& row : report.rows) errs.push_back(row[3]);
  report.checks.push_back({"abs_error_decreasing", nonincreasing(errs, 0.0)});
  report.checks.push_back({"abs_error_final_below_tolerance", errs.back() < cfg.tolerance});
  report.wall_seconds = timer.seconds();
  return report;
}

ExperimentReport run_lupas_limit(const ExperimentConfig& cfg) {
  Stopwatch timer;
  require_n_values(cfg);
  const PiecewiseFunction& f = require_f(cfg);
  const std::vector<double> alphas = make_grid(cfg.grid);
  const QuadratureRule q = default_rule();

  ExperimentReport report;
  report.experiment = experiment_name(cfg.experiment);
  report.columns = {"n", "sup_error"};
  report.rows = compute_rows(cfg.n_values.size(), [&](std::size_t i) {
    const int n = cfg.n_values[i];
    const double root_n = std::sqrt(static_cast<double>(n));
    double sup = 0.0;
    for (double alpha : alphas) {
      // k_n(alpha) clamped to [0, n]; out-of-range summands vanish in the
      // paper's convention, clamping keeps y = k/n inside [0, 1].
      const double k = std::clamp(cfg.x * n + alpha * root_n, 0.0, static_cast<double>(n));
      const double value = lupas_op(f, n, k / n, q);
      const double limit = lupas_limit_function(f, cfg.x, alpha);
      sup = std::max(sup, std::fabs(value - limit));
    }
    return std::vector<double>{static_cast<double>(n), sup};
  });

  std::vector<double> errs;
  for (const auto& row : report.rows) errs.push_back(row[1]);
  report.checks.push_back({"sup_error_decreasing", nonincreasing(errs, 0.0)});
  report.wall_seconds = timer.seconds();
  return report;
}

ExperimentReport run_beta_pdf(const ExperimentConfig& cfg) {
  Stopwatch timer;
  require_n_values(cfg);  // scales
  std::vector<double> scales(cfg.n_values.begin(), cfg.n_values.end());
  const std::vector<double> grid = make_grid(cfg.grid);
  const std::vector<ScaleError> table = appendix_convergence_check(cfg.x, scales, grid);

  ExperimentReport report;
  report.experiment = experiment_name(cfg.experiment);
  report.columns = {"scale", "sup_error"};
  std::vector<double> errs;
  for (const ScaleError& e : table) {
    report.rows.push_back({e.scale, e.sup_error});
    errs.push_back(e.sup_error);
  }
  report.checks.push_back({"sup_error_strictly_decreasing", strictly_decreasing(errs)});
  report.wall_seconds = timer.seconds();
  return report;
}

ExperimentReport run_nu_table(const ExperimentConfig& cfg) {
  Stopwatch timer;
  std::vector<double> rs = cfg.r_values;
  if (rs.empty()) rs = {0.1, 0.5, 0.999, 1.0, 1.001, 2.0, 10.0, 100.0};

  ExperimentReport report;
  report.experiment = experiment_name(cfg.experiment);
  report.columns = {"r", "nu_closed", "nu_integral", "nu_gaussian", "max_discrepancy"};
  bool agree = true;
  bool x_independent = true;
  for (double r : rs) {
    const double closed = nu_closed_form(r).nu;
    const double integral = nu_from_integral(1.0, r).nu;
    const double gauss_a = nu_from_gaussian(1.0, r, cfg.x).nu;
    const double gauss_b = nu_from_gaussian(1.0, r, 1.0 - cfg.x).nu;
    const double disc = std::max({std::fabs(closed - integral),
                                  std::fabs(integral - gauss_a),
                                  std::fabs(closed - gauss_a)});
    agree = agree && disc <= 1e-8;
    x_independent = x_independent && std::fabs(gauss_a - gauss_b) <= 1e-8;
    report.rows.push_back({r, closed, integral, gauss_a, disc});
  }
  report.checks.push_back({"three_paths_agree_1e-8", agree});
  report.checks.push_back({"gaussian_path_x_independent_1e-8", x_independent});
  report.wall_seconds = timer.seconds();
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::kernel_normality: return run_kernel_normality(cfg);
    case ExperimentKind::bv_limit: return run_bv_limit(cfg);
    case ExperimentKind::lupas_limit: return run_lupas_limit(cfg);
    case ExperimentKind::beta_pdf: return run_beta_pdf(cfg);
    case ExperimentKind::nu_table: return run_nu_table(cfg);
  }
  throw std::logic_error("run_experiment: unreachable");
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << report.columns[i];
  }
  out << '\n';
  char buf[64];
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      out << buf;
    }
    out << '\n';
  }
}

std::string summary_line(const ExperimentReport& report) {
  std::ostringstream os;
  os << report.experiment << ":";
  for (const auto& check : report.checks) {
    os << ' ' << check.name << '=' << (check.passed ? "PASS" : "FAIL");
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", report.wall_seconds);
  os << " wall=" << buf << "s";
  return os.str();
}

int thread_count_from_env() {
  const char* env = std::getenv("BDOP_THREADS");
  if (env == nullptr) return 1;
  const int v = std::atoi(env);
  return v > 1 ? v : 1;
}

}  // namespace bdop
