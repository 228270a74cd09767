#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rmeasure/auxfun.hpp"
#include "rmeasure/discovery.hpp"
#include "rmeasure/roots.hpp"
#include "rmeasure/sector.hpp"
#include "rmeasure/siplp.hpp"
#include "rmeasure/smythseq.hpp"
#include "rmeasure/tables.hpp"

using namespace rmeasure;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
  unsigned precision_bits = 128;
  std::optional<double> domain_cap;
  double gap_tol = 1e-6;
  unsigned long seed = 0;
  std::string output = "text";
  int digits = 6;

  bool tsv() const { return output == "tsv"; }
  MinOptions min() const {
    MinOptions m;
    m.domain_cap = domain_cap;
    return m;
  }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

std::string num(const Real& v, int digits) { return num(v.convert_to<double>(), digits); }

class Report {
 public:
  explicit Report(const RunConfig& cfg) : tsv_(cfg.tsv()) {
    if (tsv_) std::cout << "field\tvalue\n";
  }
  void row(const std::string& k, const std::string& v) {
    if (tsv_)
      std::cout << k << '\t' << v << '\n';
    else
      std::cout << std::left << std::setw(18) << k << v << '\n';
  }

 private:
  bool tsv_;
};

std::string slurp_if_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

WeightKind weight_for(const AuxFunction& f, const std::optional<double>& theta) {
  if (!theta) return f.weight;
  try {
    return WeightKind::ray(*theta);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// ---------------------------------------------------------------- measure

int cmd_measure(const RunConfig& cfg, const std::string& input) {
  IntPolynomial p = parse_polynomial(slurp_if_file(input));
  if (p.degree() < 1) throw InputError("polynomial must have degree at least 1");
  MeasureReport m = measure(p);
  const int d = cfg.digits;
  Report r(cfg);
  r.row("polynomial", to_string(p));
  r.row("degree", std::to_string(m.degree));
  r.row("trace", num(m.trace, d));
  r.row("abs_trace", num(m.abs_trace, d));
  r.row("R", num(m.r_measure, d));
  r.row("r", num(m.abs_r, d));
  r.row("mahler", num(m.mahler, d));
  r.row("monic", m.monic ? "yes" : "no");
  r.row("totally_positive", m.totally_positive ? "yes" : "no");
  r.row("zero_root", m.has_zero_root ? "yes" : "no");
  r.row("half_angle", m.has_zero_root && m.degree == 1 ? "undefined" : num(m.sector_half_angle, d));
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, const std::string& path, const std::optional<double>& theta,
               const std::optional<double>& expect, int show_minima) {
  AuxFunction f = load_aux(path);
  f.weight = weight_for(f, theta);
  CertifiedBound b = certified_bound(f, cfg.min());
  const int d = cfg.digits;
  Report r(cfg);
  r.row("weight", f.weight.describe());
  r.row("terms", std::to_string(f.terms.size()));
  r.row("m", num(b.m, std::max(d, 10)));
  r.row("argmin", num(b.min.argmin, d));
  r.row("domain_cap", num(b.min.domain_cap, d));
  r.row("grid_rounds", std::to_string(b.min.grid_rounds));
  r.row("converged", b.min.converged ? "yes" : "no");
  r.row("local_minima", std::to_string(b.min.minima.size()));
  auto minima = b.min.minima;
  std::sort(minima.begin(), minima.end(), [](const LocalMin& a, const LocalMin& c) { return a.value < c.value; });
  for (int i = 0; i < show_minima && i < static_cast<int>(minima.size()); ++i)
    r.row("min[" + std::to_string(i) + "]", num(minima[static_cast<std::size_t>(i)].x, d) + " -> " +
                                                 num(minima[static_cast<std::size_t>(i)].value, std::max(d, 10)));
  for (const auto& q : b.exceptions) {
    MeasureReport mq = measure(q);
    double rq = mq.abs_r.convert_to<double>();
    r.row("exception", to_string(q) + "  r = " + num(rq, d) + (rq < b.m ? "" : "  (not below m)"));
  }
  if (expect) {
    bool pass = b.m >= *expect;
    r.row("expect", ">= " + num(*expect, d) + (pass ? "  pass" : "  FAIL"));
    if (!pass) return kVerifyFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- optimize

int cmd_optimize(const RunConfig& cfg, const std::string& path, const std::optional<double>& theta,
                 const std::optional<double>& expect, const std::string& save) {
  AuxFunction f = load_aux(path);
  WeightKind w = weight_for(f, theta);
  SIPOptions so;
  so.gap_tol = cfg.gap_tol;
  so.min = cfg.min();
  SIPResult res = semi_infinite_optimize(f.polynomials(), w, ControlSet::default_seed(50.0, cfg.seed), so);
  if (cfg.tsv()) {
    std::cout << res.trace.tsv();
  } else {
    std::cout << "weight " << w.describe() << ", " << f.terms.size() << " polynomials\n";
    std::cout << res.trace.tsv();
    std::cout << "status " << (res.trace.converged ? "converged" : res.trace.stalled ? "stalled" : "iteration cap")
              << ", final m' = " << num(res.m, std::max(cfg.digits, 10)) << '\n';
  }
  if (!save.empty()) {
    std::ofstream out(save);
    if (!out) throw InputError("cannot write " + save);
    out << format_aux(res.best, "re-optimized from " + path);
  } else if (!cfg.tsv()) {
    std::cout << format_aux(res.best);
  }
  if (expect && res.m < *expect) {
    std::cout << "expected m' >= " << num(*expect, cfg.digits) << ": FAIL\n";
    return kVerifyFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------- discover

int cmd_discover(const RunConfig& cfg, const std::optional<double>& theta, int steps, const std::vector<int>& ks,
                 const std::string& save) {
  WeightKind w = WeightKind::positive_real();
  if (theta) {
    try {
      w = WeightKind::ray(*theta);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (steps < 1) throw InputError("--steps must be at least 1");
  for (int k : ks)
    if (k < 1) throw InputError("candidate degrees must be at least 1");
  DiscoveryOptions opt;
  opt.sip.gap_tol = cfg.gap_tol;
  opt.sip.min = cfg.min();
  DiscoveryState s = run(w, steps, ks, opt);
  std::cout << s.audit();
  if (!save.empty()) {
    std::ofstream out(save);
    if (!out) throw InputError("cannot write " + save);
    out << format_aux(s.aux, "discovered, m = " + num(s.m_lower, 10));
  } else if (!cfg.tsv()) {
    std::cout << format_aux(s.aux);
  }
  return kOk;
}

// ---------------------------------------------------------------- sector

int verify_rows(const RunConfig& cfg, const std::vector<int>& rows) {
  int passed = 0;
  for (int i : rows) {
    IntervalReport rep = verify_interval(table1().at(static_cast<std::size_t>(i - 1)), cfg.min());
    std::cout << rep.text() << (rep.ok() ? "  PASS\n" : "  FAIL\n");
    passed += rep.ok() ? 1 : 0;
  }
  std::cout << passed << "/" << rows.size() << " rows pass\n";
  return passed == static_cast<int>(rows.size()) ? kOk : kVerifyFailed;
}

int cmd_sector(const RunConfig& cfg, const std::optional<double>& theta, const std::optional<int>& row) {
  if (row) {
    if (*row < 1 || *row > 9) throw InputError("--row must be 1..9");
    return verify_rows(cfg, {*row});
  }
  if (!theta) return verify_rows(cfg, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  if (!(*theta >= 0 && *theta < 90)) throw InputError("theta must lie in [0, 90)");
  const int d = cfg.digits;
  Envelope e = f_envelope_detail(*theta, cfg.min());
  Report r(cfg);
  r.row("theta", num(*theta, d));
  for (int i = 1; i <= 9; ++i) r.row("f_" + std::to_string(i), num(e.values[static_cast<std::size_t>(i - 1)], d));
  r.row("f_envelope", num(e.value, d) + " (f_" + std::to_string(e.argmax) + ")");
  auto g = g_theta(*theta, StaircasePool::table1_pool());
  r.row("g", g ? num(*g, d) : "none");
  auto c = c_of_theta(*theta);
  r.row("c", c ? num(*c, d) : "unknown");
  return kOk;
}

// ---------------------------------------------------------------- smyth

int cmd_smyth(const RunConfig& cfg, int n, bool distribution) {
  if (n < 0 || n > kSmythMaxLevel) throw InputError("--n must be 0..20");
  std::cout << "n\tdegree\ttrace\tr\tbound\tok\n";
  bool all_ok = true;
  for (int k = 0; k <= n; ++k) {
    SmythLevel lv = level(k, false);
    RBound rb = r_bound_check(lv);
    Real tr = 0;
    for (const auto& c : lv.conjugates) tr += c;
    std::cout << k << '\t' << lv.conjugates.size() << '\t' << num(tr, std::max(cfg.digits, 8)) << '\t'
              << num(rb.r, cfg.digits) << '\t' << num(rb.bound, cfg.digits) << '\t' << (rb.ok ? "ok" : "FAIL") << '\n';
    all_ok = all_ok && rb.ok;
  }
  if (distribution) {
    std::cout << "n\tabove_1\tbelow_1\tin_(c1,1)\tbelow_c1\tok\n";
    for (int k = 2; k <= n; ++k) {
      Distribution dc = distribution_check(k);
      std::cout << k << '\t' << dc.above_one << '\t' << dc.below_one << '\t' << dc.between_c1_and_one << '\t'
                << dc.below_c1 << '\t' << (dc.ok ? "ok" : "FAIL") << '\n';
      all_ok = all_ok && dc.ok;
    }
    std::cout << "n\tearlier\tstraddled\n";
    for (int k = 1; k <= n; ++k) {
      Interlacing il = interlacing(k);
      std::cout << k << '\t' << il.earlier << '\t' << il.straddled << '\n';
    }
  }
  return all_ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- tables

bool round_trips(const AuxFunction& f) {
  for (const auto& t : f.terms)
    if (!(parse_polynomial(to_string(t.q)) == t.q)) return false;
  return true;
}

int tables_theorem2(const RunConfig& cfg) {
  const AuxFunction& f = theorem2_function();
  bool ok = round_trips(f);
  std::cout << "round-trip of " << f.terms.size() << " polynomials: " << (ok ? "ok" : "FAIL") << '\n';
  MinResult gm = global_min(f, cfg.min());
  bool m_ok = gm.m >= kHalfLineBound;
  std::cout << "m = " << num(gm.m, 10) << " at x = " << num(gm.argmin, cfg.digits) << (m_ok ? "  ok" : "  FAIL") << '\n';
  ok = ok && m_ok;
  auto ex = theorem2_exceptions();
  auto vals = theorem2_exception_values();
  for (std::size_t i = 0; i < ex.size(); ++i) {
    double r = measure(ex[i]).abs_r.convert_to<double>();
    bool e_ok = std::fabs(r - vals[i]) <= kRowRTolerance && r < gm.m;
    std::cout << to_string(ex[i]) << "  r = " << num(r, 8) << " (quoted " << num(vals[i], 5) << ")"
              << (e_ok ? "  ok" : "  FAIL") << '\n';
    ok = ok && e_ok;
  }
  return ok ? kOk : kVerifyFailed;
}

int tables_sector_functions(const RunConfig& cfg) {
  bool ok = true;
  for (int i = 1; i <= 9; ++i) {
    const AuxFunction& f = sector_function(i);
    const SectorRow& row = table1()[static_cast<std::size_t>(i - 1)];
    bool rt = round_trips(f);
    double m = global_min(f, cfg.min()).m;
    bool m_ok = m >= row.c_value - kEnvelopeTolerance;
    std::cout << "f" << i << " (" << f.terms.size() << " terms, " << f.weight.describe() << "): m = " << num(m, 8)
              << " vs c = " << num(row.c_value, 5) << (m_ok ? "  ok" : "  FAIL") << (rt ? "" : "  round-trip FAIL")
              << '\n';
    ok = ok && m_ok && rt;
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_tables(const RunConfig& cfg, int which) {
  switch (which) {
    case 1: return verify_rows(cfg, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    case 2: return tables_theorem2(cfg);
    case 3: return tables_sector_functions(cfg);
    default: throw InputError("--which must be 1, 2 or 3");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for the absolute R-measure of algebraic integers via auxiliary functions"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  std::string dump_dir;
  app.add_option("--precision", cfg.precision_bits, "working precision in bits")->check(CLI::Range(64u, 65536u));
  app.add_option("--domain-cap", cfg.domain_cap, "right end A of the minimization domain")->check(CLI::PositiveNumber);
  app.add_option("--gap-tol", cfg.gap_tol, "SIP termination gap")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "control-grid jitter seed (0 = none)");
  app.add_option("--output", cfg.output, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--digits", cfg.digits, "significant digits in reports")->check(CLI::Range(1, 40));
  app.add_option("--dump-tables", dump_dir, "write the embedded tables to a directory");

  std::string poly_text;
  auto* measure_cmd = app.add_subcommand("measure", "trace, R, r, Mahler measure and sector half-angle");
  measure_cmd->add_option("polynomial", poly_text, "polynomial text or a file holding it")->required();

  std::string aux_path;
  std::optional<double> theta, expect;
  int show_minima = 5;
  auto* verify_cmd = app.add_subcommand("verify", "global minimum and exceptions of an auxiliary function");
  verify_cmd->add_option("aux", aux_path, "auxiliary function file")->required();
  verify_cmd->add_option("--theta", theta, "minimize on the ray at this angle (degrees)");
  verify_cmd->add_option("--expect", expect, "fail unless m >= this value");
  verify_cmd->add_option("--minima", show_minima, "number of lowest local minima to list");

  std::string save;
  auto* opt_cmd = app.add_subcommand("optimize", "re-optimize coefficients by semi-infinite LP");
  opt_cmd->add_option("aux", aux_path, "auxiliary function file (polynomials are used)")->required();
  opt_cmd->add_option("--theta", theta, "optimize on the ray at this angle (degrees)");
  opt_cmd->add_option("--expect", expect, "fail unless final m' >= this value");
  opt_cmd->add_option("--save", save, "write the optimized function here");

  int steps = 10;
  std::vector<int> ks{5, 10, 15};
  auto* disc_cmd = app.add_subcommand("discover", "recursive LLL search for auxiliary polynomials");
  disc_cmd->add_option("--theta", theta, "sector ray angle; omit for the positive half-line");
  disc_cmd->add_option("--steps", steps, "number of recursive steps");
  disc_cmd->add_option("--k", ks, "candidate degree schedule")->delimiter(',');
  disc_cmd->add_option("--save", save, "write the final function here");

  std::optional<int> row;
  auto* sector_cmd = app.add_subcommand("sector", "sector functions, envelope and staircase");
  sector_cmd->add_option("--theta", theta, "report f_i, f, g and c at this angle");
  sector_cmd->add_option("--row", row, "verify one interval of the sector table");

  int smyth_n = 12;
  bool distribution = false;
  auto* smyth_cmd = app.add_subcommand("smyth", "Smyth sequence levels and the r bound");
  smyth_cmd->add_option("--n", smyth_n, "highest level");
  smyth_cmd->add_flag("--distribution", distribution, "also check conjugate distribution counts");

  int which = 0;
  auto* tables_cmd = app.add_subcommand("tables", "verify an embedded table");
  tables_cmd->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  PrecisionGuard precision(cfg.precision_bits);
  try {
    if (!dump_dir.empty()) {
      dump_tables(dump_dir);
      std::cout << "tables written to " << dump_dir << '\n';
    }
    if (*measure_cmd) return cmd_measure(cfg, poly_text);
    if (*verify_cmd) return cmd_verify(cfg, aux_path, theta, expect, show_minima);
    if (*opt_cmd) return cmd_optimize(cfg, aux_path, theta, expect, save);
    if (*disc_cmd) return cmd_discover(cfg, theta, steps, ks, save);
    if (*sector_cmd) return cmd_sector(cfg, theta, row);
    if (*smyth_cmd) return cmd_smyth(cfg, smyth_n, distribution);
    if (*tables_cmd) return cmd_tables(cfg, which);
    if (dump_dir.empty()) {
      std::cout << app.help();
      return kInputError;
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << '\n';
    return kInputError;
  } catch (const AuxFileError& e) {
    std::cerr << "aux file: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
