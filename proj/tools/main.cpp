// gidlab: experiment runner. Every subcommand prints exactly one verdict
// line on stdout and exits 0 (pass), 1 (statistical/criterion fail), or
// 2 (usage or runtime error). CSV artifacts go wherever --out points.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gidlab/batch.hpp"
#include "gidlab/cm.hpp"
#include "gidlab/coxcheck.hpp"
#include "gidlab/csv.hpp"
#include "gidlab/grid.hpp"
#include "gidlab/laplace.hpp"
#include "gidlab/psi.hpp"
#include "gidlab/renewal.hpp"
#include "gidlab/samplers.hpp"
#include "gidlab/subordination.hpp"

namespace {

using namespace gidlab;

const char* pf(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string fmt(double x) { return format_double_short(x); }

// ---- flat key=value config -------------------------------------------------

std::string trim(std::string s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> parse_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) + " is not key=value: '" +
                               line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) + " has an empty key");
    if (!seen.insert(key).second)
      throw std::runtime_error("duplicate key '" + key + "' in config file");
    entries.emplace_back(std::move(key), std::move(val));
  }
  return entries;
}

// ---- shared option bundles -------------------------------------------------

struct CommonOpts {
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0 = all processors
  std::string out;
  std::string config;
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--seed", c.seed, "RNG seed; fixes every draw in the run");
  sub->add_option("--workers", c.workers,
                  "worker threads (0 = all processors); output is byte-identical regardless");
  sub->add_option("--out", c.out, "write the CSV artifact here (directories created as needed)");
  sub->add_option("--config", c.config,
                  "flat key=value file ('#' comments); command-line flags override file values");
}

// Families with samplers: exp, gamma, ml, stable, plus geom-exp (geometric
// compound of exponentials, the thinning summand construction).
struct SampleFamilyOpts {
  std::string family;
  double rate = 1.0;
  double shape = 1.0;
  double alpha = 0.6;
  double scale = 1.0;
  double p = 0.5;
};

void add_sample_family(CLI::App* sub, SampleFamilyOpts& f) {
  sub->add_option("--family", f.family, "one of: exp, gamma, ml, stable, geom-exp");
  sub->add_option("--rate", f.rate, "rate of exp / gamma / geom-exp inner exponential");
  sub->add_option("--shape", f.shape, "gamma shape");
  sub->add_option("--alpha", f.alpha, "ml index in (0,1] or stable index in (0,1)");
  sub->add_option("--scale", f.scale, "ml scale");
  sub->add_option("--p", f.p, "geom-exp retention probability in (0,1]");
}

Family make_family(const SampleFamilyOpts& f) {
  if (f.family == "exp") return Family::exponential(f.rate);
  if (f.family == "gamma") return Family::gamma(f.shape, f.rate);
  if (f.family == "ml") return Family::mittag_leffler(f.alpha, f.scale);
  if (f.family == "stable") return Family::positive_stable(f.alpha);
  throw std::invalid_argument("unknown family '" + f.family +
                              "' (choose exp, gamma, ml, stable, geom-exp)");
}

SampleBatch make_batch(const SampleFamilyOpts& f, std::uint64_t n, const CommonOpts& c) {
  if (f.family == "geom-exp")
    return sample_geometric_compound(Family::exponential(f.rate), f.p, n, c.seed, c.workers);
  return sample_family(make_family(f), n, c.seed, c.workers);
}

// Closed-form transforms for gid-check / cox-check: exp, gamma, ml, plus two
// transforms built as 1/(1+psi) from an exponent (gid-power, gid-cpe).
struct LtFamilyOpts {
  std::string family;
  double rate = 1.0;
  double shape = 1.0;
  double alpha = 0.6;
  double scale = 1.0;
  double coef = 1.0;
  double mu = 1.0;
  double theta = 1.0;
};

void add_lt_family(CLI::App* sub, LtFamilyOpts& f) {
  sub->add_option("--family", f.family, "one of: exp, gamma, ml, gid-power, gid-cpe");
  sub->add_option("--rate", f.rate, "rate of exp / gamma");
  sub->add_option("--shape", f.shape, "gamma shape");
  sub->add_option("--alpha", f.alpha, "ml index in (0,1], or exponent of gid-power");
  sub->add_option("--scale", f.scale, "ml scale");
  sub->add_option("--coef", f.coef, "coefficient of gid-power: psi = coef*lambda^alpha");
  sub->add_option("--mu", f.mu, "gid-cpe jump rate: psi = mu*lambda/(lambda+theta)");
  sub->add_option("--theta", f.theta, "gid-cpe jump-size rate");
}

LaplaceTransformSpec make_lt(const LtFamilyOpts& f) {
  if (f.family == "exp") return LaplaceTransformSpec::exponential(f.rate);
  if (f.family == "gamma") return LaplaceTransformSpec::gamma(f.shape, f.rate);
  if (f.family == "ml") return LaplaceTransformSpec::mittag_leffler(f.alpha, f.scale);
  if (f.family == "gid-power") return LaplaceTransformSpec::gid(PsiExponent::power(f.coef, f.alpha));
  if (f.family == "gid-cpe")
    return LaplaceTransformSpec::gid(PsiExponent::compound_poisson_exp(f.mu, f.theta));
  throw std::invalid_argument("unknown family '" + f.family +
                              "' (choose exp, gamma, ml, gid-power, gid-cpe)");
}

// Exponent for thinning-limit / discretize-psi.
struct PsiOpts {
  std::string psi;
  double coef = 1.0;
  double alpha = 1.0;
  double mu = 1.0;
  double theta = 1.0;
};

void add_psi(CLI::App* sub, PsiOpts& o) {
  sub->add_option("--psi", o.psi, "one of: power (coef*lambda^alpha), cpe (mu*lambda/(lambda+theta))");
  sub->add_option("--coef", o.coef, "power coefficient");
  sub->add_option("--alpha", o.alpha, "power exponent in (0,1]");
  sub->add_option("--mu", o.mu, "cpe jump rate");
  sub->add_option("--theta", o.theta, "cpe jump-size rate");
}

PsiExponent make_psi(const PsiOpts& o) {
  if (o.psi == "power") return PsiExponent::power(o.coef, o.alpha);
  if (o.psi == "cpe") return PsiExponent::compound_poisson_exp(o.mu, o.theta);
  throw std::invalid_argument("unknown exponent '" + o.psi + "' (choose power, cpe)");
}

struct McGridOpts {
  double lambda_min = 0.1;
  double lambda_max = 10.0;
  int points = 10;
  double k_sigma = 4.0;
};

void add_mc_grid(CLI::App* sub, McGridOpts& g) {
  sub->add_option("--lambda-min", g.lambda_min, "left end of the log-spaced lambda grid");
  sub->add_option("--lambda-max", g.lambda_max, "right end of the lambda grid");
  sub->add_option("--lambda-points", g.points, "grid size")->check(CLI::Range(2, 100000));
  sub->add_option("--k-sigma", g.k_sigma, "width of the acceptance band in standard errors");
}

struct CmGridOpts {
  double lambda_min = 1e-2;
  double lambda_max = 10.0;
  int points = 64;
  int order = 6;
};

void add_cm_grid(CLI::App* sub, CmGridOpts& g) {
  sub->add_option("--lambda-min", g.lambda_min, "left end of the uniform difference grid");
  sub->add_option("--lambda-max", g.lambda_max, "right end of the difference grid");
  sub->add_option("--lambda-points", g.points, "difference grid size")->check(CLI::Range(8, 100000));
  sub->add_option("--order", g.order, "highest finite-difference order checked")
      ->check(CLI::Range(3, 24));
}

CmGrid to_cm_grid(const CmGridOpts& g) {
  CmGrid out;
  out.lambda_min = g.lambda_min;
  out.lambda_max = g.lambda_max;
  out.points = static_cast<std::size_t>(g.points);
  out.order = g.order;
  return out;
}

// ---- subcommand runners ----------------------------------------------------

struct SampleCmd {
  CommonOpts common;
  SampleFamilyOpts fam;
  std::uint64_t n = 1000;
};

int run_sample(const SampleCmd& o) {
  SampleBatch b = make_batch(o.fam, o.n, o.common);
  double mean = b.values.empty()
                    ? 0.0
                    : std::accumulate(b.values.begin(), b.values.end(), 0.0) / double(b.n());
  if (!o.common.out.empty()) b.write_csv_file(o.common.out);
  std::cout << "PASS sample: " << b.descriptor << " n=" << b.n() << " seed=" << b.seed
            << " mean=" << fmt(mean) << "\n";
  return 0;
}

struct ThinInvarianceCmd {
  CommonOpts common;
  std::string family;
  double rate = 1.0;
  double alpha = 0.6;
  double p = 0.5;
  double c = 0.0;  // 0 = the invariant contraction p^(1/alpha)
  std::uint64_t n_target = 20000;
  double level = 0.05;
};

int run_thin_invariance(const ThinInvarianceCmd& o) {
  InvarianceFamily fam;
  double param;
  if (o.family == "poisson") {
    fam = InvarianceFamily::poisson;
    param = o.rate;
  } else if (o.family == "ml") {
    fam = InvarianceFamily::mittag_leffler;
    param = o.alpha;
  } else {
    throw std::invalid_argument("unknown family '" + o.family + "' (choose poisson, ml)");
  }
  InvarianceReport r =
      verify_thinning_invariance(fam, param, o.p, o.n_target, o.common.seed, o.c, o.level);
  if (!o.common.out.empty()) {
    std::string csv = "p,c,d,threshold,original,kept,pass\n";
    csv += fmt(r.p) + "," + fmt(r.c) + "," + format_double(r.d) + "," +
           format_double(r.threshold) + "," + format_u64(r.original) + "," + format_u64(r.kept) +
           "," + (r.pass ? "1" : "0") + "\n";
    write_text_file(o.common.out, csv);
  }
  std::cout << pf(r.pass) << " thin-invariance: family=" << o.family << " p=" << fmt(r.p)
            << " c=" << fmt(r.c) << " d=" << fmt(r.d) << " threshold=" << fmt(r.threshold)
            << " original=" << r.original << " kept=" << r.kept << "\n";
  return r.pass ? 0 : 1;
}

struct LtCompareCmd {
  CommonOpts common;
  SampleFamilyOpts fam;
  McGridOpts grid;
  std::uint64_t n = 100000;
};

int run_lt_compare(const LtCompareCmd& o) {
  SampleBatch b = make_batch(o.fam, o.n, o.common);
  std::function<double(double)> ref;
  if (o.fam.family == "geom-exp") {
    ref = geometric_convolve(LaplaceTransformSpec::exponential(o.fam.rate), o.fam.p);
  } else {
    Family f = make_family(o.fam);
    ref = [f](double l) { return f.closed_lt(l); };
  }
  std::vector<double> grid = log_grid(o.grid.lambda_min, o.grid.lambda_max,
                                      static_cast<std::size_t>(o.grid.points));
  GridReport rep = compare_lt(b, ref, grid, o.grid.k_sigma);
  if (!o.common.out.empty()) rep.write_csv_file(o.common.out);
  std::cout << pf(rep.overall) << " lt-compare: " << b.descriptor << " n=" << b.n()
            << " worst=" << fmt(rep.worst_magnitude)
            << " at lambda=" << fmt(grid[rep.worst_index]) << "\n";
  return rep.overall ? 0 : 1;
}

struct GidCheckCmd {
  CommonOpts common;
  LtFamilyOpts fam;
  CmGridOpts grid;
};

int run_gid_check(const GidCheckCmd& o) {
  LaplaceTransformSpec g = make_lt(o.fam);
  GridReport rep = gid_check(g, to_cm_grid(o.grid));
  if (!o.common.out.empty()) rep.write_csv_file(o.common.out);
  std::cout << pf(rep.overall) << " gid-check: " << g.describe()
            << " worst_margin=" << fmt(rep.worst_magnitude);
  if (!rep.overall && !rep.note.empty()) std::cout << " (" << rep.note << ")";
  std::cout << "\n";
  return rep.overall ? 0 : 1;
}

struct CoxCheckCmd {
  CommonOpts common;
  LtFamilyOpts fam;
  CmGridOpts grid;
  std::vector<double> p;
};

int run_cox_check(const CoxCheckCmd& o) {
  LaplaceTransformSpec g = make_lt(o.fam);
  std::vector<double> p_grid = o.p.empty() ? default_p_grid() : o.p;
  CoxVerdict v = cox_renewal_check(g, p_grid, to_cm_grid(o.grid));
  if (!o.common.out.empty()) v.write_csv_file(o.common.out);
  std::cout << pf(v.overall) << " cox-check: " << g.describe() << " thinning-inverses="
            << pf(v.phi_pass) << " gid=" << pf(v.gid_pass) << " worst p=" << fmt(v.worst_p)
            << " lambda=" << fmt(v.worst_lambda) << " margin=" << fmt(v.worst_margin) << "\n";
  return v.overall ? 0 : 1;
}

struct SubordinateCmd {
  CommonOpts common;
  std::string base;
  double alpha = 0.7;
  double mu = 1.0;
  double theta = 1.0;
  std::string time;
  double t = 1.0;
  std::uint64_t n = 0;  // 0 = closed-form check only
  McGridOpts grid;
  int order = 6;
};

int run_subordinate(const SubordinateCmd& o) {
  BaseProcess base = [&] {
    if (o.base == "stable") return BaseProcess::stable(o.alpha);
    if (o.base == "cpe") return BaseProcess::compound_poisson_exp(o.mu, o.theta);
    throw std::invalid_argument("unknown base '" + o.base + "' (choose stable, cpe)");
  }();
  DirectingTime time = [&] {
    if (o.time == "gamma") return DirectingTime::gamma_time(o.t);
    if (o.time == "exp") return DirectingTime::exponential_time(o.t);
    if (o.time == "ml") return DirectingTime::ml_time(o.t);
    throw std::invalid_argument("unknown directing time '" + o.time + "' (choose gamma, exp, ml)");
  }();
  CmGrid cm;
  cm.order = o.order;
  GridReport gid = verify_subordination_gid(base.psi(), time, cm);
  bool ok = gid.overall;
  std::string mc_part;
  bool wrote = false;
  if (o.n > 0) {
    SampleBatch s = sample_subordinated(base, time, o.n, o.common.seed, o.common.workers);
    std::function<double(double)> ref = closed_form_subordinated_lt(base.psi(), time);
    std::vector<double> grid = log_grid(o.grid.lambda_min, o.grid.lambda_max,
                                        static_cast<std::size_t>(o.grid.points));
    GridReport mc = compare_lt(s, ref, grid, o.grid.k_sigma);
    ok = ok && mc.overall;
    mc_part = std::string(" mc=") + pf(mc.overall) + " mc_worst=" + fmt(mc.worst_magnitude);
    if (!o.common.out.empty()) {
      mc.write_csv_file(o.common.out);
      wrote = true;
    }
  }
  if (!wrote && !o.common.out.empty()) gid.write_csv_file(o.common.out);
  std::cout << pf(ok) << " subordinate: " << base.describe() << " under " << time.describe()
            << " gid=" << pf(gid.overall) << mc_part;
  if (!gid.overall && !gid.note.empty()) std::cout << " (" << gid.note << ")";
  std::cout << "\n";
  return ok ? 0 : 1;
}

struct ThinningLimitCmd {
  CommonOpts common;
  PsiOpts psi;
  std::vector<std::uint64_t> n;
  double lambda_min = 1e-2;
  double lambda_max = 10.0;
  int points = 64;
};

int run_thinning_limit(const ThinningLimitCmd& o) {
  PsiExponent psi = make_psi(o.psi);
  std::vector<std::uint64_t> schedule = o.n.empty() ? std::vector<std::uint64_t>{100, 1000, 10000}
                                                    : o.n;
  std::vector<double> grid =
      log_grid(o.lambda_min, o.lambda_max, static_cast<std::size_t>(o.points));
  ThinningLimitReport rep = verify_thinning_limit(psi, grid, schedule);
  if (!o.common.out.empty()) {
    std::string csv = "n,sup_error\n";
    for (std::size_t i = 0; i < rep.n_schedule.size(); ++i)
      csv += format_u64(rep.n_schedule[i]) + "," + format_double(rep.sup_errors[i]) + "\n";
    write_text_file(o.common.out, csv);
  }
  std::cout << pf(rep.pass) << " thinning-limit: " << psi.describe()
            << " final=" << fmt(rep.final_sup) << " order=" << fmt(rep.fitted_order) << "\n";
  return rep.pass ? 0 : 1;
}

struct GeomSumLimitCmd {
  CommonOpts common;
  double alpha = 0.6;
  std::uint64_t n = 1000;
  std::uint64_t m = 100000;
  std::vector<double> lambda;
  double k_sigma = 4.0;
};

int run_geom_sum_limit(const GeomSumLimitCmd& o) {
  std::vector<double> grid = o.lambda.empty() ? std::vector<double>{0.5, 1.0, 2.0} : o.lambda;
  GridReport rep = geometric_sum_limit_demo(o.alpha, o.n, o.m, o.common.seed, o.common.workers,
                                            grid, o.k_sigma);
  if (!o.common.out.empty()) rep.write_csv_file(o.common.out);
  std::cout << pf(rep.overall) << " geom-sum-limit: alpha=" << fmt(o.alpha) << " n=" << o.n
            << " m=" << o.m << " worst=" << fmt(rep.worst_magnitude)
            << " at lambda=" << fmt(rep.grid[rep.worst_index]) << "\n";
  return rep.overall ? 0 : 1;
}

struct DiscretizeCmd {
  CommonOpts common;
  PsiOpts psi;
  int k = 8;
  double lambda_max = 10.0;
};

int run_discretize(const DiscretizeCmd& o) {
  PsiExponent psi = make_psi(o.psi);
  DiscretizeResult res = discretize_psi(psi, o.k, o.lambda_max);
  if (!o.common.out.empty()) {
    std::string csv = "weight,scale\n";
    for (std::size_t i = 0; i < res.weights.size(); ++i)
      csv += format_double(res.weights[i]) + "," + format_double(res.scales[i]) + "\n";
    write_text_file(o.common.out, csv);
  }
  std::cout << "PASS discretize-psi: " << psi.describe() << " k=" << o.k
            << " terms=" << res.weights.size() << " residual=" << fmt(res.residual) << "\n";
  return 0;
}

// ---- wiring ----------------------------------------------------------------

CLI::App* make_sub(CLI::App& app, const std::string& name, const std::string& desc) {
  CLI::App* sub = app.add_subcommand(name, desc);
  sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->option_defaults()->always_capture_default();
  return sub;
}

const CommonOpts* common_of(const CLI::App* sub, const SampleCmd& a, const ThinInvarianceCmd& b,
                            const LtCompareCmd& c, const GidCheckCmd& d, const CoxCheckCmd& e,
                            const SubordinateCmd& f, const ThinningLimitCmd& g,
                            const GeomSumLimitCmd& h, const DiscretizeCmd& i) {
  const std::string& n = sub->get_name();
  if (n == "sample") return &a.common;
  if (n == "thin-invariance") return &b.common;
  if (n == "lt-compare") return &c.common;
  if (n == "gid-check") return &d.common;
  if (n == "cox-check") return &e.common;
  if (n == "subordinate") return &f.common;
  if (n == "thinning-limit") return &g.common;
  if (n == "geom-sum-limit") return &h.common;
  return &i.common;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Experiments on geometrically infinitely divisible laws: p-thinning of renewal\n"
      "processes, geometric compounds, subordinated positive processes, and the\n"
      "complete-monotonicity checks tying them together. Deterministic for a fixed\n"
      "seed, independent of --workers."};
  app.name("gidlab");
  app.require_subcommand(1);

  SampleCmd sample_cmd;
  {
    CLI::App* s = make_sub(app, "sample",
                           "Draw i.i.d. variates from a positive family and write them as CSV");
    add_sample_family(s, sample_cmd.fam);
    s->add_option("--n", sample_cmd.n, "number of draws");
    add_common(s, sample_cmd.common);
  }

  ThinInvarianceCmd thin_cmd;
  {
    CLI::App* s = make_sub(
        app, "thin-invariance",
        "Simulate a renewal process, keep each epoch with probability p, contract time, and\n"
        "KS-test the surviving inter-arrivals against fresh draws from the original law.\n"
        "Poisson and Mittag-Leffler inter-arrivals are fixed points of this map");
    s->add_option("--family", thin_cmd.family, "one of: poisson, ml");
    s->add_option("--rate", thin_cmd.rate, "Poisson rate");
    s->add_option("--alpha", thin_cmd.alpha, "Mittag-Leffler index in (0,1]");
    s->add_option("--p", thin_cmd.p, "retention probability in (0,1)");
    s->add_option("--c", thin_cmd.c, "contraction factor (0 = the invariant choice p^(1/alpha))");
    s->add_option("--n-target", thin_cmd.n_target, "target epoch count before thinning");
    s->add_option("--level", thin_cmd.level, "KS test level");
    add_common(s, thin_cmd.common);
  }

  LtCompareCmd ltc_cmd;
  {
    CLI::App* s = make_sub(
        app, "lt-compare",
        "Estimate the Laplace transform of a sampled batch on a log grid and compare it\n"
        "with the family's closed form within a k-sigma standard-error band");
    add_sample_family(s, ltc_cmd.fam);
    s->add_option("--n", ltc_cmd.n, "number of draws");
    add_mc_grid(s, ltc_cmd.grid);
    add_common(s, ltc_cmd.common);
  }

  GidCheckCmd gid_cmd;
  {
    CLI::App* s = make_sub(
        app, "gid-check",
        "Test a closed-form Laplace transform g for geometric infinite divisibility:\n"
        "psi = 1/g - 1 must vanish at 0 and have a completely monotone derivative\n"
        "(checked via alternating finite differences of a central-difference proxy)");
    add_lt_family(s, gid_cmd.fam);
    add_cm_grid(s, gid_cmd.grid);
    add_common(s, gid_cmd.common);
  }

  CoxCheckCmd cox_cmd;
  {
    CLI::App* s = make_sub(
        app, "cox-check",
        "Decide whether a renewal law with transform g can arise as a p-thinning for every\n"
        "p on a grid: each inverse transform g/(p+(1-p)g) must be completely monotone,\n"
        "and that holds for all p exactly when g is geometrically infinitely divisible");
    add_lt_family(s, cox_cmd.fam);
    s->add_option("--p", cox_cmd.p, "thinning probabilities to probe (default: built-in grid)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    add_cm_grid(s, cox_cmd.grid);
    add_common(s, cox_cmd.common);
  }

  SubordinateCmd sub_cmd;
  {
    CLI::App* s = make_sub(
        app, "subordinate",
        "Run a positive process on a random operational time (gamma, exponential, or\n"
        "Mittag-Leffler) and check the resulting transform for geometric infinite\n"
        "divisibility; with --n > 0 also Monte-Carlo check the closed form");
    s->add_option("--base", sub_cmd.base, "one of: stable, cpe");
    s->add_option("--alpha", sub_cmd.alpha, "stable index in (0,1)");
    s->add_option("--mu", sub_cmd.mu, "cpe jump rate");
    s->add_option("--theta", sub_cmd.theta, "cpe jump-size rate");
    s->add_option("--time", sub_cmd.time, "directing time: gamma, exp, ml");
    s->add_option("--t", sub_cmd.t, "directing-time parameter");
    s->add_option("--n", sub_cmd.n, "Monte Carlo draws (0 = closed-form check only)");
    s->add_option("--order", sub_cmd.order, "finite-difference order for the gid check")
        ->check(CLI::Range(3, 24));
    add_mc_grid(s, sub_cmd.grid);
    add_common(s, sub_cmd.common);
  }

  ThinningLimitCmd tlim_cmd;
  {
    CLI::App* s = make_sub(
        app, "thinning-limit",
        "Measure how fast the inter-arrival transform of a 1/n-thinned renewal process\n"
        "approaches 1/(1+psi) as n grows, and fit the convergence order");
    add_psi(s, tlim_cmd.psi);
    s->add_option("--n", tlim_cmd.n, "thinning schedule (default: 100 1000 10000)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    s->add_option("--lambda-min", tlim_cmd.lambda_min, "left end of the lambda grid");
    s->add_option("--lambda-max", tlim_cmd.lambda_max, "right end of the lambda grid");
    s->add_option("--lambda-points", tlim_cmd.points, "grid size")->check(CLI::Range(2, 100000));
    add_common(s, tlim_cmd.common);
  }

  GeomSumLimitCmd gsum_cmd;
  {
    CLI::App* s = make_sub(
        app, "geom-sum-limit",
        "Simulate geometric(1/n) sums of n^(-1/alpha)-scaled positive-stable summands and\n"
        "compare the empirical transform with the Mittag-Leffler law 1/(1+lambda^alpha)");
    s->add_option("--alpha", gsum_cmd.alpha, "stable/Mittag-Leffler index in (0,1]");
    s->add_option("--n", gsum_cmd.n, "geometric mean parameter (retention 1/n)");
    s->add_option("--m", gsum_cmd.m, "number of simulated sums");
    s->add_option("--lambda", gsum_cmd.lambda, "lambda grid (default: 0.5 1 2)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    s->add_option("--k-sigma", gsum_cmd.k_sigma, "acceptance band width in standard errors");
    add_common(s, gsum_cmd.common);
  }

  DiscretizeCmd disc_cmd;
  {
    CLI::App* s = make_sub(
        app, "discretize-psi",
        "Approximate an exponent psi by a nonnegative combination of terms\n"
        "c_j*(1-exp(-b_j*lambda)) via nonnegative least squares and report the fit");
    add_psi(s, disc_cmd.psi);
    s->add_option("--k", disc_cmd.k, "number of candidate scales")->check(CLI::Range(1, 4096));
    s->add_option("--lambda-max", disc_cmd.lambda_max, "right end of the fit grid");
    add_common(s, disc_cmd.common);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();

  // Merge a config file, if given: file values fill in flags the command line
  // left unset, then the whole line is reparsed.
  const CommonOpts* common = common_of(sub, sample_cmd, thin_cmd, ltc_cmd, gid_cmd, cox_cmd,
                                       sub_cmd, tlim_cmd, gsum_cmd, disc_cmd);
  if (!common->config.empty()) {
    try {
      auto entries = parse_flat_config(common->config);
      std::set<std::string> valid;
      for (const CLI::Option* opt : sub->get_options())
        for (const std::string& ln : opt->get_lnames())
          if (ln != "config" && ln != "help") valid.insert(ln);
      std::vector<std::string> args{sub->get_name()};
      for (const auto& [key, val] : entries) {
        if (!valid.count(key)) {
          std::string list;
          for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
          throw std::runtime_error("unknown key '" + key + "' in config file; valid keys: " +
                                   list);
        }
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt != nullptr && opt->count() > 0) continue;  // command line wins
        args.push_back("--" + key);
        args.push_back(val);
      }
      for (int i = 1, past = 0; i < argc; ++i) {
        if (past)
          args.emplace_back(argv[i]);
        else if (argv[i] == sub->get_name())
          past = 1;
      }
      std::reverse(args.begin(), args.end());
      app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e);
      return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
      std::cerr << "ERROR " << sub->get_name() << ": " << e.what() << "\n";
      return 2;
    }
    sub = app.get_subcommands().front();
  }

  try {
    const std::string& name = sub->get_name();
    if (name == "sample") return run_sample(sample_cmd);
    if (name == "thin-invariance") return run_thin_invariance(thin_cmd);
    if (name == "lt-compare") return run_lt_compare(ltc_cmd);
    if (name == "gid-check") return run_gid_check(gid_cmd);
    if (name == "cox-check") return run_cox_check(cox_cmd);
    if (name == "subordinate") return run_subordinate(sub_cmd);
    if (name == "thinning-limit") return run_thinning_limit(tlim_cmd);
    if (name == "geom-sum-limit") return run_geom_sum_limit(gsum_cmd);
    if (name == "discretize-psi") return run_discretize(disc_cmd);
    std::cerr << "ERROR: unhandled subcommand '" << name << "'\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ERROR " << sub->get_name() << ": " << e.what() << "\n";
    return 2;
  }
}
