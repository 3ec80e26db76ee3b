// Acceptance harness. Run with a criterion number (1-10) to check one
// property, or with no arguments to run all of them. Every criterion prints
// exactly one "criterion K: PASS/FAIL - ..." line; the exit code is 0 iff
// every requested criterion passed. All tolerances are fixed here, in code.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "gidlab/coxcheck.hpp"
#include "gidlab/laplace.hpp"
#include "gidlab/renewal.hpp"
#include "gidlab/samplers.hpp"
#include "gidlab/stats.hpp"
#include "gidlab/subordination.hpp"

namespace {

using namespace gidlab;

constexpr double kSigma = 4.0;  // Monte Carlo acceptance band, in standard errors

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// 1. Thinning a unit-rate Poisson stream with retention p and contracting
//    time by the same p returns the original law (KS at level 0.05).
Outcome criterion1() {
  const InvarianceReport r =
      verify_thinning_invariance(InvarianceFamily::poisson, 1.0, 0.3, 100000, 101);
  return {r.pass, "thinned+rescaled Poisson arrivals keep their law (d=" + num(r.d) +
                      ", threshold=" + num(r.threshold) + ")"};
}

// 2. For heavy-tailed inter-arrivals of index a, invariance needs the
//    contraction p^(1/a); the linear rate p must break it.
Outcome criterion2() {
  const InvarianceReport good =
      verify_thinning_invariance(InvarianceFamily::mittag_leffler, 0.6, 0.4, 100000, 202);
  const InvarianceReport bad =
      verify_thinning_invariance(InvarianceFamily::mittag_leffler, 0.6, 0.4, 100000, 202, 0.4);
  const bool ok = good.pass && !bad.pass;
  return {ok, "fractional rate passes (d=" + num(good.d) + " vs " + num(good.threshold) +
                  "), linear rate fails (d=" + num(bad.d) + ")"};
}

// 3. A geometric(p) sum of Exp(1) draws has transform 1/(1+lambda/p):
//    empirical transform within kSigma standard errors at five lambdas.
Outcome criterion3() {
  const SampleBatch batch = sample_geometric_compound(Family::exponential(1.0), 0.5, 1000000, 303);
  const std::vector<double> grid{0.1, 0.5, 1.0, 2.0, 10.0};
  const GridReport rep =
      compare_lt(batch, [](double l) { return 1.0 / (1.0 + 2.0 * l); }, grid, kSigma);
  return {rep.overall,
          "geometric compound of exponentials matches 1/(1+2*lambda) (worst margin " +
              num(rep.worst_magnitude) + ")"};
}

// 4. Subordinating a 0.7-stable process by gamma, exponential and
//    heavy-tailed clocks matches the closed-form transforms.
Outcome criterion4() {
  const BaseProcess base = BaseProcess::stable(0.7);
  const std::vector<DirectingTime> clocks{DirectingTime::gamma_time(0.5),
                                          DirectingTime::exponential_time(2.0),
                                          DirectingTime::ml_time(0.5)};
  const std::vector<double> grid = log_grid(0.1, 10.0, 10);
  bool ok = true;
  double worst = 0;
  std::uint64_t seed = 404;
  for (const DirectingTime& clock : clocks) {
    const SampleBatch batch = sample_subordinated(base, clock, 1000000, ++seed);
    const LaplaceTransformSpec ref = closed_form_subordinated_lt(base.psi(), clock);
    const GridReport rep =
        compare_lt(batch, [&ref](double l) { return ref(l); }, grid, kSigma);
    ok = ok && rep.overall;
    worst = std::max(worst, std::abs(rep.worst_magnitude));
  }
  return {ok, "time-changed stable increments match closed forms for 3 clocks (worst |dev| " +
                  num(worst) + ")"};
}

// 5. The monotonicity checks separate divisible from non-divisible cases
//    with no false verdict in either direction.
Outcome criterion5() {
  int correct = 0, total = 0;
  const std::vector<std::pair<double, bool>> shapes{
      {0.25, true}, {0.5, true}, {1.0, true}, {1.5, false}, {2.0, false}};
  for (const auto& [shape, expect] : shapes) {
    ++total;
    if (gid_check(LaplaceTransformSpec::gamma(shape, 1.0)).overall == expect) ++correct;
  }
  ++total;
  if (cm_check([](double l) { return std::exp(-l); }).overall) ++correct;
  ++total;
  if (cm_check([](double l) { return 1.0 / (1.0 + l); }).overall) ++correct;
  ++total;
  if (!cm_check([](double l) { return 2.0 + 2.0 * l; }).overall) ++correct;  // rising: not c.m.
  return {correct == total, "divisibility and monotonicity verdicts correct on " +
                                std::to_string(correct) + "/" + std::to_string(total) + " cases"};
}

// 6. For every family, the per-p thinning pre-image test and the direct
//    divisibility test must return the same verdict (and the known pattern).
Outcome criterion6() {
  struct Case {
    LaplaceTransformSpec g;
    bool expect;
  };
  const std::vector<Case> cases{
      {LaplaceTransformSpec::exponential(1.0), true},
      {LaplaceTransformSpec::gamma(0.5, 1.0), true},
      {LaplaceTransformSpec::gamma(2.0, 1.0), false},
      {LaplaceTransformSpec::mittag_leffler(0.6, 1.0), true},
      {LaplaceTransformSpec::gid(PsiExponent::compound_poisson_exp(1.0, 1.0)), true},
  };
  bool ok = true;
  int agree = 0;
  for (const Case& c : cases) {
    const CoxVerdict v = cox_renewal_check(c.g, default_p_grid());
    if (v.phi_pass == v.gid_pass) ++agree;
    ok = ok && v.phi_pass == v.gid_pass && v.overall == c.expect;
  }
  return {ok, "pre-image and direct divisibility tests agree on " + std::to_string(agree) +
                  "/5 families with the expected verdicts"};
}

// 7. The transform of a 1/n-thinned renewal stream converges to the
//    divisible limit at first order in 1/n.
Outcome criterion7() {
  const std::vector<double> grid = log_grid(1e-2, 10.0, 64);
  const std::vector<std::uint64_t> schedule{100, 1000, 10000};
  const std::vector<PsiExponent> psis{PsiExponent::power(1.0, 1.0), PsiExponent::power(1.0, 0.5),
                                      PsiExponent::compound_poisson_exp(1.0, 1.0)};
  bool ok = true;
  double worst_sup = 0, min_order = 1e9;
  for (const PsiExponent& psi : psis) {
    const ThinningLimitReport rep = verify_thinning_limit(psi, grid, schedule);
    ok = ok && rep.pass;
    worst_sup = std::max(worst_sup, rep.final_sup);
    min_order = std::min(min_order, rep.fitted_order);
  }
  return {ok, "thinning transforms converge for 3 exponents (final sup <= " + num(worst_sup) +
                  ", order >= " + num(min_order) + ")"};
}

// 8. A geometric(1/n) sum of rescaled 0.6-stable summands lands on the
//    heavy-tailed limit transform within kSigma standard errors.
Outcome criterion8() {
  const GridReport rep = geometric_sum_limit_demo(0.6, 1000, 1000000, 808, 1, {0.5, 1.0, 2.0},
                                                  kSigma);
  return {rep.overall, "rescaled geometric stable sums reach 1/(1+lambda^0.6) (worst margin " +
                           num(rep.worst_magnitude) + ")"};
}

// 9. The stable sampler matches exp(-lambda^a) for three indices, and the
//    index-1 heavy-tailed sampler degenerates to the exponential law.
Outcome criterion9() {
  bool ok = true;
  double worst = 0;
  std::uint64_t seed = 909;
  for (double alpha : {0.3, 0.5, 0.9}) {
    const SampleBatch batch = sample_positive_stable(alpha, 1000000, ++seed);
    const GridReport rep = compare_lt(
        batch, [alpha](double l) { return std::exp(-std::pow(l, alpha)); }, {0.5, 1.0, 2.0},
        kSigma);
    ok = ok && rep.overall;
    worst = std::max(worst, std::abs(rep.worst_magnitude));
  }
  const SampleBatch ml = sample_mittag_leffler(1.0, 1.0, 200000, 913);
  const SampleBatch ex = sample_exponential(1.0, 200000, 914);
  const KsResult ks = ks_two_sample(ml, ex);
  ok = ok && ks.pass;
  return {ok, "stable sampler matches its transform for 3 indices (worst |dev| " + num(worst) +
                  "); index-1 sampler is exponential (KS d=" + num(ks.statistic) + ")"};
}

// 10. Every subcommand writes byte-identical artifacts for 1, 2 and 8
//     workers and exits with the same code.
Outcome criterion10() {
  namespace fs = std::filesystem;
  const fs::path dir("acceptance_scratch");
  fs::create_directories(dir);

  const std::vector<std::pair<std::string, std::string>> cmds{
      {"sample", "sample --family ml --alpha 0.6 --n 20000 --seed 7"},
      {"thin-invariance", "thin-invariance --family ml --alpha 0.6 --p 0.4 --n-target 4000 --seed 3"},
      {"lt-compare", "lt-compare --family stable --alpha 0.5 --n 50000 --seed 5"},
      {"gid-check", "gid-check --family gamma --shape 0.5"},
      {"cox-check", "cox-check --family ml --alpha 0.6"},
      {"subordinate", "subordinate --base stable --alpha 0.7 --time gamma --t 0.5 --n 50000 --seed 9"},
      {"thinning-limit", "thinning-limit --psi power --alpha 0.5"},
      {"geom-sum-limit", "geom-sum-limit --alpha 0.6 --n 200 --m 20000 --seed 11"},
      {"discretize-psi", "discretize-psi --psi power --alpha 0.5 --k 8"},
  };
  const std::vector<unsigned> workers{1, 2, 8};

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };

  bool ok = true;
  int stable_cmds = 0;
  for (const auto& [name, args] : cmds) {
    std::vector<std::string> bytes;
    std::vector<int> codes;
    for (unsigned w : workers) {
      const fs::path out = dir / (name + "_w" + std::to_string(w) + ".csv");
      const std::string cmd = std::string(GIDLAB_CLI_PATH) + " " + args + " --workers " +
                              std::to_string(w) + " --out " + out.string() +
                              " >/dev/null 2>&1";
      const int raw = std::system(cmd.c_str());
      codes.push_back(raw == -1 ? -1 : WEXITSTATUS(raw));
      bytes.push_back(slurp(out));
    }
    const bool same = bytes[0] == bytes[1] && bytes[0] == bytes[2] && !bytes[0].empty() &&
                      codes[0] == codes[1] && codes[0] == codes[2] && codes[0] <= 1 &&
                      codes[0] >= 0;
    if (same) ++stable_cmds;
    ok = ok && same;
  }
  return {ok, "byte-identical artifacts across workers 1/2/8 for " +
                  std::to_string(stable_cmds) + "/" + std::to_string(cmds.size()) +
                  " subcommands"};
}

Outcome run(int k) {
  switch (k) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    default: return {false, "unknown criterion"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  } else {
    for (int k = 1; k <= 10; ++k) which.push_back(k);
  }
  bool all = true;
  for (int k : which) {
    Outcome r;
    try {
      r = run(k);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s - %s\n", k, r.ok ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
