#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include "gidlab/grid.hpp"
#include "gidlab/laplace.hpp"
#include "gidlab/renewal.hpp"
#include "gidlab/rng.hpp"
#include "gidlab/stats.hpp"

using namespace gidlab;

TEST_CASE("unit spacing fills the horizon with integer epochs") {
  const EpochSequence e = simulate_renewal(Family::constant(1.0), 5.5, 1);
  const std::vector<double> want{1, 2, 3, 4, 5};
  CHECK(e.epochs == want);
  CHECK(e.horizon == 5.5);
  CHECK(e.seed == 1);
}

TEST_CASE("epoch counts match the elementary renewal rate") {
  const double horizon = 1e4;
  const EpochSequence e = simulate_renewal(Family::exponential(1.0), horizon, 11);
  const double count = static_cast<double>(e.epochs.size());
  CHECK(std::abs(count - horizon) < 4.0 * std::sqrt(horizon));
  for (std::size_t i = 1; i < e.epochs.size(); ++i) CHECK(e.epochs[i] > e.epochs[i - 1]);
  CHECK(e.epochs.back() <= horizon);
}

TEST_CASE("simulation is reproducible and the count is frozen") {
  const EpochSequence a = simulate_renewal(Family::exponential(1.0), 1000.0, 42);
  const EpochSequence b = simulate_renewal(Family::exponential(1.0), 1000.0, 42);
  CHECK(a.epochs == b.epochs);
  CHECK(a.epochs.size() == 1022);
}

TEST_CASE("a degenerate sampler trips the runaway guard") {
  CHECK_THROWS_AS(simulate_renewal(Family::constant(1e-9), 1e6, 3), std::runtime_error);
}

TEST_CASE("thinning with full retention is the identity") {
  const EpochSequence e = simulate_renewal(Family::exponential(2.0), 500.0, 8);
  const EpochSequence t = thin(e, 1.0, 99);
  CHECK(t.epochs == e.epochs);
  CHECK(t.horizon == e.horizon);
}

TEST_CASE("retained counts have binomial moments") {
  const EpochSequence e = simulate_renewal(Family::exponential(1.0), 400.0, 21);
  const double n = static_cast<double>(e.epochs.size());
  const double p = 0.3;
  double sum = 0, sumsq = 0;
  const int reps = 200;
  for (int s = 0; s < reps; ++s) {
    const double k = static_cast<double>(thin(e, p, 1000 + s).epochs.size());
    sum += k;
    sumsq += k * k;
  }
  const double mean = sum / reps;
  const double var = sumsq / reps - mean * mean;
  // 4-sigma band on the mean of reps binomial counts
  CHECK(std::abs(mean - n * p) < 4.0 * std::sqrt(n * p * (1 - p) / reps));
  CHECK(var > 0.5 * n * p * (1 - p));
  CHECK(var < 2.0 * n * p * (1 - p));
}

TEST_CASE("two-stage thinning matches a single pass at the product rate") {
  const EpochSequence e = simulate_renewal(Family::exponential(1.0), 1e5, 17);
  const EpochSequence two = thin(thin(e, 0.6, 501), 0.5, 502);
  const EpochSequence one = thin(e, 0.3, 503);
  const KsResult ks = ks_two_sample(interarrivals(two), interarrivals(one));
  CHECK(ks.pass);
}

TEST_CASE("contraction rescales epochs and horizon exactly") {
  EpochSequence e;
  e.epochs = {1.0, 2.0, 3.0};
  e.horizon = 4.0;
  const EpochSequence c = contract(e, 0.5);
  const std::vector<double> want{0.5, 1.0, 1.5};
  CHECK(c.epochs == want);
  CHECK(c.horizon == 2.0);
  CHECK_THROWS_AS(contract(e, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(contract(e, -1.0), std::invalid_argument);
}

TEST_CASE("composed contractions with dyadic factors are bitwise associative") {
  const EpochSequence e = simulate_renewal(Family::exponential(1.0), 200.0, 5);
  const EpochSequence a = contract(contract(e, 0.5), 0.25);
  const EpochSequence b = contract(e, 0.125);
  CHECK(a.epochs == b.epochs);
  CHECK(a.horizon == b.horizon);
}

TEST_CASE("composed contractions with generic factors agree to rounding") {
  const EpochSequence e = simulate_renewal(Family::exponential(1.0), 200.0, 5);
  const EpochSequence a = contract(contract(e, 0.3), 0.7);
  const EpochSequence b = contract(e, 0.21);
  REQUIRE(a.epochs.size() == b.epochs.size());
  for (std::size_t i = 0; i < a.epochs.size(); ++i)
    CHECK(a.epochs[i] == doctest::Approx(b.epochs[i]).epsilon(1e-14));
}

TEST_CASE("interarrivals difference the epochs from the origin") {
  EpochSequence e;
  e.epochs = {1.0, 3.0, 6.0};
  e.horizon = 10.0;
  e.seed = 4;
  const SampleBatch g = interarrivals(e);
  const std::vector<double> want{1, 2, 3};
  CHECK(g.values == want);
  CHECK(g.seed == 4);

  EpochSequence tiny;
  tiny.epochs = {1.0};
  tiny.horizon = 2.0;
  CHECK_THROWS_AS(interarrivals(tiny), std::runtime_error);
}

TEST_CASE("thinned exponential gaps follow the geometric-compound transform") {
  const double rate = 1.0, p = 0.25;
  const EpochSequence e = simulate_renewal(Family::exponential(rate), 4e5, 13);
  const SampleBatch gaps = interarrivals(thin(e, p, 14));
  const LaplaceTransformSpec ref = geometric_convolve(LaplaceTransformSpec::exponential(rate), p);
  const GridReport rep =
      compare_lt(gaps, [&ref](double l) { return ref(l); }, log_grid(0.1, 10.0, 10), 4.0);
  CHECK(rep.overall);
}

TEST_CASE("thinned and contracted unit-rate arrivals keep their law") {
  const InvarianceReport r =
      verify_thinning_invariance(InvarianceFamily::poisson, 1.0, 0.3, 20000, 7);
  CHECK(r.pass);
  CHECK(r.d == doctest::Approx(0.016120990526840628).epsilon(1e-12));
  CHECK(r.threshold == doctest::Approx(0.024760375464407451).epsilon(1e-12));
  CHECK(r.c == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(r.original == 20014);
  CHECK(r.kept == 6017);
}

TEST_CASE("heavy-tailed arrivals need the fractional contraction rate") {
  const InvarianceReport r =
      verify_thinning_invariance(InvarianceFamily::mittag_leffler, 0.6, 0.4, 20000, 7);
  CHECK(r.pass);
  CHECK(r.d == doctest::Approx(0.015204054414510559).epsilon(1e-12));
  CHECK(r.threshold == doctest::Approx(0.022180662501954228).epsilon(1e-12));
  CHECK(r.c == doctest::Approx(std::pow(0.4, 1.0 / 0.6)).epsilon(1e-12));
  CHECK(r.original == 18769);
  CHECK(r.kept == 7498);
}

TEST_CASE("the linear contraction rate fails as a negative control") {
  const InvarianceReport r =
      verify_thinning_invariance(InvarianceFamily::mittag_leffler, 0.6, 0.4, 20000, 7, 0.4);
  CHECK_FALSE(r.pass);
  CHECK(r.d == doctest::Approx(0.097492664710589594).epsilon(1e-12));
  CHECK(r.c == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("invariance arguments are validated") {
  CHECK_THROWS_AS(verify_thinning_invariance(InvarianceFamily::poisson, 1.0, 0.0, 1000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_thinning_invariance(InvarianceFamily::poisson, 1.0, 1.5, 1000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_thinning_invariance(InvarianceFamily::mittag_leffler, 1.2, 0.5, 1000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_thinning_invariance(InvarianceFamily::poisson, 1.0, 0.5, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("thinning probability is validated") {
  EpochSequence e;
  e.epochs = {1.0};
  e.horizon = 2.0;
  CHECK_THROWS_AS(thin(e, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(thin(e, 1.0001, 1), std::invalid_argument);
}
