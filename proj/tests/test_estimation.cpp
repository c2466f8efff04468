#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qfcri/errors.hpp"
#include "qfcri/estimation.hpp"
#include "qfcri/quantile_model.hpp"
#include "qfcri/rng.hpp"

using namespace qfcri;

TEST_CASE("empirical quantile function") {
    const SampleBatch single({5.0});
    for (double u : {0.1, 0.5, 0.9})
        CHECK(empirical_qf(single, u, QfMode::step) == 5.0);

    // Smoothed: n(k/n - u) X_(k-1) + n(u - (k-1)/n) X_(k) with k = 2.
    const SampleBatch two({1.0, 3.0});
    CHECK(empirical_qf(two, 0.75, QfMode::smoothed) == doctest::Approx(2.0));

    const SampleBatch three({1.0, 2.0, 3.0});
    CHECK(empirical_qf(three, 0.5, QfMode::step) == 2.0); // 1/3 < u <= 2/3

    CHECK_THROWS_AS(empirical_qf(three, 0.0, QfMode::step), std::domain_error);
    CHECK_THROWS_AS(empirical_qf(three, 1.0, QfMode::smoothed), std::domain_error);
}

TEST_CASE("empirical quantile density") {
    const SampleBatch three({1.0, 2.0, 3.0});
    CHECK(empirical_qdf(three, 0.5) == doctest::Approx(3.0)); // 3 (2 - 1)

    const SampleBatch ties({2.0, 2.0, 2.0});
    CHECK(empirical_qdf(ties, 0.5) == 0.0);
    CHECK(empirical_qdf(ties, 0.9) == 0.0);

    const SampleBatch one({4.0});
    CHECK(empirical_qdf(one, 0.5) == doctest::Approx(4.0)); // X_(0) := 0
}

TEST_CASE("empirical cdf conventions") {
    const SampleBatch b({1.0, 2.0, 3.0});
    CHECK(empirical_cdf(b, 2.0, CdfConvention::standard) == doctest::Approx(2.0 / 3.0));
    CHECK(empirical_cdf(b, 5.0, CdfConvention::plotting_position) ==
          doctest::Approx(3.0 / 4.0));
    CHECK(empirical_cdf(b, 0.5, CdfConvention::standard) == 0.0);
    CHECK(empirical_cdf(b, 0.5, CdfConvention::plotting_position) == 0.0);
    CHECK(empirical_cdf(b, 5.0, CdfConvention::standard) == 1.0);
}

TEST_CASE("estimator: summation bound edge cases") {
    const SampleBatch one({3.0});
    const SampleBatch y({0.5, 1.5});
    CHECK(estimate_qfcri(one, y, 1.0) == 0.0); // empty sum for n = 1

    // All y above max(x): every Ghat is zero.
    const SampleBatch x({1.0, 2.0, 3.0});
    const SampleBatch y_hi({10.0, 11.0, 12.0});
    CHECK(estimate_qfcri(x, y_hi, 0.5) == 0.0);
}

TEST_CASE("estimator: frozen hand fixture") {
    // x = {1,2,4}, y = {0.5,1.5,3,5}, alpha = 1, plotting position:
    // (2/3)(-log(4/5)) * 1 + (1/3)(-log(3/5)) * 1 = 0.31903...
    const SampleBatch x({1.0, 2.0, 4.0});
    const SampleBatch y({0.5, 1.5, 3.0, 5.0});
    const double expected = (2.0 / 3.0) * (-std::log(0.8)) + (1.0 / 3.0) * (-std::log(0.6));
    CHECK(expected == doctest::Approx(0.3190).epsilon(2e-4));
    CHECK(estimate_qfcri(x, y, 1.0) == doctest::Approx(expected).epsilon(1e-12));

    // Interior-only origin drops the first-spacing term.
    const double interior = (1.0 / 3.0) * (-std::log(0.6));
    CHECK(estimate_qfcri(x, y, 1.0, CdfConvention::plotting_position,
                         OriginPolicy::interior_only) ==
          doctest::Approx(interior).epsilon(1e-12));
}

TEST_CASE("estimator: self-inaccuracy hand values") {
    const SampleBatch two({1.0, 2.0});
    CHECK(estimate_qfcre(two, 1.0) ==
          doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12)); // 0.34657

    const SampleBatch one({7.0});
    CHECK(estimate_qfcre(one, 0.5) == 0.0);

    // Constant batch: only the origin spacing contributes.
    const SampleBatch constant({2.0, 2.0, 2.0});
    const double first = (1.0 - 1.0 / 3.0) *
                         std::pow(-std::log1p(-1.0 / 3.0), 0.5) * 2.0;
    CHECK(estimate_qfcre(constant, 0.5) == doctest::Approx(first).epsilon(1e-12));
    CHECK(estimate_qfcre(constant, 0.5, OriginPolicy::interior_only) == 0.0);
}

TEST_CASE("estimator ratio") {
    const SampleBatch x({1.0, 2.0, 4.0});
    const SampleBatch y({0.5, 1.5, 3.0, 5.0});
    const double numerator = estimate_qfcri(x, y, 1.0);
    const double denominator = estimate_qfcre(x, 1.0);
    CHECK(estimate_qfcrir(x, y, 1.0) ==
          doctest::Approx(numerator / denominator).epsilon(1e-12));

    // Same batch with the standard convention: Ghat(X_(i)) = i/n exactly, so
    // the ratio is exactly 1.
    CHECK(estimate_qfcrir(x, x, 0.7, CdfConvention::standard) == 1.0);

    const SampleBatch constant({2.0, 2.0, 2.0});
    CHECK_THROWS_AS(estimate_qfcrir(constant, y, 0.5,
                                    CdfConvention::plotting_position,
                                    OriginPolicy::interior_only),
                    DegeneracyError);
}

TEST_CASE("standard convention surfaces the infinite term") {
    // X_(2) = 2 with nonzero spacing reaches Ghat = 1 under i/m.
    const SampleBatch x({1.0, 2.0, 4.0});
    const SampleBatch y({0.5, 1.5});
    CHECK_THROWS_AS(estimate_qfcri(x, y, 1.0, CdfConvention::standard),
                    DivergenceError);
    // Plotting position keeps it finite.
    CHECK(std::isfinite(estimate_qfcri(x, y, 1.0)));
}

TEST_CASE("negative inputs are rejected with advice") {
    const SampleBatch bad({-1.0, 2.0});
    const SampleBatch good({1.0, 2.0});
    CHECK_THROWS_AS(estimate_qfcri(bad, good, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(estimate_qfcri(good, bad, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(estimate_qfcre(bad, 0.5), std::invalid_argument);
}

TEST_CASE("alpha domain") {
    const SampleBatch x({1.0, 2.0});
    CHECK_THROWS_AS(estimate_qfcri(x, x, 0.0), std::domain_error);
    CHECK_THROWS_AS(estimate_qfcri(x, x, 1.5), std::domain_error);
}

TEST_CASE("scale equivariance") {
    Xoshiro256pp gen(5);
    std::vector<double> xv(40), yv(50);
    for (double& v : xv) v = 3.0 * gen.uniform_open01();
    for (double& v : yv) v = 4.0 * gen.uniform_open01();
    const SampleBatch x(xv), y(yv);
    const double base = estimate_qfcri(x, y, 0.6);

    // Power-of-two scale: exact in floating point.
    std::vector<double> x2(xv), y2(yv);
    for (double& v : x2) v *= 2.0;
    for (double& v : y2) v *= 2.0;
    CHECK(estimate_qfcri(SampleBatch(x2), SampleBatch(y2), 0.6) == 2.0 * base);

    // General scale to roundoff.
    std::vector<double> x3(xv), y3(yv);
    for (double& v : x3) v *= 0.37;
    for (double& v : y3) v *= 0.37;
    CHECK(estimate_qfcri(SampleBatch(x3), SampleBatch(y3), 0.6) ==
          doctest::Approx(0.37 * base).epsilon(1e-12));
}

TEST_CASE("permutation invariance and non-negativity") {
    Xoshiro256pp gen(6);
    std::vector<double> xv(30), yv(30);
    for (double& v : xv) v = gen.uniform_open01();
    for (double& v : yv) v = gen.uniform_open01();
    const double a = estimate_qfcri(SampleBatch(xv), SampleBatch(yv), 0.4);
    std::reverse(xv.begin(), xv.end());
    std::swap(yv[0], yv[17]);
    const double b = estimate_qfcri(SampleBatch(xv), SampleBatch(yv), 0.4);
    CHECK(a == b);
    CHECK(a >= 0.0);
}

TEST_CASE("consistency on the exponential fixture") {
    // Mean absolute error against lambda2^a Gamma(1.5) / lambda1^{a+1}
    // decreases across n in {50,100,200,500} (one inversion allowed).
    const auto x_model = QuantileModel::exponential(1.0);
    const auto y_model = QuantileModel::exponential(2.0);
    const double truth = std::sqrt(2.0) * std::sqrt(M_PI) / 2.0;
    const std::vector<std::size_t> sizes = {50, 100, 200, 500};
    std::vector<double> avg_err;
    for (std::size_t n : sizes) {
        double total = 0.0;
        for (int r = 0; r < 200; ++r) {
            const SampleBatch xb = sample(x_model, n, derive_seed(303, n, r, 0));
            const SampleBatch yb = sample(y_model, n, derive_seed(303, n, r, 1));
            total += std::abs(estimate_qfcri(xb, yb, 0.5) - truth);
        }
        avg_err.push_back(total / 200.0);
    }
    int inversions = 0;
    for (std::size_t i = 1; i < avg_err.size(); ++i)
        if (avg_err[i] > avg_err[i - 1]) ++inversions;
    CHECK(inversions <= 1);
    CHECK(avg_err.back() < avg_err.front());
}
