#include "qfcri/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfcri/errors.hpp"

namespace qfcri {

SampleBatch::SampleBatch(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty())
        throw std::invalid_argument("SampleBatch: at least one value required");
    for (double v : sorted_)
        if (!std::isfinite(v))
            throw std::invalid_argument("SampleBatch: all values must be finite");
    std::sort(sorted_.begin(), sorted_.end());
}

namespace {

void check_level(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("empirical quantile level must lie in (0,1)");
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("alpha must lie in (0,1]");
}

void check_non_negative(const SampleBatch& batch, const char* who) {
    if (batch.min() < 0.0)
        throw std::invalid_argument(std::string(who) +
                                    ": negative values; min-shift the data first");
}

// Cell index k with u in ((k-1)/n, k/n], k = 1..n.
std::size_t cell_index(double u, std::size_t n) {
    auto k = static_cast<std::size_t>(std::ceil(u * static_cast<double>(n)));
    return std::min(std::max<std::size_t>(k, 1), n);
}

} // namespace

double empirical_qf(const SampleBatch& batch, double u, QfMode mode) {
    check_level(u);
    const std::size_t n = batch.size();
    const std::size_t k = cell_index(u, n);
    if (mode == QfMode::step) return batch.order_stat(k);
    const double nk = static_cast<double>(n);
    const double prev = k >= 2 ? batch.order_stat(k - 1) : 0.0; // X_(0) := 0
    return nk * (static_cast<double>(k) / nk - u) * prev +
           nk * (u - static_cast<double>(k - 1) / nk) * batch.order_stat(k);
}

double empirical_qdf(const SampleBatch& batch, double u) {
    check_level(u);
    const std::size_t n = batch.size();
    const std::size_t k = cell_index(u, n);
    const double prev = k >= 2 ? batch.order_stat(k - 1) : 0.0;
    return static_cast<double>(n) * (batch.order_stat(k) - prev);
}

double empirical_cdf(const SampleBatch& batch, double x, CdfConvention convention) {
    const auto& v = batch.sorted();
    const auto count = static_cast<double>(
        std::upper_bound(v.begin(), v.end(), x) - v.begin());
    const double denom = convention == CdfConvention::standard
                             ? static_cast<double>(batch.size())
                             : static_cast<double>(batch.size()) + 1.0;
    return count / denom;
}

double estimate_qfcri(const SampleBatch& x, const SampleBatch& y, double alpha,
                      CdfConvention convention, OriginPolicy origin) {
    check_alpha(alpha);
    check_non_negative(x, "estimate_qfcri(x)");
    check_non_negative(y, "estimate_qfcri(y)");

    // Simplified n-1 term form; the n-term variant with empirical-CDF
    // spacings (S_(i) - S_(i-1)) = 1/n collapses to it because the i = n
    // weight (1 - n/n) vanishes.
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    double total = 0.0;
    double prev = origin == OriginPolicy::zero_origin ? 0.0 : x.order_stat(1);
    for (std::size_t i = 1; n >= 2 && i <= n - 1; ++i) {
        const double xi = x.order_stat(i);
        const double spacing = xi - prev;
        prev = xi;
        if (spacing == 0.0) continue;
        const double g = empirical_cdf(y, xi, convention);
        if (g == 0.0) continue;
        if (g >= 1.0)
            throw DivergenceError(
                "estimate_qfcri: empirical CDF reached 1 at a retained order "
                "statistic under the standard convention");
        total += (1.0 - static_cast<double>(i) / nd) *
                 std::pow(-std::log1p(-g), alpha) * spacing;
    }
    return total;
}

double estimate_qfcre(const SampleBatch& x, double alpha, OriginPolicy origin) {
    check_alpha(alpha);
    check_non_negative(x, "estimate_qfcre");
    const std::size_t n = x.size();
    const double nd = static_cast<double>(n);
    double total = 0.0;
    double prev = origin == OriginPolicy::zero_origin ? 0.0 : x.order_stat(1);
    for (std::size_t i = 1; i <= n - 1 && n >= 2; ++i) {
        const double xi = x.order_stat(i);
        const double spacing = xi - prev;
        prev = xi;
        if (spacing == 0.0) continue;
        const double frac = static_cast<double>(i) / nd;
        total += (1.0 - frac) * std::pow(-std::log1p(-frac), alpha) * spacing;
    }
    return total;
}

double estimate_qfcrir(const SampleBatch& x, const SampleBatch& y, double alpha,
                       CdfConvention convention, OriginPolicy origin) {
    const double numerator = estimate_qfcri(x, y, alpha, convention, origin);
    const double denominator = estimate_qfcre(x, alpha, origin);
    if (denominator == 0.0)
        throw DegeneracyError("estimate_qfcrir: zero self-inaccuracy denominator");
    return numerator / denominator;
}

} // namespace qfcri
