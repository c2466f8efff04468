#include "qfcri/measures.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "qfcri/errors.hpp"

namespace qfcri {

FractionalOrder::FractionalOrder(double a) : alpha(a) {
    if (!(a > 0.0 && a <= 1.0))
        throw std::domain_error("FractionalOrder: alpha must lie in (0,1]");
}

namespace {

MeasureResult from_integration(const IntegrationResult& r) {
    MeasureResult out;
    out.value = r.value;
    out.abs_error_estimate = r.abs_error;
    out.method = Method::quadrature;
    out.evaluations = r.evaluations;
    return out;
}

MeasureResult closed(double value) {
    MeasureResult out;
    out.value = value;
    out.abs_error_estimate = 1e-14 * std::abs(value);
    out.method = Method::closed_form;
    out.evaluations = 0;
    return out;
}

// Closed-form Q-FCRE values where the family admits one.
std::optional<double> closed_qfcre(const QuantileModel& x, double alpha) {
    const double g = gamma_fn(alpha + 1.0);
    switch (x.family()) {
        case Family::exponential:
            return g / x.params()[0];
        case Family::uniform:
            return g / std::pow(2.0, alpha + 1.0);
        case Family::govindarajulu_special:
            return 2.0 * g / std::pow(3.0, alpha + 1.0);
        case Family::rescaled_beta: {
            const double r = x.params()[0], c = x.params()[1];
            return r * std::pow(c, alpha) * g / std::pow(c + 1.0, alpha + 1.0);
        }
        case Family::pareto1: {
            const double a = x.params()[0];
            if (a <= 1.0)
                throw DivergenceError("qfcre: Pareto I with a <= 1 diverges");
            return std::pow(a, alpha) * g / std::pow(a - 1.0, alpha + 1.0);
        }
        default:
            return std::nullopt;
    }
}

// Closed-form Q-FCRI for family pairs in the registry.
std::optional<double> closed_qfcri(const QuantileModel& x, const QuantileModel& y,
                                   double alpha) {
    const double g = gamma_fn(alpha + 1.0);

    if (x.same_distribution_as(y)) return closed_qfcre(x, alpha);

    // Proportional hazards: y = cox_ph(x, theta) => theta^alpha * E_alpha(x).
    if (y.family() == Family::cox_ph && y.base()->same_distribution_as(x)) {
        if (auto e = closed_qfcre(x, alpha))
            return std::pow(y.params()[0], alpha) * *e;
        return std::nullopt;
    }

    if (x.family() == Family::exponential && y.family() == Family::exponential) {
        const double l1 = x.params()[0], l2 = y.params()[0];
        return std::pow(l2, alpha) * g / std::pow(l1, alpha + 1.0);
    }
    if (x.family() == Family::govindarajulu_special && y.family() == Family::uniform)
        return std::pow(2.0 / 3.0, alpha + 1.0) * g;
    if (x.family() == Family::rescaled_beta && y.family() == Family::rescaled_beta &&
        x.params()[0] == y.params()[0]) {
        const double r = x.params()[0];
        const double c1 = x.params()[1], c2 = y.params()[1];
        return r * std::pow(c2, alpha) * g /
               (std::pow(c1, alpha + 1.0) * std::pow(1.0 / c1 + 1.0, alpha + 1.0));
    }
    if (x.family() == Family::pareto1 && y.family() == Family::pareto1) {
        const double a = x.params()[0], b = y.params()[0];
        if (a <= 1.0)
            throw DivergenceError("qfcri: Pareto I actual model with a <= 1 diverges");
        return std::pow(b, alpha) * g / std::pow(a - 1.0, alpha + 1.0);
    }
    return std::nullopt;
}

MeasureResult integrate_measure(const std::function<double(double)>& f,
                                const QuadratureConfig& cfg) {
    return from_integration(integrate_unit(f, cfg));
}

void check_mlf_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("inverse-MLF measures require alpha in (0,1)");
}

// E[X] = int_0^1 Q(p) dp. Distinct from quantile_mean, which is
// int (1-p) q dp = E[X] - Q(0+).
double distribution_mean(const QuantileModel& model, const QuadratureConfig& cfg) {
    if (!model.mean_is_finite())
        throw DivergenceError("distribution mean diverges");
    return integrate_unit([&](double p) { return model.quantile(p); }, cfg).value;
}

} // namespace

MeasureResult qfcri(const QuantileModel& x, const QuantileModel& y,
                    FractionalOrder alpha, const QuadratureConfig& cfg) {
    if (!cfg.force_quadrature)
        if (auto v = closed_qfcri(x, y, alpha.alpha)) return closed(*v);

    const double a = alpha.alpha;
    auto f = [&](double p) {
        const double t = compose_cumulative_hazard(x, y, p);
        if (t == 0.0) return 0.0; // Q3 = 0: no contribution
        return (1.0 - p) * std::pow(t, a) * x.quantile_density(p);
    };
    return integrate_measure(f, cfg);
}

MeasureResult qfcre(const QuantileModel& x, FractionalOrder alpha,
                    const QuadratureConfig& cfg) {
    if (!cfg.force_quadrature)
        if (auto v = closed_qfcre(x, alpha.alpha)) return closed(*v);

    const double a = alpha.alpha;
    auto f = [&](double p) {
        return (1.0 - p) * std::pow(-std::log1p(-p), a) * x.quantile_density(p);
    };
    return integrate_measure(f, cfg);
}

MeasureResult qcri(const QuantileModel& x, const QuantileModel& y,
                   const QuadratureConfig& cfg) {
    return qfcri(x, y, FractionalOrder(1.0), cfg);
}

MeasureResult qfcrir(const QuantileModel& x, const QuantileModel& y,
                     FractionalOrder alpha, const QuadratureConfig& cfg) {
    const MeasureResult numerator = qfcri(x, y, alpha, cfg);
    const MeasureResult denominator = qfcre(x, alpha, cfg);
    if (!(std::abs(denominator.value) > cfg.abs_tol))
        throw DegeneracyError("qfcrir: self-inaccuracy denominator below abs_tol");
    MeasureResult out;
    out.value = numerator.value / denominator.value;
    out.abs_error_estimate =
        (numerator.abs_error_estimate +
         std::abs(out.value) * denominator.abs_error_estimate) /
        std::abs(denominator.value);
    out.method = numerator.method == Method::closed_form &&
                         denominator.method == Method::closed_form
                     ? Method::closed_form
                     : Method::quadrature;
    out.evaluations = numerator.evaluations + denominator.evaluations;
    return out;
}

MeasureResult qfcri_phm(const QuantileModel& x, double beta, FractionalOrder alpha,
                        const QuadratureConfig& cfg) {
    if (!(beta > 0.0))
        throw std::invalid_argument("qfcri_phm: beta must be positive");
    MeasureResult base = qfcre(x, alpha, cfg);
    const double scale = std::pow(beta, alpha.alpha);
    base.value *= scale;
    base.abs_error_estimate *= scale;
    return base;
}

MeasureResult qfcri_upper_record(const QuantileModel& x, int m, FractionalOrder alpha,
                                 const QuadratureConfig& cfg) {
    if (m < 1) throw std::invalid_argument("qfcri_upper_record: m must be >= 1");
    const double a = alpha.alpha;
    auto f = [&](double p) {
        const double t = -std::log1p(-p);
        // sum_{i=0}^{m-1} t^i / i! by recurrence; each term is bounded by
        // e^t, so no factorial overflow regardless of m.
        double term = 1.0, sum = 1.0;
        for (int i = 1; i < m; ++i) {
            term *= t / static_cast<double>(i);
            sum += term;
        }
        return sum * (1.0 - p) * std::pow(t, a) * x.quantile_density(p);
    };
    return integrate_measure(f, cfg);
}

MeasureResult qfcri_equilibrium_self(const QuantileModel& x, FractionalOrder alpha,
                                     const QuadratureConfig& cfg) {
    const double mu = quantile_mean(x, cfg);
    const double log_mu = std::log(mu);
    const double a = alpha.alpha;
    auto f = [&](double p) {
        const double w = log_mu - std::log1p(-p);
        return (1.0 - p) * signed_pow(w, a) * x.quantile_density(p);
    };
    MeasureResult out = integrate_measure(f, cfg);
    // log(mu/(1-p)) < 0 exactly on p < 1 - mu.
    out.diagnostic_mass = mu < 1.0 ? 1.0 - mu : 0.0;
    return out;
}

MeasureResult qfcri_equilibrium_pair(const QuantileModel& x, const QuantileModel& y,
                                     FractionalOrder alpha,
                                     const QuadratureConfig& cfg) {
    const double mu_x = quantile_mean(x, cfg);
    const double mu_y = quantile_mean(y, cfg);
    const double log_mu_y = std::log(mu_y);
    const double a = alpha.alpha;
    auto f = [&](double p) {
        const double w = log_mu_y + compose_cumulative_hazard(x, y, p);
        return (1.0 - p) / mu_x * signed_pow(w, a) * x.quantile_density(p);
    };
    MeasureResult out = integrate_measure(f, cfg);
    // Negative base region: S3(p) > mu_y, i.e. p < F_X(Q_Y(1 - mu_y)).
    if (mu_y < 1.0)
        out.diagnostic_mass = x.cdf(y.quantile(1.0 - mu_y));
    return out;
}

MeasureResult mlf_qfcri(const QuantileModel& x, const QuantileModel& y, double alpha,
                        const QuadratureConfig& cfg) {
    check_mlf_alpha(alpha);
    const double inv = 1.0 / alpha;
    const double scale = std::pow(gamma_fn(alpha + 1.0), inv);
    auto f = [&](double p) {
        const double t = compose_cumulative_hazard(x, y, p);
        if (t == 0.0) return 0.0;
        return (1.0 - p) * std::pow(t, inv) * x.quantile_density(p);
    };
    MeasureResult out = integrate_measure(f, cfg);
    out.value *= scale;
    out.abs_error_estimate *= scale;
    return out;
}

MeasureResult mlf_kl(const QuantileModel& x, const QuantileModel& y, double alpha,
                     const QuadratureConfig& cfg) {
    check_mlf_alpha(alpha);
    const double inv = 1.0 / alpha;
    const double g = gamma_fn(alpha + 1.0);
    const double mean_x = distribution_mean(x, cfg);
    const double mean_y = distribution_mean(y, cfg);
    auto f = [&](double p) {
        const double log_ratio = std::log1p(-p) + compose_cumulative_hazard(x, y, p);
        return (1.0 - p) * signed_pow(g * log_ratio, inv) * x.quantile_density(p);
    };
    MeasureResult out = integrate_measure(f, cfg);
    out.value += mean_y - mean_x;
    return out;
}

MeasureResult mlf_qfcre(const QuantileModel& x, double alpha,
                        const QuadratureConfig& cfg) {
    check_mlf_alpha(alpha);
    const double inv = 1.0 / alpha;
    const double scale = std::pow(gamma_fn(alpha + 1.0), inv);
    auto f = [&](double p) {
        return (1.0 - p) * std::pow(-std::log1p(-p), inv) * x.quantile_density(p);
    };
    MeasureResult out = integrate_measure(f, cfg);
    out.value *= scale;
    out.abs_error_estimate *= scale;
    return out;
}

double bound_lower_q3(const QuantileModel& x, const QuantileModel& y,
                      FractionalOrder alpha, const QuadratureConfig& cfg) {
    const double a = alpha.alpha;
    auto f = [&](double p) {
        const double q3 = compose_q3(x, y, p);
        if (q3 == 0.0) return 0.0;
        return (1.0 - p) * std::pow(q3, a) * x.quantile_density(p);
    };
    return integrate_unit(f, cfg).value;
}

double bound_entropy(const QuantileModel& x, const QuantileModel& y,
                     FractionalOrder alpha, const QuadratureConfig& cfg) {
    const double a = alpha.alpha;
    auto log_density = [&](double p) { return std::log(x.quantile_density(p)); };
    auto log_weight = [&](double p) {
        const double t = compose_cumulative_hazard(x, y, p);
        return std::log1p(-p) + a * std::log(t);
    };
    const double entropy = integrate_unit(log_density, cfg).value;
    const double a_alpha = integrate_unit(log_weight, cfg).value;
    const double bound = std::exp(a_alpha + entropy);
    if (!std::isfinite(bound))
        throw DivergenceError("bound_entropy: exponent integral diverged");
    return bound;
}

} // namespace qfcri
