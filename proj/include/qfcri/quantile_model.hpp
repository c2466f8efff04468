#ifndef QFCRI_QUANTILE_MODEL_HPP
#define QFCRI_QUANTILE_MODEL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qfcri/quadrature.hpp"

namespace qfcri {

class SampleBatch;

enum class Family {
    uniform,
    exponential,
    govindarajulu_special,
    govindarajulu,
    power_pareto,
    rescaled_beta,
    linear_hazard,
    pareto1,
    cox_ph,
    transformed,
};

/// A strictly increasing transform applied to a model's quantile function.
/// `derivative` may be left empty, in which case the transformed model's
/// quantile density falls back to central differences.
struct Transform {
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    std::function<double(double)> derivative; // optional
    std::string name;

    static Transform identity();
    static Transform power(double b);          // x -> x^(1/b), b > 0
    static Transform log_transform();          // x -> log x (support must be positive)
    static Transform affine(double c, double d); // x -> c x + d, c > 0
};

/// A distribution represented by its quantile function Q(u) and quantile
/// density q(u) = dQ/du on (0,1). Immutable after construction; all methods
/// are const and safe to call concurrently.
class QuantileModel {
public:
    // Parametric families. Constructors validate parameter constraints and
    // throw std::invalid_argument on violation.
    static QuantileModel uniform();
    static QuantileModel exponential(double lambda);
    static QuantileModel govindarajulu_special();           // Q(u) = 2u - u^2
    static QuantileModel govindarajulu(double theta, double sigma, double beta);
    static QuantileModel power_pareto(double c, double lambda1, double lambda2);
    static QuantileModel rescaled_beta(double r, double c); // Q(u) = r(1-(1-u)^(1/c))
    static QuantileModel linear_hazard(double a, double b); // hazard quantile a + bu
    static QuantileModel pareto1(double a);                 // Q(u) = (1-u)^(-1/a)
    static QuantileModel cox_ph(const QuantileModel& base, double theta);
    static QuantileModel transformed(const QuantileModel& base, Transform tau);

    /// Q(u); throws std::domain_error for u outside (0,1).
    double quantile(double u) const;

    /// q(u) = dQ/du >= 0; analytic per family, central differences for
    /// transformed models without a derivative.
    double quantile_density(double u) const;

    /// F(x), clamped to {0,1} outside the support. Closed form where the
    /// family admits one, else bisection on Q(v) = x.
    double cdf(double x) const;

    /// 1 - F(x) without subtractive cancellation where a closed form exists.
    double survival(double x) const;

    /// Cumulative hazard -log S(x), computed directly per family so deep
    /// tails neither underflow nor round through survival values. 0 below
    /// the support, +infinity at or above its upper end.
    double cumulative_hazard(double x) const;

    double support_low() const;  // Q(0+)
    double support_high() const; // Q(1-), may be +infinity

    Family family() const;
    const std::vector<double>& params() const;
    /// Base model of cox_ph / transformed families, nullptr otherwise.
    const QuantileModel* base() const;
    const Transform* transform() const; // transformed family only

    /// True when the two models denote the same distribution (same family,
    /// parameters and, recursively, base models).
    bool same_distribution_as(const QuantileModel& other) const;

    bool mean_is_finite() const;

    std::string describe() const;

private:
    struct Impl;
    explicit QuantileModel(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Q3(p) = G(Q_X(p)) = Q_Y^{-1}(Q_X(p)), clamped to {0,1} when Q_X(p) falls
/// outside y's support.
double compose_q3(const QuantileModel& x, const QuantileModel& y, double p);

/// Survival counterpart 1 - Q3(p) = S_Y(Q_X(p)), computed without forming
/// 1 - G explicitly.
double compose_survival(const QuantileModel& x, const QuantileModel& y, double p);

/// -log(1 - Q3(p)) = Lambda_Y(Q_X(p)). Identical or proportional-hazard
/// family pairs (exponential/exponential, Pareto I pairs, rescaled-beta kind
/// with a common range, cox_ph wrappers of these) reduce to a multiple of
/// -log(1-p) and stay exact arbitrarily deep into the tail.
double compose_cumulative_hazard(const QuantileModel& x, const QuantileModel& y,
                                 double p);

/// Hazard quantile function H(u) = 1/(q(u)(1-u)); accepts u in [0,1).
double hazard_quantile(const QuantileModel& model, double u);

/// Mean residual quantile function M(u) = E[X - Q(u) | X > Q(u)] by
/// quadrature over (u,1).
double mean_residual_quantile(const QuantileModel& model, double u,
                              const QuadratureConfig& cfg = {});

/// mu_Q = integral of (1-p) q(p) over (0,1); the distribution mean.
double quantile_mean(const QuantileModel& model, const QuadratureConfig& cfg = {});

/// Model with quantile function tau(Q(u)). Verifies monotonicity of tau on a
/// grid over the support and throws std::invalid_argument on violation.
QuantileModel transform_model(const QuantileModel& model, const Transform& tau);

/// n inverse-transform draws Q(U_i) with U_i from a seeded deterministic
/// generator; the same seed always yields the same batch.
SampleBatch sample(const QuantileModel& model, std::size_t n, std::uint64_t seed);

/// Parse "family:key=value,key=value" model specifications, e.g.
/// "exponential:lambda=2" or "powerpareto:c=1.5,l1=0.75,l2=0.25".
QuantileModel parse_model_spec(const std::string& spec);

} // namespace qfcri

#endif // QFCRI_QUANTILE_MODEL_HPP
