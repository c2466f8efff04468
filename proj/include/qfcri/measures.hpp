#ifndef QFCRI_MEASURES_HPP
#define QFCRI_MEASURES_HPP

#include <cstddef>

#include "qfcri/quadrature.hpp"
#include "qfcri/quantile_model.hpp"
#include "qfcri/special_functions.hpp"

namespace qfcri {

/// Fractional exponent of the log term, restricted to (0,1]. At alpha = 0
/// the fractional power degenerates to an indicator, so 0 is excluded.
struct FractionalOrder {
    double alpha;
    explicit FractionalOrder(double a);
};

enum class Method { closed_form, quadrature };

struct MeasureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    Method method = Method::quadrature;
    std::size_t evaluations = 0;
    /// Probability mass of the region where a signed fractional power acted
    /// on a negative base (equilibrium measures with mean < 1); 0 elsewhere.
    double diagnostic_mass = 0.0;
};

/// Quantile-based fractional cumulative residual inaccuracy
///   RI_alpha(X,Y) = int_0^1 (1-p) (-log(1 - Q3(p)))^alpha q_X(p) dp.
/// Dispatches to the closed-form registry (exponential pair, rescaled-beta
/// pair with equal ranges, special Govindarajulu vs uniform, Pareto I pair,
/// proportional-hazards pairs, identical models) unless
/// cfg.force_quadrature is set.
MeasureResult qfcri(const QuantileModel& x, const QuantileModel& y,
                    FractionalOrder alpha, const QuadratureConfig& cfg = {});

/// Self-inaccuracy (entropy): qfcri with Q3(p) = p.
MeasureResult qfcre(const QuantileModel& x, FractionalOrder alpha,
                    const QuadratureConfig& cfg = {});

/// Cumulative residual inaccuracy, the alpha = 1 case.
MeasureResult qcri(const QuantileModel& x, const QuantileModel& y,
                   const QuadratureConfig& cfg = {});

/// Inaccuracy ratio qfcri / qfcre; 1 when the models coincide.
MeasureResult qfcrir(const QuantileModel& x, const QuantileModel& y,
                     FractionalOrder alpha, const QuadratureConfig& cfg = {});

/// Proportional-hazards form beta^alpha * qfcre(x, alpha).
MeasureResult qfcri_phm(const QuantileModel& x, double beta, FractionalOrder alpha,
                        const QuadratureConfig& cfg = {});

/// Inaccuracy between the m-th upper record value and the parent variable:
///   int_0^1 (sum_{i=0}^{m-1} t^i / i!) (1-p) t^alpha q_X(p) dp,  t = -log(1-p).
MeasureResult qfcri_upper_record(const QuantileModel& x, int m, FractionalOrder alpha,
                                 const QuadratureConfig& cfg = {});

/// int_0^1 (1-p) (-log((1-p)/mu))^alpha q_X(p) dp with mu the quantile mean.
/// Where the log base is negative (possible for mu < 1) the signed power
/// sgn(w)|w|^alpha applies and the affected p-mass is reported.
MeasureResult qfcri_equilibrium_self(const QuantileModel& x, FractionalOrder alpha,
                                     const QuadratureConfig& cfg = {});

/// int_0^1 ((1-p)/mu_X) (-log((1 - Q3(p))/mu_Y))^alpha q_X(p) dp.
MeasureResult qfcri_equilibrium_pair(const QuantileModel& x, const QuantileModel& y,
                                     FractionalOrder alpha,
                                     const QuadratureConfig& cfg = {});

/// Inverse Mittag-Leffler inaccuracy approximation
///   (alpha!)^(1/alpha) int_0^1 (1-p)(-log(1-Q3(p)))^(1/alpha) q_X(p) dp
/// with alpha! = Gamma(alpha+1). Requires 0 < alpha < 1.
MeasureResult mlf_qfcri(const QuantileModel& x, const QuantileModel& y, double alpha,
                        const QuadratureConfig& cfg = {});

/// Fractional cumulative residual KL divergence based on the inverse MLF:
///   int_0^1 (1-p)[Gamma(alpha+1) log((1-p)/(1-Q3(p)))]^(1/alpha) q_X(p) dp
///   + E(Y) - E(X),
/// with the signed power convention for negative log ratios.
MeasureResult mlf_kl(const QuantileModel& x, const QuantileModel& y, double alpha,
                     const QuadratureConfig& cfg = {});

/// Inverse-MLF entropy: mlf_qfcri with y = x.
MeasureResult mlf_qfcre(const QuantileModel& x, double alpha,
                        const QuadratureConfig& cfg = {});

/// Lower bound int_0^1 (1-p) (Q3(p))^alpha q_X(p) dp; qfcri dominates it
/// via -log(1-z) >= z.
double bound_lower_q3(const QuantileModel& x, const QuantileModel& y,
                      FractionalOrder alpha, const QuadratureConfig& cfg = {});

/// Lower bound A(alpha) exp(E_Q(X)) with E_Q the quantile differential
/// entropy int log q and A(alpha) = exp(int log[(1-p)(-log(1-Q3))^alpha]).
double bound_entropy(const QuantileModel& x, const QuantileModel& y,
                     FractionalOrder alpha, const QuadratureConfig& cfg = {});

} // namespace qfcri

#endif // QFCRI_MEASURES_HPP
