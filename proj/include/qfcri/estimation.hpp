#ifndef QFCRI_ESTIMATION_HPP
#define QFCRI_ESTIMATION_HPP

#include "qfcri/sample_batch.hpp"

namespace qfcri {

enum class QfMode { step, smoothed };

/// Empirical CDF convention. standard uses #{values <= x}/m and can reach 1;
/// plotting_position uses #{values <= x}/(m+1), which keeps -log(1 - G)
/// finite at the sample maximum.
enum class CdfConvention { standard, plotting_position };

/// Handling of the first spacing in the spacings estimators. zero_origin
/// anchors X_(0) := 0 (non-negative lifetime convention); interior_only
/// drops the origin term and uses spacings between order statistics only.
enum class OriginPolicy { zero_origin, interior_only };

/// Parzen empirical quantile function: step returns X_(k) for
/// u in ((k-1)/n, k/n]; smoothed interpolates linearly with X_(0) := 0.
double empirical_qf(const SampleBatch& batch, double u, QfMode mode);

/// Empirical quantile density n (X_(k) - X_(k-1)) on the k-th cell.
double empirical_qdf(const SampleBatch& batch, double u);

double empirical_cdf(const SampleBatch& batch, double x, CdfConvention convention);

/// Plug-in spacings estimator
///   sum_{i=1}^{n-1} (1 - i/n) [-log(1 - G(X_(i)))]^alpha (X_(i) - X_(i-1))
/// with G the empirical CDF of y. Terms with zero spacing or G = 0
/// contribute nothing; under the standard convention a retained term with
/// G = 1 raises DivergenceError instead of being clipped. Inputs must be
/// non-negative (min-shift upstream data first).
double estimate_qfcri(const SampleBatch& x, const SampleBatch& y, double alpha,
                      CdfConvention convention = CdfConvention::plotting_position,
                      OriginPolicy origin = OriginPolicy::zero_origin);

/// Self-inaccuracy specialisation with G(X_(i)) = i/n:
///   sum_{i=1}^{n-1} (1 - i/n) (-log(1 - i/n))^alpha (X_(i) - X_(i-1)).
double estimate_qfcre(const SampleBatch& x, double alpha,
                      OriginPolicy origin = OriginPolicy::zero_origin);

/// Ratio of the two plug-ins; DegeneracyError when the denominator is zero
/// (e.g. a constant batch).
double estimate_qfcrir(const SampleBatch& x, const SampleBatch& y, double alpha,
                       CdfConvention convention = CdfConvention::plotting_position,
                       OriginPolicy origin = OriginPolicy::zero_origin);

} // namespace qfcri

#endif // QFCRI_ESTIMATION_HPP
