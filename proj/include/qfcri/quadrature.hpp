#ifndef QFCRI_QUADRATURE_HPP
#define QFCRI_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace qfcri {

/// Tolerances and budgets for the adaptive integrator. endpoint_clip is the
/// distance kept from u = 0 and u = 1 when integrating over probability
/// levels; integrands are never evaluated at the endpoints themselves.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::size_t max_subdivisions = 2000;
    double endpoint_clip = 1e-12;
    bool force_quadrature = false; // bypass closed-form dispatch

    void validate() const;
};

struct IntegrationResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a,b]. The initial
/// partition is refined geometrically toward both endpoints so integrable
/// endpoint singularities (log blow-ups, mild power tails) converge without
/// wasting budget on the smooth interior. Throws DivergenceError when the
/// subdivision budget is exhausted before the tolerance is met or when f
/// returns a non-finite value.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f,
                                     double a, double b,
                                     const QuadratureConfig& cfg = {});

/// Convenience wrapper for integrals over probability levels: integrates on
/// (clip, 1-clip) with the config's endpoint clip.
IntegrationResult integrate_unit(const std::function<double(double)>& f,
                                 const QuadratureConfig& cfg = {});

} // namespace qfcri

#endif // QFCRI_QUADRATURE_HPP
