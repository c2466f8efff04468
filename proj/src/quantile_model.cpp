#include "qfcri/quantile_model.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qfcri/errors.hpp"
#include "qfcri/rng.hpp"
#include "qfcri/sample_batch.hpp"

namespace qfcri {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

void check_level(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("quantile level must lie in (0,1)");
}

std::string format_param(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

struct QuantileModel::Impl {
    Family family;
    std::vector<double> params;
    std::shared_ptr<const QuantileModel> base; // cox_ph / transformed
    Transform tau;                             // transformed only
    double support_lo = 0.0;
    double support_hi = kInf;
};

QuantileModel::QuantileModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Family QuantileModel::family() const { return impl_->family; }
const std::vector<double>& QuantileModel::params() const { return impl_->params; }
const QuantileModel* QuantileModel::base() const { return impl_->base.get(); }
const Transform* QuantileModel::transform() const {
    return impl_->family == Family::transformed ? &impl_->tau : nullptr;
}
double QuantileModel::support_low() const { return impl_->support_lo; }
double QuantileModel::support_high() const { return impl_->support_hi; }

// ---------------------------------------------------------------------------
// Factories

QuantileModel QuantileModel::uniform() {
    auto impl = std::make_shared<Impl>();
    impl->family = Family::uniform;
    impl->support_lo = 0.0;
    impl->support_hi = 1.0;
    return QuantileModel(impl);
}

QuantileModel QuantileModel::exponential(double lambda) {
    require(lambda > 0.0, "exponential: lambda must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::exponential;
    impl->params = {lambda};
    return QuantileModel(impl);
}

QuantileModel QuantileModel::govindarajulu_special() {
    auto impl = std::make_shared<Impl>();
    impl->family = Family::govindarajulu_special;
    impl->support_lo = 0.0;
    impl->support_hi = 1.0;
    return QuantileModel(impl);
}

QuantileModel QuantileModel::govindarajulu(double theta, double sigma, double beta) {
    require(sigma > 0.0, "govindarajulu: sigma must be positive");
    require(beta > 0.0, "govindarajulu: beta must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::govindarajulu;
    impl->params = {theta, sigma, beta};
    impl->support_lo = theta;
    impl->support_hi = theta + sigma;
    return QuantileModel(impl);
}

QuantileModel QuantileModel::power_pareto(double c, double lambda1, double lambda2) {
    require(c > 0.0, "power_pareto: c must be positive");
    require(lambda1 > 0.0, "power_pareto: lambda1 must be positive");
    require(lambda2 > 0.0, "power_pareto: lambda2 must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::power_pareto;
    impl->params = {c, lambda1, lambda2};
    return QuantileModel(impl);
}

QuantileModel QuantileModel::rescaled_beta(double r, double c) {
    require(r > 0.0, "rescaled_beta: r must be positive");
    require(c > 0.0, "rescaled_beta: c must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::rescaled_beta;
    impl->params = {r, c};
    impl->support_lo = 0.0;
    impl->support_hi = r;
    return QuantileModel(impl);
}

QuantileModel QuantileModel::linear_hazard(double a, double b) {
    require(a > 0.0, "linear_hazard: a must be positive");
    require(b > 0.0, "linear_hazard: b must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::linear_hazard;
    impl->params = {a, b};
    return QuantileModel(impl);
}

QuantileModel QuantileModel::pareto1(double a) {
    require(a > 0.0, "pareto1: a must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::pareto1;
    impl->params = {a};
    impl->support_lo = 1.0;
    return QuantileModel(impl);
}

QuantileModel QuantileModel::cox_ph(const QuantileModel& base, double theta) {
    require(theta > 0.0, "cox_ph: theta must be positive");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::cox_ph;
    impl->params = {theta};
    impl->base = std::make_shared<const QuantileModel>(base);
    impl->support_lo = base.support_low();
    impl->support_hi = base.support_high();
    return QuantileModel(impl);
}

QuantileModel QuantileModel::transformed(const QuantileModel& base, Transform tau) {
    require(static_cast<bool>(tau.forward), "transformed: forward map required");
    require(static_cast<bool>(tau.inverse), "transformed: inverse map required");

    // Monotonicity check: tau(Q(u)) sampled on a grid must be non-decreasing.
    const int grid = 257;
    double prev = -kInf;
    for (int i = 1; i < grid; ++i) {
        const double u = static_cast<double>(i) / grid;
        const double v = tau.forward(base.quantile(u));
        if (!(v >= prev))
            throw std::invalid_argument(
                "transformed: transform is not non-decreasing on the support");
        prev = v;
    }

    auto impl = std::make_shared<Impl>();
    impl->family = Family::transformed;
    impl->base = std::make_shared<const QuantileModel>(base);
    impl->tau = std::move(tau);
    impl->support_lo = impl->tau.forward(base.support_low());
    impl->support_hi = std::isinf(base.support_high())
                           ? kInf
                           : impl->tau.forward(base.support_high());
    return QuantileModel(impl);
}

// ---------------------------------------------------------------------------
// Transforms

Transform Transform::identity() {
    Transform t;
    t.forward = [](double x) { return x; };
    t.inverse = [](double x) { return x; };
    t.derivative = [](double) { return 1.0; };
    t.name = "identity";
    return t;
}

Transform Transform::power(double b) {
    if (!(b > 0.0)) throw std::invalid_argument("Transform::power: b must be positive");
    Transform t;
    t.forward = [b](double x) { return std::pow(x, 1.0 / b); };
    t.inverse = [b](double x) { return std::pow(x, b); };
    t.derivative = [b](double x) { return std::pow(x, 1.0 / b - 1.0) / b; };
    t.name = "power[" + format_param(b) + "]";
    return t;
}

Transform Transform::log_transform() {
    Transform t;
    t.forward = [](double x) { return std::log(x); };
    t.inverse = [](double x) { return std::exp(x); };
    t.derivative = [](double x) { return 1.0 / x; };
    t.name = "log";
    return t;
}

Transform Transform::affine(double c, double d) {
    if (!(c > 0.0)) throw std::invalid_argument("Transform::affine: c must be positive");
    Transform t;
    t.forward = [c, d](double x) { return c * x + d; };
    t.inverse = [c, d](double x) { return (x - d) / c; };
    t.derivative = [c](double) { return c; };
    t.name = "affine[" + format_param(c) + "," + format_param(d) + "]";
    return t;
}

// ---------------------------------------------------------------------------
// Evaluation

double QuantileModel::quantile(double u) const {
    check_level(u);
    const Impl& m = *impl_;
    switch (m.family) {
        case Family::uniform:
            return u;
        case Family::exponential:
            return -std::log1p(-u) / m.params[0];
        case Family::govindarajulu_special:
            return u * (2.0 - u);
        case Family::govindarajulu: {
            const double theta = m.params[0], sigma = m.params[1], beta = m.params[2];
            return theta + sigma * ((beta + 1.0) * std::pow(u, beta) -
                                    beta * std::pow(u, beta + 1.0));
        }
        case Family::power_pareto: {
            const double c = m.params[0], l1 = m.params[1], l2 = m.params[2];
            return c * std::pow(u, l1) * std::pow(1.0 - u, -l2);
        }
        case Family::rescaled_beta: {
            const double r = m.params[0], c = m.params[1];
            return r * (1.0 - std::pow(1.0 - u, 1.0 / c));
        }
        case Family::linear_hazard: {
            const double a = m.params[0], b = m.params[1];
            return std::log((a + b * u) / (a * (1.0 - u))) / (a + b);
        }
        case Family::pareto1:
            return std::pow(1.0 - u, -1.0 / m.params[0]);
        case Family::cox_ph: {
            const double theta = m.params[0];
            const double v = 1.0 - std::pow(1.0 - u, 1.0 / theta);
            // v can round to 0 or 1 at extreme u; nudge inside the domain.
            const double eps = std::numeric_limits<double>::min();
            return m.base->quantile(std::min(std::max(v, eps), 1.0 - 1e-16));
        }
        case Family::transformed:
            return m.tau.forward(m.base->quantile(u));
    }
    throw std::logic_error("unreachable family");
}

double QuantileModel::quantile_density(double u) const {
    check_level(u);
    const Impl& m = *impl_;
    switch (m.family) {
        case Family::uniform:
            return 1.0;
        case Family::exponential:
            return 1.0 / (m.params[0] * (1.0 - u));
        case Family::govindarajulu_special:
            return 2.0 * (1.0 - u);
        case Family::govindarajulu: {
            const double sigma = m.params[1], beta = m.params[2];
            return sigma * beta * (beta + 1.0) * std::pow(u, beta - 1.0) * (1.0 - u);
        }
        case Family::power_pareto: {
            const double c = m.params[0], l1 = m.params[1], l2 = m.params[2];
            return c * std::pow(u, l1 - 1.0) * std::pow(1.0 - u, -l2 - 1.0) *
                   (l1 * (1.0 - u) + l2 * u);
        }
        case Family::rescaled_beta: {
            const double r = m.params[0], c = m.params[1];
            return (r / c) * std::pow(1.0 - u, 1.0 / c - 1.0);
        }
        case Family::linear_hazard: {
            const double a = m.params[0], b = m.params[1];
            return 1.0 / ((a + b * u) * (1.0 - u));
        }
        case Family::pareto1: {
            const double a = m.params[0];
            return std::pow(1.0 - u, -1.0 / a - 1.0) / a;
        }
        case Family::cox_ph: {
            const double theta = m.params[0];
            const double w = std::pow(1.0 - u, 1.0 / theta);
            const double v = 1.0 - w;
            const double eps = std::numeric_limits<double>::min();
            const double qb =
                m.base->quantile_density(std::min(std::max(v, eps), 1.0 - 1e-16));
            return qb * w / (theta * (1.0 - u));
        }
        case Family::transformed: {
            if (m.tau.derivative) {
                const double x = m.base->quantile(u);
                return m.tau.derivative(x) * m.base->quantile_density(u);
            }
            // Central difference on tau(Q(u)), shrinking h near the ends.
            double h = 1e-6;
            h = std::min({h, u / 2.0, (1.0 - u) / 2.0});
            const double hi = m.tau.forward(m.base->quantile(u + h));
            const double lo = m.tau.forward(m.base->quantile(u - h));
            return (hi - lo) / (2.0 * h);
        }
    }
    throw std::logic_error("unreachable family");
}

namespace {

// Bracketing bisection for F(x) on families without a closed-form CDF.
// Q is strictly increasing, so the level bracket [0,1] always holds once the
// support boundaries are handled.
double cdf_by_bisection(const QuantileModel& model, double x) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (model.quantile(mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    if (!(hi - lo < 1e-9))
        throw ConvergenceError("cdf bisection failed to converge");
    return 0.5 * (lo + hi);
}

// Power-Pareto level equation solved for log survival: find ls = log(1-v)
// with C (1-s)^{l1} s^{-l2} = x, s = exp(ls). Bisection in log space keeps
// full relative precision however deep the tail, which a linear-space
// bracket cannot (spacing near v = 1 is ~1e-16).
double power_pareto_log_survival(double c, double l1, double l2, double x) {
    auto excess = [&](double ls) {
        const double s = std::exp(ls);
        return std::log(c) + l1 * std::log1p(-s) - l2 * ls - std::log(x);
    };
    double lo = -700.0, hi = std::log1p(-1e-16);
    if (excess(lo) <= 0.0) return lo;  // x beyond the representable tail
    if (excess(hi) >= 0.0) return hi;  // x at the very bottom of the support
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double QuantileModel::cdf(double x) const {
    const Impl& m = *impl_;
    if (x <= m.support_lo) return 0.0;
    if (x >= m.support_hi) return 1.0;
    switch (m.family) {
        case Family::uniform:
            return x;
        case Family::exponential:
            return -std::expm1(-m.params[0] * x);
        case Family::govindarajulu_special:
            return 1.0 - std::sqrt(1.0 - x);
        case Family::rescaled_beta:
            return 1.0 - std::pow(1.0 - x / m.params[0], m.params[1]);
        case Family::linear_hazard: {
            const double a = m.params[0], b = m.params[1];
            const double e = a * std::exp((a + b) * x);
            return (e - a) / (e + b);
        }
        case Family::pareto1:
            return 1.0 - std::pow(x, -m.params[0]);
        case Family::cox_ph:
            return 1.0 - std::pow(m.base->survival(x), m.params[0]);
        case Family::transformed:
            return m.base->cdf(m.tau.inverse(x));
        case Family::power_pareto:
            return -std::expm1(power_pareto_log_survival(m.params[0], m.params[1],
                                                         m.params[2], x));
        case Family::govindarajulu:
            return cdf_by_bisection(*this, x);
    }
    throw std::logic_error("unreachable family");
}

double QuantileModel::survival(double x) const {
    const Impl& m = *impl_;
    if (x <= m.support_lo) return 1.0;
    if (x >= m.support_hi) return 0.0;
    switch (m.family) {
        case Family::exponential:
            return std::exp(-m.params[0] * x);
        case Family::govindarajulu_special:
            return std::sqrt(1.0 - x);
        case Family::rescaled_beta:
            return std::pow(1.0 - x / m.params[0], m.params[1]);
        case Family::linear_hazard: {
            const double a = m.params[0], b = m.params[1];
            const double e = a * std::exp((a + b) * x);
            return (a + b) / (e + b);
        }
        case Family::pareto1:
            return std::pow(x, -m.params[0]);
        case Family::cox_ph:
            return std::pow(m.base->survival(x), m.params[0]);
        case Family::transformed:
            return m.base->survival(m.tau.inverse(x));
        case Family::power_pareto:
            return std::exp(power_pareto_log_survival(m.params[0], m.params[1],
                                                      m.params[2], x));
        default:
            return 1.0 - cdf(x);
    }
}

double QuantileModel::cumulative_hazard(double x) const {
    const Impl& m = *impl_;
    if (x <= m.support_lo) return 0.0;
    if (x >= m.support_hi) return std::numeric_limits<double>::infinity();
    switch (m.family) {
        case Family::uniform:
            return -std::log1p(-x);
        case Family::exponential:
            return m.params[0] * x;
        case Family::govindarajulu_special:
            return -0.5 * std::log1p(-x);
        case Family::rescaled_beta:
            return -m.params[1] * std::log1p(-x / m.params[0]);
        case Family::linear_hazard: {
            const double a = m.params[0], b = m.params[1];
            const double ex = (a + b) * x;
            if (ex > 600.0) // exp overflows; -log S ~ (a+b)x + log(a/(a+b))
                return ex + std::log(a / (a + b));
            return std::log(a * std::exp(ex) + b) - std::log(a + b);
        }
        case Family::pareto1:
            return m.params[0] * std::log(x);
        case Family::cox_ph:
            return m.params[0] * m.base->cumulative_hazard(x);
        case Family::transformed:
            return m.base->cumulative_hazard(m.tau.inverse(x));
        case Family::power_pareto:
            return -power_pareto_log_survival(m.params[0], m.params[1], m.params[2], x);
        case Family::govindarajulu: {
            // Bisection-based survival; floored at the resolution of the
            // level bracket for x strictly inside the (bounded) support.
            double s = 1.0 - cdf_by_bisection(*this, x);
            if (s <= 0.0) s = 1e-16;
            return -std::log(s);
        }
    }
    throw std::logic_error("unreachable family");
}

namespace {

// Proportional-hazard normal form: families whose cumulative hazard is
// `rate` times a common base hazard (keyed by kind and range), closed under
// cox_ph wrapping.
struct HazardForm {
    enum class Kind { none, unit_range_beta, exponential, pareto } kind = Kind::none;
    double rate = 0.0;
    double range = 0.0; // rescaled-beta upper endpoint
};

HazardForm hazard_form(const QuantileModel& m) {
    switch (m.family()) {
        case Family::uniform:
            return {HazardForm::Kind::unit_range_beta, 1.0, 1.0};
        case Family::govindarajulu_special:
            return {HazardForm::Kind::unit_range_beta, 0.5, 1.0};
        case Family::rescaled_beta:
            return {HazardForm::Kind::unit_range_beta, m.params()[1], m.params()[0]};
        case Family::exponential:
            return {HazardForm::Kind::exponential, m.params()[0], 0.0};
        case Family::pareto1:
            return {HazardForm::Kind::pareto, m.params()[0], 0.0};
        case Family::cox_ph: {
            HazardForm base = hazard_form(*m.base());
            base.rate *= m.params()[0];
            return base;
        }
        default:
            return {};
    }
}

} // namespace

double compose_cumulative_hazard(const QuantileModel& x, const QuantileModel& y,
                                 double p) {
    check_level(p);
    if (x.same_distribution_as(y)) return -std::log1p(-p);
    const HazardForm fx = hazard_form(x);
    const HazardForm fy = hazard_form(y);
    if (fx.kind != HazardForm::Kind::none && fx.kind == fy.kind &&
        fx.range == fy.range)
        return -(fy.rate / fx.rate) * std::log1p(-p);
    return y.cumulative_hazard(x.quantile(p));
}

bool QuantileModel::same_distribution_as(const QuantileModel& other) const {
    if (impl_ == other.impl_) return true;
    if (impl_->family != other.impl_->family) return false;
    if (impl_->params != other.impl_->params) return false;
    if (impl_->family == Family::transformed &&
        impl_->tau.name != other.impl_->tau.name)
        return false;
    const QuantileModel* b1 = base();
    const QuantileModel* b2 = other.base();
    if ((b1 == nullptr) != (b2 == nullptr)) return false;
    return b1 == nullptr || b1->same_distribution_as(*b2);
}

namespace {

// Power-law tail index kappa with S(x) ~ x^(-kappa); infinity for bounded
// supports and exponential-type tails. The mean is finite iff kappa > 1.
double tail_order(const QuantileModel& model) {
    switch (model.family()) {
        case Family::pareto1:
            return model.params()[0];
        case Family::power_pareto:
            return 1.0 / model.params()[2];
        case Family::cox_ph:
            return model.params()[0] * tail_order(*model.base());
        case Family::transformed: {
            const std::string& name = model.transform()->name;
            const double base_order = tail_order(*model.base());
            if (name.rfind("power[", 0) == 0) {
                // x -> x^(1/b) turns S(x) ~ x^-k into S(x) ~ x^-(k b).
                const double b = std::stod(name.substr(6));
                return base_order * b;
            }
            if (name == "log") return kInf; // log of power tail is exponential
            return base_order; // affine / identity / unknown
        }
        default:
            return kInf;
    }
}

} // namespace

bool QuantileModel::mean_is_finite() const { return tail_order(*this) > 1.0; }

std::string QuantileModel::describe() const {
    const Impl& m = *impl_;
    switch (m.family) {
        case Family::uniform:
            return "uniform";
        case Family::exponential:
            return "exponential(lambda=" + format_param(m.params[0]) + ")";
        case Family::govindarajulu_special:
            return "govindarajulu_special";
        case Family::govindarajulu:
            return "govindarajulu(theta=" + format_param(m.params[0]) +
                   ",sigma=" + format_param(m.params[1]) +
                   ",beta=" + format_param(m.params[2]) + ")";
        case Family::power_pareto:
            return "powerpareto(c=" + format_param(m.params[0]) +
                   ",l1=" + format_param(m.params[1]) +
                   ",l2=" + format_param(m.params[2]) + ")";
        case Family::rescaled_beta:
            return "rescaledbeta(r=" + format_param(m.params[0]) +
                   ",c=" + format_param(m.params[1]) + ")";
        case Family::linear_hazard:
            return "linearhazard(a=" + format_param(m.params[0]) +
                   ",b=" + format_param(m.params[1]) + ")";
        case Family::pareto1:
            return "pareto1(a=" + format_param(m.params[0]) + ")";
        case Family::cox_ph:
            return "coxph(theta=" + format_param(m.params[0]) + ", base=" +
                   m.base->describe() + ")";
        case Family::transformed:
            return "transformed(" + m.tau.name + ", base=" + m.base->describe() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Derived quantile functionals

double compose_q3(const QuantileModel& x, const QuantileModel& y, double p) {
    check_level(p);
    return y.cdf(x.quantile(p));
}

double compose_survival(const QuantileModel& x, const QuantileModel& y, double p) {
    return std::exp(-compose_cumulative_hazard(x, y, p));
}

double hazard_quantile(const QuantileModel& model, double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::domain_error("hazard_quantile: u must lie in [0,1)");
    const double q = model.quantile_density(u == 0.0 ? 1e-12 : u);
    if (!(q > 0.0))
        throw SingularityError("hazard_quantile: quantile density vanishes");
    return 1.0 / (q * (1.0 - u));
}

double mean_residual_quantile(const QuantileModel& model, double u,
                              const QuadratureConfig& cfg) {
    check_level(u);
    if (!model.mean_is_finite())
        throw DivergenceError("mean_residual_quantile: tail integral diverges");
    const double qu = model.quantile(u);
    auto integrand = [&](double p) { return model.quantile(p) - qu; };
    IntegrationResult r =
        integrate_adaptive(integrand, u, 1.0 - cfg.endpoint_clip, cfg);
    return r.value / (1.0 - u);
}

double quantile_mean(const QuantileModel& model, const QuadratureConfig& cfg) {
    if (!model.mean_is_finite())
        throw DivergenceError("quantile_mean: mean integral diverges");
    auto integrand = [&](double p) {
        return (1.0 - p) * model.quantile_density(p);
    };
    return integrate_unit(integrand, cfg).value;
}

QuantileModel transform_model(const QuantileModel& model, const Transform& tau) {
    return QuantileModel::transformed(model, tau);
}

SampleBatch sample(const QuantileModel& model, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample: n must be at least 1");
    Xoshiro256pp gen(seed);
    std::vector<double> draws(n);
    for (double& d : draws) d = model.quantile(gen.uniform_open01());
    return SampleBatch(std::move(draws));
}

// ---------------------------------------------------------------------------
// Model-spec parsing: family:key=value,key=value

namespace {

double parse_number(const std::string& spec, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("model spec '" + spec + "': bad numeric value '" + text + "'");
    }
}

} // namespace

QuantileModel parse_model_spec(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    std::string family = spec.substr(0, colon);
    for (char& c : family) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    std::vector<std::pair<std::string, double>> kv;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::istringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw ParseError("model spec '" + spec + "': expected key=value, got '" +
                                 item + "'");
            kv.emplace_back(item.substr(0, eq), parse_number(spec, item.substr(eq + 1)));
        }
    }

    auto get = [&](std::initializer_list<const char*> names) {
        for (const char* n : names)
            for (const auto& [k, v] : kv)
                if (k == n) return v;
        throw ParseError("model spec '" + spec + "': missing parameter '" +
                         std::string(*names.begin()) + "'");
    };

    try {
        if (family == "uniform") return QuantileModel::uniform();
        if (family == "exponential" || family == "exp")
            return QuantileModel::exponential(get({"lambda", "rate"}));
        if (family == "govindarajulu_special" || family == "govspecial")
            return QuantileModel::govindarajulu_special();
        if (family == "govindarajulu")
            return QuantileModel::govindarajulu(get({"theta"}), get({"sigma"}),
                                                get({"beta"}));
        if (family == "powerpareto" || family == "power_pareto")
            return QuantileModel::power_pareto(get({"c"}), get({"l1", "lambda1"}),
                                               get({"l2", "lambda2"}));
        if (family == "rescaledbeta" || family == "rescaled_beta")
            return QuantileModel::rescaled_beta(get({"r"}), get({"c"}));
        if (family == "linearhazard" || family == "linear_hazard")
            return QuantileModel::linear_hazard(get({"a"}), get({"b"}));
        if (family == "pareto1" || family == "paretoi")
            return QuantileModel::pareto1(get({"a"}));
    } catch (const std::invalid_argument& e) {
        throw ParseError("model spec '" + spec + "': " + e.what());
    }
    throw ParseError("model spec '" + spec + "': unknown family '" + family + "'");
}

} // namespace qfcri
