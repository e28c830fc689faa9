#include "monosamp/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace monosamp {

BlaschkeParameter::BlaschkeParameter(double a) : a_(a) {
    if (!std::isfinite(a) || a <= -1.0 || a >= 1.0)
        throw std::domain_error("BlaschkeParameter: a must lie in (-1, 1)");
}

namespace kernels {
namespace {

void check_point(double t) {
    if (!std::isfinite(t)) throw std::domain_error("kernels: evaluation point must be finite");
}

// 1 - 2a cos t + a^2 without cancellation: all addends share a sign once the
// identity is split by sign(a).
double poisson_denominator(double a, double t) {
    const double s = std::sin(0.5 * t);
    if (a >= 0.0) {
        const double m = 1.0 - a;
        return m * m + 4.0 * a * s * s;  // (1-a)^2 + 4a sin^2(t/2)
    }
    const double p = 1.0 + a;
    const double c = std::cos(0.5 * t);
    return p * p - 4.0 * a * c * c;  // (1+a)^2 + 4|a| cos^2(t/2)
}

}  // namespace

double poisson_kernel(const BlaschkeParameter& a, double t) {
    check_point(t);
    const double av = a.value();
    return (1.0 - av * av) / poisson_denominator(av, t);
}

double phase_theta(const BlaschkeParameter& a, double t) {
    check_point(t);
    const double av = a.value();
    // 1 - a cos t > 0 for |a| < 1, so the atan2 branch never jumps.
    return t + 2.0 * std::atan2(av * std::sin(t), 1.0 - av * std::cos(t));
}

double sin_theta(const BlaschkeParameter& a, double t) {
    check_point(t);
    return poisson_kernel(a, t) * std::sin(t);
}

double cos_theta(const BlaschkeParameter& a, double t) {
    check_point(t);
    const double av = a.value();
    return ((1.0 + av * av) * std::cos(t) - 2.0 * av) / poisson_denominator(av, t);
}

double sinc_a(const BlaschkeParameter& a, double t) {
    check_point(t);
    const double p = poisson_kernel(a, t);
    if (std::abs(t) < singularity_eps) {
        const double t2 = t * t;
        return p * (1.0 - t2 / 6.0 + t2 * t2 / 120.0);
    }
    return p * std::sin(t) / t;
}

double cosinc_a(const BlaschkeParameter& a, double t) {
    check_point(t);
    const double av = a.value();
    const double scale = (1.0 + av) / (1.0 - av) * poisson_kernel(a, t);
    if (std::abs(t) < singularity_eps) {
        const double t2 = t * t;
        return scale * (t / 2.0 - t * t2 / 24.0 + t2 * t2 * t / 720.0);
    }
    // (1 - cos t)/t = 2 sin^2(t/2)/t, exact near the zeros of 1 - cos.
    const double s = std::sin(0.5 * t);
    return scale * 2.0 * s * s / t;
}

std::complex<double> blaschke(const BlaschkeParameter& a, std::complex<double> z) {
    const double av = a.value();
    const std::complex<double> denom = 1.0 - av * z;
    if (denom == std::complex<double>(0.0, 0.0))
        throw std::domain_error("blaschke: z = 1/a is the pole of B_a");
    return (z - av) / denom;
}

double fourier_coeff_exp_phase(const BlaschkeParameter& a, long k) {
    const double av = a.value();
    if (k < 0) return 0.0;
    if (k == 0) return -av;
    if (k == 1) return 1.0 - av * av;
    return (1.0 - av * av) * std::pow(av, static_cast<double>(k - 1));
}

}  // namespace kernels
}  // namespace monosamp
