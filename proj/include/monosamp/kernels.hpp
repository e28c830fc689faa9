#pragma once

#include <complex>

namespace monosamp {

// Blaschke zero a, restricted to the open interval (-1, 1).
class BlaschkeParameter {
public:
    explicit BlaschkeParameter(double a);
    double value() const { return a_; }

private:
    double a_;
};

namespace kernels {

// All kernels below are pure functions of (a, t).  They reject non-finite t.
//
//   poisson_kernel   p_a(t)      = (1 - a^2) / (1 - 2a cos t + a^2)
//   phase_theta      theta_a(t)  = t + 2 atan2(a sin t, 1 - a cos t),
//                                  the unwrapped boundary argument of B_a,
//                                  with theta_a' = p_a > 0 and theta_a(0) = 0
//   sin_theta        sin theta_a(t) = p_a(t) sin t
//   cos_theta        cos theta_a(t) = ((1+a^2) cos t - 2a) / (1 - 2a cos t + a^2)
//   sinc_a           sin theta_a(t) / t = p_a(t) sinc(t),    sinc_a(0) = (1+a)/(1-a)
//   cosinc_a         (1 - cos theta_a(t)) / t
//                      = (1+a)/(1-a) p_a(t) (1 - cos t)/t,   cosinc_a(0) = 0

double poisson_kernel(const BlaschkeParameter& a, double t);
double phase_theta(const BlaschkeParameter& a, double t);
double sin_theta(const BlaschkeParameter& a, double t);
double cos_theta(const BlaschkeParameter& a, double t);
double sinc_a(const BlaschkeParameter& a, double t);
double cosinc_a(const BlaschkeParameter& a, double t);

// Moebius map (z - a) / (1 - a z); unimodular on |z| = 1.
// Throws std::domain_error at the pole z = 1/a.
std::complex<double> blaschke(const BlaschkeParameter& a, std::complex<double> z);

// k-th Fourier coefficient of e^{i theta_a(t)}:
//   c_0 = -a,  c_k = (1 - a^2) a^{k-1} for k >= 1,  c_k = 0 for k < 0.
double fourier_coeff_exp_phase(const BlaschkeParameter& a, long k);

// Threshold below which sinc_a / cosinc_a switch to their Taylor expansions
// around the removable singularity at t = 0.
inline constexpr double singularity_eps = 1e-6;

}  // namespace kernels
}  // namespace monosamp
