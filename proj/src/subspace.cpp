#include "monosamp/subspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "monosamp/hilbert.hpp"
#include "monosamp/spectrum.hpp"

namespace monosamp {

namespace {

void check_sequences(const std::vector<double>& x, const std::vector<double>& y,
                     const char* who) {
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(who) + ": sequences must have equal length");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite entry");
    for (double v : y)
        if (!std::isfinite(v)) throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

}  // namespace

void CoefficientPair::validate() const { check_sequences(r, s, "CoefficientPair"); }
void SampleSet::validate() const { check_sequences(rho, hrho, "SampleSet"); }

namespace subspace {
namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

void require_real(const SampledSignal& f, const char* who) {
    if (!f.is_real()) throw std::invalid_argument(std::string(who) + ": input must be real");
}

// sum_k c1_k sinc_a(t - 2k pi) + c2_k cosinc_a(t - 2k pi).
//
// Both kernels factor into a 2 pi-periodic part and 1/(t - 2k pi):
//   sinc_a(t - 2k pi)   = p_a(t) sin t / (t - 2k pi)
//   cosinc_a(t - 2k pi) = (1+a)/(1-a) p_a(t) (1 - cos t) / (t - 2k pi)
// so the transcendentals are evaluated once per grid point, not once per
// shift.  Points within singularity_eps of a shift center fall back to the
// kernel's Taylor branch.
class ShiftSum {
public:
    ShiftSum(const BlaschkeParameter& a, long kmin, const std::vector<double>& c1,
             const std::vector<double>& c2)
        : a_(a), kmin_(kmin), c1_(c1), c2_(c2), kscale_((1.0 + a.value()) / (1.0 - a.value())) {
        centers_.resize(c1.size());
        for (std::size_t i = 0; i < c1.size(); ++i)
            centers_[i] = two_pi * static_cast<double>(kmin + static_cast<long>(i));
    }

    double operator()(double t) const {
        const double p = kernels::poisson_kernel(a_, t);
        const double s = std::sin(t);
        const double sh = std::sin(0.5 * t);
        const double one_minus_cos = 2.0 * sh * sh;
        const double num1 = p * s;
        const double num2 = kscale_ * p * one_minus_cos;

        double acc = 0.0;
        for (std::size_t i = 0; i < centers_.size(); ++i) {
            const double tau = t - centers_[i];
            if (std::abs(tau) < kernels::singularity_eps) {
                acc += c1_[i] * kernels::sinc_a(a_, tau) + c2_[i] * kernels::cosinc_a(a_, tau);
            } else {
                acc += (c1_[i] * num1 + c2_[i] * num2) / tau;
            }
        }
        return acc;
    }

private:
    BlaschkeParameter a_;
    long kmin_;
    const std::vector<double>& c1_;
    const std::vector<double>& c2_;
    double kscale_;
    std::vector<double> centers_;
};

SampledSignal sample_shift_sum(const BlaschkeParameter& a, long kmin,
                               const std::vector<double>& c1, const std::vector<double>& c2,
                               const Grid& grid) {
    const ShiftSum sum(a, kmin, c1, c2);
    std::vector<double> out(grid.count);
    for (std::size_t j = 0; j < grid.count; ++j) out[j] = sum(grid.point(j));
    return SampledSignal::from_real(grid, std::move(out));
}

}  // namespace

double eval_synthesis(const BlaschkeParameter& a, const CoefficientPair& coeffs, double t) {
    coeffs.validate();
    return ShiftSum(a, coeffs.kmin, coeffs.r, coeffs.s)(t);
}

SampledSignal synthesize(const BlaschkeParameter& a, const CoefficientPair& coeffs,
                         const Grid& grid) {
    coeffs.validate();
    return sample_shift_sum(a, coeffs.kmin, coeffs.r, coeffs.s, grid);
}

SampleSet exact_samples(const BlaschkeParameter& a, const CoefficientPair& coeffs, long kmin,
                        long kmax) {
    coeffs.validate();
    if (kmax < kmin) throw std::invalid_argument("exact_samples: kmax < kmin");

    SampleSet out;
    out.kmin = kmin;
    out.rho.reserve(static_cast<std::size_t>(kmax - kmin + 1));
    out.hrho.reserve(static_cast<std::size_t>(kmax - kmin + 1));
    for (long n = kmin; n <= kmax; ++n) {
        double rho = 0.0;
        double hrho = 0.0;
        // H sinc_a = cosinc_a and H cosinc_a = -sinc_a (anti-involution)
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const long k = coeffs.kmin + static_cast<long>(i);
            const double tau = two_pi * static_cast<double>(n - k);
            const double sc = kernels::sinc_a(a, tau);
            const double cc = kernels::cosinc_a(a, tau);
            rho += coeffs.r[i] * sc + coeffs.s[i] * cc;
            hrho += coeffs.r[i] * cc - coeffs.s[i] * sc;
        }
        out.rho.push_back(rho);
        out.hrho.push_back(hrho);
    }
    return out;
}

SampledSignal reconstruct_from_samples(const BlaschkeParameter& a, const SampleSet& samples,
                                       const Grid& grid) {
    samples.validate();
    const double pref = (1.0 - a.value()) / (1.0 + a.value());
    std::vector<double> c1(samples.size());
    std::vector<double> c2(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        c1[i] = pref * samples.rho[i];
        c2[i] = -pref * samples.hrho[i];
    }
    return sample_shift_sum(a, samples.kmin, c1, c2, grid);
}

SampleInnerProducts sample_inner_products(const BlaschkeParameter& a, const SampledSignal& f,
                                          long kmin, long kmax, double warn_tol) {
    require_real(f, "sample_inner_products");
    if (kmax < kmin) throw std::invalid_argument("sample_inner_products: kmax < kmin");

    const std::size_t n = f.size();
    const double t_first = f.t(0);
    const double t_last = f.t(n - 1);
    const double kscale = (1.0 + a.value()) / (1.0 - a.value());

    SampleInnerProducts out;
    out.kmin = kmin;
    for (long k = kmin; k <= kmax; ++k) {
        const double center = two_pi * static_cast<double>(k);
        double ip_sinc = 0.0;
        double ip_cosinc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;  // trapezoid
            const double tau = f.t(j) - center;
            const double fv = f.values()[j].real() * w;
            ip_sinc += fv * kernels::sinc_a(a, tau);
            ip_cosinc += fv * kernels::cosinc_a(a, tau);
        }
        out.sinc_ip.push_back(ip_sinc * f.step());
        out.cosinc_ip.push_back(ip_cosinc * f.step());

        // kernels decay like 1/t, products like 1/t^2; report the tail mass
        const double dist = std::min(center - t_first, t_last - center);
        const double bound = dist > 0.0 ? 4.0 * kscale * kscale * (2.0 / dist)
                                        : std::numeric_limits<double>::infinity();
        out.tail_bound.push_back(bound);
        if (bound > warn_tol) out.window_warning = true;
    }
    return out;
}

double membership_residual(const BlaschkeParameter& a, const SampledSignal& f) {
    require_real(f, "membership_residual");
    const std::size_t n = f.size();

    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j)
        u[j] = f.values()[j].real() * kernels::cos_theta(a, f.t(j));
    const SampledSignal h =
        hilbert::hilbert_transform(SampledSignal::from_real(f.origin(), f.step(), std::move(u)));

    const auto [lo, hi] = interior_range(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        const double fv = f.values()[j].real();
        const double d = h.values()[j].real() - fv * kernels::sin_theta(a, f.t(j));
        num += d * d;
        den += fv * fv;
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-12);
}

double membership_spectral(const BlaschkeParameter& a, const SampledSignal& f, int nmax) {
    return spectrum::spectral_shift_residual(hilbert::unitary_ft(f), a, nmax);
}

double linear_phase_residual(const SampledSignal& f, double gamma) {
    require_real(f, "linear_phase_residual");
    if (!(gamma > 0.0)) throw std::invalid_argument("linear_phase_residual: gamma must be > 0");
    const std::size_t n = f.size();

    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j)
        u[j] = f.values()[j].real() * std::cos(gamma * f.t(j));
    const SampledSignal h =
        hilbert::hilbert_transform(SampledSignal::from_real(f.origin(), f.step(), std::move(u)));

    const auto [lo, hi] = interior_range(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        const double fv = f.values()[j].real();
        const double d = h.values()[j].real() - fv * std::sin(gamma * f.t(j));
        num += d * d;
        den += fv * fv;
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-12);
}

std::pair<double, double> hilbert_in_subspace_check(const BlaschkeParameter& a,
                                                    const SampledSignal& f) {
    const double first = membership_residual(a, f);
    const double second = membership_residual(a, hilbert::hilbert_transform(f));
    return {first, second};
}

}  // namespace subspace
}  // namespace monosamp
