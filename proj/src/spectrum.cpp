#include "monosamp/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace monosamp::spectrum {
namespace {

constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

}  // namespace

double cascade_filter(const BlaschkeParameter& a, double xi) {
    if (!std::isfinite(xi)) throw std::domain_error("cascade_filter: xi must be finite");
    // xi >= 0 lands in [n, n+1); xi < 0 lands in (-(n+1), -n]; both give
    // n = floor(|xi|).
    const double n = std::floor(std::abs(xi));
    return std::pow(a.value(), n);
}

double one_sided_filter(const BlaschkeParameter& a, double xi, Side side) {
    if (!std::isfinite(xi)) throw std::domain_error("one_sided_filter: xi must be finite");
    if (side == Side::plus) return xi > 0.0 ? cascade_filter(a, xi) : 0.0;
    return xi < 0.0 ? cascade_filter(a, xi) : 0.0;
}

cplx ft_one_sided_plus(const BlaschkeParameter& a, double xi) {
    if (!std::isfinite(xi)) throw std::domain_error("ft_one_sided_plus: xi must be finite");
    // (1 - e^{-i xi})/(i xi) = e^{-i xi/2} sinc(xi/2) covers xi = 0 smoothly.
    const cplx half = std::polar(1.0, -0.5 * xi);
    const cplx window = half * sinc(0.5 * xi);
    const cplx geo = 1.0 / (1.0 - a.value() * std::polar(1.0, -xi));
    return geo * window / sqrt_two_pi;
}

cplx ft_one_sided_minus(const BlaschkeParameter& a, double xi) {
    // H_a^-(.) = H_a^+(-.) and H_a^+ is real, so the transform reflects and
    // conjugates to the same value.
    return std::conj(ft_one_sided_plus(a, xi));
}

double sinc_a_spectrum(const BlaschkeParameter& a, double xi) {
    return std::sqrt(M_PI / 2.0) * (1.0 + a.value()) * cascade_filter(a, xi);
}

double spectral_shift_residual(const Spectrum& spec, const BlaschkeParameter& a, int nmax) {
    spec.validate();
    if (nmax < 1) throw std::invalid_argument("spectral_shift_residual: nmax must be >= 1");

    const double m_real = 1.0 / spec.step;
    const auto m = static_cast<long>(std::llround(m_real));
    if (m < 1 || std::abs(static_cast<double>(m) * spec.step - 1.0) > 1e-9)
        throw std::invalid_argument(
            "spectral_shift_residual: frequency step must divide 1 so integer shifts stay "
            "on-grid");

    std::vector<double> apow(static_cast<std::size_t>(nmax) + 1, 1.0);
    for (int n = 1; n <= nmax; ++n) apow[n] = apow[n - 1] * a.value();

    const auto count = static_cast<long>(spec.size());
    double worst = 0.0;
    for (long i = 0; i < count; ++i) {
        const double xi = spec.xi(static_cast<std::size_t>(i));
        if (std::abs(xi) < 0.5 * spec.step) continue;  // the xi = 0 point
        const long dir = xi > 0.0 ? 1 : -1;
        for (int n = 1; n <= nmax; ++n) {
            const long j = i + dir * static_cast<long>(n) * m;
            if (j < 0 || j >= count) break;
            const double r = std::abs(spec.values[static_cast<std::size_t>(j)] -
                                      apow[n] * spec.values[static_cast<std::size_t>(i)]);
            if (r > worst) worst = r;
        }
    }
    return worst;
}

}  // namespace monosamp::spectrum
