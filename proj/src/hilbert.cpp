#include "monosamp/hilbert.hpp"

#include <cmath>
#include <stdexcept>

#include "monosamp/fft.hpp"

namespace monosamp::hilbert {
namespace {

constexpr double sqrt_two_pi = 2.5066282746310005024157652848110;

inline cplx cmul(const cplx& x, const cplx& y) {
    return {x.real() * y.real() - x.imag() * y.imag(),
            x.real() * y.imag() + x.imag() * y.real()};
}

void require_real(const SampledSignal& sig, const char* who) {
    if (!sig.is_real())
        throw std::invalid_argument(std::string(who) +
                                    ": input must be real (use analytic_signal for complex data)");
}

}  // namespace

Spectrum unitary_ft(const SampledSignal& sig) {
    const std::size_t n = sig.size();
    std::vector<cplx> buf = sig.values();
    fft::transform(buf, false);

    const double dxi = 2.0 * M_PI / (static_cast<double>(n) * sig.step());
    const std::size_t k0 = n / 2;

    Spectrum out;
    out.step = dxi;
    out.origin = -static_cast<double>(k0) * dxi;
    out.values.resize(n);

    // S(xi_k) = (step/sqrt(2 pi)) e^{-i xi_k t0} G_m,  xi_k = m*dxi, m = k-k0.
    // The phase is formed from the symmetric index m so the matching factor in
    // inverse_ft cancels it bin by bin.
    const double scale = sig.step() / sqrt_two_pi;
    const double base = dxi * sig.origin();
    for (std::size_t k = 0; k < n; ++k) {
        const auto m = static_cast<double>(static_cast<long>(k) - static_cast<long>(k0));
        const std::size_t r = (k + n - k0) % n;
        out.values[k] = scale * cmul(std::polar(1.0, -m * base), buf[r]);
    }
    return out;
}

SampledSignal inverse_ft(const Spectrum& spec, double time_origin) {
    spec.validate();
    const std::size_t n = spec.size();
    if (n < 2) throw std::invalid_argument("inverse_ft: need at least 2 bins");

    const double dxi = spec.step;
    const double dt = 2.0 * M_PI / (static_cast<double>(n) * dxi);
    const std::size_t k0 = n / 2;
    const double xi_center = spec.origin + static_cast<double>(k0) * dxi;

    // g(t_j) = (dxi/sqrt(2 pi)) e^{i xi_c t_j} sum_m S e^{i m dxi t0} e^{2 pi i m j/n}
    const double base = dxi * time_origin;
    std::vector<cplx> buf(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto m = static_cast<double>(static_cast<long>(k) - static_cast<long>(k0));
        const std::size_t r = (k + n - k0) % n;
        buf[r] = cmul(spec.values[k], std::polar(1.0, m * base));
    }
    fft::transform(buf, true);

    const double scale = dxi / sqrt_two_pi;
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double tj = time_origin + static_cast<double>(j) * dt;
        cplx v = buf[j] * scale;
        if (xi_center != 0.0) v = cmul(v, std::polar(1.0, xi_center * tj));
        out[j] = v;
    }
    return SampledSignal::from_complex(time_origin, dt, std::move(out));
}

SampledSignal inverse_ft(const Spectrum& spec) {
    const std::size_t n = spec.size();
    const double dt = 2.0 * M_PI / (static_cast<double>(n) * spec.step);
    return inverse_ft(spec, -static_cast<double>(n / 2) * dt);
}

SampledSignal hilbert_transform(const SampledSignal& sig) {
    require_real(sig, "hilbert_transform");
    const std::size_t n = sig.size();

    std::vector<cplx> buf = sig.values();
    fft::transform(buf, false);

    // multiplier -i sgn(xi); sgn(0) = 0 kills DC, and the unpaired Nyquist
    // bin (even n) is zeroed to keep the output real
    buf[0] = 0.0;
    const std::size_t half = n / 2;
    if (n % 2 == 0) buf[half] = 0.0;
    for (std::size_t r = 1; r < (n + 1) / 2; ++r)
        buf[r] = cplx{buf[r].imag(), -buf[r].real()};
    for (std::size_t r = half + 1; r < n; ++r)
        buf[r] = cplx{-buf[r].imag(), buf[r].real()};

    fft::transform(buf, true);

    const double scale = 1.0 / static_cast<double>(n);
    std::vector<double> out(n);
    double residue = 0.0;
    double magnitude = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = buf[j].real() * scale;
        residue = std::max(residue, std::abs(buf[j].imag()) * scale);
        magnitude = std::max(magnitude, std::abs(out[j]));
    }
    if (residue > 1e-12 * magnitude)
        throw std::logic_error("hilbert_transform: imaginary residue exceeded 1e-12");
    return SampledSignal::from_real(sig.origin(), sig.step(), std::move(out));
}

SampledSignal analytic_signal(const SampledSignal& sig) {
    require_real(sig, "analytic_signal");
    const std::size_t n = sig.size();

    std::vector<cplx> buf = sig.values();
    fft::transform(buf, false);

    // keep DC and Nyquist, double positive bins, zero negative bins
    const std::size_t half = n / 2;
    for (std::size_t r = 1; r < (n + 1) / 2; ++r) buf[r] *= 2.0;
    for (std::size_t r = half + 1; r < n; ++r) buf[r] = 0.0;

    fft::transform(buf, true);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : buf) v *= scale;
    return SampledSignal::from_complex(sig.origin(), sig.step(), std::move(buf));
}

CanonicalPair canonical_modulation(const SampledSignal& sig) {
    const SampledSignal a = analytic_signal(sig);
    const std::size_t n = a.size();
    constexpr double amp_floor = 1e-8;

    std::vector<double> amplitude(n);
    std::vector<double> phase(n);

    double prev_arg = 0.0;
    double prev_phase = 0.0;
    bool seeded = false;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx v = a.values()[j];
        amplitude[j] = std::abs(v);
        if (amplitude[j] < amp_floor) {
            // argument undefined at (near-)zeros: hold the last good phase
            phase[j] = prev_phase;
            continue;
        }
        const double arg = std::atan2(v.imag(), v.real());
        if (!seeded) {
            phase[j] = arg;
            seeded = true;
        } else {
            double delta = arg - prev_arg;
            delta -= 2.0 * M_PI * std::round(delta / (2.0 * M_PI));
            phase[j] = prev_phase + delta;
        }
        prev_arg = arg;
        prev_phase = phase[j];
    }

    return CanonicalPair{SampledSignal::from_real(sig.origin(), sig.step(), std::move(amplitude)),
                         SampledSignal::from_real(sig.origin(), sig.step(), std::move(phase))};
}

}  // namespace monosamp::hilbert
