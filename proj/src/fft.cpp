#include "monosamp/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace monosamp::fft {
namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// Branch-free complex multiply (std::complex operator* may route through the
// NaN-correct __muldc3 helper, which is far too slow for the butterfly loop).
inline cplx cmul(const cplx& x, const cplx& y) {
    return {x.real() * y.real() - x.imag() * y.imag(),
            x.real() * y.imag() + x.imag() * y.real()};
}

void radix2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // twiddles for the full size; stage m reuses every (n/m)-th entry
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = sign * two_pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(ang), std::sin(ang)};
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = cmul(a[i + k + len / 2], w[k * stride]);
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// Bluestein chirp-z: x_j e^{-i pi j^2/n} convolved with the conjugate chirp.
// j^2 is reduced mod 2n before the angle is formed so large indices keep
// full precision.
void bluestein(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;

    std::vector<cplx> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        const unsigned long long jsq = (static_cast<unsigned long long>(j) * j) %
                                       (2ull * static_cast<unsigned long long>(n));
        const double ang = sign * M_PI * static_cast<double>(jsq) / static_cast<double>(n);
        chirp[j] = {std::cos(ang), std::sin(ang)};
    }

    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;

    std::vector<cplx> p(m, cplx{0.0, 0.0});
    std::vector<cplx> q(m, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) p[j] = cmul(a[j], chirp[j]);
    for (std::size_t j = 0; j < n; ++j) {
        q[j] = std::conj(chirp[j]);
        if (j != 0) q[m - j] = std::conj(chirp[j]);
    }

    radix2(p, false);
    radix2(q, false);
    for (std::size_t j = 0; j < m; ++j) p[j] = cmul(p[j], q[j]);
    radix2(p, true);

    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) a[j] = cmul(p[j], chirp[j]) * scale;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void transform(std::vector<cplx>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0) throw std::invalid_argument("fft: empty input");
    if (n == 1) return;
    if (is_power_of_two(n))
        radix2(data, inverse);
    else
        bluestein(data, inverse);
}

}  // namespace monosamp::fft
