#pragma once

#include <complex>

#include "monosamp/kernels.hpp"
#include "monosamp/signal.hpp"

namespace monosamp::spectrum {

enum class Side { plus, minus };

// Symmetric cascade filter H_a(xi) = sum_n a^n chi_{I_n}(xi) with
// I_n = (-(n+1), -n] u [n, n+1).  Both branches reduce to a^floor(|xi|),
// which honors the half-open boundary convention on either axis.
double cascade_filter(const BlaschkeParameter& a, double xi);

// H_a restricted to the open half-line (0 at xi = 0 on both sides).
double one_sided_filter(const BlaschkeParameter& a, double xi, Side side);

// Closed-form Fourier transforms of the one-sided filters:
//   (H_a^+)^(xi) = (1/sqrt(2 pi)) (1/(1 - a e^{-i xi})) (1 - e^{-i xi})/(i xi)
//   (H_a^-)^(xi) = conj((H_a^+)^(xi)) = (H_a^+)^(-xi)
// The removable singularity at xi = 0 is filled with the analytic limit.
cplx ft_one_sided_plus(const BlaschkeParameter& a, double xi);
cplx ft_one_sided_minus(const BlaschkeParameter& a, double xi);

// Spectrum of sinc_a: sqrt(pi/2) (1+a) H_a(xi).
double sinc_a_spectrum(const BlaschkeParameter& a, double xi);

// Max over on-grid xi != 0 and 1 <= n <= nmax of
// |spec(xi + sgn(xi) n) - a^n spec(xi)|, skipping shifts that leave the grid.
// Requires the frequency step to divide 1 (integer shifts stay on-grid);
// throws std::invalid_argument otherwise.
double spectral_shift_residual(const Spectrum& spec, const BlaschkeParameter& a, int nmax);

}  // namespace monosamp::spectrum
