#pragma once

#include <utility>
#include <vector>

#include "monosamp/kernels.hpp"
#include "monosamp/signal.hpp"

namespace monosamp {

// Coordinates of a Bedrosian-subspace element over the shift basis
// { sinc_a(. - 2k pi), H sinc_a(. - 2k pi) }:  rho = sum r_k sinc_a(. - 2k pi)
// + sum s_k cosinc_a(. - 2k pi), k = kmin .. kmin + len - 1.
struct CoefficientPair {
    long kmin = 0;
    std::vector<double> r;
    std::vector<double> s;

    std::size_t size() const { return r.size(); }
    void validate() const;  // equal lengths, finite entries
};

// Samples (rho(2k pi), H rho(2k pi)) over a contiguous index range.
struct SampleSet {
    long kmin = 0;
    std::vector<double> rho;
    std::vector<double> hrho;

    std::size_t size() const { return rho.size(); }
    void validate() const;
};

// Raw quadrature inner products <f, sinc_a(. - 2k pi)> and
// <f, cosinc_a(. - 2k pi)> with the per-shift truncation tail bound
// 4 ((1+a)/(1-a))^2 (2/T_k), T_k the distance from 2k pi to the nearer
// window edge.  For f in S_a these equal pi f(2k pi) and -pi Hf(2k pi).
struct SampleInnerProducts {
    long kmin = 0;
    std::vector<double> sinc_ip;
    std::vector<double> cosinc_ip;
    std::vector<double> tail_bound;
    bool window_warning = false;  // some tail bound exceeded the warn threshold
};

namespace subspace {

// Pointwise finite synthesis rho(t); exact up to rounding (no truncation).
double eval_synthesis(const BlaschkeParameter& a, const CoefficientPair& coeffs, double t);

SampledSignal synthesize(const BlaschkeParameter& a, const CoefficientPair& coeffs,
                         const Grid& grid);

// Analytic samples of the synthesized element and of its Hilbert transform:
//   rho(2n pi)  = sum_k r_k sinc_a(2(n-k) pi)   + sum_k s_k cosinc_a(2(n-k) pi)
//   Hrho(2n pi) = sum_k r_k cosinc_a(2(n-k) pi) - sum_k s_k sinc_a(2(n-k) pi)
// using H sinc_a = cosinc_a and H cosinc_a = -sinc_a.
SampleSet exact_samples(const BlaschkeParameter& a, const CoefficientPair& coeffs,
                        long kmin, long kmax);

// Sampling reconstruction
//   rho(t) = (1-a)/(1+a) [ sum rho(2k pi) sinc_a(t-2k pi)
//                          - sum Hrho(2k pi) cosinc_a(t-2k pi) ].
SampledSignal reconstruct_from_samples(const BlaschkeParameter& a, const SampleSet& samples,
                                       const Grid& grid);

SampleInnerProducts sample_inner_products(const BlaschkeParameter& a, const SampledSignal& f,
                                          long kmin, long kmax, double warn_tol = 0.1);

// || H(f cos theta_a) - f sin theta_a ||_2 / max(||f||_2, eps) over the
// interior of the grid (5% guard bands); near 0 iff f is in S_a at grid
// resolution.
double membership_residual(const BlaschkeParameter& a, const SampledSignal& f);

// unitary_ft followed by spectral_shift_residual; requires the dual grid's
// frequency step to divide 1.
double membership_spectral(const BlaschkeParameter& a, const SampledSignal& f, int nmax);

// || H(f cos(gamma .)) - f sin(gamma .) ||_2 / ||f||_2 (interior); near 0 iff
// f is bandlimited to [-gamma, gamma] at grid resolution.
double linear_phase_residual(const SampledSignal& f, double gamma);

// (membership_residual(a, f), membership_residual(a, Hf)).
std::pair<double, double> hilbert_in_subspace_check(const BlaschkeParameter& a,
                                                    const SampledSignal& f);

}  // namespace subspace
}  // namespace monosamp
