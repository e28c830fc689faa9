#pragma once

#include "monosamp/signal.hpp"

namespace monosamp::hilbert {

// Discrete approximations of the unitary Fourier pair
//   g^(xi) = (1/sqrt(2 pi)) integral g(t) e^{-i xi t} dt
//   g(t)   = (1/sqrt(2 pi)) integral g^(xi) e^{+i xi t} dxi
// realized as FFTs with grid-phase correction.  The spectrum lands on the
// canonical dual grid: frequency step 2 pi / (count * step), symmetric around
// zero (origin = -floor(count/2) * step).
//
// All transforms allocate their own scratch; no state is shared between calls.

struct CanonicalPair {
    SampledSignal amplitude;  // modulus of the analytic signal, >= 0
    SampledSignal phase;      // unwrapped argument
};

Spectrum unitary_ft(const SampledSignal& sig);

// Inverse of unitary_ft onto the canonical symmetric time grid
// (origin -floor(n/2)*dt, dt = 2 pi / (n * spec.step)).  The overload with an
// explicit time_origin places the output window elsewhere; unitary_ft followed
// by inverse_ft with the source origin is the identity up to rounding.
SampledSignal inverse_ft(const Spectrum& spec);
SampledSignal inverse_ft(const Spectrum& spec, double time_origin);

// Frequency-domain Hilbert transform: multiplier -i sgn(xi) with sgn(0) = 0,
// hence the DC bin (and the Nyquist bin for even lengths) is annihilated.
// Input must be real; output is real.
SampledSignal hilbert_transform(const SampledSignal& sig);

// f + i Hf; the spectrum of the result vanishes on negative frequencies.
SampledSignal analytic_signal(const SampledSignal& sig);

// Canonical amplitude/phase of a real signal: amplitude = |A(f)|, phase =
// unwrapped arg A(f).  Where the amplitude drops below 1e-8 the phase is
// carried forward from the previous sample.
CanonicalPair canonical_modulation(const SampledSignal& sig);

}  // namespace monosamp::hilbert
