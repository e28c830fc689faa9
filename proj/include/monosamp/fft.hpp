#pragma once

#include <vector>

#include "monosamp/signal.hpp"

namespace monosamp::fft {

// In-place complex DFT, any length >= 1:
//   forward:  X_m = sum_j x_j e^{-2 pi i m j / N}
//   inverse:  X_j = sum_m x_m e^{+2 pi i m j / N}   (unnormalized)
// Power-of-two lengths use iterative radix-2 Cooley-Tukey; everything else
// goes through Bluestein's chirp-z reduction to a padded power-of-two size.
void transform(std::vector<cplx>& data, bool inverse);

bool is_power_of_two(std::size_t n);

}  // namespace monosamp::fft
