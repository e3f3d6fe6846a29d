#pragma once

#include <vector>

#include "hardy/common.hpp"

namespace hardy {

// In-place iterative radix-2 FFT.  data.size() must be a power of two.
// inverse = true applies the conjugate transform and divides by n.
void fft_radix2(std::vector<Complex>& data, bool inverse);

bool is_power_of_two(std::size_t n);

}  // namespace hardy
