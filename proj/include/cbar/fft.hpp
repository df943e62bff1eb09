#pragma once

#include <cstddef>
#include <vector>

#include "cbar/cpoint.hpp"

namespace cbar {

// In-place radix-2 FFT, forward sign convention X_k = sum_j x_j e^{-2pi i jk/n}.
// n must be a power of two.
void fft_pow2(std::vector<complex>& a, bool inverse = false);

std::size_t next_pow2(std::size_t n);

// Evaluate a polynomial on the full uniform ring {rho e^{2pi i j/n} : j=0..n-1}
// for power-of-two n.  Coefficients are folded modulo n (exact since e^{2pi i
// jk/n} depends on k mod n only) so the cost is O(deg + n log n) instead of
// O(deg * n).
std::vector<complex> eval_on_ring(const std::vector<complex>& coeffs, double rho, std::size_t n);

}  // namespace cbar
