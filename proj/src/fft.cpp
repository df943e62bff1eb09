#include "cbar/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cbar {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_pow2(std::vector<complex>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 1.0 : -1.0) * two_pi / static_cast<double>(len);
        const complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            complex w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const complex u = a[i + k];
                const complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<complex> eval_on_ring(const std::vector<complex>& coeffs, double rho, std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("ring size must be a power of two");
    std::vector<complex> folded(n, complex{0.0, 0.0});
    double rk = 1.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        folded[k & (n - 1)] += coeffs[k] * rk;
        rk *= rho;
    }
    // P(rho e^{i phi_j}) = sum_m folded_m e^{+2pi i jm/n}: inverse transform without the 1/n.
    fft_pow2(folded, true);
    for (auto& x : folded) x *= static_cast<double>(n);
    return folded;
}

}  // namespace cbar
