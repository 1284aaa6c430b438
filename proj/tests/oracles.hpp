#pragma once

// Test-side reference computations that share no code with the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

struct GammaPoint {
    double re, im;
    double gamma_re, gamma_im;
};

// Γ(z) from a 30-digit multiprecision evaluation, frozen.
inline const std::vector<GammaPoint>& gamma_table()
{
    static const std::vector<GammaPoint> t = {
        {1.0, 2.0, 0.15190400267003614, 0.019804880161854982},
        {2.0, 2.0, 0.11229424234632617, 0.32361288550192726},
        {0.5, 0.0, 1.772453850905516, 0.0},
        {-4.5, 3.0, -6.3291548223932557e-6, 2.1771258578877145e-5},
        {-0.3, 0.1, -3.9661541880528315, -0.80731948512002497},
        {3.3, -7.0, -0.0051753395368011594, 0.0091066359775268386},
        {10.0, -5.0, 47216.41207195225, 91467.537666754996},
        {15.0, 10.0, -2356316636.6755082, 2585461360.1978087},
        {-2.5, 0.0, -0.94530872048294188, 0.0},
        {0.25, -4.0, 0.0013373549165621421, -0.0030295384751891951},
    };
    return t;
}

// Γ((2-i)/2)Γ((2+i)/2)/π², frozen from the same multiprecision run.
inline constexpr double kCanonicalConjugatePair = 0.06915874462562239;

// Zonal spherical function on GL(2) by the midpoint rule in the rotation
// angle, averaged over both components of O(2). For m = k·g the Iwasawa
// diagonal is a1 = |first row|, a2 = |det m| / a1; ρ = (1/2, -1/2).
inline Complex gl2_spherical(Complex g1, Complex g2, const double g[2][2], int nodes = 2048, double rho_sign = -1.0)
{
    const Complex I(0.0, 1.0);
    const double det = std::abs(g[0][0] * g[1][1] - g[0][1] * g[1][0]);
    Complex sum = 0.0;
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int q = 0; q < nodes; ++q) {
            const double th = 2.0 * std::numbers::pi * (q + 0.5) / nodes;
            const double c = std::cos(th), s = std::sin(th);
            // first row of k: (c, -s) for rotations, (c, s) for reflections
            const double k0 = c, k1 = reflect ? s : -s;
            const double r0 = k0 * g[0][0] + k1 * g[1][0];
            const double r1 = k0 * g[0][1] + k1 * g[1][1];
            const double a1 = std::hypot(r0, r1);
            const double a2 = det / a1;
            sum += std::exp((I * g1 + rho_sign * 0.5) * std::log(a1) + (I * g2 - rho_sign * 0.5) * std::log(a2));
        }
    return sum / (2.0 * nodes);
}

// (2c)^w Γ(w) for real w > 0 by the integral 2∫₀^∞ y^{2w-1}e^{-y²/2c}dy with
// composite Simpson on y = e^t; used only as a coarse cross-check.
inline Complex gl1_simpson(Complex w2, double c, int n = 200000)
{
    const double lo = -40.0, hi = 0.5 * std::log(2.0 * c * 200.0);
    const double h = (hi - lo) / n;
    Complex sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double t = lo + k * h;
        const double wgt = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        sum += wgt * 2.0 * std::exp(w2 * t - std::exp(2.0 * t) / (2.0 * c));
    }
    return sum * h / 3.0;
}

}  // namespace oracle
